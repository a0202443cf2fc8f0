#include "exlogic/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace exlogic {

namespace {

void require_negation(const FiniteLattice& lattice, const char* what) {
  if (!lattice.has_negation())
    throw LatticeError("negation-total", std::string(what) + " needs a lattice with negation");
}

int nn(const FiniteLattice& lattice, int a) { return lattice.neg(lattice.neg(a)); }

// a & (c|e) & ~~f <= (a&c) | (a&e) | f, checked directly.
bool holds_filter_separation_axiom(const FiniteLattice& L, std::string* note) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
          int lhs = L.meet(L.meet(a, L.join(c, e)), nn(L, f));
          int rhs = L.join(L.join(L.meet(a, c), L.meet(a, e)), f);
          if (!L.leq(lhs, rhs)) {
            if (note) {
              std::ostringstream out;
              out << "lattice fails a & (c | e) & ~~f <= (a & c) | (a & e) | f at a=" << L.name(a)
                  << ", c=" << L.name(c) << ", e=" << L.name(e) << ", f=" << L.name(f);
              *note = out.str();
            }
            return false;
          }
        }
  return true;
}

// ~(a & ((b&c)|(b&d))) & a <= (b & (c|d)) | ~(b & (c|d)), checked directly.
bool holds_guarded_em_axiom(const FiniteLattice& L, std::string* note) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int guard = L.meet(b, L.join(c, d));
          int lhs = L.meet(L.neg(L.meet(a, L.join(L.meet(b, c), L.meet(b, d)))), a);
          int rhs = L.join(guard, L.neg(guard));
          if (!L.leq(lhs, rhs)) {
            if (note) {
              std::ostringstream out;
              out << "lattice fails ~(a & ((b & c) | (b & d))) & a <= "
                     "(b & (c | d)) | ~(b & (c | d)) at a="
                  << L.name(a) << ", b=" << L.name(b) << ", c=" << L.name(c)
                  << ", d=" << L.name(d);
              *note = out.str();
            }
            return false;
          }
        }
  return true;
}

// ~~p & ~~q <= ~~(p & q), checked directly.
bool holds_regular_meet_axiom(const FiniteLattice& L, std::string* note) {
  const int n = L.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int lhs = L.meet(nn(L, p), nn(L, q));
      if (!L.leq(lhs, nn(L, L.meet(p, q)))) {
        if (note) {
          std::ostringstream out;
          out << "lattice fails ~~p & ~~q <= ~~(p & q) at p=" << L.name(p) << ", q=" << L.name(q);
          *note = out.str();
        }
        return false;
      }
    }
  return true;
}

}  // namespace

Congruence resim_congruence(const FiniteLattice& lattice) {
  require_negation(lattice, "the negation-kernel congruence");
  Congruence c;
  const int n = lattice.size();
  c.class_of.assign(n, -1);
  std::map<int, int> class_by_neg;
  for (int a = 0; a < n; ++a) {
    auto [it, inserted] =
        class_by_neg.emplace(lattice.neg(a), static_cast<int>(c.classes.size()));
    if (inserted) c.classes.emplace_back();
    c.class_of[a] = it->second;
    c.classes[it->second].push_back(a);
  }

  c.compatible = true;
  for (const auto& members : c.classes) {
    for (size_t i = 0; c.compatible && i + 1 < members.size(); ++i) {
      const int a = members[i];
      for (size_t j = i + 1; c.compatible && j < members.size(); ++j) {
        const int b = members[j];
        for (int x = 0; x < n; ++x) {
          const char* op = nullptr;
          int ra = -1, rb = -1;
          if (c.class_of[lattice.meet(x, a)] != c.class_of[lattice.meet(x, b)]) {
            op = "&";
            ra = lattice.meet(x, a);
            rb = lattice.meet(x, b);
          } else if (c.class_of[lattice.join(x, a)] != c.class_of[lattice.join(x, b)]) {
            op = "|";
            ra = lattice.join(x, a);
            rb = lattice.join(x, b);
          }
          if (op) {
            std::ostringstream out;
            out << lattice.name(a) << " ~ " << lattice.name(b) << " but " << lattice.name(x)
                << " " << op << " " << lattice.name(a) << " = " << lattice.name(ra) << " and "
                << lattice.name(x) << " " << op << " " << lattice.name(b) << " = "
                << lattice.name(rb) << " fall in different classes";
            c.violation = out.str();
            c.compatible = false;
            break;
          }
        }
      }
    }
  }
  return c;
}

FiniteLattice quotient(const FiniteLattice& lattice, const Congruence& congruence) {
  if (!congruence.compatible)
    throw LatticeError("congruence", congruence.violation.empty()
                                         ? "congruence is marked incompatible"
                                         : congruence.violation);
  const int n = lattice.size();
  const int k = congruence.class_count();
  if (static_cast<int>(congruence.class_of.size()) != n)
    throw LatticeError("congruence", "class map does not cover the lattice");

  std::vector<int> neg_class(k, -1);
  if (lattice.has_negation()) {
    for (int cls = 0; cls < k; ++cls) {
      for (int member : congruence.classes[cls]) {
        const int image = congruence.class_of[lattice.neg(member)];
        if (neg_class[cls] == -1) {
          neg_class[cls] = image;
        } else if (neg_class[cls] != image) {
          throw LatticeError("congruence", "negation is not constant on the class of " +
                                               lattice.name(congruence.classes[cls][0]));
        }
      }
    }
  } else {
    neg_class.clear();
  }

  std::vector<char> leq(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool le = false;
      for (int a : congruence.classes[i]) {
        for (int b : congruence.classes[j])
          if (lattice.leq(a, b)) {
            le = true;
            break;
          }
        if (le) break;
      }
      leq[static_cast<size_t>(i) * k + j] = le ? 1 : 0;
    }

  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) names[i] = lattice.name(congruence.classes[i][0]) + "*";
  return FiniteLattice::from_leq(std::move(names), std::move(leq), std::move(neg_class),
                                 {{"construction", "quotient"}});
}

std::vector<int> join_primes(const FiniteLattice& lattice) {
  std::vector<int> primes;
  const int n = lattice.size();
  for (int m = 0; m < n; ++m) {
    if (m == lattice.bottom()) continue;
    bool prime = true;
    for (int a = 0; a < n && prime; ++a)
      for (int b = 0; b < n; ++b)
        if (lattice.leq(m, lattice.join(a, b)) && !lattice.leq(m, a) && !lattice.leq(m, b)) {
          prime = false;
          break;
        }
    if (prime) primes.push_back(m);
  }
  return primes;
}

int DownSetAlgebra::index_of_mask(uint64_t mask) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), mask);
  if (it == carrier.end() || *it != mask) return -1;
  return static_cast<int>(it - carrier.begin());
}

int DownSetAlgebra::generator_index(int element) const {
  return index_of_mask(generator[element]);
}

DownSetAlgebra heyting_algebra(const FiniteLattice& lattice) {
  DownSetAlgebra d;
  d.primes = join_primes(lattice);
  const int p_count = static_cast<int>(d.primes.size());
  if (p_count > 62)
    throw LatticeError("resource", "down-set algebra supports at most 62 join-primes, got " +
                                       std::to_string(p_count));

  std::vector<uint64_t> up_of_prime(p_count, 0);
  for (int t = 0; t < p_count; ++t)
    for (int s = 0; s < p_count; ++s)
      if (lattice.leq(d.primes[t], d.primes[s])) up_of_prime[t] |= uint64_t{1} << s;
  const uint64_t full = p_count == 0 ? 0 : (uint64_t{1} << p_count) - 1;
  auto down_neg = [&](uint64_t mask) {
    uint64_t up = 0;
    for (int t = 0; t < p_count; ++t)
      if (mask >> t & 1) up |= up_of_prime[t];
    return full & ~up;
  };

  d.generator.assign(lattice.size(), 0);
  for (int a = 0; a < lattice.size(); ++a)
    for (int t = 0; t < p_count; ++t)
      if (lattice.leq(d.primes[t], a)) d.generator[a] |= uint64_t{1} << t;

  std::set<uint64_t> seen(d.generator.begin(), d.generator.end());
  std::vector<uint64_t> pending(seen.begin(), seen.end());
  std::vector<uint64_t> done;
  auto add = [&](uint64_t mask) {
    if (seen.insert(mask).second) {
      pending.push_back(mask);
      if (seen.size() > kDownSetCarrierLimit)
        throw LatticeError("resource", "down-set closure exceeds " +
                                           std::to_string(kDownSetCarrierLimit) + " members");
    }
  };
  while (!pending.empty()) {
    const uint64_t x = pending.back();
    pending.pop_back();
    add(down_neg(x));
    for (uint64_t y : done) {
      add(x & y);
      add(x | y);
    }
    done.push_back(x);
  }

  d.carrier.assign(seen.begin(), seen.end());
  const int m = static_cast<int>(d.carrier.size());
  std::vector<char> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[static_cast<size_t>(i) * m + j] = (d.carrier[i] & ~d.carrier[j]) == 0 ? 1 : 0;
  std::vector<int> neg(m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    neg[i] = d.index_of_mask(down_neg(d.carrier[i]));
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int t = 0; t < p_count; ++t)
      if (d.carrier[i] >> t & 1) {
        if (!first) out << ",";
        out << lattice.name(d.primes[t]);
        first = false;
      }
    out << "}";
    names[i] = out.str();
  }
  d.algebra = FiniteLattice::from_leq(std::move(names), std::move(leq), std::move(neg),
                                      {{"construction", "downset-algebra"}});
  return d;
}

EmbeddingResult ex_embedding(const FiniteLattice& lattice) {
  require_negation(lattice, "the product embedding");
  EmbeddingResult result;
  auto& d = result.diagnostics;

  result.congruence = resim_congruence(lattice);
  d.congruence_compatible = result.congruence.compatible;
  if (!d.congruence_compatible) {
    d.notes.push_back("negation-kernel relation is not a congruence: " +
                      result.congruence.violation);
  } else {
    try {
      result.ortho_part = quotient(lattice, result.congruence);
      d.quotient_built = true;
    } catch (const LatticeError& error) {
      d.notes.push_back(std::string("quotient failed: ") + error.what());
    }
  }

  result.heyting_part = heyting_algebra(lattice);
  d.downset_is_heyting = classify(result.heyting_part.algebra).is_heyting;
  if (!d.downset_is_heyting) d.notes.push_back("down-set algebra is not a Heyting lattice");

  if (d.quotient_built) {
    d.quotient_is_ortholattice = classify(*result.ortho_part).is_ortholattice;
    if (!d.quotient_is_ortholattice) d.notes.push_back("quotient is not an ortholattice");

    result.product_part = product(*result.ortho_part, result.heyting_part.algebra);
    result.map.assign(lattice.size(), -1);
    for (int a = 0; a < lattice.size(); ++a)
      result.map[a] =
          product_index(result.heyting_part.algebra, result.congruence.class_of[a],
                        result.heyting_part.generator_index(a));
    const HomReport hom = check_homomorphism(result.map, lattice, *result.product_part);
    d.homomorphism = hom.is_homomorphism;
    if (!d.homomorphism) d.notes.push_back("map is not a homomorphism: " + hom.first_violation);
    d.injective = hom.injective;
    if (!d.injective) {
      for (int i = 0; i < lattice.size() && d.notes.size() < 64; ++i)
        for (int j = i + 1; j < lattice.size(); ++j)
          if (result.map[i] == result.map[j])
            d.notes.push_back("map identifies e(" + lattice.name(i) + ") = e(" +
                              lattice.name(j) + ")");
    }
    d.order_reflecting = hom.order_reflecting;
    if (!d.order_reflecting) d.notes.push_back("map does not reflect order");
  }
  return result;
}

InterpolantResult interpolant(const FiniteLattice& lattice, int a, int b) {
  InterpolantResult r;
  const int n = lattice.size();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    r.note = "element index out of range";
    return r;
  }
  require_negation(lattice, "interpolation");
  if (lattice.neg(a) != lattice.neg(b)) {
    r.note = "~" + lattice.name(a) + " = " + lattice.name(lattice.neg(a)) + " differs from ~" +
             lattice.name(b) + " = " + lattice.name(lattice.neg(b));
    return r;
  }
  if (!holds_regular_meet_axiom(lattice, &r.note)) return r;
  r.preconditions_ok = true;
  const int c = lattice.meet(a, b);
  r.interpolant = c;
  r.verified = lattice.leq(c, a) && lattice.leq(c, b) && lattice.leq(a, nn(lattice, c)) &&
               lattice.leq(b, nn(lattice, c));
  if (!r.verified) r.note = "interpolant properties fail for " + lattice.name(c);
  return r;
}

PrimeFilterResult separating_prime_filter(const FiniteLattice& lattice, int filter_gen,
                                          int ideal_gen, int a) {
  PrimeFilterResult r;
  const int n = lattice.size();
  if (filter_gen < 0 || filter_gen >= n || ideal_gen < 0 || ideal_gen >= n || a < 0 || a >= n) {
    r.note = "element index out of range";
    return r;
  }
  require_negation(lattice, "prime filter separation");
  if (filter_gen == lattice.bottom()) {
    r.note = "filter generated by 0 is not proper";
    return r;
  }
  if (ideal_gen == lattice.top()) {
    r.note = "ideal generated by 1 is not proper";
    return r;
  }
  if (lattice.leq(filter_gen, ideal_gen)) {
    r.note = "filter meets ideal: " + lattice.name(filter_gen) + " <= " + lattice.name(ideal_gen);
    return r;
  }
  if (!lattice.leq(a, ideal_gen)) {
    r.note = lattice.name(a) + " is not in the ideal of " + lattice.name(ideal_gen);
    return r;
  }
  if (!lattice.leq(filter_gen, nn(lattice, a))) {
    r.note = "~~" + lattice.name(a) + " is not in the filter of " + lattice.name(filter_gen);
    return r;
  }
  if (!holds_filter_separation_axiom(lattice, &r.note)) return r;
  r.preconditions_ok = true;
  for (int m : join_primes(lattice))
    if (lattice.leq(m, filter_gen) && !lattice.leq(m, ideal_gen)) {
      r.prime = m;
      break;
    }
  if (!r.prime) r.note = "no join-prime below " + lattice.name(filter_gen) + " avoids the ideal";
  return r;
}

PrimeFilterResult extend_prime_filter(const FiniteLattice& lattice, int prime_gen, int a) {
  PrimeFilterResult r;
  const int n = lattice.size();
  if (prime_gen < 0 || prime_gen >= n || a < 0 || a >= n) {
    r.note = "element index out of range";
    return r;
  }
  require_negation(lattice, "prime filter extension");
  const std::vector<int> primes = join_primes(lattice);
  if (std::find(primes.begin(), primes.end(), prime_gen) == primes.end()) {
    r.note = lattice.name(prime_gen) + " is not join-prime";
    return r;
  }
  if (lattice.leq(prime_gen, lattice.neg(a))) {
    r.note = "~" + lattice.name(a) + " already lies in the filter of " + lattice.name(prime_gen);
    return r;
  }
  if (!holds_guarded_em_axiom(lattice, &r.note)) return r;
  r.preconditions_ok = true;
  for (int q : primes)
    if (lattice.leq(q, prime_gen) && lattice.leq(q, a)) {
      r.prime = q;
      break;
    }
  if (!r.prime)
    r.note = "no join-prime below " + lattice.name(prime_gen) + " lies below " + lattice.name(a);
  return r;
}

AddTopResult add_top(const FiniteLattice& lattice) {
  require_negation(lattice, "top adjunction");
  const int n = lattice.size();
  const int old_top = lattice.top();

  std::vector<std::string> names(n + 1);
  std::set<std::string> used;
  for (int i = 0; i < n; ++i) {
    names[i] = lattice.name(i);
    used.insert(names[i]);
  }
  std::string renamed = names[old_top] + "*";
  while (used.count(renamed)) renamed += "*";
  names[n] = names[old_top];
  names[old_top] = renamed;

  std::vector<char> leq(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * (n + 1) + j] = lattice.leq(i, j) ? 1 : 0;
  for (int i = 0; i <= n; ++i) leq[static_cast<size_t>(i) * (n + 1) + n] = 1;

  std::vector<int> neg(n + 1);
  for (int i = 0; i < n; ++i) neg[i] = lattice.neg(i);
  neg[lattice.bottom()] = n;
  neg[n] = lattice.bottom();

  AddTopResult result;
  result.lattice = FiniteLattice::from_leq(std::move(names), std::move(leq), std::move(neg),
                                           {{"construction", "add-top"}});
  result.collapse.resize(n + 1);
  for (int i = 0; i < n; ++i) result.collapse[i] = i;
  result.collapse[n] = old_top;
  result.old_top = old_top;
  result.new_top = n;
  return result;
}

}  // namespace exlogic
