#include "exlogic/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace exlogic {

LatticeError::LatticeError(std::string law_, std::string detail_)
    : std::runtime_error(law_ + ": " + detail_), law(std::move(law_)), detail(std::move(detail_)) {}

std::optional<int> FiniteLattice::index_of(std::string_view element_name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == element_name) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool is_cover = true;
      for (int k = 0; k < n_ && is_cover; ++k)
        if (k != a && k != b && leq(a, k) && leq(k, b)) is_cover = false;
      if (is_cover) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> names, std::vector<char> leq,
                                      std::vector<int> negation,
                                      std::map<std::string, std::string> metadata) {
  FiniteLattice L;
  L.n_ = static_cast<int>(names.size());
  const int n = L.n_;
  if (n == 0) throw LatticeError("bounds", "empty element list");
  if (leq.size() != static_cast<size_t>(n) * n)
    throw std::logic_error("from_leq: order matrix has wrong size");
  L.names_ = std::move(names);
  L.leq_ = std::move(leq);
  L.metadata_ = std::move(metadata);

  {
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      if (L.names_[i].empty()) throw LatticeError("name", "empty element name");
      if (!seen.emplace(L.names_[i], i).second)
        throw LatticeError("name", "duplicate element name '" + L.names_[i] + "'");
    }
  }

  auto le = [&](int a, int b) { return L.leq_[a * n + b] != 0; };
  for (int a = 0; a < n; ++a)
    if (!le(a, a)) throw LatticeError("poset", "missing reflexive pair for '" + L.names_[a] + "'");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw LatticeError("poset", "antisymmetry fails: '" + L.names_[a] + "' <= '" +
                                        L.names_[b] + "' and back");
      if (!le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c))
          throw LatticeError("poset", "transitivity fails through '" + L.names_[b] + "'");
    }

  int bot = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    bool is_bot = true, is_top = true;
    for (int b = 0; b < n; ++b) {
      if (!le(a, b)) is_bot = false;
      if (!le(b, a)) is_top = false;
    }
    if (is_bot) bot = a;
    if (is_top) top = a;
  }
  if (bot < 0) throw LatticeError("bounds", "no bottom element");
  if (top < 0) throw LatticeError("bounds", "no top element");
  L.bottom_ = bot;
  L.top_ = top;

  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        if (m < 0 || le(m, c)) m = c;
      }
      // m is the greatest lower bound only if it dominates every lower bound
      for (int c = 0; m >= 0 && c < n; ++c)
        if (le(c, a) && le(c, b) && !le(c, m)) m = -1;
      if (m < 0)
        throw LatticeError("meet", "no meet for pair ('" + L.names_[a] + "', '" +
                                       L.names_[b] + "')");
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;

      int j = -1;
      for (int c = 0; c < n; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        if (j < 0 || le(c, j)) j = c;
      }
      for (int c = 0; j >= 0 && c < n; ++c)
        if (le(a, c) && le(b, c) && !le(j, c)) j = -1;
      if (j < 0)
        throw LatticeError("join", "no join for pair ('" + L.names_[a] + "', '" +
                                       L.names_[b] + "')");
      L.join_[a * n + b] = L.join_[b * n + a] = j;
    }
  }

  if (!negation.empty()) {
    if (negation.size() != static_cast<size_t>(n))
      throw LatticeError("negation-total", "negation vector has wrong size");
    L.neg_ = std::move(negation);
    for (int a = 0; a < n; ++a)
      if (L.neg_[a] < 0 || L.neg_[a] >= n)
        throw LatticeError("negation-total", "no negation for '" + L.names_[a] + "'");
    auto nm = [&](int a) { return L.names_[a]; };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le(a, b) && !le(L.neg_[b], L.neg_[a]))
          throw LatticeError("antitonicity",
                             "antitonicity fails: " + nm(a) + " <= " + nm(b) + " but ~" +
                                 nm(b) + " = " + nm(L.neg_[b]) + " is not below ~" + nm(a) +
                                 " = " + nm(L.neg_[a]));
    for (int a = 0; a < n; ++a)
      if (L.meet_[a * n + L.neg_[a]] != bot)
        throw LatticeError("semi-complementation",
                           "semi-complementation fails (" + nm(a) + " & " + nm(L.neg_[a]) +
                               " = " + nm(L.meet_[a * n + L.neg_[a]]) + " != " + nm(bot) + ")");
    for (int a = 0; a < n; ++a)
      if (!le(a, L.neg_[L.neg_[a]]))
        throw LatticeError("double-negation-introduction",
                           "double-negation introduction fails: " + nm(a) +
                               " is not below ~~" + nm(a) + " = " + nm(L.neg_[L.neg_[a]]));
  }
  return L;
}

FiniteLattice validate(const LatticeData& data) {
  const int n = static_cast<int>(data.elements.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) {
    if (!idx.emplace(data.elements[i], i).second)
      throw LatticeError("name", "duplicate element name '" + data.elements[i] + "'");
  }
  auto resolve = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw LatticeError("name", "unknown element name '" + s + "'");
    return it->second;
  };

  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : data.order) leq[resolve(lo) * n + resolve(hi)] = 1;
  // Reflexive-transitive closure; harmless when the relation is already full.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  std::vector<int> negation;
  {
    // Determine bounds from the order before building, so ~0/~1 defaults can
    // be filled in. from_leq re-derives and re-checks them.
    int bot = -1, top = -1;
    for (int a = 0; a < n; ++a) {
      bool is_bot = true, is_top = true;
      for (int b = 0; b < n; ++b) {
        if (!leq[a * n + b]) is_bot = false;
        if (!leq[b * n + a]) is_top = false;
      }
      if (is_bot) bot = a;
      if (is_top) top = a;
    }
    if (bot < 0 || top < 0) throw LatticeError("bounds", "no bottom or top element");
    negation.assign(n, -1);
    for (const auto& [from, to] : data.negation) negation[resolve(from)] = resolve(to);
    // ~0=1 and ~1=0 are forced by the three laws; insert when left out,
    // reject contradictions.
    if (negation[bot] < 0) negation[bot] = top;
    if (negation[top] < 0) negation[top] = bot;
    if (negation[bot] != top)
      throw LatticeError("negation-total", "~" + data.elements[bot] + " must be " +
                                               data.elements[top]);
    if (negation[top] != bot)
      throw LatticeError("negation-total", "~" + data.elements[top] + " must be " +
                                               data.elements[bot]);
    for (int a = 0; a < n; ++a)
      if (negation[a] < 0)
        throw LatticeError("negation-total",
                           "negation map not total: no negation for '" + data.elements[a] + "'");
  }

  return FiniteLattice::from_leq(data.elements, std::move(leq), std::move(negation),
                                 data.metadata);
}

// ---------- classification ----------

bool LatticeClassReport::flag(std::string_view name) const {
  if (name == "fundamental") return is_fundamental;
  if (name == "ortholattice" || name == "ortho") return is_ortholattice;
  if (name == "heyting") return is_heyting;
  if (name == "ex") return is_ex;
  if (name == "nu") return holds_nu;
  if (name == "vi") return holds_vi;
  if (name == "cl") return holds_cl;
  if (name == "distributive") return is_distributive;
  if (name == "pseudocomplement") return has_pseudocomplement;
  if (name == "orthomodular") return is_orthomodular;
  if (name == "dne") return holds_dne;
  if (name == "em") return holds_em;
  if (name == "wem") return holds_wem;
  throw std::out_of_range("unknown classification flag '" + std::string(name) + "'");
}

const std::vector<std::string>& LatticeClassReport::flag_names() {
  static const std::vector<std::string> names = {
      "fundamental", "ortholattice", "heyting",          "ex",           "nu",
      "vi",          "cl",           "distributive",     "pseudocomplement",
      "orthomodular", "dne",         "em",               "wem"};
  return names;
}

namespace {

Counterexample make_witness(const FiniteLattice& L,
                            std::initializer_list<std::pair<const char*, int>> assignment,
                            int lhs, int rhs, const std::string& relation) {
  Counterexample w;
  std::ostringstream d;
  bool first = true;
  for (const auto& [letter, elem] : assignment) {
    w.assignment.emplace_back(letter, elem);
    d << (first ? "" : ", ") << letter << "=" << L.name(elem);
    first = false;
  }
  w.lhs = lhs;
  w.rhs = rhs;
  if (lhs >= 0 && rhs >= 0)
    d << ": lhs=" << L.name(lhs) << " " << relation << " rhs=" << L.name(rhs);
  else if (!relation.empty())
    d << (first ? "" : ": ") << relation;
  w.detail = d.str();
  return w;
}

}  // namespace

LatticeClassReport classify(const FiniteLattice& L) {
  if (!L.has_negation())
    throw LatticeError("negation-total", "classify requires a negation map");
  LatticeClassReport r;
  const int n = L.size();
  const int bot = L.bottom(), top = L.top();
  const int* M = L.meet_table();
  const int* J = L.join_table();
  const int* N = L.neg_table();
  auto meet = [&](int a, int b) { return M[a * n + b]; };
  auto join = [&](int a, int b) { return J[a * n + b]; };
  std::vector<int> nn(n);
  for (int a = 0; a < n; ++a) nn[a] = N[N[a]];

  // Validation already enforced the fundamental laws.
  r.is_fundamental = true;

  r.holds_dne = true;
  for (int a = 0; a < n && r.holds_dne; ++a)
    if (!L.leq(nn[a], a)) {
      r.holds_dne = false;
      r.witnesses["dne"] = make_witness(
          L, {{"a", a}}, nn[a], a, "(~~a) is not below");
    }
  r.is_ortholattice = r.is_fundamental && r.holds_dne;
  if (!r.is_ortholattice && !r.holds_dne)
    r.witnesses["ortholattice"] = r.witnesses["dne"];

  r.is_distributive = true;
  for (int a = 0; a < n && r.is_distributive; ++a)
    for (int b = 0; b < n && r.is_distributive; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = meet(a, join(b, c));
        int rhs = join(meet(a, b), meet(a, c));
        if (lhs != rhs) {
          r.is_distributive = false;
          r.witnesses["distributive"] =
              make_witness(L, {{"a", a}, {"b", b}, {"c", c}}, lhs, rhs, "!=");
          break;
        }
      }

  r.has_pseudocomplement = true;
  for (int a = 0; a < n && r.has_pseudocomplement; ++a)
    for (int b = 0; b < n; ++b)
      if (meet(a, b) == bot && !L.leq(b, N[a])) {
        r.has_pseudocomplement = false;
        r.witnesses["pseudocomplement"] = make_witness(
            L, {{"a", a}, {"b", b}}, b, N[a],
            "(b, with a & b = " + L.name(bot) + ") is not below (~a) =");
        break;
      }
  r.is_heyting = r.is_fundamental && r.is_distributive && r.has_pseudocomplement;
  if (!r.is_heyting) {
    auto it = r.witnesses.find(r.is_distributive ? "pseudocomplement" : "distributive");
    if (it != r.witnesses.end()) r.witnesses["heyting"] = it->second;
  }

  r.holds_em = true;
  for (int a = 0; a < n && r.holds_em; ++a)
    if (join(a, N[a]) != top) {
      r.holds_em = false;
      r.witnesses["em"] = make_witness(L, {{"a", a}}, join(a, N[a]), top, "(a | ~a) !=");
    }

  r.holds_wem = true;
  for (int a = 0; a < n && r.holds_wem; ++a)
    if (join(N[a], nn[a]) != top) {
      r.holds_wem = false;
      r.witnesses["wem"] = make_witness(L, {{"a", a}}, join(N[a], nn[a]), top, "(~a | ~~a) !=");
    }

  r.is_orthomodular = r.is_ortholattice;
  if (r.is_orthomodular) {
    for (int a = 0; a < n && r.is_orthomodular; ++a)
      for (int b = 0; b < n; ++b) {
        if (!L.leq(a, b)) continue;
        int rhs = join(a, meet(N[a], b));
        if (rhs != b) {
          r.is_orthomodular = false;
          r.witnesses["orthomodular"] =
              make_witness(L, {{"a", a}, {"b", b}}, rhs, b, "(a | (~a & b)) !=");
          break;
        }
      }
  } else {
    r.witnesses["orthomodular"] =
        make_witness(L, {}, -1, -1, "not an ortholattice");
  }

  r.holds_nu = true;
  for (int p = 0; p < n && r.holds_nu; ++p)
    for (int q = 0; q < n; ++q) {
      int lhs = meet(nn[p], nn[q]);
      int rhs = nn[meet(p, q)];
      if (!L.leq(lhs, rhs)) {
        r.holds_nu = false;
        r.witnesses["nu"] = make_witness(L, {{"p", p}, {"q", q}}, lhs, rhs, "not below");
        break;
      }
    }

  r.holds_vi = true;
  for (int a = 0; a < n && r.holds_vi; ++a)
    for (int c = 0; c < n && r.holds_vi; ++c)
      for (int e = 0; e < n && r.holds_vi; ++e) {
        int g = meet(a, join(c, e));
        int acae = join(meet(a, c), meet(a, e));
        for (int f = 0; f < n; ++f) {
          int lhs = meet(g, nn[f]);
          int rhs = join(acae, f);
          if (!L.leq(lhs, rhs)) {
            r.holds_vi = false;
            r.witnesses["vi"] = make_witness(
                L, {{"a", a}, {"c", c}, {"e", e}, {"f", f}}, lhs, rhs, "not below");
            break;
          }
        }
      }

  r.holds_cl = true;
  for (int a = 0; a < n && r.holds_cl; ++a)
    for (int b = 0; b < n && r.holds_cl; ++b)
      for (int c = 0; c < n && r.holds_cl; ++c)
        for (int d = 0; d < n; ++d) {
          int t = meet(b, join(c, d));
          int rhs = join(t, N[t]);
          int lhs = meet(N[meet(a, join(meet(b, c), meet(b, d)))], a);
          if (!L.leq(lhs, rhs)) {
            r.holds_cl = false;
            r.witnesses["cl"] = make_witness(
                L, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}, lhs, rhs, "not below");
            break;
          }
        }

  r.is_ex = true;
  for (int a = 0; a < n && r.is_ex; ++a)
    for (int b = 0; b < n && r.is_ex; ++b)
      for (int c = 0; c < n && r.is_ex; ++c)
        for (int d = 0; d < n && r.is_ex; ++d) {
          int t = meet(b, join(c, d));
          int guard3 = join(t, N[t]);
          int g1 = meet(N[meet(a, join(meet(b, c), meet(b, d)))], a);
          for (int e = 0; e < n && r.is_ex; ++e) {
            int g2 = meet(g1, join(c, e));
            if (g2 == bot) continue;  // lhs will be bottom for every f
            int acae = join(meet(a, c), meet(a, e));
            for (int f = 0; f < n; ++f) {
              int lhs = meet(g2, nn[f]);
              int rhs = meet(meet(nn[meet(a, f)], join(acae, f)), guard3);
              if (!L.leq(lhs, rhs)) {
                r.is_ex = false;
                r.witnesses["ex"] = make_witness(
                    L, {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}},
                    lhs, rhs, "not below");
                break;
              }
            }
          }
        }

  return r;
}

// ---------- product / homomorphisms ----------

int product_index(const FiniteLattice& B, int a, int b) { return a * B.size() + b; }

FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B) {
  const int na = A.size(), nb = B.size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) names.push_back("(" + A.name(a) + "," + B.name(b) + ")");
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          if (A.leq(a1, a2) && B.leq(b1, b2))
            leq[(a1 * nb + b1) * n + (a2 * nb + b2)] = 1;
  std::vector<int> neg;
  if (A.has_negation() && B.has_negation()) {
    neg.resize(n);
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b) neg[a * nb + b] = A.neg(a) * nb + B.neg(b);
  }
  std::map<std::string, std::string> md;
  md["construction"] = "product";
  return FiniteLattice::from_leq(std::move(names), std::move(leq), std::move(neg), std::move(md));
}

HomReport check_homomorphism(const std::vector<int>& h, const FiniteLattice& from,
                             const FiniteLattice& to) {
  HomReport r;
  const int n = from.size();
  if (static_cast<int>(h.size()) != n) {
    r.first_violation = "map has wrong domain size";
    return r;
  }
  for (int i = 0; i < n; ++i)
    if (h[i] < 0 || h[i] >= to.size()) {
      r.first_violation = "map image out of range";
      return r;
    }

  r.is_homomorphism = true;
  auto fail = [&](const std::string& msg) {
    if (r.is_homomorphism) r.first_violation = msg;
    r.is_homomorphism = false;
  };
  if (h[from.bottom()] != to.bottom()) fail("bottom not preserved");
  if (r.is_homomorphism && h[from.top()] != to.top()) fail("top not preserved");
  for (int a = 0; a < n && r.is_homomorphism; ++a) {
    if (from.has_negation() && to.has_negation() && h[from.neg(a)] != to.neg(h[a]))
      fail("negation not preserved at '" + from.name(a) + "'");
    for (int b = 0; b < n && r.is_homomorphism; ++b) {
      if (h[from.meet(a, b)] != to.meet(h[a], h[b]))
        fail("meet not preserved at ('" + from.name(a) + "', '" + from.name(b) + "')");
      else if (h[from.join(a, b)] != to.join(h[a], h[b]))
        fail("join not preserved at ('" + from.name(a) + "', '" + from.name(b) + "')");
    }
  }

  r.injective = true;
  for (int a = 0; a < n && r.injective; ++a)
    for (int b = a + 1; b < n; ++b)
      if (h[a] == h[b]) {
        r.injective = false;
        if (r.first_violation.empty())
          r.first_violation =
              "not injective: '" + from.name(a) + "' and '" + from.name(b) + "' collide";
        break;
      }

  std::vector<char> hit(to.size(), 0);
  for (int a = 0; a < n; ++a) hit[h[a]] = 1;
  r.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  r.order_reflecting = true;
  for (int a = 0; a < n && r.order_reflecting; ++a)
    for (int b = 0; b < n; ++b)
      if (to.leq(h[a], h[b]) && !from.leq(a, b)) {
        r.order_reflecting = false;
        if (r.first_violation.empty())
          r.first_violation = "order not reflected at ('" + from.name(a) + "', '" +
                              from.name(b) + "')";
        break;
      }
  return r;
}

}  // namespace exlogic
