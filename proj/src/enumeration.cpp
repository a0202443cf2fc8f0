#include "exlogic/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace exlogic {

EnumerationLimitError::EnumerationLimitError(const std::string& message)
    : std::runtime_error(message) {}

namespace {

int ceiling_from_env(int fallback) {
  const char* raw = std::getenv("EXLOGIC_ENUM_CEILING");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > 31) return fallback;
  return static_cast<int>(value);
}

// Dense iso-invariant codes per element: initial degrees (plus negation
// shape), then two rounds of refinement by the sorted codes of the elements
// below, above, and the negation image. Codes are ranks of the signature
// strings, so isomorphic lattices produce identical code multisets.
std::vector<int> signature_codes(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<std::string> sig(n);
  for (int i = 0; i < n; ++i) {
    int down = 0, up = 0;
    for (int j = 0; j < n; ++j) {
      down += L.leq(j, i) ? 1 : 0;
      up += L.leq(i, j) ? 1 : 0;
    }
    std::ostringstream out;
    out << down << "." << up;
    if (L.has_negation()) {
      const int image = L.neg(i);
      int idown = 0, iup = 0;
      for (int j = 0; j < n; ++j) {
        idown += L.leq(j, image) ? 1 : 0;
        iup += L.leq(image, j) ? 1 : 0;
      }
      out << "." << (image == i ? 1 : 0) << "." << idown << "." << iup;
    }
    sig[i] = out.str();
  }

  auto to_codes = [n](const std::vector<std::string>& strings) {
    std::vector<std::string> sorted(strings);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> codes(n);
    for (int i = 0; i < n; ++i)
      codes[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), strings[i]) - sorted.begin());
    return codes;
  };

  std::vector<int> codes = to_codes(sig);
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> below, above;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (L.leq(j, i)) below.push_back(codes[j]);
        if (L.leq(i, j)) above.push_back(codes[j]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      std::ostringstream out;
      out << codes[i] << "/";
      for (int c : below) out << c << ",";
      out << "/";
      for (int c : above) out << c << ",";
      if (L.has_negation()) out << "/" << codes[L.neg(i)];
      next[i] = out.str();
    }
    codes = to_codes(next);
  }
  return codes;
}

// Element names for enumerated lattices: 0, x1..x{n-2}, 1.
std::vector<std::string> enumerated_names(int n) {
  std::vector<std::string> names(n);
  names[0] = "0";
  if (n > 1) names[n - 1] = "1";
  for (int i = 1; i + 1 < n; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

// All bounded lattice orders on n naturally labeled elements (0 bottom,
// n-1 top, i < j whenever i is strictly below j), as down-set masks. Meets
// are pruned incrementally; joins are verified at the leaves.
void generate_labeled_orders(int n, const std::function<void(const std::vector<uint32_t>&)>& emit) {
  if (n == 1) {
    emit({1u});
    return;
  }
  std::vector<uint32_t> down(n, 0);
  down[0] = 1u;
  const uint32_t all = (n == 31) ? 0x7fffffffu : ((1u << n) - 1);

  auto meet_ok = [&](int j) {
    for (int i = 1; i < j; ++i) {
      const uint32_t common = down[i] & down[j];
      int highest = 31 - __builtin_clz(common);
      if (common & ~down[highest]) return false;
    }
    return true;
  };

  std::function<void(int)> place = [&](int j) {
    if (j == n - 1) {
      down[j] = all;
      std::vector<uint32_t> up(n, 0);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          if (down[k] >> i & 1) up[i] |= 1u << k;
      for (int a = 1; a < n - 1; ++a)
        for (int b = a + 1; b < n - 1; ++b) {
          const uint32_t common = up[a] & up[b];
          const int lowest = __builtin_ctz(common);
          if (common & ~up[lowest]) return;
        }
      emit(down);
      return;
    }
    const uint32_t pool = (1u << j) - 2;  // subsets of {1..j-1}; bit 0 is forced
    for (uint32_t s = 0;; s = (s - pool) & pool) {
      const uint32_t m = s | 1u;
      bool closed = true;
      for (int i = 1; i < j && closed; ++i)
        if ((m >> i & 1) && (down[i] & ~m)) closed = false;
      if (closed) {
        down[j] = m | (1u << j);
        if (meet_ok(j)) place(j + 1);
      }
      if (s == pool) break;
    }
  };
  place(1);
}

FiniteLattice lattice_from_downsets(int n, const std::vector<uint32_t>& down) {
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (down[j] >> i & 1) leq[static_cast<size_t>(i) * n + j] = 1;
  return FiniteLattice::from_leq(enumerated_names(n), std::move(leq), {});
}

}  // namespace

int order_enumeration_ceiling() { return ceiling_from_env(10); }

int fundamental_enumeration_ceiling() { return ceiling_from_env(8); }

std::string canonical_key(const FiniteLattice& lattice) {
  const int n = lattice.size();
  const std::vector<int> codes = signature_codes(lattice);

  std::map<int, std::vector<int>> by_code;
  for (int i = 0; i < n; ++i) by_code[codes[i]].push_back(i);
  std::vector<std::vector<int>> groups;
  groups.reserve(by_code.size());
  for (auto& entry : by_code) groups.push_back(entry.second);

  std::vector<int> perm;
  perm.reserve(n);
  std::vector<int> inverse(n, -1);
  std::string best;

  auto consider = [&]() {
    perm.clear();
    for (const auto& group : groups) perm.insert(perm.end(), group.begin(), group.end());
    for (int pos = 0; pos < n; ++pos) inverse[perm[pos]] = pos;
    std::string key = std::to_string(n);
    key += ';';
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key += lattice.leq(perm[i], perm[j]) ? '1' : '0';
    key += ';';
    if (lattice.has_negation())
      for (int i = 0; i < n; ++i) {
        key += std::to_string(inverse[lattice.neg(perm[i])]);
        key += '.';
      }
    if (best.empty() || key < best) best = std::move(key);
  };

  std::function<void(size_t)> visit = [&](size_t g) {
    if (g == groups.size()) {
      consider();
      return;
    }
    std::sort(groups[g].begin(), groups[g].end());
    do {
      visit(g + 1);
    } while (std::next_permutation(groups[g].begin(), groups[g].end()));
  };
  visit(0);
  return best;
}

std::vector<FiniteLattice> enumerate_lattices(int max_size) {
  if (max_size < 1) throw std::invalid_argument("enumeration needs max_size >= 1");
  const int ceiling = order_enumeration_ceiling();
  if (max_size > ceiling)
    throw EnumerationLimitError("order enumeration ceiling is " + std::to_string(ceiling) +
                                ", requested " + std::to_string(max_size));
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_size; ++n) {
    std::map<std::string, FiniteLattice> fresh;
    generate_labeled_orders(n, [&](const std::vector<uint32_t>& down) {
      FiniteLattice candidate = lattice_from_downsets(n, down);
      std::string key = canonical_key(candidate);
      fresh.emplace(std::move(key), std::move(candidate));
    });
    for (auto& entry : fresh) out.push_back(std::move(entry.second));
  }
  return out;
}

std::vector<FiniteLattice> enumerate_wpc(const FiniteLattice& order, bool canonicalize) {
  const int n = order.size();
  const int bottom = order.bottom();
  const int top = order.top();
  std::vector<int> neg(n, -1);
  neg[bottom] = top;
  neg[top] = bottom;

  std::vector<int> slots;  // elements still needing an image, ascending
  for (int i = 0; i < n; ++i)
    if (i != bottom && i != top) slots.push_back(i);

  std::vector<FiniteLattice> raw;
  std::function<void(size_t)> assign = [&](size_t s) {
    if (s == slots.size()) {
      raw.push_back(FiniteLattice::from_leq(order.names(),
                                            [&] {
                                              std::vector<char> leq(
                                                  static_cast<size_t>(n) * n, 0);
                                              for (int i = 0; i < n; ++i)
                                                for (int j = 0; j < n; ++j)
                                                  leq[static_cast<size_t>(i) * n + j] =
                                                      order.leq(i, j) ? 1 : 0;
                                              return leq;
                                            }(),
                                            neg));
      return;
    }
    const int x = slots[s];
    for (int y = 0; y < n; ++y) {
      if (order.meet(x, y) != bottom) continue;
      bool ok = true;
      for (int z = 0; z < n && ok; ++z) {
        if (neg[z] == -1) continue;
        if (order.leq(x, z) && !order.leq(neg[z], y)) ok = false;
        if (ok && order.leq(z, x) && !order.leq(y, neg[z])) ok = false;
        if (ok && neg[z] == x && !order.leq(z, y)) ok = false;
      }
      if (ok && neg[y] != -1 && !order.leq(x, neg[y])) ok = false;
      if (!ok) continue;
      neg[x] = y;
      assign(s + 1);
      neg[x] = -1;
    }
  };
  assign(0);

  if (!canonicalize) return raw;
  std::map<std::string, FiniteLattice> unique;
  for (auto& lattice : raw) unique.emplace(canonical_key(lattice), std::move(lattice));
  std::vector<FiniteLattice> out;
  out.reserve(unique.size());
  for (auto& entry : unique) out.push_back(std::move(entry.second));
  return out;
}

std::vector<FiniteLattice> enumerate_fundamental(int max_size) {
  if (max_size < 1) throw std::invalid_argument("enumeration needs max_size >= 1");
  const int ceiling = fundamental_enumeration_ceiling();
  if (max_size > ceiling)
    throw EnumerationLimitError("fundamental enumeration ceiling is " +
                                std::to_string(ceiling) + ", requested " +
                                std::to_string(max_size));
  std::vector<FiniteLattice> out;
  std::vector<FiniteLattice> orders = enumerate_lattices(max_size);
  size_t next = 0;
  for (int n = 1; n <= max_size; ++n) {
    std::map<std::string, FiniteLattice> per_size;
    while (next < orders.size() && orders[next].size() == n) {
      for (auto& lattice : enumerate_wpc(orders[next], true))
        per_size.emplace(canonical_key(lattice), std::move(lattice));
      ++next;
    }
    for (auto& entry : per_size) out.push_back(std::move(entry.second));
  }
  return out;
}

std::string CorpusTable::to_csv() const {
  std::ostringstream out;
  out << "key,size";
  for (const auto& flag : LatticeClassReport::flag_names()) out << "," << flag;
  out << "\n";
  for (const auto& row : rows) {
    out << row.key << "," << row.lattice.size();
    for (const auto& flag : LatticeClassReport::flag_names())
      out << "," << (row.report.flag(flag) ? 1 : 0);
    out << "\n";
  }
  return out.str();
}

CorpusTable classify_corpus(const EnumerationSpec& spec) {
  if (spec.max_size < 2) throw std::invalid_argument("corpus needs max_size >= 2");
  const bool keep_all = spec.class_filter.empty() || spec.class_filter == "all" ||
                        spec.class_filter == "fundamental";
  if (!keep_all) {
    const auto& known = LatticeClassReport::flag_names();
    if (std::find(known.begin(), known.end(), spec.class_filter) == known.end())
      throw std::invalid_argument("unknown class filter '" + spec.class_filter + "'");
  }

  CorpusTable table;
  for (auto& lattice : enumerate_fundamental(spec.max_size)) {
    CorpusRow row;
    row.key = canonical_key(lattice);
    row.report = classify(lattice);
    if (!keep_all && !row.report.flag(spec.class_filter)) continue;
    row.lattice = std::move(lattice);
    table.rows.push_back(std::move(row));
  }

  for (const auto& flag : LatticeClassReport::flag_names()) table.flag_counts[flag] = 0;
  for (const auto& row : table.rows) {
    for (const auto& flag : LatticeClassReport::flag_names())
      if (row.report.flag(flag)) ++table.flag_counts[flag];
    std::ostringstream combo;
    combo << "nu=" << (row.report.holds_nu ? 1 : 0) << ",vi=" << (row.report.holds_vi ? 1 : 0)
          << ",cl=" << (row.report.holds_cl ? 1 : 0);
    auto& summary = table.combos[combo.str()];
    ++summary.count;
    if (summary.min_size == -1 || row.lattice.size() < summary.min_size) {
      summary.min_size = row.lattice.size();
      summary.min_key = row.key;
    }
  }
  return table;
}

}  // namespace exlogic
