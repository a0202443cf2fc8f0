#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "exlogic/lattice.hpp"
#include "exlogic/lattice_io.hpp"
#include "test_util.hpp"

using namespace exlogic;

namespace {

// Independent order-theoretic oracle: recomputes greatest lower and least
// upper bounds from leq alone and compares them with the stored tables.
void check_tables_against_leq(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int glb = -1, lub = -1;
      for (int x = 0; x < n; ++x) {
        if (L.leq(x, a) && L.leq(x, b) && (glb < 0 || L.leq(glb, x))) glb = x;
        if (L.leq(a, x) && L.leq(b, x) && (lub < 0 || L.leq(x, lub))) lub = x;
      }
      REQUIRE(glb >= 0);
      REQUIRE(lub >= 0);
      for (int x = 0; x < n; ++x) {
        if (L.leq(x, a) && L.leq(x, b)) REQUIRE(L.leq(x, glb));
        if (L.leq(a, x) && L.leq(b, x)) REQUIRE(L.leq(lub, x));
      }
      CHECK(L.meet(a, b) == glb);
      CHECK(L.join(a, b) == lub);
    }
  for (int x = 0; x < n; ++x) {
    CHECK(L.leq(L.bottom(), x));
    CHECK(L.leq(x, L.top()));
  }
}

LatticeData pentagon_data(const std::string& neg_of_c) {
  LatticeData d;
  d.elements = {"0", "a", "b", "c", "1"};
  d.order = {{"0", "a"}, {"0", "c"}, {"c", "b"}, {"a", "1"}, {"b", "1"}};
  d.order_is_covers = true;
  d.negation = {{"a", "b"}, {"b", "a"}, {"c", neg_of_c}};
  return d;
}

}  // namespace

TEST_CASE("meet and join tables agree with the order oracle on the bundled corpus") {
  for (const auto& file : testutil::bundled_lattice_files()) {
    CAPTURE(file);
    check_tables_against_leq(testutil::load_data(file));
  }
}

TEST_CASE("two-element Boolean lattice validates") {
  const FiniteLattice L = testutil::load_data("bool2.json");
  CHECK(L.size() == 2);
  CHECK(L.bottom() == testutil::idx(L, "0"));
  CHECK(L.top() == testutil::idx(L, "1"));
  CHECK(L.neg(L.bottom()) == L.top());
  CHECK(L.neg(L.top()) == L.bottom());
}

TEST_CASE("pentagon validates with the published negation") {
  const FiniteLattice L = validate(pentagon_data("a"));
  CHECK(L.size() == 5);
  const int b = testutil::idx(L, "b"), c = testutil::idx(L, "c");
  CHECK(L.leq(c, b));
  CHECK(!L.leq(b, c));
  CHECK(L.neg(c) == testutil::idx(L, "a"));
}

TEST_CASE("pentagon with ~c = b is rejected for antitonicity") {
  // c <= b yet ~b = a is not below ~c = b.
  try {
    validate(pentagon_data("b"));
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.law == "antitonicity");
  }
}

TEST_CASE("pentagon with ~c = 1 is rejected for semi-complementation") {
  // Antitone, but c & ~c = c & 1 = c != 0.
  try {
    validate(pentagon_data("1"));
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.law == "semi-complementation");
  }
}

TEST_CASE("negation of the bounds is auto-completed and contradiction rejected") {
  LatticeData d;
  d.elements = {"0", "m", "1"};
  d.order = {{"0", "m"}, {"m", "1"}};
  d.order_is_covers = true;
  d.negation = {{"m", "0"}};
  const FiniteLattice L = validate(d);
  CHECK(L.neg(testutil::idx(L, "0")) == testutil::idx(L, "1"));
  CHECK(L.neg(testutil::idx(L, "1")) == testutil::idx(L, "0"));

  d.negation["0"] = "0";
  try {
    validate(d);
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.law == "negation-total");
  }
}

TEST_CASE("validation failures carry the violated law") {
  LatticeData no_bottom;
  no_bottom.elements = {"x", "y"};
  no_bottom.order = {};
  no_bottom.order_is_covers = true;
  CHECK_THROWS_AS(validate(no_bottom), LatticeError);

  LatticeData not_lattice;  // two incomparable lower bounds for the top pair
  not_lattice.elements = {"0", "a", "b", "c", "d", "1"};
  not_lattice.order = {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                       {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}};
  not_lattice.order_is_covers = true;
  // Total negation map so the meet/join check is reached.
  not_lattice.negation = {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "0"}};
  try {
    validate(not_lattice);
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK((e.law == "meet" || e.law == "join"));
  }

  LatticeData dup;
  dup.elements = {"0", "0"};
  CHECK_THROWS_AS(validate(dup), LatticeError);

  LatticeData unknown;
  unknown.elements = {"0", "1"};
  unknown.order = {{"0", "z"}};
  unknown.order_is_covers = true;
  CHECK_THROWS_AS(validate(unknown), LatticeError);
}

TEST_CASE("leq input and covers input agree") {
  LatticeData covers;
  covers.elements = {"0", "x", "y", "1"};
  covers.order = {{"0", "x"}, {"x", "y"}, {"y", "1"}};
  covers.order_is_covers = true;
  covers.negation = {{"x", "0"}, {"y", "0"}};

  LatticeData full;
  full.elements = {"0", "x", "y", "1"};
  full.order_is_covers = false;
  for (const auto& lo : full.elements)
    for (const auto& hi : full.elements) {
      auto rank = [](const std::string& s) {
        if (s == "0") return 0;
        if (s == "x") return 1;
        if (s == "y") return 2;
        return 3;
      };
      if (rank(lo) <= rank(hi)) full.order.emplace_back(lo, hi);
    }
  full.negation = covers.negation;

  const FiniteLattice A = validate(covers), B = validate(full);
  REQUIRE(A.size() == B.size());
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j) CHECK(A.leq(i, j) == B.leq(i, j));
  CHECK(A.covers() == B.covers());
}

TEST_CASE("derived negation laws hold on every bundled lattice") {
  for (const auto& file : testutil::bundled_lattice_files()) {
    CAPTURE(file);
    const FiniteLattice L = testutil::load_data(file);
    for (int a = 0; a < L.size(); ++a) {
      CHECK(L.neg(L.neg(L.neg(a))) == L.neg(a));
      for (int b = 0; b < L.size(); ++b) {
        CHECK(L.neg(L.join(a, b)) == L.meet(L.neg(a), L.neg(b)));
        CHECK(L.leq(L.join(L.neg(a), L.neg(b)), L.neg(L.meet(a, b))));
      }
    }
  }
}

TEST_CASE("classification of the pentagon") {
  const FiniteLattice L = testutil::load_data("nu_cl_only.json");
  const LatticeClassReport r = classify(L);
  CHECK(r.is_fundamental);
  CHECK(!r.is_ortholattice);
  CHECK(!r.is_heyting);
  CHECK(r.holds_nu);
  CHECK(r.holds_cl);
  CHECK(!r.holds_vi);
  CHECK(!r.is_ex);
  CHECK(!r.is_distributive);
  const auto it = r.witnesses.find("distributive");
  REQUIRE(it != r.witnesses.end());
  // The witness triple must actually break distributivity.
  int va = -1, vb = -1, vc = -1;
  for (const auto& [letter, elem] : it->second.assignment) {
    if (letter == "a") va = elem;
    if (letter == "b") vb = elem;
    if (letter == "c") vc = elem;
  }
  REQUIRE(va >= 0);
  REQUIRE(vb >= 0);
  REQUIRE(vc >= 0);
  CHECK(L.meet(va, L.join(vb, vc)) != L.join(L.meet(va, vb), L.meet(va, vc)));
}

TEST_CASE("classification of the Boolean lattices") {
  for (const auto& file : {std::string("bool2.json"), std::string("bool4.json")}) {
    CAPTURE(file);
    const LatticeClassReport r = classify(testutil::load_data(file));
    for (const auto& flag : LatticeClassReport::flag_names()) CHECK(r.flag(flag));
  }
}

TEST_CASE("flag lookup accepts the ortho alias and rejects unknown names") {
  const LatticeClassReport r = classify(testutil::load_data("bool2.json"));
  CHECK(r.flag("ortho") == r.flag("ortholattice"));
  CHECK_THROWS_AS(r.flag("no_such_flag"), std::out_of_range);
}

TEST_CASE("classification implications hold across the bundled corpus") {
  for (const auto& file : testutil::bundled_lattice_files()) {
    CAPTURE(file);
    const LatticeClassReport r = classify(testutil::load_data(file));
    if (r.is_ortholattice) {
      CHECK(r.is_fundamental);
      CHECK(r.holds_dne);
    }
    if (r.is_heyting) {
      CHECK(r.is_fundamental);
      CHECK(r.is_distributive);
      CHECK(r.has_pseudocomplement);
    }
    if (r.is_ex) {
      CHECK(r.holds_nu);
      CHECK(r.holds_vi);
      CHECK(r.holds_cl);
    }
    CHECK(r.is_ex == (r.holds_nu && r.holds_vi && r.holds_cl));
    if (r.is_orthomodular) CHECK(r.is_ortholattice);
  }
}

TEST_CASE("benzene ring is an ortholattice but not orthomodular") {
  const LatticeClassReport r = classify(testutil::load_data("o6.json"));
  CHECK(r.is_ortholattice);
  CHECK(!r.is_orthomodular);
  CHECK(r.holds_em);
  CHECK(!r.is_distributive);
  CHECK(r.is_ex);
}

TEST_CASE("five-element Heyting lattice refutes weak excluded middle") {
  const LatticeClassReport r = classify(testutil::load_data("heyting5.json"));
  CHECK(r.is_heyting);
  CHECK(!r.holds_wem);
  CHECK(!r.holds_em);
  CHECK(r.is_ex);
}

TEST_CASE("product of the Boolean two-chains is the Boolean square") {
  const FiniteLattice b2 = testutil::load_data("bool2.json");
  const FiniteLattice p = product(b2, b2);
  CHECK(p.size() == 4);
  const LatticeClassReport r = classify(p);
  CHECK(r.is_ortholattice);
  CHECK(r.is_heyting);
  CHECK(p.name(product_index(b2, 0, 1)) == "(0,1)");
}

TEST_CASE("ortholattice times Heyting lattice validates the six-variable axiom") {
  const FiniteLattice o = testutil::load_data("mo2.json");
  const FiniteLattice h = testutil::load_data("chain3.json");
  const FiniteLattice p = product(o, h);
  CHECK(p.size() == o.size() * h.size());
  const LatticeClassReport r = classify(p);
  CHECK(r.is_fundamental);
  CHECK(r.is_ex);
  CHECK(!r.is_ortholattice);
  CHECK(!r.is_heyting);
}

TEST_CASE("product sizes multiply across the corpus") {
  const FiniteLattice chain3 = testutil::load_data("chain3.json");
  for (const auto& file : testutil::bundled_lattice_files()) {
    CAPTURE(file);
    const FiniteLattice L = testutil::load_data(file);
    CHECK(product(L, chain3).size() == L.size() * 3);
  }
}

TEST_CASE("homomorphism checker") {
  const FiniteLattice mo2 = testutil::load_data("mo2.json");
  std::vector<int> id(mo2.size());
  for (int i = 0; i < mo2.size(); ++i) id[i] = i;
  const HomReport identity = check_homomorphism(id, mo2, mo2);
  CHECK(identity.is_homomorphism);
  CHECK(identity.injective);
  CHECK(identity.surjective);
  CHECK(identity.order_reflecting);
  CHECK(identity.order_embedding());

  const FiniteLattice b2 = testutil::load_data("bool2.json");
  const std::vector<int> to_top = {b2.top(), b2.top()};
  const HomReport constant = check_homomorphism(to_top, b2, b2);
  CHECK(!constant.is_homomorphism);
  CHECK(!constant.first_violation.empty());
}

TEST_CASE("merging the pentagon doubleton is a non-injective homomorphism") {
  const FiniteLattice pent = testutil::load_data("nu_cl_only.json");
  LatticeData square;
  square.elements = {"0", "a", "m", "1"};
  square.order = {{"0", "a"}, {"0", "m"}, {"a", "1"}, {"m", "1"}};
  square.order_is_covers = true;
  square.negation = {{"a", "m"}, {"m", "a"}};
  const FiniteLattice target = validate(square);
  std::vector<int> h(pent.size());
  h[testutil::idx(pent, "0")] = testutil::idx(target, "0");
  h[testutil::idx(pent, "a")] = testutil::idx(target, "a");
  h[testutil::idx(pent, "b")] = testutil::idx(target, "m");
  h[testutil::idx(pent, "c")] = testutil::idx(target, "m");
  h[testutil::idx(pent, "1")] = testutil::idx(target, "1");
  const HomReport r = check_homomorphism(h, pent, target);
  CHECK(r.is_homomorphism);
  CHECK(!r.injective);
  CHECK(r.surjective);
}

TEST_CASE("lattice JSON round-trips byte for byte") {
  for (const auto& file : testutil::bundled_lattice_files()) {
    CAPTURE(file);
    const FiniteLattice L = testutil::load_data(file);
    const std::string once = lattice_to_json(L);
    const FiniteLattice back = validate(lattice_data_from_json(once));
    CHECK(lattice_to_json(back) == once);
    CHECK(back.size() == L.size());
    for (int i = 0; i < L.size(); ++i) {
      CHECK(back.name(i) == L.name(i));
      CHECK(back.neg(i) == L.neg(i));
      for (int j = 0; j < L.size(); ++j) CHECK(back.leq(i, j) == L.leq(i, j));
    }
  }
}

TEST_CASE("metadata survives the round trip") {
  FiniteLattice L = testutil::load_data("o6.json");
  CHECK(L.metadata().at("name") == "o6");
  L.set_metadata("extra", "value");
  const FiniteLattice back = validate(lattice_data_from_json(lattice_to_json(L)));
  CHECK(back.metadata().at("extra") == "value");
}

TEST_CASE("JSON rejection diagnostics") {
  CHECK_THROWS_AS(lattice_data_from_json("not json"), LatticeError);
  CHECK_THROWS_AS(lattice_data_from_json("[1,2]"), LatticeError);
  CHECK_THROWS_AS(lattice_data_from_json("{\"elements\": [1]}"), LatticeError);
  CHECK_THROWS_AS(
      lattice_data_from_json("{\"elements\": [\"0\",\"1\"], \"covers\": [], \"leq\": []}"),
      LatticeError);
  CHECK_THROWS_AS(load_lattice("/nonexistent/file.json"), LatticeError);
}

TEST_CASE("DOT output for the two-element lattice") {
  const std::string dot = lattice_to_dot(testutil::load_data("bool2.json"));
  CHECK(dot.find("\"0\" -> \"1\";") != std::string::npos);
  CHECK(dot.find("dashed") == std::string::npos);
}

TEST_CASE("DOT output for the first independence lattice") {
  const FiniteLattice L = testutil::load_data("nu_vi_only.json");
  const std::string dot = lattice_to_dot(L);
  size_t count = 0;
  for (size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; pos += 4) ++count;
  const size_t dashed = [&] {
    size_t n = 0, p = 0;
    while ((p = dot.find("style=dashed", p)) != std::string::npos) {
      ++n;
      ++p;
    }
    return n;
  }();
  const size_t solid = count - dashed;
  CHECK(solid == 9);  // the Hasse diagram has nine cover edges
  CHECK(dashed == 3);  // b<->c and d<->e drawn once each, plus a -> 0
  CHECK(dot.find("dir=both") != std::string::npos);
}

TEST_CASE("cover computation matches the file input") {
  const FiniteLattice L = testutil::load_data("vi_cl_only.json");
  const auto covers = L.covers();
  std::set<std::pair<std::string, std::string>> names;
  for (const auto& [lo, hi] : covers) names.insert({L.name(lo), L.name(hi)});
  const std::set<std::pair<std::string, std::string>> expected = {
      {"0", "c"}, {"0", "e"}, {"c", "d"}, {"e", "f"}, {"d", "a"},
      {"e", "a"}, {"f", "b"}, {"a", "1"}, {"b", "1"}};
  CHECK(names == expected);
}
