#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "exlogic/axioms.hpp"
#include "exlogic/model_check.hpp"
#include "exlogic/provers.hpp"
#include "test_util.hpp"

using namespace exlogic;

namespace {

struct Regression {
  std::string sequent;
  bool ortho, intu, ex, classical;
};

// Frozen verdict table for the curated regression list.
const std::vector<Regression>& regressions() {
  static const std::vector<Regression> rows = {
      {"a & (b | c) |- (a & b) | (a & c)", false, true, false, true},
      {"~~a |- a", true, false, false, true},
      {"T |- a | ~a", true, false, false, true},
      {"T |- ~a | ~~a", true, false, false, true},
      {"~~p & ~~q |- ~~(p & q)", true, true, true, true},
      {"a & (c | e) & ~~f |- (a & c) | (a & e) | f", true, true, true, true},
      {"~(a & ((b & c) | (b & d))) & a |- (b & (c | d)) | ~(b & (c | d))", true, true,
       true, true},
      {"~(a & ((b & c) | (b & d))) & a & (c | e) & ~~f |- "
       "~~(a & f) & ((a & c) | (a & e) | f) & ((b & (c | d)) | ~(b & (c | d)))",
       true, true, true, true},
      {"(a | ~a) & (a | b) |- a | (~a & (a | b))", false, true, false, true},
      {"a & ~a |- b", true, true, true, true},
      {"~(a | b) |- ~a & ~b", true, true, true, true},
      {"a | b |- a | (~a & (a | b))", false, false, false, true},
  };
  return rows;
}

}  // namespace

TEST_CASE("saturation handles the fixed calculus examples") {
  SUBCASE("explosion from a contradiction is derivable in fundamental logic") {
    const auto table = saturate(parse_sequent("a & ~a |- b"));
    CHECK(table.goal_derivable());
    const auto lines = table.explain_goal();
    CHECK(!lines.empty());
  }

  SUBCASE("double negation elimination needs the ortho rule") {
    const Sequent s = parse_sequent("~~a |- a");
    CHECK(!saturate(s, LogicId::Fundamental).goal_derivable());
    const auto table = saturate(s, LogicId::Ortho);
    CHECK(table.goal_derivable());
    bool uses_dne = false;
    for (const auto& line : table.explain_goal())
      if (line.find("dne") != std::string::npos) uses_dne = true;
    CHECK(uses_dne);
  }

  SUBCASE("distributivity stays underivable even for ortho saturation") {
    const Sequent s = get_axiom("distributivity").sequent;
    CHECK(!saturate(s, LogicId::Ortho).goal_derivable());
    CHECK(!decide_ortho(s));
  }
}

TEST_CASE("the saturation universe is the depth-bounded subformula closure") {
  const Sequent s = parse_sequent("a |- a");
  const auto table = saturate(s);
  CHECK(table.goal() == s);
  const auto closure = subformula_closure(s, 2);
  CHECK(table.universe().size() == closure.size());
  std::set<std::string> a, b;
  for (const auto& f : table.universe()) a.insert(f.text());
  for (const auto& f : closure) b.insert(f.text());
  CHECK(a == b);

  const SaturationOptions deep{4};
  CHECK(saturate(s, LogicId::Fundamental, deep).universe().size() ==
        subformula_closure(s, 4).size());
}

TEST_CASE("derivation traces replay premises before conclusions") {
  const auto table = saturate(parse_sequent("a & b |- b | c"));
  REQUIRE(table.goal_derivable());
  const auto lines = table.explain_goal();
  REQUIRE(!lines.empty());
  // The final line concludes the goal itself.
  CHECK(lines.back().find("a & b |- b | c") != std::string::npos);
  for (const auto& line : lines) CHECK(line.find("rule") != std::string::npos);
}

TEST_CASE("saturation rejects logics without a saturation calculus") {
  CHECK_THROWS_AS(saturate(parse_sequent("a |- a"), LogicId::Int), std::invalid_argument);
  CHECK_THROWS_AS(saturate(parse_sequent("a |- a"), LogicId::Classical),
                  std::invalid_argument);
}

TEST_CASE("intuitionistic decisions match the fixed examples") {
  CHECK(decide_int(get_axiom("distributivity").sequent));
  CHECK(!decide_int(parse_sequent("~~a |- a")));
  CHECK(!decide_int(parse_sequent("T |- ~a | ~~a")));
  CHECK(decide_int(parse_sequent("a & ~a |- b")));
  CHECK(decide_int(parse_sequent("~a | b |- ~(a & ~b)")));
}

TEST_CASE("classical decisions match the fixed examples") {
  CHECK(decide_classical(parse_sequent("T |- a | ~a")));
  CHECK(decide_classical(get_axiom("distributivity").sequent));
  CHECK(!decide_classical(parse_sequent("a |- b")));
}

TEST_CASE("classical truth tables enforce the variable bound") {
  std::string big = "p0";
  for (int i = 1; i < 25; ++i) big += " & p" + std::to_string(i);
  CHECK_THROWS_AS(decide_classical(parse_sequent(big + " |- q")), ResourceLimitError);
  CHECK_THROWS_AS(decide_classical(parse_sequent("a & b & c |- a"), 2),
                  ResourceLimitError);
  CHECK(decide_classical(parse_sequent("a & b & c |- a"), 3));
}

TEST_CASE("joint verdicts split as expected on the regression list") {
  for (const auto& row : regressions()) {
    CAPTURE(row.sequent);
    const Sequent s = parse_sequent(row.sequent);
    const ExVerdict v = decide_ex(s);
    CHECK(v.ortho_valid == row.ortho);
    CHECK(v.int_valid == row.intu);
    CHECK(v.ex_valid() == row.ex);
    CHECK(v.ex_valid() == (v.ortho_valid && v.int_valid));
    CHECK(decide_classical(s) == row.classical);
    CHECK(decide_ortho(s) == row.ortho);
    CHECK(decide_int(s) == row.intu);
  }
}

TEST_CASE("the named dispatch agrees with the direct procedures") {
  CHECK(logic_from_name("ortho") == LogicId::Ortho);
  CHECK(logic_from_name("int") == LogicId::Int);
  CHECK(logic_from_name("ex") == LogicId::Ex);
  CHECK(logic_from_name("fundamental") == LogicId::Fundamental);
  CHECK(logic_from_name("classical") == LogicId::Classical);
  CHECK_THROWS_AS(logic_from_name("linear"), std::out_of_range);
  for (LogicId id : {LogicId::Fundamental, LogicId::Ortho, LogicId::Int, LogicId::Ex,
                     LogicId::Classical})
    CHECK(logic_from_name(logic_name(id)) == id);

  const Sequent s = parse_sequent("~~a |- a");
  CHECK(decide(LogicId::Ortho, s) == decide_ortho(s));
  CHECK(decide(LogicId::Int, s) == decide_int(s));
  CHECK(decide(LogicId::Ex, s) == decide_ex(s).ex_valid());
  CHECK(decide(LogicId::Classical, s) == decide_classical(s));
  CHECK(decide(LogicId::Fundamental, s) == decide_fundamental(s));
}

TEST_CASE("prover verdicts are sound for the bundled lattices") {
  std::mt19937 rng(20240821);
  const std::vector<std::string> vars = {"a", "b", "c"};

  std::vector<FiniteLattice> all, ortho, heyting, ex;
  for (const auto& file : testutil::bundled_lattice_files()) {
    FiniteLattice L = testutil::load_data(file);
    const auto r = classify(L);
    if (r.is_ortholattice) ortho.push_back(L);
    if (r.is_heyting) heyting.push_back(L);
    if (r.is_ex) ex.push_back(L);
    all.push_back(std::move(L));
  }
  REQUIRE(ortho.size() == 4);
  REQUIRE(heyting.size() == 5);
  REQUIRE(ex.size() == 7);

  int ortho_hits = 0, int_hits = 0, fundamental_hits = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const Sequent s = testutil::random_sequent(rng, vars, 4);
    if (decide_ortho(s)) {
      ++ortho_hits;
      for (const auto& L : ortho) CHECK(sequent_valid(s, L));
    }
    if (decide_int(s)) {
      ++int_hits;
      for (const auto& L : heyting) CHECK(sequent_valid(s, L));
    }
    if (decide_ex(s).ex_valid())
      for (const auto& L : ex) CHECK(sequent_valid(s, L));
    if (decide_fundamental(s)) {
      ++fundamental_hits;
      for (const auto& L : all) CHECK(sequent_valid(s, L));
    }
  }
  // The sample exercises the positive branches.
  CHECK(ortho_hits > 10);
  CHECK(int_hits > 10);
  CHECK(fundamental_hits > 5);
}

TEST_CASE("verdicts are monotone along the logic hierarchy") {
  std::mt19937 rng(20240822);
  const std::vector<std::string> vars = {"p", "q", "r"};
  for (int trial = 0; trial < 250; ++trial) {
    const Sequent s = testutil::random_sequent(rng, vars, 4);
    const bool fundamental = decide_fundamental(s);
    const ExVerdict v = decide_ex(s);
    const bool classical = decide_classical(s);
    if (fundamental) CHECK(v.ex_valid());
    if (v.ortho_valid) CHECK(classical);
    if (v.int_valid) CHECK(classical);
  }
}

TEST_CASE("classical validity transfers to intuitionistic double negation") {
  std::mt19937 rng(20240823);
  const std::vector<std::string> vars = {"p", "q"};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const Sequent s = testutil::random_sequent(rng, vars, 3);
    const Sequent shifted{s.lhs, Formula::neg(Formula::neg(s.rhs))};
    CHECK(decide_classical(s) == decide_int(shifted));
    if (decide_classical(s)) ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("the verdict cache memoizes repeated queries") {
  VerdictCache cache;
  const Sequent s = parse_sequent("~~a |- a");
  const bool first = cache.decide(LogicId::Ortho, s);
  CHECK(cache.misses() == 1);
  CHECK(cache.hits() == 0);
  CHECK(cache.decide(LogicId::Ortho, s) == first);
  CHECK(cache.hits() == 1);
  CHECK(cache.misses() == 1);
  // Same sequent under a different logic is a distinct entry.
  CHECK(cache.decide(LogicId::Int, s) == false);
  CHECK(cache.misses() == 2);
  CHECK(cache.decide(LogicId::Int, parse_sequent("~~ a |- a")) == false);
  CHECK(cache.hits() == 2);
}

TEST_CASE("saturation verdicts stay sound under deeper universes") {
  std::mt19937 rng(20240824);
  const std::vector<std::string> vars = {"a", "b"};
  for (int trial = 0; trial < 60; ++trial) {
    const Sequent s = testutil::random_sequent(rng, vars, 3);
    const bool shallow = decide_fundamental(s, SaturationOptions{1});
    const bool standard = decide_fundamental(s);
    const bool deep = decide_fundamental(s, SaturationOptions{3});
    // Larger universes only add derivations.
    if (shallow) CHECK(standard);
    if (standard) CHECK(deep);
  }
}
