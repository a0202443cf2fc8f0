#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "exlogic/axioms.hpp"
#include "exlogic/model_check.hpp"
#include "test_util.hpp"

using namespace exlogic;

namespace {

// Reference evaluator used as the oracle: recursive descent with meet and
// join recomputed from leq on the spot instead of the precomputed tables.
int oracle_meet(const FiniteLattice& L, int a, int b) {
  int best = -1;
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(x, a) && L.leq(x, b) && (best < 0 || L.leq(best, x))) best = x;
  return best;
}

int oracle_join(const FiniteLattice& L, int a, int b) {
  int best = -1;
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(a, x) && L.leq(b, x) && (best < 0 || L.leq(x, best))) best = x;
  return best;
}

int oracle_eval(const Formula& f, const FiniteLattice& L,
                const std::map<std::string, int>& asg) {
  switch (f.conn()) {
    case Conn::Var: return asg.at(f.var_name());
    case Conn::Top: return L.top();
    case Conn::Bottom: return L.bottom();
    case Conn::Neg: return L.neg(oracle_eval(f.child(), L, asg));
    case Conn::And: return oracle_meet(L, oracle_eval(f.left(), L, asg),
                                       oracle_eval(f.right(), L, asg));
    case Conn::Or: return oracle_join(L, oracle_eval(f.left(), L, asg),
                                      oracle_eval(f.right(), L, asg));
  }
  return -1;
}

}  // namespace

TEST_CASE("evaluate agrees with the reference evaluator on random formulas") {
  std::mt19937 rng(20240818);
  const std::vector<std::string> vars = {"p", "q", "r"};
  for (const auto& file : testutil::bundled_lattice_files()) {
    const FiniteLattice L = testutil::load_data(file);
    std::uniform_int_distribution<int> pick(0, L.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const Formula f = testutil::random_formula(rng, vars, 5);
      Valuation v{&L, {}};
      for (const auto& name : vars) v.assignment[name] = pick(rng);
      CHECK(evaluate(f, v) == oracle_eval(f, L, v.assignment));
    }
  }
}

TEST_CASE("evaluate on the eight-element nu-failing lattice") {
  const FiniteLattice L = testutil::load_data("vi_cl_only.json");
  Valuation v{&L, {}};
  for (int i = 0; i < L.size(); ++i) v.assignment[L.name(i)] = i;

  CHECK(L.name(evaluate(parse_formula("~~a & ~~b"), v)) == "b");
  CHECK(L.name(evaluate(parse_formula("~~(a & b)"), v)) == "f");
  CHECK(evaluate(parse_formula("~~a"), v) == L.top());
  CHECK(L.name(evaluate(parse_formula("d | e"), v)) == "a");
}

TEST_CASE("constants and contradictions evaluate the same on every lattice") {
  const Formula contradiction = parse_formula("T & ~T");
  const Formula excluded = parse_formula("T | ~F");
  for (const auto& file : testutil::bundled_lattice_files()) {
    const FiniteLattice L = testutil::load_data(file);
    Valuation v{&L, {}};
    CHECK(evaluate(contradiction, v) == L.bottom());
    CHECK(evaluate(excluded, v) == L.top());
  }
}

TEST_CASE("evaluate rejects unbound variables and bad assignments") {
  const FiniteLattice L = testutil::load_data("bool4.json");
  Valuation v{&L, {{"p", 1}}};
  CHECK_THROWS_AS(evaluate(parse_formula("p & q"), v), EvalError);
  Valuation bad{&L, {{"p", 99}}};
  CHECK_THROWS_AS(evaluate(parse_formula("p"), bad), EvalError);
}

TEST_CASE("substituting then evaluating equals evaluating through the substitution") {
  std::mt19937 rng(20240819);
  const FiniteLattice L = testutil::load_data("nu_vi_only.json");
  std::uniform_int_distribution<int> pick(0, L.size() - 1);
  const std::vector<std::string> outer = {"p", "q"};
  const std::vector<std::string> inner = {"x", "y"};
  for (int trial = 0; trial < 60; ++trial) {
    const Formula f = testutil::random_formula(rng, outer, 4);
    Substitution sub;
    sub.insert_or_assign("p", testutil::random_formula(rng, inner, 3));
    sub.insert_or_assign("q", testutil::random_formula(rng, inner, 3));
    Valuation v{&L, {}};
    for (const auto& name : inner) v.assignment[name] = pick(rng);
    Valuation composed{&L, {}};
    composed.assignment["p"] = evaluate(sub.at("p"), v);
    composed.assignment["q"] = evaluate(sub.at("q"), v);
    CHECK(evaluate(substitute(f, sub), v) == evaluate(f, composed));
  }
}

TEST_CASE("first counterexamples on the three separating lattices are pinned") {
  const Sequent nu = get_axiom("nu").sequent;
  const Sequent vi = get_axiom("vi").sequent;
  const Sequent cl = get_axiom("cl").sequent;

  SUBCASE("nu fails on the lattice satisfying only vi and cl") {
    const FiniteLattice L = testutil::load_data("vi_cl_only.json");
    CHECK(sequent_valid(vi, L));
    CHECK(sequent_valid(cl, L));
    const auto w = find_counterexample(nu, L);
    REQUIRE(w.has_value());
    CHECK(w->detail(L) == "p=a, q=b: lhs=b, rhs=f");
  }

  SUBCASE("vi fails on the lattice satisfying only nu and cl") {
    const FiniteLattice L = testutil::load_data("nu_cl_only.json");
    CHECK(sequent_valid(nu, L));
    CHECK(sequent_valid(cl, L));
    const auto w = find_counterexample(vi, L);
    REQUIRE(w.has_value());
    CHECK(w->detail(L) == "a=b, c=a, e=c, f=c: lhs=b, rhs=c");
  }

  SUBCASE("cl fails on the lattice satisfying only nu and vi") {
    const FiniteLattice L = testutil::load_data("nu_vi_only.json");
    CHECK(sequent_valid(nu, L));
    CHECK(sequent_valid(vi, L));
    const auto w = find_counterexample(cl, L);
    REQUIRE(w.has_value());
    CHECK(w->detail(L) == "a=1, b=b, c=c, d=d: lhs=1, rhs=a");
  }
}

TEST_CASE("the first counterexample is deterministic across runs") {
  const FiniteLattice L = testutil::load_data("nu_vi_only.json");
  const Sequent s = get_axiom("cl").sequent;
  const auto w1 = find_counterexample(s, L);
  const auto w2 = find_counterexample(s, L);
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->assignment == w2->assignment);
  CHECK(w1->lhs == w2->lhs);
  CHECK(w1->rhs == w2->rhs);
}

TEST_CASE("the combined schema holds on ortholattices and Heyting lattices alike") {
  const Sequent ex = get_axiom("ex").sequent;
  for (const char* file : {"bool2.json", "bool4.json", "mo2.json", "o6.json",
                           "chain3.json", "chain4.json", "heyting5.json"}) {
    CAPTURE(file);
    CHECK(schema_valid(ex, testutil::load_data(file)));
  }
  for (const char* file : {"nu_vi_only.json", "nu_cl_only.json", "vi_cl_only.json"}) {
    CAPTURE(file);
    CHECK(!schema_valid(ex, testutil::load_data(file)));
  }
}

TEST_CASE("countermodel_search stops at the first refuting lattice") {
  std::vector<FiniteLattice> lattices;
  for (const auto& file : testutil::bundled_lattice_files())
    lattices.push_back(testutil::load_data(file));

  SUBCASE("double negation elimination fails on the first non-ortho lattice") {
    const auto r = countermodel_search(parse_sequent("~~a |- a"), lattices);
    REQUIRE(r.witness.has_value());
    CHECK(r.lattice_index >= 0);
    CHECK(r.lattices_checked == static_cast<size_t>(r.lattice_index) + 1);
    const auto& L = lattices[r.lattice_index];
    const int a = r.witness->assignment.at(0).second;
    CHECK(!L.leq(L.neg(L.neg(a)), a));
    for (int i = 0; i < r.lattice_index; ++i)
      CHECK(sequent_valid(parse_sequent("~~a |- a"), lattices[i]));
  }

  SUBCASE("distributivity fails somewhere in the bundle") {
    const auto r = countermodel_search(get_axiom("distributivity").sequent, lattices);
    REQUIRE(r.witness.has_value());
    CHECK(!classify(lattices[r.lattice_index]).is_distributive);
  }

  SUBCASE("non-contradiction is exhausted without a witness") {
    const auto r = countermodel_search(parse_sequent("a & ~a |- F"), lattices);
    CHECK(!r.witness.has_value());
    CHECK(r.lattice_index == -1);
    CHECK(r.lattices_checked == lattices.size());
  }
}

TEST_CASE("validity on a product is validity on both components") {
  std::mt19937 rng(20240820);
  const FiniteLattice A = testutil::load_data("mo2.json");
  const FiniteLattice B = testutil::load_data("chain3.json");
  const FiniteLattice P = product(A, B);
  const std::vector<std::string> vars = {"p", "q"};
  int disagreements = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Sequent s = testutil::random_sequent(rng, vars, 3);
    const bool on_product = sequent_valid(s, P);
    const bool on_parts = sequent_valid(s, A) && sequent_valid(s, B);
    CHECK(on_product == on_parts);
    if (sequent_valid(s, A) != sequent_valid(s, B)) ++disagreements;
  }
  CHECK(disagreements > 0);  // the sample actually separates the components
}

TEST_CASE("sequents without variables are decided from the constants alone") {
  const FiniteLattice L = testutil::load_data("chain3.json");
  CHECK(sequent_valid(parse_sequent("F |- T"), L));
  const auto w = find_counterexample(parse_sequent("T |- F"), L);
  REQUIRE(w.has_value());
  CHECK(w->assignment.empty());
  CHECK(w->lhs == L.top());
  CHECK(w->rhs == L.bottom());
}

TEST_CASE("an undersized budget raises the resource error") {
  const FiniteLattice L = testutil::load_data("nu_vi_only.json");
  const Sequent s = parse_sequent("a & b & c |- a");
  CHECK_THROWS_AS(find_counterexample(s, L, 10), ResourceLimitError);
  CHECK(sequent_valid(s, L, 400));  // 7^3 = 343 fits
}
