#include "exlogic/model_check.hpp"

#include <algorithm>
#include <sstream>

namespace exlogic {

int evaluate(const Formula& f, const Valuation& v) {
  const FiniteLattice& L = *v.lattice;
  switch (f.conn()) {
    case Conn::Var: {
      auto it = v.assignment.find(f.var_name());
      if (it == v.assignment.end())
        throw EvalError("unbound variable '" + f.var_name() + "'");
      if (it->second < 0 || it->second >= L.size())
        throw EvalError("assignment for '" + f.var_name() + "' out of range");
      return it->second;
    }
    case Conn::Top: return L.top();
    case Conn::Bottom: return L.bottom();
    case Conn::Neg:
      if (!L.has_negation()) throw EvalError("lattice has no negation");
      return L.neg(evaluate(f.child(), v));
    case Conn::And: return L.meet(evaluate(f.left(), v), evaluate(f.right(), v));
    case Conn::Or: return L.join(evaluate(f.left(), v), evaluate(f.right(), v));
  }
  throw std::logic_error("unreachable");
}

std::string Witness::detail(const FiniteLattice& L) const {
  std::ostringstream out;
  for (size_t i = 0; i < assignment.size(); ++i)
    out << (i ? ", " : "") << assignment[i].first << "=" << L.name(assignment[i].second);
  if (!assignment.empty()) out << ": ";
  out << "lhs=" << L.name(lhs) << ", rhs=" << L.name(rhs);
  return out.str();
}

namespace {

// Flat postfix program; variable slots index into the current assignment.
struct Compiled {
  enum Op : uint8_t { PushVar, PushTop, PushBot, DoNeg, DoAnd, DoOr };
  std::vector<std::pair<Op, int>> prog;
  int max_stack = 0;

  static void emit(const Formula& f, const std::vector<std::string>& vars, Compiled& c,
                   int& depth, int cur) {
    switch (f.conn()) {
      case Conn::Var: {
        auto it = std::lower_bound(vars.begin(), vars.end(), f.var_name());
        c.prog.emplace_back(PushVar, static_cast<int>(it - vars.begin()));
        c.max_stack = std::max(c.max_stack, cur + 1);
        break;
      }
      case Conn::Top:
        c.prog.emplace_back(PushTop, 0);
        c.max_stack = std::max(c.max_stack, cur + 1);
        break;
      case Conn::Bottom:
        c.prog.emplace_back(PushBot, 0);
        c.max_stack = std::max(c.max_stack, cur + 1);
        break;
      case Conn::Neg:
        emit(f.child(), vars, c, depth, cur);
        c.prog.emplace_back(DoNeg, 0);
        break;
      case Conn::And:
      case Conn::Or:
        emit(f.left(), vars, c, depth, cur);
        emit(f.right(), vars, c, depth, cur + 1);
        c.prog.emplace_back(f.conn() == Conn::And ? DoAnd : DoOr, 0);
        break;
    }
  }

  static Compiled compile(const Formula& f, const std::vector<std::string>& vars) {
    Compiled c;
    int depth = 0;
    emit(f, vars, c, depth, 0);
    return c;
  }

  int eval(const FiniteLattice& L, const int* values, int* stack) const {
    const int n = L.size();
    const int* M = L.meet_table();
    const int* J = L.join_table();
    const int* N = L.has_negation() ? L.neg_table() : nullptr;
    int sp = 0;
    for (const auto& [op, arg] : prog) {
      switch (op) {
        case PushVar: stack[sp++] = values[arg]; break;
        case PushTop: stack[sp++] = L.top(); break;
        case PushBot: stack[sp++] = L.bottom(); break;
        case DoNeg:
          if (!N) throw EvalError("lattice has no negation");
          stack[sp - 1] = N[stack[sp - 1]];
          break;
        case DoAnd:
          --sp;
          stack[sp - 1] = M[stack[sp - 1] * n + stack[sp]];
          break;
        case DoOr:
          --sp;
          stack[sp - 1] = J[stack[sp - 1] * n + stack[sp]];
          break;
      }
    }
    return stack[0];
  }
};

}  // namespace

std::optional<Witness> find_counterexample(const Sequent& s, const FiniteLattice& L,
                                           unsigned long long budget) {
  const std::vector<std::string> vars = variables(s);
  const int k = static_cast<int>(vars.size());
  const int n = L.size();

  unsigned long long total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / static_cast<unsigned long long>(n) + 1) {
      total = budget + 1;
      break;
    }
    total *= static_cast<unsigned long long>(n);
  }
  if (total > budget) {
    std::ostringstream msg;
    msg << "assignment space " << n << "^" << k << " exceeds budget " << budget
        << "; try the prover instead";
    throw ResourceLimitError(msg.str());
  }

  Compiled cl = Compiled::compile(s.lhs, vars);
  Compiled cr = Compiled::compile(s.rhs, vars);
  std::vector<int> stack(std::max(cl.max_stack, cr.max_stack) + 1);
  std::vector<int> values(std::max(k, 1), 0);

  // Odometer: last variable fastest.
  while (true) {
    int lv = cl.eval(L, values.data(), stack.data());
    int rv = cr.eval(L, values.data(), stack.data());
    if (!L.leq(lv, rv)) {
      Witness w;
      for (int i = 0; i < k; ++i) w.assignment.emplace_back(vars[i], values[i]);
      w.lhs = lv;
      w.rhs = rv;
      return w;
    }
    int pos = k - 1;
    while (pos >= 0 && values[pos] == n - 1) values[pos--] = 0;
    if (pos < 0) break;
    ++values[pos];
  }
  return std::nullopt;
}

bool sequent_valid(const Sequent& s, const FiniteLattice& L, unsigned long long budget) {
  return !find_counterexample(s, L, budget).has_value();
}

CountermodelResult countermodel_search(const Sequent& s,
                                       const std::vector<FiniteLattice>& lattices,
                                       unsigned long long budget) {
  CountermodelResult r;
  for (size_t i = 0; i < lattices.size(); ++i) {
    auto w = find_counterexample(s, lattices[i], budget);
    ++r.lattices_checked;
    if (w) {
      r.witness = std::move(w);
      r.lattice_index = static_cast<int>(i);
      return r;
    }
  }
  return r;
}

}  // namespace exlogic
