#include "noet/formula.hpp"

namespace noet {

namespace {

using Clause = std::vector<SignedLiteral>;
using ClauseList = std::vector<Clause>;

PropFormula nnf(const PropFormula& f, bool negate) {
  switch (f.kind()) {
    case PropFormula::Kind::True:
      return negate ? PropFormula::fls() : PropFormula::tru();
    case PropFormula::Kind::False:
      return negate ? PropFormula::tru() : PropFormula::fls();
    case PropFormula::Kind::Atom:
      return negate ? PropFormula::negation(f) : f;
    case PropFormula::Kind::Not:
      return nnf(f.children().front(), !negate);
    case PropFormula::Kind::And:
    case PropFormula::Kind::Or: {
      std::vector<PropFormula> kids;
      kids.reserve(f.children().size());
      for (const auto& k : f.children()) kids.push_back(nnf(k, negate));
      bool conj = (f.kind() == PropFormula::Kind::And) != negate;
      return conj ? PropFormula::conj(std::move(kids)) : PropFormula::disj(std::move(kids));
    }
  }
  return f;
}

void append_literal(Clause& c, const SignedLiteral& lit) {
  for (const auto& l : c)
    if (l == lit) return;
  c.push_back(lit);
}

size_t literal_count(const ClauseList& cs) {
  size_t n = cs.size();
  for (const auto& c : cs) n += c.size();
  return n;
}

// Clause lists for the CNF of an NNF input when conjunctive == true, and
// for the DNF otherwise (the two directions are duals: swap the roles of
// And and Or).
ClauseList distribute(const PropFormula& f, bool conjunctive, const FormulaBudget& budget) {
  switch (f.kind()) {
    case PropFormula::Kind::True:
      return conjunctive ? ClauseList{} : ClauseList{{}};
    case PropFormula::Kind::False:
      return conjunctive ? ClauseList{{}} : ClauseList{};
    case PropFormula::Kind::Atom:
      return {{SignedLiteral{false, f.equation().poly}}};
    case PropFormula::Kind::Not:
      return {{SignedLiteral{true, f.children().front().equation().poly}}};
    case PropFormula::Kind::And:
    case PropFormula::Kind::Or: {
      bool concat = (f.kind() == PropFormula::Kind::And) == conjunctive;
      if (concat) {
        ClauseList acc;
        for (const auto& k : f.children()) {
          ClauseList sub = distribute(k, conjunctive, budget);
          acc.insert(acc.end(), sub.begin(), sub.end());
          if (literal_count(acc) > budget.max_nodes)
            fail("SizeBudgetExceeded", "normal form exceeds " +
                                           std::to_string(budget.max_nodes) + " nodes");
        }
        return acc;
      }
      ClauseList acc{{}};
      for (const auto& k : f.children()) {
        ClauseList sub = distribute(k, conjunctive, budget);
        ClauseList next;
        for (const auto& a : acc)
          for (const auto& b : sub) {
            Clause merged = a;
            for (const auto& lit : b) append_literal(merged, lit);
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
        if (literal_count(acc) > budget.max_nodes)
          fail("SizeBudgetExceeded", "normal form exceeds " +
                                         std::to_string(budget.max_nodes) + " nodes");
      }
      return acc;
    }
  }
  return {};
}

PropFormula rebuild(const ClauseList& cs, bool conjunctive) {
  if (cs.empty()) return conjunctive ? PropFormula::tru() : PropFormula::fls();
  std::vector<PropFormula> outer;
  outer.reserve(cs.size());
  for (const auto& c : cs) {
    if (c.empty()) {
      outer.push_back(conjunctive ? PropFormula::fls() : PropFormula::tru());
      continue;
    }
    std::vector<PropFormula> lits;
    lits.reserve(c.size());
    for (const auto& l : c) lits.push_back(literal_to_formula(l));
    outer.push_back(conjunctive ? PropFormula::disj(std::move(lits))
                                : PropFormula::conj(std::move(lits)));
  }
  return conjunctive ? PropFormula::conj(std::move(outer)) : PropFormula::disj(std::move(outer));
}

bool literal_shape(const PropFormula& f, SignedLiteral* out) {
  if (f.kind() == PropFormula::Kind::Atom) {
    if (out) *out = {false, f.equation().poly};
    return true;
  }
  if (f.kind() == PropFormula::Kind::Not &&
      f.children().front().kind() == PropFormula::Kind::Atom) {
    if (out) *out = {true, f.children().front().equation().poly};
    return true;
  }
  return false;
}

Clause clause_of(const PropFormula& f, PropFormula::Kind inner) {
  SignedLiteral lit;
  if (literal_shape(f, &lit)) return {lit};
  if (f.kind() != inner)
    fail("NotLiteralConjunction", "formula is not in the expected normal form: " + f.to_string());
  Clause c;
  for (const auto& k : f.children()) {
    if (!literal_shape(k, &lit))
      fail("NotLiteralConjunction", "nested connective in a clause: " + k.to_string());
    c.push_back(lit);
  }
  return c;
}

ClauseList clause_list(const PropFormula& f, bool conjunctive) {
  auto outer = conjunctive ? PropFormula::Kind::And : PropFormula::Kind::Or;
  auto inner = conjunctive ? PropFormula::Kind::Or : PropFormula::Kind::And;
  if (f.is_true()) return conjunctive ? ClauseList{} : ClauseList{{}};
  if (f.is_false()) return conjunctive ? ClauseList{{}} : ClauseList{};
  if (f.kind() != outer) return {clause_of(f, inner)};
  ClauseList cs;
  for (const auto& k : f.children()) cs.push_back(clause_of(k, inner));
  return cs;
}

}  // namespace

PropFormula to_nnf(const PropFormula& f) { return nnf(f, false); }

PropFormula to_cnf(const PropFormula& f, const FormulaBudget& budget) {
  return rebuild(distribute(to_nnf(f), true, budget), true);
}

PropFormula to_dnf(const PropFormula& f, const FormulaBudget& budget) {
  return rebuild(distribute(to_nnf(f), false, budget), false);
}

std::vector<std::vector<SignedLiteral>> cnf_clauses(const PropFormula& cnf) {
  return clause_list(cnf, true);
}

std::vector<std::vector<SignedLiteral>> dnf_disjuncts(const PropFormula& dnf) {
  return clause_list(dnf, false);
}

}  // namespace noet
