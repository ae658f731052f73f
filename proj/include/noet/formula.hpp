#ifndef NOET_FORMULA_HPP
#define NOET_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "noet/poly.hpp"

namespace noet {

// Polynomial equation poly = 0; two-sided input w = w' is stored as
// w - w' = 0.
struct Equation {
  Poly poly;
  bool operator==(const Equation& o) const { return poly == o.poly; }
};

// Quantifier-free formula over polynomial equations. Immutable; And/Or
// constructors flatten nested nodes of the same kind, fold boolean
// constants and collapse single children, so structurally equal values
// are exactly the canonically equal ones.
class PropFormula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  PropFormula() : PropFormula(tru()) {}

  static PropFormula tru();
  static PropFormula fls();
  static PropFormula atom(Equation eq);
  static PropFormula atom(Poly p) { return atom(Equation{std::move(p)}); }
  static PropFormula negation(PropFormula f);
  static PropFormula conj(std::vector<PropFormula> kids);
  static PropFormula disj(std::vector<PropFormula> kids);

  Kind kind() const;
  const Equation& equation() const;               // Kind::Atom only
  const std::vector<PropFormula>& children() const;  // Not/And/Or

  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }

  bool operator==(const PropFormula& o) const;
  bool operator!=(const PropFormula& o) const { return !(*this == o); }

  std::set<std::string> free_vars() const;
  size_t node_count() const;

  // Truth value with atoms decided by their exact polynomial value.
  bool eval_at(const std::map<std::string, Rational>& point) const;

  std::string to_string() const;

  struct Node;  // definition is internal to the implementation

 private:
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class Quant { Exists, Forall };

struct QuantifierEntry {
  Quant quant;
  std::string var;
  bool operator==(const QuantifierEntry& o) const {
    return quant == o.quant && var == o.var;
  }
};

// Prenex predicate formula: quantifier prefix over a quantifier-free
// matrix. The parser rewrites arbitrarily nested quantifiers into this
// form; bound variables are distinct, disjoint from the free ones, and
// vacuous quantifiers have been dropped.
class PredFormula {
 public:
  PredFormula() = default;
  PredFormula(std::vector<QuantifierEntry> prefix, PropFormula matrix);

  const std::vector<QuantifierEntry>& prefix() const { return prefix_; }
  const PropFormula& matrix() const { return matrix_; }
  bool is_quantifier_free() const { return prefix_.empty(); }

  std::set<std::string> free_vars() const;
  std::set<std::string> bound_vars() const;

  bool operator==(const PredFormula& o) const {
    return prefix_ == o.prefix_ && matrix_ == o.matrix_;
  }
  bool operator!=(const PredFormula& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<QuantifierEntry> prefix_;
  PropFormula matrix_;
};

// Text grammar (see README): variables [a-z][a-z0-9]*, integer and a/b
// rational literals, + - * ^, atoms p = q / p != q, connectives ! & | ->,
// quantifiers exists v. / forall v., keywords true/false, parentheses.
PredFormula parse_formula(const std::string& text);
// Same grammar restricted to quantifier-free formulas.
PropFormula parse_prop_formula(const std::string& text);
// Bare polynomial expression.
Poly parse_poly(const std::string& text);

// ---- normal forms ----

struct FormulaBudget {
  size_t max_nodes = 100000;
};

// Negations pushed onto atoms; other structure preserved.
PropFormula to_nnf(const PropFormula& f);
// Conjunction of clauses of signed literals / disjunction of literal
// conjunctions, by naive distribution under the node budget.
PropFormula to_cnf(const PropFormula& f, const FormulaBudget& budget = {});
PropFormula to_dnf(const PropFormula& f, const FormulaBudget& budget = {});

struct SignedLiteral {
  bool negated = false;
  Poly poly;  // the equation poly = 0, negated or not
  bool operator==(const SignedLiteral& o) const {
    return negated == o.negated && poly == o.poly;
  }
};

// Clause view of a CNF (conjunction of disjunctions): True -> no
// clauses, False -> one empty clause.
std::vector<std::vector<SignedLiteral>> cnf_clauses(const PropFormula& cnf);
// Disjunct view of a DNF (disjunction of conjunctions): True -> one
// empty conjunction, False -> no disjuncts.
std::vector<std::vector<SignedLiteral>> dnf_disjuncts(const PropFormula& dnf);

PropFormula literal_to_formula(const SignedLiteral& lit);
PropFormula conjunction_of(const std::vector<SignedLiteral>& lits);

}  // namespace noet

#endif
