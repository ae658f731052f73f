#ifndef NOET_QELIM_HPP
#define NOET_QELIM_HPP

#include <string>
#include <vector>

#include "noet/formula.hpp"

namespace noet {

// Inner disjunct of the prenex-DNF form handled by the elimination:
// all of `equals` vanish, none of `nonzero` vanish, quantified in
// bound_var with the remaining variables as parameters.
struct LiteralConjunction {
  std::vector<Poly> equals;
  std::vector<Poly> nonzero;
  std::string bound_var;
  std::vector<std::string> params;
};

struct QelimBudget {
  size_t max_nodes = 100000;      // output formula size
  size_t max_poly_terms = 20000;  // intermediate polynomial size
  size_t max_prefix = 3;          // prenex depth bound
};

// Decision oracle over the algebraic closure of Q: is there a y with
// every p in ps zero and every q in qs nonzero? All inputs univariate
// in one shared variable (constants allowed). Kept independent of
// eliminate_exists for differential testing.
bool decide_exists_qbar(const std::vector<Poly>& ps, const std::vector<Poly>& qs);

// Quantifier-free formula in the parameters equivalent, over every
// algebraically closed field of characteristic 0, to "exists bound_var"
// of the conjunction. Case analysis on leading coefficients with
// pseudo-division recursion.
PropFormula eliminate_exists(const LiteralConjunction& c, const QelimBudget& budget = {});

// Innermost-first elimination of the whole prefix over a DNF matrix;
// forall is handled as not-exists-not.
PropFormula eliminate_all(const PredFormula& f, const QelimBudget& budget = {});

// Truth of a sentence (no free variables) over ACF of characteristic 0.
bool decide_sentence_acf(const PredFormula& f, const QelimBudget& budget = {});

// Constant-atom folding (0 = 0 -> true, c = 0 -> false for c != 0).
PropFormula fold_constants(const PropFormula& f);

}  // namespace noet

#endif
