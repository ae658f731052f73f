#include "noet/qelim.hpp"

#include <algorithm>

namespace noet {

namespace {

// Equation / inequation literals with constant folding.
PropFormula atom_eq(const Poly& p) {
  if (p.is_zero()) return PropFormula::tru();
  if (p.is_constant()) return PropFormula::fls();
  return PropFormula::atom(p);
}

PropFormula atom_neq(const Poly& p) {
  if (p.is_zero()) return PropFormula::fls();
  if (p.is_constant()) return PropFormula::tru();
  return PropFormula::negation(PropFormula::atom(p));
}

void check_terms(const Poly& p, const QelimBudget& b) {
  if (p.terms().size() > b.max_poly_terms)
    fail("SizeBudgetExceeded", "intermediate polynomial exceeds " +
                                   std::to_string(b.max_poly_terms) + " terms");
}

// The q-coefficients of r as a polynomial in y are nonzero somewhere:
// the disjunction over them of coeff != 0.
PropFormula some_coeff_nonzero(const Poly& r, const std::string& y) {
  if (r.is_zero()) return PropFormula::fls();
  std::vector<PropFormula> ors;
  for (const auto& c : r.coeffs_in(y))
    if (!c.is_zero()) ors.push_back(atom_neq(c));
  if (ors.empty()) return PropFormula::fls();
  return PropFormula::disj(std::move(ors));
}

PropFormula qe_exists(std::vector<Poly> P, std::vector<Poly> Q, const std::string& y,
                      const QelimBudget& budget) {
  std::vector<PropFormula> side;
  std::vector<Poly> P2, Q2;
  for (auto& p : P) {
    if (p.is_zero()) continue;
    if (p.degree_in(y) == 0) {
      if (p.is_constant()) return PropFormula::fls();
      side.push_back(atom_eq(p));
    } else {
      P2.push_back(std::move(p));
    }
  }
  for (auto& q : Q) {
    if (q.is_zero()) return PropFormula::fls();
    if (q.degree_in(y) == 0) {
      if (!q.is_constant()) side.push_back(atom_neq(q));
    } else {
      Q2.push_back(std::move(q));
    }
  }

  PropFormula core;
  if (P2.empty()) {
    // a y remains avoiding all roots iff no q is identically zero in y
    std::vector<PropFormula> conj;
    for (const auto& q : Q2) conj.push_back(some_coeff_nonzero(q, y));
    core = conj.empty() ? PropFormula::tru() : PropFormula::conj(std::move(conj));
  } else {
    size_t pick = 0;
    for (size_t i = 1; i < P2.size(); ++i)
      if (P2[i].degree_in(y) < P2[pick].degree_in(y)) pick = i;
    const Poly p = P2[pick];
    const uint32_t d = static_cast<uint32_t>(p.degree_in(y));
    const Poly lc = p.leading_coeff_in(y);

    PropFormula nonzero_branch;
    if (P2.size() > 1) {
      // reduce every other equation modulo p; valid while lc != 0
      std::vector<Poly> P3{p};
      for (size_t i = 0; i < P2.size(); ++i) {
        if (i == pick) continue;
        Poly r = pseudo_rem(P2[i], p, y);
        check_terms(r, budget);
        P3.push_back(std::move(r));
      }
      nonzero_branch = qe_exists(std::move(P3), Q2, y, budget);
    } else {
      // single equation p of exact degree d: some root of p avoids all q
      // iff p does not divide (prod q reduced mod p)^d
      Poly qhat = Poly::constant(Rational(1));
      for (const auto& q : Q2) {
        Poly r = q.degree_in(y) >= static_cast<int>(d) ? pseudo_rem(q, p, y) : q;
        qhat = qhat * r;
        check_terms(qhat, budget);
      }
      Poly power = qhat.pow(d);
      check_terms(power, budget);
      Poly R = pseudo_rem(power, p, y);
      check_terms(R, budget);
      nonzero_branch = some_coeff_nonzero(R, y);
    }

    if (lc.is_constant()) {
      core = nonzero_branch;  // the leading coefficient never vanishes
    } else {
      std::vector<Poly> Pz = P2;
      auto coeffs = Pz[pick].coeffs_in(y);
      coeffs.back() = Poly::zero();
      Pz[pick] = Poly::from_coeffs_in(Domain::rationals(), y, coeffs);
      PropFormula zero_branch =
          PropFormula::conj({atom_eq(lc), qe_exists(std::move(Pz), Q2, y, budget)});
      PropFormula nz = PropFormula::conj({atom_neq(lc), std::move(nonzero_branch)});
      core = PropFormula::disj({std::move(zero_branch), std::move(nz)});
    }
  }

  side.push_back(std::move(core));
  PropFormula out = PropFormula::conj(std::move(side));
  if (out.node_count() > budget.max_nodes)
    fail("SizeBudgetExceeded",
         "eliminated formula exceeds " + std::to_string(budget.max_nodes) + " nodes");
  return out;
}

std::string require_single_var(const std::vector<Poly>& ps, const std::vector<Poly>& qs) {
  std::string var;
  auto visit = [&](const Poly& f) {
    if (f.vars().size() > 1) fail("NotUnivariate", "'" + f.to_string() + "' is not univariate");
    if (f.vars().size() == 1) {
      if (var.empty())
        var = f.vars()[0];
      else if (var != f.vars()[0])
        fail("NotUnivariate", "mixed variables in the system");
    }
  };
  for (const auto& f : ps) visit(f);
  for (const auto& f : qs) visit(f);
  return var.empty() ? "y" : var;
}

}  // namespace

bool decide_exists_qbar(const std::vector<Poly>& ps, const std::vector<Poly>& qs) {
  require_single_var(ps, qs);
  std::vector<Poly> effective;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return false;  // nonzero constant equated to zero
    effective.push_back(p);
  }
  if (effective.empty()) {
    for (const auto& q : qs)
      if (q.is_zero()) return false;
    return true;  // the closure is infinite, finitely many roots excluded
  }
  Poly g = effective.front();
  for (size_t i = 1; i < effective.size(); ++i) g = gcd_univariate(g, effective[i]);
  if (g.total_degree() < 1) return false;
  // strip the root set of every q; gcd with the zero polynomial is g
  // itself, so an identically-zero q empties g as required
  bool changed = true;
  while (changed && g.total_degree() >= 1) {
    changed = false;
    for (const auto& q : qs) {
      Poly d = gcd_univariate(g, q);
      if (d.total_degree() >= 1) {
        auto quo = exact_quotient(g, d);
        if (!quo) fail("ZeroDivisor", "gcd does not divide its argument");
        g = monic_univariate(*quo);
        changed = true;
        if (g.total_degree() < 1) break;
      }
    }
  }
  return g.total_degree() >= 1;
}

PropFormula eliminate_exists(const LiteralConjunction& c, const QelimBudget& budget) {
  return qe_exists(c.equals, c.nonzero, c.bound_var, budget);
}

PropFormula fold_constants(const PropFormula& f) {
  switch (f.kind()) {
    case PropFormula::Kind::True:
    case PropFormula::Kind::False:
      return f;
    case PropFormula::Kind::Atom:
      return atom_eq(f.equation().poly);
    case PropFormula::Kind::Not:
      return PropFormula::negation(fold_constants(f.children().front()));
    case PropFormula::Kind::And:
    case PropFormula::Kind::Or: {
      std::vector<PropFormula> kids;
      kids.reserve(f.children().size());
      for (const auto& k : f.children()) kids.push_back(fold_constants(k));
      return f.kind() == PropFormula::Kind::And ? PropFormula::conj(std::move(kids))
                                                : PropFormula::disj(std::move(kids));
    }
  }
  return f;
}

PropFormula eliminate_all(const PredFormula& f, const QelimBudget& budget) {
  if (f.prefix().size() > budget.max_prefix)
    fail("DepthExceeded", "prenex depth " + std::to_string(f.prefix().size()) +
                              " exceeds the bound " + std::to_string(budget.max_prefix));
  PropFormula matrix = fold_constants(f.matrix());
  FormulaBudget fb{budget.max_nodes};
  for (size_t level = f.prefix().size(); level-- > 0;) {
    const auto& entry = f.prefix()[level];
    bool exists = entry.quant == Quant::Exists;
    PropFormula target = exists ? matrix : PropFormula::negation(matrix);
    auto disjuncts = dnf_disjuncts(to_dnf(target, fb));
    std::vector<PropFormula> results;
    results.reserve(disjuncts.size());
    for (const auto& lits : disjuncts) {
      std::vector<Poly> P, Q;
      for (const auto& lit : lits) (lit.negated ? Q : P).push_back(lit.poly);
      results.push_back(qe_exists(std::move(P), std::move(Q), entry.var, budget));
    }
    PropFormula eliminated =
        results.empty() ? PropFormula::fls() : PropFormula::disj(std::move(results));
    matrix = exists ? eliminated : PropFormula::negation(eliminated);
    if (matrix.node_count() > budget.max_nodes)
      fail("SizeBudgetExceeded", "eliminated formula exceeds " +
                                     std::to_string(budget.max_nodes) + " nodes");
  }
  return matrix;
}

bool decide_sentence_acf(const PredFormula& f, const QelimBudget& budget) {
  if (!f.free_vars().empty())
    fail("ArityError", "decide_sentence_acf needs a sentence; free variables remain");
  PropFormula out = fold_constants(eliminate_all(f, budget));
  if (out.is_true()) return true;
  if (out.is_false()) return false;
  fail("DomainMismatch", "sentence did not eliminate to a constant: " + out.to_string());
}

}  // namespace noet
