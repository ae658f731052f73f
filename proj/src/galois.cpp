#include "noet/galois.hpp"

#include <algorithm>

namespace noet {

namespace {

// Monomials of total degree <= d over n variables, graded then lex,
// ascending; each as an exponent vector.
std::vector<std::vector<uint32_t>> monomials_up_to(size_t n, uint32_t d) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(n, 0);
  for (uint32_t total = 0; total <= d; ++total) {
    // fix total degree, enumerate lexicographically
    struct Fixed {
      size_t n;
      std::vector<std::vector<uint32_t>>& out;
      void operator()(std::vector<uint32_t>& cur, size_t pos, uint32_t left) {
        if (pos + 1 == n) {
          cur[pos] = left;
          out.push_back(cur);
          return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
          cur[pos] = e;
          (*this)(cur, pos + 1, left - e);
        }
        cur[pos] = 0;
      }
    };
    Fixed{n, out}(cur, 0, total);
  }
  return out;
}

}  // namespace

BoundedUniverse::BoundedUniverse(AffineSpace space, uint32_t degree, bool parallel)
    : space_(std::move(space)), degree_(degree) {
  const uint64_t p = space_.field().p();
  auto monos = monomials_up_to(space_.vars().size(), degree);
  uint64_t count = 1;
  for (size_t i = 0; i < monos.size(); ++i) {
    if (count > (uint64_t(1) << 20) / p + 1)
      fail("SpaceTooLarge", "candidate universe p^" + std::to_string(monos.size()) +
                                " exceeds 2^20 polynomials");
    count *= p;
  }
  if (count > (uint64_t(1) << 20)) fail("SpaceTooLarge", "candidate universe exceeds 2^20");
  Domain dom = Domain::prime_field(p);
  polys_.reserve(count);
  for (uint64_t k = 0; k < count; ++k) {
    std::vector<Poly::Term> terms;
    uint64_t digits = k;
    for (const auto& mono : monos) {
      uint64_t c = digits % p;
      digits /= p;
      if (c) terms.push_back({mono, Rational(Int(static_cast<unsigned long>(c)))});
    }
    polys_.push_back(Poly::from_terms(dom, space_.vars(), std::move(terms)));
  }
  std::vector<FpPoly> compiled;
  compiled.reserve(polys_.size());
  for (const auto& f : polys_) compiled.push_back(FpPoly::compile(f, space_.field(), space_.vars()));
  zero_sets_ = zero_table(space_, compiled, parallel);
}

std::optional<size_t> BoundedUniverse::index_of(const Poly& f) const {
  for (size_t i = 0; i < polys_.size(); ++i)
    if (polys_[i] == f) return i;
  return std::nullopt;
}

PointSet solution_set(const std::vector<PropFormula>& T, const AffineSpace& space,
                      bool parallel) {
  PointSet acc = PointSet::full(space.size());
  for (const auto& f : T) {
    FpFormula compiled = FpFormula::compile(f, space.field(), space.vars());
    acc = acc & scan_formula(space, compiled, parallel);
  }
  return acc;
}

namespace {

bool eval_matrix_fp(const PropFormula& f, const PrimeField& field,
                    const std::vector<std::string>& vars, const uint64_t* point) {
  FpFormula compiled = FpFormula::compile(f, field, vars);
  return compiled.eval(point, field);
}

bool eval_pred_rec(const PropFormula& matrix, const std::vector<QuantifierEntry>& prefix,
                   size_t level, const PrimeField& field,
                   const std::vector<std::string>& vars, std::vector<uint64_t>& point) {
  if (level == prefix.size()) return eval_matrix_fp(matrix, field, vars, point.data());
  // the bound variable's slot in vars was appended at construction
  size_t slot = 0;
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == prefix[level].var) slot = i;
  bool exists = prefix[level].quant == Quant::Exists;
  for (uint64_t v = 0; v < field.p(); ++v) {
    point[slot] = v;
    bool r = eval_pred_rec(matrix, prefix, level + 1, field, vars, point);
    if (exists && r) return true;
    if (!exists && !r) return false;
  }
  return !exists;
}

}  // namespace

bool eval_pred_over_fp(const PredFormula& f, const AffineSpace& space,
                       const std::vector<uint64_t>& point) {
  if (point.size() != space.vars().size())
    fail("DomainMismatch", "point arity does not match the space");
  // extended variable list: the space's free variables plus bound ones
  std::vector<std::string> vars = space.vars();
  for (const auto& e : f.prefix()) {
    if (std::find(vars.begin(), vars.end(), e.var) != vars.end())
      fail("ArityError", "bound variable '" + e.var + "' collides with a space variable");
    vars.push_back(e.var);
  }
  std::vector<uint64_t> pt(vars.size(), 0);
  std::copy(point.begin(), point.end(), pt.begin());
  return eval_pred_rec(f.matrix(), f.prefix(), 0, space.field(), vars, pt);
}

PointSet solution_set_pred(const std::vector<PredFormula>& T, const AffineSpace& space) {
  PointSet acc = PointSet::full(space.size());
  for (const auto& f : T) {
    if (f.is_quantifier_free()) {
      acc = acc & solution_set({f.matrix()}, space);
      continue;
    }
    PointSet s(space.size());
    for (uint64_t i = 0; i < space.size(); ++i)
      if (eval_pred_over_fp(f, space, space.decode(i))) s.set(i);
    acc = acc & s;
  }
  return acc;
}

std::vector<size_t> hold_set_indices(const PointSet& A, const BoundedUniverse& u) {
  std::vector<size_t> out;
  for (size_t i = 0; i < u.size(); ++i)
    if (A.is_subset_of(u.zero_set(i))) out.push_back(i);
  return out;
}

std::vector<Poly> hold_set(const PointSet& A, const BoundedUniverse& u) {
  std::vector<Poly> out;
  for (size_t i : hold_set_indices(A, u)) out.push_back(u.poly(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> closure_indices(const std::vector<size_t>& T, const BoundedUniverse& u) {
  PointSet sol = PointSet::full(u.space().size());
  for (size_t i : T) sol = sol & u.zero_set(i);
  return hold_set_indices(sol, u);
}

std::vector<Poly> closure_eq(const std::vector<Poly>& T, const BoundedUniverse& u) {
  std::vector<size_t> idx;
  for (const auto& f : T) {
    auto i = u.index_of(f.domain().is_rationals()
                            ? f.to_domain(Domain::prime_field(u.space().field().p()))
                            : f);
    if (!i) fail("DomainMismatch", "equation '" + f.to_string() + "' outside the universe");
    idx.push_back(*i);
  }
  std::vector<Poly> out;
  for (size_t i : closure_indices(idx, u)) out.push_back(u.poly(i));
  std::sort(out.begin(), out.end());
  return out;
}

NetBasisResult net_finite_basis(const FamilyPresentation& T, const AffineSpace& space,
                                uint64_t scan_limit) {
  NetBasisResult res{.kept = {}, .solution = PointSet::full(space.size()), .scanned = 0};
  uint64_t i = T.start_index();
  while (T.in_range(i) && res.scanned < scan_limit) {
    PredFormula f = T.instantiate(i);
    ++res.scanned;
    PointSet s = solution_set_pred({f}, space);
    PointSet inter = res.solution & s;
    if (inter != res.solution) {
      res.kept.push_back(i);
      res.solution = inter;
    }
    if (res.solution.none()) break;
    ++i;
  }
  res.exhausted_family = !T.in_range(i);
  return res;
}

}  // namespace noet
