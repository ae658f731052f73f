#ifndef NOET_GALOIS_HPP
#define NOET_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noet/family.hpp"
#include "noet/formula.hpp"
#include "noet/kernels.hpp"

namespace noet {

// Degree-bounded candidate universe: every polynomial over F_p in the
// space's variables with total degree <= degree, enumerated in a fixed
// order (coefficient digits base p over the graded monomial list), with
// the zero set of each candidate precomputed.
class BoundedUniverse {
 public:
  BoundedUniverse(AffineSpace space, uint32_t degree, bool parallel = true);

  const AffineSpace& space() const { return space_; }
  uint32_t degree() const { return degree_; }
  size_t size() const { return polys_.size(); }
  const std::vector<Poly>& polys() const { return polys_; }
  const Poly& poly(size_t i) const { return polys_[i]; }
  const PointSet& zero_set(size_t i) const { return zero_sets_[i]; }
  std::optional<size_t> index_of(const Poly& f) const;

 private:
  AffineSpace space_;
  uint32_t degree_;
  std::vector<Poly> polys_;
  std::vector<PointSet> zero_sets_;
};

// Points satisfying every formula in T (all quantifier-free).
PointSet solution_set(const std::vector<PropFormula>& T, const AffineSpace& space,
                      bool parallel = true);

// Predicate-formula truth over the finite field by direct quantifier
// expansion, and the corresponding solution set.
bool eval_pred_over_fp(const PredFormula& f, const AffineSpace& space,
                       const std::vector<uint64_t>& point);
PointSet solution_set_pred(const std::vector<PredFormula>& T, const AffineSpace& space);

// { f in universe : f vanishes on every point of A }, as indices and as
// sorted polynomials.
std::vector<size_t> hold_set_indices(const PointSet& A, const BoundedUniverse& u);
std::vector<Poly> hold_set(const PointSet& A, const BoundedUniverse& u);

// closure_eq(T) = hold_set(solution_set(T)) within the universe.
std::vector<size_t> closure_indices(const std::vector<size_t>& T, const BoundedUniverse& u);
std::vector<Poly> closure_eq(const std::vector<Poly>& T, const BoundedUniverse& u);

struct NetBasisResult {
  std::vector<uint64_t> kept;  // indices into the family, ascending
  PointSet solution;           // common solution set of the whole scanned family
  uint64_t scanned = 0;
  bool exhausted_family = false;  // scanned to the family's end
};

// Greedy finite-basis extraction: scan the family in order, keep a
// formula iff it strictly shrinks the running solution set; stop when
// the family ends, the running set is empty, or scan_limit members have
// been read.
NetBasisResult net_finite_basis(const FamilyPresentation& T, const AffineSpace& space,
                                uint64_t scan_limit = 1000);

}  // namespace noet

#endif
