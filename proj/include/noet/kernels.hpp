#ifndef NOET_KERNELS_HPP
#define NOET_KERNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "noet/formula.hpp"
#include "noet/poly.hpp"
#include "noet/prime_field.hpp"

namespace noet {

// Prime-field affine space F_p^X with explicit point indexing (mixed
// radix, base p, variable order = sorted names). Capped at 10^6 points.
class AffineSpace {
 public:
  AffineSpace(PrimeField field, std::vector<std::string> vars);

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  uint64_t size() const { return size_; }

  void decode(uint64_t index, uint64_t* out) const {
    for (size_t i = 0; i < vars_.size(); ++i) {
      out[i] = index % field_.p();
      index /= field_.p();
    }
  }
  std::vector<uint64_t> decode(uint64_t index) const {
    std::vector<uint64_t> pt(vars_.size());
    decode(index, pt.data());
    return pt;
  }
  uint64_t encode(const std::vector<uint64_t>& pt) const {
    uint64_t idx = 0;
    for (size_t i = pt.size(); i-- > 0;) idx = idx * field_.p() + pt[i];
    return idx;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  uint64_t size_;
};

// Explicit point set of an affine space, as a bit set over point indices.
class PointSet {
 public:
  explicit PointSet(uint64_t n_points)
      : n_(n_points), words_((n_points + 63) / 64, 0) {}
  static PointSet full(uint64_t n_points);

  uint64_t size_points() const { return n_; }
  bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(uint64_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }

  uint64_t count() const;
  bool none() const;
  std::vector<uint64_t> indices() const;

  PointSet operator&(const PointSet& o) const;
  PointSet operator|(const PointSet& o) const;
  PointSet complement() const;
  bool is_subset_of(const PointSet& o) const;
  bool operator==(const PointSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  std::vector<uint64_t>& words() { return words_; }
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint64_t n_;
  std::vector<uint64_t> words_;
};

// Polynomial compiled for repeated mod-p evaluation: flat term array
// against a fixed variable ordering.
struct FpPoly {
  uint32_t nvars = 0;
  std::vector<uint64_t> coeffs;
  std::vector<uint32_t> exps;  // nvars entries per term

  static FpPoly compile(const Poly& p, const PrimeField& field,
                        const std::vector<std::string>& vars);
  uint64_t eval(const uint64_t* point, const PrimeField& field) const;
};

// Quantifier-free formula compiled to a postfix program over an atom
// table, for the point-scan kernels.
struct FpFormula {
  enum class Op : uint8_t { PushTrue, PushFalse, PushAtom, Not, And, Or };
  struct Instr {
    Op op;
    uint32_t arg = 0;  // atom id for PushAtom, arity for And/Or
  };
  std::vector<Instr> program;
  std::vector<FpPoly> atoms;

  static FpFormula compile(const PropFormula& f, const PrimeField& field,
                           const std::vector<std::string>& vars);
  bool eval(const uint64_t* point, const PrimeField& field) const;
};

// A pseudoaffine piece compiled mod p.
struct FpPiece {
  std::vector<FpPoly> positive;
  std::vector<FpPoly> negated;
  bool contains(const uint64_t* point, const PrimeField& field) const;
};

// ---- scan kernels ----
//
// Each kernel has a serial reference and an OpenMP variant writing
// disjoint 64-point words; results are schedule-independent and the
// tests assert serial == parallel. `parallel` selects the variant.

PointSet scan_formula_serial(const AffineSpace& space, const FpFormula& f);
PointSet scan_formula_parallel(const AffineSpace& space, const FpFormula& f);
PointSet scan_formula(const AffineSpace& space, const FpFormula& f, bool parallel = true);

std::vector<PointSet> zero_table_serial(const AffineSpace& space,
                                        const std::vector<FpPoly>& candidates);
std::vector<PointSet> zero_table_parallel(const AffineSpace& space,
                                          const std::vector<FpPoly>& candidates);
std::vector<PointSet> zero_table(const AffineSpace& space, const std::vector<FpPoly>& candidates,
                                 bool parallel = true);

// Flags (one per sample point) marking points covered by no piece.
std::vector<uint8_t> uncovered_flags_serial(const std::vector<FpPiece>& pieces,
                                            const std::vector<uint64_t>& flat_points,
                                            size_t nvars, const PrimeField& field);
std::vector<uint8_t> uncovered_flags_parallel(const std::vector<FpPiece>& pieces,
                                              const std::vector<uint64_t>& flat_points,
                                              size_t nvars, const PrimeField& field);
std::vector<uint8_t> uncovered_flags(const std::vector<FpPiece>& pieces,
                                     const std::vector<uint64_t>& flat_points, size_t nvars,
                                     const PrimeField& field, bool parallel = true);

}  // namespace noet

#endif
