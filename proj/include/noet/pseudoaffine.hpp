#ifndef NOET_PSEUDOAFFINE_HPP
#define NOET_PSEUDOAFFINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "noet/family.hpp"
#include "noet/formula.hpp"

namespace noet {

// Finite conjunction of signed equation literals: all of P vanish, none
// of N vanish. Polynomials are over Q; the ambient variable list fixes
// the affine space the piece lives in.
struct PseudoaffineVariety {
  std::vector<Poly> positive;  // p = 0
  std::vector<Poly> negated;   // q != 0
  std::vector<std::string> ambient;

  std::string to_string() const;  // literal-conjunction text, "true" for the whole space
  bool operator==(const PseudoaffineVariety& o) const {
    return positive == o.positive && negated == o.negated && ambient == o.ambient;
  }
};

// f must be True or a conjunction of signed literals. The ambient list
// defaults to the variables occurring in f.
PseudoaffineVariety to_pseudoaffine(const PropFormula& f,
                                    std::vector<std::string> ambient = {});

// True iff the piece is a nonempty Zariski-open set: no effective
// equation constraints and no identically-zero inequation.
bool is_dense_fullspace(const PseudoaffineVariety& v, size_t n);

// Exact membership of a rational point.
bool membership(const PseudoaffineVariety& v, const std::map<std::string, Rational>& point);

struct CoverProvenance {
  enum class Kind { Premise, Goal };
  Kind kind = Kind::Premise;
  uint64_t premise_index = 0;  // meaningful for Kind::Premise
  size_t part = 0;             // clause / disjunct ordinal within its source
};

struct CoverPiece {
  PseudoaffineVariety variety;
  CoverProvenance prov;
};

// Re-instantiable lazy sequence of cover pieces; several cursors may
// run concurrently, each with independent state.
class CoverFamily {
 public:
  class Cursor {
   public:
    virtual ~Cursor() = default;
    virtual std::optional<CoverPiece> next() = 0;
  };

  virtual ~CoverFamily() = default;
  virtual std::unique_ptr<Cursor> scan() const = 0;
  virtual const std::vector<std::string>& ambient() const = 0;
};

// Cover pieces read from a formula family: member i must be a
// quantifier-free literal conjunction and becomes piece i.
class FormulaFamilyCover : public CoverFamily {
 public:
  explicit FormulaFamilyCover(FamilyPresentation fam);
  std::unique_ptr<Cursor> scan() const override;
  const std::vector<std::string>& ambient() const override { return ambient_; }
  const FamilyPresentation& family() const { return fam_; }

 private:
  FamilyPresentation fam_;
  std::vector<std::string> ambient_;
};

// Fixed list of pieces (used by tests and internal replays).
class PieceListCover : public CoverFamily {
 public:
  PieceListCover(std::vector<CoverPiece> pieces, std::vector<std::string> ambient)
      : pieces_(std::move(pieces)), ambient_(std::move(ambient)) {}
  std::unique_ptr<Cursor> scan() const override;
  const std::vector<std::string>& ambient() const override { return ambient_; }

 private:
  std::vector<CoverPiece> pieces_;
  std::vector<std::string> ambient_;
};

// Maps an instantiated premise to the quantifier-free formula whose
// negated CNF clauses become cover pieces. The default rejects
// quantified premises; quantifier elimination is plugged in here.
using PremiseTransform = std::function<PropFormula(const PredFormula&, uint64_t index)>;

// The implication-to-cover transformation: the implication
// (and_i premise_i) => goal holds over a field iff the emitted pieces
// cover affine space. Goal DNF disjuncts are emitted first (the goal is
// a single formula, so its pieces are finitely many), then premise
// pieces in index order, one per CNF clause, negated.
class ImplicationCoverFamily : public CoverFamily {
 public:
  // premise_scan_limit bounds how many family members a single cursor
  // will instantiate; a cursor whose premises stop producing pieces
  // (e.g. every one eliminates to True) ends instead of spinning.
  ImplicationCoverFamily(FamilyPresentation premises, PropFormula goal,
                         FormulaBudget budget = {}, PremiseTransform transform = {},
                         uint64_t premise_scan_limit = 10000);
  std::unique_ptr<Cursor> scan() const override;
  const std::vector<std::string>& ambient() const override { return ambient_; }

 private:
  FamilyPresentation premises_;
  std::vector<std::vector<SignedLiteral>> goal_disjuncts_;
  FormulaBudget budget_;
  PremiseTransform transform_;
  uint64_t premise_scan_limit_;
  std::vector<std::string> ambient_;
};

std::unique_ptr<CoverFamily> implication_to_cover(FamilyPresentation premises,
                                                  PropFormula goal,
                                                  FormulaBudget budget = {},
                                                  PremiseTransform transform = {},
                                                  uint64_t premise_scan_limit = 10000);

}  // namespace noet

#endif
