#include "noet/pseudoaffine.hpp"

#include <algorithm>
#include <sstream>

namespace noet {

std::string PseudoaffineVariety::to_string() const {
  if (positive.empty() && negated.empty()) return "true";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : positive) {
    if (!first) os << " & ";
    first = false;
    os << p.to_string() << " = 0";
  }
  for (const auto& q : negated) {
    if (!first) os << " & ";
    first = false;
    os << q.to_string() << " != 0";
  }
  return os.str();
}

PseudoaffineVariety to_pseudoaffine(const PropFormula& f, std::vector<std::string> ambient) {
  PseudoaffineVariety v;
  if (ambient.empty()) {
    auto vars = f.free_vars();
    ambient.assign(vars.begin(), vars.end());
  }
  v.ambient = std::move(ambient);
  if (f.is_true()) return v;
  std::vector<std::vector<SignedLiteral>> disjuncts;
  try {
    disjuncts = dnf_disjuncts(f);
  } catch (const Error&) {
    fail("NotLiteralConjunction", "not a conjunction of literals: " + f.to_string());
  }
  if (disjuncts.size() != 1)
    fail("NotLiteralConjunction", "not a conjunction of literals: " + f.to_string());
  for (const auto& lit : disjuncts.front())
    (lit.negated ? v.negated : v.positive).push_back(lit.poly);
  return v;
}

bool is_dense_fullspace(const PseudoaffineVariety& v, size_t n) {
  (void)n;
  for (const auto& p : v.positive)
    if (!p.is_zero()) return false;
  for (const auto& q : v.negated)
    if (q.is_zero()) return false;
  return true;
}

bool membership(const PseudoaffineVariety& v, const std::map<std::string, Rational>& point) {
  for (const auto& var : v.ambient)
    if (!point.count(var)) fail("DomainMismatch", "point misses coordinate '" + var + "'");
  for (const auto& p : v.positive)
    if (!p.eval(point).is_zero()) return false;
  for (const auto& q : v.negated)
    if (q.eval(point).is_zero()) return false;
  return true;
}

namespace {

std::vector<std::string> sorted_vars(const std::set<std::string>& s) {
  return {s.begin(), s.end()};
}

PseudoaffineVariety piece_from_literals(const std::vector<SignedLiteral>& lits, bool negate,
                                        const std::vector<std::string>& ambient) {
  PseudoaffineVariety v;
  v.ambient = ambient;
  for (const auto& lit : lits) {
    bool negated = negate ? !lit.negated : lit.negated;
    (negated ? v.negated : v.positive).push_back(lit.poly);
  }
  return v;
}

}  // namespace

// ---- FormulaFamilyCover ----

FormulaFamilyCover::FormulaFamilyCover(FamilyPresentation fam) : fam_(std::move(fam)) {
  ambient_ = sorted_vars(fam_.free_vars());
}

namespace {

class FamilyCursor : public CoverFamily::Cursor {
 public:
  FamilyCursor(const FormulaFamilyCover* owner) : owner_(owner), i_(owner->family().start_index()) {}

  std::optional<CoverPiece> next() override {
    const auto& fam = owner_->family();
    if (!fam.in_range(i_)) return std::nullopt;
    PredFormula f = fam.instantiate(i_);
    if (!f.is_quantifier_free())
      fail("NotLiteralConjunction", "cover piece " + std::to_string(i_) + " is quantified");
    CoverPiece piece{to_pseudoaffine(f.matrix(), owner_->ambient()),
                     {CoverProvenance::Kind::Premise, i_, 0}};
    ++i_;
    return piece;
  }

 private:
  const FormulaFamilyCover* owner_;
  uint64_t i_;
};

}  // namespace

std::unique_ptr<CoverFamily::Cursor> FormulaFamilyCover::scan() const {
  return std::make_unique<FamilyCursor>(this);
}

std::unique_ptr<CoverFamily::Cursor> PieceListCover::scan() const {
  class ListCursor : public Cursor {
   public:
    explicit ListCursor(const std::vector<CoverPiece>* ps) : ps_(ps) {}
    std::optional<CoverPiece> next() override {
      if (i_ >= ps_->size()) return std::nullopt;
      return (*ps_)[i_++];
    }

   private:
    const std::vector<CoverPiece>* ps_;
    size_t i_ = 0;
  };
  return std::make_unique<ListCursor>(&pieces_);
}

// ---- ImplicationCoverFamily ----

ImplicationCoverFamily::ImplicationCoverFamily(FamilyPresentation premises, PropFormula goal,
                                               FormulaBudget budget, PremiseTransform transform,
                                               uint64_t premise_scan_limit)
    : premises_(std::move(premises)),
      budget_(budget),
      transform_(std::move(transform)),
      premise_scan_limit_(premise_scan_limit) {
  goal_disjuncts_ = dnf_disjuncts(to_dnf(goal, budget_));
  std::set<std::string> vars = premises_.free_vars();
  auto gv = goal.free_vars();
  vars.insert(gv.begin(), gv.end());
  ambient_ = sorted_vars(vars);
}

namespace {

class ImplicationCursor : public CoverFamily::Cursor {
 public:
  ImplicationCursor(const ImplicationCoverFamily* owner, const FamilyPresentation* premises,
                    const std::vector<std::vector<SignedLiteral>>* goal,
                    const FormulaBudget* budget, const PremiseTransform* transform,
                    uint64_t pull_limit)
      : owner_(owner),
        premises_(premises),
        goal_(goal),
        budget_(budget),
        transform_(transform),
        pull_limit_(pull_limit),
        premise_index_(premises->start_index()) {}

  std::optional<CoverPiece> next() override {
    if (goal_part_ < goal_->size()) {
      CoverPiece piece{piece_from_literals((*goal_)[goal_part_], false, owner_->ambient()),
                       {CoverProvenance::Kind::Goal, 0, goal_part_}};
      ++goal_part_;
      return piece;
    }
    while (clause_part_ >= clauses_.size()) {
      if (!premises_->in_range(premise_index_) || pulls_ >= pull_limit_) return std::nullopt;
      ++pulls_;
      PredFormula f = premises_->instantiate(premise_index_);
      PropFormula qf;
      if (*transform_) {
        qf = (*transform_)(f, premise_index_);
      } else if (f.is_quantifier_free()) {
        qf = f.matrix();
      } else {
        fail("NotQuantifierFree",
             "premise " + std::to_string(premise_index_) + " is quantified");
      }
      clauses_ = cnf_clauses(to_cnf(qf, *budget_));
      clause_part_ = 0;
      current_premise_ = premise_index_;
      ++premise_index_;
    }
    CoverPiece piece{piece_from_literals(clauses_[clause_part_], true, owner_->ambient()),
                     {CoverProvenance::Kind::Premise, current_premise_, clause_part_}};
    ++clause_part_;
    return piece;
  }

 private:
  const ImplicationCoverFamily* owner_;
  const FamilyPresentation* premises_;
  const std::vector<std::vector<SignedLiteral>>* goal_;
  const FormulaBudget* budget_;
  const PremiseTransform* transform_;
  uint64_t pull_limit_;
  uint64_t pulls_ = 0;
  size_t goal_part_ = 0;
  uint64_t premise_index_;
  uint64_t current_premise_ = 0;
  std::vector<std::vector<SignedLiteral>> clauses_;
  size_t clause_part_ = 0;
};

}  // namespace

std::unique_ptr<CoverFamily::Cursor> ImplicationCoverFamily::scan() const {
  return std::make_unique<ImplicationCursor>(this, &premises_, &goal_disjuncts_, &budget_,
                                             &transform_, premise_scan_limit_);
}

std::unique_ptr<CoverFamily> implication_to_cover(FamilyPresentation premises, PropFormula goal,
                                                  FormulaBudget budget, PremiseTransform transform,
                                                  uint64_t premise_scan_limit) {
  return std::make_unique<ImplicationCoverFamily>(std::move(premises), std::move(goal), budget,
                                                  std::move(transform), premise_scan_limit);
}

}  // namespace noet
