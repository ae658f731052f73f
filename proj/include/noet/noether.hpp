#ifndef NOET_NOETHER_HPP
#define NOET_NOETHER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noet/family.hpp"
#include "noet/qelim.hpp"
#include "noet/subcover.hpp"

namespace noet {

struct PremiseQeEntry {
  uint64_t index = 0;
  std::string eliminated_to;  // rendered quantifier-free result
  size_t clause_count = 0;    // CNF clauses it contributes to the cover
};

// Machine-checkable outcome of a noetherianity check: which finite index
// set was used, the witness point (for refutations), and per-premise
// verification results. Every reported witness is verified exactly
// before it is returned.
struct WitnessReport {
  std::string check;
  std::string status;  // "ok" | "not_covered_within" | "unsupported_instance"
  std::vector<uint64_t> indices;
  std::map<std::string, Rational> witness;
  struct PremiseResult {
    uint64_t index = 0;
    bool holds = false;
    std::string note;
  };
  std::vector<PremiseResult> premise_results;
  std::vector<std::string> notes;
  std::optional<SubcoverReport> subcover;
  std::vector<PremiseQeEntry> premise_qe;

  bool ok() const { return status == "ok"; }
};

// Theorem 1 witness: a rational x outside {a_j : j in J}, refuting the
// finite implication (and_j x != a_j) => 1 = 0 while the full infinite
// implication holds. Chosen as max + 1 for determinism.
WitnessReport lognet_refute_infinite(const std::vector<Rational>& enumeration,
                                     const std::vector<uint64_t>& J);

// Premise of the Theorem 2 family at index i: does there exist a real y
// with i(x^2 + y^2) = 1? Decided exactly: solvable iff 1/i - x^2 >= 0.
bool dennet_r_premise_holds(uint64_t i, const Rational& x);

// Theorem 2 witness: x = 1/(max J + 1) != 0 satisfies every premise in
// J over the reals, refuting the finite implication; the countable
// implication forces x = 0.
WitnessReport dennet_r_witness(const std::vector<uint64_t>& J);

// Theorem 4 pipeline: eliminate quantifiers from every instantiated
// premise and the goal, transform the implication into a cover, and run
// the Theorem 3 descent; the chosen pieces map back to premise indices.
WitnessReport dennet_acf_check(const FamilyPresentation& premises, const PredFormula& goal,
                               uint64_t scan_limit, const QelimBudget& budget = {});

// Corollary pipeline (propositional): the same without the elimination
// stage.
WitnessReport dennet0_check(const FamilyPresentation& premises, const PropFormula& goal,
                            uint64_t scan_limit, const FormulaBudget& budget = {});

}  // namespace noet

#endif
