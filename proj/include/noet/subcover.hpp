#ifndef NOET_SUBCOVER_HPP
#define NOET_SUBCOVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noet/pseudoaffine.hpp"

namespace noet {

// Reduced locus kinds tracked by the descent. RootLocus/Curve/ZeroDim
// mirror the proof's dimension ladder; Fiber and Point are the
// coordinate-splitting stages that resolve a ZeroDim leftover.
struct Region {
  enum class Kind { RootLocus, Curve, ZeroDim, Fiber, Point };
  Kind kind;
  Poly locus;                              // RootLocus/Curve: squarefree locus; ZeroDim/Fiber: primary poly
  Poly second;                             // ZeroDim: the coprime companion
  std::string fixed_var;                   // Fiber: coordinate held fixed
  Rational fixed_value;                    // Fiber
  std::string free_var;                    // Fiber: remaining coordinate
  std::map<std::string, Rational> point;   // Point

  int degree() const;
  std::string describe() const;
};

struct TraceStep {
  std::string region;
  std::optional<uint64_t> candidate_index;  // premise index; empty for goal pieces
  bool candidate_is_goal = false;
  int degree_before = 0;
  int degree_after = 0;
};

struct SubcoverReport {
  enum class Status { Ok, NotCoveredWithin, UnsupportedInstance };
  Status status = Status::NotCoveredWithin;
  std::vector<uint64_t> indices;  // J, ascending, premise indices only
  bool goal_used = false;
  std::vector<TraceStep> trace;
  std::string detail;  // failure explanation, empty on Ok
  std::optional<std::map<std::string, Rational>> uncovered_example;
  size_t dimension = 1;
  uint64_t scan_limit = 0;
  bool family_exhausted = false;  // some scan saw the family end
};

// Theorem 3 descent for n <= 2: find finitely many pieces covering
// affine n-space over every algebraically closed field of characteristic
// 0, by dense-piece search and locus splitting. scan_limit bounds the
// candidates examined per scan.
SubcoverReport extract_subcover(const CoverFamily& family, size_t n, uint64_t scan_limit);

// Every piece with premise index in J, plus (optionally) the goal
// pieces. Scanning stops once premise indices pass max(J).
std::vector<PseudoaffineVariety> collect_pieces(const CoverFamily& family,
                                                const std::vector<uint64_t>& J,
                                                bool include_goal, uint64_t pull_bound);

// Exact n = 1 soundness check, independent of the descent: the chosen
// pieces' symbolic remainder must be empty. Fills `why` on failure.
bool verify_subcover_exact_1d(const std::vector<PseudoaffineVariety>& chosen,
                              std::string* why = nullptr);

struct SampleReport {
  uint64_t p = 0;
  uint64_t seed = 0;
  uint64_t requested_samples = 0;
  bool exhaustive = false;  // all p^n points were enumerated instead
  uint64_t checked = 0;
  std::vector<std::vector<uint64_t>> uncovered;  // at most 100 exhibits
  uint64_t uncovered_count = 0;
};

// Statistical oracle: sample points of F_p^n (or enumerate all of them
// when samples >= p^n) and report every point no chosen piece contains.
SampleReport verify_cover_sample(const std::vector<PseudoaffineVariety>& chosen, size_t n,
                                 uint64_t p, uint64_t samples, uint64_t seed,
                                 bool parallel = true);

}  // namespace noet

#endif
