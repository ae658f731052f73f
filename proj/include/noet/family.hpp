#ifndef NOET_FAMILY_HPP
#define NOET_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noet/formula.hpp"

namespace noet {

// A countable formula family: an explicit finite list, or a template
// with an integer parameter instantiated on demand (the family is never
// materialized). Indices are 1-based for explicit lists and follow the
// declared range for templates.
class FamilyPresentation {
 public:
  static FamilyPresentation explicit_list(std::vector<PredFormula> formulas);
  static FamilyPresentation from_template(PredFormula templ, std::string param,
                                          uint64_t start, std::optional<uint64_t> end);

  // Family file: either formulas one per line, or a header line
  // "@family <param> in <start>..[<end>]" followed by one template
  // formula. Blank lines and lines starting with '#' are skipped.
  static FamilyPresentation parse_text(const std::string& text);
  static FamilyPresentation load(const std::string& path);

  PredFormula instantiate(uint64_t i) const;

  bool is_template() const { return is_template_; }
  uint64_t start_index() const { return start_; }
  // Last valid index; nullopt for an unbounded template.
  std::optional<uint64_t> end_index() const { return end_; }
  bool in_range(uint64_t i) const {
    return i >= start_ && (!end_ || i <= *end_);
  }

  // Union of free variables over the family (the template parameter is
  // not free; it is substituted away).
  std::set<std::string> free_vars() const;

 private:
  FamilyPresentation() = default;
  bool is_template_ = false;
  std::vector<PredFormula> list_;
  PredFormula template_;
  std::string param_;
  uint64_t start_ = 1;
  std::optional<uint64_t> end_;
};

}  // namespace noet

#endif
