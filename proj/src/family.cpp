#include "noet/family.hpp"

#include <fstream>
#include <sstream>

namespace noet {

namespace {

PropFormula substitute_in_formula(const PropFormula& f, const std::string& var,
                                  const Rational& value) {
  switch (f.kind()) {
    case PropFormula::Kind::True:
    case PropFormula::Kind::False:
      return f;
    case PropFormula::Kind::Atom:
      return PropFormula::atom(f.equation().poly.substitute(var, value));
    case PropFormula::Kind::Not:
      return PropFormula::negation(
          substitute_in_formula(f.children().front(), var, value));
    case PropFormula::Kind::And:
    case PropFormula::Kind::Or: {
      std::vector<PropFormula> kids;
      kids.reserve(f.children().size());
      for (const auto& k : f.children()) kids.push_back(substitute_in_formula(k, var, value));
      return f.kind() == PropFormula::Kind::And ? PropFormula::conj(std::move(kids))
                                                : PropFormula::disj(std::move(kids));
    }
  }
  return f;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

FamilyPresentation FamilyPresentation::explicit_list(std::vector<PredFormula> formulas) {
  FamilyPresentation f;
  f.is_template_ = false;
  f.list_ = std::move(formulas);
  f.start_ = 1;
  f.end_ = f.list_.size();
  return f;
}

FamilyPresentation FamilyPresentation::from_template(PredFormula templ, std::string param,
                                                     uint64_t start,
                                                     std::optional<uint64_t> end) {
  if (templ.bound_vars().count(param))
    fail("ArityError", "family parameter '" + param + "' is quantified in the template");
  if (end && *end < start) fail("IndexOutOfRange", "empty template range");
  FamilyPresentation f;
  f.is_template_ = true;
  f.template_ = std::move(templ);
  f.param_ = std::move(param);
  f.start_ = start;
  f.end_ = end;
  return f;
}

FamilyPresentation FamilyPresentation::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    lines.push_back(s);
  }
  if (lines.empty()) fail("SyntaxError", "empty family file");
  if (lines[0].rfind("@family", 0) == 0) {
    std::istringstream hdr(lines[0].substr(7));
    std::string param, kw, range;
    hdr >> param >> kw >> range;
    if (param.empty() || kw != "in" || range.empty())
      fail("SyntaxError", "bad family header '" + lines[0] + "' (want @family i in 1..)");
    auto dots = range.find("..");
    if (dots == std::string::npos)
      fail("SyntaxError", "bad family range '" + range + "'");
    uint64_t start = std::stoull(range.substr(0, dots));
    std::optional<uint64_t> end;
    std::string tail = range.substr(dots + 2);
    if (!tail.empty()) end = std::stoull(tail);
    if (lines.size() != 2)
      fail("SyntaxError", "a template family needs exactly one template formula");
    return from_template(parse_formula(lines[1]), param, start, end);
  }
  std::vector<PredFormula> fs;
  fs.reserve(lines.size());
  for (const auto& l : lines) fs.push_back(parse_formula(l));
  return explicit_list(std::move(fs));
}

FamilyPresentation FamilyPresentation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open family file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

PredFormula FamilyPresentation::instantiate(uint64_t i) const {
  if (!in_range(i))
    fail("IndexOutOfRange", "index " + std::to_string(i) + " outside the family range");
  if (!is_template_) return list_[i - 1];
  Rational value(Int(static_cast<unsigned long>(i)));
  return PredFormula(template_.prefix(),
                     substitute_in_formula(template_.matrix(), param_, value));
}

std::set<std::string> FamilyPresentation::free_vars() const {
  std::set<std::string> out;
  if (is_template_) {
    out = template_.free_vars();
    out.erase(param_);
    return out;
  }
  for (const auto& f : list_) {
    auto sub = f.free_vars();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

}  // namespace noet
