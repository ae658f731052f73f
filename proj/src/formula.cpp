#include "noet/formula.hpp"

#include <algorithm>
#include <sstream>

namespace noet {

struct PropFormula::Node {
  Kind kind;
  Equation eq;                      // Atom
  std::vector<PropFormula> kids;    // Not/And/Or
};

namespace {

std::shared_ptr<const PropFormula::Node> make_node(PropFormula::Kind k, Equation eq,
                                                   std::vector<PropFormula> kids) {
  auto n = std::make_shared<PropFormula::Node>();
  n->kind = k;
  n->eq = std::move(eq);
  n->kids = std::move(kids);
  return n;
}

}  // namespace

PropFormula PropFormula::tru() {
  static const PropFormula t{make_node(Kind::True, {}, {})};
  return t;
}

PropFormula PropFormula::fls() {
  static const PropFormula f{make_node(Kind::False, {}, {})};
  return f;
}

PropFormula PropFormula::atom(Equation eq) {
  return PropFormula{make_node(Kind::Atom, std::move(eq), {})};
}

PropFormula PropFormula::negation(PropFormula f) {
  switch (f.kind()) {
    case Kind::True:
      return fls();
    case Kind::False:
      return tru();
    case Kind::Not:
      return f.children().front();
    default:
      return PropFormula{make_node(Kind::Not, {}, {std::move(f)})};
  }
}

PropFormula PropFormula::conj(std::vector<PropFormula> kids) {
  if (kids.empty()) fail("ArityError", "conjunction needs at least one operand");
  std::vector<PropFormula> flat;
  for (auto& k : kids) {
    switch (k.kind()) {
      case Kind::True:
        break;
      case Kind::False:
        return fls();
      case Kind::And:
        for (const auto& c : k.children()) flat.push_back(c);
        break;
      default:
        flat.push_back(std::move(k));
    }
  }
  if (flat.empty()) return tru();
  if (flat.size() == 1) return flat.front();
  return PropFormula{make_node(Kind::And, {}, std::move(flat))};
}

PropFormula PropFormula::disj(std::vector<PropFormula> kids) {
  if (kids.empty()) fail("ArityError", "disjunction needs at least one operand");
  std::vector<PropFormula> flat;
  for (auto& k : kids) {
    switch (k.kind()) {
      case Kind::False:
        break;
      case Kind::True:
        return tru();
      case Kind::Or:
        for (const auto& c : k.children()) flat.push_back(c);
        break;
      default:
        flat.push_back(std::move(k));
    }
  }
  if (flat.empty()) return fls();
  if (flat.size() == 1) return flat.front();
  return PropFormula{make_node(Kind::Or, {}, std::move(flat))};
}

PropFormula::Kind PropFormula::kind() const { return node_->kind; }

const Equation& PropFormula::equation() const {
  if (kind() != Kind::Atom) fail("ArityError", "equation() on a non-atom");
  return node_->eq;
}

const std::vector<PropFormula>& PropFormula::children() const { return node_->kids; }

bool PropFormula::operator==(const PropFormula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return equation() == o.equation();
    default: {
      const auto& a = children();
      const auto& b = o.children();
      if (a.size() != b.size()) return false;
      for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    }
  }
}

std::set<std::string> PropFormula::free_vars() const {
  std::set<std::string> out;
  switch (kind()) {
    case Kind::Atom:
      for (const auto& v : equation().poly.vars()) out.insert(v);
      break;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
      for (const auto& k : children()) {
        auto sub = k.free_vars();
        out.insert(sub.begin(), sub.end());
      }
      break;
    default:
      break;
  }
  return out;
}

size_t PropFormula::node_count() const {
  size_t n = 1;
  if (kind() == Kind::Not || kind() == Kind::And || kind() == Kind::Or)
    for (const auto& k : children()) n += k.node_count();
  return n;
}

bool PropFormula::eval_at(const std::map<std::string, Rational>& point) const {
  switch (kind()) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return equation().poly.eval(point).is_zero();
    case Kind::Not:
      return !children().front().eval_at(point);
    case Kind::And:
      for (const auto& k : children())
        if (!k.eval_at(point)) return false;
      return true;
    case Kind::Or:
      for (const auto& k : children())
        if (k.eval_at(point)) return true;
      return false;
  }
  return false;
}

std::string PropFormula::to_string() const {
  switch (kind()) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Atom:
      return equation().poly.to_string() + " = 0";
    case Kind::Not: {
      const PropFormula& k = children().front();
      if (k.kind() == Kind::Atom) return k.equation().poly.to_string() + " != 0";
      return "!(" + k.to_string() + ")";
    }
    case Kind::And: {
      std::ostringstream os;
      bool first = true;
      for (const auto& k : children()) {
        if (!first) os << " & ";
        first = false;
        if (k.kind() == Kind::Or)
          os << "(" << k.to_string() << ")";
        else
          os << k.to_string();
      }
      return os.str();
    }
    case Kind::Or: {
      std::ostringstream os;
      bool first = true;
      for (const auto& k : children()) {
        if (!first) os << " | ";
        first = false;
        os << k.to_string();
      }
      return os.str();
    }
  }
  return "";
}

PredFormula::PredFormula(std::vector<QuantifierEntry> prefix, PropFormula matrix)
    : prefix_(std::move(prefix)), matrix_(std::move(matrix)) {
  std::set<std::string> seen;
  auto matrix_vars = matrix_.free_vars();
  for (const auto& e : prefix_) {
    if (!seen.insert(e.var).second)
      fail("ArityError", "bound variable '" + e.var + "' repeats in the prefix");
  }
}

std::set<std::string> PredFormula::free_vars() const {
  auto vars = matrix_.free_vars();
  for (const auto& e : prefix_) vars.erase(e.var);
  return vars;
}

std::set<std::string> PredFormula::bound_vars() const {
  std::set<std::string> out;
  for (const auto& e : prefix_) out.insert(e.var);
  return out;
}

std::string PredFormula::to_string() const {
  std::ostringstream os;
  for (const auto& e : prefix_)
    os << (e.quant == Quant::Exists ? "exists " : "forall ") << e.var << ". ";
  os << matrix_.to_string();
  return os.str();
}

PropFormula literal_to_formula(const SignedLiteral& lit) {
  PropFormula a = PropFormula::atom(lit.poly);
  return lit.negated ? PropFormula::negation(a) : a;
}

PropFormula conjunction_of(const std::vector<SignedLiteral>& lits) {
  if (lits.empty()) return PropFormula::tru();
  std::vector<PropFormula> kids;
  kids.reserve(lits.size());
  for (const auto& l : lits) kids.push_back(literal_to_formula(l));
  return PropFormula::conj(std::move(kids));
}

}  // namespace noet
