#include <cctype>
#include <optional>

#include "noet/formula.hpp"

namespace noet {

namespace {

enum class Tok {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  Caret,
  Eq,
  Neq,
  Bang,
  Amp,
  Pipe,
  Arrow,
  LParen,
  RParen,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "true" || s == "false";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  size_t checkpoint() const { return next_; }
  const Token& current_token() const { return cur_; }
  void rewind(size_t cp, const Token& tok) {
    next_ = cp;
    cur_ = tok;
  }

 private:
  void advance() {
    while (next_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[next_]))) ++next_;
    size_t start = next_;
    if (next_ >= text_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = text_[next_];
    auto one = [&](Tok k) {
      ++next_;
      cur_ = {k, std::string(1, c), start};
    };
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t e = next_;
      while (e < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[e])) ||
              std::isdigit(static_cast<unsigned char>(text_[e]))))
        ++e;
      cur_ = {Tok::Ident, text_.substr(next_, e - next_), start};
      next_ = e;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t e = next_;
      while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
      // a/b rational literal (no spaces around the slash)
      if (e < text_.size() && text_[e] == '/' && e + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[e + 1]))) {
        ++e;
        while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
      }
      cur_ = {Tok::Number, text_.substr(next_, e - next_), start};
      next_ = e;
      return;
    }
    switch (c) {
      case '+':
        one(Tok::Plus);
        return;
      case '-':
        if (next_ + 1 < text_.size() && text_[next_ + 1] == '>') {
          next_ += 2;
          cur_ = {Tok::Arrow, "->", start};
          return;
        }
        one(Tok::Minus);
        return;
      case '*':
        one(Tok::Star);
        return;
      case '^':
        one(Tok::Caret);
        return;
      case '=':
        one(Tok::Eq);
        return;
      case '!':
        if (next_ + 1 < text_.size() && text_[next_ + 1] == '=') {
          next_ += 2;
          cur_ = {Tok::Neq, "!=", start};
          return;
        }
        one(Tok::Bang);
        return;
      case '&':
        one(Tok::Amp);
        return;
      case '|':
        one(Tok::Pipe);
        return;
      case '(':
        one(Tok::LParen);
        return;
      case ')':
        one(Tok::RParen);
        return;
      case '.':
        one(Tok::Dot);
        return;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  size_t next_ = 0;
  Token cur_{Tok::End, "", 0};
};

// Parse tree before prenex conversion; quantifiers may sit anywhere.
struct PNode {
  enum K { True, False, Atom, Not, And, Or, Exists, Forall } k;
  Poly atom;
  std::vector<PNode> kids;
  std::string var;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  PNode parse_formula_top() {
    PNode f = implication();
    expect_end();
    return f;
  }

  Poly parse_poly_top() {
    Poly p = polyexpr();
    expect_end();
    return p;
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw SyntaxError(lex_.peek().pos, "unexpected trailing input '" + lex_.peek().text + "'");
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k)
      throw SyntaxError(lex_.peek().pos, "expected " + what + ", got '" + lex_.peek().text + "'");
    return lex_.take();
  }

  PNode implication() {
    PNode lhs = disjunct();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      PNode rhs = implication();  // right associative
      PNode neg{PNode::Not, {}, {std::move(lhs)}, ""};
      return PNode{PNode::Or, {}, {std::move(neg), std::move(rhs)}, ""};
    }
    return lhs;
  }

  PNode disjunct() {
    PNode first = conjunct();
    if (lex_.peek().kind != Tok::Pipe) return first;
    std::vector<PNode> kids{std::move(first)};
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      kids.push_back(conjunct());
    }
    return PNode{PNode::Or, {}, std::move(kids), ""};
  }

  PNode conjunct() {
    PNode first = unary();
    if (lex_.peek().kind != Tok::Amp) return first;
    std::vector<PNode> kids{std::move(first)};
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      kids.push_back(unary());
    }
    return PNode{PNode::And, {}, std::move(kids), ""};
  }

  PNode unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.take();
      return PNode{PNode::Not, {}, {unary()}, ""};
    }
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      bool ex = t.text == "exists";
      lex_.take();
      Token v = expect(Tok::Ident, "a variable after the quantifier");
      if (is_keyword(v.text))
        throw SyntaxError(v.pos, "'" + v.text + "' is a reserved word");
      expect(Tok::Dot, "'.'");
      PNode body = implication();  // quantifier scope extends right as far as possible
      return PNode{ex ? PNode::Exists : PNode::Forall, {}, {std::move(body)}, v.text};
    }
    if (t.kind == Tok::Ident && t.text == "true") {
      lex_.take();
      return PNode{PNode::True, {}, {}, ""};
    }
    if (t.kind == Tok::Ident && t.text == "false") {
      lex_.take();
      return PNode{PNode::False, {}, {}, ""};
    }
    if (t.kind == Tok::LParen) {
      // either a parenthesized formula or an atom whose left side starts
      // with '('; try the atom reading first and fall back on failure
      size_t cp = lex_.checkpoint();
      Token saved = lex_.current_token();
      try {
        return atom();
      } catch (const SyntaxError&) {
        lex_.rewind(cp, saved);
        lex_.take();
        PNode inner = implication();
        expect(Tok::RParen, "')'");
        return inner;
      }
    }
    return atom();
  }

  PNode atom() {
    Poly lhs = polyexpr();
    const Token& t = lex_.peek();
    if (t.kind == Tok::Eq) {
      lex_.take();
      Poly rhs = polyexpr();
      return PNode{PNode::Atom, lhs - rhs, {}, ""};
    }
    if (t.kind == Tok::Neq) {
      lex_.take();
      Poly rhs = polyexpr();
      PNode a{PNode::Atom, lhs - rhs, {}, ""};
      return PNode{PNode::Not, {}, {std::move(a)}, ""};
    }
    throw SyntaxError(t.pos, "expected '=' or '!=' after a polynomial");
  }

  Poly polyexpr() {
    Poly acc = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        acc = acc + term();
      } else if (k == Tok::Minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return -factor();
    }
    Poly b = base();
    if (lex_.peek().kind == Tok::Caret) {
      Token caret = lex_.take();
      Token e = expect(Tok::Number, "an exponent");
      if (e.text.find('/') != std::string::npos)
        fail("ArityError", "exponent must be a natural number, got '" + e.text + "'");
      unsigned long exp = std::stoul(e.text);
      if (exp > 64) fail("ArityError", "exponent " + e.text + " too large");
      (void)caret;
      return b.pow(static_cast<uint32_t>(exp));
    }
    return b;
  }

  Poly base() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident) {
      if (is_keyword(t.text))
        throw SyntaxError(t.pos, "'" + t.text + "' is a reserved word");
      Token v = lex_.take();
      return Poly::variable(v.text);
    }
    if (t.kind == Tok::Number) {
      Token n = lex_.take();
      return Poly::constant(Rational::parse(n.text));
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      Poly inner = polyexpr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw SyntaxError(t.pos, "expected a variable, number or '('");
  }

  Lexer lex_;
};

// ---- prenex conversion ----

void collect_names(const PNode& n, std::set<std::string>& names) {
  if (n.k == PNode::Atom)
    for (const auto& v : n.atom.vars()) names.insert(v);
  if (n.k == PNode::Exists || n.k == PNode::Forall) names.insert(n.var);
  for (const auto& k : n.kids) collect_names(k, names);
}

void collect_free(const PNode& n, std::set<std::string> bound, std::set<std::string>& free) {
  if (n.k == PNode::Atom) {
    for (const auto& v : n.atom.vars())
      if (!bound.count(v)) free.insert(v);
    return;
  }
  if (n.k == PNode::Exists || n.k == PNode::Forall) bound.insert(n.var);
  for (const auto& k : n.kids) collect_free(k, bound, free);
}

Poly rename_in_poly(const Poly& p, const std::map<std::string, std::string>& env) {
  Poly out = p;
  for (const auto& [from, to] : env)
    if (from != to) out = out.substitute(from, Poly::variable(to));
  return out;
}

struct RenameState {
  std::set<std::string> all_names;  // every name written in the source
  std::set<std::string> taken;      // free vars plus binder names already assigned
};

// Binders keep their written name when no other binder or free variable
// claims it; otherwise they get a name absent from the entire source, so
// the substitution map never chains and capture is impossible.
PNode alpha_rename(const PNode& n, std::map<std::string, std::string> env, RenameState& st) {
  PNode out = n;
  if (n.k == PNode::Atom) {
    out.atom = rename_in_poly(n.atom, env);
    return out;
  }
  if (n.k == PNode::Exists || n.k == PNode::Forall) {
    std::string name = n.var;
    if (!st.taken.count(name)) {
      st.taken.insert(name);
      env[name] = name;  // shadow any outer mapping for this source name
    } else {
      std::string fresh;
      int suffix = 2;
      do {
        fresh = name + std::to_string(suffix++);
      } while (st.all_names.count(fresh) || st.taken.count(fresh));
      st.taken.insert(fresh);
      env[name] = fresh;
      name = fresh;
    }
    out.var = name;
    out.kids = {alpha_rename(n.kids.front(), env, st)};
    return out;
  }
  out.kids.clear();
  for (const auto& k : n.kids) out.kids.push_back(alpha_rename(k, env, st));
  return out;
}

bool has_quantifier(const PNode& n) {
  if (n.k == PNode::Exists || n.k == PNode::Forall) return true;
  for (const auto& k : n.kids)
    if (has_quantifier(k)) return true;
  return false;
}

PNode push_negations(const PNode& n);

PNode negate_node(const PNode& n) {
  switch (n.k) {
    case PNode::True:
      return PNode{PNode::False, {}, {}, ""};
    case PNode::False:
      return PNode{PNode::True, {}, {}, ""};
    case PNode::Atom:
      return PNode{PNode::Not, {}, {n}, ""};
    case PNode::Not:
      return push_negations(n.kids.front());
    case PNode::And:
    case PNode::Or: {
      PNode out{n.k == PNode::And ? PNode::Or : PNode::And, {}, {}, ""};
      for (const auto& k : n.kids) out.kids.push_back(negate_node(k));
      return out;
    }
    case PNode::Exists:
    case PNode::Forall: {
      PNode out{n.k == PNode::Exists ? PNode::Forall : PNode::Exists, {}, {}, n.var};
      out.kids.push_back(negate_node(n.kids.front()));
      return out;
    }
  }
  return n;
}

// Negations are pushed only as far as needed to free the quantifiers;
// quantifier-free subtrees keep their written shape.
PNode push_negations(const PNode& n) {
  if (n.k == PNode::Not) {
    if (has_quantifier(n.kids.front())) return negate_node(n.kids.front());
    PNode out = n;
    return out;
  }
  PNode out = n;
  out.kids.clear();
  for (const auto& k : n.kids) out.kids.push_back(push_negations(k));
  return out;
}

struct Prenexed {
  std::vector<QuantifierEntry> prefix;
  PropFormula matrix;
};

Prenexed prenex(const PNode& n) {
  switch (n.k) {
    case PNode::True:
      return {{}, PropFormula::tru()};
    case PNode::False:
      return {{}, PropFormula::fls()};
    case PNode::Atom:
      return {{}, PropFormula::atom(n.atom)};
    case PNode::Not: {
      Prenexed p = prenex(n.kids.front());
      // negations over quantifiers were already pushed through
      return {std::move(p.prefix), PropFormula::negation(p.matrix)};
    }
    case PNode::And:
    case PNode::Or: {
      std::vector<QuantifierEntry> prefix;
      std::vector<PropFormula> mats;
      for (const auto& k : n.kids) {
        Prenexed p = prenex(k);
        prefix.insert(prefix.end(), p.prefix.begin(), p.prefix.end());
        mats.push_back(std::move(p.matrix));
      }
      PropFormula m = n.k == PNode::And ? PropFormula::conj(std::move(mats))
                                        : PropFormula::disj(std::move(mats));
      return {std::move(prefix), std::move(m)};
    }
    case PNode::Exists:
    case PNode::Forall: {
      Prenexed p = prenex(n.kids.front());
      std::vector<QuantifierEntry> prefix{
          {n.k == PNode::Exists ? Quant::Exists : Quant::Forall, n.var}};
      prefix.insert(prefix.end(), p.prefix.begin(), p.prefix.end());
      return {std::move(prefix), std::move(p.matrix)};
    }
  }
  return {{}, PropFormula::tru()};
}

PredFormula finish(const PNode& tree) {
  RenameState st;
  collect_names(tree, st.all_names);
  collect_free(tree, {}, st.taken);
  PNode renamed = alpha_rename(tree, {}, st);
  PNode pushed = push_negations(renamed);
  Prenexed p = prenex(pushed);
  // drop vacuous quantifiers
  auto mvars = p.matrix.free_vars();
  std::vector<QuantifierEntry> prefix;
  for (auto& e : p.prefix)
    if (mvars.count(e.var)) prefix.push_back(std::move(e));
  return PredFormula(std::move(prefix), std::move(p.matrix));
}

}  // namespace

PredFormula parse_formula(const std::string& text) {
  Parser p(text);
  return finish(p.parse_formula_top());
}

PropFormula parse_prop_formula(const std::string& text) {
  PredFormula f = parse_formula(text);
  if (!f.is_quantifier_free())
    fail("NotQuantifierFree", "expected a quantifier-free formula: " + text);
  return f.matrix();
}

Poly parse_poly(const std::string& text) {
  Parser p(text);
  return p.parse_poly_top();
}

}  // namespace noet
