#include "noet/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace noet {

namespace {

// Graded-lex on aligned exponent vectors.
int cmp_exponents(const Poly::Exponents& a, const Poly::Exponents& b) {
  uint64_t da = 0, db = 0;
  for (uint32_t e : a) da += e;
  for (uint32_t e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

Rational reduce_coeff(const Domain& d, const Rational& c) {
  if (d.is_rationals()) return c;
  PrimeField f(d.p());
  return Rational(Int(static_cast<unsigned long>(f.reduce(c))));
}

}  // namespace

Domain Domain::parse(const std::string& descriptor) {
  if (descriptor == "q") return rationals();
  if (descriptor.rfind("fp:", 0) == 0) {
    const std::string num = descriptor.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      fail("SyntaxError", "bad field descriptor '" + descriptor + "'");
    return prime_field(std::stoull(num));
  }
  fail("SyntaxError", "bad field descriptor '" + descriptor + "' (want q or fp:<p>)");
}

void Poly::normalize() {
  for (auto& t : terms_) {
    if (t.exp.size() != vars_.size())
      fail("ArityError", "exponent vector length does not match variable list");
  }
  // Merge duplicate monomials, reduce coefficients into the domain.
  std::map<Exponents, Rational> acc;
  for (auto& t : terms_) {
    auto it = acc.find(t.exp);
    if (it == acc.end())
      acc.emplace(t.exp, t.coeff);
    else
      it->second += t.coeff;
  }
  // Determine which variables actually occur.
  std::vector<bool> used(vars_.size(), false);
  for (auto& [exp, c] : acc) {
    Rational r = reduce_coeff(dom_, c);
    c = r;
    if (r.is_zero()) continue;
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > 0) used[i] = true;
  }
  std::vector<std::string> live;
  std::vector<size_t> slot(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      slot[i] = live.size();
      live.push_back(vars_[i]);
    }
  // Variable list must be sorted; remap if the caller's order was not.
  std::vector<size_t> order(live.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return live[a] < live[b]; });
  std::vector<size_t> rank(live.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::string> sorted_vars(live.size());
  for (size_t i = 0; i < live.size(); ++i) sorted_vars[rank[i]] = live[i];
  for (size_t i = 1; i < sorted_vars.size(); ++i)
    if (sorted_vars[i] == sorted_vars[i - 1])
      fail("ArityError", "duplicate variable '" + sorted_vars[i] + "'");

  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exp, c] : acc) {
    if (c.is_zero()) continue;
    Exponents e(sorted_vars.size(), 0);
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > 0) e[rank[slot[i]]] = exp[i];
    out.push_back({std::move(e), c});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return cmp_exponents(a.exp, b.exp) > 0;
  });
  vars_ = std::move(sorted_vars);
  terms_ = std::move(out);
}

Poly Poly::zero(const Domain& d) {
  Poly p;
  p.dom_ = d;
  return p;
}

Poly Poly::constant(const Rational& c, const Domain& d) {
  Poly p;
  p.dom_ = d;
  if (!c.is_zero()) p.terms_.push_back({{}, c});
  p.normalize();
  return p;
}

Poly Poly::variable(const std::string& name, const Domain& d) {
  if (name.empty()) fail("ArityError", "empty variable name");
  Poly p;
  p.dom_ = d;
  p.vars_ = {name};
  p.terms_.push_back({{1}, Rational(1)});
  return p;
}

Poly Poly::from_terms(const Domain& d, std::vector<std::string> vars,
                      std::vector<Term> terms) {
  Poly p;
  p.dom_ = d;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.front().coeff;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  uint64_t d = 0;
  for (uint32_t e : terms_.front().exp) d += e;  // graded order: first term is maximal
  return static_cast<int>(d);
}

int Poly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[idx]);
  return static_cast<int>(d);
}

namespace {

// Rewrites a term list onto a merged variable list.
std::vector<Poly::Term> remap(const std::vector<Poly::Term>& terms,
                              const std::vector<std::string>& from,
                              const std::vector<std::string>& to) {
  std::vector<size_t> pos(from.size());
  for (size_t i = 0; i < from.size(); ++i) {
    auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    pos[i] = static_cast<size_t>(it - to.begin());
  }
  std::vector<Poly::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Poly::Exponents e(to.size(), 0);
    for (size_t i = 0; i < from.size(); ++i) e[pos[i]] = t.exp[i];
    out.push_back({std::move(e), t.coeff});
  }
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> m;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

void check_same_domain(const Poly& a, const Poly& b) {
  if (a.domain() != b.domain())
    fail("DomainMismatch", "operands over " + a.domain().to_string() + " and " +
                               b.domain().to_string());
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  check_same_domain(*this, o);
  auto vars = merge_vars(vars_, o.vars_);
  auto ta = remap(terms_, vars_, vars);
  auto tb = remap(o.terms_, o.vars_, vars);
  ta.insert(ta.end(), tb.begin(), tb.end());
  return from_terms(dom_, std::move(vars), std::move(ta));
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  p.normalize();
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same_domain(*this, o);
  auto vars = merge_vars(vars_, o.vars_);
  auto ta = remap(terms_, vars_, vars);
  auto tb = remap(o.terms_, o.vars_, vars);
  std::vector<Term> prod;
  prod.reserve(ta.size() * tb.size());
  for (const auto& x : ta)
    for (const auto& y : tb) {
      Exponents e(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) e[i] = x.exp[i] + y.exp[i];
      prod.push_back({std::move(e), x.coeff * y.coeff});
    }
  return from_terms(dom_, std::move(vars), std::move(prod));
}

Poly Poly::scaled(const Rational& c) const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff = t.coeff * c;
  p.normalize();
  return p;
}

Poly Poly::pow(uint32_t e) const {
  Poly r = constant(Rational(1), dom_);
  Poly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (dom_ != o.dom_ || vars_ != o.vars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.dom_.kind() != b.dom_.kind()) return a.dom_.is_rationals() ? -1 : 1;
  if (a.dom_.p() != b.dom_.p()) return a.dom_.p() < b.dom_.p() ? -1 : 1;
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp_exponents(a.terms_[i].exp, b.terms_[i].exp);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals;
  vals.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) fail("MissingAssignment", "no value for variable '" + v + "'");
    vals.push_back(dom_.is_rationals() ? it->second : reduce_coeff(dom_, it->second));
  }
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (size_t i = 0; i < vals.size(); ++i)
      for (uint32_t k = 0; k < t.exp[i]; ++k) m *= vals[i];
    sum += m;
  }
  return reduce_coeff(dom_, sum);
}

Poly Poly::substitute(const std::string& var, const Rational& value) const {
  return substitute(var, Poly::constant(value, dom_));
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
  check_same_domain(*this, value);
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return *this;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  Poly sum = Poly::zero(dom_);
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    uint32_t k = e[idx];
    e[idx] = 0;
    Poly mono = from_terms(dom_, vars_, {{e, t.coeff}});
    sum = sum + mono * value.pow(k);
  }
  return sum;
}

Poly Poly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return zero(dom_);
  size_t idx = static_cast<size_t>(it - vars_.begin());
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[idx] == 0) continue;
    Term d = t;
    d.coeff = d.coeff * Rational(static_cast<long>(t.exp[idx]));
    d.exp[idx] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(dom_, vars_, std::move(out));
}

std::vector<Poly> Poly::coeffs_in(const std::string& var) const {
  if (is_zero()) return {};
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return {*this};
  size_t idx = static_cast<size_t>(it - vars_.begin());
  std::vector<std::string> rest;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (i != idx) rest.push_back(vars_[i]);
  int deg = degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<size_t>(deg) + 1);
  for (const auto& t : terms_) {
    Exponents e;
    e.reserve(rest.size());
    for (size_t i = 0; i < vars_.size(); ++i)
      if (i != idx) e.push_back(t.exp[i]);
    buckets[t.exp[idx]].push_back({std::move(e), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(dom_, rest, std::move(b)));
  return out;
}

Poly Poly::from_coeffs_in(const Domain& d, const std::string& var,
                          const std::vector<Poly>& coeffs) {
  Poly sum = zero(d);
  Poly x = variable(var, d);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (coeffs[k].contains_var(var))
      fail("ArityError", "coefficient " + std::to_string(k) + " contains '" + var + "'");
    sum = sum + coeffs[k] * x.pow(static_cast<uint32_t>(k));
  }
  return sum;
}

Poly Poly::leading_coeff_in(const std::string& var) const {
  auto cs = coeffs_in(var);
  if (cs.empty()) return zero(dom_);
  return cs.back();
}

Poly Poly::to_domain(const Domain& d) const {
  std::vector<Term> ts = terms_;
  return from_terms(d, vars_, std::move(ts));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational mag = neg ? -c : c;
    bool has_var = false;
    for (uint32_t e : t.exp)
      if (e > 0) has_var = true;
    if (!has_var) {
      os << mag.to_string();
      continue;
    }
    bool printed = false;
    if (!mag.is_one()) {
      os << mag.to_string();
      printed = true;
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (printed) os << "*";
      os << vars_[i];
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      printed = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------
// Division, gcd, resultants.

namespace {
struct GradedLexDesc {
  bool operator()(const Poly::Exponents& a, const Poly::Exponents& b) const {
    return cmp_exponents(a, b) > 0;
  }
};
}  // namespace

std::optional<Poly> exact_quotient(const Poly& f, const Poly& g) {
  if (g.is_zero()) fail("ZeroDivisor", "division by the zero polynomial");
  check_same_domain(f, g);
  if (f.is_zero()) return Poly::zero(f.domain());
  const Domain& dom = f.domain();
  auto vars = merge_vars(f.vars(), g.vars());
  auto fr = remap(f.terms(), f.vars(), vars);
  auto gr = remap(g.terms(), g.vars(), vars);
  std::sort(gr.begin(), gr.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return cmp_exponents(a.exp, b.exp) > 0; });
  const Poly::Term& glt = gr.front();
  // The remainder keeps the invariant r = (q_true - q_partial) * g, so
  // under a multiplicative monomial order the leading term of r must be
  // divisible by lt(g) whenever g | f.
  std::map<Poly::Exponents, Rational, GradedLexDesc> r;
  for (auto& t : fr) r.emplace(t.exp, t.coeff);
  std::vector<Poly::Term> q;
  while (!r.empty()) {
    const Poly::Exponents rexp = r.begin()->first;  // copies: the entry dies below
    const Rational rcoeff = r.begin()->second;
    Poly::Exponents e(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      if (rexp[i] < glt.exp[i]) return std::nullopt;
      e[i] = rexp[i] - glt.exp[i];
    }
    Rational c;
    if (dom.is_rationals()) {
      c = rcoeff / glt.coeff;
    } else {
      PrimeField field(dom.p());
      c = Rational(Int(static_cast<unsigned long>(
          field.mul(field.reduce(rcoeff), field.inv(field.reduce(glt.coeff))))));
    }
    for (const auto& gt : gr) {
      Poly::Exponents k(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) k[i] = e[i] + gt.exp[i];
      auto it = r.find(k);
      Rational nv = (it == r.end() ? Rational(0) : it->second) - c * gt.coeff;
      nv = reduce_coeff(dom, nv);
      if (nv.is_zero()) {
        if (it != r.end()) r.erase(it);
      } else if (it != r.end()) {
        it->second = nv;
      } else {
        r.emplace(std::move(k), nv);
      }
    }
    q.push_back({std::move(e), c});
  }
  return Poly::from_terms(dom, vars, std::move(q));
}

PseudoDivision pseudo_divide(const Poly& f, const Poly& g, const std::string& var) {
  if (g.is_zero()) fail("ZeroDivisor", "pseudo-division by zero");
  check_same_domain(f, g);
  const Domain& dom = f.domain();
  int m = f.degree_in(var), n = g.degree_in(var);
  if (f.is_zero() || m < n) return {Poly::zero(dom), f};
  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  if (static_cast<int>(gc.size()) - 1 != n) gc.resize(static_cast<size_t>(n) + 1, Poly::zero(dom));
  Poly b = gc[static_cast<size_t>(n)];
  std::vector<Poly> r = fc;
  std::vector<Poly> q(static_cast<size_t>(m - n) + 1, Poly::zero(dom));
  int e = m - n + 1;
  auto deg_of = [&](const std::vector<Poly>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (!v[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
  };
  int d = deg_of(r);
  while (d >= n) {
    Poly t = r[static_cast<size_t>(d)];
    for (auto& qi : q) qi = qi * b;
    q[static_cast<size_t>(d - n)] = q[static_cast<size_t>(d - n)] + t;
    std::vector<Poly> nr(r.size(), Poly::zero(dom));
    for (size_t i = 0; i < r.size(); ++i) nr[i] = r[i] * b;
    for (int j = 0; j <= n; ++j) {
      size_t k = static_cast<size_t>(d - n + j);
      nr[k] = nr[k] - t * gc[static_cast<size_t>(j)];
    }
    r = std::move(nr);
    --e;
    d = deg_of(r);
  }
  Poly mult = b.pow(static_cast<uint32_t>(e));
  for (auto& qi : q) qi = qi * mult;
  for (auto& ri : r) ri = ri * mult;
  return {Poly::from_coeffs_in(dom, var, q), Poly::from_coeffs_in(dom, var, r)};
}

Poly pseudo_rem(const Poly& f, const Poly& g, const std::string& var) {
  return pseudo_divide(f, g, var).remainder;
}

Poly integer_normalized(const Poly& f) {
  if (f.is_zero()) return f;
  Int den(1);
  for (const auto& t : f.terms()) den = lcm(den, t.coeff.denominator());
  Int num(0);
  for (const auto& t : f.terms()) num = gcd(num, t.coeff.numerator() * (den / t.coeff.denominator()));
  Rational scale = Rational::make(den, num);
  if (f.terms().front().coeff.sign() < 0) scale = -scale;
  return f.scaled(scale);
}

Poly monic_univariate(const Poly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.terms().front().coeff.inverse());
}

namespace {

// The single variable shared by a list of polynomials, all of which must
// be univariate or constant. Empty when all are constants.
std::string common_univariate_var(std::initializer_list<const Poly*> ps) {
  std::string var;
  for (const Poly* p : ps) {
    if (p->vars().size() > 1)
      fail("NotUnivariate", "'" + p->to_string() + "' is not univariate");
    if (p->vars().size() == 1) {
      if (var.empty())
        var = p->vars()[0];
      else if (var != p->vars()[0])
        fail("NotUnivariate", "mixed variables '" + var + "' and '" + p->vars()[0] + "'");
    }
  }
  return var;
}

// Dense integer coefficient vector, primitive with positive lead.
std::vector<Int> dense_primitive(const Poly& f, const std::string& var) {
  Poly g = integer_normalized(f);
  auto cs = g.coeffs_in(var);
  std::vector<Int> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value().numerator();
  return out;
}

void make_primitive(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  if (v.empty()) return;
  Int g(0);
  for (const auto& c : v) g = gcd(g, c);
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) c /= g;
}

// Pseudo-remainder over Z, then primitive part: one step of the
// primitive PRS.
std::vector<Int> int_prem_primitive(std::vector<Int> a, const std::vector<Int>& b) {
  const size_t n = b.size() - 1;
  const Int& lead = b.back();
  while (a.size() >= b.size()) {
    Int t = a.back();
    for (auto& c : a) c *= lead;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= t * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() <= n) break;
  }
  make_primitive(a);
  return a;
}

}  // namespace

Poly gcd_univariate(const Poly& f, const Poly& g) {
  if (!f.domain().is_rationals() || !g.domain().is_rationals())
    fail("DomainMismatch", "gcd_univariate requires rational coefficients");
  if (f.is_zero() && g.is_zero()) return Poly::zero();
  std::string var = common_univariate_var({&f, &g});
  if (f.is_zero()) return monic_univariate(g);
  if (g.is_zero()) return monic_univariate(f);
  if (var.empty()) return Poly::constant(Rational(1));
  std::vector<Int> a = dense_primitive(f, var);
  std::vector<Int> b = dense_primitive(g, var);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    std::vector<Int> r = int_prem_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!b.empty()) return Poly::constant(Rational(1));  // coprime: constant remainder
  std::vector<Poly::Term> terms;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) terms.push_back({{static_cast<uint32_t>(i)}, Rational(a[i])});
  return monic_univariate(Poly::from_terms(Domain::rationals(), {var}, std::move(terms)));
}

Poly content_in(const Poly& f, const std::string& var) {
  if (f.is_zero()) return Poly::zero(f.domain());
  auto cs = f.coeffs_in(var);
  Poly c = Poly::zero(f.domain());
  for (const auto& ci : cs) c = gcd_univariate(c, ci);
  return c;
}

Poly primitive_part_in(const Poly& f, const std::string& var) {
  if (f.is_zero()) return f;
  Poly c = content_in(f, var);
  auto q = exact_quotient(f, c);
  if (!q) fail("ZeroDivisor", "content does not divide its polynomial");
  return *q;
}

namespace {

// Subresultant PRS in main_var; returns the last nonzero element of the
// sequence (the gcd up to content) or a constant when coprime.
Poly subresultant_last(Poly F, Poly G, const std::string& var) {
  if (F.degree_in(var) < G.degree_in(var)) std::swap(F, G);
  Poly g = Poly::constant(Rational(1));
  Poly h = Poly::constant(Rational(1));
  while (true) {
    int df = F.degree_in(var), dg = G.degree_in(var);
    uint32_t delta = static_cast<uint32_t>(df - dg);
    Poly R = pseudo_rem(F, G, var);
    if (R.is_zero()) return G;
    Poly divisor = g * h.pow(delta);
    auto next = exact_quotient(R, divisor);
    if (!next) fail("ZeroDivisor", "subresultant division was not exact");
    F = G;
    G = *next;
    g = F.leading_coeff_in(var);
    if (delta >= 1) {
      auto hn = exact_quotient(g.pow(delta), h.pow(delta - 1));
      if (!hn) fail("ZeroDivisor", "subresultant h-update was not exact");
      h = *hn;
    }
    if (G.degree_in(var) == 0) return G;
  }
}

}  // namespace

Poly gcd_bivariate(const Poly& f, const Poly& g, const std::string& main_var) {
  if (!f.domain().is_rationals() || !g.domain().is_rationals())
    fail("DomainMismatch", "gcd_bivariate requires rational coefficients");
  if (f.is_zero() && g.is_zero()) fail("ZeroInput", "gcd_bivariate(0, 0)");
  std::set<std::string> all(f.vars().begin(), f.vars().end());
  all.insert(g.vars().begin(), g.vars().end());
  if (all.size() > 2)
    fail("TooManyVariables", "gcd_bivariate limited to two variables");
  if (f.is_zero()) return integer_normalized(g);
  if (g.is_zero()) return integer_normalized(f);
  if (f.degree_in(main_var) == 0 || g.degree_in(main_var) == 0) {
    // One input is main_var-free: the gcd divides contents on both sides.
    Poly cf = f.degree_in(main_var) == 0 ? f : content_in(f, main_var);
    Poly cg = g.degree_in(main_var) == 0 ? g : content_in(g, main_var);
    return integer_normalized(gcd_univariate(cf, cg));
  }
  Poly cf = content_in(f, main_var);
  Poly cg = content_in(g, main_var);
  Poly pf = primitive_part_in(f, main_var);
  Poly pg = primitive_part_in(g, main_var);
  Poly last = subresultant_last(pf, pg, main_var);
  Poly pp_gcd = last.degree_in(main_var) == 0 ? Poly::constant(Rational(1))
                                              : primitive_part_in(last, main_var);
  return integer_normalized(pp_gcd * gcd_univariate(cf, cg));
}

Poly resultant(const Poly& f, const Poly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) fail("ZeroInput", "resultant of the zero polynomial");
  if (!f.domain().is_rationals() || !g.domain().is_rationals())
    fail("DomainMismatch", "resultant requires rational coefficients");
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 || n == 0) fail("ZeroInput", "resultant inputs must involve '" + var + "'");
  Poly A = f, B = g;
  int s = 1;
  if (m < n) {
    std::swap(A, B);
    std::swap(m, n);
    if ((m & 1) && (n & 1)) s = -s;
  }
  Poly g_ = Poly::constant(Rational(1));
  Poly h = Poly::constant(Rational(1));
  while (true) {
    int da = A.degree_in(var), db = B.degree_in(var);
    uint32_t delta = static_cast<uint32_t>(da - db);
    if ((da & 1) && (db & 1)) s = -s;
    Poly R = pseudo_rem(A, B, var);
    A = B;
    if (R.is_zero()) return Poly::zero();  // shared factor involving var
    auto next = exact_quotient(R, g_ * h.pow(delta));
    if (!next) fail("ZeroDivisor", "resultant PRS division was not exact");
    B = *next;
    g_ = A.leading_coeff_in(var);
    if (delta >= 1) {
      auto hn = exact_quotient(g_.pow(delta), h.pow(delta - 1));
      if (!hn) fail("ZeroDivisor", "resultant h-update was not exact");
      h = *hn;
    }
    if (B.degree_in(var) == 0) break;
  }
  // B is now a nonzero constant in var; finish with h' = lc(B)^dA / h^(dA-1).
  int da = A.degree_in(var);
  Poly lcB = B;
  auto hfin = exact_quotient(lcB.pow(static_cast<uint32_t>(da)),
                             h.pow(static_cast<uint32_t>(da - 1)));
  if (!hfin) fail("ZeroDivisor", "resultant final division was not exact");
  Poly res = *hfin;
  return s < 0 ? -res : res;
}

Poly squarefree_part(const Poly& f, const std::string& var) {
  if (f.is_zero()) fail("ZeroInput", "squarefree_part of 0");
  if (!f.domain().is_rationals())
    fail("DomainMismatch", "squarefree_part requires rational coefficients");
  if (f.degree_in(var) == 0) return integer_normalized(f);
  Poly d = f.derivative(var);
  std::set<std::string> all(f.vars().begin(), f.vars().end());
  Poly g = all.size() <= 1 ? gcd_univariate(f, d) : gcd_bivariate(f, d, var);
  auto q = exact_quotient(f, g);
  if (!q) fail("ZeroDivisor", "gcd(f, f') does not divide f");
  std::set<std::string> qv(q->vars().begin(), q->vars().end());
  return qv.size() <= 1 ? monic_univariate(*q) : integer_normalized(*q);
}

namespace {

// Divisors of |n| via trial division; gives up (empty result) beyond the
// factoring bound so callers can report the instance as unsupported.
std::optional<std::vector<Int>> divisors_of(Int n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  std::map<Int, int> fac;
  Int d(2);
  while (d * d <= n && d < 1000000) {
    while (n % d == 0) {
      fac[d] += 1;
      n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (d * d > n) {
      fac[n] += 1;  // cofactor below the square of the trial bound is prime
    } else if (n.fits_ulong_p() && is_prime_u64(n.get_ui())) {
      fac[n] += 1;
    } else {
      return std::nullopt;
    }
  }
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 100000) return std::nullopt;
  }
  return divs;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Poly& f) {
  if (f.is_zero()) fail("ZeroInput", "rational_roots of 0");
  std::string var = common_univariate_var({&f});
  if (var.empty()) return std::vector<Rational>{};
  std::vector<Int> c = dense_primitive(f, var);
  std::set<Rational> roots;
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Int> cc(c.begin() + static_cast<long>(low), c.end());
  if (cc.size() > 1) {
    auto dn = divisors_of(cc.front());
    auto dl = divisors_of(cc.back());
    if (!dn || !dl) return std::nullopt;
    auto value_at = [&](const Rational& x) {
      Rational acc(0);
      for (size_t i = cc.size(); i-- > 0;) acc = acc * x + Rational(cc[i]);
      return acc;
    };
    for (const auto& p : *dn)
      for (const auto& q : *dl) {
        Rational cand = Rational::make(p, q);
        if (value_at(cand).is_zero()) roots.insert(cand);
        if (value_at(-cand).is_zero()) roots.insert(-cand);
      }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

Poly product(const std::vector<Poly>& fs, const Domain& d) {
  Poly r = Poly::constant(Rational(1), d);
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace noet
