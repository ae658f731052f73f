#ifndef NOET_POLY_HPP
#define NOET_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noet/errors.hpp"
#include "noet/prime_field.hpp"
#include "noet/rational.hpp"

namespace noet {

enum class DomainKind { Rationals, PrimeField };

// Coefficient domain tag: the rationals or one specific prime field.
class Domain {
 public:
  Domain() : kind_(DomainKind::Rationals), p_(0) {}

  static Domain rationals() { return Domain(); }
  static Domain prime_field(uint64_t p) {
    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    Domain d;
    d.kind_ = DomainKind::PrimeField;
    d.p_ = p;
    return d;
  }
  // Descriptor strings: "q" or "fp:<p>".
  static Domain parse(const std::string& descriptor);

  DomainKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == DomainKind::Rationals; }
  uint64_t p() const { return p_; }
  std::string to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(p_);
  }

  bool operator==(const Domain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Domain& o) const { return !(*this == o); }

 private:
  DomainKind kind_;
  uint64_t p_;
};

// Sparse multivariate polynomial with exact coefficients.
//
// Canonical form, maintained by every operation:
//   - variable list sorted, containing exactly the variables that occur;
//   - terms sorted graded-lexicographically, descending, no zero
//     coefficients, exponent vectors aligned with the variable list;
//   - prime-field coefficients stored as integer representatives in [0, p).
// Structural equality therefore coincides with mathematical equality.
class Poly {
 public:
  using Exponents = std::vector<uint32_t>;
  struct Term {
    Exponents exp;
    Rational coeff;
  };

  Poly() : dom_(Domain::rationals()) {}

  static Poly zero(const Domain& d = Domain::rationals());
  static Poly constant(const Rational& c, const Domain& d = Domain::rationals());
  static Poly variable(const std::string& name, const Domain& d = Domain::rationals());
  static Poly from_terms(const Domain& d, std::vector<std::string> vars,
                         std::vector<Term> terms);

  const Domain& domain() const { return dom_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
  // Pre: is_constant(); the zero polynomial yields 0.
  Rational constant_value() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool contains_var(const std::string& var) const { return degree_in(var) > 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly pow(uint32_t e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Deterministic total order used to sort report output.
  static int compare(const Poly& a, const Poly& b);
  bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

  // Exact value at a point; every variable must be assigned a value from
  // this polynomial's coefficient domain.
  Rational eval(const std::map<std::string, Rational>& point) const;

  Poly substitute(const std::string& var, const Rational& value) const;
  Poly substitute(const std::string& var, const Poly& value) const;
  Poly derivative(const std::string& var) const;

  // Dense coefficient list of *this viewed as univariate in var; index =
  // exponent, entries are polynomials in the remaining variables. Empty
  // for the zero polynomial.
  std::vector<Poly> coeffs_in(const std::string& var) const;
  static Poly from_coeffs_in(const Domain& d, const std::string& var,
                             const std::vector<Poly>& coeffs);
  Poly leading_coeff_in(const std::string& var) const;

  // Coefficient re-interpretation between Q and F_p.
  Poly to_domain(const Domain& d) const;

  // Canonical rendering, e.g. "3*x^2*y - 1/2"; reparsing it yields an
  // equal polynomial.
  std::string to_string() const;

 private:
  void normalize();

  Domain dom_;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// ---- divisibility and the gcd/resultant toolbox (Q coefficients) ----

// Exact quotient f / g, or nullopt when g does not divide f. ZeroDivisor
// if g = 0.
std::optional<Poly> exact_quotient(const Poly& f, const Poly& g);
inline bool divides(const Poly& g, const Poly& f) { return exact_quotient(f, g).has_value(); }

// Pseudo-division with respect to var:
//   lc_var(g)^(deg f - deg g + 1) * f = quotient * g + remainder.
struct PseudoDivision {
  Poly quotient;
  Poly remainder;
};
PseudoDivision pseudo_divide(const Poly& f, const Poly& g, const std::string& var);
Poly pseudo_rem(const Poly& f, const Poly& g, const std::string& var);

// Monic gcd of univariate polynomials over Q; gcd(f, 0) is the monic
// normalization of f and gcd(0, 0) = 0.
Poly gcd_univariate(const Poly& f, const Poly& g);

// Ring gcd of polynomials in at most two variables over Q (subresultant
// remainder sequence in main_var plus content extraction), normalized to
// integer-primitive form with positive leading coefficient.
Poly gcd_bivariate(const Poly& f, const Poly& g, const std::string& main_var);

// Resultant with respect to var; coefficients may involve any number of
// further variables. Zero iff f and g share a factor involving var.
Poly resultant(const Poly& f, const Poly& g, const std::string& var);

// f / gcd(f, df/dvar), normalized (monic when univariate, otherwise
// integer-primitive with positive leading coefficient).
Poly squarefree_part(const Poly& f, const std::string& var);

// Content of f with respect to var (gcd of its var-coefficients; at most
// two variables in total), and the corresponding primitive part.
Poly content_in(const Poly& f, const std::string& var);
Poly primitive_part_in(const Poly& f, const std::string& var);

// Rescale f by the rational that clears denominators and common integer
// content, making the leading graded-lex coefficient positive.
Poly integer_normalized(const Poly& f);
// Divide a univariate f by its leading coefficient.
Poly monic_univariate(const Poly& f);

// All rational roots of a nonzero univariate polynomial, sorted. Returns
// nullopt when divisor enumeration on huge coefficients is infeasible.
std::optional<std::vector<Rational>> rational_roots(const Poly& f);

Poly product(const std::vector<Poly>& fs, const Domain& d = Domain::rationals());

}  // namespace noet

#endif
