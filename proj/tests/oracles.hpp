// Test-only reference implementations, kept independent of the library's
// gcd/resultant path: dense univariate arithmetic over Q, textbook
// Euclidean gcd, and resultants as Sylvester determinants.
#ifndef NOET_TESTS_ORACLES_HPP
#define NOET_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "noet/poly.hpp"
#include "noet/rational.hpp"

namespace oracle {

using noet::Poly;
using noet::Rational;

// Dense univariate polynomial, index = exponent, trailing zeros trimmed.
using Dense = std::vector<Rational>;

inline Dense trim(Dense a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

inline Dense from_poly(const Poly& p, const std::string& var) {
  Dense d;
  auto cs = p.coeffs_in(var);
  for (const auto& c : cs) d.push_back(c.constant_value());
  return trim(d);
}

inline Poly to_poly(const Dense& d, const std::string& var) {
  std::vector<Poly::Term> terms;
  for (size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) terms.push_back({{static_cast<uint32_t>(i)}, d[i]});
  return Poly::from_terms(noet::Domain::rationals(), {var}, std::move(terms));
}

inline Dense sub(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(r);
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline Dense scale(Dense a, const Rational& c) {
  for (auto& x : a) x *= c;
  return trim(a);
}

// Remainder of a by b over Q (classical long division).
inline Dense rem(Dense a, const Dense& b) {
  a = trim(a);
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    size_t off = a.size() - b.size();
    Dense t(off + b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) t[off + i] = b[i] * q;
    a = sub(a, t);
    if (a.empty()) break;
  }
  return a;
}

// Monic Euclidean gcd over Q.
inline Dense euclid_gcd(Dense a, Dense b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Dense r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, a.back().inverse());
  return a;
}

// Resultant of univariate a, b as the Sylvester determinant, computed by
// exact Gaussian elimination over Q.
inline Rational sylvester_resultant(const Dense& a, const Dense& b) {
  const size_t m = a.size() - 1, n = b.size() - 1;
  const size_t dim = m + n;
  std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim, Rational(0)));
  for (size_t r = 0; r < n; ++r)
    for (size_t i = 0; i <= m; ++i) mat[r][r + i] = a[m - i];
  for (size_t r = 0; r < m; ++r)
    for (size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b[n - i];
  Rational det(1);
  for (size_t col = 0; col < dim; ++col) {
    size_t pivot = col;
    while (pivot < dim && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == dim) return Rational(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    Rational inv = mat[col][col].inverse();
    for (size_t r = col + 1; r < dim; ++r) {
      if (mat[r][col].is_zero()) continue;
      Rational factor = mat[r][col] * inv;
      for (size_t c = col; c < dim; ++c) mat[r][c] -= factor * mat[col][c];
    }
  }
  return det;
}

// Sylvester determinant with polynomial entries (cofactor expansion);
// used for resultants with parameters. Sizes stay tiny in tests.
inline Poly sylvester_resultant_poly(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  const size_t m = a.size() - 1, n = b.size() - 1;
  const size_t dim = m + n;
  std::vector<std::vector<Poly>> mat(dim, std::vector<Poly>(dim, Poly::zero()));
  for (size_t r = 0; r < n; ++r)
    for (size_t i = 0; i <= m; ++i) mat[r][r + i] = a[m - i];
  for (size_t r = 0; r < m; ++r)
    for (size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b[n - i];
  // recursive Laplace expansion on the first row
  struct Det {
    static Poly of(const std::vector<std::vector<Poly>>& m, std::vector<size_t> cols) {
      size_t row = m.size() - cols.size();
      if (cols.size() == 1) return m[row][cols[0]];
      Poly acc = Poly::zero();
      for (size_t k = 0; k < cols.size(); ++k) {
        if (m[row][cols[k]].is_zero()) continue;
        std::vector<size_t> rest;
        for (size_t j = 0; j < cols.size(); ++j)
          if (j != k) rest.push_back(cols[j]);
        Poly minor = of(m, rest);
        Poly term = m[row][cols[k]] * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  };
  std::vector<size_t> cols(dim);
  for (size_t i = 0; i < dim; ++i) cols[i] = i;
  return Det::of(mat, cols);
}

// Deterministic generators.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  int64_t pick(int64_t lo, int64_t hi) {
    return static_cast<int64_t>(g() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  }
  Rational rational(int64_t lo = -3, int64_t hi = 3, int64_t maxden = 3) {
    return Rational::make(pick(lo, hi), pick(1, maxden));
  }
  Dense dense(size_t maxdeg, bool nonzero = true) {
    Dense d(pick(0, static_cast<int64_t>(maxdeg)) + 1, Rational(0));
    for (auto& c : d) c = Rational(pick(-3, 3));
    d = trim(d);
    if (nonzero && d.empty()) d = {Rational(1)};
    return d;
  }
};

}  // namespace oracle

#endif
