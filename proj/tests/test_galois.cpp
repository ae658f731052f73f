#include "doctest.h"

#include <algorithm>

#include "noet/galois.hpp"

#include "oracles.hpp"

using namespace noet;

namespace {

AffineSpace line(uint64_t p) { return AffineSpace(PrimeField(p), {"x"}); }
AffineSpace plane(uint64_t p) { return AffineSpace(PrimeField(p), {"x", "y"}); }

// Independent brute-force evaluation used as the hold_set oracle: walks
// the candidate polynomials again with plain Poly::eval.
bool vanishes_on(const Poly& f, const PointSet& A, const AffineSpace& sp) {
  for (uint64_t idx : A.indices()) {
    auto pt = sp.decode(idx);
    std::map<std::string, Rational> point;
    for (size_t i = 0; i < sp.vars().size(); ++i)
      point[sp.vars()[i]] = Rational(Int(static_cast<unsigned long>(pt[i])));
    if (!f.eval(point).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("affine space indexing round trips") {
  AffineSpace sp = plane(5);
  CHECK(sp.size() == 25);
  for (uint64_t i = 0; i < sp.size(); ++i) CHECK(sp.encode(sp.decode(i)) == i);
  CHECK_THROWS_AS(AffineSpace(PrimeField(101), {"a", "b", "c"}), Error);  // 101^3 > 10^6
}

TEST_CASE("solution_set worked examples") {
  // x^2 + x = 0 over F_2 is the whole line
  PointSet s1 = solution_set({parse_prop_formula("x^2 + x = 0")}, line(2));
  CHECK(s1.count() == 2);

  PointSet s2 = solution_set({parse_prop_formula("x != 0")}, line(3));
  CHECK(s2.indices() == std::vector<uint64_t>{1, 2});

  PointSet s3 = solution_set({}, line(7));
  CHECK(s3.count() == 7);
}

TEST_CASE("hold_set worked examples") {
  // A = {0} over F_3, degree 2: contains x and x^2, excludes x - 1
  AffineSpace sp = line(3);
  BoundedUniverse u(sp, 2);
  CHECK(u.size() == 27);
  PointSet A(sp.size());
  A.set(0);
  auto held = hold_set(A, u);
  Domain f3 = Domain::prime_field(3);
  Poly x = Poly::variable("x", f3);
  auto has = [&](const Poly& f) {
    return std::find(held.begin(), held.end(), f) != held.end();
  };
  CHECK(has(x));
  CHECK(has(x * x));
  CHECK_FALSE(has(x - Poly::constant(Rational(1), f3)));

  // whole space over F_2, degree 2: Fermat identity x^2 + x vanishes
  AffineSpace sp2 = line(2);
  BoundedUniverse u2(sp2, 2);
  auto held2 = hold_set(PointSet::full(sp2.size()), u2);
  Domain f2 = Domain::prime_field(2);
  Poly x2 = Poly::variable("x", f2);
  CHECK(std::find(held2.begin(), held2.end(), x2 * x2 + x2) != held2.end());
  CHECK(std::find(held2.begin(), held2.end(), Poly::zero(f2)) != held2.end());

  // empty set: the entire universe holds vacuously
  CHECK(hold_set_indices(PointSet(sp.size()), u).size() == u.size());
}

TEST_CASE("hold_set agrees with direct evaluation") {
  AffineSpace sp = plane(3);
  BoundedUniverse u(sp, 1);
  oracle::Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    PointSet A(sp.size());
    for (uint64_t i = 0; i < sp.size(); ++i)
      if (rng.pick(0, 2) == 0) A.set(i);
    auto idx = hold_set_indices(A, u);
    for (size_t i = 0; i < u.size(); ++i) {
      bool held = std::find(idx.begin(), idx.end(), i) != idx.end();
      CHECK(held == vanishes_on(u.poly(i), A, sp));
    }
  }
}

TEST_CASE("closure worked examples") {
  AffineSpace sp = line(3);
  BoundedUniverse u(sp, 2);
  Domain f3 = Domain::prime_field(3);
  Poly x = Poly::variable("x", f3);

  auto cl = closure_eq({x}, u);
  CHECK(std::find(cl.begin(), cl.end(), x * x) != cl.end());

  // idempotence
  std::vector<size_t> t0{*u.index_of(x)};
  auto c1 = closure_indices(t0, u);
  auto c2 = closure_indices(c1, u);
  CHECK(c1 == c2);

  // closure of {0} equals hold_set of the whole space
  auto cz = closure_eq({Poly::zero(f3)}, u);
  auto hw = hold_set(PointSet::full(sp.size()), u);
  CHECK(cz == hw);
}

TEST_CASE("galois connection laws hold exhaustively") {
  oracle::Rng rng(4242);
  for (uint64_t p : {2ull, 3ull, 5ull}) {
    for (size_t nv : {1u, 2u}) {
      AffineSpace sp(PrimeField(p), nv == 1 ? std::vector<std::string>{"x"}
                                            : std::vector<std::string>{"x", "y"});
      BoundedUniverse u(sp, 2);
      for (int trial = 0; trial < 8; ++trial) {
        // random T subseteq S in the universe, random A subseteq B of points
        std::vector<size_t> S, T;
        for (int k = 0; k < 6; ++k) S.push_back(static_cast<size_t>(
            rng.pick(0, static_cast<int64_t>(u.size() - 1))));
        for (size_t i : S)
          if (rng.pick(0, 1)) T.push_back(i);
        PointSet A(sp.size()), B(sp.size());
        for (uint64_t i = 0; i < sp.size(); ++i) {
          if (rng.pick(0, 2) == 0) {
            B.set(i);
            if (rng.pick(0, 1)) A.set(i);
          }
        }
        auto sol = [&](const std::vector<size_t>& idx) {
          PointSet s = PointSet::full(sp.size());
          for (size_t i : idx) s = s & u.zero_set(i);
          return s;
        };
        // antitone both ways
        CHECK(sol(S).is_subset_of(sol(T)));
        auto hb = hold_set_indices(B, u), ha = hold_set_indices(A, u);
        CHECK(std::includes(ha.begin(), ha.end(), hb.begin(), hb.end()));
        // extensive both ways
        CHECK(A.is_subset_of(sol(hold_set_indices(A, u))));
        auto ct = closure_indices(T, u);
        bool extensive = true;
        for (size_t i : T)
          if (!std::binary_search(ct.begin(), ct.end(), i)) extensive = false;
        CHECK(extensive);
        // idempotent and solution-stable
        CHECK(closure_indices(ct, u) == ct);
        CHECK(sol(ct) == sol(T));
      }
    }
  }
}

TEST_CASE("predicate evaluation by quantifier expansion") {
  AffineSpace sp = line(5);
  PredFormula f = parse_formula("exists y. y*y = x");  // x is a square
  PointSet squares(sp.size());
  for (uint64_t i = 0; i < sp.size(); ++i)
    if (eval_pred_over_fp(f, sp, {i})) squares.set(i);
  CHECK(squares.indices() == std::vector<uint64_t>{0, 1, 4});  // QRs mod 5

  PredFormula g = parse_formula("forall y. y*x = y");
  PointSet ones(sp.size());
  for (uint64_t i = 0; i < sp.size(); ++i)
    if (eval_pred_over_fp(g, sp, {i})) ones.set(i);
  CHECK(ones.indices() == std::vector<uint64_t>{1});
}

TEST_CASE("net_finite_basis worked examples") {
  // {not(x = a) : a in F_5} keeps all five formulas; the solution is empty
  std::vector<PredFormula> fs;
  for (int a = 0; a < 5; ++a) fs.push_back(parse_formula("x != " + std::to_string(a)));
  auto fam = FamilyPresentation::explicit_list(fs);
  auto res = net_finite_basis(fam, line(5));
  CHECK(res.kept == std::vector<uint64_t>{1, 2, 3, 4, 5});
  CHECK(res.solution.none());

  // duplicates are never kept
  auto fam2 = FamilyPresentation::explicit_list(
      {parse_formula("x = 0"), parse_formula("x = 0"), parse_formula("x != 1")});
  auto res2 = net_finite_basis(fam2, line(5));
  CHECK(res2.kept == std::vector<uint64_t>{1});

  // later formulas with the same solution set are skipped
  auto fam3 = FamilyPresentation::explicit_list(
      {parse_formula("x = 0"), parse_formula("x^2 = 0"), parse_formula("x^3 = 0")});
  auto res3 = net_finite_basis(fam3, line(7));
  CHECK(res3.kept == std::vector<uint64_t>{1});
  CHECK(res3.solution.indices() == std::vector<uint64_t>{0});
}

TEST_CASE("net_finite_basis keeps solution_set equality with the full family") {
  oracle::Rng rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PredFormula> fs;
    int n = static_cast<int>(rng.pick(1, 8));
    for (int i = 0; i < n; ++i) {
      long a = rng.pick(0, 4);
      long b = rng.pick(0, 4);
      std::string s = rng.pick(0, 1) ? "x != " + std::to_string(a)
                                     : "x^2 + " + std::to_string(b) + "*x + " +
                                           std::to_string(a) + " = 0";
      fs.push_back(parse_formula(s));
    }
    auto fam = FamilyPresentation::explicit_list(fs);
    AffineSpace sp = line(5);
    auto res = net_finite_basis(fam, sp);
    std::vector<PredFormula> kept_formulas;
    for (uint64_t i : res.kept) kept_formulas.push_back(fam.instantiate(i));
    PointSet direct = solution_set_pred(fs, sp);
    PointSet from_kept = solution_set_pred(kept_formulas, sp);
    CHECK(direct == from_kept);
    CHECK(res.kept.size() <= sp.size() + 1);
  }
}

TEST_CASE("kernels: serial and parallel scans agree") {
  AffineSpace sp = plane(31);  // 961 points
  PropFormula f = parse_prop_formula("(x^2 + y^2 = 1 | x*y != 3) & x + y != 7");
  FpFormula compiled = FpFormula::compile(f, sp.field(), sp.vars());
  CHECK(scan_formula_serial(sp, compiled) == scan_formula_parallel(sp, compiled));

  BoundedUniverse u(AffineSpace(PrimeField(3), {"x", "y"}), 2, false);
  BoundedUniverse upar(AffineSpace(PrimeField(3), {"x", "y"}), 2, true);
  REQUIRE(u.size() == upar.size());
  for (size_t i = 0; i < u.size(); ++i) CHECK(u.zero_set(i) == upar.zero_set(i));

  // sampling kernel
  PrimeField big(2147483647);
  std::vector<FpPiece> pieces;
  pieces.push_back({{}, {FpPoly::compile(Poly::variable("x"), big, {"x", "y"})}});
  pieces.push_back({{FpPoly::compile(Poly::variable("x"), big, {"x", "y"})}, {}});
  oracle::Rng rng(8);
  std::vector<uint64_t> pts;
  for (int i = 0; i < 4096; ++i) pts.push_back(static_cast<uint64_t>(rng.pick(0, 1 << 30)));
  auto fs = uncovered_flags_serial(pieces, pts, 2, big);
  auto fp = uncovered_flags_parallel(pieces, pts, 2, big);
  CHECK(fs == fp);
  CHECK(std::count(fs.begin(), fs.end(), 1) == 0);  // the two pieces cover everything
}
