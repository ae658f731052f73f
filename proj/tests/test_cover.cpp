#include "doctest.h"

#include "noet/galois.hpp"
#include "noet/pseudoaffine.hpp"

#include "oracles.hpp"

using namespace noet;

namespace {

PropFormula piece_formula(const PseudoaffineVariety& v) {
  std::vector<PropFormula> lits;
  for (const auto& p : v.positive) lits.push_back(PropFormula::atom(p));
  for (const auto& q : v.negated) lits.push_back(PropFormula::negation(PropFormula::atom(q)));
  if (lits.empty()) return PropFormula::tru();
  return PropFormula::conj(std::move(lits));
}

std::vector<CoverPiece> take(const CoverFamily& fam, size_t k) {
  std::vector<CoverPiece> out;
  auto cur = fam.scan();
  while (out.size() < k) {
    auto piece = cur->next();
    if (!piece) break;
    out.push_back(*piece);
  }
  return out;
}

}  // namespace

TEST_CASE("to_pseudoaffine worked examples") {
  auto v1 = to_pseudoaffine(parse_prop_formula("x != 0"));
  CHECK(v1.positive.empty());
  CHECK(v1.negated == std::vector<Poly>{Poly::variable("x")});

  auto v2 = to_pseudoaffine(parse_prop_formula("x = 0 & y != 1"));
  CHECK(v2.positive == std::vector<Poly>{Poly::variable("x")});
  CHECK(v2.negated ==
        std::vector<Poly>{Poly::variable("y") - Poly::constant(Rational(1))});

  auto v3 = to_pseudoaffine(PropFormula::tru());
  CHECK(v3.positive.empty());
  CHECK(v3.negated.empty());

  CHECK_THROWS_AS(to_pseudoaffine(parse_prop_formula("x = 0 | y = 0")), Error);
}

TEST_CASE("is_dense_fullspace worked examples") {
  PseudoaffineVariety open1{{}, {Poly::variable("x")}, {"x"}};
  CHECK(is_dense_fullspace(open1, 1));
  PseudoaffineVariety plane{{Poly::variable("x")}, {}, {"x"}};
  CHECK_FALSE(is_dense_fullspace(plane, 1));
  PseudoaffineVariety empty{{}, {Poly::zero()}, {"x"}};
  CHECK_FALSE(is_dense_fullspace(empty, 1));
  PseudoaffineVariety trivial{{Poly::zero()}, {}, {"x"}};
  CHECK(is_dense_fullspace(trivial, 1));
}

TEST_CASE("membership worked examples") {
  auto v = to_pseudoaffine(parse_prop_formula("x != 0"));
  CHECK(membership(v, {{"x", Rational(1)}}));
  auto w = to_pseudoaffine(parse_prop_formula("x = 0 & y != 0"));
  CHECK_FALSE(membership(w, {{"x", Rational(0)}, {"y", Rational(0)}}));
  PseudoaffineVariety whole{{}, {}, {"x"}};
  CHECK(membership(whole, {{"x", Rational(5)}}));
  CHECK_THROWS_AS(membership(w, {{"x", Rational(0)}}), Error);
}

TEST_CASE("implication_to_cover: single premise equals goal") {
  auto premises = FamilyPresentation::explicit_list({parse_formula("x = 0")});
  auto cover = implication_to_cover(premises, parse_prop_formula("x = 0"));
  auto pieces = take(*cover, 10);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].prov.kind == CoverProvenance::Kind::Goal);
  CHECK(pieces[0].variety.positive == std::vector<Poly>{Poly::variable("x")});
  CHECK(pieces[1].prov.kind == CoverProvenance::Kind::Premise);
  CHECK(pieces[1].prov.premise_index == 1);
  CHECK(pieces[1].variety.negated == std::vector<Poly>{Poly::variable("x")});

  // the two pieces cover the affine line: exhaustive over F_5
  AffineSpace line(PrimeField(5), {"x"});
  PointSet uni(line.size());
  for (const auto& piece : pieces)
    uni = uni | solution_set({piece_formula(piece.variety)}, line);
  CHECK(uni.count() == line.size());
}

TEST_CASE("implication_to_cover: enumerated exclusions with a false goal") {
  auto premises = FamilyPresentation::parse_text("@family i in 1..\nx != i\n");
  auto cover = implication_to_cover(premises, parse_prop_formula("1 = 0"));
  auto pieces = take(*cover, 4);
  REQUIRE(pieces.size() == 4);
  // the goal piece is the empty set {1 = 0}
  CHECK(pieces[0].prov.kind == CoverProvenance::Kind::Goal);
  CHECK(pieces[0].variety.positive == std::vector<Poly>{Poly::constant(Rational(1))});
  // premise i yields the single point {x = i}
  for (uint64_t i = 1; i <= 3; ++i) {
    CHECK(pieces[i].prov.premise_index == i);
    CHECK(pieces[i].variety.positive ==
          std::vector<Poly>{Poly::variable("x") - Poly::constant(Rational(Int(static_cast<unsigned long>(i))))});
  }
}

TEST_CASE("implication_to_cover: disjunctive premise and product goal cover the plane") {
  auto premises = FamilyPresentation::explicit_list({parse_formula("x = 0 | y = 0")});
  auto cover = implication_to_cover(premises, parse_prop_formula("x*y = 0"));
  auto pieces = take(*cover, 10);
  REQUIRE(pieces.size() == 2);
  // goal piece {xy = 0}; premise piece {x != 0 & y != 0}
  CHECK(pieces[0].variety.positive.size() == 1);
  CHECK(pieces[1].variety.negated.size() == 2);

  AffineSpace plane(PrimeField(3), {"x", "y"});
  PointSet uni(plane.size());
  for (const auto& piece : pieces)
    uni = uni | solution_set({piece_formula(piece.variety)}, plane);
  CHECK(uni.count() == plane.size());
}

TEST_CASE("implication_to_cover soundness at finite scale") {
  // union of pieces == points where some premise fails or the goal holds
  oracle::Rng rng(555);
  std::vector<std::string> premise_pool = {
      "x = 0", "x != 1", "x = 0 | y = 1", "x*y = 0 & x != 2", "y^2 = x", "x + y != 0"};
  std::vector<std::string> goal_pool = {"x = 0", "x*y = 0", "x = 0 & y = 0", "x != 0 | y = 0"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PredFormula> ps;
    int np = static_cast<int>(rng.pick(1, 3));
    for (int i = 0; i < np; ++i)
      ps.push_back(parse_formula(premise_pool[static_cast<size_t>(
          rng.pick(0, static_cast<int64_t>(premise_pool.size() - 1)))]));
    PropFormula goal = parse_prop_formula(goal_pool[static_cast<size_t>(
        rng.pick(0, static_cast<int64_t>(goal_pool.size() - 1)))]);
    auto fam = FamilyPresentation::explicit_list(ps);
    auto cover = implication_to_cover(fam, goal);
    auto pieces = take(*cover, 200);

    for (uint64_t p : {3ull, 5ull, 7ull}) {
      AffineSpace plane(PrimeField(p), {"x", "y"});
      PointSet uni(plane.size());
      for (const auto& piece : pieces)
        uni = uni | solution_set({piece_formula(piece.variety)}, plane);
      std::vector<PropFormula> prem_matrices;
      for (const auto& f : ps) prem_matrices.push_back(f.matrix());
      PointSet all_premises = solution_set(prem_matrices, plane);
      PointSet goal_set = solution_set({goal}, plane);
      PointSet expected = all_premises.complement() | goal_set;
      CAPTURE(trial);
      CAPTURE(p);
      CHECK(uni == expected);
    }
  }
}

TEST_CASE("premise scan limit ends cursors on piece-free families") {
  // every premise is True, whose CNF has no clauses and yields no pieces
  auto premises = FamilyPresentation::parse_text("@family i in 1..\ntrue\n");
  ImplicationCoverFamily cover(premises, PropFormula::fls(), {}, {}, 25);
  auto pieces = take(cover, 100);
  CHECK(pieces.empty());
}
