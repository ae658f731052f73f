#include "doctest.h"

#include <sstream>

#include "noet/noether.hpp"
#include "noet/reports.hpp"

#include "oracles.hpp"

using namespace noet;

TEST_CASE("lognet refutation worked examples") {
  auto r1 = lognet_refute_infinite({Rational(0), Rational(1), Rational(2)}, {1, 2, 3});
  CHECK(r1.witness.at("x") == Rational(3));
  CHECK(r1.ok());
  for (const auto& pr : r1.premise_results) CHECK(pr.holds);

  auto r2 = lognet_refute_infinite({Rational(5)}, {});
  CHECK(r2.witness.at("x") == Rational(1));

  auto r3 = lognet_refute_infinite({Rational::make(-1, 2)}, {1});
  CHECK(r3.witness.at("x") == Rational::make(1, 2));

  CHECK_THROWS_AS(lognet_refute_infinite({Rational(1), Rational(1)}, {1}), Error);
  CHECK_THROWS_AS(lognet_refute_infinite({Rational(1)}, {2}), Error);
}

TEST_CASE("lognet witness avoids every selected point") {
  oracle::Rng rng(2025);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Rational> pts;
    int n = static_cast<int>(rng.pick(1, 40));
    while (static_cast<int>(pts.size()) < n) pts.insert(rng.rational(-50, 50, 9));
    std::vector<Rational> enumeration(pts.begin(), pts.end());
    std::vector<uint64_t> J;
    for (uint64_t j = 1; j <= enumeration.size(); ++j)
      if (rng.pick(0, 1)) J.push_back(j);
    auto rep = lognet_refute_infinite(enumeration, J);
    const Rational& x = rep.witness.at("x");
    for (uint64_t j : J) CHECK(x != enumeration[j - 1]);
  }
}

TEST_CASE("dennet_r premise decision is exact") {
  CHECK(dennet_r_premise_holds(1, Rational::make(1, 2)));
  CHECK_FALSE(dennet_r_premise_holds(4, Rational(1)));
  CHECK(dennet_r_premise_holds(7, Rational(0)));
  CHECK(dennet_r_premise_holds(4, Rational::make(1, 2)));       // 1/4 - 1/4 = 0 boundary
  CHECK_FALSE(dennet_r_premise_holds(5, Rational::make(1, 2)));  // 1/5 < 1/4
  CHECK_THROWS_AS(dennet_r_premise_holds(0, Rational(0)), Error);
}

TEST_CASE("dennet_r witness worked examples") {
  auto r1 = dennet_r_witness({1});
  CHECK(r1.witness.at("x") == Rational::make(1, 2));
  auto r2 = dennet_r_witness({1, 2, 3, 4});
  CHECK(r2.witness.at("x") == Rational::make(1, 5));
  for (const auto& pr : r2.premise_results) CHECK(pr.holds);
  auto r3 = dennet_r_witness({});
  CHECK(r3.witness.at("x") == Rational(1));
}

TEST_CASE("dennet_r witness verifies against every premise in J") {
  oracle::Rng rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<uint64_t> J;
    int n = static_cast<int>(rng.pick(1, 60));
    while (static_cast<int>(J.size()) < n)
      J.insert(static_cast<uint64_t>(rng.pick(1, 100000)));
    auto rep = dennet_r_witness({J.begin(), J.end()});
    const Rational& x = rep.witness.at("x");
    CHECK(x != Rational(0));
    for (uint64_t i : J) CHECK(dennet_r_premise_holds(i, x));
    // once the index passes 1/x^2 the premise must fail
    uint64_t m = *J.rbegin();
    CHECK_FALSE(dennet_r_premise_holds((m + 1) * (m + 1) + 1, x));
  }
}

TEST_CASE("dennet_acf_check: constant family exists y. x*y = 1 implies x != 0") {
  auto premises = FamilyPresentation::parse_text("@family i in 1..\nexists y. x*y = 1\n");
  auto rep = dennet_acf_check(premises, parse_formula("x != 0"), 50);
  REQUIRE(rep.ok());
  CHECK(rep.indices == std::vector<uint64_t>{1});
  REQUIRE(!rep.premise_qe.empty());
  CHECK(rep.premise_qe[0].eliminated_to == "x != 0");

  // independent re-verification through the sentence decision procedure
  CHECK(decide_sentence_acf(
      parse_formula("forall x. (exists y. x*y = 1) -> (x != 0)")));
}

TEST_CASE("dennet_acf_check: the Theorem 2 family is not noetherian-certifiable over ACF") {
  auto premises =
      FamilyPresentation::parse_text("@family i in 1..\nexists y. i*(x^2 + y^2) = 1\n");
  auto rep = dennet_acf_check(premises, parse_formula("x = 0"), 12);
  CHECK(rep.status == "not_covered_within");
  REQUIRE(!rep.premise_qe.empty());
  for (const auto& e : rep.premise_qe) {
    CAPTURE(e.index);
    CHECK(e.eliminated_to == "true");
    CHECK(e.clause_count == 0);
  }
  // the contrast: over the reals the same family does refute (Theorem 2),
  // over ACF every premise is trivially true and the cover is just {x = 0}
}

TEST_CASE("dennet_acf_check: true goal needs no premises") {
  auto premises = FamilyPresentation::parse_text("@family i in 1..\nexists y. x*y = 1\n");
  auto rep = dennet_acf_check(premises, parse_formula("true"), 10);
  REQUIRE(rep.ok());
  CHECK(rep.indices.empty());
}

TEST_CASE("dennet0 worked examples") {
  auto taut = FamilyPresentation::parse_text("x = 0 | x != 0\n");
  auto r1 = dennet0_check(taut, parse_prop_formula("true"), 10);
  REQUIRE(r1.ok());
  CHECK(r1.indices.empty());

  auto incompatible = FamilyPresentation::parse_text("x = 0\nx = 1\n");
  auto r2 = dennet0_check(incompatible, parse_prop_formula("1 = 0"), 10);
  REQUIRE(r2.ok());
  CHECK(r2.indices == std::vector<uint64_t>{1, 2});

  auto same = FamilyPresentation::parse_text("x != 0\n");
  auto r3 = dennet0_check(same, parse_prop_formula("x != 0"), 10);
  REQUIRE(r3.ok());
  CHECK(r3.indices == std::vector<uint64_t>{1});
}

TEST_CASE("dennet results re-verify as ground sentences and under enlarged J") {
  // premises x = 0 and x = 1 jointly force anything, e.g. 1 = 0
  auto incompatible = FamilyPresentation::parse_text("x = 0\nx = 1\n");
  auto rep = dennet0_check(incompatible, parse_prop_formula("1 = 0"), 10);
  REQUIRE(rep.ok());

  std::ostringstream text;
  text << "forall x. (";
  bool first = true;
  for (uint64_t i : rep.indices) {
    if (!first) text << " & ";
    first = false;
    text << "(" << incompatible.instantiate(i).to_string() << ")";
  }
  text << ") -> (1 = 0)";
  CHECK(decide_sentence_acf(parse_formula(text.str())));

  // enlarging J preserves the certificate: with premises {1, 2} already
  // sufficient, adding nothing new cannot break the implication
  CHECK(decide_sentence_acf(
      parse_formula("forall x. (x = 0 & x = 1 & x = 1) -> (1 = 0)")));
}

TEST_CASE("witness reports serialize deterministically") {
  auto rep = dennet_r_witness({1, 2, 3, 4});
  auto j1 = witness_json(rep).dump(2);
  auto j2 = witness_json(dennet_r_witness({1, 2, 3, 4})).dump(2);
  CHECK(j1 == j2);
  CHECK(j1.find("\"1/5\"") != std::string::npos);
}
