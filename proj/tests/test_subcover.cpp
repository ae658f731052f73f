#include "doctest.h"

#include "noet/subcover.hpp"

#include "oracles.hpp"

using namespace noet;

namespace {

FormulaFamilyCover cover_of(const std::string& text) {
  return FormulaFamilyCover(FamilyPresentation::parse_text(text));
}

void check_trace_progress(const SubcoverReport& rep) {
  for (size_t i = 1; i < rep.trace.size(); ++i)  // step 0 seeds the full space
    CHECK(rep.trace[i].degree_after < rep.trace[i].degree_before);
}

}  // namespace

TEST_CASE("two-piece line cover") {
  auto fam = cover_of("x != 0\nx = 0\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2});
  check_trace_progress(rep);

  auto chosen = collect_pieces(fam, rep.indices, rep.goal_used, 100);
  CHECK(verify_subcover_exact_1d(chosen));

  auto sample = verify_cover_sample(chosen, 1, 101, 101, 7);
  CHECK(sample.exhaustive);
  CHECK(sample.uncovered_count == 0);
}

TEST_CASE("useless candidates are skipped: J = {1, 3}") {
  auto fam = cover_of("x != 0\nx = 1\nx = 0\nx = 2\nx = 3\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 3});
  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  CHECK(verify_subcover_exact_1d(chosen));
}

TEST_CASE("piece with a negative constraint covers part of a locus") {
  // dense piece misses {0, 1}; piece 2 covers {0} only (x != 1 holds there)
  auto fam = cover_of("x*(x - 1) != 0\nx = 0 & x != 1\nx = 1\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2, 3});
  check_trace_progress(rep);
  CHECK(verify_subcover_exact_1d(collect_pieces(fam, rep.indices, false, 100)));
}

TEST_CASE("irrational roots are covered by matching equations") {
  auto fam = cover_of("x^2 - 2 != 0\nx^2 = 2\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2});
  CHECK(verify_subcover_exact_1d(collect_pieces(fam, rep.indices, false, 100)));
}

TEST_CASE("rational coefficients in the dense piece") {
  auto fam = cover_of("2*x - 1 != 0\nx = 1/2\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2});
  CHECK(verify_subcover_exact_1d(collect_pieces(fam, rep.indices, false, 100)));
}

TEST_CASE("infinite template family: only finitely many pieces are pulled") {
  auto fam = cover_of("@family i in 1..\nx != i\n");
  auto rep = extract_subcover(fam, 1, 50);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2});
  CHECK(verify_subcover_exact_1d(collect_pieces(fam, rep.indices, false, 100)));
}

TEST_CASE("axes cover of the plane") {
  auto fam = cover_of("x*y != 0\nx = 0\ny = 0 & x != 0\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2, 3});
  check_trace_progress(rep);

  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  auto exhaustive = verify_cover_sample(chosen, 2, 101, 101 * 101, 7);
  CHECK(exhaustive.exhaustive);
  CHECK(exhaustive.uncovered_count == 0);
  auto sampled = verify_cover_sample(chosen, 2, 2147483647, 10000, 20240601);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.uncovered_count == 0);
}

TEST_CASE("curve components split one by one") {
  auto fam = cover_of("x*(x - 1) != 0\nx = 0\nx = 1\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2, 3});
  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  CHECK(verify_cover_sample(chosen, 2, 101, 101 * 101, 3).uncovered_count == 0);
}

TEST_CASE("zero-dimensional leftover resolved through a rational point") {
  auto fam = cover_of("y != 0\ny = 0 & x != 0\nx = 0 & y = 0\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2, 3});
  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  CHECK(verify_cover_sample(chosen, 2, 101, 101 * 101, 3).uncovered_count == 0);
  CHECK(verify_cover_sample(chosen, 2, 2147483647, 10000, 5).uncovered_count == 0);
}

TEST_CASE("fiber with irrational points is split by a matching equation") {
  auto fam = cover_of("y^2 - 2 != 0\ny^2 = 2 & x != 0\nx = 0 & y^2 = 2\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2, 3});
  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  CHECK(verify_cover_sample(chosen, 2, 101, 101 * 101, 3).uncovered_count == 0);
}

TEST_CASE("circle and its complement") {
  auto fam = cover_of("x^2 + y^2 - 1 != 0\nx^2 + y^2 = 1\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::Ok);
  CHECK(rep.indices == std::vector<uint64_t>{1, 2});
  auto chosen = collect_pieces(fam, rep.indices, false, 100);
  CHECK(verify_cover_sample(chosen, 2, 101, 101 * 101, 3).uncovered_count == 0);
}

TEST_CASE("non-cover: missing point") {
  auto fam = cover_of("x != 0\nx = 1\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::NotCoveredWithin);
  CHECK(rep.family_exhausted);
  REQUIRE(rep.uncovered_example.has_value());
  CHECK(rep.uncovered_example->at("x") == Rational(0));

  auto chosen = collect_pieces(fam, {1, 2}, false, 100);
  std::string why;
  CHECK_FALSE(verify_subcover_exact_1d(chosen, &why));
  CHECK(why.find("x") != std::string::npos);
  auto sample = verify_cover_sample(chosen, 1, 101, 101, 7);
  CHECK(sample.exhaustive);
  CHECK(sample.uncovered_count == 1);
  CHECK(sample.uncovered == std::vector<std::vector<uint64_t>>{{0}});
}

TEST_CASE("non-cover: no dense piece") {
  auto fam = cover_of("x = 0\nx = 1\n");
  auto rep = extract_subcover(fam, 1, 10);
  REQUIRE(rep.status == SubcoverReport::Status::NotCoveredWithin);
  CHECK(rep.detail.find("dense") != std::string::npos);
  REQUIRE(rep.uncovered_example.has_value());
}

TEST_CASE("non-cover in the plane") {
  auto fam = cover_of("x*y != 0\nx = 0\n");
  auto rep = extract_subcover(fam, 2, 10);
  REQUIRE(rep.status == SubcoverReport::Status::NotCoveredWithin);
  REQUIRE(rep.uncovered_example.has_value());
  // the exhibited point lies on y = 0 away from x = 0
  CHECK(rep.uncovered_example->at("y") == Rational(0));
  CHECK(rep.uncovered_example->at("x") != Rational(0));
}

TEST_CASE("unsupported instance: both coordinates irrational") {
  auto fam = cover_of("x^2 - 2 != 0\nx^2 = 2 & y^2 - 2 != 0\nx^2 = 2 & y^2 = 2\n");
  auto rep = extract_subcover(fam, 2, 10);
  CHECK(rep.status == SubcoverReport::Status::UnsupportedInstance);
  CHECK(rep.detail.find("irrational") != std::string::npos);
}

TEST_CASE("empty chosen set leaves every sample uncovered") {
  auto sample = verify_cover_sample({}, 1, 101, 50, 9);
  CHECK(sample.uncovered_count == 50);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
  auto fam = cover_of("x != 0\nx = 1\n");
  auto chosen = collect_pieces(fam, {1, 2}, false, 100);
  auto a = verify_cover_sample(chosen, 1, 2147483647, 5000, 42);
  auto b = verify_cover_sample(chosen, 1, 2147483647, 5000, 42);
  CHECK(a.uncovered == b.uncovered);
  CHECK(a.uncovered_count == b.uncovered_count);
  auto serial = verify_cover_sample(chosen, 1, 2147483647, 5000, 42, false);
  CHECK(serial.uncovered == a.uncovered);
}
