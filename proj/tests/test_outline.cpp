#include <algorithm>
#include <random>

#include "doctest.h"

#include "fixtures.hpp"
#include "ils/outline.hpp"

using namespace ils;

namespace {

// deterministic pseudo-random latin square: cyclic square under random line
// permutations
Grid scrambled_square(int n, std::mt19937& rng) {
  std::vector<int> rp(n), cp(n), sp(n);
  for (int i = 0; i < n; ++i) rp[i] = cp[i] = sp[i] = i;
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  std::shuffle(sp.begin(), sp.end(), rng);
  return permute_square(cyclic_square(n), rp, cp, sp);
}

Parts random_composition(int n, std::mt19937& rng) {
  Parts parts;
  int left = n;
  while (left > 0) {
    int p = 1 + static_cast<int>(rng() % static_cast<unsigned>(left));
    parts.push_back(p);
    left -= p;
  }
  return parts;
}

}  // namespace

TEST_CASE("reduce_modulo reproduces the fixture reduction") {
  Outline o = reduce_modulo(fixtures::fixture_square_8, fixtures::fixture_partition_8,
                            fixtures::fixture_partition_8, fixtures::fixture_partition_8);
  CHECK(fixtures::matches_fixture_reduction(o));
  CHECK(validate_outline(o).empty());
  CHECK(validate_outline(o, {0, 1, 2}).empty());
}

TEST_CASE("reduce_modulo rejects bad partitions") {
  CHECK_THROWS_AS(
      (void)reduce_modulo(fixtures::fixture_square_8, {3, 2}, fixtures::fixture_partition_8,
                          fixtures::fixture_partition_8),
      std::invalid_argument);
}

TEST_CASE("validate_outline catches sum violations") {
  Outline o = reduce_modulo(fixtures::fixture_square_8, fixtures::fixture_partition_8,
                            fixtures::fixture_partition_8, fixtures::fixture_partition_8);
  o.at(0, 0, 0) -= 1;
  CHECK(!validate_outline(o).empty());
  o.at(0, 0, 0) += 1;
  // respect check: cell (1,1) holds 4 copies of group 1, not of group 0
  CHECK(validate_outline(o, {0, 1, 2}).empty());
  std::swap(o.counts[(1 * 5 + 1) * 5 + 1], o.counts[(1 * 5 + 1) * 5 + 0]);
  CHECK(!validate_outline(o, {0, 1, 2}).empty());
}

TEST_CASE("lift realizes the fixture outline and reduce is a left inverse") {
  const Parts& P = fixtures::fixture_partition_8;
  Outline o = reduce_modulo(fixtures::fixture_square_8, P, P, P);
  Grid g = lift(o);
  CHECK(is_latin(g));
  CHECK(reduce_modulo(g, P, P, P) == o);
}

TEST_CASE("lift rejects invalid outlines") {
  Outline o({2, 2}, {2, 2}, {2, 2});
  o.at(0, 0, 0) = 4;  // row/col sums now violated elsewhere
  CHECK_THROWS_AS((void)lift(o), std::invalid_argument);
}

TEST_CASE("ils_from_outline attaches subsquare specs") {
  const Parts& P = fixtures::fixture_partition_8;
  Outline o = reduce_modulo(fixtures::fixture_square_8, P, P, P);
  Square sq = ils_from_outline(o, 3);
  CHECK(sq.order == 8);
  REQUIRE(sq.subsquares.size() == 3);
  CHECK(sq.subsquares[2].row_offset == 5);
  CHECK(verify_ils(sq.grid, {3, 2, 1}).ok);
}

TEST_CASE("random reduce -> lift -> reduce fixed points") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9u);
    Grid L = scrambled_square(n, rng);
    Parts P = random_composition(n, rng);
    Parts Q = random_composition(n, rng);
    Parts R = random_composition(n, rng);
    CAPTURE(trial);
    CAPTURE(n);
    Outline o = reduce_modulo(L, P, Q, R);
    REQUIRE(validate_outline(o).empty());
    Grid g = lift(o);
    CHECK(reduce_modulo(g, P, Q, R) == o);
  }
}

TEST_CASE("Rat arithmetic normalizes") {
  CHECK(Rat(4, 6) == Rat(2, 3));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 1) == Rat(1));
  CHECK(Rat(1, 2) - Rat(1, 2) == Rat(0));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("symmetrize the fixture outline gives a valid respected ROS") {
  const Parts& P = fixtures::fixture_partition_8;
  Outline o = reduce_modulo(fixtures::fixture_square_8, P, P, P);
  Ros r = symmetrize(o);
  CHECK(r.at(0, 0, 0) == Rat(9));
  CHECK(r.at(1, 1, 1) == Rat(4));
  CHECK(r.at(2, 2, 2) == Rat(1));
  CHECK(validate_ros(r, {0, 1, 2}).empty());
  // symmetry spot check
  CHECK(r.at(0, 1, 2) == r.at(2, 1, 0));
  CHECK(r.at(0, 1, 2) == r.at(1, 2, 0));
}
