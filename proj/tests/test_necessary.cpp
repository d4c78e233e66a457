#include <numeric>
#include <vector>

#include "doctest.h"

#include "ils/necessary.hpp"

using namespace ils;

namespace {

// every nonincreasing nonempty part list with sum <= n
std::vector<Parts> all_part_lists(int n) {
  std::vector<Parts> out;
  std::vector<int> cur;
  auto rec = [&](auto&& rec, int left, int maxp) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rec, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace

TEST_CASE("the (2,2) order-5 violation is the canonical certificate") {
  auto v = scan_necessary({2, 2}, 5);
  REQUIRE(v.has_value());
  CHECK(v->A == std::vector<int>{1});
  CHECK(v->B == std::vector<int>{2});
  CHECK(v->C.empty());
  CHECK(v->D.empty());
  CHECK(v->lhs == 0);
  CHECK(v->rhs == 2);
  CHECK(v->digits == std::vector<int>{1, 2, 0});
}

TEST_CASE("necessary_sides evaluates the inequality") {
  // h = (2,2,1): A={1}, B={2}, slack unassigned
  auto [lhs, rhs] = necessary_sides({2, 2, 1}, {1, 2, 0});
  CHECK(lhs == 0);
  CHECK(rhs == 2);
  // moving slack into B changes both sides
  auto [lhs2, rhs2] = necessary_sides({2, 2, 1}, {1, 2, 2});
  CHECK(lhs2 == (2 * 2) + (3 * 3) - (4 + 4));
  CHECK(rhs2 == 2 * 3);
}

TEST_CASE("violation_from_digits reconstructs the record") {
  Violation v = violation_from_digits({2, 2, 1}, {1, 2, 0});
  CHECK(v.A == std::vector<int>{1});
  CHECK(v.B == std::vector<int>{2});
  CHECK(v.lhs == 0);
  CHECK(v.rhs == 2);
}

TEST_CASE("check_necessary holds for feasible families") {
  CHECK(check_necessary({3, 2, 1}, 9));
  CHECK(check_necessary({2, 2}, 6));
  CHECK(check_necessary({1}, 1));
  CHECK(check_necessary({3, 3, 3}, 9));
  CHECK(!check_necessary({2, 2}, 5));
  CHECK(!check_necessary({3, 1}, 5));
}

TEST_CASE("pruned scan digit restriction and genuineness") {
  for (int n = 2; n <= 7; ++n) {
    for (const Parts& parts : all_part_lists(n)) {
      if (std::accumulate(parts.begin(), parts.end(), 0) > n) continue;
      auto pruned = scan_necessary_serial(parts, n, true);
      auto full = scan_necessary_serial(parts, n, false);
      CAPTURE(n);
      CAPTURE(parts.size());
      // pruning preserves existence of a violation
      CHECK(pruned.has_value() == full.has_value());
      if (pruned) {
        CHECK(pruned->lhs < pruned->rhs);
        CHECK((pruned->digits[0] == 0 || pruned->digits[0] == 1 || pruned->digits[0] == 3));
        auto sides = necessary_sides(
            [&] {
              std::vector<int> h = parts;
              h.push_back(n - std::accumulate(parts.begin(), parts.end(), 0));
              return h;
            }(),
            pruned->digits);
        CHECK(sides.first == pruned->lhs);
        CHECK(sides.second == pruned->rhs);
      }
    }
  }
}

TEST_CASE("parallel scan matches the serial reference") {
  for (int n = 2; n <= 8; ++n) {
    for (const Parts& parts : all_part_lists(std::min(n, 7))) {
      auto serial = scan_necessary_serial(parts, n);
      auto parallel = scan_necessary(parts, n);
      CAPTURE(n);
      REQUIRE(serial.has_value() == parallel.has_value());
      if (serial) {
        CHECK(serial->digits == parallel->digits);
        CHECK(serial->lhs == parallel->lhs);
        CHECK(serial->rhs == parallel->rhs);
      }
    }
  }
  // a larger instance exercising multi-chunk parallel scans
  Parts big(9, 2);
  auto serial = scan_necessary_serial(big, 27);
  auto parallel = scan_necessary(big, 27);
  CHECK(serial.has_value() == parallel.has_value());
}

TEST_CASE("unpruned scan refuses oversized instances") {
  Parts parts(13, 1);
  CHECK_THROWS_AS((void)scan_necessary_serial(parts, 30, false), std::invalid_argument);
}

TEST_CASE("scan requires parts to fit the order") {
  CHECK_THROWS_AS((void)scan_necessary({3, 3}, 5), std::invalid_argument);
}
