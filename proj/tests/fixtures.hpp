#pragma once
// Shared test fixtures: a hand-checked ILS(8; 3,2,1) and its expected
// reduction modulo (3,2,1,1,1) on all three axes.

#include <map>
#include <utility>

#include "ils/core.hpp"
#include "ils/outline.hpp"

namespace fixtures {

inline const ils::Grid fixture_square_8 = {
    {1, 2, 3, 6, 7, 8, 5, 4},
    {2, 3, 1, 8, 6, 5, 4, 7},
    {3, 1, 2, 7, 8, 4, 6, 5},
    {8, 7, 6, 4, 5, 1, 2, 3},
    {7, 6, 8, 5, 4, 2, 3, 1},
    {5, 8, 4, 3, 1, 6, 7, 2},
    {6, 4, 5, 2, 3, 7, 1, 8},
    {4, 5, 7, 1, 2, 3, 8, 6},
};

inline const ils::Parts fixture_parts_8 = {3, 2, 1};      // subsquare orders
inline const ils::Parts fixture_partition_8 = {3, 2, 1, 1, 1};  // full partition of 8

// expected nonzero counts of reduce_modulo(fixture_square_8, partition^3):
// (row group, col group) -> {symbol group: count}.
inline const std::map<std::pair<int, int>, std::map<int, int>> fixture_reduce_8 = {
    {{0, 0}, {{0, 9}}},
    {{0, 1}, {{2, 2}, {3, 2}, {4, 2}}},
    {{0, 2}, {{1, 2}, {4, 1}}},
    {{0, 3}, {{1, 2}, {2, 1}}},
    {{0, 4}, {{1, 2}, {3, 1}}},
    {{1, 0}, {{2, 2}, {3, 2}, {4, 2}}},
    {{1, 1}, {{1, 4}}},
    {{1, 2}, {{0, 2}}},
    {{1, 3}, {{0, 2}}},
    {{1, 4}, {{0, 2}}},
    {{2, 0}, {{1, 2}, {4, 1}}},
    {{2, 1}, {{0, 2}}},
    {{2, 2}, {{2, 1}}},
    {{2, 3}, {{3, 1}}},
    {{2, 4}, {{0, 1}}},
    {{3, 0}, {{1, 2}, {2, 1}}},
    {{3, 1}, {{0, 2}}},
    {{3, 2}, {{3, 1}}},
    {{3, 3}, {{0, 1}}},
    {{3, 4}, {{4, 1}}},
    {{4, 0}, {{1, 2}, {3, 1}}},
    {{4, 1}, {{0, 2}}},
    {{4, 2}, {{0, 1}}},
    {{4, 3}, {{4, 1}}},
    {{4, 4}, {{2, 1}}},
};

// True iff the outline's counts match the expected sparse map exactly.
inline bool matches_fixture_reduction(const ils::Outline& o) {
  if (o.u() != 5 || o.v() != 5 || o.t() != 5) return false;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      auto it = fixture_reduce_8.find({i, j});
      for (int l = 0; l < 5; ++l) {
        int want = 0;
        if (it != fixture_reduce_8.end()) {
          auto lt = it->second.find(l);
          if (lt != it->second.end()) want = lt->second;
        }
        if (o.at(i, j, l) != want) return false;
      }
    }
  return true;
}

}  // namespace fixtures
