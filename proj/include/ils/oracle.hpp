#pragma once
// Independent exhaustive oracle for small orders: backtracking over cells in
// row-major order with bitmask row/column availability, diagonal subsquare
// blocks constrained to their symbol ranges, first row/column of each block
// normalized (sound for existence: any witness can be permuted into that form).

#include <optional>

#include "ils/core.hpp"

namespace ils {

struct OracleResult {
  enum class Status { Exists, NotExists, Unknown } status = Status::Unknown;
  std::optional<Grid> witness;
  long long nodes = 0;
};

OracleResult brute_force_ils(const Parts& parts, int n, long long budget = 1'000'000'000);

}  // namespace ils
