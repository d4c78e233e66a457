#pragma once
// The decision layer: combines the exact characterizations (k <= 3, uniform
// parts, large slack), the necessary-condition scan, and the brute-force
// oracle into one verdict.

#include <optional>
#include <string>

#include "ils/core.hpp"
#include "ils/necessary.hpp"

namespace ils {

struct ExistenceVerdict {
  enum class Status { Exists, NotExists, Unknown };
  Status status = Status::Unknown;
  std::optional<Grid> witness;       // set on every Exists
  std::optional<Violation> violation;  // set on NotExists when the scan found one
  std::string citation;  // characterization name / search note when no violation applies
};

// Applies, in order: (1) the k=1 test (n = h or n >= 2h); (2) the k=2 test
// (n - h1 - h2 >= h1); (3) the k=3 three-branch test; (4) uniform parts
// (n >= k*h, always true once sum(parts) <= n); (5) the large-slack
// construction (n - sum >= max part); (6) the necessary-condition scan;
// (7) the oracle when n <= oracle_bound; otherwise Unknown. Parts are
// canonicalized descending. Exists verdicts always carry a verified witness.
// Throws std::invalid_argument for empty/nonpositive parts or n > 4096
// (witness construction is size-bounded).
ExistenceVerdict decide(const Parts& parts, int n, int oracle_bound = 7,
                        long long oracle_budget = 10'000'000);

}  // namespace ils
