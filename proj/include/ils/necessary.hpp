#pragma once
// Necessary existence condition: a quadratic inequality over every assignment
// of the k+1 parts (slack last) to four disjoint classes A,B,C,D. A violation
// certifies nonexistence.

#include <optional>
#include <utility>
#include <vector>

#include "ils/core.hpp"

namespace ils {

struct Violation {
  std::vector<int> A, B, C, D;  // 1-based part indices; k+1 denotes the slack part
  long long lhs = 0, rhs = 0;   // violation means lhs < rhs
  std::vector<int> digits;      // raw assignment: digits[i] in 0..4 = none,A,B,C,D
};

// h lists all k+1 part sizes (slack last, possibly 0); assign[i] in 0..4.
// Returns (lhs, rhs) of the inequality:
//   lhs = (sum_{A u C} h)^2 + (sum_{B u D} h)^2 - sum_{assigned, non-slack} h^2
//   rhs = (sum_{A u D} h) * (sum_{B u C} h - sum_{unassigned} h)
std::pair<long long, long long> necessary_sides(const std::vector<int>& h,
                                                const std::vector<int>& assign);

// First violating assignment in ascending base-5 code order (part 1 most
// significant) or nullopt. Pruning restricts part 1's class to {none, A, C};
// sound because (A,B,C,D) -> (D,C,B,A) preserves both sides. The unpruned
// scan refuses k+1 > bound (throws std::invalid_argument).
// scan_necessary uses all OpenMP threads when available (block-wise, still
// returning the lexicographically first violation); scan_necessary_serial is
// the single-threaded reference with identical output.
std::optional<Violation> scan_necessary(const Parts& parts, int n, bool pruned = true,
                                        int bound = 12);
std::optional<Violation> scan_necessary_serial(const Parts& parts, int n, bool pruned = true,
                                               int bound = 12);

// True iff the scan finds no violation. Precondition: sum(parts) <= n.
bool check_necessary(const Parts& parts, int n);

// Rebuilds a Violation record (sets + sides) from raw digits.
Violation violation_from_digits(const std::vector<int>& h, const std::vector<int>& digits);

}  // namespace ils
