#pragma once
// Generic feasibility engines: the integer outline-square solver for specs
// respecting (P, S), uniform-family realizations, and the exhaustive
// brute-force oracle for small orders.

#include <optional>

#include "ils/outline.hpp"

namespace ils {

// A requested outline square: partition P, respected part indices S
// (counts[i][i][i] must equal P[i]^2 for i in S), and optional exact
// pre-pinned counts.
struct FixedCount {
  int i = 0, j = 0, l = 0;
  int count = 0;
};

struct OutlineSpec {
  Parts P;
  std::vector<int> S;
  std::vector<FixedCount> fixed;
};

enum class SolveStatus {
  Solved,      // outline found
  Infeasible,  // complete search exhausted the space: no such outline
  Exhausted,   // node budget hit before the search completed
};

struct SolveResult {
  SolveStatus status = SolveStatus::Exhausted;
  std::optional<Outline> outline;  // set iff status == Solved
};

// Deterministic: identical spec + budget give identical output. Pattern lanes
// (single part, all-equal, uniform-with-remainder, circulant realization)
// apply when no fixed counts are given; otherwise per-symbol-layer feasible
// flows seeded by the rational relaxation, then complete depth-first search
// over cell-symbol counts with plane-sum propagation (cells by decreasing
// P[i]*P[j], values by proximity to the rational seed). Throws
// std::invalid_argument on malformed specs (indices out of range, duplicate
// or oversized fixed counts).
SolveResult solve_outline_square(const OutlineSpec& spec, long long budget = 50'000'000);

// LS(h^u r) grid (normal form, remainder part last) for u >= 3, 0 < r < h;
// nullopt when every lane fails within its budget (not a nonexistence proof).
std::optional<Grid> uniform_rem_square(int h, int u, int r);

// LS(h^u r) via r prolongations of an inflated idempotent square along
// disjoint transversals avoiding the diagonal h-blocks. Requires u >= 3,
// 0 < r < h; nullopt when the transversal search misses its budget.
std::optional<Grid> prolongation_square(int h, int u, int r,
                                        long long per_offset_budget = 1'000'000);

}  // namespace ils
