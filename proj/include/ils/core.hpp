#pragma once
// Core types and helpers for (partial) latin squares with diagonal subsquares.
// Conventions: grids are n x n, symbols 1..n, 0 marks an empty cell of a
// partial square. All indices 0-based. Part lists ("parts") are nonincreasing
// positive integers; block i occupies rows/cols/symbols offset(i)..offset(i+1)-1.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ils {

using Grid = std::vector<std::vector<int>>;
using Parts = std::vector<int>;

// Thrown when a requested object provably does not exist (e.g. an idempotent
// square of order 2, a k=2 instance violating its characterization).
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a search gives up on a node budget without settling existence.
struct Exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kEmpty = 0;

// offsets(parts)[i] = sum of parts[0..i); size parts.size()+1.
std::vector<int> offsets(const Parts& parts);

// group_of(parts)[line] = block index owning that row/col/symbol line.
std::vector<int> group_of(const Parts& parts);

struct LatinIssue {
  int row = -1, col = -1, symbol = 0;  // first offending cell, 1-based symbol
  std::string what;
};

// Pass (= nullopt) iff no symbol repeats in any row/column and, for complete
// squares, every row/column is a permutation of 1..n. Empty cells (0) are
// ignored, so the same check serves partial squares. Throws
// std::invalid_argument on ragged grids or out-of-range entries.
std::optional<LatinIssue> validate_latin(const Grid& grid);
bool is_latin(const Grid& grid);

struct IlsReport {
  bool ok = true;
  int failed_block = -1;  // 0-based block index of first failure; -1 if latin failure
  std::string detail;
};

// Normal-form ILS check: grid is latin and block b (rows/cols/symbols
// offsets(parts)[b]..+parts[b]) is a subsquare, for every b. Throws
// std::invalid_argument when sum(parts) > order.
IlsReport verify_ils(const Grid& grid, const Parts& parts);

Grid cyclic_square(int n);  // L(i,j) = (i+j) mod n + 1

// L(i,i) = i+1 for all i; order 2 is impossible (throws Infeasible).
// Odd k: closed form ((i+j+2)*(k+1)/2 - 1) mod k + 1; even k >= 4: the odd
// square of order k-1 prolonged along the transversal on cells (i, i+2 mod k-1).
Grid idempotent_square(int k);

// Each cell (i,j) of base becomes an h x h cyclic block on symbols
// (base(i,j)-1)*h + 1 .. base(i,j)*h, block cell (a,b) = (a+b) mod h within it.
Grid inflate(const Grid& base, int h);

// perm[old] = new, applied to rows, columns and (shifted by 1) symbols.
Grid permute_square(const Grid& grid, const std::vector<int>& row_perm,
                    const std::vector<int>& col_perm, const std::vector<int>& sym_perm);

// order lists old block indices in their new arrangement; result is the line
// permutation (old -> new) realizing that block rearrangement.
std::vector<int> blocks_to_perm(const Parts& parts, const std::vector<int>& order);

struct SubsquareSpec {
  int row_offset = 0, col_offset = 0, order = 0;  // offsets 0-based
};

struct Square {
  int order = 0;
  Grid grid;
  std::vector<SubsquareSpec> subsquares;
};

// Normal-form subsquare specs for the first k parts.
std::vector<SubsquareSpec> diagonal_specs(const Parts& parts);

}  // namespace ils
