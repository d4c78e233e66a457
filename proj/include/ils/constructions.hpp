#pragma once
// Explicit constructors: circulant partial squares, realization assembly,
// the k=2 / k=3 outline-square families, uniform families, the composite
// border-array machinery, and the general construction.

#include <optional>
#include <utility>

#include "ils/freq.hpp"
#include "ils/outline.hpp"

namespace ils {

// Partial latin square of order r (0-based grid, 0 = empty) whose filled
// diagonals {(i, i+d mod r)} are transversals, with exactly h1 empty cells per
// line. Kept differences 2d (0 <= d < h2) satisfy, in 1-based circulant
// arithmetic, L(i, i (+) 2d) = i (+) d in both orientations. Preconditions
// (even r): 4*h2 <= r and 2*h2 <= h1 <= r+1-2*h2; odd r: 4*h2 <= r+1.
struct CirculantPartial {
  int r = 0, h1 = 0, h2 = 0;
  Grid grid;
  std::vector<int> empty_diffs;  // differences d with diagonal (i, i+d) empty
};
CirculantPartial circulant_partial(int r, int h1, int h2);

// Normal-form realization LS(h1, tail...): circulant partial square over the
// tail total, symbol amalgamation, intercalate swaps pulling each tail block
// together, border row/column counts, lift. Requires the circulant
// preconditions for (r = sum(tail), h1, tail[0]).
Grid realization_square(int h1, const Parts& tail);

// Nine-cell outline square for one subsquare pair; requires n-h1-h2 >= h1.
Outline k2_outline(int h1, int h2, int n);

// ILS(n; h1,h2); throws Infeasible iff n - h1 - h2 < max(h1,h2).
Grid construct_ils_k2(int h1, int h2, int n);

// Free parameter for the k=3 outline family, or nullopt when the three-branch
// feasibility condition fails. Requires h1 >= h2 >= h3 >= 1.
std::optional<long long> k3_z_value(int h1, int h2, int h3, int n);

// Sixteen-cell outline square (slack group stripped when n = h1+h2+h3);
// asserts the five z-constraints.
Outline k3_outline(int h1, int h2, int h3, int n, long long z);

// ILS(n; h1,h2,h3) (arguments canonicalized descending); throws Infeasible
// when the characterization fails.
Grid construct_ils_k3(int h1, int h2, int h3, int n);

// ILS(n; h^k). k=1: n = h or n >= 2h; k=2: n >= 3h; k >= 3: n >= kh.
// Throws Infeasible otherwise. May throw Exhausted if the generic outline
// solver gives up (never observed within the tested envelope).
Grid construct_ils_uniform(int h, int k, int n);

// ILS(2h; h): inflation of the order-2 square relabeled into normal form.
Grid doubled_square(int h1);

// Hardcoded two-layer five-row pieces with s in 0..4 singleton tail lines
// (order 5+s), and their frequency targets. Validated on first access.
OutlineArray five_block_array(int s);
Freq five_block_freq(int s);

// Single-layer piece of order m+s: normal-form LS(1^m s) reduction with the
// diagonal (i,i), i >= 1, and the tail block deleted; cell (0,0) keeps {1}.
OutlineArray plain_piece(int m, int s);
Freq plain_piece_freq(int m, int s);

// Border frequency targets: b copies on an m x m core (diagonal off except
// (0,0)), c*h_t on the tail borders; the five-row variant has a on the first
// two rows/columns, b elsewhere off-diagonal, and an empty (1,1).
Freq border_freq_plain(int m, int b, int c, const Parts& tail);
Freq border_freq_five(int a, int b, int c, const Parts& tail);

// Sum of packed pieces realizing the border frequency target.
// plain: requires (m-1)*b >= c*sum(tail); five: m = 5, b <= a <= 2b,
// 4b >= c*sum(tail).
OutlineArray border_array_plain(int m, int b, int c, const Parts& tail);
OutlineArray border_array_five(int a, int b, int c, const Parts& tail);

// Composite constructors for H nonincreasing with H[0] == H[1]; each returns
// a normal-form ILS(2*H[0] + sum(H[2:]); H[1:]). The dispatcher picks the
// applicable regime; the regime builders are exposed for direct testing.
Grid construct_small_third(const Parts& h);  // 4*h[2] <= sum(h[2:]) + 1
Grid construct_triple_equal(const Parts& h); // h[2] == h[3] == h[4]
Grid construct_pair_equal(const Parts& h);   // h[2] == h[3] > h[4]
Grid construct_strict_third(const Parts& h); // h[2] > h[3]
Grid construct_main(const Parts& H);

// ILS(n; parts) for any part multiset with n - sum(parts) >= max(parts):
// pads with unit parts and delegates to construct_main. Returns the witness
// and the realized part list (requested parts, sorted descending, plus the
// padding units). Throws std::invalid_argument when out of scope.
std::pair<Grid, Parts> construct_general(const Parts& parts, int n);

}  // namespace ils
