#pragma once
// Frequency arrays and outline arrays: the composition algebra (cell-wise
// union, amalgamation, conversion to/from outline squares) used by the
// composite constructions.

#include <vector>

#include "ils/outline.hpp"

namespace ils {

// F[i][j] = required multiset size of cell (i,j); row/column symbol counts
// are read off the same matrix (symbol l occurs F[i][l] times in row i and
// F[l][j] times in column j).
using Freq = std::vector<std::vector<int>>;

// k x k array of multisets over [k], stored dense: c[i][j][l] = copies of
// symbol l+1 in cell (i,j).
struct OutlineArray {
  int k = 0;
  std::vector<int> c;

  OutlineArray() = default;
  explicit OutlineArray(int order) : k(order), c(static_cast<size_t>(order) * order * order, 0) {}
  int& at(int i, int j, int l) { return c[(static_cast<size_t>(i) * k + j) * k + l]; }
  int at(int i, int j, int l) const { return c[(static_cast<size_t>(i) * k + j) * k + l]; }
  bool operator==(const OutlineArray&) const = default;
};

// Empty result = valid for F. Throws std::invalid_argument on order mismatch.
std::vector<std::string> validate_outline_array(const OutlineArray& o, const Freq& f);

// Cell-wise multiset union; valid for F1 + F2. Throws on order mismatch.
OutlineArray sum_outline_arrays(const OutlineArray& a, const OutlineArray& b);

// General index-map form: out(rmap[i], cmap[j])[smap[l]] += o(i,j)[l].
// Maps may inject into a larger order (used to embed small pieces).
OutlineArray amalgamate_maps(const OutlineArray& o, const std::vector<int>& row_map,
                             const std::vector<int>& col_map, const std::vector<int>& sym_map,
                             int new_order);

// groups[g] lists the 0-based old indices forming new class g; the groups
// must partition 0..o.k-1. Rows, columns and symbols are merged alike.
OutlineArray amalgamate(const OutlineArray& o, const std::vector<std::vector<int>>& groups);

// F(i,j) = P[i] * P[j].
Freq product_freq(const Parts& P);

// Lossless view changes between an outline square (P = Q = R) and an outline
// array whose frequency target is product_freq(P). Throws
// std::invalid_argument on shape or cell-size mismatch.
OutlineArray outline_square_as_array(const Outline& o);
Outline array_as_outline_square(const OutlineArray& o, const Parts& P);

}  // namespace ils
