#pragma once
// Outline rectangles: reductions of latin squares modulo partitions, their
// validation, the lifting algorithm realizing them back as latin squares, and
// exact-rational symmetric outline squares.

#include <cstdint>
#include <vector>

#include "ils/core.hpp"

namespace ils {

// counts[i][j][l] = number of symbols of group l in the row-group-i x
// col-group-j cell block. Dense u x v x t storage.
struct Outline {
  Parts P, Q, R;
  std::vector<int> counts;

  Outline() = default;
  Outline(Parts p, Parts q, Parts r)
      : P(std::move(p)), Q(std::move(q)), R(std::move(r)),
        counts(P.size() * Q.size() * R.size(), 0) {}

  int u() const { return static_cast<int>(P.size()); }
  int v() const { return static_cast<int>(Q.size()); }
  int t() const { return static_cast<int>(R.size()); }
  int& at(int i, int j, int l) { return counts[(static_cast<size_t>(i) * Q.size() + j) * R.size() + l]; }
  int at(int i, int j, int l) const {
    return counts[(static_cast<size_t>(i) * Q.size() + j) * R.size() + l];
  }
  bool operator==(const Outline& o) const = default;
};

// Throws std::invalid_argument when a partition total differs from the order.
Outline reduce_modulo(const Grid& grid, const Parts& P, const Parts& Q, const Parts& R);

// Empty result = valid outline rectangle (the three sum conditions hold).
std::vector<std::string> validate_outline(const Outline& o);

// Additionally requires counts[i][i][i] = P[i]^2 for every i in respect
// (0-based part indices; meaningful for P = Q = R).
std::vector<std::string> validate_outline(const Outline& o, const std::vector<int>& respect);

// Deterministic realization of a valid outline rectangle as a latin square:
// split row groups one unit row at a time by feasible integral flow, then
// column groups, then decompose each symbol group's r_l-regular cell set into
// perfect matchings. reduce_modulo(lift(o), P, Q, R) == o. Throws
// std::invalid_argument when the input fails validate_outline.
Grid lift(const Outline& o);

// Wraps lift for P = Q = R outlines respecting the first k parts; attaches
// the diagonal subsquare specs. Throws std::invalid_argument when the respect
// precondition fails.
Square ils_from_outline(const Outline& o, int k);

// Exact small rational (den > 0, reduced).
struct Rat {
  long long num = 0, den = 1;
  Rat() = default;
  Rat(long long n);  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d);
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  bool operator==(const Rat& o) const = default;
  bool operator<(const Rat& o) const;
};

// Symmetric rational outline square: values x[i][j][l] invariant under all
// permutations of (i,j,l).
struct Ros {
  Parts P;
  std::vector<Rat> x;  // dense u^3
  int u() const { return static_cast<int>(P.size()); }
  Rat& at(int i, int j, int l) { return x[(static_cast<size_t>(i) * P.size() + j) * P.size() + l]; }
  const Rat& at(int i, int j, int l) const {
    return x[(static_cast<size_t>(i) * P.size() + j) * P.size() + l];
  }
};

// x(i,j,l) = (1/6) * sum of the six argument permutations of counts.
// Requires P = Q = R.
Ros symmetrize(const Outline& o);

// Checks nonnegativity, the plane sums sum_l x(i,j,l) = P[i]*P[j] in all three
// orientations, and x(i,i,i) = P[i]^2 for i in respect.
std::vector<std::string> validate_ros(const Ros& r, const std::vector<int>& respect);

}  // namespace ils
