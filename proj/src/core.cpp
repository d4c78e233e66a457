#include "ils/core.hpp"

#include <algorithm>
#include <numeric>

namespace ils {

std::vector<int> offsets(const Parts& parts) {
  std::vector<int> off(parts.size() + 1, 0);
  for (size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i];
  return off;
}

std::vector<int> group_of(const Parts& parts) {
  std::vector<int> g;
  for (size_t i = 0; i < parts.size(); ++i)
    g.insert(g.end(), static_cast<size_t>(parts[i]), static_cast<int>(i));
  return g;
}

std::optional<LatinIssue> validate_latin(const Grid& grid) {
  const int n = static_cast<int>(grid.size());
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(grid[r].size()) != n)
      throw std::invalid_argument("grid row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c)
      if (grid[r][c] < 0 || grid[r][c] > n)
        throw std::invalid_argument("grid cell (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of range");
  }
  std::vector<char> seen(static_cast<size_t>(n) + 1);
  bool partial = false;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) partial |= grid[r][c] == kEmpty;
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int s = grid[r][c];
      if (s == kEmpty) continue;
      if (seen[s]) return LatinIssue{r, c, s, "repeat in row"};
      seen[s] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int s = grid[r][c];
      if (s == kEmpty) continue;
      if (seen[s]) return LatinIssue{r, c, s, "repeat in column"};
      seen[s] = 1;
    }
  }
  if (partial) return std::nullopt;
  // complete square: row/col checks above plus fullness imply permutations
  return std::nullopt;
}

bool is_latin(const Grid& grid) { return !validate_latin(grid).has_value(); }

IlsReport verify_ils(const Grid& grid, const Parts& parts) {
  const int n = static_cast<int>(grid.size());
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total > n) throw std::invalid_argument("subsquare orders exceed square order");
  IlsReport rep;
  bool complete = true;
  for (const auto& row : grid)
    for (int s : row) complete &= s != kEmpty;
  if (!complete || !is_latin(grid)) {
    rep.ok = false;
    rep.failed_block = -1;
    rep.detail = complete ? "grid is not a latin square" : "grid is incomplete";
    return rep;
  }
  auto off = offsets(parts);
  for (size_t b = 0; b < parts.size(); ++b) {
    const int lo = off[b], h = parts[b];
    std::vector<char> seen(static_cast<size_t>(h));
    auto in_range = [&](int s) { return s > lo && s <= lo + h; };
    for (int r = lo; r < lo + h; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = lo; c < lo + h; ++c) {
        int s = grid[r][c];
        if (!in_range(s) || seen[s - lo - 1]) {
          rep.ok = false;
          rep.failed_block = static_cast<int>(b);
          rep.detail = "block " + std::to_string(b) + " row " + std::to_string(r) +
                       " is not confined to its symbol range";
          return rep;
        }
        seen[s - lo - 1] = 1;
      }
    }
    for (int c = lo; c < lo + h; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = lo; r < lo + h; ++r) {
        int s = grid[r][c];
        if (!in_range(s) || seen[s - lo - 1]) {
          rep.ok = false;
          rep.failed_block = static_cast<int>(b);
          rep.detail = "block " + std::to_string(b) + " column " + std::to_string(c) +
                       " is not confined to its symbol range";
          return rep;
        }
        seen[s - lo - 1] = 1;
      }
    }
  }
  return rep;
}

Grid cyclic_square(int n) {
  Grid g(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g[r][c] = (r + c) % n + 1;
  return g;
}

Grid idempotent_square(int k) {
  if (k == 1) return {{1}};
  if (k == 2) throw Infeasible("no idempotent square of order 2");
  if (k % 2 == 1) {
    const int inv2 = (k + 1) / 2;
    Grid g(k, std::vector<int>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) g[r][c] = ((r + c + 2) * inv2 - 1) % k + 1;
    return g;
  }
  // even k >= 4: prolong the odd square of order m = k-1 along the transversal
  // on cells (i, (i+2) mod m), whose values are a permutation avoiding the diagonal.
  const int m = k - 1;
  Grid b = idempotent_square(m);
  Grid g(k, std::vector<int>(k, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[i][j] = b[i][j];
  for (int i = 0; i < m; ++i) {
    const int j = (i + 2) % m;
    const int v = b[i][j];
    g[i][j] = k;
    g[i][m] = v;
    g[m][j] = v;
  }
  g[m][m] = k;
  return g;
}

Grid inflate(const Grid& base, int h) {
  const int k = static_cast<int>(base.size());
  const int n = k * h;
  Grid g(n, std::vector<int>(n));
  for (int bi = 0; bi < k; ++bi)
    for (int bj = 0; bj < k; ++bj) {
      const int s = base[bi][bj] - 1;
      for (int a = 0; a < h; ++a)
        for (int c = 0; c < h; ++c) g[bi * h + a][bj * h + c] = s * h + (a + c) % h + 1;
    }
  return g;
}

Grid permute_square(const Grid& grid, const std::vector<int>& row_perm,
                    const std::vector<int>& col_perm, const std::vector<int>& sym_perm) {
  const int n = static_cast<int>(grid.size());
  Grid out(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[row_perm[r]][col_perm[c]] = sym_perm[grid[r][c] - 1] + 1;
  return out;
}

std::vector<int> blocks_to_perm(const Parts& parts, const std::vector<int>& order) {
  auto off = offsets(parts);
  const int n = off.back();
  std::vector<int> perm(n, 0);
  int pos = 0;
  for (int g : order)
    for (int i = off[g]; i < off[g + 1]; ++i) perm[i] = pos++;
  if (pos != n) throw std::invalid_argument("block order does not cover all lines");
  return perm;
}

std::vector<SubsquareSpec> diagonal_specs(const Parts& parts) {
  std::vector<SubsquareSpec> specs;
  auto off = offsets(parts);
  for (size_t b = 0; b < parts.size(); ++b)
    specs.push_back({off[b], off[b], parts[b]});
  return specs;
}

}  // namespace ils
