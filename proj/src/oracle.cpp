#include "ils/oracle.hpp"

#include <cstdint>
#include <numeric>

namespace ils {
namespace {

struct Search {
  int n;
  long long budget;
  long long nodes = 0;
  Grid grid;
  std::vector<uint64_t> allowed_flat;  // n*n cell masks
  std::vector<uint64_t> rowfree, colfree;
  std::vector<std::pair<int, int>> cells;

  uint64_t& allowed(int r, int c) { return allowed_flat[static_cast<size_t>(r) * n + c]; }

  bool dfs(size_t idx) {
    if (idx == cells.size()) return true;
    auto [r, c] = cells[idx];
    uint64_t cand = allowed(r, c) & rowfree[r] & colfree[c];
    while (cand) {
      const int s = std::countr_zero(cand);
      cand &= cand - 1;
      if (++nodes > budget) throw Exhausted("oracle budget");
      grid[r][c] = s + 1;
      rowfree[r] &= ~(1ULL << s);
      colfree[c] &= ~(1ULL << s);
      if (dfs(idx + 1)) return true;
      grid[r][c] = 0;
      rowfree[r] |= 1ULL << s;
      colfree[c] |= 1ULL << s;
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_ils(const Parts& parts, int n, long long budget) {
  OracleResult res;
  if (n > 62) throw std::invalid_argument("oracle supports orders up to 62");
  if (std::accumulate(parts.begin(), parts.end(), 0) > n) {
    res.status = OracleResult::Status::NotExists;
    return res;
  }
  const auto off = offsets(parts);
  const int k = static_cast<int>(parts.size());
  const uint64_t full = n == 0 ? 0 : (~0ULL >> (64 - n));

  Search se;
  se.n = n;
  se.budget = budget;
  se.grid.assign(n, std::vector<int>(n, 0));
  se.allowed_flat.assign(static_cast<size_t>(n) * n, full);
  se.rowfree.assign(n, full);
  se.colfree.assign(n, full);

  std::vector<uint64_t> blockmask(k, 0);
  for (int b = 0; b < k; ++b)
    for (int s = off[b]; s < off[b + 1]; ++s) blockmask[b] |= 1ULL << s;
  std::vector<int> lineb(n, -1);
  for (int b = 0; b < k; ++b)
    for (int r = off[b]; r < off[b + 1]; ++r) lineb[r] = b;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int br = lineb[r], bc = lineb[c];
      if (br >= 0 && br == bc) {
        se.allowed(r, c) = blockmask[br];
      } else {
        if (br >= 0) se.allowed(r, c) &= ~blockmask[br];
        if (bc >= 0) se.allowed(r, c) &= ~blockmask[bc];
      }
    }

  auto place = [&](int r, int c, int s) {
    se.grid[r][c] = s + 1;
    se.rowfree[r] &= ~(1ULL << s);
    se.colfree[c] &= ~(1ULL << s);
  };
  // normalize first row and first column of every block
  for (int b = 0; b < k; ++b) {
    const int lo = off[b];
    for (int d = 0; d < parts[b]; ++d)
      if (se.grid[lo][lo + d] == 0) place(lo, lo + d, lo + d);
    for (int d = 1; d < parts[b]; ++d)
      if (se.grid[lo + d][lo] == 0) place(lo + d, lo, lo + d);
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (se.grid[r][c] == 0) se.cells.push_back({r, c});

  try {
    if (se.dfs(0)) {
      res.status = OracleResult::Status::Exists;
      res.witness = se.grid;
    } else {
      res.status = OracleResult::Status::NotExists;
    }
  } catch (const Exhausted&) {
    res.status = OracleResult::Status::Unknown;
  }
  res.nodes = se.nodes;
  return res;
}

}  // namespace ils
