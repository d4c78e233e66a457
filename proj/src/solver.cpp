#include "ils/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flow.hpp"
#include "ils/constructions.hpp"
#include "ils/core.hpp"

namespace ils {
namespace {

using detail::Flow;

struct BudgetHit {};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("solver invariant failed: " + what);
}

int sum_of(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

// Inflated idempotent square with, for even h, one intercalate swapped between
// each diagonal block and its cyclic successor (restores transversals that the
// plain inflation of an odd-order group lacks).
Grid perturbed_inflate(int u, int h) {
  Grid L = inflate(idempotent_square(u), h);
  if (h % 2 == 0) {
    for (int i = 0; i < u; ++i) {
      const int j = (i + 1) % u;
      const int r1 = i * h, r2 = i * h + h / 2;
      const int c1 = j * h, c2 = j * h + h / 2;
      const int x = L[r1][c1], y = L[r1][c2];
      require(L[r2][c2] == x && L[r2][c1] == y, "perturbed inflate intercalate");
      L[r1][c1] = y;
      L[r1][c2] = x;
      L[r2][c1] = x;
      L[r2][c2] = y;
    }
  }
  return L;
}

// One transversal avoiding the diagonal h-blocks and already-used cells.
// DFS, most-constrained row first, columns in offset-rotated order.
std::optional<std::vector<std::pair<int, int>>> find_transversal(
    const Grid& L, int n0, int h, const std::vector<std::vector<char>>& used, int offset,
    long long& nodes, long long cap) {
  std::vector<std::vector<int>> avail(n0);
  for (int r = 0; r < n0; ++r)
    for (int c = 0; c < n0; ++c)
      if (r / h != c / h && !used[r][c]) avail[r].push_back(c);
  std::vector<char> col_used(n0, 0), sym_used(n0, 0);
  std::vector<int> assigned(n0, -1);

  auto rec = [&](auto&& self, int depth) -> bool {
    if (++nodes > cap) throw BudgetHit{};
    if (depth == n0) return true;
    int best = -1, bestn = n0 + 1;
    for (int r = 0; r < n0; ++r) {
      if (assigned[r] >= 0) continue;
      int cnt = 0;
      for (int c : avail[r])
        if (!col_used[c] && !sym_used[L[r][c] - 1]) ++cnt;
      if (cnt == 0) return false;
      if (cnt < bestn) {
        best = r;
        bestn = cnt;
      }
    }
    const int r = best;
    std::vector<int> cands;
    for (int c : avail[r])
      if (!col_used[c] && !sym_used[L[r][c] - 1]) cands.push_back(c);
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      return (a - offset + n0) % n0 < (b - offset + n0) % n0;
    });
    for (int c : cands) {
      const int s = L[r][c] - 1;
      col_used[c] = sym_used[s] = 1;
      assigned[r] = c;
      if (self(self, depth + 1)) return true;
      col_used[c] = sym_used[s] = 0;
      assigned[r] = -1;
    }
    return false;
  };

  bool ok;
  try {
    ok = rec(rec, 0);
  } catch (const BudgetHit&) {
    return std::nullopt;
  }
  if (!ok) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  out.reserve(n0);
  for (int r = 0; r < n0; ++r) out.push_back({r, assigned[r]});
  return out;
}

bool realization_eligible(int head, const Parts& tail) {
  if (tail.empty()) return false;
  const int t = tail[0];
  const int r = sum_of(tail);
  return 4 * t <= r + (r % 2) && 2 * t <= head && head <= r + 1 - 2 * t;
}

}  // namespace

std::optional<Grid> prolongation_square(int h, int u, int r, long long per_offset_budget) {
  if (u < 3 || r <= 0 || r >= h) throw std::invalid_argument("prolongation: requires u >= 3, 0 < r < h");
  const int n0 = u * h;
  Grid L;
  std::vector<std::vector<std::pair<int, int>>> ts;
  if (h % 2 == 1 && u % 2 == 1) {
    // odd abelian group: explicit disjoint diagonal-block-avoiding transversals
    L = inflate(idempotent_square(u), h);
    for (int l = 0; l < r; ++l) {
      std::vector<std::pair<int, int>> T;
      for (int i = 0; i < u; ++i)
        for (int a = 0; a < h; ++a) T.push_back({i * h + a, ((i + 1) % u) * h + (a + l) % h});
      ts.push_back(std::move(T));
    }
  } else {
    L = perturbed_inflate(u, h);
    bool found = false;
    for (int off = 0; off < 8 && !found; ++off) {
      const int offset = (off * std::max(1, h / 2)) % n0;
      std::vector<std::vector<char>> used(n0, std::vector<char>(n0, 0));
      std::vector<std::vector<std::pair<int, int>>> cur;
      long long nodes = 0;
      for (int l = 0; l < r; ++l) {
        auto T = find_transversal(L, n0, h, used, (offset + 2 * l) % n0, nodes,
                                  per_offset_budget);
        if (!T) break;
        for (auto [rr, cc] : *T) used[rr][cc] = 1;
        cur.push_back(std::move(*T));
      }
      if (static_cast<int>(cur.size()) == r) {
        ts = std::move(cur);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  const int n = n0 + r;
  Grid G(n, std::vector<int>(n, 0));
  for (int a = 0; a < n0; ++a)
    for (int b = 0; b < n0; ++b) G[a][b] = L[a][b];
  for (int l = 0; l < r; ++l)
    for (auto [rr, cc] : ts[l]) {
      const int v = L[rr][cc];
      G[rr][n0 + l] = v;
      G[n0 + l][cc] = v;
      G[rr][cc] = n0 + l + 1;
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G[n0 + i][n0 + j] = n0 + (i + j) % r + 1;
  Parts parts(u, h);
  parts.push_back(r);
  require(verify_ils(G, parts).ok, "prolongation verification");
  return G;
}

std::optional<Grid> uniform_rem_square(int h, int u, int r) {
  if (u < 3 || r <= 0 || r >= h)
    throw std::invalid_argument("uniform remainder square: requires u >= 3, 0 < r < h");
  Parts parts(u, h);
  parts.push_back(r);
  const int g = std::gcd(h, r);
  if (g > 1) {
    if (auto base = uniform_rem_square(h / g, u, r / g)) {
      Grid grid = inflate(*base, g);
      require(verify_ils(grid, parts).ok, "uniform remainder inflation");
      return grid;
    }
  }
  if (u == 3) {
    // the order-(3h+r) three-part outline has a pure slack block of size r^2:
    // the slack group IS the remainder subsquare
    auto z = k3_z_value(h, h, h, 3 * h + r);
    require(z.has_value(), "uniform remainder k3 feasibility");
    Outline o = k3_outline(h, h, h, 3 * h + r, *z);
    require(o.at(3, 3, 3) == r * r, "uniform remainder slack block purity");
    Grid grid = lift(o);
    require(verify_ils(grid, parts).ok, "uniform remainder u=3 verification");
    return grid;
  }
  // merge three h-parts with the remainder, substitute an LS(h,h,h,r) head
  const int head = 3 * h + r;
  Parts tail(u - 3, h);
  if (realization_eligible(head, tail)) {
    Grid L = realization_square(head, tail);
    auto M = uniform_rem_square(h, 3, r);
    require(M.has_value(), "uniform remainder head square");
    for (int i = 0; i < head; ++i)
      for (int j = 0; j < head; ++j) L[i][j] = (*M)[i][j];
    // parts are now (h,h,h,r,h^{u-3}); move the r-block to the end
    Parts cur = {h, h, h, r};
    cur.insert(cur.end(), tail.begin(), tail.end());
    std::vector<int> order = {0, 1, 2};
    for (int b = 4; b <= u; ++b) order.push_back(b);
    order.push_back(3);
    std::vector<int> perm = blocks_to_perm(cur, order);
    Grid grid = permute_square(L, perm, perm, perm);
    require(verify_ils(grid, parts).ok, "uniform remainder substitution verification");
    return grid;
  }
  if (auto G = prolongation_square(h, u, r)) return G;
  return std::nullopt;
}

namespace {

// ---------- generic outline solving ----------

struct FixedCube {
  int u = 0;
  std::vector<int> v;  // -1 = free
  explicit FixedCube(int order) : u(order), v(static_cast<size_t>(order) * order * order, -1) {}
  int& at(int i, int j, int l) { return v[(static_cast<size_t>(i) * u + j) * u + l]; }
  int at(int i, int j, int l) const { return v[(static_cast<size_t>(i) * u + j) * u + l]; }
  bool any = false;
};

// Layer-by-layer transportation; balance caps cells near the rational fair
// share. Returns nullopt when some layer's flow cannot saturate (not a proof
// of infeasibility).
std::optional<Outline> flow_greedy(const Parts& P, const std::vector<char>& pinned,
                                   const FixedCube& fixed, int balance, bool use_balance) {
  const int u = static_cast<int>(P.size());
  const int n = sum_of(P);
  std::vector<std::vector<int>> cap(u, std::vector<int>(u, 0));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) cap[i][j] = P[i] * P[j];
  Outline o(P, P, P);
  for (int i = 0; i < u; ++i)
    if (pinned[i]) {
      o.at(i, i, i) = P[i] * P[i];
      cap[i][i] = 0;
    }
  for (int l = 0; l < u; ++l) {
    std::vector<int> sup(u), dem(u);
    for (int i = 0; i < u; ++i) {
      sup[i] = P[i] * P[l] - (i == l && pinned[l] ? P[l] * P[l] : 0);
      dem[i] = P[i] * P[l] - (i == l && pinned[l] ? P[l] * P[l] : 0);
    }
    // route fixed counts first and keep their edges out of the network
    if (fixed.any)
      for (int i = 0; i < u; ++i)
        for (int j = 0; j < u; ++j) {
          const int v = fixed.at(i, j, l);
          if (v < 0) continue;
          sup[i] -= v;
          dem[j] -= v;
          cap[i][j] -= v;
          if (sup[i] < 0 || dem[j] < 0 || cap[i][j] < 0) return std::nullopt;
          o.at(i, j, l) = v;
        }
    long long need = 0;
    for (int i = 0; i < u; ++i) need += sup[i];
    {
      long long dtot = 0;
      for (int j = 0; j < u; ++j) dtot += dem[j];
      require(dtot == need, "flow layer balance");
    }
    const int S = 2 * u, T = 2 * u + 1;
    Flow fl(2 * u + 2);
    for (int i = 0; i < u; ++i)
      if (sup[i] > 0) fl.add(S, i, sup[i]);
    std::vector<std::pair<int, int>> refs;
    std::vector<std::pair<int, int>> where;
    for (int i = 0; i < u; ++i)
      for (int j = 0; j < u; ++j) {
        if (fixed.any && fixed.at(i, j, l) >= 0) continue;
        int c = cap[i][j];
        if (use_balance) {
          const int fair = static_cast<int>(
              (static_cast<long long>(P[i]) * P[j] * P[l] + n - 1) / n);
          c = std::min(c, fair + balance);
        }
        if (c > 0) {
          refs.push_back(fl.add(i, u + j, c));
          where.push_back({i, j});
        }
      }
    for (int j = 0; j < u; ++j)
      if (dem[j] > 0) fl.add(u + j, T, dem[j]);
    if (fl.maxflow(S, T) != need) return std::nullopt;
    for (size_t e = 0; e < refs.size(); ++e) {
      const int f = fl.flow_on(refs[e]);
      if (f > 0) {
        const auto [i, j] = where[e];
        o.at(i, j, l) = f;
        cap[i][j] -= f;
      }
    }
  }
  if (!validate_outline(o).empty()) return std::nullopt;
  return o;
}

// Complete DFS over (cell, symbol) counts with plane-sum propagation and
// fair-share-guided value order.
SolveResult dfs_outline(const Parts& P, const std::vector<char>& pinned, const FixedCube& fixed,
                        long long budget) {
  const int u = static_cast<int>(P.size());
  const int n = sum_of(P);
  Outline o(P, P, P);
  std::vector<std::vector<int>> cellcap(u, std::vector<int>(u, 0));
  std::vector<std::vector<int>> rowrem(u, std::vector<int>(u, 0));
  std::vector<std::vector<int>> colrem(u, std::vector<int>(u, 0));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      cellcap[i][j] = P[i] * P[j];
      rowrem[i][j] = P[i] * P[j];
      colrem[i][j] = P[i] * P[j];
    }
  for (int i = 0; i < u; ++i)
    if (pinned[i]) {
      o.at(i, i, i) = P[i] * P[i];
      cellcap[i][i] = 0;
      rowrem[i][i] -= P[i] * P[i];
      colrem[i][i] -= P[i] * P[i];
    }
  // a fixed count inside a pinned diagonal cell never reaches the search
  // loop below, so settle it here
  if (fixed.any)
    for (int i = 0; i < u; ++i)
      if (pinned[i])
        for (int l = 0; l < u; ++l) {
          const int v = fixed.at(i, i, l);
          if (v < 0) continue;
          if (v != (l == i ? P[i] * P[i] : 0)) return {SolveStatus::Infeasible, std::nullopt};
        }
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j)
      if (cellcap[i][j] > 0) cells.push_back({i, j});
  std::stable_sort(cells.begin(), cells.end(), [&](auto a, auto b) {
    return static_cast<long long>(P[a.first]) * P[a.second] >
           static_cast<long long>(P[b.first]) * P[b.second];
  });
  long long nodes = 0;

  auto rec = [&](auto&& self, size_t ci) -> bool {
    if (ci == cells.size()) return true;
    const auto [i, j] = cells[ci];
    const int target = cellcap[i][j];

    auto fill = [&](auto&& fself, int l, int left) -> bool {
      if (l == u) return left == 0 && self(self, ci + 1);
      int hi = std::min({left, rowrem[i][l], colrem[j][l]});
      int rest = 0;
      for (int lp = l + 1; lp < u; ++lp) rest += std::min(rowrem[i][lp], colrem[j][lp]);
      int lo = std::max(0, left - rest);
      if (fixed.any) {
        const int fv = fixed.at(i, j, l);
        if (fv >= 0) {
          if (fv < lo || fv > hi) return false;
          lo = hi = fv;
        }
      }
      if (lo > hi) return false;
      const int fair = static_cast<int>(static_cast<long long>(P[i]) * P[j] * P[l] / n);
      std::vector<int> vals;
      for (int v = lo; v <= hi; ++v) vals.push_back(v);
      std::sort(vals.begin(), vals.end(), [&](int a, int b) {
        const int da = std::abs(a - fair), db = std::abs(b - fair);
        if (da != db) return da < db;
        return a > b;
      });
      for (int v : vals) {
        if (++nodes > budget) throw BudgetHit{};
        o.at(i, j, l) = v;
        rowrem[i][l] -= v;
        colrem[j][l] -= v;
        if (fself(fself, l + 1, left - v)) return true;
        rowrem[i][l] += v;
        colrem[j][l] += v;
        o.at(i, j, l) = 0;
      }
      return false;
    };

    return fill(fill, 0, target);
  };

  try {
    if (rec(rec, 0)) {
      require(validate_outline(o).empty(), "dfs outline validity");
      return {SolveStatus::Solved, std::move(o)};
    }
    return {SolveStatus::Infeasible, std::nullopt};
  } catch (const BudgetHit&) {
    return {SolveStatus::Exhausted, std::nullopt};
  }
}

SolveResult solve_sorted(const Parts& P, const std::vector<char>& pinned, const FixedCube& fixed,
                         long long budget) {
  const int u = static_cast<int>(P.size());
  const int n = sum_of(P);
  if (!fixed.any) {
    if (u == 1) {
      Outline o(P, P, P);
      o.at(0, 0, 0) = n * n;
      return {SolveStatus::Solved, std::move(o)};
    }
    const int h = P[0];
    if (u >= 3 && std::all_of(P.begin(), P.end(), [&](int p) { return p == h; })) {
      Grid base = idempotent_square(u);
      Outline o(P, P, P);
      for (int i = 0; i < u; ++i)
        for (int j = 0; j < u; ++j) o.at(i, j, base[i][j] - 1) = h * h;
      return {SolveStatus::Solved, std::move(o)};
    }
    const int uu = static_cast<int>(std::count(P.begin(), P.end(), h));
    if (uu >= 3 && uu == u - 1 && 0 < P.back() && P.back() < h) {
      if (auto G = uniform_rem_square(h, uu, P.back()))
        return {SolveStatus::Solved, reduce_modulo(*G, P, P, P)};
    }
    Parts tail(P.begin() + 1, P.end());
    if (realization_eligible(h, tail)) {
      Grid grid = realization_square(h, tail);
      return {SolveStatus::Solved, reduce_modulo(grid, P, P, P)};
    }
  }
  if (auto o = flow_greedy(P, pinned, fixed, 0, false)) return {SolveStatus::Solved, std::move(*o)};
  for (int t : {0, 1, 2, 4})
    if (auto o = flow_greedy(P, pinned, fixed, t, true)) return {SolveStatus::Solved, std::move(*o)};
  return dfs_outline(P, pinned, fixed, budget);
}

}  // namespace

SolveResult solve_outline_square(const OutlineSpec& spec, long long budget) {
  const int u = static_cast<int>(spec.P.size());
  if (u == 0) throw std::invalid_argument("outline spec: empty partition");
  for (int p : spec.P)
    if (p < 1) throw std::invalid_argument("outline spec: parts must be positive");
  std::vector<char> pin_flag(u, 0);
  for (int s : spec.S) {
    if (s < 0 || s >= u) throw std::invalid_argument("outline spec: respected index out of range");
    pin_flag[s] = 1;
  }
  // canonicalize: parts sorted descending (stable on index)
  std::vector<int> order(u);  // order[pos] = old index
  for (int i = 0; i < u; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return spec.P[a] > spec.P[b]; });
  std::vector<int> pos_of(u);
  for (int p = 0; p < u; ++p) pos_of[order[p]] = p;
  Parts Ps(u);
  std::vector<char> pins_s(u, 0);
  for (int p = 0; p < u; ++p) {
    Ps[p] = spec.P[order[p]];
    pins_s[p] = pin_flag[order[p]];
  }
  FixedCube fixed(u);
  for (const auto& f : spec.fixed) {
    if (f.i < 0 || f.i >= u || f.j < 0 || f.j >= u || f.l < 0 || f.l >= u)
      throw std::invalid_argument("outline spec: fixed index out of range");
    if (f.count < 0 || f.count > spec.P[f.i] * spec.P[f.j])
      throw std::invalid_argument("outline spec: fixed count outside cell capacity");
    int& slot = fixed.at(pos_of[f.i], pos_of[f.j], pos_of[f.l]);
    if (slot >= 0) throw std::invalid_argument("outline spec: duplicate fixed count");
    slot = f.count;
    fixed.any = true;
  }
  SolveResult rs = solve_sorted(Ps, pins_s, fixed, budget);
  if (rs.status != SolveStatus::Solved) return rs;
  Outline o(spec.P, spec.P, spec.P);
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j)
      for (int l = 0; l < u; ++l) o.at(order[i], order[j], order[l]) = rs.outline->at(i, j, l);
  require(validate_outline(o).empty(), "solved outline validity");
  for (int i = 0; i < u; ++i)
    if (pin_flag[i]) require(o.at(i, i, i) == spec.P[i] * spec.P[i], "solved outline pins");
  for (const auto& f : spec.fixed)
    require(o.at(f.i, f.j, f.l) == f.count, "solved outline fixed counts");
  return {SolveStatus::Solved, std::move(o)};
}

Grid construct_ils_uniform(int h, int k, int n) {
  if (h < 1 || k < 1) throw std::invalid_argument("uniform: requires h, k >= 1");
  if (n > 4096) throw std::invalid_argument("uniform: order too large for explicit construction");
  if (k == 1) {
    if (n == h) return cyclic_square(n);
    if (n < 2 * h) throw Infeasible("no ILS(n; h): requires n = h or n >= 2h");
    Parts P = {h, n - h};
    Outline o(P, P, P);
    o.at(0, 0, 0) = h * h;
    o.at(0, 1, 1) = h * (n - h);
    o.at(1, 0, 1) = h * (n - h);
    o.at(1, 1, 0) = h * (n - h);
    o.at(1, 1, 1) = (n - h) * (n - 2 * h);
    require(validate_outline(o).empty(), "single-part outline");
    Grid grid = lift(o);
    require(verify_ils(grid, {h}).ok, "single-part verification");
    return grid;
  }
  if (k == 2) {
    if (n < 3 * h) throw Infeasible("no ILS(n; h,h): requires n >= 3h");
    return construct_ils_k2(h, h, n);
  }
  if (n < k * h) throw Infeasible("no ILS(n; h^k): requires n >= kh for k >= 3");
  const int m = (n - k * h) / h;
  const int rp = (n - k * h) % h;
  Parts parts(k, h);
  if (rp == 0) {
    Grid grid = inflate(idempotent_square(k + m), h);
    require(verify_ils(grid, parts).ok, "uniform inflation verification");
    return grid;
  }
  Parts P(k + m, h);
  P.push_back(rp);
  OutlineSpec sp;
  sp.P = P;
  for (size_t i = 0; i < P.size(); ++i) sp.S.push_back(static_cast<int>(i));
  SolveResult rs = solve_outline_square(sp);
  if (rs.status == SolveStatus::Exhausted)
    throw Exhausted("uniform: outline solver budget exhausted");
  require(rs.status == SolveStatus::Solved, "uniform outline must exist for u >= 3");
  Grid grid = lift(*rs.outline);
  require(verify_ils(grid, parts).ok, "uniform verification");
  return grid;
}

}  // namespace ils
