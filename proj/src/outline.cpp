#include "ils/outline.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "flow.hpp"

namespace ils {
namespace {

using detail::Flow;

// One unit sub-row of row group i: flow src -> col group j (cap q_j) ->
// symbol group l (cap remaining counts) -> sink (cap r_l).
std::vector<std::vector<int>> extract_row(const std::vector<std::vector<int>>& cell_row,
                                          const Parts& Q, const Parts& R) {
  const int v = static_cast<int>(Q.size()), t = static_cast<int>(R.size());
  const int n = std::accumulate(Q.begin(), Q.end(), 0);
  const int S = v + t, T = v + t + 1;
  Flow fl(v + t + 2);
  for (int j = 0; j < v; ++j) fl.add(S, j, Q[j]);
  std::vector<std::pair<int, int>> refs;
  std::vector<std::pair<int, int>> where;
  for (int j = 0; j < v; ++j)
    for (int l = 0; l < t; ++l)
      if (cell_row[j][l] > 0) {
        refs.push_back(fl.add(j, v + l, cell_row[j][l]));
        where.push_back({j, l});
      }
  for (int l = 0; l < t; ++l) fl.add(v + l, T, R[l]);
  if (fl.maxflow(S, T) != n) throw std::invalid_argument("row extraction flow infeasible");
  std::vector<std::vector<int>> D(v, std::vector<int>(t, 0));
  for (size_t e = 0; e < refs.size(); ++e) D[where[e].first][where[e].second] = fl.flow_on(refs[e]);
  return D;
}

}  // namespace

Outline reduce_modulo(const Grid& grid, const Parts& P, const Parts& Q, const Parts& R) {
  const int n = static_cast<int>(grid.size());
  auto total = [](const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); };
  if (total(P) != n || total(Q) != n || total(R) != n)
    throw std::invalid_argument("partition totals must equal the square order");
  auto rg = group_of(P), cg = group_of(Q), sg = group_of(R);
  Outline o(P, Q, R);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) o.at(rg[r], cg[c], sg[grid[r][c] - 1])++;
  return o;
}

std::vector<std::string> validate_outline(const Outline& o) {
  const int u = o.u(), v = o.v(), t = o.t();
  std::vector<std::string> bad;
  auto total = [](const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); };
  const int n = total(o.P);
  if (total(o.Q) != n || total(o.R) != n) {
    bad.push_back("partition sums differ");
    return bad;
  }
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < v; ++j) {
      long long s = 0;
      for (int l = 0; l < t; ++l) {
        if (o.at(i, j, l) < 0)
          bad.push_back("negative count at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        s += o.at(i, j, l);
      }
      if (s != static_cast<long long>(o.P[i]) * o.Q[j])
        bad.push_back("cell size (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                      std::to_string(s) + " != " + std::to_string(o.P[i] * o.Q[j]));
    }
  for (int i = 0; i < u; ++i)
    for (int l = 0; l < t; ++l) {
      long long s = 0;
      for (int j = 0; j < v; ++j) s += o.at(i, j, l);
      if (s != static_cast<long long>(o.P[i]) * o.R[l])
        bad.push_back("row " + std::to_string(i) + " symbol " + std::to_string(l) + ": " +
                      std::to_string(s) + " != " + std::to_string(o.P[i] * o.R[l]));
    }
  for (int j = 0; j < v; ++j)
    for (int l = 0; l < t; ++l) {
      long long s = 0;
      for (int i = 0; i < u; ++i) s += o.at(i, j, l);
      if (s != static_cast<long long>(o.Q[j]) * o.R[l])
        bad.push_back("col " + std::to_string(j) + " symbol " + std::to_string(l) + ": " +
                      std::to_string(s) + " != " + std::to_string(o.Q[j] * o.R[l]));
    }
  return bad;
}

std::vector<std::string> validate_outline(const Outline& o, const std::vector<int>& respect) {
  auto bad = validate_outline(o);
  for (int i : respect) {
    if (i < 0 || i >= o.u() || i >= o.v() || i >= o.t()) {
      bad.push_back("respect index " + std::to_string(i) + " out of range");
      continue;
    }
    if (o.at(i, i, i) != o.P[i] * o.P[i])
      bad.push_back("diagonal cell " + std::to_string(i) + " not pure: " +
                    std::to_string(o.at(i, i, i)) + " != " + std::to_string(o.P[i] * o.P[i]));
  }
  return bad;
}

Grid lift(const Outline& o) {
  if (auto bad = validate_outline(o); !bad.empty())
    throw std::invalid_argument("lift of invalid outline: " + bad.front());
  const int u = o.u(), v = o.v(), t = o.t();
  const int n = std::accumulate(o.P.begin(), o.P.end(), 0);

  // phase 1: split row groups into unit rows
  std::vector<std::vector<std::vector<int>>> rows;  // rows[r][j][l]
  rows.reserve(n);
  for (int i = 0; i < u; ++i) {
    std::vector<std::vector<int>> work(v, std::vector<int>(t, 0));
    for (int j = 0; j < v; ++j)
      for (int l = 0; l < t; ++l) work[j][l] = o.at(i, j, l);
    int left = o.P[i];
    while (left > 1) {
      auto D = extract_row(work, o.Q, o.R);
      for (int j = 0; j < v; ++j)
        for (int l = 0; l < t; ++l) {
          work[j][l] -= D[j][l];
          assert(work[j][l] >= 0);
        }
      rows.push_back(std::move(D));
      --left;
    }
    rows.push_back(std::move(work));
  }
  assert(static_cast<int>(rows.size()) == n);

  // phase 2: split column groups; grid_groups[r][c] = symbol group of cell
  std::vector<std::vector<int>> grid_groups(n, std::vector<int>(n, -1));
  int col_idx = 0;
  for (int j = 0; j < v; ++j) {
    // workc[r][l]: remaining counts of this column group in unit row r
    std::vector<std::vector<int>> workc(n, std::vector<int>(t, 0));
    for (int r = 0; r < n; ++r)
      for (int l = 0; l < t; ++l) workc[r][l] = rows[r][j][l];
    for (int remaining = o.Q[j]; remaining > 0; --remaining, ++col_idx) {
      if (remaining == 1) {
        for (int r = 0; r < n; ++r) {
          int pick = -1, tot = 0;
          for (int l = 0; l < t; ++l) {
            tot += workc[r][l];
            if (pick < 0 && workc[r][l] > 0) pick = l;
          }
          assert(tot == 1 && pick >= 0);
          grid_groups[r][col_idx] = pick;
          workc[r][pick]--;
        }
        continue;
      }
      const int S = n + t, T = n + t + 1;
      Flow fl(n + t + 2);
      for (int r = 0; r < n; ++r) fl.add(S, r, 1);
      std::vector<std::vector<std::pair<int, int>>> refs(n);
      std::vector<std::vector<int>> lbl(n);
      for (int r = 0; r < n; ++r)
        for (int l = 0; l < t; ++l)
          if (workc[r][l] > 0) {
            refs[r].push_back(fl.add(r, n + l, workc[r][l]));
            lbl[r].push_back(l);
          }
      for (int l = 0; l < t; ++l) fl.add(n + l, T, o.R[l]);
      if (fl.maxflow(S, T) != n) throw std::invalid_argument("column extraction flow infeasible");
      for (int r = 0; r < n; ++r) {
        int pick = -1;
        for (size_t e = 0; e < refs[r].size(); ++e)
          if (fl.flow_on(refs[r][e]) > 0) {
            pick = lbl[r][e];
            break;
          }
        assert(pick >= 0);
        grid_groups[r][col_idx] = pick;
        workc[r][pick]--;
      }
    }
  }
  assert(col_idx == n);

  // phase 3: decompose each symbol group into perfect matchings
  auto offR = offsets(o.R);
  Grid grid(n, std::vector<int>(n, 0));
  for (int l = 0; l < t; ++l) {
    std::vector<std::vector<int>> cells(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (grid_groups[r][c] == l) cells[r].push_back(c);
    for (int r = 0; r < n; ++r) assert(static_cast<int>(cells[r].size()) == o.R[l]);
    for (int d = 0; d < o.R[l]; ++d) {
      std::vector<int> match_col(n, -1);  // col -> row
      std::vector<char> seen(n);
      auto try_k = [&](auto&& self, int r) -> bool {
        for (int c : cells[r]) {
          if (seen[c]) continue;
          seen[c] = 1;
          if (match_col[c] < 0 || self(self, match_col[c])) {
            match_col[c] = r;
            return true;
          }
        }
        return false;
      };
      for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!try_k(try_k, r))
          throw std::invalid_argument("matching failure in symbol split");
      }
      const int sym = offR[l] + d + 1;
      for (int c = 0; c < n; ++c) {
        const int r = match_col[c];
        assert(grid[r][c] == 0);
        grid[r][c] = sym;
        cells[r].erase(std::find(cells[r].begin(), cells[r].end(), c));
      }
    }
  }
  return grid;
}

Square ils_from_outline(const Outline& o, int k) {
  if (o.P != o.Q || o.P != o.R)
    throw std::invalid_argument("ils_from_outline requires P = Q = R");
  std::vector<int> respect(k);
  for (int i = 0; i < k; ++i) respect[i] = i;
  if (auto bad = validate_outline(o, respect); !bad.empty())
    throw std::invalid_argument("outline does not respect its first " + std::to_string(k) +
                                " parts: " + bad.front());
  Square sq;
  sq.grid = lift(o);
  sq.order = static_cast<int>(sq.grid.size());
  Parts head(o.P.begin(), o.P.begin() + k);
  sq.subsquares = diagonal_specs(head);
  return sq;
}

Rat::Rat(long long n) : num(n), den(1) {}

Rat::Rat(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

Ros symmetrize(const Outline& o) {
  if (o.P != o.Q || o.P != o.R)
    throw std::invalid_argument("symmetrize requires P = Q = R");
  const int u = o.u();
  Ros ros;
  ros.P = o.P;
  ros.x.assign(static_cast<size_t>(u) * u * u, Rat(0));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j)
      for (int l = 0; l < u; ++l) {
        const long long sum = o.at(i, j, l) + o.at(j, i, l) + o.at(j, l, i) + o.at(l, j, i) +
                              o.at(i, l, j) + o.at(l, i, j);
        ros.at(i, j, l) = Rat(sum, 6);
      }
  return ros;
}

std::vector<std::string> validate_ros(const Ros& r, const std::vector<int>& respect) {
  const int u = r.u();
  std::vector<std::string> bad;
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      Rat cell(0), row(0), col(0);
      for (int l = 0; l < u; ++l) {
        cell = cell + r.at(i, j, l);
        row = row + r.at(i, l, j);
        col = col + r.at(l, i, j);
        if (r.at(i, j, l) < Rat(0))
          bad.push_back("negative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      const Rat want(static_cast<long long>(r.P[i]) * r.P[j]);
      if (!(cell == want)) bad.push_back("cell sum (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(row == want)) bad.push_back("row sum (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(col == want)) bad.push_back("col sum (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i : respect)
    if (!(r.at(i, i, i) == Rat(static_cast<long long>(r.P[i]) * r.P[i])))
      bad.push_back("diagonal value " + std::to_string(i) + " not h^2");
  return bad;
}

}  // namespace ils
