#include "ils/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ils/core.hpp"

namespace ils {
namespace {

// Internal invariants of the constructions: these hold whenever the documented
// preconditions do, so a failure is a bug, not bad input.
void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction invariant failed: " + what);
}

void precondition(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int wrap1(int v, int r) { return (v - 1 + r * 4) % r + 1; }
int circ_add(int a, int b, int r) { return (a + b - 1) % r + 1; }

int sum_of(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0); }

Parts drop_first(const Parts& p) { return Parts(p.begin() + 1, p.end()); }

bool nonincreasing(const Parts& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

using Table = std::vector<std::vector<int>>;  // 1-based (r+1) x (r+1), 0 = empty

// Partial circulant square in 1-based arithmetic; see circulant_partial.
Table circulant_table(int r, int h1, int t) {
  precondition(t >= 1, "circulant: h2 must be >= 1");
  const bool odd = r % 2 == 1;
  precondition(4 * t <= r + (odd ? 1 : 0), "circulant: 4*h2 <= r (+1 when r odd) violated");
  precondition(2 * t <= h1 && h1 <= r + 1 - 2 * t, "circulant: 2*h2 <= h1 <= r+1-2*h2 violated");
  Table L(r + 1, std::vector<int>(r + 1, kEmpty));
  if (!odd) {
    std::vector<int> row1(r + 1, -1);  // -1 = unset, kEmpty = deliberately empty
    for (int j = 1; j <= t; ++j) {
      row1[2 * j] = kEmpty;
      row1[r + 2 - 2 * j] = kEmpty;
    }
    for (int j = 1; j <= t; ++j) {
      int i = 2 * j - 1;
      require(row1[i] == -1, "circulant first-row overlap (odd positions)");
      row1[i] = (i + 1) / 2;
    }
    for (int j = 1; j <= t - 1; ++j) {
      int i = r + 1 - 2 * j;
      require(row1[i] == -1, "circulant first-row overlap (high positions)");
      row1[i] = (i + r + 1) / 2;
    }
    for (int j = 1; j <= (r - 4 * t + 2) / 2; ++j) {
      int i = 2 * t + j;
      require(row1[i] == -1, "circulant first-row overlap (low filler)");
      row1[i] = r - i + t + 2;
    }
    for (int j = 1; j <= (r - 4 * t) / 2; ++j) {
      int i = (r + 2) / 2 + j;
      require(row1[i] == -1, "circulant first-row overlap (high filler)");
      row1[i] = r - i - t + 3;
    }
    for (int i = 1; i <= r; ++i) require(row1[i] != -1, "circulant first row incomplete");
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        int base = row1[wrap1(j - i + 1, r)];
        L[i][j] = base == kEmpty ? kEmpty : circ_add(base, i - 1, r);
      }
  } else {
    int inv2 = (r + 1) / 2;
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) L[i][j] = ((i + j) * inv2 - 1) % r + 1;
    for (int l = 1; l <= t; ++l)
      for (int d : {2 * l - 1, r + 1 - 2 * l})
        for (int i = 1; i <= r; ++i) L[i][circ_add(i, d, r)] = kEmpty;
  }
  // extra deletions: differences 2t .. h1-1, all within the free band
  for (int d = 2 * t; d < h1; ++d) {
    require(d <= r - 2 * t, "circulant free band exceeded");
    for (int i = 1; i <= r; ++i) {
      int j = circ_add(i, d, r);
      require(L[i][j] != kEmpty, "circulant deleting an already empty diagonal");
      L[i][j] = kEmpty;
    }
  }
  // structural checks
  for (int i = 1; i <= r; ++i) {
    std::vector<int> row, col;
    for (int j = 1; j <= r; ++j) {
      if (L[i][j] != kEmpty) row.push_back(L[i][j]);
      if (L[j][i] != kEmpty) col.push_back(L[j][i]);
    }
    auto distinct = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    require(static_cast<int>(row.size()) == r - h1 && distinct(row),
            "circulant row fill count/latin");
    require(static_cast<int>(col.size()) == r - h1 && distinct(col),
            "circulant column fill count/latin");
  }
  for (int d = 0; d < r; ++d) {
    std::vector<int> vals;
    for (int i = 1; i <= r; ++i) vals.push_back(L[i][circ_add(i, d, r)]);
    if (vals[0] == kEmpty) {
      for (int v : vals) require(v == kEmpty, "circulant diagonal not constant-empty");
    } else {
      std::sort(vals.begin(), vals.end());
      for (int i = 1; i <= r; ++i) require(vals[i - 1] == i, "circulant diagonal not transversal");
    }
  }
  for (int dd = 0; dd < t; ++dd)
    for (int i = 1; i <= r; ++i) {
      int j = circ_add(i, 2 * dd, r);
      require(L[i][j] == circ_add(i, dd, r), "circulant kept-difference value (row)");
      require(L[j][i] == circ_add(i, dd, r), "circulant kept-difference value (col)");
    }
  return L;
}

}  // namespace

CirculantPartial circulant_partial(int r, int h1, int h2) {
  precondition(r >= 1, "circulant: order must be positive");
  Table L = circulant_table(r, h1, h2);
  CirculantPartial out;
  out.r = r;
  out.h1 = h1;
  out.h2 = h2;
  out.grid.assign(r, std::vector<int>(r, kEmpty));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) out.grid[i - 1][j - 1] = L[i][j];
  for (int d = 0; d < r; ++d)
    if (L[1][circ_add(1, d, r)] == kEmpty) out.empty_diffs.push_back(d);
  return out;
}

Grid realization_square(int h1, const Parts& tail) {
  precondition(!tail.empty() && nonincreasing(tail) && tail.back() >= 1,
               "realization: tail must be nonincreasing positive");
  const int r = sum_of(tail);
  const int t = tail[0];
  Table L = circulant_table(r, h1, t);
  const int k = 1 + static_cast<int>(tail.size());
  std::vector<int> soff = offsets(tail);
  // labels: 0 = head symbols / empty cells, 1..k-1 = tail blocks
  std::vector<int> symlab(r + 1, 0);
  for (int bi = 0; bi < k - 1; ++bi)
    for (int s = soff[bi] + 1; s <= soff[bi + 1]; ++s) symlab[s] = bi + 1;
  Table lab(r + 1, std::vector<int>(r + 1, 0));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) lab[i][j] = L[i][j] == kEmpty ? 0 : symlab[L[i][j]];
  // intercalate swaps pulling each tail block's label set together
  for (int bi = 0; bi < k - 1; ++bi) {
    const int S = soff[bi];
    const int h = tail[bi];
    for (int a = 1; a <= h; ++a)
      for (int b = a + 1; b <= h; ++b) {
        if ((b - a) % 2 == 0) {
          require(lab[wrap1(S + a, r)][wrap1(S + b, r)] == bi + 1,
                  "realization even-difference cell not in-block");
          continue;
        }
        int r1 = wrap1(S + a, r), c1 = wrap1(S + b, r);
        int r2 = wrap1(S + 1 - a, r), c2 = wrap1(S + 2 * h + 1 - b, r);
        auto do_swap = [&](int ra, int ca, int rb, int cb) {
          require(lab[ra][ca] == 0, "realization swap precondition (empty corner)");
          require(lab[ra][cb] == bi + 1, "realization swap precondition (block corner)");
          require(lab[rb][ca] == bi + 1, "realization swap precondition (block corner)");
          require(lab[rb][cb] == 0, "realization swap precondition (empty corner)");
          lab[ra][ca] = bi + 1;
          lab[ra][cb] = 0;
          lab[rb][ca] = 0;
          lab[rb][cb] = bi + 1;
        };
        do_swap(r1, c1, r2, c2);
        do_swap(c1, r1, c2, r2);  // transposed quadruple
      }
  }
  // outline rectangle over rows/cols (h1, 1^r) and symbols (h1, tail...)
  Parts lines(1 + r, 1);
  lines[0] = h1;
  Parts syms;
  syms.push_back(h1);
  syms.insert(syms.end(), tail.begin(), tail.end());
  std::vector<std::vector<int>> rowcnt(r + 1, std::vector<int>(k, 0));
  std::vector<std::vector<int>> colcnt(r + 1, std::vector<int>(k, 0));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      rowcnt[i][lab[i][j]] += 1;
      colcnt[j][lab[i][j]] += 1;
    }
  Outline o(lines, lines, syms);
  o.at(0, 0, 0) = h1 * h1;
  for (int x = 1; x <= r; ++x) {
    require(rowcnt[x][0] == h1 && colcnt[x][0] == h1, "realization border head count");
    for (int l = 1; l < k; ++l) {
      int rv = tail[l - 1] - rowcnt[x][l];
      int cv = tail[l - 1] - colcnt[x][l];
      require(rv >= 0 && cv >= 0, "realization border count negative");
      o.at(x, 0, l) = rv;
      o.at(0, x, l) = cv;
    }
  }
  for (int x = 1; x <= r; ++x)
    for (int y = 1; y <= r; ++y) o.at(x, y, lab[x][y]) += 1;
  require(validate_outline(o).empty(), "realization outline invalid");
  Grid grid = lift(o);
  require(verify_ils(grid, syms).ok, "realization lift verification");
  return grid;
}

Outline k2_outline(int h1, int h2, int n) {
  const int h3 = n - h1 - h2;
  precondition(h1 >= h2 && h2 >= 1 && h3 >= h1, "k2 outline: requires h1 >= h2 >= 1, n-h1-h2 >= h1");
  Parts P = {h1, h2, h3};
  Outline o(P, P, P);
  auto put = [&](int i, int j, int l, int v) {
    require(v >= 0, "k2 outline negative cell count");
    o.at(i, j, l) = v;
  };
  put(0, 0, 0, h1 * h1);
  put(0, 1, 2, h1 * h2);
  put(0, 2, 1, h1 * h2);
  put(0, 2, 2, h1 * h3 - h1 * h2);
  put(1, 0, 2, h1 * h2);
  put(1, 1, 1, h2 * h2);
  put(1, 2, 0, h1 * h2);
  put(1, 2, 2, h2 * h3 - h1 * h2);
  put(2, 0, 1, h1 * h2);
  put(2, 0, 2, h1 * h3 - h1 * h2);
  put(2, 1, 0, h1 * h2);
  put(2, 1, 2, h2 * h3 - h1 * h2);
  put(2, 2, 0, h1 * h3 - h1 * h2);
  put(2, 2, 1, h2 * h3 - h1 * h2);
  put(2, 2, 2, h3 * h3 - h1 * h3 - h2 * h3 + 2 * h1 * h2);
  require(validate_outline(o).empty(), "k2 outline invalid");
  return o;
}

Grid construct_ils_k2(int h1, int h2, int n) {
  if (h1 < h2) std::swap(h1, h2);
  precondition(h2 >= 1, "k2: parts must be positive");
  if (n - h1 - h2 < h1) throw Infeasible("no ILS(n; h1,h2): requires n - h1 - h2 >= max(h1,h2)");
  Outline o = k2_outline(h1, h2, n);
  Grid grid = lift(o);
  require(verify_ils(grid, {h1, h2}).ok, "k2 lift verification");
  return grid;
}

std::optional<long long> k3_z_value(int h1, int h2, int h3, int n) {
  precondition(h1 >= h2 && h2 >= h3 && h3 >= 1, "k3: requires h1 >= h2 >= h3 >= 1");
  const long long H1 = h1, H2 = h2, H3 = h3, H4 = n - h1 - h2 - h3;
  if (H4 < 0) return std::nullopt;
  if (H4 >= H1) return H2 * H3;
  if (H4 >= H3) {  // h1 > h4 >= h3
    if (H4 >= H1 - H3) return H2 * H4 - H1 * H2 + H2 * H3;
    return std::nullopt;
  }
  // h4 < h3
  const bool c1 = H1 * H4 >= H1 * H2 + H1 * H3 - 2 * H2 * H3;
  const bool c2 = H4 * H4 + H4 * (2 * H1 - H2 - H3) - H1 * H2 - H1 * H3 + 2 * H2 * H3 >= 0;
  if (c1 && c2) return H1 * H4 - H1 * H2 - H1 * H3 + 2 * H2 * H3;
  return std::nullopt;
}

Outline k3_outline(int h1, int h2, int h3, int n, long long z) {
  precondition(h1 >= h2 && h2 >= h3 && h3 >= 1 && n >= h1 + h2 + h3,
               "k3 outline: requires h1 >= h2 >= h3 >= 1 and n >= h1+h2+h3");
  const long long H1 = h1, H2 = h2, H3 = h3, H4 = n - h1 - h2 - h3;
  require(z >= 0, "k3 z < 0");
  require(z <= H2 * H3, "k3 z cap 1");
  require(z <= H1 * H4 - H1 * H2 - H1 * H3 + 2 * H2 * H3, "k3 z cap 2");
  require(z <= H2 * H4 - H1 * H2 + H2 * H3, "k3 z cap 3");
  require(z <= H3 * H4 - H1 * H3 + H2 * H3, "k3 z cap 4");
  require(H4 * H4 - H4 * (H1 + H2 + H3) + 2 * H1 * H2 + 2 * H1 * H3 - 4 * H2 * H3 + 3 * z >= 0,
          "k3 slack cell count");
  Parts P = {h1, h2, h3, static_cast<int>(H4)};
  Outline o(P, P, P);
  auto put = [&](int i, int j, int l, long long v) {
    require(v >= 0, "k3 outline negative cell count");
    o.at(i, j, l) = static_cast<int>(v);
  };
  const long long A = H1 * H4 - H1 * H2 - H1 * H3 + 2 * H2 * H3;
  put(0, 0, 0, H1 * H1);
  put(0, 1, 2, H2 * H3);
  put(0, 1, 3, H1 * H2 - H2 * H3);
  put(0, 2, 1, H2 * H3 - z);
  put(0, 2, 3, H1 * H3 - H2 * H3 + z);
  put(0, 3, 1, H1 * H2 - H2 * H3 + z);
  put(0, 3, 2, H1 * H3 - H2 * H3);
  put(0, 3, 3, A - z);
  put(1, 0, 2, H2 * H3 - z);
  put(1, 0, 3, H1 * H2 - H2 * H3 + z);
  put(1, 1, 1, H2 * H2);
  put(1, 2, 0, H2 * H3);
  put(1, 3, 0, H1 * H2 - H2 * H3);
  put(1, 3, 2, z);
  put(1, 3, 3, H2 * H4 - H1 * H2 + H2 * H3 - z);
  put(2, 0, 1, H2 * H3);
  put(2, 0, 3, H1 * H3 - H2 * H3);
  put(2, 1, 0, H2 * H3 - z);
  put(2, 1, 3, z);
  put(2, 2, 2, H3 * H3);
  put(2, 3, 0, H1 * H3 - H2 * H3 + z);
  put(2, 3, 3, H3 * H4 - H1 * H3 + H2 * H3 - z);
  put(3, 0, 1, H1 * H2 - H2 * H3);
  put(3, 0, 2, H1 * H3 - H2 * H3 + z);
  put(3, 0, 3, A - z);
  put(3, 1, 0, H1 * H2 - H2 * H3 + z);
  put(3, 1, 3, H2 * H4 - H1 * H2 + H2 * H3 - z);
  put(3, 2, 0, H1 * H3 - H2 * H3);
  put(3, 2, 1, z);
  put(3, 2, 3, H3 * H4 - H1 * H3 + H2 * H3 - z);
  put(3, 3, 0, A - z);
  put(3, 3, 1, H2 * H4 - H1 * H2 + H2 * H3 - z);
  put(3, 3, 2, H3 * H4 - H1 * H3 + H2 * H3 - z);
  put(3, 3, 3, H4 * H4 - H4 * (H1 + H2 + H3) + 2 * H1 * H2 + 2 * H1 * H3 - 4 * H2 * H3 + 3 * z);
  if (H4 == 0) {
    Parts P3 = {h1, h2, h3};
    Outline o3(P3, P3, P3);
    for (int i = 0; i < 4; ++i) {
      long long row3 = 0, col3 = 0;
      for (int l = 0; l < 4; ++l) {
        row3 += o.at(i, 3, l);
        col3 += o.at(3, i, l);
      }
      require(row3 == 0 && col3 == 0, "k3 slack strip: nonempty slack line");
      for (int j = 0; j < 4; ++j) require(o.at(i, j, 3) == 0, "k3 slack strip: slack symbol used");
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) o3.at(i, j, l) = o.at(i, j, l);
    o = std::move(o3);
  }
  require(validate_outline(o).empty(), "k3 outline invalid");
  return o;
}

Grid construct_ils_k3(int h1, int h2, int h3, int n) {
  std::array<int, 3> hs = {h1, h2, h3};
  std::sort(hs.begin(), hs.end(), std::greater<>());
  h1 = hs[0];
  h2 = hs[1];
  h3 = hs[2];
  precondition(h3 >= 1, "k3: parts must be positive");
  auto z = k3_z_value(h1, h2, h3, n);
  if (!z) throw Infeasible("no ILS(n; h1,h2,h3): three-subsquare characterization fails");
  Outline o = k3_outline(h1, h2, h3, n, *z);
  Grid grid = lift(o);
  require(verify_ils(grid, {h1, h2, h3}).ok, "k3 lift verification");
  return grid;
}

Grid doubled_square(int h1) {
  precondition(h1 >= 1, "doubled square: order must be positive");
  Grid E = inflate({{2, 1}, {1, 2}}, h1);
  const int n = 2 * h1;
  std::vector<int> sperm(n), ident(n);
  for (int s = 0; s < h1; ++s) {
    sperm[s] = h1 + s;
    sperm[h1 + s] = s;
  }
  for (int i = 0; i < n; ++i) ident[i] = i;
  Grid grid = permute_square(E, ident, ident, sperm);
  require(verify_ils(grid, {h1}).ok, "doubled square verification");
  return grid;
}

// ---------- hardcoded five-row pieces ----------

namespace {

using RawArray = std::vector<std::vector<std::vector<int>>>;

const RawArray& five_raw(int s) {
  static const std::array<RawArray, 5> raw = {{
      {
          {{4, 5}, {3, 5}, {1, 2}, {1, 2}, {3, 4}},
          {{3, 4}, {}, {4, 5}, {3, 5}, {1, 1}},
          {{1, 1}, {4, 5}, {}, {2}, {2}},
          {{3, 5}, {1, 1}, {2}, {}, {2}},
          {{2, 2}, {3, 4}, {1}, {1}, {}},
      },
      {
          {{4, 5}, {4, 5}, {1, 1}, {3, 6}, {2, 3}, {2}},
          {{3, 3}, {}, {4, 6}, {1, 5}, {1, 4}, {5}},
          {{2, 2}, {4, 5}, {}, {1}, {6}, {1}},
          {{5, 6}, {1, 1}, {2}, {}, {2}, {3}},
          {{1, 1}, {3, 6}, {2}, {2}, {}, {4}},
          {{4}, {3}, {5}, {2}, {1}, {}},
      },
      {
          {{4, 5}, {3, 5}, {1, 2}, {1, 7}, {2, 6}, {3}, {4}},
          {{3, 3}, {}, {1, 5}, {1, 6}, {4, 7}, {4}, {5}},
          {{4, 7}, {1, 6}, {}, {5}, {2}, {1}, {2}},
          {{2, 2}, {1, 7}, {6}, {}, {1}, {5}, {3}},
          {{1, 6}, {3, 4}, {7}, {2}, {}, {2}, {1}},
          {{1}, {5}, {4}, {2}, {3}, {}, {}},
          {{5}, {4}, {2}, {3}, {1}, {}, {}},
      },
      {
          {{3, 5}, {4, 8}, {1, 6}, {5, 7}, {2, 2}, {3}, {4}, {1}},
          {{3, 4}, {}, {1, 8}, {3, 6}, {1, 7}, {4}, {5}, {5}},
          {{1, 8}, {1, 7}, {}, {2}, {6}, {5}, {2}, {4}},
          {{2, 6}, {1, 5}, {7}, {}, {8}, {1}, {3}, {2}},
          {{1, 7}, {4, 6}, {2}, {8}, {}, {2}, {1}, {3}},
          {{2}, {5}, {4}, {1}, {3}, {}, {}, {}},
          {{5}, {3}, {2}, {1}, {4}, {}, {}, {}},
          {{4}, {3}, {5}, {2}, {1}, {}, {}, {}},
      },
      {
          {{2, 4}, {3, 6}, {4, 9}, {1, 8}, {2, 7}, {5}, {3}, {1}, {5}},
          {{3, 5}, {}, {1, 8}, {6, 7}, {1, 9}, {4}, {5}, {4}, {3}},
          {{2, 7}, {5, 8}, {}, {9}, {6}, {1}, {1}, {2}, {4}},
          {{1, 6}, {1, 9}, {7}, {}, {8}, {3}, {2}, {5}, {2}},
          {{8, 9}, {1, 7}, {6}, {2}, {}, {2}, {4}, {3}, {1}},
          {{5}, {4}, {1}, {2}, {3}, {}, {}, {}, {}},
          {{4}, {3}, {2}, {5}, {1}, {}, {}, {}, {}},
          {{3}, {4}, {5}, {1}, {2}, {}, {}, {}, {}},
          {{1}, {5}, {2}, {3}, {4}, {}, {}, {}, {}},
      },
  }};
  return raw[static_cast<size_t>(s)];
}

}  // namespace

Freq five_block_freq(int s) {
  precondition(0 <= s && s <= 4, "five-row piece: s must be in 0..4");
  const int u = 5 + s;
  Freq F(u, std::vector<int>(u, 0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i < 2 || j < 2)
        F[i][j] = 2;
      else if (i != j)
        F[i][j] = 1;
    }
  F[1][1] = 0;
  for (int e = 0; e < s; ++e)
    for (int i = 0; i < 5; ++i) {
      F[i][5 + e] = 1;
      F[5 + e][i] = 1;
    }
  return F;
}

OutlineArray five_block_array(int s) {
  precondition(0 <= s && s <= 4, "five-row piece: s must be in 0..4");
  const RawArray& arr = five_raw(s);
  const int u = 5 + s;
  require(static_cast<int>(arr.size()) == u, "five-row piece shape");
  OutlineArray o(u);
  for (int i = 0; i < u; ++i) {
    require(static_cast<int>(arr[i].size()) == u, "five-row piece shape");
    for (int j = 0; j < u; ++j)
      for (int sym : arr[i][j]) {
        require(1 <= sym && sym <= u, "five-row piece symbol range");
        o.at(i, j, sym - 1) += 1;
      }
  }
  require(validate_outline_array(o, five_block_freq(s)).empty(), "five-row piece invalid");
  return o;
}

Freq plain_piece_freq(int m, int s) {
  precondition(m >= 2 && s >= 0, "plain piece: requires m >= 2, s >= 0");
  const int u = m + s;
  Freq F(u, std::vector<int>(u, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j || (i == 0 && j == 0)) F[i][j] = 1;
  for (int e = 0; e < s; ++e)
    for (int i = 0; i < m; ++i) {
      F[i][m + e] = 1;
      F[m + e][i] = 1;
    }
  return F;
}

OutlineArray plain_piece(int m, int s) {
  precondition(m >= 2 && s >= 0 && s <= m - 1, "plain piece: requires m >= 2, 0 <= s <= m-1");
  const int u = m + s;
  if (u == 2) {  // (m,s) = (2,0)
    OutlineArray o(2);
    o.at(0, 0, 1) = 1;
    o.at(0, 1, 0) = 1;
    o.at(1, 0, 0) = 1;
    return o;
  }
  Grid sq;
  if (s <= 1) {
    sq = idempotent_square(u);
  } else {
    Grid g = realization_square(s, Parts(m, 1));  // LS(s 1^m), s-block first
    Parts parts;
    parts.push_back(s);
    parts.insert(parts.end(), m, 1);
    std::vector<int> order;
    for (int i = 1; i <= m; ++i) order.push_back(i);
    order.push_back(0);
    std::vector<int> perm = blocks_to_perm(parts, order);
    sq = permute_square(g, perm, perm, perm);
    for (int i = 0; i < m; ++i) require(sq[i][i] == i + 1, "plain piece diagonal");
  }
  Parts ones(u, 1);
  OutlineArray o = outline_square_as_array(reduce_modulo(sq, ones, ones, ones));
  for (int i = 1; i < m; ++i)
    for (int l = 0; l < u; ++l) o.at(i, i, l) = 0;
  for (int i = m; i < u; ++i)
    for (int j = m; j < u; ++j)
      for (int l = 0; l < u; ++l) o.at(i, j, l) = 0;
  require(validate_outline_array(o, plain_piece_freq(m, s)).empty(), "plain piece invalid");
  return o;
}

// ---------- border arrays ----------

namespace {

// amalgamate a piece over m+s singletons into m + n_tail groups;
// flat_tail[e] = 0-based tail position of tail line e.
OutlineArray embed_piece(const OutlineArray& small, int m, const std::vector<int>& flat_tail,
                         int u_out) {
  std::vector<int> mp;
  for (int i = 0; i < m; ++i) mp.push_back(i);
  for (int tp : flat_tail) mp.push_back(m + tp);
  return amalgamate_maps(small, mp, mp, mp, u_out);
}

// flatten c*h_t copies of each tail position, chunk round-robin into b blocks
std::vector<std::vector<int>> chunks_for(int b, int c, const Parts& tail, int maxsize) {
  std::vector<int> flat;
  for (size_t tp = 0; tp < tail.size(); ++tp)
    flat.insert(flat.end(), static_cast<size_t>(c) * tail[tp], static_cast<int>(tp));
  require(static_cast<long long>(flat.size()) <= static_cast<long long>(b) * maxsize,
          "border chunking capacity");
  std::vector<std::vector<int>> blocks(b);
  for (size_t idx = 0; idx < flat.size(); ++idx)
    blocks[idx % b].push_back(flat[idx]);
  return blocks;
}

}  // namespace

Freq border_freq_plain(int m, int b, int c, const Parts& tail) {
  const int u = m + static_cast<int>(tail.size());
  Freq F(u, std::vector<int>(u, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j || (i == 0 && j == 0)) F[i][j] = b;
  for (size_t tp = 0; tp < tail.size(); ++tp)
    for (int i = 0; i < m; ++i) {
      F[i][m + tp] = c * tail[tp];
      F[m + tp][i] = c * tail[tp];
    }
  return F;
}

Freq border_freq_five(int a, int b, int c, const Parts& tail) {
  const int u = 5 + static_cast<int>(tail.size());
  Freq F(u, std::vector<int>(u, 0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i < 2 || j < 2)
        F[i][j] = a;
      else if (i != j)
        F[i][j] = b;
    }
  F[1][1] = 0;
  for (size_t tp = 0; tp < tail.size(); ++tp)
    for (int i = 0; i < 5; ++i) {
      F[i][5 + tp] = c * tail[tp];
      F[5 + tp][i] = c * tail[tp];
    }
  return F;
}

OutlineArray border_array_plain(int m, int b, int c, const Parts& tail) {
  precondition(m >= 2 && b >= 0 && c >= 0, "plain border: requires m >= 2, b,c >= 0");
  const int u = m + static_cast<int>(tail.size());
  if (b == 0) {
    precondition(c * sum_of(tail) == 0, "plain border: b = 0 forces empty borders");
    return OutlineArray(u);
  }
  precondition(static_cast<long long>(m - 1) * b >= static_cast<long long>(c) * sum_of(tail),
               "plain border: requires (m-1)*b >= c*sum(tail)");
  OutlineArray total(u);
  for (auto& blk : chunks_for(b, c, tail, m - 1)) {
    std::sort(blk.begin(), blk.end());
    total = sum_outline_arrays(total, embed_piece(plain_piece(m, static_cast<int>(blk.size())), m,
                                                  blk, u));
  }
  require(validate_outline_array(total, border_freq_plain(m, b, c, tail)).empty(),
          "plain border array invalid");
  return total;
}

OutlineArray border_array_five(int a, int b, int c, const Parts& tail) {
  precondition(b >= 0 && c >= 0 && a >= 0, "five border: requires a,b,c >= 0");
  const int u = 5 + static_cast<int>(tail.size());
  if (b == 0) {
    precondition(a == 0 && c * sum_of(tail) == 0, "five border: b = 0 forces empty array");
    return OutlineArray(u);
  }
  precondition(2 * b >= a && a >= b, "five border: requires b <= a <= 2b");
  precondition(4LL * b >= static_cast<long long>(c) * sum_of(tail),
               "five border: requires 4b >= c*sum(tail)");
  auto blocks = chunks_for(b, c, tail, 4);
  OutlineArray total(u);
  for (int bi = 0; bi < b; ++bi) {
    auto blk = blocks[bi];
    std::sort(blk.begin(), blk.end());
    const int s = static_cast<int>(blk.size());
    OutlineArray piece = bi < a - b ? five_block_array(s) : plain_piece(5, s);
    total = sum_outline_arrays(total, embed_piece(piece, 5, blk, u));
  }
  require(validate_outline_array(total, border_freq_five(a, b, c, tail)).empty(),
          "five border array invalid");
  return total;
}

// ---------- composite constructions ----------

namespace {

// Reduce a normal-form ILS (subsquare parts first, slack lines last) to an
// outline array over groups (0 = slack, 1.. = subsquares).
OutlineArray reduce_slack_first(const Grid& grid, const Parts& sub_parts, int slack) {
  const int n = static_cast<int>(grid.size());
  require(sum_of(sub_parts) + slack == n, "slack-first reduction size");
  std::vector<int> gmap;
  for (size_t gi = 0; gi < sub_parts.size(); ++gi)
    gmap.insert(gmap.end(), sub_parts[gi], static_cast<int>(gi) + 1);
  gmap.insert(gmap.end(), slack, 0);
  const int k = static_cast<int>(sub_parts.size()) + 1;
  OutlineArray o(k);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) o.at(gmap[r], gmap[c], gmap[grid[r][c] - 1]) += 1;
  return o;
}

// groups (0 = slack, 1..k-1) -> (1..k-1, 0)
std::pair<OutlineArray, Parts> slack_last(const OutlineArray& o, const Parts& P) {
  const int k = o.k;
  std::vector<int> sigma;  // sigma[new] = old
  for (int i = 1; i < k; ++i) sigma.push_back(i);
  sigma.push_back(0);
  OutlineArray o2(k);
  Parts P2(k);
  for (int i = 0; i < k; ++i) {
    P2[i] = P[sigma[i]];
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) o2.at(i, j, l) = o.at(sigma[i], sigma[j], sigma[l]);
  }
  return {std::move(o2), std::move(P2)};
}

// validate the union (slack-first) outline square, put the slack group last,
// lift, verify normal form
Grid finish_from_union(const OutlineArray& U, const Parts& P_f, const Parts& parts_out) {
  auto [o2, p2] = slack_last(U, P_f);
  Outline o = array_as_outline_square(o2, p2);
  require(validate_outline(o).empty(), "composite union outline invalid");
  Grid grid = lift(o);
  require(verify_ils(grid, parts_out).ok, "composite lift verification");
  return grid;
}

void check_main_shape(const Parts& h, int min_k, const char* who) {
  precondition(static_cast<int>(h.size()) >= min_k && nonincreasing(h) && h.back() >= 1 &&
                   h[0] == h[1],
               std::string(who) + ": requires nonincreasing positive parts with h[0] == h[1]");
}

Grid small_third_direct(const Parts& h) {
  const int h1 = h[0];
  Parts tail(h.begin() + 2, h.end());
  const int r = sum_of(tail);
  Grid M = realization_square(2 * h1, tail);
  Grid E = inflate({{2, 1}, {1, 2}}, h1);
  for (int a = 0; a < 2 * h1; ++a)
    for (int b = 0; b < 2 * h1; ++b) M[a][b] = E[a][b];
  const int n = 2 * h1 + r;
  // rows/cols h1..2h1 to the end; head symbol halves swapped then shifted down
  std::vector<int> lperm(n), sperm(n);
  for (int i = 0; i < h1; ++i) lperm[i] = i;
  for (int i = h1; i < 2 * h1; ++i) lperm[i] = n - h1 + (i - h1);
  for (int i = 2 * h1; i < n; ++i) lperm[i] = h1 + (i - 2 * h1);
  for (int s = 0; s < h1; ++s) sperm[s] = n - h1 + s;
  for (int s = h1; s < n; ++s) sperm[s] = s - h1;
  Grid grid = permute_square(M, lperm, lperm, sperm);
  require(verify_ils(grid, drop_first(h)).ok, "small-third direct verification");
  return grid;
}

Grid small_third_patched(const Parts& h) {
  const int k = static_cast<int>(h.size());
  const int h1 = h[0];
  Parts tail(h.begin() + 2, h.end());
  const int r = sum_of(tail);
  const int g = r % 2 == 1 ? (r + 1 - 2 * h[2]) / 2 : (r - 2 * h[2]) / 2;
  require(g >= h[2] && h1 > g, "small-third patched: repair subsquare size");
  Parts inner = {g, g};
  inner.insert(inner.end(), tail.begin(), tail.end());
  Grid Lp = small_third_direct(inner);  // ILS(2g+r; g, tail...)
  Parts subs = {g};
  subs.insert(subs.end(), tail.begin(), tail.end());
  OutlineArray O = reduce_slack_first(Lp, subs, g);
  Parts Q = {g, g};
  Q.insert(Q.end(), tail.begin(), tail.end());
  // corner structure of the direct construction
  auto cell_sum = [&](int i, int j) {
    int s = 0;
    for (int l = 0; l < k; ++l) s += O.at(i, j, l);
    return s;
  };
  require(O.at(0, 0, 1) == g * g && cell_sum(0, 0) == g * g, "patched corner (0,0)");
  require(O.at(0, 1, 0) == g * g && cell_sum(0, 1) == g * g, "patched corner (0,1)");
  require(O.at(1, 0, 0) == g * g && cell_sum(1, 0) == g * g, "patched corner (1,0)");
  for (int i = 1; i < k; ++i)
    require(O.at(i, i, i) == Q[i] * Q[i] && cell_sum(i, i) == Q[i] * Q[i],
            "patched diagonal pins");
  // strip the diagonal and the 2x2 corner
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) O.at(i, i, l) = 0;
  for (int l = 0; l < k; ++l) {
    O.at(0, 1, l) = 0;
    O.at(1, 0, l) = 0;
  }
  Freq F(k, std::vector<int>(k, 0));
  for (int i = 2; i < k; ++i)
    for (int j = 2; j < k; ++j)
      if (i != j) F[i][j] = h[i] * h[j];
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < k; ++j) {
      F[i][j] = g * h[j];
      F[j][i] = g * h[j];
    }
  require(validate_outline_array(O, F).empty(), "patched stripped array");
  OutlineArray Ostar = border_array_plain(2, h1 * h1, h1 - g, tail);
  OutlineArray U = sum_outline_arrays(O, Ostar);
  Parts h_f = {h1, h1};
  h_f.insert(h_f.end(), tail.begin(), tail.end());
  for (int i = 1; i < k; ++i) U.at(i, i, i) += h_f[i] * h_f[i];
  return finish_from_union(U, h_f, drop_first(h));
}

}  // namespace

Grid construct_small_third(const Parts& h) {
  check_main_shape(h, 3, "small-third");
  const int r = sum_of(Parts(h.begin() + 2, h.end()));
  precondition(4 * h[2] <= r + 1, "small-third: requires 4*h[2] <= sum(h[2:]) + 1");
  if (2 * h[0] <= r + 1 - 2 * h[2]) return small_third_direct(h);
  return small_third_patched(h);
}

Grid construct_triple_equal(const Parts& h) {
  check_main_shape(h, 5, "triple-equal");
  const int k = static_cast<int>(h.size());
  const int h1 = h[0], h3 = h[2];
  precondition(h[2] == h[3] && h[3] == h[4], "triple-equal: requires h[2] == h[3] == h[4]");
  Parts rest(h.begin() + 5, h.end());
  const int m = sum_of(rest);
  precondition(h3 > m + 1, "triple-equal: covered by small-third otherwise");
  const int g3 = m + 1;
  const int c = h3 - g3;
  const int h1p = std::min(h1, 3 * h3 + 2 * g3);
  const int g1 = h1p - c;
  require(g1 >= g3 && g3 >= 1, "triple-equal inner sizes");
  Parts inner = {g1, g1, g3, g3, g3};
  inner.insert(inner.end(), rest.begin(), rest.end());
  Grid Lp = construct_small_third(inner);
  Parts Q = inner;
  OutlineArray O = reduce_slack_first(Lp, drop_first(Q), g1);
  for (int i = 1; i < k; ++i) {
    int s = 0;
    for (int l = 0; l < k; ++l) s += O.at(i, i, l);
    require(O.at(i, i, i) == Q[i] * Q[i] && s == Q[i] * Q[i], "triple-equal diagonal pins");
  }
  const int b = h3 * h3 - g3 * g3;
  const int a = std::min(2 * b, h1p * h3 - g1 * g3);
  OutlineArray U = sum_outline_arrays(O, border_array_five(a, b, c, rest));
  const int b2 = h1p * h1p - g1 * g1 - a;
  const int c2 = h1p * h3 - g1 * g3 - a;
  require(b2 >= 0 && c2 >= 0, "triple-equal second border sizes");
  if (b2 > 0 || c2 > 0) {
    OutlineArray F2s = border_array_plain(2, b2, c2, {1, 1, 1});
    std::vector<int> ident = {0, 1, 2, 3, 4};
    U = sum_outline_arrays(U, amalgamate_maps(F2s, ident, ident, ident, k));
  }
  const int b3 = h1 * h1 - h1p * h1p;
  const int c3 = h1 - h1p;
  if (b3 > 0) {
    Parts t3 = {h3, h3, h3};
    t3.insert(t3.end(), rest.begin(), rest.end());
    U = sum_outline_arrays(U, border_array_plain(2, b3, c3, t3));
  }
  U.at(1, 1, 1) += h1 * h1 - g1 * g1;
  for (int i : {2, 3, 4}) U.at(i, i, i) += h3 * h3 - g3 * g3;
  Parts P_f = {h1, h1, h3, h3, h3};
  P_f.insert(P_f.end(), rest.begin(), rest.end());
  return finish_from_union(U, P_f, drop_first(h));
}

Grid construct_pair_equal(const Parts& h) {
  check_main_shape(h, 5, "pair-equal");
  const int k = static_cast<int>(h.size());
  const int h1 = h[0], h3 = h[2], h5 = h[4];
  precondition(h[2] == h[3] && h3 > h5, "pair-equal: requires h[2] == h[3] > h[4]");
  Parts rest(h.begin() + 5, h.end());
  const int m = h5 + sum_of(rest);
  precondition(2 * h3 > m + 1, "pair-equal: covered by small-third otherwise");
  const int c = h3 - h5;
  const int g1 = h1 - c;
  require(g1 >= h5 && h5 >= 1, "pair-equal inner sizes");
  Parts inner = {g1, g1, h5, h5, h5};
  inner.insert(inner.end(), rest.begin(), rest.end());
  Grid Lp = construct_main(inner);
  Parts Q = inner;
  OutlineArray O = reduce_slack_first(Lp, drop_first(Q), g1);
  for (int i = 1; i < k; ++i) {
    int s = 0;
    for (int l = 0; l < k; ++l) s += O.at(i, i, l);
    require(O.at(i, i, i) == Q[i] * Q[i] && s == Q[i] * Q[i], "pair-equal diagonal pins");
  }
  const int b1 = h3 * h3 - h5 * h5;
  Parts t1 = {h5};
  t1.insert(t1.end(), rest.begin(), rest.end());
  OutlineArray U = sum_outline_arrays(O, border_array_plain(4, b1, c, t1));
  const int b2 = 2 * c * (h1 - h3);
  const int c2 = c * (h1 - h3);
  if (b2 > 0) {
    OutlineArray F2s = border_array_plain(2, b2, c2, {1, 1});
    std::vector<int> ident = {0, 1, 2, 3};
    U = sum_outline_arrays(U, amalgamate_maps(F2s, ident, ident, ident, k));
  }
  U.at(1, 1, 1) += h1 * h1 - g1 * g1;
  for (int i : {2, 3}) U.at(i, i, i) += h3 * h3 - h5 * h5;
  Parts P_f = {h1, h1, h3, h3, h5};
  P_f.insert(P_f.end(), rest.begin(), rest.end());
  return finish_from_union(U, P_f, drop_first(h));
}

Grid construct_strict_third(const Parts& h) {
  check_main_shape(h, 4, "strict-third");
  const int k = static_cast<int>(h.size());
  const int h1 = h[0], h3 = h[2];
  precondition(h3 > h[3], "strict-third: requires h[2] > h[3]");
  Parts rest(h.begin() + 3, h.end());
  const int m = sum_of(rest);
  precondition(3 * h3 > m + 1, "strict-third: covered by small-third otherwise");
  const int g3 = std::max(h[3], (m + 1) / 3);
  const int c = h3 - g3;
  require(c >= 1, "strict-third repair width");
  const int g1 = h1 - c;
  require(g1 >= g3 && g3 >= 1, "strict-third inner sizes");
  Parts inner = {g1, g1, g3};
  inner.insert(inner.end(), rest.begin(), rest.end());
  Grid Lp = construct_main(inner);
  Parts Q = inner;
  OutlineArray O = reduce_slack_first(Lp, drop_first(Q), g1);
  for (int i = 1; i < k; ++i) {
    int s = 0;
    for (int l = 0; l < k; ++l) s += O.at(i, i, l);
    require(O.at(i, i, i) == Q[i] * Q[i] && s == Q[i] * Q[i], "strict-third diagonal pins");
  }
  const int b1 = h1 * h3 - g1 * g3;
  OutlineArray U = sum_outline_arrays(O, border_array_plain(3, b1, c, rest));
  const int b2 = c * (h1 - h3);
  if (b2 > 0) {
    OutlineArray F2s = border_array_plain(2, b2, 0, {});
    std::vector<int> ident = {0, 1};
    U = sum_outline_arrays(U, amalgamate_maps(F2s, ident, ident, ident, k));
  }
  U.at(1, 1, 1) += h1 * h1 - g1 * g1;
  U.at(2, 2, 2) += h3 * h3 - g3 * g3;
  Parts P_f = {h1, h1, h3};
  P_f.insert(P_f.end(), rest.begin(), rest.end());
  return finish_from_union(U, P_f, drop_first(h));
}

Grid construct_main(const Parts& H) {
  check_main_shape(H, 2, "construct_main");
  const int K = static_cast<int>(H.size());
  if (K == 2) return doubled_square(H[0]);
  if (K == 3) return construct_ils_k2(H[1], H[2], 2 * H[0] + H[2]);
  if (K == 4) return construct_ils_k3(H[1], H[2], H[3], 2 * H[0] + H[2] + H[3]);
  const int R = sum_of(Parts(H.begin() + 2, H.end()));
  if (4 * H[2] <= R + 1) return construct_small_third(H);
  if (H[2] == H[4]) return construct_triple_equal(H);
  if (H[2] == H[3]) return construct_pair_equal(H);
  return construct_strict_third(H);
}

std::pair<Grid, Parts> construct_general(const Parts& parts, int n) {
  precondition(!parts.empty(), "construct_general: at least one part required");
  for (int p : parts) precondition(p >= 1, "construct_general: parts must be positive");
  precondition(n <= 4096, "construct_general: order too large for explicit construction");
  Parts g = parts;
  std::sort(g.begin(), g.end(), std::greater<>());
  const int s = sum_of(g);
  const int h1 = n - s;
  precondition(h1 >= g[0],
               "construct_general: requires n - sum(parts) >= max(parts); use decide instead");
  Parts H = {g[0]};
  H.insert(H.end(), g.begin(), g.end());
  H.insert(H.end(), h1 - g[0], 1);
  Grid grid = construct_main(H);
  Parts realized = drop_first(H);
  require(verify_ils(grid, realized).ok, "construct_general verification");
  return {std::move(grid), std::move(realized)};
}

}  // namespace ils
