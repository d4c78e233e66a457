// Acceptance suite for the incomplete-latin-square engine. Nine independent
// criteria, each printing a single PASS/FAIL line; the process exits nonzero
// if any criterion fails. Where a criterion checks a characterization, the
// expected condition is re-derived here rather than calling the library's
// own predicate.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ils/constructions.hpp"
#include "ils/core.hpp"
#include "ils/decide.hpp"
#include "ils/freq.hpp"
#include "ils/necessary.hpp"
#include "ils/oracle.hpp"
#include "ils/outline.hpp"

#include "fixtures.hpp"

using namespace ils;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string parts_str(const Parts& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

// Successful instances (parts, order) collected from criteria 3-5 and
// re-checked against the necessary condition in criterion 7.
std::vector<std::pair<Parts, int>> g_successes;

// ---------------------------------------------------------------------------
// Criterion 1: reducing the order-8 fixture square modulo (3,2,1,1,1) on all
// three axes reproduces the documented 25-cell outline exactly. < 1 s.
bool crit1(std::string& detail) {
  auto t0 = Clock::now();
  Outline o = reduce_modulo(fixtures::fixture_square_8, fixtures::fixture_partition_8,
                            fixtures::fixture_partition_8, fixtures::fixture_partition_8);
  if (!fixtures::matches_fixture_reduction(o)) {
    detail = "reduction of the fixture square does not match the documented outline";
    return false;
  }
  long long ms = ms_since(t0);
  if (ms >= 1000) {
    detail = "took " + std::to_string(ms) + " ms (limit 1000)";
    return false;
  }
  detail = "fixture reduction matches cell by cell";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: for every order n <= 7 and every nonincreasing part list with
// sum <= n, the brute-force search and decide() agree wherever decide is not
// Unknown, decide is never Unknown when an exact characterization applies
// (k <= 3 or all parts equal), and every Exists verdict carries a verified
// witness. Parallel over instances. < 10 min.
void enumerate_part_lists(int n, int max_part, Parts& cur, std::vector<Parts>& out) {
  for (int h = std::min(max_part, n); h >= 1; --h) {
    cur.push_back(h);
    out.push_back(cur);
    enumerate_part_lists(n - h, h, cur, out);
    cur.pop_back();
  }
}

bool crit2(std::string& detail) {
  auto t0 = Clock::now();
  std::vector<std::pair<Parts, int>> instances;
  for (int n = 1; n <= 7; ++n) {
    std::vector<Parts> lists;
    Parts cur;
    enumerate_part_lists(n, n, cur, lists);
    for (auto& p : lists) instances.emplace_back(std::move(p), n);
  }

  std::vector<std::string> failures;
#pragma omp parallel for schedule(dynamic)
  for (size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [parts, n] = instances[idx];
    std::string local;
    try {
      OracleResult ora = brute_force_ils(parts, n, 1'000'000'000);
      ExistenceVerdict ver = decide(parts, n, 7, 1'000'000'000);
      const bool uniform =
          std::all_of(parts.begin(), parts.end(), [&](int h) { return h == parts[0]; });
      if (ver.status == ExistenceVerdict::Status::Unknown) {
        if (parts.size() <= 3 || uniform)
          local = "decide Unknown on characterized instance " + parts_str(parts) + " n=" +
                  std::to_string(n);
      } else if (ora.status == OracleResult::Status::Unknown) {
        local = "oracle exhausted budget on " + parts_str(parts) + " n=" + std::to_string(n);
      } else {
        const bool ora_ex = ora.status == OracleResult::Status::Exists;
        const bool dec_ex = ver.status == ExistenceVerdict::Status::Exists;
        if (ora_ex != dec_ex)
          local = "disagreement on " + parts_str(parts) + " n=" + std::to_string(n) +
                  ": oracle says " + (ora_ex ? "exists" : "not_exists");
        else if (dec_ex && (!ver.witness || !verify_ils(*ver.witness, parts).ok))
          local = "Exists verdict without verified witness on " + parts_str(parts) + " n=" +
                  std::to_string(n);
      }
    } catch (const std::exception& e) {
      local = "exception on " + parts_str(parts) + " n=" + std::to_string(n) + ": " + e.what();
    }
    if (!local.empty()) {
#pragma omp critical
      failures.push_back(local);
    }
  }

  long long ms = ms_since(t0);
  if (!failures.empty()) {
    detail = failures.front() + " (" + std::to_string(failures.size()) + " failure(s))";
    return false;
  }
  if (ms >= 600'000) {
    detail = "took " + std::to_string(ms) + " ms (limit 600000)";
    return false;
  }
  detail = std::to_string(instances.size()) + " instances agree with the exhaustive search";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 3: the two-subsquare constructor succeeds exactly when
// n - h1 - h2 >= h1 (h1 >= h2), over h1 <= 12, n <= 12; successes verify.
bool crit3(std::string& detail) {
  int built = 0;
  for (int h1 = 1; h1 <= 12; ++h1)
    for (int h2 = 1; h2 <= h1; ++h2)
      for (int n = 1; n <= 12; ++n) {
        const bool expected = n - h1 - h2 >= h1;
        bool got;
        Grid grid;
        try {
          grid = construct_ils_k2(h1, h2, n);
          got = true;
        } catch (const Infeasible&) {
          got = false;
        }
        std::string inst =
            "(h1,h2,n)=(" + std::to_string(h1) + "," + std::to_string(h2) + "," +
            std::to_string(n) + ")";
        if (got != expected) {
          detail = inst + (got ? " succeeded but the characterization says infeasible"
                               : " failed but the characterization says it exists");
          return false;
        }
        if (got) {
          if (!verify_ils(grid, {h1, h2}).ok) {
            detail = inst + " produced a witness that fails verification";
            return false;
          }
          g_successes.push_back({{h1, h2}, n});
          ++built;
        }
      }
  detail = "success set matches the characterization exactly; " + std::to_string(built) +
           " witnesses verified";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: the three-subsquare constructor succeeds exactly on the
// three-branch condition set (re-derived below), over h1 >= h2 >= h3 >= 1 and
// n <= 14; successes verify; failures with n <= 7 are confirmed nonexistent
// by the brute-force search.
bool k3_expected(int h1, int h2, int h3, int n) {
  const long long H1 = h1, H2 = h2, H3 = h3, H4 = n - h1 - h2 - h3;
  if (H4 < 0) return false;          // requested subsquares exceed the order
  if (H4 >= H1) return true;         // slack at least the largest part
  if (H4 >= H3) return H4 >= H1 - H3;
  return H1 * H4 >= H1 * H2 + H1 * H3 - 2 * H2 * H3 &&
         H4 * H4 + H4 * (2 * H1 - H2 - H3) - H1 * H2 - H1 * H3 + 2 * H2 * H3 >= 0;
}

bool crit4(std::string& detail) {
  int built = 0, oracle_confirmed = 0;
  for (int h1 = 1; h1 <= 14; ++h1)
    for (int h2 = 1; h2 <= h1; ++h2)
      for (int h3 = 1; h3 <= h2; ++h3)
        for (int n = 1; n <= 14; ++n) {
          const bool expected = k3_expected(h1, h2, h3, n);
          bool got;
          Grid grid;
          try {
            grid = construct_ils_k3(h1, h2, h3, n);
            got = true;
          } catch (const Infeasible&) {
            got = false;
          }
          std::string inst = "(h1,h2,h3,n)=(" + std::to_string(h1) + "," + std::to_string(h2) +
                             "," + std::to_string(h3) + "," + std::to_string(n) + ")";
          if (got != expected) {
            detail = inst + (got ? " succeeded outside the three-branch condition set"
                                 : " failed inside the three-branch condition set");
            return false;
          }
          if (got) {
            if (!verify_ils(grid, {h1, h2, h3}).ok) {
              detail = inst + " produced a witness that fails verification";
              return false;
            }
            g_successes.push_back({{h1, h2, h3}, n});
            ++built;
          } else if (n <= 7) {
            OracleResult ora = brute_force_ils({h1, h2, h3}, n, 1'000'000'000);
            if (ora.status != OracleResult::Status::NotExists) {
              detail = inst + " rejected by the constructor but not refuted by the search";
              return false;
            }
            ++oracle_confirmed;
          }
        }
  detail = "success set matches the three-branch conditions; " + std::to_string(built) +
           " witnesses verified, " + std::to_string(oracle_confirmed) +
           " small failures refuted exhaustively";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: 200 randomized part lists (k <= 8, parts <= 10) with
// n = max + sum; the general constructor must return a verified square in
// under 5 s per instance.
bool crit5(std::string& detail) {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<int> karity(1, 8), hsize(1, 10);
  long long worst_ms = 0;
  for (int t = 0; t < 200; ++t) {
    Parts parts(static_cast<size_t>(karity(rng)));
    for (auto& h : parts) h = hsize(rng);
    const int sum = std::accumulate(parts.begin(), parts.end(), 0);
    const int n = sum + *std::max_element(parts.begin(), parts.end());
    auto t0 = Clock::now();
    std::string inst = "instance " + std::to_string(t) + " " + parts_str(parts) + " n=" +
                       std::to_string(n);
    try {
      auto [grid, realized] = construct_general(parts, n);
      long long ms = ms_since(t0);
      worst_ms = std::max(worst_ms, ms);
      if (ms >= 5000) {
        detail = inst + " took " + std::to_string(ms) + " ms (limit 5000)";
        return false;
      }
      Parts sorted = parts;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (!verify_ils(grid, realized).ok || !verify_ils(grid, sorted).ok) {
        detail = inst + " produced a witness that fails verification";
        return false;
      }
      g_successes.push_back({sorted, n});
    } catch (const std::exception& e) {
      detail = inst + " threw: " + std::string(e.what());
      return false;
    }
  }
  detail = "200 random instances built and verified (worst " + std::to_string(worst_ms) +
           " ms)";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: circulant partial squares over all even r <= 40 and the full
// parameter range 1 <= h2 <= r/4, 2*h2 <= h1 <= r+1-2*h2: the grid is latin,
// each line has exactly h1 empty cells arranged on whole diagonals, the
// mandatory empty differences are present, and every kept difference 2d
// carries the midpoint identity L(i, i+2d) = i+d in both orientations
// (1-based circulant arithmetic).
int circ_add1(int a, int d, int r) { return (a - 1 + d) % r + 1; }

bool crit6(std::string& detail) {
  int cases = 0;
  for (int r = 2; r <= 40; r += 2)
    for (int h2 = 1; 4 * h2 <= r; ++h2)
      for (int h1 = 2 * h2; h1 <= r + 1 - 2 * h2; ++h1) {
        std::string inst = "(r,h1,h2)=(" + std::to_string(r) + "," + std::to_string(h1) + "," +
                           std::to_string(h2) + ")";
        CirculantPartial cp;
        try {
          cp = circulant_partial(r, h1, h2);
        } catch (const std::exception& e) {
          detail = inst + " threw: " + std::string(e.what());
          return false;
        }
        if (static_cast<int>(cp.grid.size()) != r || !is_latin(cp.grid)) {
          detail = inst + " grid is not a partial latin square of order r";
          return false;
        }
        if (static_cast<int>(cp.empty_diffs.size()) != h1) {
          detail = inst + " reports " + std::to_string(cp.empty_diffs.size()) +
                   " empty differences, expected h1";
          return false;
        }
        std::vector<char> is_empty_diff(static_cast<size_t>(r), 0);
        for (int d : cp.empty_diffs) {
          if (d < 0 || d >= r) {
            detail = inst + " empty difference out of range";
            return false;
          }
          is_empty_diff[static_cast<size_t>(d)] = 1;
        }
        // cells are empty exactly on the reported diagonals => h1 per line
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            const bool empty = cp.grid[i][j] == kEmpty;
            const bool expected = is_empty_diff[static_cast<size_t>(((j - i) % r + r) % r)];
            if (empty != expected) {
              detail = inst + " cell (" + std::to_string(i) + "," + std::to_string(j) +
                       ") contradicts the empty-diagonal set";
              return false;
            }
          }
        // mandatory empty differences: 2l-1 and r+1-2l for l = 1..h2
        for (int l = 1; l <= h2; ++l) {
          const int d_lo = 2 * l - 1, d_hi = (r + 1 - 2 * l) % r;
          if (!is_empty_diff[static_cast<size_t>(d_lo)] ||
              !is_empty_diff[static_cast<size_t>(d_hi)]) {
            detail = inst + " mandatory empty difference missing (l=" + std::to_string(l) + ")";
            return false;
          }
        }
        // kept differences carry the midpoint identity in both orientations
        for (int d = 0; d < h2; ++d)
          for (int i = 1; i <= r; ++i) {
            const int j = circ_add1(i, 2 * d, r), want = circ_add1(i, d, r);
            if (cp.grid[i - 1][j - 1] != want || cp.grid[j - 1][i - 1] != want) {
              detail = inst + " midpoint identity fails at i=" + std::to_string(i) +
                       " d=" + std::to_string(d);
              return false;
            }
          }
        ++cases;
      }
  detail = std::to_string(cases) + " parameter triples pass every structural property";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: every successful construction recorded by criteria 3-5
// satisfies the necessary condition (no violating assignment exists).
bool crit7(std::string& detail) {
  if (g_successes.empty()) {
    detail = "no successes were recorded by criteria 3-5";
    return false;
  }
  for (const auto& [parts, n] : g_successes)
    if (!check_necessary(parts, n)) {
      detail = "violation reported for constructed instance " + parts_str(parts) + " n=" +
               std::to_string(n);
      return false;
    }
  detail = std::to_string(g_successes.size()) +
           " constructed instances are consistent with the necessary condition";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: each hardcoded five-block piece realizes its frequency target
// (row/column/symbol counts) exactly.
bool crit8(std::string& detail) {
  for (int s = 0; s <= 4; ++s) {
    std::vector<std::string> errs;
    try {
      errs = validate_outline_array(five_block_array(s), five_block_freq(s));
    } catch (const std::exception& e) {
      detail = "five-block piece s=" + std::to_string(s) + " threw: " + std::string(e.what());
      return false;
    }
    if (!errs.empty()) {
      detail = "five-block piece s=" + std::to_string(s) + ": " + errs.front();
      return false;
    }
  }
  detail = "all five hardcoded pieces validate against their frequency targets";
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 9: reduce -> lift -> reduce is a fixed point on 100 random
// (square, P, Q, R) inputs with n <= 12. < 30 s total.
Parts random_composition(int n, std::mt19937& rng) {
  Parts out;
  while (n > 0) {
    std::uniform_int_distribution<int> pick(1, n);
    int h = pick(rng);
    out.push_back(h);
    n -= h;
  }
  return out;
}

bool crit9(std::string& detail) {
  auto t0 = Clock::now();
  std::mt19937 rng(424242);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> order(1, 12);
    const int n = order(rng);
    std::vector<int> rp(static_cast<size_t>(n)), cp(rp), sp(rp);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::iota(sp.begin(), sp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::shuffle(sp.begin(), sp.end(), rng);
    Grid L = permute_square(cyclic_square(n), rp, cp, sp);
    Parts P = random_composition(n, rng), Q = random_composition(n, rng),
          R = random_composition(n, rng);
    std::string inst = "trial " + std::to_string(t) + " n=" + std::to_string(n) + " P=" +
                       parts_str(P) + " Q=" + parts_str(Q) + " R=" + parts_str(R);
    try {
      Outline o1 = reduce_modulo(L, P, Q, R);
      Grid lifted = lift(o1);
      Outline o2 = reduce_modulo(lifted, P, Q, R);
      if (!(o1 == o2)) {
        detail = inst + ": reduce(lift(o)) differs from o";
        return false;
      }
    } catch (const std::exception& e) {
      detail = inst + " threw: " + std::string(e.what());
      return false;
    }
  }
  long long ms = ms_since(t0);
  if (ms >= 30'000) {
    detail = "took " + std::to_string(ms) + " ms (limit 30000)";
    return false;
  }
  detail = "100 random roundtrips are fixed points";
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    bool (*run)(std::string&);
  };
  const Entry entries[] = {{1, crit1}, {2, crit2}, {3, crit3}, {4, crit4}, {5, crit5},
                           {6, crit6}, {7, crit7}, {8, crit8}, {9, crit9}};
  int failed = 0;
  for (const auto& e : entries) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = e.run(detail);
    } catch (const std::exception& ex) {
      detail = "unexpected exception: " + std::string(ex.what());
    }
    std::printf("criterion %d: %s  %s (%lld ms)\n", e.id, ok ? "PASS" : "FAIL", detail.c_str(),
                ms_since(t0));
    std::fflush(stdout);
    failed += !ok;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
