#include "ils/decide.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ils/constructions.hpp"
#include "ils/oracle.hpp"
#include "ils/solver.hpp"

namespace ils {
namespace {

ExistenceVerdict exists_with(Grid grid) {
  ExistenceVerdict v;
  v.status = ExistenceVerdict::Status::Exists;
  v.witness = std::move(grid);
  return v;
}

ExistenceVerdict not_exists(std::optional<Violation> viol, std::string citation) {
  ExistenceVerdict v;
  v.status = ExistenceVerdict::Status::NotExists;
  v.violation = std::move(viol);
  if (!v.violation) v.citation = std::move(citation);
  return v;
}

ExistenceVerdict unknown(std::string citation) {
  ExistenceVerdict v;
  v.status = ExistenceVerdict::Status::Unknown;
  v.citation = std::move(citation);
  return v;
}

}  // namespace

ExistenceVerdict decide(const Parts& parts, int n, int oracle_bound, long long oracle_budget) {
  if (parts.empty()) throw std::invalid_argument("decide: at least one part required");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("decide: parts must be positive");
  if (n < 1) throw std::invalid_argument("decide: order must be positive");
  if (n > 4096) throw std::invalid_argument("decide: order too large (witness construction bounded)");
  Parts g = parts;
  std::sort(g.begin(), g.end(), std::greater<>());
  const int k = static_cast<int>(g.size());
  const int total = std::accumulate(g.begin(), g.end(), 0);
  if (total > n) return not_exists(std::nullopt, "parts exceed order");
  if (k == 1) {
    const int h = g[0];
    if (n == h || n >= 2 * h) return exists_with(construct_ils_uniform(h, 1, n));
    auto viol = scan_necessary(g, n);
    if (!viol) throw std::logic_error("decide: single-part nonexistence must produce a violation");
    return not_exists(std::move(viol), "");
  }
  if (k == 2) {
    if (n - g[0] - g[1] >= g[0]) return exists_with(construct_ils_k2(g[0], g[1], n));
    return not_exists(scan_necessary(g, n), "two subsquare condition");
  }
  if (k == 3) {
    if (k3_z_value(g[0], g[1], g[2], n).has_value())
      return exists_with(construct_ils_k3(g[0], g[1], g[2], n));
    return not_exists(scan_necessary(g, n), "three subsquare condition");
  }
  if (std::all_of(g.begin(), g.end(), [&](int x) { return x == g[0]; })) {
    // sum <= n already implies the uniform existence condition n >= k*h
    try {
      return exists_with(construct_ils_uniform(g[0], k, n));
    } catch (const Exhausted&) {
      return unknown("outline solver budget exhausted");
    }
  }
  if (n - total >= g[0]) return exists_with(construct_general(g, n).first);
  if (auto viol = scan_necessary(g, n)) return not_exists(std::move(viol), "");
  if (n <= oracle_bound) {
    OracleResult res = brute_force_ils(g, n, oracle_budget);
    switch (res.status) {
      case OracleResult::Status::Exists:
        return exists_with(std::move(*res.witness));
      case OracleResult::Status::NotExists:
        return not_exists(std::nullopt, "exhaustive search");
      case OracleResult::Status::Unknown:
        return unknown("search budget exhausted");
    }
  }
  return unknown("");
}

}  // namespace ils
