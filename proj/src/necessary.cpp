#include "ils/necessary.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ils {
namespace {

std::vector<int> slacked(const Parts& parts, int n) {
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total > n) throw std::invalid_argument("parts exceed order in necessary scan");
  std::vector<int> h(parts.begin(), parts.end());
  h.push_back(n - total);
  return h;
}

void decode(long long code, int kp1, std::vector<int>& assign) {
  for (int pos = kp1 - 1; pos >= 0; --pos) {
    assign[pos] = static_cast<int>(code % 5);
    code /= 5;
  }
}

long long pow5(int e) {
  long long p = 1;
  while (e-- > 0) p *= 5;
  return p;
}

// lhs/rhs evaluation shared by both scans; returns true on violation.
bool violates(const std::vector<int>& h, const std::vector<int>& assign) {
  auto [lhs, rhs] = necessary_sides(h, assign);
  return lhs < rhs;
}

}  // namespace

std::pair<long long, long long> necessary_sides(const std::vector<int>& h,
                                                const std::vector<int>& assign) {
  const int kp1 = static_cast<int>(h.size());
  long long sA = 0, sB = 0, sC = 0, sD = 0, sqE = 0, sEbar = 0;
  for (int i = 0; i < kp1; ++i) {
    const long long hi = h[i];
    switch (assign[i]) {
      case 0:
        sEbar += hi;
        break;
      case 1:
        sA += hi;
        break;
      case 2:
        sB += hi;
        break;
      case 3:
        sC += hi;
        break;
      default:
        sD += hi;
        break;
    }
    if (assign[i] != 0 && i != kp1 - 1) sqE += hi * hi;
  }
  const long long lhs = (sA + sC) * (sA + sC) + (sB + sD) * (sB + sD) - sqE;
  const long long rhs = (sA + sD) * (sB + sC - sEbar);
  return {lhs, rhs};
}

Violation violation_from_digits(const std::vector<int>& h, const std::vector<int>& digits) {
  Violation v;
  v.digits = digits;
  for (size_t i = 0; i < h.size(); ++i) {
    switch (digits[i]) {
      case 1:
        v.A.push_back(static_cast<int>(i) + 1);
        break;
      case 2:
        v.B.push_back(static_cast<int>(i) + 1);
        break;
      case 3:
        v.C.push_back(static_cast<int>(i) + 1);
        break;
      case 4:
        v.D.push_back(static_cast<int>(i) + 1);
        break;
      default:
        break;
    }
  }
  auto [lhs, rhs] = necessary_sides(h, digits);
  v.lhs = lhs;
  v.rhs = rhs;
  return v;
}

std::optional<Violation> scan_necessary_serial(const Parts& parts, int n, bool pruned,
                                               int bound) {
  auto h = slacked(parts, n);
  const int kp1 = static_cast<int>(h.size());
  if (!pruned && kp1 > bound)
    throw std::invalid_argument("unpruned necessary scan over " + std::to_string(kp1) +
                                " parts exceeds the size bound");
  const long long total = pow5(kp1);
  const long long msd = pow5(kp1 - 1);
  std::vector<int> assign(kp1, 0);
  for (long long code = 0; code < total; ++code) {
    const int first = static_cast<int>(code / msd);
    if (pruned && (first == 2 || first == 4)) {
      code = (first + 1) * msd - 1;  // skip the whole pruned leading-digit range
      continue;
    }
    decode(code, kp1, assign);
    if (violates(h, assign)) return violation_from_digits(h, assign);
  }
  return std::nullopt;
}

std::optional<Violation> scan_necessary(const Parts& parts, int n, bool pruned, int bound) {
#ifndef _OPENMP
  return scan_necessary_serial(parts, n, pruned, bound);
#else
  auto h = slacked(parts, n);
  const int kp1 = static_cast<int>(h.size());
  if (!pruned && kp1 > bound)
    throw std::invalid_argument("unpruned necessary scan over " + std::to_string(kp1) +
                                " parts exceeds the size bound");
  const long long total = pow5(kp1);
  const long long msd = pow5(kp1 - 1);
  const long long chunk = 1LL << 22;
  long long best = total;
  for (long long start = 0; start < total && best == total; start += chunk) {
    const long long stop = std::min(total, start + chunk);
    long long found = total;
#pragma omp parallel
    {
      std::vector<int> assign(kp1, 0);
      long long mine = total;
#pragma omp for schedule(static) nowait
      for (long long code = start; code < stop; ++code) {
        const int first = static_cast<int>(code / msd);
        if (pruned && (first == 2 || first == 4)) continue;
        decode(code, kp1, assign);
        if (violates(h, assign) && code < mine) mine = code;
      }
#pragma omp critical
      found = std::min(found, mine);
    }
    if (found < total) best = found;
  }
  if (best == total) return std::nullopt;
  std::vector<int> assign(kp1, 0);
  decode(best, kp1, assign);
  return violation_from_digits(h, assign);
#endif
}

bool check_necessary(const Parts& parts, int n) { return !scan_necessary(parts, n).has_value(); }

}  // namespace ils
