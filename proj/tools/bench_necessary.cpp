// Benchmark: serial vs OpenMP necessary-condition scan on violation-free
// instances (worst case: the whole 5^(k+1) assignment space is enumerated).
// Usage: bench_necessary [max_k] [part_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ils/necessary.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int max_k = argc > 1 ? std::atoi(argv[1]) : 11;
  const int h = argc > 2 ? std::atoi(argv[2]) : 2;
  std::printf("%4s %6s %12s %14s %10s %7s\n", "k", "n", "serial_ms", "parallel_ms", "speedup",
              "agree");
  for (int k = 6; k <= max_k; ++k) {
    ils::Parts parts(static_cast<size_t>(k), h);
    const int n = (h + 1) * k + 1;  // large slack: no violation, full enumeration

    auto t0 = Clock::now();
    auto serial = ils::scan_necessary_serial(parts, n);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    auto parallel = ils::scan_necessary(parts, n);
    double parallel_ms = ms_since(t0);

    const bool agree = serial.has_value() == parallel.has_value() &&
                       (!serial || serial->digits == parallel->digits);
    std::printf("%4d %6d %12.2f %14.2f %9.2fx %7s\n", k, n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "yes" : "NO");
    if (!agree) return 1;
  }
  return 0;
}
