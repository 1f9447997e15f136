#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "superfock/observables.hpp"
#include "superfock/superstate.hpp"
#include "superfock/types.hpp"

namespace superfock {

inline double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

/// Limit of the concurrence sequence: C_inf = phi^{-3/2}.
inline double golden_concurrence() { return std::pow(golden_ratio(), -1.5); }

/// Exact Fibonacci numbers with the extended entries F(-1) = 1, F(0) = 0
/// required by the n = 1 endpoint of the concurrence sequence. int64 holds
/// the sequence exactly through index 92.
class FibSequence {
 public:
  static constexpr int max_exact_index = 92;

  explicit FibSequence(int max_n) : max_n_(max_n) {
    if (max_n < 2) throw InvalidArgumentError("fibonacci: max_n must be >= 2");
    if (max_n > max_exact_index) {
      throw OverflowError("fibonacci: F(" + std::to_string(max_n) +
                          ") exceeds exact 64-bit range (max index " +
                          std::to_string(max_exact_index) + ")");
    }
    values_.resize(static_cast<std::size_t>(max_n) + 2);
    values_[0] = 1;  // F(-1)
    values_[1] = 0;  // F(0)
    for (int n = 1; n <= max_n; ++n) {
      std::int64_t next = 0;
      if (__builtin_add_overflow(values_[n], values_[n - 1], &next)) {
        throw OverflowError("fibonacci: int64 overflow at index " + std::to_string(n));
      }
      values_[static_cast<std::size_t>(n) + 1] = next;
    }
  }

  std::int64_t at(int n) const {
    if (n < -1 || n > max_n_) {
      throw InvalidIndexError("fibonacci: index " + std::to_string(n) + " not stored");
    }
    return values_[static_cast<std::size_t>(n) + 1];
  }

  int max_n() const { return max_n_; }

 private:
  int max_n_;
  std::vector<std::int64_t> values_;
};

inline FibSequence fibonacci(int max_n) { return FibSequence(max_n); }

/// One row of the Fibonacci uncertainty ladder:
///   C_n = sqrt(F(n-2)/F(n+1)),  DX DP = F(n)/F(n+1),  ratio_n = F(n+1)/F(n).
struct GoldenRecord {
  int n = 0;
  double concurrence = 0;
  double uncertainty = 0;
  double ratio = 0;
};

inline GoldenRecord concurrence_sequence(int n) {
  if (n < 1) throw InvalidArgumentError("concurrence_sequence: n must be >= 1");
  const FibSequence fib(std::min(n + 1, FibSequence::max_exact_index));
  if (n + 1 > fib.max_n()) {
    throw OverflowError("concurrence_sequence: F(n+1) not exactly representable");
  }
  GoldenRecord record;
  record.n = n;
  record.concurrence = std::sqrt(static_cast<double>(fib.at(n - 2)) /
                                 static_cast<double>(fib.at(n + 1)));
  record.uncertainty = static_cast<double>(fib.at(n)) / static_cast<double>(fib.at(n + 1));
  record.ratio = static_cast<double>(fib.at(n + 1)) / static_cast<double>(fib.at(n));
  return record;
}

struct GoldenLimitRow {
  int n = 0;
  double ratio_gap = 0;          // |F(n+1)/F(n) - phi|
  double concurrence_gap = 0;    // |C_n - phi^{-3/2}|
  double uncertainty_gap = 0;    // |F(n)/F(n+1) - 1/phi|
  double dispersion_ratio_sq = 0;  // (DX_{n+1}/DX_n)^2 = F(n+2)/F(n)
};

struct GoldenLimitsReport {
  std::vector<GoldenLimitRow> rows;
  double final_ratio_gap = 0;
  double final_concurrence_gap = 0;
  double final_uncertainty_gap = 0;
  double final_dispersion_ratio = 0;  // DX_{n+1}/DX_n at the last row
};

/// Convergence certificates of the Fibonacci ladder towards the Golden ratio
/// limits. Gaps decay geometrically (continued-fraction rate).
inline GoldenLimitsReport golden_limits(int n_max) {
  if (n_max < 10) throw InvalidArgumentError("golden_limits: n_max must be >= 10");
  if (n_max + 2 > FibSequence::max_exact_index) {
    throw OverflowError("golden_limits: needs F(n_max+2) exact; n_max <= " +
                        std::to_string(FibSequence::max_exact_index - 2));
  }
  const FibSequence fib(n_max + 2);
  const double phi = golden_ratio();
  const double c_inf = golden_concurrence();
  GoldenLimitsReport report;
  report.rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    GoldenLimitRow row;
    row.n = n;
    const auto rec = concurrence_sequence(n);
    row.ratio_gap = std::abs(rec.ratio - phi);
    row.concurrence_gap = std::abs(rec.concurrence - c_inf);
    row.uncertainty_gap = std::abs(rec.uncertainty - 1.0 / phi);
    row.dispersion_ratio_sq =
        static_cast<double>(fib.at(n + 2)) / static_cast<double>(fib.at(n));
    report.rows.push_back(row);
  }
  const auto& last = report.rows.back();
  report.final_ratio_gap = last.ratio_gap;
  report.final_concurrence_gap = last.concurrence_gap;
  report.final_uncertainty_gap = last.uncertainty_gap;
  report.final_dispersion_ratio = std::sqrt(last.dispersion_ratio_sq);
  return report;
}

/// The Golden super-coherent state: C = phi^{-3/2}, phi-angle pi/4, where the
/// closed-form uncertainty product equals 1/phi.
template <typename Scalar>
SuperState<Scalar> golden_state(std::complex<Scalar> alpha, BellLabel label,
                                Eigen::Index dim, Scalar tail_tol = Scalar(1e-12)) {
  if (!is_l_family(label)) {
    throw InvalidArgumentError("golden_state: defined for the L family");
  }
  return super_coherent(label, alpha, static_cast<Scalar>(golden_concurrence()),
                        static_cast<Scalar>(pi / 4), dim, tail_tol);
}

}  // namespace superfock
