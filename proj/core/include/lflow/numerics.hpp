#pragma once

#include <cmath>
#include <span>

namespace lflow {

/// Neumaier-compensated summation.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Solves a tridiagonal system by the Thomas algorithm.
///
/// lower[i] multiplies x[i-1] in row i (lower[0] unused), upper[i] multiplies
/// x[i+1] (upper[n-1] unused). rhs is overwritten with the solution; scratch
/// must hold n values. Throws SingularSystem on a zero (or non-finite) pivot.
void solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<double> rhs,
                       std::span<double> scratch);

}  // namespace lflow
