#pragma once

#include <span>
#include <vector>

#include "lflow/problem.hpp"

namespace lflow::detail {

/// Allocation-free kernels shared by the public step functions and run().
class Stepper {
 public:
  explicit Stepper(const ProblemSpec& spec);

  std::size_t nodes() const noexcept { return n_; }

  /// Fills N+1 face slopes; throws on spacelike or finiteness violations.
  void slopes(std::span<const double> u, std::span<double> out) const;
  /// Max |slope| over all faces without throwing; NaN if any value is non-finite.
  double max_abs_slope(std::span<const double> u) const;

  void rhs(std::span<const double> u, std::span<double> out);
  double stable_dt(std::span<const double> u, double safety);

  void explicit_step(std::span<const double> u, double dt, std::span<double> out);
  void semi_implicit_step(std::span<const double> u, double dt, std::span<double> out);

  /// Throws if out leaves the spacelike domain.
  void check_result(std::span<const double> u) const;

 private:
  FluxFunction flux_;
  double theta_l_;
  double theta_r_;
  double flux_l_;
  double flux_r_;
  std::size_t n_;
  double h_;
  double inv_h_;
  std::vector<double> inv_w_;
  std::vector<double> face_;   // N+1 slopes
  std::vector<double> work_;   // N
  std::vector<double> lower_, diag_, upper_, scratch_;
};

}  // namespace lflow::detail
