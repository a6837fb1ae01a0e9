#pragma once

#include <span>
#include <vector>

#include "lflow/problem.hpp"

namespace lflow {

/// A = (v(theta_r) - v(theta_l)) / (2d). For MCF this is
/// (artanh(theta_r) - artanh(theta_l)) / (2d).
double translation_speed(double theta_left, double theta_right, double d,
                         const FluxFunction& flux);

enum class TranslatorKind { Line, GrimReaper, Parabola, Generic };

const char* to_string(TranslatorKind kind);

/// The translating solution u(x, t) = phi(x) + A t.
///
/// Steady translation means (v(phi'))' = A, so v(phi'(x)) = A x + c with
/// c = (v(theta_l) + v(theta_r)) / 2 fixed by the two slope conditions.
/// Samples are normalized to zero trapezoid-weighted mean, which fixes the
/// free vertical shift.
struct TranslatorProfile {
  double speed = 0.0;
  double c = 0.0;
  TranslatorKind kind = TranslatorKind::Line;
  std::vector<double> samples;
};

/// Closed form where one exists (line, Grim Reaper (1/A) ln cosh(Ax + c),
/// parabola A x^2/2 + c x), quadrature of v^{-1}(A x + c) otherwise.
TranslatorProfile build_translator(const ProblemSpec& spec);

/// Always integrates phi' = v^{-1}(A x + c) numerically; kind is Generic
/// unless A = 0. Used for custom fluxes and to cross-check the closed forms.
TranslatorProfile build_translator_by_quadrature(const ProblemSpec& spec);

/// Closed-form phi(x) (before mean normalization) for Line, GrimReaper and
/// Parabola kinds. Throws std::invalid_argument for Generic.
double translator_closed_form(const TranslatorProfile& profile, const FluxFunction& flux,
                              double x);

/// min over vertical shifts b of max_i |u_i - (phi_i + b)|, i.e. half the
/// range of u - phi. Throws GridMismatch if the sizes differ.
double profile_distance(std::span<const double> u, const TranslatorProfile& profile);
double profile_distance(const State& state, const TranslatorProfile& profile);

/// Subtracts the trapezoid-weighted mean in place.
void normalize_mean_zero(std::span<double> values, const Grid& grid);

}  // namespace lflow
