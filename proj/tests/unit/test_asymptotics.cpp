#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lflow/asymptotics.hpp"
#include "lflow/errors.hpp"
#include "lflow/solver.hpp"
#include "oracles.hpp"

using namespace lflow;

namespace {

ProblemSpec spec_for(double tl, double tr, std::size_t n, const FluxFunction& flux,
                     double d = 1.0) {
  ProblemSpec s;
  s.d = d;
  s.theta_left = tl;
  s.theta_right = tr;
  s.nodes = n;
  s.flux = flux;
  return s;
}

double residual(const ProblemSpec& s, const TranslatorProfile& p, bool interior_only) {
  const auto r = rhs(State{0.0, p.samples}, s);
  double worst = 0.0;
  for (std::size_t i = interior_only ? 1 : 0; i < r.size() - (interior_only ? 1 : 0); ++i) {
    worst = std::max(worst, std::abs(r[i] - p.speed));
  }
  return worst;
}

}  // namespace

TEST_CASE("translation_speed") {
  const auto mcf = FluxFunction::mcf();
  CHECK(translation_speed(0.3, 0.3, 2.7, mcf) == 0.0);
  const double t1 = test::bisect([](double s) { return std::tanh(s); }, std::tanh(1.0), 0.0, 3.0);
  CHECK(translation_speed(0.0, std::tanh(1.0), 1.0, mcf) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(translation_speed(0.0, std::tanh(t1), 1.0, mcf) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(translation_speed(-0.5, 0.5, 2.0, FluxFunction::heat()) == 0.25);
  CHECK_THROWS_AS(translation_speed(0.0, 1.0, 1.0, mcf), DomainViolation);
  CHECK_THROWS_AS(translation_speed(0.0, 0.1, 0.0, mcf), ValidationError);
}

TEST_CASE("property: translation_speed is antisymmetric and vanishes only for equal slopes") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> theta(-0.99, 0.99);
  std::uniform_real_distribution<double> half(0.1, 5.0);
  for (const auto& f : {FluxFunction::mcf(), FluxFunction::heat(), FluxFunction::named_custom("cubic", 1.0)}) {
    for (int i = 0; i < 500; ++i) {
      const double a = theta(rng), b = theta(rng), d = half(rng);
      REQUIRE(translation_speed(b, a, d, f) == -translation_speed(a, b, d, f));
      REQUIRE((translation_speed(a, b, d, f) == 0.0) == (a == b));
    }
  }
}

TEST_CASE("build_translator kinds and shapes") {
  SUBCASE("symmetric MCF data gives an even Grim Reaper with c = 0") {
    const auto s = spec_for(-0.4, 0.4, 101, FluxFunction::mcf());
    const auto p = build_translator(s);
    CHECK(p.kind == TranslatorKind::GrimReaper);
    CHECK(p.c == 0.0);
    CHECK(p.speed == doctest::Approx(std::atanh(0.4)));
    for (std::size_t i = 0; i < 101; ++i) CHECK(p.samples[i] == doctest::Approx(p.samples[100 - i]).epsilon(1e-13));
    // phi'(0) = 0: the central difference at the middle node vanishes.
    CHECK(std::abs(p.samples[51] - p.samples[49]) <= 1e-15);
  }
  SUBCASE("heat gives the parabola 0.25 x^2 minus its mean") {
    const auto s = spec_for(-0.5, 0.5, 41, FluxFunction::heat());
    const auto p = build_translator(s);
    CHECK(p.kind == TranslatorKind::Parabola);
    CHECK(p.speed == 0.5);
    const Grid g = s.grid();
    // Trapezoid mean of x^2/4 on the grid, computed directly.
    double mean = 0.0;
    for (std::size_t i = 0; i < 41; ++i) mean += g.weight(i) * 0.25 * g.x(i) * g.x(i);
    mean /= 2.0;
    for (std::size_t i = 0; i < 41; ++i) {
      CHECK(p.samples[i] == doctest::Approx(0.25 * g.x(i) * g.x(i) - mean).epsilon(1e-13));
    }
    CHECK(residual(s, p, false) <= 1e-12);
  }
  SUBCASE("equal slopes give a line of that slope for every flux") {
    for (const auto& f : {FluxFunction::mcf(), FluxFunction::heat(), FluxFunction::named_custom("cubic", 0.5)}) {
      const auto s = spec_for(0.3, 0.3, 21, f);
      const auto p = build_translator(s);
      CHECK(p.kind == TranslatorKind::Line);
      CHECK(p.speed == 0.0);
      const double h = s.grid().spacing();
      for (std::size_t i = 1; i < 21; ++i) CHECK((p.samples[i] - p.samples[i - 1]) / h == doctest::Approx(0.3).epsilon(1e-10));
    }
  }
  SUBCASE("custom fluxes use quadrature") {
    const auto s = spec_for(-0.2, 0.5, 51, FluxFunction::named_custom("cubic", 1.0));
    const auto p = build_translator(s);
    CHECK(p.kind == TranslatorKind::Generic);
    CHECK_THROWS_AS(translator_closed_form(p, s.flux, 0.0), std::invalid_argument);
    // Endpoint slopes reproduce the boundary data.
    CHECK(s.flux.inverse(-p.speed + p.c) == doctest::Approx(-0.2).epsilon(1e-11));
    CHECK(s.flux.inverse(p.speed + p.c) == doctest::Approx(0.5).epsilon(1e-11));
  }
}

TEST_CASE("quadrature and closed-form Grim Reaper agree at N = 401") {
  for (auto [tl, tr] : {std::pair{-0.4, 0.4}, std::pair{-0.7, 0.2}, std::pair{0.1, 0.9}}) {
    const auto s = spec_for(tl, tr, 401, FluxFunction::mcf(), 1.3);
    const auto closed = build_translator(s);
    const auto quad = build_translator_by_quadrature(s);
    double diff = 0.0;
    for (std::size_t i = 0; i < 401; ++i) diff = std::max(diff, std::abs(closed.samples[i] - quad.samples[i]));
    CHECK(diff <= 1e-8);
  }
}

TEST_CASE("translator residual: second order inside, first order at the half cells") {
  for (const auto& f : {FluxFunction::mcf(), FluxFunction::named_custom("cubic", 1.0)}) {
    std::vector<double> inner, full;
    for (std::size_t n : {101u, 201u, 401u}) {
      const auto s = spec_for(-0.4, 0.3, n, f);
      const auto p = build_translator(s);
      inner.push_back(residual(s, p, true));
      full.push_back(residual(s, p, false));
    }
    for (std::size_t k = 1; k < 3; ++k) {
      INFO("flux " << f.name());
      CHECK(std::log2(inner[k - 1] / inner[k]) >= 1.9);
      CHECK(std::log2(full[k - 1] / full[k]) == doctest::Approx(1.0).epsilon(0.05));
    }
  }
}

TEST_CASE("profile_distance") {
  const auto s = spec_for(-0.4, 0.4, 101, FluxFunction::mcf());
  const auto p = build_translator(s);
  std::vector<double> shifted = p.samples;
  for (double& v : shifted) v += 7.25;
  CHECK(profile_distance(shifted, p) <= 1e-14);

  const Grid g = s.grid();
  std::vector<double> tilted = p.samples;
  for (std::size_t i = 0; i < tilted.size(); ++i) tilted[i] += 1e-3 * g.x(i);
  CHECK(profile_distance(tilted, p) == doctest::Approx(1e-3).epsilon(1e-9));

  CHECK_THROWS_AS(profile_distance(std::vector<double>(100, 0.0), p), GridMismatch);
}

TEST_CASE("property: profile_distance ignores vertical shifts") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  const auto s = spec_for(-0.1, 0.6, 61, FluxFunction::mcf());
  const auto p = build_translator(s);
  for (int i = 0; i < 200; ++i) {
    const auto u = test::random_spacelike(rng, 61, s.grid().spacing(), 0.9);
    const double b = shift(rng);
    std::vector<double> moved = u;
    for (double& v : moved) v += b;
    REQUIRE(std::abs(profile_distance(moved, p) - profile_distance(u, p)) <= 1e-13 * (1.0 + std::abs(b)));
  }
}
