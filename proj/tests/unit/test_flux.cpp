#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lflow/errors.hpp"
#include "lflow/flux.hpp"
#include "oracles.hpp"

using namespace lflow;

TEST_CASE("mcf value") {
  const auto f = FluxFunction::mcf();
  CHECK(f.value(0.0) == 0.0);
  // tanh(y) = 0.5 solved by bisection, independent of atanh.
  const double oracle = test::bisect([](double y) { return std::tanh(y); }, 0.5, 0.0, 5.0);
  CHECK(f.value(0.5) == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(f.value(0.5) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-15));
  CHECK(f.value(-0.5) == -f.value(0.5));
}

TEST_CASE("heat value and derivatives") {
  const auto f = FluxFunction::heat();
  CHECK(f.value(0.3) == 0.3);
  CHECK(f.derivative(0.9) == 1.0);
  CHECK(f.second_derivative(0.2) == 0.0);
  CHECK(f.inverse(0.4) == 0.4);
}

TEST_CASE("mcf derivatives") {
  const auto f = FluxFunction::mcf();
  CHECK(f.derivative(0.0) == 1.0);
  CHECK(f.derivative(0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(f.second_derivative(0.0) == 0.0);
  CHECK(f.second_derivative(0.5) == doctest::Approx(1.0 / (0.75 * 0.75)).epsilon(1e-15));
}

TEST_CASE("mcf inverse") {
  const auto f = FluxFunction::mcf();
  CHECK(f.inverse(0.0) == 0.0);
  const double oracle = test::bisect([](double s) { return std::atanh(s); }, 1.0, 0.0, 0.999);
  CHECK(f.inverse(1.0) == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(f.inverse(1.0) == doctest::Approx(0.7615941559557649).epsilon(1e-15));
}

TEST_CASE("domain and range violations") {
  const auto f = FluxFunction::mcf();
  CHECK_THROWS_AS(f.value(1.0), DomainViolation);
  CHECK_THROWS_AS(f.derivative(-1.0), DomainViolation);
  CHECK_THROWS_AS(f.value(std::nan("")), DomainViolation);
  CHECK_NOTHROW(f.value(1.0 - 2e-9));
  CHECK_THROWS_AS(f.inverse(50.0), RangeViolation);
  CHECK_THROWS_AS(FluxFunction::heat().inverse(1.0), RangeViolation);

  const auto loose = FluxFunction::mcf(0.1);
  CHECK_THROWS_AS(loose.value(0.95), DomainViolation);
  CHECK_THROWS_AS(FluxFunction::mcf(0.0), ValidationError);
}

TEST_CASE("validate_flux") {
  CHECK(validate_flux(FluxFunction::mcf(), 101).pass);
  CHECK(validate_flux(FluxFunction::heat(), 101).pass);
  const auto negated = FluxFunction::custom(
      "negated", [](double s) { return -s; }, [](double) { return -1.0; },
      [](double) { return 0.0; });
  const auto report = validate_flux(negated, 101);
  CHECK_FALSE(report.pass);
  CHECK(report.failures.size() == 101);
  CHECK_THROWS_AS(validate_flux(FluxFunction::mcf(), 2), ValidationError);
}

TEST_CASE("named custom fluxes") {
  const auto cubic = FluxFunction::named_custom("cubic", 1.0);
  CHECK(cubic.kind() == FluxKind::Custom);
  CHECK(cubic.value(0.5) == doctest::Approx(0.5 + 0.125 / 3.0));
  CHECK(cubic.derivative(0.5) == doctest::Approx(1.25));
  CHECK(cubic.inverse(cubic.value(0.3)) == doctest::Approx(0.3).epsilon(1e-11));
  CHECK_THROWS_AS(FluxFunction::named_custom("cubic", -2.0), ValidationError);
  CHECK_THROWS_AS(FluxFunction::named_custom("quartic", 1.0), ValidationError);
  CHECK_THROWS_AS(FluxFunction::custom("bad", nullptr, nullptr, nullptr), ValidationError);
}

namespace {

std::vector<FluxFunction> all_fluxes() {
  return {FluxFunction::mcf(), FluxFunction::heat(), FluxFunction::named_custom("cubic", 1.0)};
}

}  // namespace

TEST_CASE("property: inverse round-trip") {
  std::mt19937_64 rng(20261014);
  for (const auto& f : all_fluxes()) {
    std::uniform_real_distribution<double> dist(-f.max_slope(), f.max_slope());
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double s = dist(rng);
      worst = std::max(worst, std::abs(f.inverse(f.value(s)) - s));
    }
    INFO("flux " << f.name());
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("property: derivative matches central differences") {
  std::mt19937_64 rng(7);
  constexpr double step = 1e-5;
  for (const auto& f : all_fluxes()) {
    std::uniform_real_distribution<double> dist(-0.95, 0.95);
    for (int i = 0; i < 1000; ++i) {
      const double s = dist(rng);
      const double fd = (f.value(s + step) - f.value(s - step)) / (2.0 * step);
      const double fd2 = (f.derivative(s + step) - f.derivative(s - step)) / (2.0 * step);
      INFO("flux " << f.name() << " s = " << s);
      REQUIRE(std::abs(fd - f.derivative(s)) <= 1e-6 * std::abs(f.derivative(s)));
      REQUIRE(std::abs(fd2 - f.second_derivative(s)) <= 1e-5 * (1.0 + std::abs(f.second_derivative(s))));
    }
  }
}

TEST_CASE("property: strictly increasing on sorted samples") {
  std::mt19937_64 rng(11);
  for (const auto& f : all_fluxes()) {
    std::uniform_real_distribution<double> dist(-f.max_slope(), f.max_slope());
    std::vector<double> s(1000);
    for (double& x : s) x = dist(rng);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t i = 1; i < s.size(); ++i) {
      REQUIRE(f.value(s[i - 1]) < f.value(s[i]));
    }
  }
}
