#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "biketrack/ode.hpp"

using namespace biketrack;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("grid layout") {
    GridSpec g(0.0, 1.0, 0.1);
    CHECK(g.steps() == 10);
    CHECK(g.size() == 11);
    CHECK(g.time(0) == 0.0);
    CHECK(g.time(10) == 1.0);  // last point is t1 exactly
    CHECK(g.time(5) == doctest::Approx(0.5).epsilon(1e-15));

    // h not dividing the span: n = round(span / h), step adjusted, end on t1
    GridSpec odd(0.0, 1.0, 0.3);
    CHECK(odd.steps() == 3);
    CHECK(odd.time(3) == 1.0);

    // a step larger than the span still yields one step
    GridSpec coarse(0.0, 1.0, 10.0);
    CHECK(coarse.steps() == 1);
    CHECK(coarse.time(1) == 1.0);

    auto times = GridSpec(0.0, 10.0, 1e-3).times();
    CHECK(times.size() == 10001);
    for (std::size_t k = 1; k < times.size(); ++k) CHECK(times[k] > times[k - 1]);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(1.0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(2.0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("rk4 zero field keeps the state") {
    auto zero = [](double, std::span<const double>, std::span<double> d) { d[0] = 0.0; };
    const double s0[1] = {3.5};
    Trajectory t = rk4_integrate(zero, GridSpec(0.0, 1.0, 0.1), s0);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(t.value(k, 0) == 3.5);
}

TEST_CASE("rk4 exponential growth") {
    auto field = [](double, std::span<const double> s, std::span<double> d) { d[0] = s[0]; };
    const double s0[1] = {1.0};
    Trajectory t = rk4_integrate(field, GridSpec(0.0, 1.0, 1e-3), s0);
    CHECK(t.value(t.size() - 1, 0) == doctest::Approx(std::numbers::e).epsilon(1e-10));
}

TEST_CASE("rk4 harmonic oscillator closes after one period") {
    auto field = [](double, std::span<const double> s, std::span<double> d) {
        d[0] = s[1];
        d[1] = -s[0];
    };
    const double s0[2] = {1.0, 0.0};
    Trajectory t = rk4_integrate(field, GridSpec(0.0, 2.0 * pi, 1e-3), s0);
    CHECK(std::abs(t.value(t.size() - 1, 0) - 1.0) < 1e-9);
    CHECK(std::abs(t.value(t.size() - 1, 1)) < 1e-9);
}

TEST_CASE("rk4 is 4th order: halving h cuts the endpoint error ~16x") {
    auto field = [](double, std::span<const double> s, std::span<double> d) {
        d[0] = s[1];
        d[1] = -s[0];
    };
    const double s0[2] = {1.0, 0.0};
    auto endpoint_error = [&](double h) {
        Trajectory t = rk4_integrate(field, GridSpec(0.0, pi, h), s0);
        return std::hypot(t.value(t.size() - 1, 0) + 1.0, t.value(t.size() - 1, 1));
    };
    double e1 = endpoint_error(0.05);
    double e2 = endpoint_error(0.025);
    double factor = e1 / e2;
    CHECK(factor >= 12.0);
    CHECK(factor <= 20.0);
}

TEST_CASE("rk4 reports the offending time on non-finite values") {
    auto field = [](double t, std::span<const double>, std::span<double> d) {
        d[0] = t > 2.0 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    const double s0[1] = {0.0};
    try {
        rk4_integrate(field, GridSpec(0.0, 4.0, 0.5), s0);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(e.time() > 2.0);
        CHECK(e.time() < 3.0);
    }
}

TEST_CASE("unwrap_angle examples") {
    CHECK(unwrap_angle(0.0, 0.1) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(unwrap_angle(3.0, -3.0) == doctest::Approx(2.0 * pi - 3.0).epsilon(1e-15));
    CHECK(unwrap_angle(-7.0, 0.0) == doctest::Approx(-2.0 * pi).epsilon(1e-15));
}

TEST_CASE("unwrap_angle properties") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> prev_dist(-50.0, 50.0);
    std::uniform_real_distribution<double> principal_dist(std::nextafter(-pi, 0.0), pi);
    for (int i = 0; i < 10000; ++i) {
        double prev = prev_dist(rng);
        double principal = principal_dist(rng);
        double out = unwrap_angle(prev, principal);
        CHECK(std::abs(out - prev) <= pi);
        double turns = (out - principal) / (2.0 * pi);
        CHECK(std::abs(turns - std::round(turns)) < 1e-9);
    }
}
