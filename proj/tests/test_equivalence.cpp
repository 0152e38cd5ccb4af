#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "biketrack/equivalence.hpp"

using namespace biketrack;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("rotating-frame coefficients at chosen points") {
    Potential one = Potential::constant(1.0);
    RotatingFrameCoeffs a = rotating_frame_coeffs(one, 0.4, 2.0);
    CHECK(a.r == 0.0);
    CHECK(a.s == 0.0);

    Potential zero = Potential::constant(0.0);
    RotatingFrameCoeffs b = rotating_frame_coeffs(zero, 0.0, 0.0);
    CHECK(b.r == 0.0);
    CHECK(b.s == 0.5);

    RotatingFrameCoeffs c = rotating_frame_coeffs(zero, -pi / 4.0, 0.0);
    CHECK(c.r == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(c.s) < 1e-12);
}

TEST_CASE("4 (r^2 + s^2) equals (1 - p)^2 on random probes") {
    Potential p = make_potential("cos:1.5,1,1");
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> tdist(0.0, 20.0);
    std::uniform_real_distribution<double> psidist(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        double t = tdist(rng);
        double psi = psidist(rng);
        RotatingFrameCoeffs rs = rotating_frame_coeffs(p, psi, t);
        double lhs = 4.0 * (rs.r * rs.r + rs.s * rs.s);
        double rhs = (1.0 - p.eval(t)) * (1.0 - p.eval(t));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + rhs));
    }
}

TEST_CASE("frame matrix audit stays below 1e-10 on the catalog") {
    CHECK(frame_matrix_audit(Potential::constant(1.0), GridSpec(0.0, 10.0, 1e-2)) < 1e-12);
    CHECK(frame_matrix_audit(Potential::constant(0.0), GridSpec(0.0, 2.0 * pi, 1e-2)) < 1e-10);
    for (const auto& desc : catalog_descriptors())
        CHECK(frame_matrix_audit(make_potential(desc), GridSpec(0.0, 20.0, 1e-2)) < 1e-10);
}

TEST_CASE("init_from_theta picks the principal half-angle unit vector") {
    Vec2 a = init_from_theta(0.0);
    CHECK(a.x == 1.0);
    CHECK(a.y == 0.0);

    Vec2 b = init_from_theta(pi);
    CHECK(std::abs(b.x) < 1e-12);
    CHECK(b.y == doctest::Approx(1.0).epsilon(1e-15));

    Vec2 c = init_from_theta(-pi / 2.0);
    CHECK(c.x == doctest::Approx(0.70710678118654752).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(-0.70710678118654752).epsilon(1e-12));

    // antipodal pairing between branches 2*pi apart
    Vec2 lo = init_from_theta(0.9);
    Vec2 hi = init_from_theta(0.9 + 2.0 * pi);
    CHECK(std::abs(hi.x + lo.x) < 1e-15);
    CHECK(std::abs(hi.y + lo.y) < 1e-15);
}

TEST_CASE("theta_from_solution on the two constant potentials") {
    GridSpec grid(0.0, 10.0, 1e-3);

    Potential one = Potential::constant(1.0);
    HillTrajectory h1 = solve_hill(one, {1.0, 0.0}, grid);
    PhaseAccumulator ph1 = accumulate_phase(one, grid);
    for (std::size_t k = 0; k < grid.size(); k += 100)
        CHECK(std::abs(theta_from_solution(h1, ph1, k)) < 1e-8);

    Potential zero = Potential::constant(0.0);
    HillTrajectory h0 = solve_hill(zero, {1.0, 0.0}, grid);
    PhaseAccumulator ph0 = accumulate_phase(zero, grid);
    for (std::size_t k = 0; k < grid.size(); k += 100)
        CHECK(std::abs(theta_from_solution(h0, ph0, k) - grid.time(k)) < 1e-8);
}

TEST_CASE("theta_from_solution rejects mismatched grids") {
    Potential p = Potential::constant(1.0);
    HillTrajectory h = solve_hill(p, {1.0, 0.0}, GridSpec(0.0, 1.0, 1e-2));
    PhaseAccumulator ph = accumulate_phase(p, GridSpec(0.0, 2.0, 1e-2));
    CHECK_THROWS_AS(theta_from_solution(h, ph, 0), std::invalid_argument);
}

TEST_CASE("verify_equivalence: stationary and circular base cases") {
    EquivalenceReport parked =
        verify_equivalence(Potential::constant(1.0), 0.7, GridSpec(0.0, 10.0, 1e-3));
    CHECK(parked.matched_at_zero);
    CHECK(parked.residual.front() == 0.0);
    CHECK(parked.max_residual <= 1e-10);

    EquivalenceReport circle =
        verify_equivalence(Potential::constant(0.0), 0.0, GridSpec(0.0, 2.0 * pi, 1e-3));
    CHECK(circle.max_residual <= 1e-7);
}

TEST_CASE("verify_equivalence across the catalog and 8 starting angles") {
    GridSpec grid(0.0, 20.0, 1e-3);
    for (const auto& desc : catalog_descriptors()) {
        Potential p = make_potential(desc);
        for (int j = 0; j < 8; ++j) {
            EquivalenceReport report = verify_equivalence(p, j * pi / 4.0, grid);
            CHECK(report.max_residual <= 1e-5);
        }
    }
}

TEST_CASE("branches differing by 2*pi verify independently") {
    GridSpec grid(0.0, 20.0, 1e-3);
    Potential p = make_potential("cos:0.5,0.3,1");
    CHECK(verify_equivalence(p, 0.9, grid).max_residual <= 1e-5);
    CHECK(verify_equivalence(p, 0.9 + 2.0 * pi, grid).max_residual <= 1e-5);
}

TEST_CASE("double-angle residual: degenerate, circular and cosine cases") {
    CHECK(double_angle_residual(Potential::constant(1.0), GridSpec(0.0, 10.0, 1e-3),
                                {1.0, 0.0}) <= 1e-12);
    CHECK(double_angle_residual(Potential::constant(0.0), GridSpec(0.0, 2.0 * pi, 1e-3),
                                {1.0, 0.0}) <= 1e-7);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(double_angle_residual(make_potential("cos:0.5,0.3,1"), GridSpec(0.0, 20.0, 1e-3),
                                {inv_sqrt2, inv_sqrt2}) <= 1e-5);
    CHECK_THROWS_AS(double_angle_residual(Potential::constant(1.0), GridSpec(0.0, 1.0, 1e-2),
                                          {0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("rotation consistency: arg z = arg w + psi when z0 = w0") {
    // psi(0) = 0, so starting both systems from the same vector keeps
    // z = R(psi) w for all time.
    Potential p = make_potential("sech2:2,1,5");
    GridSpec grid(0.0, 10.0, 1e-3);
    Vec2 start{0.6, 0.8};

    HillTrajectory hill = solve_hill(p, start, grid);
    PhaseAccumulator phase = accumulate_phase(p, grid);

    auto w_field = [&p](double t, std::span<const double> s, std::span<double> d) {
        RotatingFrameCoeffs rs = rotating_frame_coeffs(p, -0.5 * s[0], t);
        d[0] = 1.0 + p.eval(t);
        d[1] = rs.r * s[1] + rs.s * s[2];
        d[2] = rs.s * s[1] - rs.r * s[2];
    };
    const double w0[3] = {0.0, start.x, start.y};
    Trajectory w = rk4_integrate(w_field, grid, w0);

    double w_angle = std::atan2(start.y, start.x);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k > 0) w_angle = unwrap_angle(w_angle, std::atan2(w.value(k, 2), w.value(k, 1)));
        CHECK(std::abs(hill.alpha[k] - (w_angle + phase.psi[k])) < 1e-8);
    }
}

TEST_CASE("theorem-1 residual drops 4th-order until the rounding floor") {
    Potential p = make_potential("cos:1.5,1,1");
    double r1 = verify_equivalence(p, 0.785, GridSpec(0.0, 20.0, 0.05)).max_residual;
    double r2 = verify_equivalence(p, 0.785, GridSpec(0.0, 20.0, 0.025)).max_residual;
    CHECK(r1 / r2 >= 12.0);
    CHECK(r1 / r2 <= 20.0);
}
