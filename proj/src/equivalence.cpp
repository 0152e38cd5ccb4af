#include "biketrack/equivalence.hpp"

#include <cmath>
#include <numbers>

namespace biketrack {

RotatingFrameCoeffs rotating_frame_coeffs(const Potential& p, double psi, double t) {
    double factor = 0.5 * (1.0 - p.eval(t));
    return {factor * std::sin(2.0 * psi), factor * std::cos(2.0 * psi)};
}

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return m;
}

Mat2 sub(const Mat2& a, const Mat2& b) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][j] - b[i][j];
    return m;
}

}  // namespace

double frame_matrix_audit(const Potential& p, const GridSpec& grid) {
    PhaseAccumulator phase = accumulate_phase(p, grid);
    constexpr double audit_tol = 1e-10;
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid.time(k);
        const double pt = p.eval(t);
        const double psi = phase.psi[k];
        const double c = std::cos(psi);
        const double s = std::sin(psi);

        Mat2 rot{{{c, -s}, {s, c}}};
        Mat2 rot_inv{{{c, s}, {-s, c}}};
        Mat2 coeff{{{0.0, 1.0}, {-pt, 0.0}}};
        const double psidot = -(1.0 + pt) / 2.0;
        Mat2 rot_dot{{{-psidot * s, -psidot * c}, {psidot * c, -psidot * s}}};

        Mat2 m = sub(mul(rot_inv, mul(coeff, rot)), mul(rot_inv, rot_dot));

        if (std::abs(m[0][1] - m[1][0]) > audit_tol)
            throw std::runtime_error("frame_matrix_audit: rotating-frame matrix not symmetric");
        if (std::abs(m[0][0] + m[1][1]) > audit_tol)
            throw std::runtime_error("frame_matrix_audit: rotating-frame matrix has trace != 0");

        RotatingFrameCoeffs rs = rotating_frame_coeffs(p, psi, t);
        Mat2 target{{{rs.r, rs.s}, {rs.s, -rs.r}}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                worst = std::max(worst, std::abs(m[i][j] - target[i][j]));
    }
    return worst;
}

Vec2 init_from_theta(double theta0) {
    return {std::cos(theta0 / 2.0), std::sin(theta0 / 2.0)};
}

double theta_from_solution(const HillTrajectory& traj, const PhaseAccumulator& phase,
                           std::size_t index) {
    if (!(traj.grid == phase.grid))
        throw std::invalid_argument("theta_from_solution: grids differ");
    return 2.0 * traj.alpha[index] + phase.phi[index];
}

EquivalenceReport verify_equivalence(const Potential& p, double theta0, const GridSpec& grid) {
    FrontPath path = build_front_path(p, grid);
    BikeTrajectory bike = solve_bike(path, theta0);
    HillTrajectory hill = solve_hill(p, init_from_theta(theta0), grid);

    PhaseAccumulator phase{grid, path.phi, {}};
    phase.psi.resize(path.phi.size());
    for (std::size_t k = 0; k < path.phi.size(); ++k) phase.psi[k] = -0.5 * path.phi[k];

    EquivalenceReport report{grid, {}, 0.0, true};
    report.residual.resize(grid.size());
    // theta0 and 2*alpha(0) agree only mod 4*pi; subtracting the index-0
    // mismatch compares the continuous branches with exact matching at t0.
    const double offset = bike.theta[0] - theta_from_solution(hill, phase, 0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        report.residual[k] = bike.theta[k] - theta_from_solution(hill, phase, k) - offset;
        report.max_residual = std::max(report.max_residual, std::abs(report.residual[k]));
    }
    return report;
}

double double_angle_residual(const Potential& p, const GridSpec& grid, Vec2 w0) {
    if (w0.x == 0.0 && w0.y == 0.0)
        throw std::invalid_argument("double_angle_residual: zero initial state");

    // state = (phi, u, v) with psi = -phi/2
    auto w_field = [&p](double t, std::span<const double> s, std::span<double> d) {
        RotatingFrameCoeffs rs = rotating_frame_coeffs(p, -0.5 * s[0], t);
        d[0] = 1.0 + p.eval(t);
        d[1] = rs.r * s[1] + rs.s * s[2];
        d[2] = rs.s * s[1] - rs.r * s[2];
    };
    const double w_init[3] = {0.0, w0.x, w0.y};
    Trajectory w_traj = rk4_integrate(w_field, grid, w_init);

    // bike driven by (Xdot, Ydot) = (2r, 2s)
    auto bike_field = [&p](double t, std::span<const double> s, std::span<double> d) {
        RotatingFrameCoeffs rs = rotating_frame_coeffs(p, -0.5 * s[0], t);
        d[0] = 1.0 + p.eval(t);
        d[1] = 2.0 * rs.s * std::cos(s[1]) - 2.0 * rs.r * std::sin(s[1]);
    };
    const double theta0 = 2.0 * std::atan2(w0.y, w0.x);
    const double bike_init[2] = {0.0, theta0};
    Trajectory bike_traj = rk4_integrate(bike_field, grid, bike_init);

    double residual = 0.0;
    double w_angle = std::atan2(w0.y, w0.x);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double principal = std::atan2(w_traj.value(k, 2), w_traj.value(k, 1));
        if (k > 0) {
            double next = unwrap_angle(w_angle, principal);
            if (std::abs(next - w_angle) > std::numbers::pi / 2.0)
                throw IntegrationError(
                    "double_angle_residual: angle moved more than pi/2 in one step",
                    grid.time(k));
            w_angle = next;
        }
        residual = std::max(residual, std::abs(2.0 * w_angle - bike_traj.value(k, 1)));
    }
    return residual;
}

}  // namespace biketrack
