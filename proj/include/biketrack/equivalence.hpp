#pragma once

#include <vector>

#include "biketrack/bike.hpp"
#include "biketrack/hill.hpp"
#include "biketrack/potential.hpp"

namespace biketrack {

/// Coefficients of the Hill system rewritten in the frame rotating by
/// psi = -phi/2: the coefficient matrix becomes ((r, s), (s, -r)) with
/// r = (1-p) sin(2 psi) / 2 and s = (1-p) cos(2 psi) / 2, so
/// 4 (r^2 + s^2) = (1-p)^2 identically.
struct RotatingFrameCoeffs {
    double r;
    double s;
};

RotatingFrameCoeffs rotating_frame_coeffs(const Potential& p, double psi, double t);

/// Builds M(t) = R^-1 P R - R^-1 Rdot directly (R the rotation by psi(t),
/// Rdot via the analytic psidot = -(1+p)/2) and returns the max entrywise
/// deviation from ((r, s), (s, -r)) over the grid. Throws if M fails the
/// symmetry or zero-trace checks at 1e-10.
double frame_matrix_audit(const Potential& p, const GridSpec& grid);

/// Unit Hill initial state (cos(theta0/2), sin(theta0/2)) whose doubled
/// phase-plane angle is congruent to theta0.
Vec2 init_from_theta(double theta0);

/// Bike angle predicted from the Hill side: 2 alpha + phi on continuous
/// branches.
double theta_from_solution(const HillTrajectory& traj, const PhaseAccumulator& phase,
                           std::size_t index);

/// Pointwise residual theta_bike - (2 alpha + phi), matched exactly at the
/// first sample (residual[0] == 0), on continuous branches.
struct EquivalenceReport {
    GridSpec grid;
    std::vector<double> residual;
    double max_residual;
    bool matched_at_zero;
};

/// Runs both constructions — the bike along the generated front path, and the
/// Hill system from init_from_theta(theta0) — and reports the angle residual.
EquivalenceReport verify_equivalence(const Potential& p, double theta0, const GridSpec& grid);

/// Integrates the rotating-frame system u' = ru + sv, v' = su - rv, doubles
/// its continuous argument, and returns the max deviation from the bike angle
/// driven by (Xdot, Ydot) = (2r, 2s) with theta0 = 2 atan2(v0, u0).
double double_angle_residual(const Potential& p, const GridSpec& grid, Vec2 w0);

}  // namespace biketrack
