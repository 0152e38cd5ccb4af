#pragma once

#include <array>
#include <vector>

#include "biketrack/ode.hpp"
#include "biketrack/potential.hpp"
#include "biketrack/vec2.hpp"

namespace biketrack {

/// Solution samples of x'' + p(t) x = 0 as the first-order system
/// (x, y)' = (y, -p x), plus the continuous phase-plane angle
/// alpha(t) = arg(x + i xdot), unwrapped so that alpha mod 2*pi recovers
/// atan2(xdot, x) at every sample.
struct HillTrajectory {
    GridSpec grid;
    std::vector<double> x;
    std::vector<double> xdot;
    std::vector<double> alpha;
};

/// Integrates the Hill system from z0 = (x(t0), xdot(t0)) != (0, 0).
///
/// The angle is tracked by unwrapping atan2 samples; if the principal-value
/// jump between consecutive samples exceeds pi/2 the step is too coarse to
/// track the branch and an IntegrationError is thrown.
HillTrajectory solve_hill(const Potential& p, Vec2 z0, const GridSpec& grid);

/// x1 xdot2 - x2 xdot1 at a sample; constant in t because the coefficient
/// matrix is traceless.
double wronskian(const HillTrajectory& a, const HillTrajectory& b, std::size_t index);

/// Continuous Pruefer angle alpha at a sample.
double pruefer_angle(const HillTrajectory& traj, std::size_t index);

enum class Stability { elliptic, hyperbolic, parabolic };

const char* to_string(Stability s);

/// Principal fundamental matrix over one period, columns = solutions from
/// (1,0) and (0,1). |trace| < 2 is elliptic, |trace| > 2 hyperbolic, and
/// ||trace| - 2| <= 1e-9 parabolic (numerical traces are never exactly 2).
struct MonodromyResult {
    std::array<std::array<double, 2>, 2> matrix;  // matrix[row][col]
    double det;
    double trace;
    Stability stability;
};

/// Requires p.period(); integrates over [0, T] with requested step h.
MonodromyResult monodromy(const Potential& p, double h);

}  // namespace biketrack
