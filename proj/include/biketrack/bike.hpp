#pragma once

#include <vector>

#include "biketrack/front_path.hpp"

namespace biketrack {

/// Steering angle theta(t) of the unit segment RF and the reconstructed rear
/// point R = F - (cos theta, sin theta); |F - R| = 1 by construction.
struct BikeTrajectory {
    GridSpec grid;
    std::vector<double> theta;  // continuous radians
    std::vector<Vec2> rear;
};

/// Integrates theta' = Ydot cos(theta) - Xdot sin(theta) along the path.
///
/// The front velocity is re-evaluated analytically from (p, phi) at every
/// RK4 substage (phi rides along as a state component), never interpolated
/// from the stored samples.
BikeTrajectory solve_bike(const FrontPath& path, double theta0);

/// Max over interior samples of |cross(Rdot, e^{i theta})| with Rdot from
/// centered differences; zero for an exact no-slip motion.
double no_slip_residual(const BikeTrajectory& traj, const FrontPath& path);

/// The rear-wheel polyline.
std::vector<Vec2> rear_track(const BikeTrajectory& traj);

}  // namespace biketrack
