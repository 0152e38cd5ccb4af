#include "biketrack/bike.hpp"

#include <cmath>

namespace biketrack {

BikeTrajectory solve_bike(const FrontPath& path, double theta0) {
    const Potential& p = path.potential;
    // state = (phi, theta); phi reproduces the front path's phase exactly
    auto field = [&p](double t, std::span<const double> s, std::span<double> d) {
        double pt = p.eval(t);
        double xdot = (pt - 1.0) * std::sin(s[0]);
        double ydot = (1.0 - pt) * std::cos(s[0]);
        d[0] = 1.0 + pt;
        d[1] = ydot * std::cos(s[1]) - xdot * std::sin(s[1]);
    };
    const double init[2] = {0.0, theta0};
    Trajectory traj = rk4_integrate(field, path.grid, init);

    BikeTrajectory bike{path.grid, {}, {}};
    bike.theta.resize(traj.size());
    bike.rear.resize(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        bike.theta[k] = traj.value(k, 1);
        bike.rear[k] = {path.x[k] - std::cos(bike.theta[k]),
                        path.y[k] - std::sin(bike.theta[k])};
    }
    return bike;
}

double no_slip_residual(const BikeTrajectory& traj, const FrontPath& path) {
    if (!(traj.grid == path.grid))
        throw std::invalid_argument("no_slip_residual: grids differ");
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < traj.rear.size(); ++k) {
        double dt = traj.grid.time(k + 1) - traj.grid.time(k - 1);
        Vec2 rdot = (1.0 / dt) * (traj.rear[k + 1] - traj.rear[k - 1]);
        Vec2 seg{std::cos(traj.theta[k]), std::sin(traj.theta[k])};
        worst = std::max(worst, std::abs(cross(rdot, seg)));
    }
    return worst;
}

std::vector<Vec2> rear_track(const BikeTrajectory& traj) { return traj.rear; }

}  // namespace biketrack
