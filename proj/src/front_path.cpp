#include "biketrack/front_path.hpp"

#include <cmath>
#include <numbers>

namespace biketrack {

Vec2 front_velocity(const Potential& p, const PhaseAccumulator& phase, std::size_t index) {
    double t = phase.grid.time(index);
    double pt = p.eval(t);
    double f = phase.phi[index];
    return {(pt - 1.0) * std::sin(f), (1.0 - pt) * std::cos(f)};
}

FrontPath build_front_path(const Potential& p, const GridSpec& grid) {
    // state = (phi, X, Y)
    auto field = [&p](double t, std::span<const double> s, std::span<double> d) {
        double pt = p.eval(t);
        d[0] = 1.0 + pt;
        d[1] = (pt - 1.0) * std::sin(s[0]);
        d[2] = (1.0 - pt) * std::cos(s[0]);
    };
    const double init[3] = {0.0, 0.0, 0.0};
    Trajectory traj = rk4_integrate(field, grid, init);

    FrontPath path{grid, p, {}, {}, {}, {}, {}, {}};
    const std::size_t n = traj.size();
    path.x.resize(n);
    path.y.resize(n);
    path.xdot.resize(n);
    path.ydot.resize(n);
    path.phi.resize(n);
    path.v.resize(n);
    PhaseAccumulator phase{grid, {}, {}};
    phase.phi.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        path.phi[k] = traj.value(k, 0);
        path.x[k] = traj.value(k, 1);
        path.y[k] = traj.value(k, 2);
        phase.phi[k] = path.phi[k];
        double t = grid.time(k);
        path.v[k] = 1.0 - p.eval(t);
        Vec2 vel = front_velocity(p, phase, k);
        path.xdot[k] = vel.x;
        path.ydot[k] = vel.y;
    }
    return path;
}

MagneticPath magnetic_simulate(const Potential& p, const GridSpec& grid) {
    // state = (chi, x, y); chi' = 2 - v = 1 + p
    auto field = [&p](double t, std::span<const double> s, std::span<double> d) {
        double v = 1.0 - p.eval(t);
        d[0] = 2.0 - v;
        d[1] = v * std::cos(s[0]);
        d[2] = v * std::sin(s[0]);
    };
    const double init[3] = {std::numbers::pi / 2.0, 0.0, 0.0};
    Trajectory traj = rk4_integrate(field, grid, init);

    MagneticPath path{grid, {}, {}, {}};
    path.position.resize(traj.size());
    path.heading.resize(traj.size());
    path.speed.resize(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        path.heading[k] = traj.value(k, 0);
        path.position[k] = {traj.value(k, 1), traj.value(k, 2)};
        path.speed[k] = 1.0 - p.eval(grid.time(k));
    }
    return path;
}

double sup_distance(const MagneticPath& particle, const FrontPath& path) {
    if (!(particle.grid == path.grid))
        throw std::invalid_argument("sup_distance: grids differ");
    double worst = 0.0;
    for (std::size_t k = 0; k < particle.position.size(); ++k) {
        double d = norm(particle.position[k] - Vec2{path.x[k], path.y[k]});
        worst = std::max(worst, d);
    }
    return worst;
}

double signed_curvature(const FrontPath& path, std::size_t index) {
    double t = path.grid.time(index);
    double p = path.potential.eval(t);
    double pdot = path.potential.derivative(t);
    double f = path.phi[index];
    double v = 1.0 - p;
    double phidot = 1.0 + p;
    // velocity u = v (-sin f, cos f); acceleration from the product rule
    double ax = -(-pdot) * std::sin(f) - v * std::cos(f) * phidot;
    double ay = (-pdot) * std::cos(f) - v * std::sin(f) * phidot;
    double ux = -v * std::sin(f);
    double uy = v * std::cos(f);
    // signed arc length ds = v dt, so kappa = cross(u, a) / v^3
    return (ux * ay - uy * ax) / (v * v * v);
}

}  // namespace biketrack
