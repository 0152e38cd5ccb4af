#include "biketrack/hill.hpp"

#include <cmath>
#include <numbers>

namespace biketrack {

HillTrajectory solve_hill(const Potential& p, Vec2 z0, const GridSpec& grid) {
    if (z0.x == 0.0 && z0.y == 0.0)
        throw std::invalid_argument("solve_hill: zero initial condition, angle undefined");

    auto field = [&p](double t, std::span<const double> s, std::span<double> d) {
        d[0] = s[1];
        d[1] = -p.eval(t) * s[0];
    };
    const double init[2] = {z0.x, z0.y};
    Trajectory traj = rk4_integrate(field, grid, init);

    HillTrajectory hill{grid, {}, {}, {}};
    hill.x.resize(traj.size());
    hill.xdot.resize(traj.size());
    hill.alpha.resize(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        hill.x[k] = traj.value(k, 0);
        hill.xdot[k] = traj.value(k, 1);
        double principal = std::atan2(hill.xdot[k], hill.x[k]);
        if (k == 0) {
            hill.alpha[0] = principal;
            continue;
        }
        double next = unwrap_angle(hill.alpha[k - 1], principal);
        if (std::abs(next - hill.alpha[k - 1]) > std::numbers::pi / 2.0)
            throw IntegrationError(
                "solve_hill: angle moved more than pi/2 in one step; reduce h",
                grid.time(k));
        hill.alpha[k] = next;
    }
    return hill;
}

double wronskian(const HillTrajectory& a, const HillTrajectory& b, std::size_t index) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("wronskian: grids differ");
    return a.x[index] * b.xdot[index] - b.x[index] * a.xdot[index];
}

double pruefer_angle(const HillTrajectory& traj, std::size_t index) {
    return traj.alpha.at(index);
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::elliptic: return "elliptic";
        case Stability::hyperbolic: return "hyperbolic";
        case Stability::parabolic: return "parabolic";
    }
    return "?";
}

MonodromyResult monodromy(const Potential& p, double h) {
    if (!p.period())
        throw std::invalid_argument("monodromy: potential has no declared period");
    const double T = *p.period();
    GridSpec grid(0.0, T, h);

    HillTrajectory c0 = solve_hill(p, {1.0, 0.0}, grid);
    HillTrajectory c1 = solve_hill(p, {0.0, 1.0}, grid);
    std::size_t end = grid.steps();

    MonodromyResult r{};
    r.matrix = {{{c0.x[end], c1.x[end]}, {c0.xdot[end], c1.xdot[end]}}};
    r.det = r.matrix[0][0] * r.matrix[1][1] - r.matrix[0][1] * r.matrix[1][0];
    r.trace = r.matrix[0][0] + r.matrix[1][1];
    constexpr double parabolic_tol = 1e-9;
    double excess = std::abs(r.trace) - 2.0;
    if (std::abs(excess) <= parabolic_tol)
        r.stability = Stability::parabolic;
    else if (excess < 0.0)
        r.stability = Stability::elliptic;
    else
        r.stability = Stability::hyperbolic;
    return r;
}

}  // namespace biketrack
