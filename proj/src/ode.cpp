#include "biketrack/ode.hpp"

#include <cmath>
#include <numbers>

namespace biketrack {

GridSpec::GridSpec(double t0, double t1, double h) : t0_(t0), t1_(t1), h_(h) {
    if (!(std::isfinite(t0) && std::isfinite(t1) && std::isfinite(h)))
        throw std::invalid_argument("GridSpec: non-finite bounds");
    if (!(t1 > t0)) throw std::invalid_argument("GridSpec: t1 must exceed t0");
    if (!(h > 0.0)) throw std::invalid_argument("GridSpec: step must be positive");
    double n = std::round((t1 - t0) / h);
    n_ = n < 1.0 ? 1 : static_cast<std::size_t>(n);
    step_ = (t1 - t0) / static_cast<double>(n_);
}

double GridSpec::time(std::size_t k) const {
    if (k == n_) return t1_;
    return t0_ + static_cast<double>(k) * step_;
}

std::vector<double> GridSpec::times() const {
    std::vector<double> t(n_ + 1);
    for (std::size_t k = 0; k <= n_; ++k) t[k] = time(k);
    return t;
}

IntegrationError::IntegrationError(const std::string& what, double t)
    : std::runtime_error(what + " at t = " + std::to_string(t)), time_(t) {}

namespace {

// Neumaier variant of Kahan summation: `sum` plus `carry` holds the value.
inline void compensated_add(double& sum, double& carry, double term) {
    double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
        carry += (sum - t) + term;
    else
        carry += (term - t) + sum;
    sum = t;
}

inline void check_finite(std::span<const double> v, double t, const char* stage) {
    for (double x : v)
        if (!std::isfinite(x))
            throw IntegrationError(std::string("rk4_integrate: non-finite value in ") + stage, t);
}

}  // namespace

Trajectory rk4_integrate(const VectorField& f, const GridSpec& grid,
                         std::span<const double> state0) {
    const std::size_t dim = state0.size();
    if (dim == 0) throw std::invalid_argument("rk4_integrate: empty state");
    check_finite(state0, grid.t0(), "initial state");

    Trajectory traj;
    traj.times = grid.times();
    traj.dim = dim;
    traj.data.resize(grid.size() * dim);

    std::vector<double> y(state0.begin(), state0.end());
    std::vector<double> carry(dim, 0.0);
    std::vector<double> ytmp(dim), k1(dim), k2(dim), k3(dim), k4(dim);

    auto store = [&](std::size_t row) {
        for (std::size_t i = 0; i < dim; ++i) traj.data[row * dim + i] = y[i] + carry[i];
    };
    store(0);

    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double t = traj.times[k];
        const double dt = traj.times[k + 1] - t;
        const double half = dt / 2.0;

        f(t, y, k1);
        check_finite(k1, t, "stage 1");
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + half * k1[i];
        f(t + half, ytmp, k2);
        check_finite(k2, t + half, "stage 2");
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + half * k2[i];
        f(t + half, ytmp, k3);
        check_finite(k3, t + half, "stage 3");
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + dt * k3[i];
        f(t + dt, ytmp, k4);
        check_finite(k4, t + dt, "stage 4");

        for (std::size_t i = 0; i < dim; ++i) {
            double increment = dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
            compensated_add(y[i], carry[i], increment);
        }
        check_finite(y, traj.times[k + 1], "state");
        store(k + 1);
    }
    return traj;
}

double unwrap_angle(double previous_continuous, double new_principal) {
    constexpr double pi = std::numbers::pi;
    // remainder() is exact, so the congruence with new_principal survives.
    double d = std::remainder(new_principal - previous_continuous, 2.0 * pi);
    if (d == -pi) d = pi;  // half-open interval: prefer +pi
    return previous_continuous + d;
}

}  // namespace biketrack
