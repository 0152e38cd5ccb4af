#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace biketrack {

/// Uniform time grid on [t0, t1].
///
/// The number of steps is n = round((t1 - t0) / h), at least 1. The grid is
/// laid out with the uniform effective step (t1 - t0) / n, so the last point
/// is t1 exactly; when h divides the span the points coincide with
/// t0 + k * h to within one ulp. Period maps and closure tests rely on the
/// final point landing on t1.
class GridSpec {
public:
    GridSpec(double t0, double t1, double h);

    double t0() const { return t0_; }
    double t1() const { return t1_; }
    double h() const { return h_; }

    /// Effective step actually used between consecutive grid points.
    double step() const { return step_; }

    /// Number of steps n; the grid has n + 1 points.
    std::size_t steps() const { return n_; }
    std::size_t size() const { return n_ + 1; }

    double time(std::size_t k) const;
    std::vector<double> times() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    double t0_;
    double t1_;
    double h_;
    std::size_t n_;
    double step_;
};

/// Time-sampled states of a fixed-dimension system.
struct Trajectory {
    std::vector<double> times;
    std::size_t dim = 0;
    std::vector<double> data;  // row-major, times.size() * dim

    std::span<const double> state(std::size_t k) const {
        return {data.data() + k * dim, dim};
    }
    double value(std::size_t k, std::size_t component) const {
        return data[k * dim + component];
    }
    std::size_t size() const { return times.size(); }
};

/// Thrown when an integrand produces a non-finite value.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double t);
    double time() const { return time_; }

private:
    double time_;
};

/// Right-hand side f(t, y) writing dy/dt into `dydt`.
using VectorField =
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

/// Classical fixed-step 4th-order Runge-Kutta over the grid.
///
/// states[0] equals state0 exactly. State accumulation is compensated
/// (Neumaier) so long runs stay at truncation accuracy instead of picking up
/// O(sqrt(n)) summation noise. Throws IntegrationError if any stage produces
/// a non-finite value.
Trajectory rk4_integrate(const VectorField& f, const GridSpec& grid,
                         std::span<const double> state0);

/// Continuous-branch angle tracking. Returns the representative of
/// new_principal (mod 2*pi) inside (previous_continuous - pi,
/// previous_continuous + pi].
double unwrap_angle(double previous_continuous, double new_principal);

}  // namespace biketrack
