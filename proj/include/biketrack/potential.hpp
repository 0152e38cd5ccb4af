#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biketrack/ode.hpp"

namespace biketrack {

/// Time-dependent coefficient p(t) of the Hill equation x'' + p(t) x = 0.
///
/// Closed-form kinds evaluate everywhere; Sampled kinds evaluate only inside
/// their sample range (linear interpolation between samples). A potential may
/// declare a period T, which is verified at declaration time on a 1000-point
/// probe grid: |p(t+T) - p(t)| <= 1e-12 * (1 + |p(t)|).
class Potential {
public:
    static Potential constant(double value);
    /// p(t) = offset + amplitude * cos(omega * t)
    static Potential cosine(double offset, double amplitude, double omega);
    /// p(t) = amplitude / cosh(rate * (t - center))^2
    static Potential sech2(double amplitude, double rate, double center);
    static Potential sampled(std::vector<double> times, std::vector<double> values);
    static Potential sum(std::vector<Potential> parts);

    double eval(double t) const;
    /// dp/dt, analytic for closed forms, piecewise slope for Sampled.
    double derivative(double t) const;

    std::optional<double> period() const { return period_; }
    /// Declares period T; throws std::invalid_argument on a failed probe.
    Potential with_period(double T) const;

private:
    struct Constant {
        double value;
    };
    struct Cosine {
        double offset, amplitude, omega;
    };
    struct Sech2 {
        double amplitude, rate, center;
    };
    struct Sampled {
        std::vector<double> times, values;
    };
    struct Sum {
        std::vector<Potential> parts;
    };
    using Kind = std::variant<Constant, Cosine, Sech2, Sampled, Sum>;

    explicit Potential(Kind kind) : kind_(std::move(kind)) {}

    void verify_period(double T) const;

    Kind kind_;
    std::optional<double> period_;
};

/// Accumulated phase phi(t) = t + integral of p, with phi(t0) = 0, and the
/// rotating-frame angle psi = -phi / 2 (exact arithmetic relation).
struct PhaseAccumulator {
    GridSpec grid;
    std::vector<double> phi;
    std::vector<double> psi;
};

/// Integrates phi' = 1 + p(t) with the shared RK4 engine, so phi lives on the
/// same grid (and the same stage values) as every other state.
PhaseAccumulator accumulate_phase(const Potential& p, const GridSpec& grid);

/// Descriptor parse failure; position() is the offset into the descriptor.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Builds a potential from a textual descriptor:
///
///   const:<c>             period 2*pi attached
///   cos:<a>,<b>,<omega>   p = a + b*cos(omega*t), period 2*pi/|omega|
///   sech2:<A>,<k>,<t_c>   no period
///   sum:(<desc>;<desc>;...)
///   file:<path>           two-column CSV t,p -> Sampled
Potential make_potential(std::string_view descriptor);

/// Named reference potentials exercised by the verification suites.
const std::vector<std::string>& catalog_descriptors();

}  // namespace biketrack
