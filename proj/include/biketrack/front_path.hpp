#pragma once

#include <vector>

#include "biketrack/ode.hpp"
#include "biketrack/potential.hpp"
#include "biketrack/vec2.hpp"

namespace biketrack {

/// Front-wheel path generated from a potential:
///
///   X' = (p - 1) sin(phi),  Y' = (1 - p) cos(phi),  phi' = 1 + p,
///
/// integrated jointly from X = Y = phi = 0. The signed speed is v = 1 - p and
/// |(X', Y')| = |v| holds pointwise by construction. The generating potential
/// travels with the path so downstream integrators can re-evaluate the
/// velocity field analytically at substage times.
struct FrontPath {
    GridSpec grid;
    Potential potential;
    std::vector<double> x, y;        // position
    std::vector<double> xdot, ydot;  // analytic velocity at grid points
    std::vector<double> phi;         // accumulated phase, phi[0] = 0
    std::vector<double> v;           // signed speed 1 - p(t)
};

/// Analytic front-wheel velocity ((p-1) sin phi, (1-p) cos phi) at a grid index.
Vec2 front_velocity(const Potential& p, const PhaseAccumulator& phase, std::size_t index);

FrontPath build_front_path(const Potential& p, const GridSpec& grid);

/// Trace of a unit-mass particle with prescribed signed tangential speed
/// v = 1 - p and heading rate chi' = 2 - v. Where v changes sign the trace
/// forms a cusp while the heading stays smooth.
struct MagneticPath {
    GridSpec grid;
    std::vector<Vec2> position;
    std::vector<double> heading;  // continuous chi, chi(0) = pi/2
    std::vector<double> speed;    // signed v
};

MagneticPath magnetic_simulate(const Potential& p, const GridSpec& grid);

/// Max pointwise distance between the particle trace and the front path on a
/// shared grid (both start at the origin).
double sup_distance(const MagneticPath& particle, const FrontPath& path);

/// Signed curvature of the front path at a grid index, from the analytic
/// velocity and acceleration fields (uses dp/dt). Equals (1+p)/(1-p) wherever
/// v != 0; division blows up at cusps, so callers gate on |v|.
double signed_curvature(const FrontPath& path, std::size_t index);

}  // namespace biketrack
