#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace biketrack {

struct FrontPath;
struct BikeTrajectory;
struct MagneticPath;

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// Full-precision parse; throws std::runtime_error on malformed input.
double parse_double(std::string_view s);

struct CsvTable {
    std::vector<std::string> header;  // empty when the file has no header row
    std::vector<std::vector<double>> rows;
};

/// Reads comma-separated numeric rows. A non-numeric first line is treated as
/// the header. Rows must all have the same width.
CsvTable read_csv(std::istream& in);

/// One row per grid point: t,X,Y,theta,Rx,Ry,phi,v with round-trippable
/// doubles, '.' decimal separator and '\n' line endings.
void write_track_csv(std::ostream& out, const FrontPath& path, const BikeTrajectory& bike);

/// One row per grid point: t,X,Y,chi,v.
void write_magnetic_csv(std::ostream& out, const MagneticPath& path);

}  // namespace biketrack
