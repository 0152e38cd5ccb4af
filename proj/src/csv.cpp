#include "biketrack/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "biketrack/bike.hpp"
#include "biketrack/front_path.hpp"

namespace biketrack {

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    // strip surrounding spaces and a trailing CR from DOS line endings
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    double value = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("not a number: '" + std::string(s) + "'");
    return value;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

bool try_parse_row(const std::vector<std::string_view>& fields, std::vector<double>& out) {
    out.clear();
    for (auto f : fields) {
        try {
            out.push_back(parse_double(f));
        } catch (const std::runtime_error&) {
            return false;
        }
    }
    return true;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    bool first_content = true;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (first_content) {
            first_content = false;
            width = fields.size();
            if (!try_parse_row(fields, row)) {
                for (auto f : fields) table.header.emplace_back(f);
                continue;
            }
            table.rows.push_back(row);
            continue;
        }
        if (fields.size() != width)
            throw std::runtime_error("csv line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(width) + " fields, got " +
                                     std::to_string(fields.size()));
        if (!try_parse_row(fields, row))
            throw std::runtime_error("csv line " + std::to_string(lineno) + ": malformed number");
        table.rows.push_back(row);
    }
    return table;
}

void write_track_csv(std::ostream& out, const FrontPath& path, const BikeTrajectory& bike) {
    out << "t,X,Y,theta,Rx,Ry,phi,v\n";
    for (std::size_t k = 0; k < path.grid.size(); ++k) {
        out << format_double(path.grid.time(k)) << ',' << format_double(path.x[k]) << ','
            << format_double(path.y[k]) << ',' << format_double(bike.theta[k]) << ','
            << format_double(bike.rear[k].x) << ',' << format_double(bike.rear[k].y) << ','
            << format_double(path.phi[k]) << ',' << format_double(path.v[k]) << '\n';
    }
}

void write_magnetic_csv(std::ostream& out, const MagneticPath& path) {
    out << "t,X,Y,chi,v\n";
    for (std::size_t k = 0; k < path.grid.size(); ++k) {
        out << format_double(path.grid.time(k)) << ',' << format_double(path.position[k].x)
            << ',' << format_double(path.position[k].y) << ','
            << format_double(path.heading[k]) << ',' << format_double(path.speed[k]) << '\n';
    }
}

}  // namespace biketrack
