#include "biketrack/svg.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "biketrack/csv.hpp"

namespace biketrack {

void write_svg(std::ostream& out, const std::vector<Polyline>& curves) {
    constexpr double box = 1000.0;
    constexpr double margin = 0.05 * box;
    constexpr double usable = box - 2.0 * margin;

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& c : curves)
        for (const auto& pt : c.points) {
            xmin = std::min(xmin, pt.x);
            xmax = std::max(xmax, pt.x);
            ymin = std::min(ymin, pt.y);
            ymax = std::max(ymax, pt.y);
        }
    if (!(xmin <= xmax)) {  // no points at all
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    double scale = span > 0.0 ? usable / span : 1.0;
    // center the joint bounding box
    double ox = margin + (usable - (xmax - xmin) * scale) / 2.0;
    double oy = margin + (usable - (ymax - ymin) * scale) / 2.0;
    auto map_x = [&](double x) { return ox + (x - xmin) * scale; };
    auto map_y = [&](double y) { return oy + (ymax - y) * scale; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (const auto& c : curves) {
        out << "  <path fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            out << (i == 0 ? "M " : " L ") << format_double(map_x(c.points[i].x)) << ' '
                << format_double(map_y(c.points[i].y));
        }
        out << "\"/>\n";
    }
    double legend_y = 30.0;
    for (const auto& c : curves) {
        out << "  <text x=\"20\" y=\"" << format_double(legend_y) << "\" fill=\"" << c.color
            << "\" font-family=\"sans-serif\" font-size=\"20\">" << c.label << "</text>\n";
        legend_y += 26.0;
    }
    out << "</svg>\n";
}

}  // namespace biketrack
