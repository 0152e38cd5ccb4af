#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "biketrack/bike.hpp"
#include "biketrack/csv.hpp"
#include "biketrack/equivalence.hpp"
#include "biketrack/front_path.hpp"
#include "biketrack/hill.hpp"
#include "biketrack/potential.hpp"
#include "biketrack/svg.hpp"

namespace fs = std::filesystem;
using namespace biketrack;

namespace {

// Exit codes shared by every subcommand: 0 success, 1 verification failure,
// 2 usage/parse/runtime error.
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

fs::path sibling_svg(const fs::path& base) {
    fs::path p = base;
    p.replace_extension(".svg");
    if (p == base) p += ".svg";
    return p;
}

struct TrackArgs {
    std::string descriptor;
    double t0 = 0.0, t1 = 0.0, h = 1e-3, theta0 = 0.0;
    std::string out;
    std::string format = "csv";
};

int run_track(const TrackArgs& a) {
    Potential p = make_potential(a.descriptor);
    GridSpec grid(a.t0, a.t1, a.h);
    FrontPath path = build_front_path(p, grid);
    BikeTrajectory bike = solve_bike(path, a.theta0);

    std::string csv_text, svg_text;
    if (a.format == "csv" || a.format == "both") {
        std::ostringstream os;
        write_track_csv(os, path, bike);
        csv_text = os.str();
    }
    if (a.format == "svg" || a.format == "both") {
        std::vector<Polyline> curves(2);
        curves[0].label = "front path";
        curves[0].color = "#1f77b4";
        curves[1].label = "rear track";
        curves[1].color = "#d62728";
        for (std::size_t k = 0; k < grid.size(); ++k)
            curves[0].points.push_back({path.x[k], path.y[k]});
        curves[1].points = rear_track(bike);
        std::ostringstream os;
        write_svg(os, curves);
        svg_text = os.str();
    }

    if (a.format == "csv") {
        write_file(a.out, csv_text);
    } else if (a.format == "svg") {
        write_file(a.out, svg_text);
    } else {
        write_file(a.out, csv_text);
        write_file(sibling_svg(a.out), svg_text);
    }
    return 0;
}

int run_magnetic(const TrackArgs& a) {
    Potential p = make_potential(a.descriptor);
    GridSpec grid(a.t0, a.t1, a.h);
    MagneticPath path = magnetic_simulate(p, grid);

    std::string csv_text, svg_text;
    if (a.format == "csv" || a.format == "both") {
        std::ostringstream os;
        write_magnetic_csv(os, path);
        csv_text = os.str();
    }
    if (a.format == "svg" || a.format == "both") {
        std::vector<Polyline> curves(1);
        curves[0].label = "particle trace";
        curves[0].color = "#1f77b4";
        curves[0].points = path.position;
        std::ostringstream os;
        write_svg(os, curves);
        svg_text = os.str();
    }

    if (a.format == "csv") {
        write_file(a.out, csv_text);
    } else if (a.format == "svg") {
        write_file(a.out, svg_text);
    } else {
        write_file(a.out, csv_text);
        write_file(sibling_svg(a.out), svg_text);
    }
    return 0;
}

struct VerifyArgs {
    std::string descriptor;
    double t0 = 0.0, t1 = 0.0, h = 1e-3, theta0 = 0.0, tol = 1e-5;
};

int run_verify(const VerifyArgs& a) {
    Potential p = make_potential(a.descriptor);
    GridSpec grid(a.t0, a.t1, a.h);

    EquivalenceReport report = verify_equivalence(p, a.theta0, grid);
    double da = double_angle_residual(p, grid, init_from_theta(a.theta0));
    FrontPath path = build_front_path(p, grid);
    MagneticPath particle = magnetic_simulate(p, grid);
    double dist = sup_distance(particle, path);

    std::cout << "theorem1 max residual    = " << format_double(report.max_residual) << '\n'
              << "double-angle max residual = " << format_double(da) << '\n'
              << "theorem2 path distance   = " << format_double(dist) << '\n'
              << "tolerance                = " << format_double(a.tol) << '\n';
    bool ok = report.max_residual <= a.tol && da <= a.tol && dist <= a.tol;
    std::cout << "result: " << (ok ? "pass" : "fail") << '\n';
    return ok ? 0 : kExitVerifyFailure;
}

struct MonodromyArgs {
    std::string descriptor;
    double period = 0.0;
    double h = 1e-3;
};

int run_monodromy(const MonodromyArgs& a) {
    Potential p = make_potential(a.descriptor);
    // A descriptor-attached period wins when the flag agrees with it to 1e-6
    // relative; the attached value carries full precision (e.g. 2*pi for
    // cosines) while the flag is typically typed with few digits.
    if (p.period() && std::abs(a.period - *p.period()) <= 1e-6 * (1.0 + std::abs(*p.period()))) {
        // keep the attached period
    } else {
        p = p.with_period(a.period);
    }
    MonodromyResult m = monodromy(p, a.h);
    std::cout << "[ " << format_double(m.matrix[0][0]) << "  " << format_double(m.matrix[0][1])
              << " ]\n"
              << "[ " << format_double(m.matrix[1][0]) << "  " << format_double(m.matrix[1][1])
              << " ]\n";
    std::cout << "trace=" << format_double(m.trace) << " det=" << format_double(m.det)
              << " class=" << to_string(m.stability) << '\n';
    return 0;
}

struct GalleryArgs {
    std::string outdir;
    double t1 = 20.0, h = 1e-3, theta0 = 0.0;
};

std::string sanitize(const std::string& descriptor) {
    std::string name = descriptor;
    for (char& c : name)
        if (c == ':' || c == ',' || c == ';' || c == '(' || c == ')' || c == '.') c = '_';
    return name;
}

int run_gallery(const GalleryArgs& a) {
    fs::create_directories(a.outdir);
    for (const auto& desc : catalog_descriptors()) {
        TrackArgs t;
        t.descriptor = desc;
        t.t1 = a.t1;
        t.h = a.h;
        t.theta0 = a.theta0;
        t.format = "svg";
        t.out = (fs::path(a.outdir) / (sanitize(desc) + ".svg")).string();
        run_track(t);
        std::cout << desc << " -> " << t.out << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicycle-track realizations of Hill potentials: generate front/rear tracks, "
                 "cross-check the Hill and bike integrations, and compute Floquet monodromy."};
    app.require_subcommand(1);

    TrackArgs track;
    CLI::App* cmd_track = app.add_subcommand(
        "track", "Generate the front path and rear track, exported as CSV/SVG");
    cmd_track->add_option("descriptor", track.descriptor, "potential descriptor")->required();
    cmd_track->add_option("--t0", track.t0, "start time (default 0)");
    cmd_track->add_option("--t1", track.t1, "end time")->required();
    cmd_track->add_option("--h", track.h, "step size (default 1e-3)");
    cmd_track->add_option("--theta0", track.theta0, "initial steering angle")->required();
    cmd_track->add_option("--out", track.out, "output path")->required();
    cmd_track->add_option("--format", track.format, "csv|svg|both (default csv)")
        ->check(CLI::IsMember({"csv", "svg", "both"}));

    TrackArgs magnetic;
    CLI::App* cmd_magnetic = app.add_subcommand(
        "magnetic", "Trace the speed-v particle with heading rate 2 - v");
    cmd_magnetic->add_option("descriptor", magnetic.descriptor, "potential descriptor")
        ->required();
    cmd_magnetic->add_option("--t0", magnetic.t0, "start time (default 0)");
    cmd_magnetic->add_option("--t1", magnetic.t1, "end time")->required();
    cmd_magnetic->add_option("--h", magnetic.h, "step size (default 1e-3)");
    cmd_magnetic->add_option("--out", magnetic.out, "output path")->required();
    cmd_magnetic->add_option("--format", magnetic.format, "csv|svg|both (default csv)")
        ->check(CLI::IsMember({"csv", "svg", "both"}));

    VerifyArgs verify;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Check the bike/Hill angle relation and the particle reformulation");
    cmd_verify->add_option("descriptor", verify.descriptor, "potential descriptor")->required();
    cmd_verify->add_option("--t0", verify.t0, "start time (default 0)");
    cmd_verify->add_option("--t1", verify.t1, "end time")->required();
    cmd_verify->add_option("--h", verify.h, "step size (default 1e-3)");
    cmd_verify->add_option("--theta0", verify.theta0, "initial steering angle")->required();
    cmd_verify->add_option("--tol", verify.tol, "tolerance (default 1e-5)");

    MonodromyArgs mono;
    CLI::App* cmd_mono = app.add_subcommand(
        "monodromy", "Fundamental matrix over one period, with stability class");
    cmd_mono->add_option("descriptor", mono.descriptor, "potential descriptor")->required();
    cmd_mono->add_option("--period", mono.period, "period T")->required();
    cmd_mono->add_option("--h", mono.h, "step size (default 1e-3)");

    GalleryArgs gallery;
    CLI::App* cmd_gallery = app.add_subcommand(
        "gallery", "Render SVG tracks for the built-in potential catalog");
    cmd_gallery->add_option("--out", gallery.outdir, "output directory")->required();
    cmd_gallery->add_option("--t1", gallery.t1, "end time (default 20)");
    cmd_gallery->add_option("--h", gallery.h, "step size (default 1e-3)");
    cmd_gallery->add_option("--theta0", gallery.theta0, "initial steering angle (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_track) return run_track(track);
        if (*cmd_magnetic) return run_magnetic(magnetic);
        if (*cmd_verify) return run_verify(verify);
        if (*cmd_mono) return run_monodromy(mono);
        if (*cmd_gallery) return run_gallery(gallery);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
