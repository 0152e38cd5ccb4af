#include "biketrack/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <utility>

#include "biketrack/csv.hpp"

namespace biketrack {

Potential Potential::constant(double value) { return Potential(Kind(Constant{value})); }

Potential Potential::cosine(double offset, double amplitude, double omega) {
    return Potential(Kind(Cosine{offset, amplitude, omega}));
}

Potential Potential::sech2(double amplitude, double rate, double center) {
    return Potential(Kind(Sech2{amplitude, rate, center}));
}

Potential Potential::sampled(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("sampled potential: times/values length mismatch");
    if (times.size() < 2)
        throw std::invalid_argument("sampled potential: need at least two samples");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] < times[i + 1]))
            throw std::invalid_argument("sampled potential: times must be strictly increasing");
    return Potential(Kind(Sampled{std::move(times), std::move(values)}));
}

Potential Potential::sum(std::vector<Potential> parts) {
    if (parts.empty()) throw std::invalid_argument("sum potential: no parts");
    return Potential(Kind(Sum{std::move(parts)}));
}

namespace {

double eval_sampled(const std::vector<double>& times, const std::vector<double>& values,
                    double t) {
    if (t < times.front() || t > times.back())
        throw std::domain_error("sampled potential: t = " + std::to_string(t) +
                                " outside [" + std::to_string(times.front()) + ", " +
                                std::to_string(times.back()) + "]");
    auto hi = std::lower_bound(times.begin(), times.end(), t);
    if (hi == times.begin()) return values.front();
    std::size_t i = static_cast<std::size_t>(hi - times.begin()) - 1;
    double w = (t - times[i]) / (times[i + 1] - times[i]);
    return (1.0 - w) * values[i] + w * values[i + 1];
}

double slope_sampled(const std::vector<double>& times, const std::vector<double>& values,
                     double t) {
    if (t < times.front() || t > times.back())
        throw std::domain_error("sampled potential: t outside sample range");
    auto hi = std::lower_bound(times.begin(), times.end(), t);
    std::size_t i = hi == times.begin() ? 0 : static_cast<std::size_t>(hi - times.begin()) - 1;
    if (i + 1 >= times.size()) i = times.size() - 2;
    return (values[i + 1] - values[i]) / (times[i + 1] - times[i]);
}

}  // namespace

double Potential::eval(double t) const {
    struct Visitor {
        double t;
        double operator()(const Constant& c) const { return c.value; }
        double operator()(const Cosine& c) const {
            return c.offset + c.amplitude * std::cos(c.omega * t);
        }
        double operator()(const Sech2& s) const {
            double sech = 1.0 / std::cosh(s.rate * (t - s.center));
            return s.amplitude * sech * sech;
        }
        double operator()(const Sampled& s) const { return eval_sampled(s.times, s.values, t); }
        double operator()(const Sum& sum) const {
            double total = 0.0;
            for (const auto& p : sum.parts) total += p.eval(t);
            return total;
        }
    };
    return std::visit(Visitor{t}, kind_);
}

double Potential::derivative(double t) const {
    struct Visitor {
        double t;
        double operator()(const Constant&) const { return 0.0; }
        double operator()(const Cosine& c) const {
            return -c.amplitude * c.omega * std::sin(c.omega * t);
        }
        double operator()(const Sech2& s) const {
            double u = s.rate * (t - s.center);
            double sech = 1.0 / std::cosh(u);
            return -2.0 * s.amplitude * s.rate * sech * sech * std::tanh(u);
        }
        double operator()(const Sampled& s) const { return slope_sampled(s.times, s.values, t); }
        double operator()(const Sum& sum) const {
            double total = 0.0;
            for (const auto& p : sum.parts) total += p.derivative(t);
            return total;
        }
    };
    return std::visit(Visitor{t}, kind_);
}

void Potential::verify_period(double T) const {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("period must be positive and finite");

    // Probe window: [0, T) unless the potential has a restricted domain, in
    // which case probe inside it.
    double lo = 0.0;
    double hi = T;
    if (const auto* s = std::get_if<Sampled>(&kind_)) {
        lo = s->times.front();
        hi = s->times.back() - T;
        if (hi < lo)
            throw std::invalid_argument("period longer than the sampled domain");
    }
    constexpr int probes = 1000;
    for (int j = 0; j < probes; ++j) {
        double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(probes);
        double a = eval(t);
        double b = eval(t + T);
        if (!(std::abs(b - a) <= 1e-12 * (1.0 + std::abs(a))))
            throw std::invalid_argument("periodicity probe failed at t = " + std::to_string(t) +
                                        ": |p(t+T) - p(t)| = " + std::to_string(std::abs(b - a)));
    }
}

Potential Potential::with_period(double T) const {
    verify_period(T);
    Potential p(*this);
    p.period_ = T;
    return p;
}

PhaseAccumulator accumulate_phase(const Potential& p, const GridSpec& grid) {
    auto field = [&p](double t, std::span<const double>, std::span<double> dydt) {
        dydt[0] = 1.0 + p.eval(t);
    };
    const double phi0[1] = {0.0};
    Trajectory traj = rk4_integrate(field, grid, phi0);

    PhaseAccumulator acc{grid, {}, {}};
    acc.phi.resize(traj.size());
    acc.psi.resize(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        acc.phi[k] = traj.value(k, 0);
        acc.psi[k] = -0.5 * acc.phi[k];
    }
    return acc;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

class DescriptorParser {
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    Potential parse() {
        Potential p = parse_descriptor();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return p;
    }

private:
    Potential parse_descriptor() {
        std::size_t kind_start = pos_;
        std::string kind = take_until(":");
        expect(':');
        if (kind == "const") {
            double c = number();
            return Potential::constant(c).with_period(two_pi);
        }
        if (kind == "cos") {
            double a = number();
            expect(',');
            double b = number();
            expect(',');
            double omega = number();
            Potential p = Potential::cosine(a, b, omega);
            double T = omega == 0.0 ? two_pi : two_pi / std::abs(omega);
            return p.with_period(T);
        }
        if (kind == "sech2") {
            double amplitude = number();
            expect(',');
            double rate = number();
            expect(',');
            double center = number();
            return Potential::sech2(amplitude, rate, center);
        }
        if (kind == "sum") {
            expect('(');
            std::vector<Potential> parts;
            parts.push_back(parse_descriptor());
            while (peek() == ';') {
                ++pos_;
                parts.push_back(parse_descriptor());
            }
            expect(')');
            return Potential::sum(std::move(parts));
        }
        if (kind == "file") {
            std::string path(text_.substr(pos_));
            pos_ = text_.size();
            return load_file(path, kind_start);
        }
        throw ParseError("unknown potential kind '" + kind + "'", kind_start);
    }

    Potential load_file(const std::string& path, std::size_t at) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'", at);
        CsvTable table = read_csv(in);
        std::vector<double> times, values;
        for (const auto& row : table.rows) {
            if (row.size() != 2) throw ParseError("'" + path + "' is not two-column t,p", at);
            times.push_back(row[0]);
            values.push_back(row[1]);
        }
        if (times.size() < 2) throw ParseError("'" + path + "' has fewer than two rows", at);
        return Potential::sampled(std::move(times), std::move(values));
    }

    std::string take_until(std::string_view stops) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    double number() {
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc{}) throw ParseError("expected a number", pos_);
        pos_ = static_cast<std::size_t>(res.ptr - text_.data());
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Potential make_potential(std::string_view descriptor) {
    return DescriptorParser(descriptor).parse();
}

const std::vector<std::string>& catalog_descriptors() {
    static const std::vector<std::string> catalog = {
        "const:0", "const:1", "cos:0.5,0.3,1", "cos:1.5,1,1", "sech2:2,1,5",
    };
    return catalog;
}

}  // namespace biketrack
