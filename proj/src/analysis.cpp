#include "fracapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "fracapprox/errors.hpp"

namespace fracapprox {

FrequencyGrid make_grid(double omega_l, double omega_h, int count) {
    if (count < 2) throw Error(ErrorKind::Domain, "grid needs at least 2 points");
    if (!(std::isfinite(omega_l) && std::isfinite(omega_h) && omega_l > 0.0 && omega_l < omega_h)) {
        throw Error(ErrorKind::Domain, "grid band must satisfy 0 < omega_l < omega_h");
    }
    FrequencyGrid g;
    g.points.resize(static_cast<std::size_t>(count));
    const double ratio = omega_h / omega_l;
    const double last = count - 1;
    for (int j = 0; j < count; ++j) {
        g.points[static_cast<std::size_t>(j)] = omega_l * std::pow(ratio, j / last);
    }
    g.points.front() = omega_l;
    g.points.back() = omega_h;
    return g;
}

ComplexResponse exact_response(double alpha, OperatorKind kind, double omega) {
    if (!(std::isfinite(omega) && omega > 0.0)) {
        throw Error(ErrorKind::Domain, "frequency must be finite and > 0");
    }
    const double power = kind == OperatorKind::Integrator ? -alpha : alpha;
    ComplexResponse r;
    r.magnitude_db = 20.0 * power * std::log10(omega);
    r.phase_deg = 90.0 * power;
    r.value = std::polar(std::pow(omega, power), power * std::numbers::pi / 2.0);
    return r;
}

double inf_norm(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double two_norm(std::span<const double> values) {
    double acc = 0.0;
    for (double v : values) acc += v * v;
    return std::sqrt(acc);
}

ErrorReport error_series(const FactoredModel& model, double alpha, OperatorKind kind, const FrequencyGrid& grid) {
    ErrorReport r;
    r.magnitude_error.reserve(grid.size());
    r.phase_error.reserve(grid.size());
    for (double w : grid.points) {
        const auto exact = exact_response(alpha, kind, w);
        const auto approx = eval_response(model, w);
        r.magnitude_error.push_back(exact.magnitude_db - approx.magnitude_db);
        r.phase_error.push_back(exact.phase_deg - approx.phase_deg);
    }
    r.norms.magnitude_inf = inf_norm(r.magnitude_error);
    r.norms.magnitude_2 = two_norm(r.magnitude_error);
    r.norms.phase_inf = inf_norm(r.phase_error);
    r.norms.phase_2 = two_norm(r.phase_error);
    return r;
}

std::vector<BodeRow> bode_rows(const FactoredModel& model, double alpha, OperatorKind kind, const FrequencyGrid& grid) {
    std::vector<BodeRow> rows;
    rows.reserve(grid.size());
    for (double w : grid.points) {
        const auto exact = exact_response(alpha, kind, w);
        const auto approx = eval_response(model, w);
        rows.push_back({w, approx.magnitude_db, exact.magnitude_db, approx.phase_deg, exact.phase_deg});
    }
    return rows;
}

std::vector<double> default_alphas() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

ErrorNorms sweep_table(Method method, OperatorKind kind, std::span<const double> alphas, const SweepSettings& settings) {
    if (alphas.empty()) throw Error(ErrorKind::Usage, "sweep needs at least one alpha");
    const auto grid = make_grid(settings.omega_l, settings.omega_h, settings.points);

    auto one = [&](double alpha) {
        DesignSpec spec;
        spec.method = method;
        spec.alpha = alpha;
        spec.omega_l = settings.omega_l;
        spec.omega_h = settings.omega_h;
        spec.n = settings.n;
        spec.k = settings.k;
        return error_series(design(with_default_epsilon(spec), kind), alpha, kind, grid);
    };

    // Each alpha fills its own slot; reduction below runs in alpha order.
    std::vector<std::future<ErrorReport>> jobs;
    jobs.reserve(alphas.size());
    for (double a : alphas) jobs.push_back(std::async(std::launch::async, one, a));
    std::vector<ErrorReport> reports;
    reports.reserve(alphas.size());
    for (auto& j : jobs) reports.push_back(j.get());

    ErrorNorms out;
    if (settings.aggregation == Aggregation::PerAlphaMax) {
        for (const auto& r : reports) {
            out.magnitude_inf = std::max(out.magnitude_inf, r.norms.magnitude_inf);
            out.magnitude_2 = std::max(out.magnitude_2, r.norms.magnitude_2);
            out.phase_inf = std::max(out.phase_inf, r.norms.phase_inf);
            out.phase_2 = std::max(out.phase_2, r.norms.phase_2);
        }
    } else {
        std::vector<double> mag, phase;
        for (const auto& r : reports) {
            mag.insert(mag.end(), r.magnitude_error.begin(), r.magnitude_error.end());
            phase.insert(phase.end(), r.phase_error.begin(), r.phase_error.end());
        }
        out = {inf_norm(mag), two_norm(mag), inf_norm(phase), two_norm(phase)};
    }
    return out;
}

}  // namespace fracapprox
