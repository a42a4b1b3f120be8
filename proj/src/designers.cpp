#include "fracapprox/designers.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fracapprox/errors.hpp"

namespace fracapprox {

Method method_from_index(int index) {
    if (index < 1 || index > 7) {
        throw Error(ErrorKind::Usage, "method index must be 1..7, got " + std::to_string(index));
    }
    return static_cast<Method>(index);
}

bool is_piecewise(Method m) { return to_index(m) <= 4; }

double DesignSpec::omega_m() const { return std::sqrt(omega_l * omega_h); }

double DesignSpec::nu() const { return 0.5 - std::abs(alpha - 0.5); }

int DesignSpec::effective_k() const {
    switch (method) {
        case Method::PoinotOustaloup:
        case Method::Recursive: return 1;
        case Method::DoublePole: return 2;
        default: return k;
    }
}

Branch DesignSpec::branch() const { return alpha <= 0.5 ? Branch::LowOrder : Branch::HighOrder; }

void DesignSpec::validate() const {
    method_from_index(to_index(method));
    if (!(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorKind::Domain, "order alpha must lie in (0, 1)");
    }
    if (!(std::isfinite(omega_l) && std::isfinite(omega_h) && omega_l > 0.0 && omega_l < omega_h)) {
        throw Error(ErrorKind::Domain, "band must satisfy 0 < omega_l < omega_h");
    }
    if (n < 1) throw Error(ErrorKind::Domain, "n must be >= 1");
    if (k < 1) throw Error(ErrorKind::Domain, "k must be >= 1");
}

namespace {

// Point at fraction `e` of the log band: w_l * (w_h/w_l)^e, exact at both ends.
class LogBand {
public:
    explicit LogBand(const DesignSpec& s) : lo_(s.omega_l), hi_(s.omega_h), ratio_(s.omega_h / s.omega_l) {}

    double at(double e) const {
        if (e == 0.0) return lo_;
        if (e == 1.0) return hi_;
        return lo_ * std::pow(ratio_, e);
    }

private:
    double lo_, hi_, ratio_;
};

// log of prod_i |(j w + a_i) / (j w + b_i)|^k
double log_abs_ratio(const std::vector<FactorPair>& f, double w, int k, bool poles_over_zeros) {
    double acc = 0.0;
    for (const auto& pair : f) {
        const double num = poles_over_zeros ? pair.pole : pair.zero;
        const double den = poles_over_zeros ? pair.zero : pair.pole;
        acc += std::log(std::hypot(w, num)) - std::log(std::hypot(w, den));
    }
    return k * acc;
}

// Gain making |I(j w_m)| = w_m^-alpha for a model carrying s^s_exponent.
Gain matched_gain(const std::vector<FactorPair>& f, double alpha, int s_exponent, double w_m, int k) {
    const double log_k = (-alpha - s_exponent) * std::log(w_m) + log_abs_ratio(f, w_m, k, true);
    return Gain(std::exp(log_k));
}

void check_epsilon(const DesignSpec& spec) {
    if (!spec.epsilon) {
        throw Error(ErrorKind::Usage, "methods 3 and 4 require epsilon");
    }
    const auto [lower, upper] = epsilon_bounds(spec);
    const double eps = *spec.epsilon;
    if (!(std::isfinite(eps) && eps > lower && eps <= upper)) {
        throw EpsilonRangeError(eps, lower, upper);
    }
}

std::vector<FactorPair> piecewise_factors(const DesignSpec& spec) {
    const LogBand band(spec);
    const double a = spec.alpha;
    const double k = spec.k;
    const int n = spec.n;
    const bool low = spec.branch() == Branch::LowOrder;
    std::vector<FactorPair> out;
    out.reserve(static_cast<std::size_t>(n));

    for (int idx = 1; idx <= n; ++idx) {
        const double i = idx;
        FactorPair f;
        switch (spec.method) {
            case Method::TwoPointCrossing:
                if (low) {
                    f.pole = band.at((2 * i - 1 - a / k) / (2 * n));
                    f.zero = band.at((2 * i - 1 + a / k) / (2 * n));
                } else {
                    f.pole = band.at((2 * i - 1 + 1 / k - a / k) / (2 * n));
                    f.zero = band.at((2 * i - 1 - 1 / k + a / k) / (2 * n));
                }
                break;
            case Method::TwoPointTurning:
                if (low) {
                    const double span = (n - 1) + a / k;
                    f.pole = band.at((i - 1) / span);
                    f.zero = band.at(((i - 1) + a / k) / span);
                } else {
                    const double span = (n - 1) + 1 / k - a / k;
                    f.pole = band.at(((i - 1) + 1 / k - a / k) / span);
                    f.zero = band.at((i - 1) / span);
                }
                break;
            case Method::OnePointCrossing: {
                const double eps = *spec.epsilon;
                if (low) {
                    const double scale = eps / (20 * a * (k - a));
                    f.pole = std::pow(10.0, scale * (2 * k * i - k - a)) * spec.omega_l;
                    f.zero = std::pow(10.0, scale * (2 * k * i - k + a)) * spec.omega_l;
                } else {
                    const double scale = eps / (20 * (1 - a) * (k - 1 + a));
                    f.pole = std::pow(10.0, scale * (2 * k * i - k + 1 - a)) * spec.omega_l;
                    f.zero = std::pow(10.0, scale * (2 * k * i - k - 1 + a)) * spec.omega_l;
                }
                break;
            }
            case Method::OnePointTurning: {
                const double eps = *spec.epsilon;
                if (low) {
                    const double scale = eps / (10 * a * (k - a));
                    f.pole = std::pow(10.0, scale * (k * i - k)) * spec.omega_l;
                    f.zero = std::pow(10.0, scale * (k * i - k + a)) * spec.omega_l;
                } else {
                    const double scale = eps / (10 * (1 - a) * (k - 1 + a));
                    f.pole = std::pow(10.0, scale * (k * i - k + 1 - a)) * spec.omega_l;
                    f.zero = std::pow(10.0, scale * (k * i - k)) * spec.omega_l;
                }
                break;
            }
            default: throw Error(ErrorKind::Usage, "not a piecewise method");
        }
        out.push_back(f);
    }
    return out;
}

FactoredModel piecewise_integrator(const DesignSpec& spec) {
    if (spec.method == Method::OnePointCrossing || spec.method == Method::OnePointTurning) {
        check_epsilon(spec);
    }
    FactoredModel m;
    m.multiplicity = spec.k;
    m.s_exponent = spec.branch() == Branch::LowOrder ? 0 : -1;
    m.factors = piecewise_factors(spec);
    m.gain = matched_gain(m.factors, spec.alpha, m.s_exponent, spec.omega_m(), spec.k);
    return m;
}

struct BaselinePair {
    FactoredModel integrator;
    FactoredModel differentiator;
};

BaselinePair baseline_models(const DesignSpec& spec) {
    const LogBand band(spec);
    const double a = spec.alpha;
    const int n = spec.n;
    const double w_m = spec.omega_m();
    BaselinePair out;
    auto& I = out.integrator;
    auto& D = out.differentiator;

    switch (spec.method) {
        case Method::PoinotOustaloup:
            I.s_exponent = -1;
            I.multiplicity = 1;
            D.s_exponent = 0;
            D.multiplicity = 1;
            for (int idx = 1; idx <= n; ++idx) {
                const double i = idx;
                I.factors.push_back({band.at((i - 1) / (n - a)), band.at((i - a) / (n - a))});
                D.factors.push_back({band.at((2 * i - 1 - a) / (2 * n)), band.at((2 * i - 1 + a) / (2 * n))});
            }
            I.gain = Gain(std::exp(log_abs_ratio(I.factors, w_m, 1, true)));
            D.gain = Gain(std::pow(spec.omega_h, a));
            break;
        case Method::DoublePole:
            I.s_exponent = -1;
            I.multiplicity = 2;
            D.s_exponent = 0;
            D.multiplicity = 2;
            for (int idx = 1; idx <= n; ++idx) {
                const double i = idx;
                I.factors.push_back({band.at((4 * i - 3 + a) / (4 * n)), band.at((4 * i - 1 - a) / (4 * n))});
                D.factors.push_back({band.at((4 * i - 2 - a) / (4 * n)), band.at((4 * i - 2 + a) / (4 * n))});
            }
            I.gain = Gain(std::pow(spec.omega_h, 1 - a));
            D.gain = Gain(std::pow(spec.omega_h, a));
            break;
        case Method::Recursive:
            I.s_exponent = 0;
            I.multiplicity = 1;
            for (int idx = 1; idx <= n; ++idx) {
                const double i = idx;
                I.factors.push_back({band.at((2 * i - 1 + a) / (2 * n)), band.at((2 * i - 1 - a) / (2 * n))});
            }
            if (spec.literal_baseline_gain) {
                I.gain = Gain(std::exp(log_abs_ratio(I.factors, w_m, 1, false)));
            } else {
                I.gain = matched_gain(I.factors, a, 0, w_m, 1);
            }
            D = reciprocal(I);
            break;
        default: throw Error(ErrorKind::Usage, "not a baseline method");
    }
    return out;
}

}  // namespace

FactoredModel design_integrator(const DesignSpec& spec) {
    spec.validate();
    if (is_piecewise(spec.method)) return piecewise_integrator(spec);
    return baseline_models(spec).integrator;
}

DesignedPair design_pair(const DesignSpec& spec) {
    spec.validate();
    DesignedPair out;
    out.spec = spec;
    out.branch = spec.branch();
    if (is_piecewise(spec.method)) {
        out.integrator = piecewise_integrator(spec);
        out.differentiator = reciprocal(out.integrator);
    } else {
        auto models = baseline_models(spec);
        out.integrator = std::move(models.integrator);
        out.differentiator = std::move(models.differentiator);
    }
    return out;
}

FactoredModel design(const DesignSpec& spec, OperatorKind kind) {
    if (kind == OperatorKind::Integrator) return design_integrator(spec);
    return design_pair(spec).differentiator;
}

std::pair<double, double> epsilon_bounds(const DesignSpec& spec) {
    spec.validate();
    const double nu = spec.nu();
    const double k = spec.k;
    const double n = spec.n;
    const double decades = std::log10(spec.omega_h / spec.omega_l);
    const double shape = nu * (k - nu);
    switch (spec.method) {
        case Method::OnePointCrossing:
            return {20 * shape / (2 * k * n + k + nu) * decades, 20 * shape / (2 * k * n - k + nu) * decades};
        case Method::OnePointTurning:
            return {10 * shape / (k * n + nu) * decades, 10 * shape / (k * n - k + nu) * decades};
        default: throw Error(ErrorKind::Usage, "epsilon bounds exist only for methods 3 and 4");
    }
}

double special_epsilon(const DesignSpec& spec) {
    spec.validate();
    const double nu = spec.nu();
    const double k = spec.k;
    const double n = spec.n;
    const double decades = std::log10(spec.omega_h / spec.omega_l);
    switch (spec.method) {
        case Method::OnePointCrossing: return 10 * nu * (k - nu) / (k * n) * decades;
        case Method::OnePointTurning: return epsilon_bounds(spec).second;
        default: throw Error(ErrorKind::Usage, "special epsilon exists only for methods 3 and 4");
    }
}

DesignSpec with_default_epsilon(DesignSpec spec) {
    if (!spec.epsilon &&
        (spec.method == Method::OnePointCrossing || spec.method == Method::OnePointTurning)) {
        spec.epsilon = special_epsilon(spec);
    }
    return spec;
}

}  // namespace fracapprox
