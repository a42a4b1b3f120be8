#include "fracapprox/zpk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "fracapprox/errors.hpp"

namespace fracapprox {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

double Gain::log() const { return std::log(num_) - std::log(den_); }

void FactoredModel::validate() const {
    if (!positive_finite(gain.numerator()) || !positive_finite(gain.denominator()) ||
        !positive_finite(gain.value())) {
        throw Error(ErrorKind::Domain, "model gain must be finite and > 0");
    }
    if (s_exponent < -1 || s_exponent > 1) {
        throw Error(ErrorKind::UnsupportedShape, "model s exponent must be -1, 0 or 1");
    }
    if (multiplicity < 1) {
        throw Error(ErrorKind::Domain, "model multiplicity must be >= 1");
    }
    for (const auto& f : factors) {
        if (!positive_finite(f.zero) || !positive_finite(f.pole)) {
            throw Error(ErrorKind::Domain, "model zeros and poles must be finite and > 0");
        }
    }
}

ComplexResponse eval_response(const FactoredModel& model, double omega) {
    if (!positive_finite(omega)) {
        throw Error(ErrorKind::Domain, "frequency must be finite and > 0");
    }
    // Natural-log magnitude and radian phase, summed factor by factor.
    double log_mag = model.gain.log() + model.s_exponent * std::log(omega);
    double phase = model.s_exponent * (std::numbers::pi / 2.0);
    const double k = model.multiplicity;
    for (const auto& f : model.factors) {
        log_mag += k * (std::log(std::hypot(omega, f.zero)) - std::log(std::hypot(omega, f.pole)));
        phase += k * (std::atan2(omega, f.zero) - std::atan2(omega, f.pole));
    }
    ComplexResponse r;
    r.value = std::polar(std::exp(log_mag), phase);
    r.magnitude_db = 20.0 * log_mag / std::numbers::ln10;
    r.phase_deg = phase * (180.0 / std::numbers::pi);
    return r;
}

std::complex<double> eval_direct(const FactoredModel& model, double omega) {
    if (!positive_finite(omega)) {
        throw Error(ErrorKind::Domain, "frequency must be finite and > 0");
    }
    const std::complex<double> s(0.0, omega);
    std::complex<double> v = model.gain.value();
    if (model.s_exponent > 0) {
        for (int i = 0; i < model.s_exponent; ++i) v *= s;
    } else {
        for (int i = 0; i < -model.s_exponent; ++i) v /= s;
    }
    for (const auto& f : model.factors) {
        const auto ratio = (s + f.zero) / (s + f.pole);
        for (int i = 0; i < model.multiplicity; ++i) v *= ratio;
    }
    return v;
}

namespace {

// For each zero of `from`, the index of the pole of `against` it cancels.
void match_zeros_to_poles(const FactoredModel& from, const FactoredModel& against, double rel_tol,
                          std::vector<bool>& zero_cancelled, std::vector<bool>& pole_cancelled) {
    for (std::size_t i = 0; i < from.factors.size(); ++i) {
        const double z = from.factors[i].zero;
        std::optional<std::size_t> best;
        double best_dist = 0.0;
        for (std::size_t j = 0; j < against.factors.size(); ++j) {
            if (pole_cancelled[j]) continue;
            const double p = against.factors[j].pole;
            const double dist = std::abs(z - p);
            if (dist > rel_tol * std::max(z, p)) continue;
            // strict < keeps the lower index on ties
            if (!best || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best) {
            zero_cancelled[i] = true;
            pole_cancelled[*best] = true;
        }
    }
}

}  // namespace

FactoredModel multiply_and_simplify(const FactoredModel& a, const FactoredModel& b, double rel_tol) {
    if (!(rel_tol >= 0.0 && rel_tol <= 1e-6)) {
        throw Error(ErrorKind::Usage, "cancellation tolerance must lie in [0, 1e-6]");
    }
    a.validate();
    b.validate();
    if (a.multiplicity != b.multiplicity) {
        throw Error(ErrorKind::Shape, "cannot compose models with different multiplicities (" +
                                          std::to_string(a.multiplicity) + " vs " +
                                          std::to_string(b.multiplicity) + ")");
    }
    const int s_exp = a.s_exponent + b.s_exponent;
    if (s_exp < -1 || s_exp > 1) {
        throw Error(ErrorKind::UnsupportedShape,
                    "composite has s^" + std::to_string(s_exp) + ", outside {-1, 0, 1}");
    }

    std::vector<bool> a_zero(a.factors.size(), false), a_pole(a.factors.size(), false);
    std::vector<bool> b_zero(b.factors.size(), false), b_pole(b.factors.size(), false);
    match_zeros_to_poles(a, b, rel_tol, a_zero, b_pole);
    match_zeros_to_poles(b, a, rel_tol, b_zero, a_pole);

    FactoredModel out;
    out.gain = a.gain * b.gain;
    out.s_exponent = s_exp;
    out.multiplicity = a.multiplicity;

    std::vector<double> orphan_zeros, orphan_poles;
    auto collect = [&](const FactoredModel& m, const std::vector<bool>& zc, const std::vector<bool>& pc) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const auto& f = m.factors[i];
            if (!zc[i] && !pc[i]) {
                out.factors.push_back(f);
            } else if (!zc[i]) {
                orphan_zeros.push_back(f.zero);
            } else if (!pc[i]) {
                orphan_poles.push_back(f.pole);
            }
        }
    };
    collect(a, a_zero, a_pole);
    collect(b, b_zero, b_pole);

    std::sort(orphan_zeros.begin(), orphan_zeros.end());
    std::sort(orphan_poles.begin(), orphan_poles.end());
    for (std::size_t i = 0; i < orphan_zeros.size(); ++i) {
        out.factors.push_back({orphan_zeros[i], orphan_poles[i]});
    }
    return out;
}

FactoredModel reciprocal(const FactoredModel& model) {
    model.validate();
    FactoredModel out;
    out.gain = model.gain.inverse();
    out.s_exponent = -model.s_exponent;
    out.multiplicity = model.multiplicity;
    out.factors.reserve(model.factors.size());
    for (const auto& f : model.factors) {
        out.factors.push_back({f.pole, f.zero});
    }
    return out;
}

}  // namespace fracapprox
