#include "fracapprox/timedomain.hpp"

#include <cmath>
#include <utility>

#include "fracapprox/analysis.hpp"
#include "fracapprox/errors.hpp"

namespace fracapprox {

DiscreteFilter discretize(const FactoredModel& model, double h) {
    if (!(std::isfinite(h) && h > 0.0)) throw Error(ErrorKind::Domain, "sample period must be > 0");
    model.validate();

    DiscreteFilter f;
    f.h = h;
    switch (model.s_exponent) {
        case -1: f.head = HeadKind::TrapezoidIntegrator; break;
        case 1: f.head = HeadKind::CentralDifferenceDifferentiator; break;
        default: f.head = HeadKind::Passthrough; break;
    }

    const double c = 2.0 / h;
    for (const auto& pair : model.factors) {
        const double den = c + pair.pole;
        const DigitalSection sec{(c + pair.zero) / den, (pair.zero - c) / den, (pair.pole - c) / den};
        for (int i = 0; i < model.multiplicity; ++i) f.sections.push_back(sec);
    }

    const double gain = model.gain.value();
    if (gain != 1.0) {
        if (f.sections.empty()) {
            f.sections.push_back({gain, 0.0, 0.0});
        } else {
            f.sections.front().b0 *= gain;
            f.sections.front().b1 *= gain;
        }
    }
    return f;
}

std::vector<double> simulate_filter(const DiscreteFilter& filter, std::span<const double> input,
                                    const std::optional<Lookahead>& lookahead) {
    const std::size_t n = input.size();
    std::vector<double> y(input.begin(), input.end());

    switch (filter.head) {
        case HeadKind::Passthrough: break;
        case HeadKind::TrapezoidIntegrator: {
            double acc = 0.0;
            double prev = 0.0;
            const double half = filter.h / 2.0;
            for (std::size_t t = 0; t < n; ++t) {
                acc += half * (input[t] + prev);
                prev = input[t];
                y[t] = acc;
            }
            break;
        }
        case HeadKind::CentralDifferenceDifferentiator: {
            if (!lookahead) {
                throw Error(ErrorKind::Usage, "central-difference head needs lookahead samples");
            }
            const double scale = 1.0 / (2.0 * filter.h);
            for (std::size_t t = 0; t < n; ++t) {
                const double before = t == 0 ? lookahead->before : input[t - 1];
                const double after = t + 1 == n ? lookahead->after : input[t + 1];
                y[t] = (after - before) * scale;
            }
            break;
        }
    }

    for (const auto& sec : filter.sections) {
        double u_prev = 0.0;
        double y_prev = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double u = y[t];
            const double out = sec.b0 * u + sec.b1 * u_prev - sec.a1 * y_prev;
            u_prev = u;
            y_prev = out;
            y[t] = out;
        }
    }
    return y;
}

namespace {

struct Operands {
    FactoredModel first;
    FactoredModel second;
};

Operands operands_for(Experiment which, const DesignSpec& spec) {
    DesignSpec companion = spec;
    companion.alpha = 1.0 - spec.alpha;
    const auto primary = design_pair(spec);
    switch (which) {
        case Experiment::X: return {primary.integrator, design_pair(companion).integrator};
        case Experiment::Y: return {primary.differentiator, primary.integrator};
        case Experiment::Z: return {primary.differentiator, design_pair(companion).differentiator};
    }
    throw Error(ErrorKind::Usage, "unknown experiment");
}

double exact_output(Experiment which, double t) {
    switch (which) {
        case Experiment::X: return 1.0 - std::cos(t);
        case Experiment::Y: return std::sin(t);
        case Experiment::Z: return std::cos(t);
    }
    return 0.0;
}

std::vector<double> run_cascade(const FactoredModel& a, const FactoredModel& b, double h,
                                std::span<const double> u, const Lookahead& la) {
    DiscreteFilter fa = discretize(a, h);
    DiscreteFilter fb = discretize(b, h);
    // Only the first stage sees the analytic input, so a differentiator head goes first.
    if (fb.head == HeadKind::CentralDifferenceDifferentiator) std::swap(fa, fb);
    if (fb.head == HeadKind::CentralDifferenceDifferentiator) {
        throw Error(ErrorKind::Usage, "cascade with two differentiator heads is not supported");
    }
    const auto mid = simulate_filter(fa, u, la);
    return simulate_filter(fb, mid);
}

}  // namespace

SimulationResult run_experiment(Experiment which, const DesignSpec& spec_in, const ExperimentOptions& options) {
    if (!(std::isfinite(options.h) && options.h > 0.0)) throw Error(ErrorKind::Domain, "h must be > 0");
    if (!(std::isfinite(options.horizon) && options.horizon > 0.0)) {
        throw Error(ErrorKind::Domain, "horizon must be > 0");
    }
    const DesignSpec spec = with_default_epsilon(spec_in);
    const auto ops = operands_for(which, spec);

    const double h = options.h;
    const auto samples = static_cast<std::size_t>(std::llround(options.horizon / h)) + 1;
    SimulationResult r;
    r.t.resize(samples);
    r.u.resize(samples);
    r.exact.resize(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double t = static_cast<double>(j) * h;
        r.t[j] = t;
        r.u[j] = std::sin(t);
        r.exact[j] = exact_output(which, t);
    }
    const Lookahead la{std::sin(-h), std::sin(static_cast<double>(samples) * h)};

    bool cascade = options.cascade;
    FactoredModel composite;
    if (!cascade) {
        try {
            composite = multiply_and_simplify(ops.first, ops.second);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnsupportedShape) throw;
            cascade = true;
        }
    }
    if (cascade) {
        r.approx = run_cascade(ops.first, ops.second, h, r.u, la);
    } else {
        r.approx = simulate_filter(discretize(composite, h), r.u, la);
    }

    r.error.resize(samples);
    for (std::size_t j = 0; j < samples; ++j) r.error[j] = r.exact[j] - r.approx[j];
    r.inf_norm = inf_norm(r.error);
    r.two_norm = two_norm(r.error);
    return r;
}

std::array<SimulationResult, 3> identity_experiment(const DesignSpec& spec, const ExperimentOptions& options) {
    return {run_experiment(Experiment::X, spec, options), run_experiment(Experiment::Y, spec, options),
            run_experiment(Experiment::Z, spec, options)};
}

}  // namespace fracapprox
