#include "fracapprox/fracapprox.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracapprox/analysis.hpp"
#include "fracapprox/designers.hpp"
#include "fracapprox/errors.hpp"
#include "fracapprox/identity.hpp"
#include "fracapprox/rational_forms.hpp"
#include "fracapprox/serialize.hpp"
#include "fracapprox/timedomain.hpp"
#include "fracapprox/zpk.hpp"

using namespace fracapprox;

struct fa_model {
    FactoredModel value;
};
struct fa_verdict {
    IdentityVerdict value;
};
struct fa_pf {
    PartialFractionForm value;
};
struct fa_rc {
    RcNetwork value;
};
struct fa_filter {
    DiscreteFilter value;
};
struct fa_experiment {
    std::array<SimulationResult, 3> value;
};

namespace {

thread_local std::string g_last_error;

fa_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return FA_ERR_DOMAIN;
        case ErrorKind::Range: return FA_ERR_RANGE;
        case ErrorKind::Shape: return FA_ERR_SHAPE;
        case ErrorKind::UnsupportedShape: return FA_ERR_UNSUPPORTED_SHAPE;
        case ErrorKind::Usage: return FA_ERR_USAGE;
        case ErrorKind::NotRcRealizable: return FA_ERR_NOT_RC_REALIZABLE;
        case ErrorKind::Conditioning: return FA_ERR_CONDITIONING;
    }
    return FA_ERR_INTERNAL;
}

struct NullArgument {};

fa_status fail(fa_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class F>
fa_status guarded(F&& body) {
    try {
        body();
        return FA_OK;
    } catch (const NullArgument&) {
        return fail(FA_ERR_NULL_ARGUMENT, "null argument");
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(FA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FA_ERR_INTERNAL, "unknown failure");
    }
}

template <class... Ptrs>
void require(const Ptrs*... ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

DesignSpec to_spec(const fa_design_spec& c) {
    DesignSpec s;
    s.method = method_from_index(c.method);
    s.alpha = c.alpha;
    s.omega_l = c.omega_l;
    s.omega_h = c.omega_h;
    s.n = c.n;
    s.k = c.k;
    if (c.has_epsilon) s.epsilon = c.epsilon;
    s.literal_baseline_gain = c.literal_baseline_gain != 0;
    return s;
}

OperatorKind to_kind(fa_kind k) {
    if (k != FA_INTEGRATOR && k != FA_DIFFERENTIATOR) throw Error(ErrorKind::Usage, "unknown operator kind");
    return k == FA_INTEGRATOR ? OperatorKind::Integrator : OperatorKind::Differentiator;
}

int checked_precision(int p) {
    if (p < 1 || p > 17) throw Error(ErrorKind::Usage, "precision must be 1..17");
    return p;
}

void fill(fa_response* out, const ComplexResponse& r) {
    out->re = r.value.real();
    out->im = r.value.imag();
    out->magnitude_db = r.magnitude_db;
    out->phase_deg = r.phase_deg;
}

void fill(fa_norms* out, const ErrorNorms& n) {
    out->magnitude_inf = n.magnitude_inf;
    out->magnitude_2 = n.magnitude_2;
    out->phase_inf = n.phase_inf;
    out->phase_2 = n.phase_2;
}

template <class Handle, class T>
Handle* wrap(T&& value) {
    return new Handle{std::forward<T>(value)};
}

}  // namespace

extern "C" {

const char* fa_version(void) { return "1.0.0"; }

const char* fa_last_error(void) { return g_last_error.c_str(); }

void fa_string_free(char* s) { std::free(s); }

void fa_design_spec_init(fa_design_spec* spec) {
    if (!spec) return;
    *spec = fa_design_spec{1, 0.5, 1e-3, 1e3, 10, 2, 0, 0.0, 0};
}

void fa_sweep_settings_init(fa_sweep_settings* settings) {
    if (!settings) return;
    const SweepSettings d;
    *settings = fa_sweep_settings{d.omega_l, d.omega_h, d.n, d.k, d.points, 0};
}

void fa_experiment_options_init(fa_experiment_options* options) {
    if (!options) return;
    const ExperimentOptions d;
    *options = fa_experiment_options{d.h, d.horizon, d.cascade ? 1 : 0};
}

/* ---- models ---- */

fa_status fa_model_create(double gain, int s_exponent, int multiplicity, const double* zeros, const double* poles,
                          size_t count, fa_model** out) {
    return guarded([&] {
        require(out);
        if (count > 0) require(zeros, poles);
        FactoredModel m;
        m.gain = Gain(gain);
        m.s_exponent = s_exponent;
        m.multiplicity = multiplicity;
        for (size_t i = 0; i < count; ++i) m.factors.push_back({zeros[i], poles[i]});
        m.validate();
        *out = wrap<fa_model>(std::move(m));
    });
}

fa_status fa_model_clone(const fa_model* model, fa_model** out) {
    return guarded([&] {
        require(model, out);
        *out = wrap<fa_model>(model->value);
    });
}

void fa_model_free(fa_model* model) { delete model; }

double fa_model_gain(const fa_model* model) { return model ? model->value.gain.value() : 0.0; }
int fa_model_s_exponent(const fa_model* model) { return model ? model->value.s_exponent : 0; }
int fa_model_multiplicity(const fa_model* model) { return model ? model->value.multiplicity : 0; }
size_t fa_model_factor_count(const fa_model* model) { return model ? model->value.factors.size() : 0; }

fa_status fa_model_factor(const fa_model* model, size_t index, double* zero, double* pole) {
    return guarded([&] {
        require(model, zero, pole);
        if (index >= model->value.factors.size()) throw Error(ErrorKind::Usage, "factor index out of range");
        *zero = model->value.factors[index].zero;
        *pole = model->value.factors[index].pole;
    });
}

int fa_model_equal(const fa_model* a, const fa_model* b) { return a && b && a->value == b->value ? 1 : 0; }

fa_status fa_model_eval(const fa_model* model, double omega, fa_response* out) {
    return guarded([&] {
        require(model, out);
        fill(out, eval_response(model->value, omega));
    });
}

fa_status fa_model_multiply(const fa_model* a, const fa_model* b, double rel_tol, fa_model** out) {
    return guarded([&] {
        require(a, b, out);
        *out = wrap<fa_model>(multiply_and_simplify(a->value, b->value, rel_tol));
    });
}

fa_status fa_model_reciprocal(const fa_model* model, fa_model** out) {
    return guarded([&] {
        require(model, out);
        *out = wrap<fa_model>(reciprocal(model->value));
    });
}

fa_status fa_model_to_json(const fa_model* model, int precision, char** out) {
    return guarded([&] {
        require(model, out);
        *out = dup_string(model_to_json(model->value, checked_precision(precision)));
    });
}

/* ---- designers ---- */

fa_status fa_design(const fa_design_spec* spec, fa_kind kind, fa_model** out) {
    return guarded([&] {
        require(spec, out);
        *out = wrap<fa_model>(design(to_spec(*spec), to_kind(kind)));
    });
}

fa_status fa_design_pair(const fa_design_spec* spec, fa_model** integrator, fa_model** differentiator,
                         int* high_branch) {
    return guarded([&] {
        require(spec, integrator, differentiator);
        auto pair = design_pair(to_spec(*spec));
        auto i = std::unique_ptr<fa_model>(wrap<fa_model>(std::move(pair.integrator)));
        auto d = std::unique_ptr<fa_model>(wrap<fa_model>(std::move(pair.differentiator)));
        *integrator = i.release();
        *differentiator = d.release();
        if (high_branch) *high_branch = pair.branch == Branch::HighOrder ? 1 : 0;
    });
}

fa_status fa_epsilon_bounds(const fa_design_spec* spec, double* lower, double* upper) {
    return guarded([&] {
        require(spec, lower, upper);
        const auto [lo, hi] = epsilon_bounds(to_spec(*spec));
        *lower = lo;
        *upper = hi;
    });
}

fa_status fa_special_epsilon(const fa_design_spec* spec, double* out) {
    return guarded([&] {
        require(spec, out);
        *out = special_epsilon(to_spec(*spec));
    });
}

fa_status fa_design_report(const fa_design_spec* spec, fa_kind kind, int as_json, int precision, char** out) {
    return guarded([&] {
        require(spec, out);
        const auto s = to_spec(*spec);
        const auto k = to_kind(kind);
        const auto model = design(s, k);
        const int p = checked_precision(precision);
        *out = dup_string(as_json ? design_to_json(s, k, model, p) : design_to_text(s, k, model, p));
    });
}

/* ---- frequency domain ---- */

fa_status fa_exact_response(double alpha, fa_kind kind, double omega, fa_response* out) {
    return guarded([&] {
        require(out);
        fill(out, exact_response(alpha, to_kind(kind), omega));
    });
}

fa_status fa_error_norms(const fa_model* model, double alpha, fa_kind kind, double omega_l, double omega_h,
                         int points, fa_norms* out) {
    return guarded([&] {
        require(model, out);
        const auto grid = make_grid(omega_l, omega_h, points);
        fill(out, error_series(model->value, alpha, to_kind(kind), grid).norms);
    });
}

fa_status fa_bode_csv(const fa_model* model, double alpha, fa_kind kind, double omega_l, double omega_h, int points,
                      int precision, char** out) {
    return guarded([&] {
        require(model, out);
        const auto grid = make_grid(omega_l, omega_h, points);
        const auto rows = bode_rows(model->value, alpha, to_kind(kind), grid);
        *out = dup_string(bode_csv(rows, checked_precision(precision)));
    });
}

fa_status fa_sweep_table(int method, fa_kind kind, const double* alphas, size_t count,
                         const fa_sweep_settings* settings, fa_norms* out) {
    return guarded([&] {
        require(out);
        if (count > 0) require(alphas);
        SweepSettings s;
        if (settings) {
            s.omega_l = settings->omega_l;
            s.omega_h = settings->omega_h;
            s.n = settings->n;
            s.k = settings->k;
            s.points = settings->points;
            s.aggregation = settings->concatenated ? Aggregation::Concatenated : Aggregation::PerAlphaMax;
        }
        const std::vector<double> a(alphas, alphas + count);
        fill(out, sweep_table(method_from_index(method), to_kind(kind), a, s));
    });
}

/* ---- identities ---- */

fa_status fa_check_identity(fa_condition condition, const fa_design_spec* spec, fa_verdict** out) {
    return guarded([&] {
        require(spec, out);
        if (condition < FA_CONDITION_I || condition > FA_CONDITION_III) {
            throw Error(ErrorKind::Usage, "condition must be 1..3");
        }
        *out = wrap<fa_verdict>(check_identity(static_cast<Condition>(condition), to_spec(*spec)));
    });
}

void fa_verdict_free(fa_verdict* verdict) { delete verdict; }

int fa_verdict_structural_pass(const fa_verdict* verdict) {
    return verdict && verdict->value.structural_pass ? 1 : 0;
}

double fa_verdict_deviation(const fa_verdict* verdict) {
    return verdict ? verdict->value.numeric_max_deviation : 0.0;
}

fa_status fa_verdict_to_json(const fa_verdict* verdict, int precision, char** out) {
    return guarded([&] {
        require(verdict, out);
        *out = dup_string(verdict_to_json(verdict->value, checked_precision(precision)));
    });
}

fa_status fa_associativity_table(const fa_design_spec* base, const double* alphas, size_t count, int out[21]) {
    return guarded([&] {
        require(base, out);
        if (count > 0) require(alphas);
        DesignSpec s;
        s.omega_l = base->omega_l;
        s.omega_h = base->omega_h;
        s.n = base->n;
        s.k = base->k;
        s.literal_baseline_gain = base->literal_baseline_gain != 0;
        const std::vector<double> a(alphas, alphas + count);
        const auto table = associativity_table(s, a);
        for (std::size_t m = 0; m < 7; ++m) {
            for (std::size_t c = 0; c < 3; ++c) out[m * 3 + c] = table[m][c] ? 1 : 0;
        }
    });
}

/* ---- partial fractions / RC ---- */

fa_status fa_partial_fractions(const fa_model* model, fa_pf** out) {
    return guarded([&] {
        require(model, out);
        *out = wrap<fa_pf>(to_partial_fractions(model->value));
    });
}

void fa_pf_free(fa_pf* pf) { delete pf; }
double fa_pf_direct(const fa_pf* pf) { return pf ? pf->value.direct : 0.0; }
double fa_pf_c0(const fa_pf* pf) { return pf ? pf->value.c0 : 0.0; }
size_t fa_pf_term_count(const fa_pf* pf) { return pf ? pf->value.terms.size() : 0; }

fa_status fa_pf_term(const fa_pf* pf, size_t term, size_t order, double* pole, double* residue) {
    return guarded([&] {
        require(pf, pole, residue);
        if (term >= pf->value.terms.size()) throw Error(ErrorKind::Usage, "term index out of range");
        const auto& t = pf->value.terms[term];
        if (order < 1 || order > t.residues.size()) throw Error(ErrorKind::Usage, "residue order out of range");
        *pole = t.pole;
        *residue = t.residues[order - 1];
    });
}

fa_status fa_pf_eval(const fa_pf* pf, double omega, double* re, double* im) {
    return guarded([&] {
        require(pf, re, im);
        if (!(omega > 0.0)) throw Error(ErrorKind::Domain, "frequency must be > 0");
        const auto v = eval_partial_fractions(pf->value, omega);
        *re = v.real();
        *im = v.imag();
    });
}

fa_status fa_pf_to_json(const fa_pf* pf, int precision, char** out) {
    return guarded([&] {
        require(pf, out);
        *out = dup_string(partial_fractions_to_json(pf->value, checked_precision(precision)));
    });
}

fa_status fa_synthesize_rc(const fa_pf* pf, fa_rc** out) {
    return guarded([&] {
        require(pf, out);
        *out = wrap<fa_rc>(synthesize_rc(pf->value));
    });
}

void fa_rc_free(fa_rc* net) { delete net; }
size_t fa_rc_element_count(const fa_rc* net) { return net ? net->value.elements.size() : 0; }

fa_status fa_rc_impedance(const fa_rc* net, double omega, double* re, double* im) {
    return guarded([&] {
        require(net, re, im);
        if (!(omega > 0.0)) throw Error(ErrorKind::Domain, "frequency must be > 0");
        const auto z = impedance(net->value, omega);
        *re = z.real();
        *im = z.imag();
    });
}

fa_status fa_rc_export(const fa_rc* net, fa_netlist_format format, const fa_netlist_meta* meta, char** out) {
    return guarded([&] {
        require(net, out);
        if (format != FA_NETLIST_SPICE && format != FA_NETLIST_JSON) {
            throw Error(ErrorKind::Usage, "unknown netlist format");
        }
        std::optional<NetlistMeta> m;
        if (meta) m = NetlistMeta{meta->method, meta->alpha, meta->omega_l, meta->omega_h, meta->n};
        *out = dup_string(
            export_netlist(net->value, format == FA_NETLIST_SPICE ? NetlistFormat::Spice : NetlistFormat::Json, m));
    });
}

/* ---- time domain ---- */

fa_status fa_discretize(const fa_model* model, double h, fa_filter** out) {
    return guarded([&] {
        require(model, out);
        *out = wrap<fa_filter>(discretize(model->value, h));
    });
}

void fa_filter_free(fa_filter* filter) { delete filter; }
size_t fa_filter_section_count(const fa_filter* filter) { return filter ? filter->value.sections.size() : 0; }
int fa_filter_head(const fa_filter* filter) { return filter ? static_cast<int>(filter->value.head) : 0; }

fa_status fa_filter_section(const fa_filter* filter, size_t index, double* b0, double* b1, double* a1) {
    return guarded([&] {
        require(filter, b0, b1, a1);
        if (index >= filter->value.sections.size()) throw Error(ErrorKind::Usage, "section index out of range");
        const auto& s = filter->value.sections[index];
        *b0 = s.b0;
        *b1 = s.b1;
        *a1 = s.a1;
    });
}

fa_status fa_filter_simulate(const fa_filter* filter, const double* input, size_t count, int has_lookahead,
                             double before, double after, double* output) {
    return guarded([&] {
        require(filter);
        if (count > 0) require(input, output);
        std::optional<Lookahead> la;
        if (has_lookahead) la = Lookahead{before, after};
        const auto y = simulate_filter(filter->value, std::span<const double>(input, count), la);
        std::copy(y.begin(), y.end(), output);
    });
}

fa_status fa_identity_experiment(const fa_design_spec* spec, const fa_experiment_options* options,
                                 fa_experiment** out) {
    return guarded([&] {
        require(spec, out);
        ExperimentOptions o;
        if (options) {
            o.h = options->h;
            o.horizon = options->horizon;
            o.cascade = options->cascade != 0;
        }
        *out = wrap<fa_experiment>(identity_experiment(to_spec(*spec), o));
    });
}

void fa_experiment_free(fa_experiment* experiment) { delete experiment; }

size_t fa_experiment_samples(const fa_experiment* experiment) {
    return experiment ? experiment->value[0].t.size() : 0;
}

fa_status fa_experiment_norms(const fa_experiment* experiment, fa_experiment_id which, double* inf_norm_out,
                              double* two_norm_out) {
    return guarded([&] {
        require(experiment, inf_norm_out, two_norm_out);
        if (which < FA_EXPERIMENT_X || which > FA_EXPERIMENT_Z) throw Error(ErrorKind::Usage, "unknown experiment");
        const auto& r = experiment->value[static_cast<std::size_t>(which)];
        *inf_norm_out = r.inf_norm;
        *two_norm_out = r.two_norm;
    });
}

fa_status fa_experiment_csv(const fa_experiment* experiment, int which, int precision, char** out) {
    return guarded([&] {
        require(experiment, out);
        const int p = checked_precision(precision);
        if (which == -1) {
            std::string csv;
            for (std::size_t i = 0; i < 3; ++i) {
                csv += simulation_csv(experiment->value[i], p, i == 0, to_string(static_cast<Experiment>(i)));
            }
            *out = dup_string(csv);
            return;
        }
        if (which < 0 || which > 2) throw Error(ErrorKind::Usage, "unknown experiment");
        *out = dup_string(simulation_csv(experiment->value[static_cast<std::size_t>(which)], p));
    });
}

}  // extern "C"
