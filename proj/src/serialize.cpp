#include "fracapprox/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace fracapprox {

using nlohmann::json;

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return std::string(buf + 1);
    return buf;
}

double round_to_precision(double v, int precision) {
    return std::strtod(format_number(v, precision).c_str(), nullptr);
}

const char* to_string(Experiment e) {
    switch (e) {
        case Experiment::X: return "x";
        case Experiment::Y: return "y";
        case Experiment::Z: return "z";
    }
    return "?";
}

const char* to_string(OperatorKind k) { return k == OperatorKind::Integrator ? "integrator" : "differentiator"; }

namespace {

json model_json(const FactoredModel& m, int precision) {
    json factors = json::array();
    for (const auto& f : m.factors) {
        factors.push_back({{"zero", round_to_precision(f.zero, precision)},
                           {"pole", round_to_precision(f.pole, precision)}});
    }
    return {{"gain", round_to_precision(m.gain.value(), precision)},
            {"s_exponent", m.s_exponent},
            {"multiplicity", m.multiplicity},
            {"factors", std::move(factors)}};
}

}  // namespace

std::string model_to_json(const FactoredModel& model, int precision) {
    return model_json(model, precision).dump(2) + "\n";
}

std::string design_to_json(const DesignSpec& spec, OperatorKind kind, const FactoredModel& model, int precision) {
    auto r = [precision](double v) { return round_to_precision(v, precision); };
    json doc = {
        {"method", to_index(spec.method)},
        {"kind", to_string(kind)},
        {"alpha", r(spec.alpha)},
        {"branch", spec.branch() == Branch::LowOrder ? "low" : "high"},
        {"omega_l", r(spec.omega_l)},
        {"omega_h", r(spec.omega_h)},
        {"omega_m", r(spec.omega_m())},
        {"n", spec.n},
        {"k", spec.effective_k()},
    };
    if (spec.method == Method::OnePointCrossing || spec.method == Method::OnePointTurning) {
        const auto [lo, hi] = epsilon_bounds(spec);
        doc["epsilon"] = spec.epsilon ? json(r(*spec.epsilon)) : json(nullptr);
        doc["epsilon_bounds"] = {r(lo), r(hi)};
        doc["epsilon_special"] = r(special_epsilon(spec));
    }
    doc["model"] = model_json(model, precision);
    return doc.dump(2) + "\n";
}

std::string design_to_text(const DesignSpec& spec, OperatorKind kind, const FactoredModel& model, int precision) {
    auto f = [precision](double v) { return format_number(v, precision); };
    std::ostringstream os;
    os << "method " << to_index(spec.method) << ' ' << to_string(kind) << " alpha " << f(spec.alpha) << " ("
       << (spec.branch() == Branch::LowOrder ? "low" : "high") << " branch)\n";
    os << "band [" << f(spec.omega_l) << ", " << f(spec.omega_h) << "] rad/s, omega_m " << f(spec.omega_m())
       << ", n " << spec.n << ", k " << model.multiplicity << '\n';
    if (spec.epsilon && (spec.method == Method::OnePointCrossing || spec.method == Method::OnePointTurning)) {
        const auto [lo, hi] = epsilon_bounds(spec);
        os << "epsilon " << f(*spec.epsilon) << " dB, admissible (" << f(lo) << ", " << f(hi) << "]\n";
    }
    os << "gain " << f(model.gain.value()) << '\n';
    os << "s_exponent " << model.s_exponent << '\n';
    os << "i zero pole\n";
    for (std::size_t i = 0; i < model.factors.size(); ++i) {
        os << i + 1 << ' ' << f(model.factors[i].zero) << ' ' << f(model.factors[i].pole) << '\n';
    }
    return os.str();
}

std::string bode_csv(std::span<const BodeRow> rows, int precision) {
    std::ostringstream os;
    os << "omega,mag_db_model,mag_db_exact,phase_deg_model,phase_deg_exact,E_M,E_P\n";
    for (const auto& r : rows) {
        os << format_number(r.omega, precision) << ',' << format_number(r.model_db, precision) << ','
           << format_number(r.exact_db, precision) << ',' << format_number(r.model_deg, precision) << ','
           << format_number(r.exact_deg, precision) << ',' << format_number(r.exact_db - r.model_db, precision)
           << ',' << format_number(r.exact_deg - r.model_deg, precision) << '\n';
    }
    return os.str();
}

std::string verdict_to_json(const IdentityVerdict& v, int precision) {
    json doc = {{"condition", to_string(v.condition)},
                {"structural_pass", v.structural_pass},
                {"numeric_max_deviation", round_to_precision(v.numeric_max_deviation, precision)}};
    doc["simplified"] = v.simplified ? model_json(*v.simplified, precision) : json(nullptr);
    doc["note"] = v.note;
    return doc.dump(2) + "\n";
}

std::string partial_fractions_to_json(const PartialFractionForm& pf, int precision) {
    json terms = json::array();
    for (const auto& t : pf.terms) {
        json residues = json::array();
        for (double r : t.residues) residues.push_back(round_to_precision(r, precision));
        terms.push_back({{"pole", round_to_precision(t.pole, precision)}, {"residues", std::move(residues)}});
    }
    json doc = {{"direct", round_to_precision(pf.direct, precision)},
                {"c0", round_to_precision(pf.c0, precision)},
                {"terms", std::move(terms)}};
    return doc.dump(2) + "\n";
}

std::string simulation_csv(const SimulationResult& r, int precision, bool header, const char* label) {
    std::ostringstream os;
    if (header) os << (label ? "experiment," : "") << "t,u,exact,approx,error\n";
    for (std::size_t j = 0; j < r.t.size(); ++j) {
        if (label) os << label << ',';
        os << format_number(r.t[j], precision) << ',' << format_number(r.u[j], precision) << ','
           << format_number(r.exact[j], precision) << ',' << format_number(r.approx[j], precision) << ','
           << format_number(r.error[j], precision) << '\n';
    }
    return os.str();
}

}  // namespace fracapprox
