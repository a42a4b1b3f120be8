// Command-line front end over the fracapprox C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fracapprox/fracapprox.h"

namespace {

enum ExitCode { kOk = 0, kInvalidArgs = 2, kEpsilonRange = 3, kNotRealizable = 4 };

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(fa_status s) {
    switch (s) {
        case FA_OK: return kOk;
        case FA_ERR_RANGE: return kEpsilonRange;
        case FA_ERR_NOT_RC_REALIZABLE: return kNotRealizable;
        default: return kInvalidArgs;
    }
}

void check(fa_status s) {
    if (s != FA_OK) throw Failure{exit_code_for(s), fa_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using ModelPtr = std::unique_ptr<fa_model, Deleter<fa_model, fa_model_free>>;
using PfPtr = std::unique_ptr<fa_pf, Deleter<fa_pf, fa_pf_free>>;
using RcPtr = std::unique_ptr<fa_rc, Deleter<fa_rc, fa_rc_free>>;
using VerdictPtr = std::unique_ptr<fa_verdict, Deleter<fa_verdict, fa_verdict_free>>;
using ExperimentPtr = std::unique_ptr<fa_experiment, Deleter<fa_experiment, fa_experiment_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, fa_string_free>>;

std::string take(char* s) {
    StringPtr owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

struct Output {
    std::string path;
    int precision = 9;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            std::cout.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Failure{kInvalidArgs, "cannot open output file " + path};
        f << text;
    }
};

struct DesignFlags {
    int method = 1;
    double alpha = 0.5;
    double wl = 1e-3;
    double wh = 1e3;
    int n = 10;
    int k = 2;
    double eps = 0.0;
    bool eps_special = false;
    bool literal_gain = false;
    std::string kind = "int";
    CLI::Option* eps_opt = nullptr;

    void attach(CLI::App* app, bool with_kind = true) {
        app->add_option("--method", method, "Method 1..7")->check(CLI::Range(1, 7));
        app->add_option("--alpha", alpha, "Order alpha in (0,1)")->required();
        app->add_option("--wl", wl, "Lower band edge, rad/s");
        app->add_option("--wh", wh, "Upper band edge, rad/s");
        app->add_option("--n", n, "Number of factor pairs")->check(CLI::PositiveNumber);
        app->add_option("--k", k, "Factor multiplicity")->check(CLI::PositiveNumber);
        eps_opt = app->add_option("--eps", eps, "Vertical distance epsilon in dB (methods 3, 4)");
        auto* special = app->add_flag("--eps-special", eps_special, "Use the degenerating epsilon (methods 3, 4)");
        eps_opt->excludes(special);
        app->add_flag("--literal-gain", literal_gain, "Method 7: printed gain formula instead of w_m matching");
        if (with_kind) {
            app->add_option("--kind", kind, "int or diff")->check(CLI::IsMember({"int", "diff"}));
        }
    }

    fa_kind op_kind() const { return kind == "diff" ? FA_DIFFERENTIATOR : FA_INTEGRATOR; }

    // Methods 3 and 4 fall back to the special epsilon when none is given.
    fa_design_spec spec() const {
        fa_design_spec s;
        fa_design_spec_init(&s);
        s.method = method;
        s.alpha = alpha;
        s.omega_l = wl;
        s.omega_h = wh;
        s.n = n;
        s.k = k;
        s.literal_baseline_gain = literal_gain ? 1 : 0;
        if (method == 3 || method == 4) {
            s.has_epsilon = 1;
            if (eps_opt && eps_opt->count() > 0) {
                s.epsilon = eps;
            } else {
                check(fa_special_epsilon(&s, &s.epsilon));
            }
        } else if (eps_opt && eps_opt->count() > 0) {
            throw Failure{kInvalidArgs, "--eps applies only to methods 3 and 4"};
        }
        return s;
    }
};

void add_output(CLI::App* app, Output& out) {
    app->add_option("-o,--output", out.path, "Output file (default: standard output)");
    app->add_option("--precision", out.precision, "Significant digits")->check(CLI::Range(1, 17));
}

std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{kInvalidArgs, "bad alpha list entry '" + item + "'"};
        }
    }
    if (out.empty()) throw Failure{kInvalidArgs, "alpha list is empty"};
    return out;
}

std::string fixed(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// ---- table ----

struct TableFlags {
    int which = 1;
    double wl = 1e-3;
    double wh = 1e3;
    int n = 10;
    int k = 2;
    int points = 10000;
    double h = 1e-3;
    double horizon = 10.0;
    std::string alphas;
    std::string aggregation = "max";
    bool cascade = false;
};

std::string table_identities(const TableFlags& f) {
    const auto alphas = parse_alphas(f.alphas.empty() ? "0.1,0.2,0.3,0.4,0.6,0.7,0.8,0.9" : f.alphas);
    fa_design_spec base;
    fa_design_spec_init(&base);
    base.omega_l = f.wl;
    base.omega_h = f.wh;
    base.n = f.n;
    base.k = f.k;
    int matrix[21] = {};
    check(fa_associativity_table(&base, alphas.data(), alphas.size(), matrix));
    std::ostringstream os;
    os << pad("", 10) << pad("i)", 6) << pad("ii)", 6) << "iii)\n";
    for (int m = 0; m < 7; ++m) {
        os << pad("case " + std::to_string(m + 1), 10);
        for (int c = 0; c < 3; ++c) {
            const char* mark = matrix[m * 3 + c] ? "✓" : "×";
            os << mark << (c < 2 ? "     " : "\n");
        }
    }
    return os.str();
}

std::string table_frequency(const TableFlags& f, fa_kind kind) {
    const auto alphas = parse_alphas(f.alphas.empty() ? "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9" : f.alphas);
    if (f.aggregation != "max" && f.aggregation != "concat") {
        throw Failure{kInvalidArgs, "--aggregation must be max or concat"};
    }
    fa_sweep_settings s;
    fa_sweep_settings_init(&s);
    s.omega_l = f.wl;
    s.omega_h = f.wh;
    s.n = f.n;
    s.k = f.k;
    s.points = f.points;
    s.concatenated = f.aggregation == "concat" ? 1 : 0;
    std::ostringstream os;
    os << pad("", 10) << pad("|E_M|_inf", 12) << pad("|E_M|_2", 12) << pad("|E_P|_inf", 12) << "|E_P|_2\n";
    for (int m = 1; m <= 7; ++m) {
        fa_norms nrm;
        check(fa_sweep_table(m, kind, alphas.data(), alphas.size(), &s, &nrm));
        os << pad("case " + std::to_string(m), 10) << pad(fixed(nrm.magnitude_inf), 12)
           << pad(fixed(nrm.magnitude_2), 12) << pad(fixed(nrm.phase_inf), 12) << fixed(nrm.phase_2) << '\n';
    }
    return os.str();
}

std::string table_time(const TableFlags& f, double alpha) {
    fa_experiment_options o;
    fa_experiment_options_init(&o);
    o.h = f.h;
    o.horizon = f.horizon;
    o.cascade = f.cascade ? 1 : 0;
    std::ostringstream os;
    os << pad("", 10);
    for (const char* h : {"|E_x|_inf", "|E_x|_2", "|E_y|_inf", "|E_y|_2", "|E_z|_inf"}) os << pad(h, 11);
    os << "|E_z|_2\n";
    for (int m = 1; m <= 7; ++m) {
        fa_design_spec s;
        fa_design_spec_init(&s);
        s.method = m;
        s.alpha = alpha;
        s.omega_l = f.wl;
        s.omega_h = f.wh;
        s.n = f.n;
        s.k = f.k;
        fa_experiment* raw = nullptr;
        check(fa_identity_experiment(&s, &o, &raw));
        ExperimentPtr exp(raw);
        os << pad("case " + std::to_string(m), 10);
        for (int e = 0; e < 3; ++e) {
            double inf = 0.0, two = 0.0;
            check(fa_experiment_norms(exp.get(), static_cast<fa_experiment_id>(e), &inf, &two));
            os << pad(fixed(inf), 11);
            os << (e < 2 ? pad(fixed(two), 11) : fixed(two) + "\n");
        }
    }
    return os.str();
}

// ---- subcommand bodies ----

ModelPtr designed(const DesignFlags& d) {
    const auto spec = d.spec();
    fa_model* raw = nullptr;
    check(fa_design(&spec, d.op_kind(), &raw));
    return ModelPtr(raw);
}

std::string run_check(const DesignFlags& d, const std::string& condition, int precision) {
    const auto spec = d.spec();
    std::vector<fa_condition> conditions;
    if (condition == "i" || condition == "all") conditions.push_back(FA_CONDITION_I);
    if (condition == "ii" || condition == "all") conditions.push_back(FA_CONDITION_II);
    if (condition == "iii" || condition == "all") conditions.push_back(FA_CONDITION_III);
    std::vector<std::string> docs;
    for (auto c : conditions) {
        fa_verdict* raw = nullptr;
        check(fa_check_identity(c, &spec, &raw));
        VerdictPtr v(raw);
        char* json = nullptr;
        check(fa_verdict_to_json(v.get(), precision, &json));
        docs.push_back(take(json));
    }
    if (docs.size() == 1) return docs.front();
    std::string out = "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::string body = docs[i];
        if (!body.empty() && body.back() == '\n') body.pop_back();
        out += body + (i + 1 < docs.size() ? ",\n" : "\n");
    }
    return out + "]\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Identity-preserving rational approximation of fractional differintegrators"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fa_version()));

    // design
    DesignFlags design_flags;
    Output design_out;
    std::string design_format = "text";
    auto* design_cmd = app.add_subcommand("design", "Design an approximant and print its parameters");
    design_flags.attach(design_cmd);
    add_output(design_cmd, design_out);
    design_cmd->add_option("--format", design_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // bode
    DesignFlags bode_flags;
    Output bode_out;
    int bode_points = 10000;
    auto* bode_cmd = app.add_subcommand("bode", "Model vs exact Bode data as CSV");
    bode_flags.attach(bode_cmd);
    add_output(bode_cmd, bode_out);
    bode_cmd->add_option("--points", bode_points, "Grid size")->check(CLI::Range(2, 100000000));

    // table
    TableFlags table_flags;
    Output table_out;
    auto* table_cmd = app.add_subcommand("table", "Reproduce a comparison table (1..5)");
    table_cmd->set_help_flag("--help", "Print this help message and exit");
    table_cmd->add_option("--which", table_flags.which, "Table number")->required()->check(CLI::Range(1, 5));
    table_cmd->add_option("--wl", table_flags.wl, "Lower band edge, rad/s");
    table_cmd->add_option("--wh", table_flags.wh, "Upper band edge, rad/s");
    table_cmd->add_option("--n", table_flags.n, "Number of factor pairs")->check(CLI::PositiveNumber);
    table_cmd->add_option("--k", table_flags.k, "Multiplicity for methods 1..4")->check(CLI::PositiveNumber);
    table_cmd->add_option("--points", table_flags.points, "Frequency grid size (tables 2, 3)")
        ->check(CLI::Range(2, 100000000));
    table_cmd->add_option("--h", table_flags.h, "Sample period, s (tables 4, 5)");
    table_cmd->add_option("--T", table_flags.horizon, "Simulation horizon, s (tables 4, 5)");
    table_cmd->add_option("--alphas", table_flags.alphas, "Comma-separated orders (tables 1..3)");
    table_cmd->add_option("--aggregation", table_flags.aggregation, "max (per-alpha norms, then max) or concat");
    table_cmd->add_flag("--cascade", table_flags.cascade, "Tables 4, 5: cascade separately discretized operators");
    add_output(table_cmd, table_out);

    // check
    DesignFlags check_flags;
    Output check_out;
    std::string condition = "all";
    auto* check_cmd = app.add_subcommand("check", "Verify composition identities as JSON");
    check_flags.attach(check_cmd, false);
    add_output(check_cmd, check_out);
    check_cmd->add_option("--condition", condition, "i, ii, iii or all")
        ->check(CLI::IsMember({"i", "ii", "iii", "all"}));

    // simulate
    DesignFlags sim_flags;
    Output sim_out;
    double sim_h = 1e-3;
    double sim_T = 10.0;
    std::string experiment = "all";
    bool sim_cascade = false;
    auto* sim_cmd = app.add_subcommand("simulate", "Time-domain identity experiments as CSV");
    sim_cmd->set_help_flag("--help", "Print this help message and exit");
    sim_flags.attach(sim_cmd, false);
    add_output(sim_cmd, sim_out);
    sim_cmd->add_option("--h", sim_h, "Sample period, s");
    sim_cmd->add_option("--T", sim_T, "Horizon, s");
    sim_cmd->add_option("--experiment", experiment, "x, y, z or all")->check(CLI::IsMember({"x", "y", "z", "all"}));
    sim_cmd->add_flag("--cascade", sim_cascade, "Cascade separately discretized operators");

    // pfe
    DesignFlags pfe_flags;
    Output pfe_out;
    auto* pfe_cmd = app.add_subcommand("pfe", "Partial-fraction (summation) form as JSON");
    pfe_flags.attach(pfe_cmd);
    add_output(pfe_cmd, pfe_out);

    // circuit
    DesignFlags circuit_flags;
    Output circuit_out;
    std::string circuit_format = "spice";
    auto* circuit_cmd = app.add_subcommand("circuit", "RC network netlist (k = 1 only)");
    circuit_flags.attach(circuit_cmd);
    add_output(circuit_cmd, circuit_out);
    circuit_cmd->add_option("--format", circuit_format, "spice or json")->check(CLI::IsMember({"spice", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidArgs;
    }

    try {
        if (*design_cmd) {
            const auto spec = design_flags.spec();
            char* text = nullptr;
            check(fa_design_report(&spec, design_flags.op_kind(), design_format == "json", design_out.precision,
                                   &text));
            design_out.write(take(text));
        } else if (*bode_cmd) {
            auto model = designed(bode_flags);
            char* csv = nullptr;
            check(fa_bode_csv(model.get(), bode_flags.alpha, bode_flags.op_kind(), bode_flags.wl, bode_flags.wh,
                              bode_points, bode_out.precision, &csv));
            bode_out.write(take(csv));
        } else if (*table_cmd) {
            std::string text;
            switch (table_flags.which) {
                case 1: text = table_identities(table_flags); break;
                case 2: text = table_frequency(table_flags, FA_INTEGRATOR); break;
                case 3: text = table_frequency(table_flags, FA_DIFFERENTIATOR); break;
                case 4: text = table_time(table_flags, 0.4); break;
                default: text = table_time(table_flags, 0.5); break;
            }
            table_out.write(text);
        } else if (*check_cmd) {
            check_out.write(run_check(check_flags, condition, check_out.precision));
        } else if (*sim_cmd) {
            const auto spec = sim_flags.spec();
            fa_experiment_options o;
            fa_experiment_options_init(&o);
            o.h = sim_h;
            o.horizon = sim_T;
            o.cascade = sim_cascade ? 1 : 0;
            fa_experiment* raw = nullptr;
            check(fa_identity_experiment(&spec, &o, &raw));
            ExperimentPtr exp(raw);
            const int which = experiment == "x" ? 0 : experiment == "y" ? 1 : experiment == "z" ? 2 : -1;
            char* csv = nullptr;
            check(fa_experiment_csv(exp.get(), which, sim_out.precision, &csv));
            sim_out.write(take(csv));
        } else if (*pfe_cmd) {
            auto model = designed(pfe_flags);
            fa_pf* raw = nullptr;
            check(fa_partial_fractions(model.get(), &raw));
            PfPtr pf(raw);
            char* json = nullptr;
            check(fa_pf_to_json(pf.get(), pfe_out.precision, &json));
            pfe_out.write(take(json));
        } else if (*circuit_cmd) {
            if (circuit_flags.method <= 4 && circuit_flags.k != 1) {
                throw Failure{kNotRealizable, "k>1 not synthesizable"};
            }
            auto model = designed(circuit_flags);
            fa_pf* raw_pf = nullptr;
            check(fa_partial_fractions(model.get(), &raw_pf));
            PfPtr pf(raw_pf);
            fa_rc* raw_rc = nullptr;
            check(fa_synthesize_rc(pf.get(), &raw_rc));
            RcPtr net(raw_rc);
            const fa_netlist_meta meta{circuit_flags.method, circuit_flags.alpha, circuit_flags.wl, circuit_flags.wh,
                                       circuit_flags.n};
            char* text = nullptr;
            check(fa_rc_export(net.get(), circuit_format == "spice" ? FA_NETLIST_SPICE : FA_NETLIST_JSON, &meta,
                               &text));
            circuit_out.write(take(text));
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
