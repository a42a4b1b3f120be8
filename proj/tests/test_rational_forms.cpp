#include <doctest.h>

#include <Eigen/Dense>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <sstream>

#include "fracapprox/analysis.hpp"
#include "fracapprox/designers.hpp"
#include "fracapprox/errors.hpp"
#include "fracapprox/rational_forms.hpp"
#include "support.hpp"

using namespace fracapprox;
using testing::rel_diff;
using cplx = std::complex<double>;

namespace {

FactoredModel simple(double gain, int s_exp, int k, std::vector<FactorPair> f) {
    FactoredModel m;
    m.gain = Gain(gain);
    m.s_exponent = s_exp;
    m.multiplicity = k;
    m.factors = std::move(f);
    return m;
}

DesignSpec spec_of(Method m, double alpha, int k = 2) {
    DesignSpec s;
    s.method = m;
    s.alpha = alpha;
    s.k = k;
    return with_default_epsilon(s);
}

double max_rel_error(const FactoredModel& m, const std::function<cplx(double)>& f, int points = 100) {
    double worst = 0.0;
    for (double w : make_grid(1e-3, 1e3, points).points) {
        const cplx want = eval_direct(m, w);
        worst = std::max(worst, std::abs(f(w) - want) / std::abs(want));
    }
    return worst;
}

// Least-squares fit of every residue from samples of H(jw); the pole set is
// taken from the model.
Eigen::VectorXd sampled_residues(const FactoredModel& m) {
    const int k = m.multiplicity;
    const int n = static_cast<int>(m.factors.size());
    const bool has_c0 = m.s_exponent == -1;
    const int unknowns = 1 + (has_c0 ? 1 : 0) + n * k;
    const int samples = 4 * n * k + 4;
    Eigen::MatrixXd a(2 * samples, unknowns);
    Eigen::VectorXd b(2 * samples);
    const auto grid = make_grid(m.factors.front().pole / 100, m.factors.back().zero * 100, samples);
    for (int r = 0; r < samples; ++r) {
        const double w = grid.points[static_cast<std::size_t>(r)];
        const cplx s(0.0, w);
        const cplx h = eval_direct(m, w);
        std::vector<cplx> row;
        row.push_back(1.0);
        if (has_c0) row.push_back(1.0 / s);
        for (const auto& f : m.factors) {
            for (int l = 1; l <= k; ++l) row.push_back(1.0 / std::pow(s + f.pole, l));
        }
        for (int c = 0; c < unknowns; ++c) {
            a(2 * r, c) = row[c].real();
            a(2 * r + 1, c) = row[c].imag();
        }
        b(2 * r) = h.real();
        b(2 * r + 1) = h.imag();
    }
    // column scaling keeps the solve well conditioned
    Eigen::VectorXd scale = a.colwise().norm().transpose();
    for (int c = 0; c < unknowns; ++c) a.col(c) /= scale(c);
    Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    return x.cwiseQuotient(scale);
}

// Impedance of a SPICE netlist rebuilt from its text: elements between the
// same node pair are in parallel, node pairs are in series.
cplx spice_impedance(const std::string& text, double w) {
    std::map<std::pair<int, int>, std::pair<double, double>> groups;  // (R, C)
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '*') continue;
        std::istringstream ls(line);
        std::string name;
        int a = 0, b = 0;
        double v = 0.0;
        ls >> name >> a >> b >> v;
        auto& g = groups[{a, b}];
        if (name[0] == 'R') g.first = v;
        if (name[0] == 'C') g.second = v;
    }
    const cplx s(0.0, w);
    cplx z = 0.0;
    for (const auto& [nodes, rc] : groups) {
        cplx y = 0.0;
        if (rc.first > 0) y += 1.0 / rc.first;
        if (rc.second > 0) y += s * rc.second;
        z += 1.0 / y;
    }
    return z;
}

}  // namespace

TEST_CASE("biproper first-order expansion") {
    const auto pf = to_partial_fractions(simple(2.0, 0, 1, {{3.0, 1.0}}));
    CHECK(pf.direct == doctest::Approx(2.0));
    CHECK(pf.c0 == 0.0);
    REQUIRE(pf.terms.size() == 1);
    CHECK(pf.terms[0].pole == 1.0);
    CHECK(pf.terms[0].residues[0] == doctest::Approx(4.0));
}

TEST_CASE("expansion with an integrator") {
    const auto pf = to_partial_fractions(simple(1.0, -1, 1, {{2.0, 1.0}}));
    CHECK(pf.direct == 0.0);
    CHECK(pf.c0 == doctest::Approx(2.0));
    REQUIRE(pf.terms.size() == 1);
    CHECK(pf.terms[0].residues[0] == doctest::Approx(-1.0));
}

TEST_CASE("expansion argument checks") {
    try {
        to_partial_fractions(simple(1.0, 1, 1, {{2.0, 1.0}}));
        FAIL("improper model accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Usage);
    }
    try {
        to_partial_fractions(simple(1.0, 0, 1, {{2.0, 1.0}, {3.0, 1.0}}));
        FAIL("repeated pole accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Conditioning);
    }
}

TEST_CASE("double-multiplicity residues against least-squares oracle") {
    const auto m = design_integrator(spec_of(Method::TwoPointCrossing, 0.4));
    const auto pf = to_partial_fractions(m);
    const auto x = sampled_residues(m);
    CHECK(rel_diff(pf.direct, x(0)) < 1e-6);
    // r_l / (s+p)^l is compared near s = p, where it scales like r_l / p^(l-1)
    int c = 1;
    for (const auto& t : pf.terms) {
        const double size = std::max(std::abs(t.residues[0]), std::abs(t.residues[1]) / t.pole);
        for (std::size_t l = 0; l < t.residues.size(); ++l, ++c) {
            CHECK(std::abs(t.residues[l] - x(c)) / (size * std::pow(t.pole, l)) < 1e-6);
        }
    }
}

TEST_CASE("round trip through partial fractions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        for (int k : {1, 2}) {
            for (int m = 1; m <= 4; ++m) {
                auto s = testing::random_spec(rng, method_from_index(m));
                s.k = k;
                s.epsilon.reset();
                s = with_default_epsilon(s);
                const auto model = design_integrator(s);
                const auto pf = to_partial_fractions(model);
                double worst = 0.0;
                for (double w : make_grid(s.omega_l, s.omega_h, 100).points) {
                    const cplx want = eval_direct(model, w);
                    worst = std::max(worst, std::abs(eval_partial_fractions(pf, w) - want) / std::abs(want));
                }
                CHECK(worst < (k == 1 ? 1e-9 : 1e-6));
            }
        }
    }
}

TEST_CASE("RC element values") {
    PartialFractionForm pf;
    pf.c0 = 2.0;
    pf.terms.push_back({1.0, {4.0}});
    const auto net = synthesize_rc(pf);
    REQUIRE(net.elements.size() == 2);
    const auto& cap = std::get<SeriesCapacitor>(net.elements[0]);
    CHECK(cap.capacitance == 0.5);
    const auto& rc = std::get<ParallelRC>(net.elements[1]);
    CHECK(rc.resistance == 4.0);
    CHECK(rc.capacitance == 0.25);
}

TEST_CASE("RC synthesis rejects non-realizable forms") {
    PartialFractionForm pf;
    pf.terms.push_back({1.0, {1.0, 2.0}});
    try {
        synthesize_rc(pf);
        FAIL("k>1 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRcRealizable);
        CHECK(std::string(e.what()) == "k>1 not synthesizable");
    }
    pf.terms = {{1.0, {-1.0}}};
    CHECK_THROWS_AS(synthesize_rc(pf), Error);
    pf.terms.clear();
    pf.direct = -1.0;
    CHECK_THROWS_AS(synthesize_rc(pf), Error);
}

TEST_CASE("network impedance reproduces the model") {
    const auto model = design_integrator(spec_of(Method::TwoPointTurning, 0.3, 1));
    const auto net = synthesize_rc(to_partial_fractions(model));
    int sections = 0;
    for (const auto& e : net.elements) {
        if (const auto* rc = std::get_if<ParallelRC>(&e)) {
            ++sections;
            CHECK(rc->resistance > 0.0);
            CHECK(rc->capacitance > 0.0);
        }
    }
    CHECK(sections == 10);
    CHECK(max_rel_error(model, [&](double w) { return impedance(net, w); }) < 1e-9);
}

TEST_CASE("netlist impedance fidelity over random specs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        for (int m : {1, 2, 3, 4, 7}) {
            auto s = testing::random_spec(rng, method_from_index(m));
            s.k = 1;
            s.epsilon.reset();
            s = with_default_epsilon(s);
            const auto model = design_integrator(s);
            const auto net = synthesize_rc(to_partial_fractions(model));
            const auto text = export_netlist(net, NetlistFormat::Spice);
            double direct = 0.0, parsed = 0.0;
            for (double w : make_grid(s.omega_l, s.omega_h, 100).points) {
                const cplx want = eval_direct(model, w);
                direct = std::max(direct, std::abs(impedance(net, w) - want) / std::abs(want));
                parsed = std::max(parsed, std::abs(spice_impedance(text, w) - want) / std::abs(want));
            }
            CHECK(direct < 1e-9);
            // ten significant digits per printed value
            CHECK(parsed < 1e-8);
        }
    }
}

TEST_CASE("SPICE formatting") {
    CHECK(format_spice_value(4.0) == "4.000000000e0");
    CHECK(format_spice_value(0.25) == "2.500000000e-1");
    CHECK(format_spice_value(1234.5) == "1.234500000e3");
    CHECK(format_spice_value(1e-12) == "1.000000000e-12");

    RcNetwork one;
    one.elements.emplace_back(ParallelRC{4.0, 0.25});
    const auto text = export_netlist(one, NetlistFormat::Spice);
    CHECK(text.find("\nR1 1 0 4.000000000e0\n") != std::string::npos);
    CHECK(text.find("\nC1 1 0 2.500000000e-1\n") != std::string::npos);

    NetlistMeta meta{1, 0.3, 1e-3, 1e3, 10};
    const auto empty = export_netlist(RcNetwork{}, NetlistFormat::Spice, meta);
    std::istringstream in(empty);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        CHECK(line[0] == '*');
        ++lines;
    }
    CHECK(lines == 2);
    CHECK(empty.find("method=1") != std::string::npos);
}

TEST_CASE("ten-section node chain") {
    RcNetwork net;
    for (int i = 1; i <= 10; ++i) net.elements.emplace_back(ParallelRC{1.0 * i, 0.1 * i});
    const auto text = export_netlist(net, NetlistFormat::Spice);
    std::istringstream in(text);
    std::string line;
    int elements = 0;
    std::vector<std::pair<int, int>> nodes;
    while (std::getline(in, line)) {
        if (line[0] == '*') continue;
        ++elements;
        std::istringstream ls(line);
        std::string name;
        int a = 0, b = 0;
        ls >> name >> a >> b;
        nodes.push_back({a, b});
    }
    CHECK(elements == 20);
    for (int i = 0; i < 10; ++i) {
        CHECK(nodes[2 * i].first == i + 1);
        CHECK(nodes[2 * i].second == (i == 9 ? 0 : i + 2));
    }
}

TEST_CASE("JSON netlist") {
    RcNetwork net;
    net.elements.emplace_back(SeriesResistor{2.0});
    net.elements.emplace_back(ParallelRC{4.0, 0.25});
    const auto doc = nlohmann::json::parse(export_netlist(net, NetlistFormat::Json));
    REQUIRE(doc["elements"].size() == 2);
    CHECK(doc["elements"][0]["kind"] == "series_resistor");
    CHECK(doc["elements"][0]["C"].is_null());
    CHECK(doc["elements"][1]["R"] == 4.0);
    CHECK(doc["elements"][1]["nodes"][1] == 0);
    CHECK(doc["meta"].is_null());
}
