#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include "fracapprox/fracapprox.h"

namespace {

fa_design_spec spec_of(int method, double alpha, int k = 2) {
    fa_design_spec s;
    fa_design_spec_init(&s);
    s.method = method;
    s.alpha = alpha;
    s.k = k;
    return s;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    fa_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("defaults and version") {
    fa_design_spec s;
    fa_design_spec_init(&s);
    CHECK(s.method == 1);
    CHECK(s.alpha == 0.5);
    CHECK(s.omega_l == 1e-3);
    CHECK(s.omega_h == 1e3);
    CHECK(s.n == 10);
    CHECK(s.k == 2);
    CHECK(s.has_epsilon == 0);
    CHECK(std::string(fa_version()) == "1.0.0");

    fa_experiment_options o;
    fa_experiment_options_init(&o);
    CHECK(o.h == 1e-3);
    CHECK(o.horizon == 10.0);
}

TEST_CASE("model handles") {
    const double z[] = {3.0};
    const double p[] = {1.0};
    fa_model* m = nullptr;
    REQUIRE(fa_model_create(2.0, 0, 1, z, p, 1, &m) == FA_OK);
    CHECK(fa_model_gain(m) == 2.0);
    CHECK(fa_model_factor_count(m) == 1);
    double zz = 0, pp = 0;
    CHECK(fa_model_factor(m, 0, &zz, &pp) == FA_OK);
    CHECK(zz == 3.0);
    CHECK(pp == 1.0);
    CHECK(fa_model_factor(m, 1, &zz, &pp) != FA_OK);

    fa_model* r = nullptr;
    fa_model* rr = nullptr;
    REQUIRE(fa_model_reciprocal(m, &r) == FA_OK);
    REQUIRE(fa_model_reciprocal(r, &rr) == FA_OK);
    CHECK(fa_model_equal(m, rr) == 1);
    CHECK(fa_model_equal(m, r) == 0);

    fa_model* prod = nullptr;
    REQUIRE(fa_model_multiply(m, r, 1e-9, &prod) == FA_OK);
    CHECK(fa_model_factor_count(prod) == 0);
    CHECK(fa_model_gain(prod) == 1.0);

    fa_response resp;
    CHECK(fa_model_eval(m, 1.0, &resp) == FA_OK);
    CHECK(resp.re == doctest::Approx(4.0));
    CHECK(resp.im == doctest::Approx(-2.0));

    const auto doc = nlohmann::json::parse([&] {
        char* s = nullptr;
        REQUIRE(fa_model_to_json(m, 9, &s) == FA_OK);
        return take(s);
    }());
    CHECK(doc["gain"] == 2.0);
    CHECK(doc["factors"][0]["zero"] == 3.0);

    fa_model_free(prod);
    fa_model_free(rr);
    fa_model_free(r);
    fa_model_free(m);
    fa_model_free(nullptr);
}

TEST_CASE("status codes and last error") {
    fa_model* m = nullptr;
    const double z[] = {-1.0};
    const double p[] = {1.0};
    CHECK(fa_model_create(1.0, 0, 1, z, p, 1, &m) == FA_ERR_DOMAIN);
    CHECK(m == nullptr);
    CHECK(std::strlen(fa_last_error()) > 0);

    CHECK(fa_model_create(1.0, 0, 1, z, p, 1, nullptr) == FA_ERR_NULL_ARGUMENT);
    CHECK(fa_design(nullptr, FA_INTEGRATOR, &m) == FA_ERR_NULL_ARGUMENT);

    auto s = spec_of(3, 0.4);
    s.has_epsilon = 1;
    s.epsilon = 5.0;
    CHECK(fa_design(&s, FA_INTEGRATOR, &m) == FA_ERR_RANGE);
    const std::string msg = fa_last_error();
    CHECK(msg.find("1.8113") != std::string::npos);
    CHECK(msg.find("2]") != std::string::npos);

    s = spec_of(9, 0.4);
    CHECK(fa_design(&s, FA_INTEGRATOR, &m) == FA_ERR_USAGE);
    s = spec_of(1, 1.5);
    CHECK(fa_design(&s, FA_INTEGRATOR, &m) == FA_ERR_DOMAIN);

    s = spec_of(5, 0.4);
    fa_model* a = nullptr;
    fa_model* b = nullptr;
    REQUIRE(fa_design(&s, FA_INTEGRATOR, &a) == FA_OK);
    s.alpha = 0.6;
    REQUIRE(fa_design(&s, FA_INTEGRATOR, &b) == FA_OK);
    fa_model* out = nullptr;
    CHECK(fa_model_multiply(a, b, 1e-9, &out) == FA_ERR_UNSUPPORTED_SHAPE);
    CHECK(fa_model_multiply(a, b, 1.0, &out) == FA_ERR_USAGE);
    fa_model_free(a);
    fa_model_free(b);

    char* text = nullptr;
    s = spec_of(1, 0.4);
    CHECK(fa_design_report(&s, FA_INTEGRATOR, 1, 0, &text) == FA_ERR_USAGE);
}

TEST_CASE("last error is per thread") {
    fa_model* m = nullptr;
    auto s = spec_of(1, 2.0);
    CHECK(fa_design(&s, FA_INTEGRATOR, &m) == FA_ERR_DOMAIN);
    const std::string mine = fa_last_error();
    std::thread([] {
        fa_model* x = nullptr;
        CHECK(fa_model_create(1.0, 0, 1, nullptr, nullptr, 0, &x) == FA_OK);
        auto bad = spec_of(3, 0.4);
        bad.has_epsilon = 1;
        bad.epsilon = 0.0;
        CHECK(fa_design(&bad, FA_INTEGRATOR, &x) == FA_ERR_RANGE);
    }).join();
    CHECK(mine == fa_last_error());
}

TEST_CASE("design and epsilon queries") {
    auto s = spec_of(4, 0.4);
    double lo = 0, hi = 0, sp = 0;
    CHECK(fa_epsilon_bounds(&s, &lo, &hi) == FA_OK);
    CHECK(fa_special_epsilon(&s, &sp) == FA_OK);
    CHECK(sp == hi);
    CHECK(lo == doctest::Approx(1.8824).epsilon(1e-4));

    s = spec_of(2, 0.7);
    fa_model* i = nullptr;
    fa_model* d = nullptr;
    int high = 0;
    REQUIRE(fa_design_pair(&s, &i, &d, &high) == FA_OK);
    CHECK(high == 1);
    CHECK(fa_model_s_exponent(i) == -1);
    CHECK(fa_model_s_exponent(d) == 1);
    fa_model_free(i);
    fa_model_free(d);

    char* text = nullptr;
    REQUIRE(fa_design_report(&s, FA_DIFFERENTIATOR, 1, 9, &text) == FA_OK);
    const auto doc = nlohmann::json::parse(take(text));
    CHECK(doc["kind"] == "differentiator");
    CHECK(doc["branch"] == "high");
    CHECK(doc["model"]["s_exponent"] == 1);
}

TEST_CASE("frequency analysis") {
    fa_response r;
    CHECK(fa_exact_response(0.3, FA_DIFFERENTIATOR, 10.0, &r) == FA_OK);
    CHECK(r.magnitude_db == doctest::Approx(6.0));

    auto s = spec_of(2, 0.4);
    fa_model* m = nullptr;
    REQUIRE(fa_design(&s, FA_INTEGRATOR, &m) == FA_OK);
    fa_norms n;
    CHECK(fa_error_norms(m, 0.4, FA_INTEGRATOR, 1e-3, 1e3, 1000, &n) == FA_OK);
    CHECK(n.magnitude_inf > 0.0);
    CHECK(n.magnitude_inf < 0.4534);

    char* csv = nullptr;
    REQUIRE(fa_bode_csv(m, 0.4, FA_INTEGRATOR, 1e-3, 1e3, 5, 9, &csv) == FA_OK);
    const std::string text = take(csv);
    CHECK(text.rfind("omega,mag_db_model,mag_db_exact,phase_deg_model,phase_deg_exact,E_M,E_P\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    fa_model_free(m);

    const double alphas[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    CHECK(fa_sweep_table(2, FA_INTEGRATOR, alphas, 9, nullptr, &n) == FA_OK);
    CHECK(n.magnitude_inf == doctest::Approx(0.4533).epsilon(5e-4));
    CHECK(fa_sweep_table(2, FA_INTEGRATOR, alphas, 0, nullptr, &n) == FA_ERR_USAGE);
}

TEST_CASE("identities") {
    auto s = spec_of(7, 0.3);
    fa_verdict* v = nullptr;
    REQUIRE(fa_check_identity(FA_CONDITION_II, &s, &v) == FA_OK);
    CHECK(fa_verdict_structural_pass(v) == 1);
    CHECK(fa_verdict_deviation(v) < 1e-12);
    char* json = nullptr;
    REQUIRE(fa_verdict_to_json(v, 9, &json) == FA_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["condition"] == "ii");
    CHECK(doc["structural_pass"] == true);
    fa_verdict_free(v);

    const double alphas[] = {0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9};
    int table[21];
    REQUIRE(fa_associativity_table(&s, alphas, 8, table) == FA_OK);
    const int want[21] = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0};
    for (int i = 0; i < 21; ++i) CHECK(table[i] == want[i]);
    CHECK(fa_associativity_table(&s, alphas, 0, table) == FA_ERR_USAGE);
}

TEST_CASE("partial fractions and RC export") {
    auto s = spec_of(1, 0.3, 1);
    fa_model* m = nullptr;
    REQUIRE(fa_design(&s, FA_INTEGRATOR, &m) == FA_OK);
    fa_pf* pf = nullptr;
    REQUIRE(fa_partial_fractions(m, &pf) == FA_OK);
    CHECK(fa_pf_term_count(pf) == 10);
    double pole = 0, res = 0;
    CHECK(fa_pf_term(pf, 0, 1, &pole, &res) == FA_OK);
    CHECK(res > 0);
    CHECK(fa_pf_term(pf, 0, 2, &pole, &res) != FA_OK);
    double re = 0, im = 0;
    fa_response want;
    CHECK(fa_pf_eval(pf, 2.0, &re, &im) == FA_OK);
    CHECK(fa_model_eval(m, 2.0, &want) == FA_OK);
    CHECK(re == doctest::Approx(want.re).epsilon(1e-10));
    CHECK(im == doctest::Approx(want.im).epsilon(1e-10));

    fa_rc* net = nullptr;
    REQUIRE(fa_synthesize_rc(pf, &net) == FA_OK);
    CHECK(fa_rc_element_count(net) == 11);
    CHECK(fa_rc_impedance(net, 2.0, &re, &im) == FA_OK);
    CHECK(re == doctest::Approx(want.re).epsilon(1e-10));

    const fa_netlist_meta meta{1, 0.3, 1e-3, 1e3, 10};
    char* text = nullptr;
    REQUIRE(fa_rc_export(net, FA_NETLIST_SPICE, &meta, &text) == FA_OK);
    const std::string spice = take(text);
    CHECK(spice.find("R1 1 2 ") != std::string::npos);
    CHECK(spice.find("R11 11 0 ") != std::string::npos);
    REQUIRE(fa_rc_export(net, FA_NETLIST_JSON, nullptr, &text) == FA_OK);
    CHECK(nlohmann::json::parse(take(text))["elements"].size() == 11);
    fa_rc_free(net);
    fa_pf_free(pf);
    fa_model_free(m);

    s.k = 2;
    REQUIRE(fa_design(&s, FA_INTEGRATOR, &m) == FA_OK);
    REQUIRE(fa_partial_fractions(m, &pf) == FA_OK);
    CHECK(fa_synthesize_rc(pf, &net) == FA_ERR_NOT_RC_REALIZABLE);
    CHECK(std::string(fa_last_error()) == "k>1 not synthesizable");
    fa_pf_free(pf);
    fa_model_free(m);
}

TEST_CASE("filters and experiments") {
    const double z[] = {1.0};
    const double p[] = {2.0};
    fa_model* m = nullptr;
    REQUIRE(fa_model_create(1.0, 0, 1, z, p, 1, &m) == FA_OK);
    fa_filter* f = nullptr;
    REQUIRE(fa_discretize(m, 0.001, &f) == FA_OK);
    CHECK(fa_filter_head(f) == 0);
    CHECK(fa_filter_section_count(f) == 1);
    double b0 = 0, b1 = 0, a1 = 0;
    CHECK(fa_filter_section(f, 0, &b0, &b1, &a1) == FA_OK);
    CHECK(b0 == doctest::Approx(2001.0 / 2002.0));
    const double u[] = {1.0, 1.0, 1.0};
    double y[3];
    CHECK(fa_filter_simulate(f, u, 3, 0, 0, 0, y) == FA_OK);
    CHECK(y[0] == doctest::Approx(b0));
    fa_filter_free(f);
    fa_model_free(m);

    auto s = spec_of(1, 0.4);
    fa_experiment_options o;
    fa_experiment_options_init(&o);
    o.horizon = 1.0;
    fa_experiment* e = nullptr;
    REQUIRE(fa_identity_experiment(&s, &o, &e) == FA_OK);
    CHECK(fa_experiment_samples(e) == 1001);
    double inf = 1, two = 1;
    CHECK(fa_experiment_norms(e, FA_EXPERIMENT_Y, &inf, &two) == FA_OK);
    CHECK(inf == 0.0);
    char* csv = nullptr;
    REQUIRE(fa_experiment_csv(e, -1, 9, &csv) == FA_OK);
    const std::string text = take(csv);
    CHECK(text.rfind("experiment,t,u,exact,approx,error\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 3 * 1001);
    REQUIRE(fa_experiment_csv(e, 2, 9, &csv) == FA_OK);
    CHECK(take(csv).rfind("t,u,exact,approx,error\n", 0) == 0);
    CHECK(fa_experiment_csv(e, 3, 9, &csv) == FA_ERR_USAGE);
    fa_experiment_free(e);
}
