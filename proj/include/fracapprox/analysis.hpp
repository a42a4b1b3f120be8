#pragma once

#include <span>
#include <vector>

#include "fracapprox/designers.hpp"
#include "fracapprox/zpk.hpp"

namespace fracapprox {

/// Log-uniform grid: points[j] = w_l * (w_h/w_l)^(j/(N-1)), j = 0..N-1.
struct FrequencyGrid {
    std::vector<double> points;

    std::size_t size() const { return points.size(); }
};

FrequencyGrid make_grid(double omega_l, double omega_h, int count);

/// Response of the ideal operator s^-alpha (Integrator) or s^alpha
/// (Differentiator) at s = jw.
ComplexResponse exact_response(double alpha, OperatorKind kind, double omega);

struct ErrorNorms {
    double magnitude_inf = 0.0;  // dB
    double magnitude_2 = 0.0;    // dB
    double phase_inf = 0.0;      // degrees
    double phase_2 = 0.0;        // degrees
};

struct ErrorReport {
    std::vector<double> magnitude_error;  // E_M, dB
    std::vector<double> phase_error;      // E_P, degrees
    ErrorNorms norms;
};

double inf_norm(std::span<const double> values);
/// Unweighted root-sum-square, accumulated in index order.
double two_norm(std::span<const double> values);

/// E_M = exact dB - model dB, E_P = exact deg - model deg on every grid point.
ErrorReport error_series(const FactoredModel& model, double alpha, OperatorKind kind, const FrequencyGrid& grid);

struct BodeRow {
    double omega;
    double model_db;
    double exact_db;
    double model_deg;
    double exact_deg;
};

std::vector<BodeRow> bode_rows(const FactoredModel& model, double alpha, OperatorKind kind, const FrequencyGrid& grid);

/// How per-alpha error series are folded into one table row.
enum class Aggregation {
    PerAlphaMax,   // norm per alpha, then max over alphas
    Concatenated,  // one series formed by concatenating every alpha
};

struct SweepSettings {
    double omega_l = 1e-3;
    double omega_h = 1e3;
    int n = 10;
    int k = 2;
    int points = 10000;
    Aggregation aggregation = Aggregation::PerAlphaMax;
};

std::vector<double> default_alphas();

/// One row of the frequency-domain error table for `method`. Methods 3/4 use
/// special_epsilon(); the baselines force their own multiplicity.
ErrorNorms sweep_table(Method method, OperatorKind kind, std::span<const double> alphas,
                       const SweepSettings& settings = {});

}  // namespace fracapprox
