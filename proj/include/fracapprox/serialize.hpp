#pragma once

#include <span>
#include <string>

#include "fracapprox/analysis.hpp"
#include "fracapprox/designers.hpp"
#include "fracapprox/identity.hpp"
#include "fracapprox/rational_forms.hpp"
#include "fracapprox/timedomain.hpp"
#include "fracapprox/zpk.hpp"

namespace fracapprox {

inline constexpr int kDefaultPrecision = 9;

/// printf %.{precision}g, with "-0" folded to "0".
std::string format_number(double v, int precision = kDefaultPrecision);

/// v rounded to `precision` significant digits (what format_number prints).
double round_to_precision(double v, int precision = kDefaultPrecision);

std::string model_to_json(const FactoredModel& model, int precision = kDefaultPrecision);

/// Design parameters plus the resulting model.
std::string design_to_json(const DesignSpec& spec, OperatorKind kind, const FactoredModel& model,
                           int precision = kDefaultPrecision);
std::string design_to_text(const DesignSpec& spec, OperatorKind kind, const FactoredModel& model,
                           int precision = kDefaultPrecision);

/// Columns: omega, mag_db_model, mag_db_exact, phase_deg_model, phase_deg_exact, E_M, E_P
std::string bode_csv(std::span<const BodeRow> rows, int precision = kDefaultPrecision);

std::string verdict_to_json(const IdentityVerdict& v, int precision = kDefaultPrecision);

std::string partial_fractions_to_json(const PartialFractionForm& pf, int precision = kDefaultPrecision);

/// Columns: t, u, exact, approx, error. With `label` set, a leading
/// experiment column is added.
std::string simulation_csv(const SimulationResult& r, int precision = kDefaultPrecision, bool header = true,
                           const char* label = nullptr);

const char* to_string(Experiment e);
const char* to_string(OperatorKind k);

}  // namespace fracapprox
