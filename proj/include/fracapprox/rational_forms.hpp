#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fracapprox/zpk.hpp"

namespace fracapprox {

struct PartialFractionTerm {
    double pole = 0.0;
    /// residues[l-1] multiplies 1 / (s + pole)^l
    std::vector<double> residues;
};

/// direct + c0 / s + sum_i sum_l residues_il / (s + p_i)^l
struct PartialFractionForm {
    double direct = 0.0;
    double c0 = 0.0;
    std::vector<PartialFractionTerm> terms;
};

/// Expansion of a proper model (s_exponent -1 or 0) with distinct poles.
/// Residues of repeated factors follow the Heaviside derivative rule,
/// evaluated on a truncated Taylor expansion about each pole.
PartialFractionForm to_partial_fractions(const FactoredModel& model);

std::complex<double> eval_partial_fractions(const PartialFractionForm& pf, double omega);

struct SeriesResistor {
    double resistance;
};
struct SeriesCapacitor {
    double capacitance;
};
/// R parallel C; impedance R / (1 + s R C)
struct ParallelRC {
    double resistance;
    double capacitance;
};

using RcElement = std::variant<SeriesResistor, SeriesCapacitor, ParallelRC>;

/// Series chain of elements seen as one driving-point impedance.
struct RcNetwork {
    std::vector<RcElement> elements;
};

/// Foster series realization. Requires first-order terms only and
/// nonnegative direct/c0, strictly positive residues; otherwise throws
/// Error(NotRcRealizable).
RcNetwork synthesize_rc(const PartialFractionForm& pf);

std::complex<double> impedance(const RcNetwork& net, double omega);

enum class NetlistFormat { Spice, Json };

/// Design provenance written alongside the netlist.
struct NetlistMeta {
    int method = 0;
    double alpha = 0.0;
    double omega_l = 0.0;
    double omega_h = 0.0;
    int n = 0;
};

/// Spice: element j spans nodes j and j+1, the last node is ground (0).
/// Values print as d.ddddddddde<exp>.
std::string export_netlist(const RcNetwork& net, NetlistFormat format, const std::optional<NetlistMeta>& meta = {});

/// 9 decimals in the mantissa, bare exponent: 4.000000000e0, 2.500000000e-1.
std::string format_spice_value(double v);

}  // namespace fracapprox
