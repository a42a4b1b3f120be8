#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "fracapprox/designers.hpp"
#include "fracapprox/zpk.hpp"

namespace fracapprox {

/// y_t = b0 u_t + b1 u_{t-1} - a1 y_{t-1}
struct DigitalSection {
    double b0 = 1.0;
    double b1 = 0.0;
    double a1 = 0.0;
};

enum class HeadKind {
    Passthrough,
    TrapezoidIntegrator,              // y_t = y_{t-1} + h/2 (u_t + u_{t-1})
    CentralDifferenceDifferentiator,  // y_t = (u_{t+1} - u_{t-1}) / 2h, offline
};

/// Head element followed by a cascade of first-order sections.
struct DiscreteFilter {
    HeadKind head = HeadKind::Passthrough;
    std::vector<DigitalSection> sections;
    double h = 0.0;
};

/// Bilinear map of every (s+z)/(s+p) factor; the gain folds into the first
/// section. Pure s-powers become the head element.
DiscreteFilter discretize(const FactoredModel& model, double h);

/// Input samples just outside the simulated window, needed by the central
/// difference head.
struct Lookahead {
    double before = 0.0;  // u_{-1}
    double after = 0.0;   // u_N
};

/// Zero initial state. The head runs first, then sections in order.
std::vector<double> simulate_filter(const DiscreteFilter& filter, std::span<const double> input,
                                    const std::optional<Lookahead>& lookahead = {});

struct SimulationResult {
    std::vector<double> t;
    std::vector<double> u;
    std::vector<double> exact;
    std::vector<double> approx;
    std::vector<double> error;
    double inf_norm = 0.0;
    double two_norm = 0.0;
};

enum class Experiment { X, Y, Z };

struct ExperimentOptions {
    double h = 1e-3;
    double horizon = 10.0;
    /// Discretize each operand and cascade them instead of discretizing the
    /// simplified composite.
    bool cascade = false;
};

/// x: I^a I^(1-a) sin -> 1 - cos,  y: D^a I^a sin -> sin,  z: D^a D^(1-a) sin -> cos.
/// Composites that cannot be simplified into a supported shape (s^-2) are
/// cascaded.
SimulationResult run_experiment(Experiment which, const DesignSpec& spec, const ExperimentOptions& options = {});

std::array<SimulationResult, 3> identity_experiment(const DesignSpec& spec, const ExperimentOptions& options = {});

}  // namespace fracapprox
