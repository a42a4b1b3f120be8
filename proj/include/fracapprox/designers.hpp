#pragma once

#include <optional>
#include <utility>

#include "fracapprox/zpk.hpp"

namespace fracapprox {

/// Method index. 1..4 are the identity-preserving piecewise designs, 5..7
/// reproduce the comparison baselines.
enum class Method : int {
    TwoPointCrossing = 1,    // crossing points at both band edges
    TwoPointTurning = 2,     // first pole and last zero at the band edges
    OnePointCrossing = 3,    // epsilon-limited, first crossing at w_l
    OnePointTurning = 4,     // epsilon-limited, first pole at w_l
    PoinotOustaloup = 5,     // integrator with explicit 1/s, Oustaloup differentiator
    DoublePole = 6,          // multiplicity-2 baseline
    Recursive = 7,           // recursive baseline, differentiator = 1/integrator
};

/// Throws Error(Usage) unless 1 <= index <= 7.
Method method_from_index(int index);
inline int to_index(Method m) { return static_cast<int>(m); }
bool is_piecewise(Method m);

enum class OperatorKind { Integrator, Differentiator };

enum class Branch { LowOrder, HighOrder };

struct DesignSpec {
    Method method = Method::TwoPointCrossing;
    double alpha = 0.5;
    double omega_l = 1e-3;
    double omega_h = 1e3;
    int n = 10;
    int k = 2;
    /// Vertical distance in dB; required for methods 3 and 4, ignored otherwise.
    std::optional<double> epsilon;
    /// Method 7 only: use the printed gain prod|(jw_m+z)/(jw_m+p)| instead of
    /// matching |I(jw_m)| = w_m^-alpha.
    bool literal_baseline_gain = false;

    double omega_m() const;
    /// 0.5 - |alpha - 0.5|
    double nu() const;
    /// Multiplicity actually used by the method (5 and 7 force 1, 6 forces 2).
    int effective_k() const;
    Branch branch() const;

    /// Checks alpha, band, n, k. Does not check epsilon.
    void validate() const;
};

struct DesignedPair {
    FactoredModel integrator;
    FactoredModel differentiator;
    DesignSpec spec;
    Branch branch = Branch::LowOrder;
};

FactoredModel design_integrator(const DesignSpec& spec);
DesignedPair design_pair(const DesignSpec& spec);
FactoredModel design(const DesignSpec& spec, OperatorKind kind);

/// Admissible epsilon interval (lower exclusive, upper inclusive) in dB for
/// methods 3 and 4.
std::pair<double, double> epsilon_bounds(const DesignSpec& spec);

/// The epsilon at which method 3 coincides with method 1 and method 4 with
/// method 2.
double special_epsilon(const DesignSpec& spec);

/// Copy of `spec` with epsilon set to special_epsilon() when the method
/// needs one and none is given.
DesignSpec with_default_epsilon(DesignSpec spec);

}  // namespace fracapprox
