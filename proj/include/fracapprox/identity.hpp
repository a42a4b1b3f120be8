#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "fracapprox/designers.hpp"
#include "fracapprox/zpk.hpp"

namespace fracapprox {

/// I:   I^a * I^(1-a) = 1/s
/// II:  D^a * I^a     = 1
/// III: D^a * D^(1-a) = s
enum class Condition { I = 1, II = 2, III = 3 };

const char* to_string(Condition c);

struct IdentityVerdict {
    Condition condition = Condition::I;
    bool structural_pass = false;
    /// max over the band grid of |A(jw) B(jw) / target(jw) - 1|
    double numeric_max_deviation = 0.0;
    std::optional<FactoredModel> simplified;
    /// Why simplification failed, when it did.
    std::string note;
};

inline constexpr double kStructuralGainTolerance = 1e-10;
inline constexpr int kIdentityGridPoints = 1000;

/// Builds both operands from `spec` (alpha taken from spec.alpha, the
/// companion order 1 - alpha where the condition needs it), composes them and
/// compares with the target. Methods 3/4 without epsilon use the special
/// value. The companion always takes its own special epsilon: in exact
/// arithmetic it equals the primary's, but 1 - alpha rounds and can push an
/// at-the-bound epsilon outside the companion's interval.
IdentityVerdict check_identity(Condition condition, const DesignSpec& spec);

/// [method-1][condition-1]
using AssociativityTable = std::array<std::array<bool, 3>, 7>;

/// Entry is true iff the identity holds for every alpha. base.method,
/// base.alpha and base.epsilon are ignored; methods 3/4 take the special
/// epsilon at each alpha.
AssociativityTable associativity_table(const DesignSpec& base, std::span<const double> alphas);

}  // namespace fracapprox
