#include "fracapprox/identity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fracapprox/analysis.hpp"
#include "fracapprox/errors.hpp"

namespace fracapprox {

const char* to_string(Condition c) {
    switch (c) {
        case Condition::I: return "i";
        case Condition::II: return "ii";
        case Condition::III: return "iii";
    }
    return "?";
}

namespace {

int target_exponent(Condition c) {
    switch (c) {
        case Condition::I: return -1;
        case Condition::II: return 0;
        case Condition::III: return 1;
    }
    return 0;
}

}  // namespace

IdentityVerdict check_identity(Condition condition, const DesignSpec& spec_in) {
    const DesignSpec spec = with_default_epsilon(spec_in);
    DesignSpec companion = spec;
    companion.alpha = 1.0 - spec.alpha;
    // The companion order has its own admissible epsilon interval.
    companion.epsilon.reset();
    companion = with_default_epsilon(companion);

    const auto primary = design_pair(spec);
    FactoredModel lhs, rhs;
    switch (condition) {
        case Condition::I:
            lhs = primary.integrator;
            rhs = design_pair(companion).integrator;
            break;
        case Condition::II:
            lhs = primary.differentiator;
            rhs = primary.integrator;
            break;
        case Condition::III:
            lhs = primary.differentiator;
            rhs = design_pair(companion).differentiator;
            break;
    }

    IdentityVerdict v;
    v.condition = condition;
    const int target = target_exponent(condition);

    try {
        auto product = multiply_and_simplify(lhs, rhs);
        v.structural_pass = product.s_exponent == target && product.factors.empty() &&
                            std::abs(product.gain.value() - 1.0) <= kStructuralGainTolerance;
        if (!v.structural_pass) {
            v.note = "composite does not reduce to s^" + std::to_string(target) + " (" +
                     std::to_string(product.factors.size()) + " factor pairs remain, s^" +
                     std::to_string(product.s_exponent) + ")";
        }
        v.simplified = std::move(product);
    } catch (const Error& e) {
        v.structural_pass = false;
        v.note = e.what();
    }

    const auto grid = make_grid(spec.omega_l, spec.omega_h, kIdentityGridPoints);
    for (double w : grid.points) {
        const std::complex<double> s(0.0, w);
        std::complex<double> tgt = 1.0;
        if (target == -1) tgt = 1.0 / s;
        if (target == 1) tgt = s;
        const auto composite = eval_response(lhs, w).value * eval_response(rhs, w).value;
        v.numeric_max_deviation = std::max(v.numeric_max_deviation, std::abs(composite / tgt - 1.0));
    }
    return v;
}

AssociativityTable associativity_table(const DesignSpec& base, std::span<const double> alphas) {
    if (alphas.empty()) throw Error(ErrorKind::Usage, "associativity table needs at least one alpha");
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0) || a == 0.5) {
            throw Error(ErrorKind::Usage, "associativity table orders must lie in (0,0.5) or (0.5,1)");
        }
    }
    AssociativityTable table{};
    for (int m = 1; m <= 7; ++m) {
        for (int c = 1; c <= 3; ++c) {
            bool all = true;
            for (double a : alphas) {
                DesignSpec spec = base;
                spec.method = static_cast<Method>(m);
                spec.alpha = a;
                spec.epsilon.reset();
                if (!check_identity(static_cast<Condition>(c), spec).structural_pass) {
                    all = false;
                    break;
                }
            }
            table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(c - 1)] = all;
        }
    }
    return table;
}

}  // namespace fracapprox
