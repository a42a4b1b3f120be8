#pragma once

#include <complex>
#include <vector>

namespace fracapprox {

/// One factor ((s + zero) / (s + pole))^k of a FactoredModel. Both corner
/// frequencies are in rad/s and strictly positive.
struct FactorPair {
    double zero = 0.0;
    double pole = 0.0;

    friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Positive transfer gain held as an exact ratio, so that inversion is a
/// field swap and reciprocal() is an exact involution.
class Gain {
public:
    constexpr Gain() = default;
    constexpr Gain(double value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    static constexpr Gain ratio(double num, double den) {
        Gain g;
        g.num_ = num;
        g.den_ = den;
        return g;
    }

    double value() const { return num_ / den_; }
    /// Natural log of value(), without forming the quotient.
    double log() const;
    double numerator() const { return num_; }
    double denominator() const { return den_; }
    constexpr Gain inverse() const { return ratio(den_, num_); }

    friend constexpr Gain operator*(const Gain& a, const Gain& b) {
        return ratio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const Gain&, const Gain&) = default;

private:
    double num_ = 1.0;
    double den_ = 1.0;
};

/// gain * s^s_exponent * prod_i ((s + z_i) / (s + p_i))^multiplicity
///
/// All critical frequencies lie on the open negative real axis, so the
/// response at s = jw, w > 0, is finite and nonzero.
struct FactoredModel {
    Gain gain;
    int s_exponent = 0;
    int multiplicity = 1;
    std::vector<FactorPair> factors;

    /// Throws Error(Domain) if any invariant is violated.
    void validate() const;

    friend bool operator==(const FactoredModel&, const FactoredModel&) = default;
};

struct ComplexResponse {
    std::complex<double> value;
    double magnitude_db = 0.0;
    double phase_deg = 0.0;
};

inline constexpr double kDefaultCancelTolerance = 1e-9;

/// Response at s = jw. Magnitude and phase are accumulated as sums of
/// per-factor log-magnitudes and arguments, so long chains neither
/// overflow nor wrap.
ComplexResponse eval_response(const FactoredModel& model, double omega);

/// Plain complex product of the factors at s = jw. Used as the second
/// evaluation route when checking eval_response.
std::complex<double> eval_direct(const FactoredModel& model, double omega);

/// Product of two models with cross-operand zero/pole cancellation.
///
/// A zero of one operand cancels a pole of the other when
/// |z - p| / max(z, p) <= rel_tol. Matching is greedy by nearest value, ties
/// going to the lower factor index. Pairs untouched by cancellation keep
/// their original pairing; orphaned zeros and poles are re-paired in
/// ascending order.
FactoredModel multiply_and_simplify(const FactoredModel& a, const FactoredModel& b,
                                    double rel_tol = kDefaultCancelTolerance);

FactoredModel reciprocal(const FactoredModel& model);

}  // namespace fracapprox
