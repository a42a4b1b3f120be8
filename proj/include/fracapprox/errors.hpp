#pragma once

#include <stdexcept>
#include <string>

namespace fracapprox {

enum class ErrorKind {
    Domain,            // argument outside its mathematical domain
    Range,             // epsilon outside the admissible interval
    Shape,             // incompatible operands (e.g. multiplicity mismatch)
    UnsupportedShape,  // composite s-power outside {-1, 0, 1}
    Usage,             // operation not defined for these arguments
    NotRcRealizable,
    Conditioning,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when epsilon lies outside (lower, upper]. Carries the interval so
/// callers can report it.
class EpsilonRangeError : public Error {
public:
    EpsilonRangeError(double epsilon, double lower, double upper);

    double epsilon() const noexcept { return epsilon_; }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double epsilon_;
    double lower_;
    double upper_;
};

}  // namespace fracapprox
