#include "fracapprox/errors.hpp"

#include <sstream>

namespace fracapprox {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::Range: return "range error";
        case ErrorKind::Shape: return "shape error";
        case ErrorKind::UnsupportedShape: return "unsupported shape";
        case ErrorKind::Usage: return "usage error";
        case ErrorKind::NotRcRealizable: return "not RC realizable";
        case ErrorKind::Conditioning: return "conditioning error";
    }
    return "error";
}

namespace {

std::string describe_range(double epsilon, double lower, double upper) {
    std::ostringstream os;
    os.precision(9);
    os << "epsilon " << epsilon << " dB outside admissible interval (" << lower << ", " << upper << "]";
    return os.str();
}

}  // namespace

EpsilonRangeError::EpsilonRangeError(double epsilon, double lower, double upper)
    : Error(ErrorKind::Range, describe_range(epsilon, lower, upper)),
      epsilon_(epsilon),
      lower_(lower),
      upper_(upper) {}

}  // namespace fracapprox
