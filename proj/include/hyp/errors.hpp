#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Base class for numeric failures raised by the library. I/O problems use
// IoError so callers can map them to distinct exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The requested ordinate carries no point of the curve (negative discriminant).
struct InfeasibleOrdinate : Error {
    explicit InfeasibleOrdinate(const std::string& what) : Error(what) {}
};

// A quadratic leading coefficient is too close to zero for the cardinal
// construction to be meaningful.
struct DegenerateLeadingCoefficient : Error {
    explicit DegenerateLeadingCoefficient(const std::string& what) : Error(what) {}
};

// The parameter vector does not describe a hyperbola.
struct NotAHyperbola : Error {
    explicit NotAHyperbola(const std::string& what) : Error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyp
