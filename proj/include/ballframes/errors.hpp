#pragma once

#include <stdexcept>
#include <string>

namespace ballframes {

/// Base class for all library errors. `exit_code()` is the process exit
/// status the CLI maps the error to (2 = bad configuration, 4 = capacity,
/// 3 = numerical failure).
class Error : public std::runtime_error {
public:
    Error(std::string what, int exit_code)
        : std::runtime_error(std::move(what)), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error("config error: " + w, 2) {}
};

struct CapacityExceeded : Error {
    explicit CapacityExceeded(const std::string& w) : Error("capacity exceeded: " + w, 4) {}
};

struct InvalidGroupElement : Error {
    explicit InvalidGroupElement(const std::string& w)
        : Error("invalid group element: " + w, 3) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("domain error: " + w, 3) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w)
        : Error("convergence failure: " + w, 3) {}
};

struct UnsupportedAtomExponent : Error {
    explicit UnsupportedAtomExponent(const std::string& w)
        : Error("unsupported atom exponent: " + w, 3) {}
};

struct DegenerateFamily : Error {
    explicit DegenerateFamily(const std::string& w)
        : Error("degenerate family: " + w, 3) {}
};

struct NumericalBlowup : Error {
    explicit NumericalBlowup(const std::string& w)
        : Error("numerical blowup: " + w, 3) {}
};

} // namespace ballframes
