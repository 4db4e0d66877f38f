#pragma once

#include <stdexcept>
#include <string>

namespace sykspike {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// Exhaustive computation refused because the input exceeds a configured cap.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& what) : Error("size_limit", what) {}
};

/// Secular equation has no root above the bulk edge (gap absent).
class NoRootError : public Error {
public:
    explicit NoRootError(const std::string& what) : Error("no_root", what) {}
};

/// Operation requires a different phase (e.g. split statistics below criticality).
class RegimeError : public Error {
public:
    explicit RegimeError(const std::string& what) : Error("regime_error", what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error("convergence_error", what) {}
};

/// Series operation that needs an invertible leading coefficient.
class SeriesError : public Error {
public:
    explicit SeriesError(const std::string& what) : Error("series_error", what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config_error", what) {}
};

}  // namespace sykspike
