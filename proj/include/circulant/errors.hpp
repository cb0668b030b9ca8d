#pragma once

// Exception taxonomy shared across the library. The CLI maps these onto
// process exit codes, so throw the most specific type that applies.

#include <stdexcept>
#include <string>

namespace circulant {

// Bad input: invalid n, asymmetric connection set, mismatched fields, ...
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation was asked to exceed a documented resource cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Two independently computed quantities that must agree did not. Carries
// printable renderings of both candidates so reports can show the clash.
class StructuralError : public std::logic_error {
public:
    StructuralError(const std::string& what, std::string lhs, std::string rhs)
        : std::logic_error(what + "\n  lhs: " + lhs + "\n  rhs: " + rhs),
          lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
    const std::string& lhs() const { return lhs_; }
    const std::string& rhs() const { return rhs_; }

private:
    std::string lhs_, rhs_;
};

} // namespace circulant
