#pragma once

#include <stdexcept>
#include <string>

namespace octrmt {

/// Internal numerical consistency failure (quadrature or eigensolver did not
/// converge, a characteristic polynomial produced complex roots where theory
/// guarantees real ones, ...). Carries the offending residual when known.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg, double residual = 0.0)
        : std::runtime_error(msg), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

/// Spectrum too close to degenerate for the requested operation.
class degeneracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace octrmt
