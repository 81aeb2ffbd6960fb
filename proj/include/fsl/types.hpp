#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fsl {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi_v<double>;

// Invalid input, failed validation, out-of-domain arguments.  CLI maps this to exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-convergence or loss of numerical meaning (quadrature, root search,
// winding counts, stabilization ladders).  CLI maps this to exit 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fsl
