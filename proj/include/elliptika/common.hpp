#ifndef ELLIPTIKA_COMMON_HPP
#define ELLIPTIKA_COMMON_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace elliptika {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx iu{0.0, 1.0};

// Everything that throws below derives from error, so callers can split
// "bad input" (domain_error) from "evaluation failed" (the rest).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

// Requested value sits at (or too close to) a pole of the function.
struct pole_error : error {
    using error::error;
};

// A series hit its term cap before reaching the requested tolerance.
struct truncation_error : error {
    using error::error;
};

// Quadrature refinement stalled, or Richardson levels disagree.
struct convergence_error : error {
    using error::error;
};

// Central tolerance record. All identity/series/quadrature thresholds used by
// the library live here; tests and the CLI may override a copy.
struct Tolerances {
    double real_identity = 1e-14;  // AGM-path identities (k^2+k'^2, K/E values)
    double complex_theta = 1e-11;  // theta-path identities at complex tau
    double tau_relation = 1e-12;   // K' = -i tau K
    double legendre = 1e-12;       // Legendre relation defect
    double theta_series = 1e-15;   // q-series term stop
    int theta_max_terms = 64;
    double pole_proximity = 1e-13;  // |denominator| < this * scale -> pole_error
    double quad_tol = 1e-10;        // default absolute quadrature target
    double row_tol = 1e-15;         // Eisenstein row-sum stop
    int max_rows = 400;
    double richardson_instability = 1e-5;  // derivative level disagreement cap
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace elliptika

#endif
