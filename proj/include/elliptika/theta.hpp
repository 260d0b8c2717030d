#ifndef ELLIPTIKA_THETA_HPP
#define ELLIPTIKA_THETA_HPP

#include <cmath>

#include "elliptika/common.hpp"

namespace elliptika {

struct ThetaSeriesConfig {
    double tolerance = 1e-15;
    int max_terms = 64;
};

namespace detail {

// d^order/dz^order of sin(f z) or cos(f z).
inline cplx trig_deriv(bool sine, cplx fz, double f, int order) {
    switch (order) {
        case 0: return sine ? std::sin(fz) : std::cos(fz);
        case 1: return sine ? f * std::cos(fz) : -f * std::sin(fz);
        default: return sine ? -f * f * std::sin(fz) : -f * f * std::cos(fz);
    }
}

}  // namespace detail

// Jacobi theta function theta_index(z|tau) (DLMF 20.2.1-20.2.4) or its
// z-derivative of order 1 or 2, by the q-series with q = exp(i pi tau).
// Terms fall off like |q|^{n^2} e^{2n|Im z|}; the stop test is deferred past
// the growth hump n ~ |Im z|/(pi Im tau) so it never fires on the way up.
inline cplx theta(int index, cplx z, cplx tau, int deriv_order = 0,
                  const ThetaSeriesConfig& cfg = {}) {
    if (!(tau.imag() > 0.0)) throw domain_error("theta: Im(tau) must be positive");
    if (index < 1 || index > 4) throw domain_error("theta: index must be 1..4");
    if (deriv_order < 0 || deriv_order > 2) throw domain_error("theta: deriv_order must be 0..2");

    const bool half_integer = (index == 1 || index == 2);  // exponents (n+1/2)^2
    const bool sine = (index == 1);
    const bool alternating = (index == 1 || index == 4);

    cplx sum = 0.0;
    if (!half_integer && deriv_order == 0) sum = 1.0;  // n = 0 term of theta_3/theta_4

    const int n_hump = static_cast<int>(std::abs(z.imag()) / (pi * tau.imag())) + 1;
    int quiet = 0;
    for (int n = half_integer ? 0 : 1; n <= cfg.max_terms; ++n) {
        double m = half_integer ? (n + 0.5) : n;
        cplx qpow = std::exp(iu * pi * tau * (m * m));
        double sign = (alternating && n % 2 == 1) ? -1.0 : 1.0;
        double freq = 2.0 * m;
        cplx term = 2.0 * sign * qpow * detail::trig_deriv(sine, freq * z, freq, deriv_order);
        sum += term;
        if (n < n_hump) continue;
        double scale = std::max(1.0, std::abs(sum));
        if (std::abs(term) < cfg.tolerance * scale) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw truncation_error("theta: series did not meet tolerance within max_terms");
}

}  // namespace elliptika

#endif
