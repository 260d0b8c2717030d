#ifndef ELLIPTIKA_GAMMA_HPP
#define ELLIPTIKA_GAMMA_HPP

#include <cmath>

#include "elliptika/common.hpp"

namespace elliptika {

// log Gamma via the Lanczos approximation (g = 7, 9 terms), reflected for
// Re z < 0.5. Good to ~1e-14 relative over the ranges used here.
inline cplx log_gamma(cplx z) {
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline cplx gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 0.0)
        throw pole_error("gamma pole at nonpositive integer");
    return std::exp(log_gamma(z));
}

// digamma = Gamma'/Gamma, by recurrence up to Re z >= 10 and then the
// asymptotic series with Bernoulli terms.
inline cplx digamma(cplx z) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 0.0)
        throw pole_error("digamma pole at nonpositive integer");
    cplx shift = 0.0;
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    static const double b2k_over_2k[8] = {
        // B_{2k}/(2k) for k = 1..8
        1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,   -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0,
    };
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx sum = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    for (int k = 0; k < 8; ++k) {
        sum -= b2k_over_2k[k] * p;
        p *= inv2;
    }
    return sum + shift;
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
inline double gamma_half_integer(int n) {
    double r = std::sqrt(pi);
    for (int i = 0; i < n; ++i) r *= (i + 0.5);
    return r;
}

}  // namespace elliptika

#endif
