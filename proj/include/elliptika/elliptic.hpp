#ifndef ELLIPTIKA_ELLIPTIC_HPP
#define ELLIPTIKA_ELLIPTIC_HPP

#include <cmath>

#include "elliptika/common.hpp"
#include "elliptika/theta.hpp"

namespace elliptika {

// Complete elliptic integral of the first kind, K(k), by the arithmetic-
// geometric mean (DLMF 19.8.5). Quadratic convergence, ~6 iterations.
inline double complete_elliptic_k(double k) {
    if (!(k > 0.0 && k < 1.0)) throw domain_error("complete_elliptic_k: k must lie in (0,1)");
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 40 && std::abs(a - b) > 0.5e-16 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

// Complete elliptic integral of the second kind via the AGM sum-of-squares
// correction: E = K (1 - sum 2^{n-1} c_n^2) with c_0 = k (DLMF 19.8.6).
inline double complete_elliptic_e(double k) {
    if (!(k > 0.0 && k < 1.0)) throw domain_error("complete_elliptic_e: k must lie in (0,1)");
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    double c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int i = 0; i < 40 && std::abs(c) > 1e-18; ++i) {
        double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    return pi / (2.0 * a) * (1.0 - sum);
}

// The coupled constants of one modulus. Immutable after construction; all
// evaluators take it by const reference.
struct EllipticParams {
    cplx k;
    cplx kprime;
    cplx big_k;       // K
    cplx big_kprime;  // K'
    cplx big_e;       // E
    cplx big_eprime;  // E'
    cplx q;           // nome exp(i pi tau), |q| < 1
    cplx tau;         // i K'/K, Im > 0
    bool real_modulus = false;

    // Parameter set of the complementary modulus: k <-> k', tau -> -1/tau.
    EllipticParams complement() const {
        EllipticParams c;
        c.k = kprime;
        c.kprime = k;
        c.big_k = big_kprime;
        c.big_kprime = big_k;
        c.big_e = big_eprime;
        c.big_eprime = big_e;
        c.tau = -1.0 / tau;
        c.q = std::exp(iu * pi * c.tau);
        c.real_modulus = real_modulus;
        return c;
    }
};

inline EllipticParams params_from_k(double k) {
    if (!(k > 0.0 && k < 1.0)) throw domain_error("params_from_k: k must lie in (0,1)");
    EllipticParams p;
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    p.k = k;
    p.kprime = kp;
    p.big_k = complete_elliptic_k(k);
    p.big_kprime = complete_elliptic_k(kp);
    p.big_e = complete_elliptic_e(k);
    p.big_eprime = complete_elliptic_e(kp);
    p.tau = iu * p.big_kprime / p.big_k;
    p.q = std::exp(iu * pi * p.tau);
    p.real_modulus = true;
    return p;
}

// Parameters from tau in the upper half-plane, through theta null values:
// k = th2^2/th3^2, k' = th4^2/th3^2, K = (pi/2) th3^2, K' = -i tau K.
// E comes from th4''(0)/th4(0) = 4K(K-E)/pi^2 and E' from Legendre's relation.
inline EllipticParams params_from_tau(cplx tau) {
    if (!(tau.imag() > 0.0)) throw domain_error("params_from_tau: Im(tau) must be positive");
    EllipticParams p;
    cplx t2 = theta(2, 0.0, tau);
    cplx t3 = theta(3, 0.0, tau);
    cplx t4 = theta(4, 0.0, tau);
    p.tau = tau;
    p.q = std::exp(iu * pi * tau);
    p.k = (t2 * t2) / (t3 * t3);
    p.kprime = (t4 * t4) / (t3 * t3);
    p.big_k = 0.5 * pi * t3 * t3;
    p.big_kprime = -iu * tau * p.big_k;
    cplx ratio = theta(4, 0.0, tau, 2) / t4;
    p.big_e = p.big_k - (pi * pi / (4.0 * p.big_k)) * ratio;
    // K E' + K' E - K K' = pi/2
    p.big_eprime = (0.5 * pi + p.big_k * p.big_kprime - p.big_kprime * p.big_e) / p.big_k;
    p.real_modulus = std::abs(tau.real()) < 1e-14;
    return p;
}

// Defect of Legendre's relation; ~1e-15 for a consistent parameter set.
inline double legendre_defect(const EllipticParams& p) {
    return std::abs(p.big_k * p.big_eprime + p.big_kprime * p.big_e -
                    p.big_k * p.big_kprime - 0.5 * pi);
}

}  // namespace elliptika

#endif
