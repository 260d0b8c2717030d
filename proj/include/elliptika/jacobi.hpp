#ifndef ELLIPTIKA_JACOBI_HPP
#define ELLIPTIKA_JACOBI_HPP

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "elliptika/common.hpp"
#include "elliptika/elliptic.hpp"
#include "elliptika/quadrature.hpp"
#include "elliptika/theta.hpp"

namespace elliptika {

// The twelve Jacobi elliptic functions, Glaisher codes pq with
// p,q in {s,c,d,n}.
enum class JacobiCode { sn, cn, dn, ns, nc, nd, sc, cs, sd, ds, cd, dc };

inline JacobiCode jacobi_code_from_string(std::string_view s) {
    if (s == "sn") return JacobiCode::sn;
    if (s == "cn") return JacobiCode::cn;
    if (s == "dn") return JacobiCode::dn;
    if (s == "ns") return JacobiCode::ns;
    if (s == "nc") return JacobiCode::nc;
    if (s == "nd") return JacobiCode::nd;
    if (s == "sc") return JacobiCode::sc;
    if (s == "cs") return JacobiCode::cs;
    if (s == "sd") return JacobiCode::sd;
    if (s == "ds") return JacobiCode::ds;
    if (s == "cd") return JacobiCode::cd;
    if (s == "dc") return JacobiCode::dc;
    throw domain_error("unknown Jacobi code: " + std::string(s));
}

inline const char* to_string(JacobiCode c) {
    static const char* names[] = {"sn", "cn", "dn", "ns", "nc", "nd",
                                  "sc", "cs", "sd", "ds", "cd", "dc"};
    return names[static_cast<int>(c)];
}

namespace detail {

inline void jacobi_letters(JacobiCode c, int& p, int& q) {
    // letter -> 0:s 1:c 2:d 3:n
    static const int tab[][2] = {{0, 3}, {1, 3}, {2, 3}, {3, 0}, {3, 1}, {3, 2},
                                 {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    p = tab[static_cast<int>(c)][0];
    q = tab[static_cast<int>(c)][1];
}

// phi_letter(zeta): sn = phi_s/phi_n, cn = phi_c/phi_n, dn = phi_d/phi_n,
// and every quotient code reduces to phi_p/phi_q (DLMF 22.2).
inline cplx jacobi_phi(int letter, cplx zeta, const EllipticParams& par,
                       cplx t20, cplx t30, cplx t40) {
    switch (letter) {
        case 0: return (t30 / t20) * theta(1, zeta, par.tau);
        case 1: return (t40 / t20) * theta(2, zeta, par.tau);
        case 2: return (t40 / t30) * theta(3, zeta, par.tau);
        default: return theta(4, zeta, par.tau);
    }
}

}  // namespace detail

// Jacobi elliptic function pq(z, k) for complex z, through theta quotients.
// Throws pole_error when z is too close to a pole of the requested code.
inline cplx jacobi(JacobiCode code, cplx z, const EllipticParams& par,
                   const Tolerances& tol = default_tolerances()) {
    int p, q;
    detail::jacobi_letters(code, p, q);
    cplx zeta = 0.5 * pi * z / par.big_k;
    cplx t20 = theta(2, 0.0, par.tau);
    cplx t30 = theta(3, 0.0, par.tau);
    cplx t40 = theta(4, 0.0, par.tau);
    cplx num = detail::jacobi_phi(p, zeta, par, t20, t30, t40);
    cplx den = detail::jacobi_phi(q, zeta, par, t20, t30, t40);
    if (std::abs(den) < tol.pole_proximity * std::max(1.0, std::abs(num)))
        throw pole_error(std::string("jacobi: ") + to_string(code) + " evaluated at a pole");
    return num / den;
}

// int_0^z dn(u,k)^2 du for real z (the Jacobi epsilon function, DLMF 22.16.30).
// Composite Gauss panels sized to the quarter period; `order` doubles as the
// refinement knob for oracle tests.
inline double jacobi_epsilon(double z, const EllipticParams& par, int order = 16) {
    if (!par.real_modulus) throw domain_error("jacobi_epsilon: real-modulus parameters required");
    if (z == 0.0) return 0.0;
    double K = par.big_k.real();
    auto dn2 = [&](double u) {
        cplx v = jacobi(JacobiCode::dn, u, par);
        return v * v;
    };
    cplx r = integrate_panels(dn2, 0.0, z, 0.5 * K, order);
    return r.real();
}

// int_0^z nd(u,k)^2 du, same scheme. Appears in the double-pole transforms.
inline double nd_squared_integral(double z, const EllipticParams& par, int order = 16) {
    if (!par.real_modulus) throw domain_error("nd_squared_integral: real-modulus parameters required");
    if (z == 0.0) return 0.0;
    double K = par.big_k.real();
    auto nd2 = [&](double u) {
        cplx v = jacobi(JacobiCode::nd, u, par);
        return v * v;
    };
    cplx r = integrate_panels(nd2, 0.0, z, 0.5 * K, order);
    return r.real();
}

// Logarithmic derivative of theta_4 at rescaled argument:
//   f(x) = theta_4'(-i pi tau x | tau) / theta_4(-i pi tau x | tau).
// Periodic with period K/K', and f(x+i) = f(x) - 2i. Poles at i/2 + n K/K'.
inline cplx theta4_log_derivative(cplx x, const EllipticParams& par,
                                  const Tolerances& tol = default_tolerances()) {
    cplx z = -iu * pi * par.tau * x;
    cplx den = theta(4, z, par.tau);
    cplx num = theta(4, z, par.tau, 1);
    if (std::abs(den) < tol.pole_proximity * std::max(1.0, std::abs(num)))
        throw pole_error("theta4_log_derivative: argument too close to a pole");
    return num / den;
}

}  // namespace elliptika

#endif
