#ifndef ELLIPTIKA_EISENSTEIN_HPP
#define ELLIPTIKA_EISENSTEIN_HPP

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "elliptika/common.hpp"
#include "elliptika/elliptic.hpp"
#include "elliptika/gamma.hpp"
#include "elliptika/jacobi.hpp"
#include "elliptika/kernels.hpp"
#include "elliptika/lfunc.hpp"
#include "elliptika/theta.hpp"

namespace elliptika {

// Index (j,l) of one of the sixteen lattice series. The binary digits
// j = 2a+b, l = 2c+d drive the sign weights (a: alternating in m,
// b: alternating in n), the denominator shift (c: sin vs cos) and the
// half-offset of the n-lattice (d).
struct SeriesIndex {
    int j, l;
    int a, b, c, d;
    int frak_a;           // Gamma-factor parity: floor((j+l)/2) mod 2
    bool omit_n0;         // n = 0 term omitted (exactly when l = 0)
    bool has_pole_at_1;   // simple pole of the completed series at s = 1

    static SeriesIndex make(int j, int l) {
        if (j < 0 || j > 3 || l < 0 || l > 3)
            throw domain_error("SeriesIndex: j and l must lie in 0..3");
        SeriesIndex idx;
        idx.j = j;
        idx.l = l;
        idx.a = j >> 1;
        idx.b = j & 1;
        idx.c = l >> 1;
        idx.d = l & 1;
        idx.frak_a = ((j + l) / 2) % 2;
        idx.omit_n0 = (l == 0);
        idx.has_pole_at_1 = (j == 3 && l == 1) || (j == 2 && l == 2) ||
                            (j == 3 && l == 2) || (j == 2 && l == 3);
        return idx;
    }

    std::string name() const {
        return "(" + std::to_string(j) + "," + std::to_string(l) + ")";
    }
};

enum class SeriesMethod { double_sum, hurwitz_rows, reflected };

inline const char* to_string(SeriesMethod m) {
    switch (m) {
        case SeriesMethod::double_sum: return "double_sum";
        case SeriesMethod::hurwitz_rows: return "hurwitz_rows";
        default: return "reflected";
    }
}

struct SeriesEval {
    cplx value;
    double abs_error_est = 0.0;
    int rows_used = 0;
    SeriesMethod method = SeriesMethod::hurwitz_rows;
};

namespace detail {

// Row denominator sin(pi(c/2 + w)); written as cos(pi w) when c = 1.
inline cplx row_denominator(int c, cplx w) {
    return c == 1 ? std::cos(pi * w) : std::sin(pi * w);
}

inline double row_weight(int b, long n) {
    return (b == 1 && (n % 2 != 0)) ? -1.0 : 1.0;
}

inline void reject_cut_crossing(cplx w) {
    if (std::abs(w.imag()) < 1e-12 && w.real() < -0.4999)
        throw domain_error("eisenstein row base crosses the negative real axis");
}

}  // namespace detail

// Brute-force oracle: the truncated double sum over 0 <= m <= M, |n| <= N.
// Each truncated m-row is completed with the standard two-term asymptotic
// tail (integral + midpoint, or the alternating analogue); without it the
// m-tail of the non-alternating rows, ~ M^{1-Re s}/(Re s - 1), would dwarf
// any useful tolerance. Requires Re(s) > 1.
inline SeriesEval zeta_jl_direct(const SeriesIndex& idx, cplx s, cplx tau, int M, int N) {
    if (!(s.real() > 1.0)) throw domain_error("zeta_jl_direct: requires Re(s) > 1");
    if (!(tau.imag() > 0.0)) throw domain_error("zeta_jl_direct: requires Im(tau) > 0");
    if (M < 8 || N < 1 || M > 10000 || N > 10000)
        throw domain_error("zeta_jl_direct: M, N out of range");

    const double sigma = s.real();
    // crude bound on |sum_m| per row, for skipping rows whose csc factor has
    // already underflowed past double precision
    const double row_bound = std::pow(2.0, sigma) * (1.0 + 1.0 / (sigma - 1.0));

    cplx total = 0.0;
    double err = 0.0;
    double last_ring = 0.0;
    int rows = 0;

    auto row_value = [&](long n) -> cplx {
        cplx w = (static_cast<double>(n) + 0.5 * idx.d) * tau;
        detail::reject_cut_crossing(w + 0.5);
        cplx den = detail::row_denominator(idx.c, w);
        double inv_den = 1.0 / std::abs(den);
        if (row_bound * inv_den < 1e-18 * std::max(1.0, std::abs(total))) return 0.0;
        ++rows;
        cplx acc = 0.0;
        if (idx.a == 1) {
            for (int m = 0; m < M; ++m) acc += std::pow(cplx(m + 0.5, 0.0) + w, -s);
            cplx W = cplx(M + 0.5, 0.0) + w;
            acc += std::pow(W, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(W, -s) +
                   s * std::pow(W, -s - 1.0) / 12.0;
            err += std::abs(detail::pochhammer(s, 3) * std::pow(W, -s - 3.0)) / 720.0 * inv_den;
        } else {
            for (int m = 0; m < M; ++m)
                acc += (m % 2 ? -1.0 : 1.0) * std::pow(cplx(m + 0.5, 0.0) + w, -s);
            cplx W = cplx(M + 0.5, 0.0) + w;
            double sgn = (M % 2 ? -1.0 : 1.0);
            acc += sgn * (0.5 * std::pow(W, -s) + 0.25 * s * std::pow(W, -s - 1.0));
            err += std::abs(detail::pochhammer(s, 3) * std::pow(W, -s - 3.0)) / 48.0 * inv_den;
        }
        return detail::row_weight(idx.b, n) * acc / den;
    };

    if (!idx.omit_n0) total += row_value(0);
    for (long n = 1; n <= N; ++n) {
        cplx ring = row_value(n) + row_value(-n);
        total += ring;
        last_ring = std::abs(ring);
    }
    err += last_ring;

    return {total, err, rows, SeriesMethod::double_sum};
}

namespace detail {

// One completed series by Hurwitz rows:
//   Lambda_{j,l}(s,tau) = pi^{-s/2} Gamma((s+frak_a)/2)
//       sum_n (1-2b)^n Z(s, 1/2 + (n+d/2) tau) / sin(pi(c/2 + (n+d/2) tau)),
// Z = zeta for a = 1, zeta_E for a = 0. At s = 1 the zeta rows are replaced
// by their finite parts -psi(w); the 1/(s-1) parts cancel for every entire
// index (and the pole-bearing ones never reach here).
inline SeriesEval lambda_rows(const SeriesIndex& idx, cplx s, cplx tau,
                              const Tolerances& tol) {
    const bool at_one = std::abs(s - 1.0) < 1e-14;
    auto Z = [&](cplx base) -> cplx {
        if (idx.a == 1) {
            if (at_one) return -digamma(base);
            return hurwitz_zeta(s, base).value;
        }
        return alt_hurwitz_zeta(s, base).value;
    };

    cplx sum = 0.0;
    int rows = 0;
    double last_ring = 0.0;
    int quiet = 0;

    auto row = [&](long n) -> cplx {
        cplx w = (static_cast<double>(n) + 0.5 * idx.d) * tau;
        reject_cut_crossing(w + 0.5);
        cplx den = row_denominator(idx.c, w);
        ++rows;
        return row_weight(idx.b, n) * Z(cplx(0.5, 0.0) + w) / den;
    };

    if (!idx.omit_n0) sum += row(0);
    for (long n = 1; n <= tol.max_rows; ++n) {
        cplx ring = row(n) + row(-n);
        sum += ring;
        last_ring = std::abs(ring);
        if (last_ring < tol.row_tol * std::max(1.0, std::abs(sum))) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        if (n == tol.max_rows)
            throw truncation_error("lambda_jl: row sum did not converge");
    }

    cplx gamma_factor = std::pow(cplx(pi, 0.0), -0.5 * s) *
                        gamma(0.5 * (s + static_cast<double>(idx.frak_a)));
    return {gamma_factor * sum, last_ring * std::abs(gamma_factor), rows,
            SeriesMethod::hurwitz_rows};
}

}  // namespace detail

// One reflection identity:
//   Lambda_first(s,tau) + sign * (i/tau) Lambda_second(1-s, -1/tau) = rhs(s,tau)
struct ReflectionIdentity {
    int number;
    SeriesIndex first;
    SeriesIndex second;
    double sign;
    std::function<cplx(cplx, cplx)> rhs;  // (s, tau)
};

inline const ReflectionIdentity& reflection_identity_for(const SeriesIndex& idx) {
    auto theta30sq = [](cplx tau) { cplx t = theta(3, 0.0, tau); return t * t; };
    auto theta40sq = [](cplx tau) { cplx t = theta(4, 0.0, tau); return t * t; };
    static const std::array<ReflectionIdentity, 10> eqs = {{
        {1, SeriesIndex::make(1, 1), SeriesIndex::make(1, 1), 1.0,
         [theta30sq](cplx s, cplx tau) {
             return -iu * theta30sq(tau) * completed_lambda_chi4(s);
         }},
        {2, SeriesIndex::make(1, 2), SeriesIndex::make(2, 1), 1.0,
         [](cplx, cplx) { return cplx(0.0); }},
        {3, SeriesIndex::make(1, 3), SeriesIndex::make(3, 1), 1.0,
         [theta40sq](cplx s, cplx tau) {
             return -iu * theta40sq(tau) * (std::pow(cplx(2, 0), 1.0 - s) - 1.0) *
                    completed_lambda(s);
         }},
        {4, SeriesIndex::make(2, 2), SeriesIndex::make(2, 2), 1.0,
         [theta30sq](cplx s, cplx tau) { return theta30sq(tau) * completed_lambda(s); }},
        {5, SeriesIndex::make(3, 2), SeriesIndex::make(2, 3), 1.0,
         [theta40sq](cplx s, cplx tau) { return theta40sq(tau) * completed_lambda(s); }},
        {6, SeriesIndex::make(3, 3), SeriesIndex::make(3, 3), -1.0,
         [](cplx, cplx) { return cplx(0.0); }},
        {7, SeriesIndex::make(0, 1), SeriesIndex::make(1, 0), -1.0,
         [](cplx s, cplx tau) {
             return -(iu / tau) * (2.0 / std::sqrt(pi)) * completed_lambda_chi4(s - 1.0);
         }},
        {8, SeriesIndex::make(0, 2), SeriesIndex::make(2, 0), 1.0,
         [](cplx s, cplx tau) {
             return (iu / tau) * ((s - 1.0) / std::sqrt(pi)) *
                    (1.0 - std::pow(cplx(2, 0), 2.0 - s)) * completed_lambda(s - 1.0);
         }},
        {9, SeriesIndex::make(0, 3), SeriesIndex::make(3, 0), 1.0,
         [](cplx s, cplx tau) {
             return (iu / tau) * ((s - 1.0) / std::sqrt(pi)) *
                    (1.0 - std::pow(cplx(2, 0), 2.0 - s)) * completed_lambda(s - 1.0);
         }},
        {10, SeriesIndex::make(0, 0), SeriesIndex::make(0, 0), -1.0,
         [](cplx s, cplx tau) {
             return (2.0 / std::sqrt(pi)) *
                    (completed_lambda_chi4(s + 1.0) -
                     (iu / tau) * completed_lambda_chi4(s - 1.0));
         }},
    }};
    for (const auto& eq : eqs) {
        if ((eq.first.j == idx.j && eq.first.l == idx.l) ||
            (eq.second.j == idx.j && eq.second.l == idx.l))
            return eq;
    }
    throw domain_error("reflection_identity_for: no equation for index " + idx.name());
}

// Closed residue at s = 1 for the four pole-bearing indices.
inline cplx residue_closed_form(const SeriesIndex& idx, const EllipticParams& p) {
    if (idx.j == 3 && idx.l == 1) return -2.0 * iu * p.k * p.big_k / pi;
    if (idx.j == 2 && idx.l == 2) return 2.0 * p.big_k / pi;
    if (idx.j == 3 && idx.l == 2) return 2.0 * p.kprime * p.big_k / pi;
    if (idx.j == 2 && idx.l == 3) return 2.0 * p.k * p.big_k / pi;
    throw domain_error("residue_closed_form: index " + idx.name() + " is entire");
}

// Completed series Lambda_{j,l}(s, tau). Hurwitz rows carry the window
// Re(s) > -1; outside it the value is pulled through the index's reflection
// identity (method = reflected).
inline SeriesEval lambda_jl(const SeriesIndex& idx, cplx s, cplx tau,
                            const Tolerances& tol = default_tolerances()) {
    if (!(tau.imag() > 0.0)) throw domain_error("lambda_jl: requires Im(tau) > 0");
    if (idx.has_pole_at_1 && std::abs(s - 1.0) < 1e-12) {
        cplx res = residue_closed_form(idx, params_from_tau(tau));
        throw pole_error("lambda_jl: " + idx.name() +
                         " has a simple pole at s = 1 with residue " +
                         std::to_string(res.real()) + (res.imag() < 0 ? " - " : " + ") +
                         std::to_string(std::abs(res.imag())) + "i");
    }
    if (s.real() > -1.0) return detail::lambda_rows(idx, s, tau, tol);

    // reflected evaluation
    const ReflectionIdentity& eq = reflection_identity_for(idx);
    SeriesEval inner;
    cplx value;
    if (eq.first.j == idx.j && eq.first.l == idx.l) {
        inner = detail::lambda_rows(eq.second, 1.0 - s, -1.0 / tau, tol);
        value = eq.rhs(s, tau) - eq.sign * (iu / tau) * inner.value;
    } else {
        cplx st = 1.0 - s, taut = -1.0 / tau;
        inner = detail::lambda_rows(eq.first, st, taut, tol);
        value = (iu / tau) * (eq.rhs(st, taut) - inner.value) / eq.sign;
    }
    return {value, inner.abs_error_est, inner.rows_used, SeriesMethod::reflected};
}

// Residual of the reflection identity attached to (j,l), evaluated as
// printed: Lambda_first(s,tau) + sign (i/tau) Lambda_second(1-s,-1/tau) - rhs.
inline cplx funceq_residual(const SeriesIndex& idx, cplx s, cplx tau,
                            const Tolerances& tol = default_tolerances()) {
    const ReflectionIdentity& eq = reflection_identity_for(idx);
    cplx lhs1 = lambda_jl(eq.first, s, tau, tol).value;
    cplx lhs2 = lambda_jl(eq.second, 1.0 - s, -1.0 / tau, tol).value;
    return lhs1 + eq.sign * (iu / tau) * lhs2 - eq.rhs(s, tau);
}

struct ResidueResult {
    cplx numeric;
    cplx closed_form;
};

// Numeric residue at s = 1 via (s-1) Lambda(s) at s = 1 +- h, Richardson
// over h in {1e-3, 1e-4}, against the closed form.
inline ResidueResult residue_at_one(const SeriesIndex& idx, cplx tau,
                                    const Tolerances& tol = default_tolerances()) {
    if (!idx.has_pole_at_1)
        throw domain_error("residue_at_one: index " + idx.name() + " is entire");
    auto ring = [&](double h) {
        cplx up = lambda_jl(idx, 1.0 + h, tau, tol).value;
        cplx dn = lambda_jl(idx, 1.0 - h, tau, tol).value;
        return 0.5 * (h * up + (-h) * dn);
    };
    cplx a1 = ring(1e-3), a2 = ring(1e-4);
    cplx numeric = a2 + (a2 - a1) / 99.0;
    return {numeric, residue_closed_form(idx, params_from_tau(tau))};
}

struct SpecialValue {
    cplx value;                      // derivative-formula evaluation
    std::optional<cplx> closed_form; // explicit value, present for n <= 1 rows
    int s_integer;                   // the integer argument the formula targets
    double deriv_error_est;
};


// The 23 explicit closed forms known for the first one or two integer
// arguments of each series (n = 0 everywhere; n = 1 additionally for seven
// of them). Returns nullopt where none is on record.
inline std::optional<cplx> closed_form_value(const SeriesIndex& idx, int n,
                                               const EllipticParams& par) {
    if (n < 0 || n > 1) return std::nullopt;
    if (!par.real_modulus)
        throw domain_error("closed_form_value: real-modulus parameters required");
    const double k = par.k.real(), kp = par.kprime.real();
    const double K = par.big_k.real(), E = par.big_e.real();
    const double spi = std::sqrt(pi);
    const int code = idx.j * 4 + idx.l;
    std::optional<cplx> out_cf;
    const double pi2 = pi * pi, pi3 = pi2 * pi;
    const double K2 = K * K, K3 = K2 * K, K4 = K2 * K2, k2 = k * k;
    switch (code * 4 + n) {
        case (1 * 4 + 1) * 4 + 0: out_cf = iu * (kp - 1.0) * K / spi; break;
        case (1 * 4 + 1) * 4 + 1:
            out_cf = iu * K / (2.0 * pi * spi) * (pi2 * (kp - 1.0) + 4.0 * kp * k2 * K2);
            break;
        case (1 * 4 + 2) * 4 + 0: out_cf = 2.0 * kp * K2 / (pi * spi); break;
        case (1 * 4 + 2) * 4 + 1:
            out_cf = kp * K2 / (3.0 * pi2 * spi) * (pi2 + 4.0 * (2.0 - k2) * K2);
            break;
        case (2 * 4 + 1) * 4 + 0: out_cf = -k * K / spi; break;
        case (2 * 4 + 1) * 4 + 1:
            out_cf = -k * K / (2.0 * pi * spi) * (pi2 + 4.0 * (k2 - 1.0) * K2);
            break;
        case (1 * 4 + 3) * 4 + 0: out_cf = -2.0 * iu * kp * k2 * K3 / pi2; break;
        case (1 * 4 + 3) * 4 + 1:
            out_cf = -iu * kp * k2 * K3 / (3.0 * pi3) * (pi2 + 2.0 * (5.0 * k2 - 4.0) * K2);
            break;
        case (3 * 4 + 1) * 4 + 0: out_cf = -iu * k * K / pi * (pi - 2.0 * kp * K); break;
        case (3 * 4 + 1) * 4 + 1:
            out_cf = -iu * k * K / (3.0 * pi2) *
                              (pi3 - 3.0 * pi2 * kp * K + 4.0 * kp * (1.0 - 2.0 * k2) * K3);
            break;
        case (2 * 4 + 2) * 4 + 0:
            out_cf = K / (2.0 * pi2) * (pi2 + 4.0 * (1.0 - k2) * K2);
            break;
        case (2 * 4 + 2) * 4 + 1:
            out_cf = K / (24.0 * pi3) *
                              (pi2 * pi2 + 8.0 * pi2 * (1.0 - k2) * K2 +
                               16.0 * (5.0 - 6.0 * k2 + k2 * k2) * K4);
            break;
        case (3 * 4 + 2) * 4 + 0: out_cf = kp * K / (2.0 * pi2) * (pi2 + 4.0 * K2); break;
        case (2 * 4 + 3) * 4 + 0:
            out_cf = k * K / (2.0 * pi2) * (pi2 + 4.0 * (k2 - 1.0) * K2);
            break;
        case (3 * 4 + 3) * 4 + 0: out_cf = -2.0 * iu * k * kp * K2 / (pi * spi); break;
        case (3 * 4 + 3) * 4 + 1:
            out_cf =
                -iu * k * kp * K2 / (3.0 * pi2 * spi) * (pi2 + 4.0 * (2.0 * k2 - 1.0) * K2);
            break;
        case (0 * 4 + 1) * 4 + 0:
            out_cf = 2.0 * K / pi * (kp * kp * K - E);
            break;
        case (1 * 4 + 0) * 4 + 0: out_cf = 0.5 * pi - 2.0 * kp * K2 / pi; break;
        case (0 * 4 + 2) * 4 + 0: out_cf = 2.0 * K * E / (pi * spi); break;
        case (2 * 4 + 0) * 4 + 0: out_cf = (pi - 2.0 * K) / (2.0 * spi); break;
        case (0 * 4 + 3) * 4 + 0:
            out_cf = 2.0 * K / (pi * spi) * (E - kp * kp * K);
            break;
        case (3 * 4 + 0) * 4 + 0: out_cf = (pi - 2.0 * kp * K) / (2.0 * spi); break;
        case (0 * 4 + 0) * 4 + 0: out_cf = (pi2 - 4.0 * K * E) / (2.0 * pi); break;
        default: break;
    }
    return out_cf;
}

// Explicit integer values through the stated derivative formulas.
// n <= 3 (derivative order <= 7); the n = 0,1 closed forms ride along for
// cross-checking.
inline SpecialValue special_value(const SeriesIndex& idx, int n, const EllipticParams& par,
                                  const Tolerances& tol = default_tolerances()) {
    if (n < 0 || n > 3) throw domain_error("special_value: n must lie in 0..3");
    if (!par.real_modulus)
        throw domain_error("special_value: derivative formulas need a real modulus");

    const EllipticParams cp = par.complement();
    const double k = par.k.real(), kp = par.kprime.real();
    const double K = par.big_k.real(), Kp = par.big_kprime.real();
    const double E = par.big_e.real();
    const cplx twoK = 2.0 * par.big_k;
    const double spi = std::sqrt(pi);

    auto J = [cp, twoK](JacobiCode code, double y) { return jacobi(code, twoK * y, cp); };
    auto brace = [&](double y) {
        return k * k * nd_squared_integral(2.0 * K * y, cp) + 2.0 * (E - K) * y;
    };
    auto brace2 = [&](double y) {
        return jacobi_epsilon(2.0 * K * y, cp) + 2.0 * (E - K) * y;
    };

    std::function<cplx(double)> kernel;
    cplx pre;
    cplx additive = 0.0;
    int p;  // derivative order
    const double negpow = (n % 2 ? -1.0 : 1.0) / std::pow(4.0 * pi, n);
    const double g_half = gamma_half_integer(n);      // Gamma(n + 1/2)
    const double g_3half = gamma_half_integer(n + 1); // Gamma(n + 3/2)

    const int code = idx.j * 4 + idx.l;
    switch (code) {
        case 1 * 4 + 1:
            kernel = [=](double y) { return (kp * J(JacobiCode::cd, y) - 1.0) / std::cosh(pi * y); };
            pre = iu * K * negpow / g_half;
            p = 2 * n;
            break;
        case 1 * 4 + 2:
            kernel = [=](double y) { return J(JacobiCode::sn, y) / std::sinh(pi * y); };
            pre = kp * K * negpow / g_half;
            p = 2 * n;
            break;
        case 2 * 4 + 1:
            kernel = [=](double y) { return J(JacobiCode::nd, y) / std::cosh(pi * y); };
            pre = -k * K * negpow / g_half;
            p = 2 * n;
            break;
        case 1 * 4 + 3:
            kernel = [=](double y) { return (J(JacobiCode::cd, y) - 1.0) / std::sinh(pi * y); };
            pre = iu * kp * K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 3 * 4 + 1:
            kernel = [=](double y) {
                return (kp * J(JacobiCode::sd, y) + std::exp(-pi * y)) / std::cosh(pi * y);
            };
            pre = iu * k * K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 2 * 4 + 2:
            kernel = [=](double y) {
                return (J(JacobiCode::dn, y) - std::exp(-pi * y)) / std::sinh(pi * y);
            };
            pre = -K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 3 * 4 + 2:
            kernel = [=](double y) {
                return (J(JacobiCode::cn, y) - std::exp(-pi * y)) / std::sinh(pi * y);
            };
            pre = -kp * K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 2 * 4 + 3:
            kernel = [=](double y) {
                return (J(JacobiCode::nd, y) - std::exp(-pi * y)) / std::sinh(pi * y);
            };
            pre = -k * K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 3 * 4 + 3:
            kernel = [=](double y) { return J(JacobiCode::sd, y) / std::sinh(pi * y); };
            pre = -iu * k * kp * K * negpow / g_half;
            p = 2 * n;
            break;
        case 0 * 4 + 1:
            kernel = [=](double y) { return (iu / k) * brace(y) / std::cosh(pi * y); };
            pre = iu * k * K / (2.0 * spi) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        case 1 * 4 + 0:
            kernel = [=](double y) { return J(JacobiCode::sn, y) / std::cosh(pi * y); };
            pre = -kp * K / (2.0 * spi) * negpow / g_3half;
            additive = std::abs(euler_number_d(2 * n + 2)) / factorial(2 * n + 2) *
                       std::pow(pi, n + 1) * factorial(n + 1);
            p = 2 * n + 1;
            break;
        case 0 * 4 + 2:
            kernel = [=](double y) { return cplx(brace2(y) / std::sinh(pi * y)); };
            pre = K * negpow / g_half;
            p = 2 * n;
            break;
        case 2 * 4 + 0:
            kernel = [=](double y) { return J(JacobiCode::dn, y) / std::cosh(pi * y); };
            pre = -K * negpow / g_half;
            additive = (2.0 * n + 1.0) * factorial(n) / std::pow(pi, n + 1.5) *
                       hurwitz_zeta(cplx(2 * n + 2, 0), 0.5).value;
            p = 2 * n;
            break;
        case 0 * 4 + 3:
            kernel = [=](double y) { return cplx((1.0 / k) * brace(y) / std::sinh(pi * y)); };
            pre = k * K * negpow / g_half;
            p = 2 * n;
            break;
        case 3 * 4 + 0:
            kernel = [=](double y) { return J(JacobiCode::cn, y) / std::cosh(pi * y); };
            pre = -kp * K * negpow / g_half;
            additive = (2.0 * n + 1.0) * factorial(n) / std::pow(pi, n + 1.5) *
                       hurwitz_zeta(cplx(2 * n + 2, 0), 0.5).value;
            p = 2 * n;
            break;
        case 0 * 4 + 0:
            kernel = [=, &par](double y) {
                cplx f = theta4_log_derivative(y, par.complement());
                return (2.0 * K * y + K * f - Kp * std::tanh(pi * y)) / std::cosh(pi * y);
            };
            pre = -spi / (4.0 * Kp) * negpow / g_3half;
            p = 2 * n + 1;
            break;
        default:
            throw domain_error("special_value: unsupported index " + idx.name());
    }

    DerivativeResult d = derivative_at_zero(kernel, p, 0.05 / (1.0 + n), tol);
    SpecialValue out;
    out.value = pre * d.value + additive;
    out.deriv_error_est = std::abs(pre) * d.abs_error_est;
    out.s_integer = idx.frak_a == 1 ? 2 * n + 1 : 2 * n + 2;

    out.closed_form = closed_form_value(idx, n, par);
    return out;
}

}  // namespace elliptika

#endif
