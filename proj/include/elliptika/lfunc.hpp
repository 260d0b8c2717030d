#ifndef ELLIPTIKA_LFUNC_HPP
#define ELLIPTIKA_LFUNC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <vector>

#include "elliptika/common.hpp"
#include "elliptika/gamma.hpp"

namespace elliptika {

using bigint = boost::multiprecision::cpp_int;
using bigrational = boost::multiprecision::cpp_rational;

inline constexpr int exact_sequence_cap = 64;

namespace detail {

inline bigint binomial(int n, int k) {
    bigint r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

struct ExactTables {
    std::vector<bigint> euler;          // E_0, E_2, ..., E_64
    std::vector<bigrational> bernoulli; // B_0 .. B_64

    ExactTables() {
        int half = exact_sequence_cap / 2;
        euler.resize(half + 1);
        euler[0] = 1;
        // secant-series recurrence: sum_j C(2n,2j) E_{2j} = 0
        for (int n = 1; n <= half; ++n) {
            bigint acc = 0;
            for (int j = 0; j < n; ++j) acc += binomial(2 * n, 2 * j) * euler[j];
            euler[n] = -acc;
        }
        bernoulli.resize(exact_sequence_cap + 1);
        bernoulli[0] = 1;
        // sum_{j<=m} C(m+1,j) B_j = 0  (B_1 = -1/2 convention)
        for (int m = 1; m <= exact_sequence_cap; ++m) {
            bigrational acc = 0;
            for (int j = 0; j < m; ++j)
                acc += bigrational(binomial(m + 1, j)) * bernoulli[j];
            bernoulli[m] = -acc / bigrational(m + 1);
        }
    }
};

inline const ExactTables& exact_tables() {
    static const ExactTables t;
    return t;
}

}  // namespace detail

// Euler number E_n for even n <= 64, exact.
inline const bigint& euler_number(int n) {
    if (n < 0 || n % 2 != 0) throw domain_error("euler_number: n must be a nonnegative even integer");
    if (n > exact_sequence_cap)
        throw domain_error("euler_number: n exceeds the exact-arithmetic cap of 64");
    return detail::exact_tables().euler[n / 2];
}

// Bernoulli number B_n for n <= 64, exact rational.
inline const bigrational& bernoulli_number(int n) {
    if (n < 0) throw domain_error("bernoulli_number: n must be nonnegative");
    if (n > exact_sequence_cap)
        throw domain_error("bernoulli_number: n exceeds the exact-arithmetic cap of 64");
    return detail::exact_tables().bernoulli[n];
}

inline double euler_number_d(int n) {
    return euler_number(n).convert_to<double>();
}

inline double bernoulli_number_d(int n) {
    return bernoulli_number(n).convert_to<double>();
}

enum class LMethod { euler_maclaurin, dirichlet_series, reflection };

inline const char* to_string(LMethod m) {
    switch (m) {
        case LMethod::euler_maclaurin: return "euler_maclaurin";
        case LMethod::dirichlet_series: return "dirichlet_series";
        default: return "reflection";
    }
}

struct LValue {
    cplx value;
    double abs_error_est;
    LMethod method;
};

namespace detail {

inline cplx pochhammer(cplx s, int r) {
    cplx p = 1.0;
    for (int i = 0; i < r; ++i) p *= (s + static_cast<double>(i));
    return p;
}

inline void check_branch_cut(cplx a, const char* who) {
    if (a.imag() == 0.0 && a.real() <= 0.0)
        throw domain_error(std::string(who) + ": a lies on the branch cut arg(a) = pi");
}

}  // namespace detail

// Hurwitz zeta zeta(s, a) for complex s != 1 and |arg a| < pi, by
// Euler-Maclaurin with shift M = max(15, |s|+10) and 12 Bernoulli terms.
// The error estimate is twice the first omitted correction term.
inline LValue hurwitz_zeta(cplx s, cplx a) {
    detail::check_branch_cut(a, "hurwitz_zeta");
    if (std::abs(s - 1.0) < 1e-14) throw pole_error("hurwitz_zeta: pole at s = 1");

    const int M = std::max(15, static_cast<int>(std::ceil(std::abs(s))) + 10);
    cplx sum = 0.0;
    for (int m = 0; m < M; ++m) sum += std::pow(cplx(m, 0) + a, -s);
    cplx w = cplx(M, 0) + a;
    cplx winv = 1.0 / w;
    sum += std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s);

    cplx wpow = std::pow(w, -s) * winv;  // w^{-s-1}
    for (int j = 1; j <= 12; ++j) {
        double b = bernoulli_number_d(2 * j) / factorial(2 * j);
        sum += b * detail::pochhammer(s, 2 * j - 1) * wpow;
        wpow *= winv * winv;
    }
    double err = 2.0 * std::abs(bernoulli_number_d(26) / factorial(26) *
                                detail::pochhammer(s, 25) * wpow);
    return {sum, err, LMethod::euler_maclaurin};
}

// Alternating Hurwitz zeta zeta_E(s, a) = sum (-1)^n (n+a)^{-s}, entire in s,
// via 2^{-s} [zeta(s, a/2) - zeta(s, (a+1)/2)]. The two simple poles at s = 1
// cancel; exactly there the finite part is a digamma difference.
inline LValue alt_hurwitz_zeta(cplx s, cplx a) {
    detail::check_branch_cut(a, "alt_hurwitz_zeta");
    if (std::abs(s - 1.0) < 1e-14) {
        cplx v = 0.5 * (digamma(0.5 * (a + 1.0)) - digamma(0.5 * a));
        return {v, 1e-15 * std::abs(v), LMethod::euler_maclaurin};
    }
    LValue za = hurwitz_zeta(s, 0.5 * a);
    LValue zb = hurwitz_zeta(s, 0.5 * (a + 1.0));
    cplx scale = std::pow(cplx(2.0, 0.0), -s);
    return {scale * (za.value - zb.value),
            std::abs(scale) * (za.abs_error_est + zb.abs_error_est),
            LMethod::euler_maclaurin};
}

inline LValue riemann_zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-14) throw pole_error("riemann_zeta: pole at s = 1");
    return hurwitz_zeta(s, 1.0);
}

// beta(s) = sum_{n>=0} (-1)^n (2n+1)^{-s} = 2^{-s} zeta_E(s, 1/2); entire.
inline LValue dirichlet_beta(cplx s) {
    LValue z = alt_hurwitz_zeta(s, 0.5);
    cplx scale = std::pow(cplx(2.0, 0.0), -s);
    return {scale * z.value, std::abs(scale) * z.abs_error_est, z.method};
}

// Completed zeta: pi^{-s/2} Gamma(s/2) zeta(s); invariant under s -> 1-s.
inline cplx completed_lambda(cplx s) {
    if (std::abs(s) < 1e-14 || std::abs(s - 1.0) < 1e-14)
        throw pole_error("completed_lambda: poles at s = 0 and s = 1");
    return std::pow(cplx(pi, 0.0), -0.5 * s) * gamma(0.5 * s) * riemann_zeta(s).value;
}

// Completed beta: 2^s pi^{-s/2} Gamma((s+1)/2) beta(s); entire and invariant
// under s -> 1-s. Not evaluable at negative odd integers, where the gamma
// pole meets a trivial zero of beta.
inline cplx completed_lambda_chi4(cplx s) {
    return std::pow(cplx(2.0, 0.0), s) * std::pow(cplx(pi, 0.0), -0.5 * s) *
           gamma(0.5 * (s + 1.0)) * dirichlet_beta(s).value;
}

}  // namespace elliptika

#endif
