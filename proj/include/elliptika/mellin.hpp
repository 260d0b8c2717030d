#ifndef ELLIPTIKA_MELLIN_HPP
#define ELLIPTIKA_MELLIN_HPP

#include <cmath>
#include <functional>

#include "elliptika/common.hpp"
#include "elliptika/gamma.hpp"
#include "elliptika/quadrature.hpp"
#include "elliptika/transforms.hpp"

namespace elliptika {

// Mellin transform int_0^inf g(x) x^{z-1} dx for kernels that are bounded at
// the origin and decay like e^{-decay x}. The [delta, 1] piece runs on dyadic
// panels (x^{z-1} is steep near 0 but analytic on every panel); the remaining
// [0, delta] sliver is integrated against a cubic interpolant of g, which
// keeps kernels formed by subtraction (g ~ c x with O(eps/x) evaluation
// noise) from polluting the result.
inline cplx mellin_numeric(const std::function<cplx(double)>& g, cplx z,
                           double tol = 1e-10, double decay = pi,
                           QuadStats* stats = nullptr) {
    if (!(z.real() > 1e-12))
        throw domain_error("mellin_numeric: Re(z) must be positive (integral diverges at 0)");
    long evals = 0;
    const double osc_width = std::min(0.5, 2.0 * pi / (8.0 * (1.0 + std::abs(z.imag()))));
    auto integrand = [&](double x) { return g(x) * std::pow(cplx(x, 0.0), z - 1.0); };

    const double delta = 1e-6;
    cplx v1 = 0.0;
    const int sub = 1 + static_cast<int>(std::abs(z.imag()) / 4.0);
    double hi = 1.0;
    while (hi > delta * 1.0000001) {
        double lo = std::max(delta, 0.5 * hi);
        v1 += integrate_panels(integrand, lo, hi, (hi - lo) / sub, 16, &evals);
        hi = lo;
    }

    // int_0^delta: g interpolated at u = x/delta in {1,3,5,7} by a cubic,
    // integrated exactly: delta^z sum_j b_j / (z+j).
    {
        double u[4] = {1.0, 3.0, 5.0, 7.0};
        cplx gv[4];
        for (int i = 0; i < 4; ++i) gv[i] = g(u[i] * delta);
        evals += 4;
        // solve the 4x4 Vandermonde V b = gv (monomial basis in u)
        cplx A[4][5];
        for (int i = 0; i < 4; ++i) {
            double p = 1.0;
            for (int jj = 0; jj < 4; ++jj) {
                A[i][jj] = p;
                p *= u[i];
            }
            A[i][4] = gv[i];
        }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
            for (int c2 = 0; c2 < 5; ++c2) std::swap(A[piv][c2], A[col][c2]);
            for (int r = col + 1; r < 4; ++r) {
                cplx f = A[r][col] / A[col][col];
                for (int c2 = col; c2 < 5; ++c2) A[r][c2] -= f * A[col][c2];
            }
        }
        cplx b[4];
        for (int r = 3; r >= 0; --r) {
            cplx acc = A[r][4];
            for (int c2 = r + 1; c2 < 4; ++c2) acc -= A[r][c2] * b[c2];
            b[r] = acc / A[r][r];
        }
        cplx corr = 0.0;
        for (int jj = 0; jj < 4; ++jj) corr += b[jj] / (z + static_cast<double>(jj));
        v1 += std::pow(cplx(delta, 0.0), z) * corr;
    }

    double X = 20.0;
    for (int i = 0; i < 3; ++i)
        X = (-std::log(tol) + 2.0 + std::max(0.0, z.real() - 1.0) * std::log(X)) / decay + 1.0;
    cplx v2 = integrate_refined(integrand, 1.0, X, osc_width, 16, 0.5 * tol, &evals);

    if (stats) {
        stats->nodes += evals;
        stats->truncation_x = X;
    }
    return v1 + v2;
}

// Residual of the Mellin reflection formula for one catalog kernel:
//   cosine route:  Gamma(z) cos(pi z / 2) G(1-z) = G_c(z)
//   sine route:    Gamma(z) sin(pi z / 2) G(1-z) = G_s(z)
// Supported kernels: "4" (cd/cosh, cosine route), "13" (the subtracted
// (cd-1)/sinh kernel, sine route), "0b" (sech, self-reciprocal cosine route).
inline double mellin_reflection_residual(const TransformCatalog& cat, const std::string& pair_id,
                                         cplx z, double tol = 1e-9) {
    if (!(z.real() > 0.0 && z.real() < 1.0))
        throw domain_error("mellin_reflection_residual: need 0 < Re(z) < 1");
    const EllipticParams& par = cat.params();
    const EllipticParams& cp = cat.complement_params();

    if (pair_id == "4") {
        const cplx twoKp = 2.0 * par.big_kprime;
        auto g = [par, twoKp](double x) {
            return jacobi(JacobiCode::cd, twoKp * x, par) / std::cosh(pi * x);
        };
        // even integrand: F[f](y) = 2 g_c(2 pi y), so
        // M[g_c](z) = (1/2) (2 pi)^z M[rhs_4](z)
        const TransformPair& p4 = cat.pair("4");
        auto rhs = [&p4](double y) { return pair_closed_form(p4, y); };
        cplx lhs = gamma(z) * std::cos(0.5 * pi * z) * mellin_numeric(g, 1.0 - z, tol);
        cplx rhsv = 0.5 * std::pow(cplx(2.0 * pi, 0.0), z) * mellin_numeric(rhs, z, tol);
        return std::abs(lhs - rhsv);
    }

    if (pair_id == "13") {
        const cplx twoKp = 2.0 * par.big_kprime;
        auto g = [par, twoKp](double x) {
            return (jacobi(JacobiCode::cd, twoKp * x, par) - 1.0) / std::sinh(pi * x);
        };
        // sine transform of g, in the unscaled kernel units:
        // g_s(w) = -(k'/2) sd(K w / pi, k') / cosh(w/2)
        const double K = par.big_k.real();
        const double kp = par.kprime.real();
        auto gs = [K, kp, cp](double w) {
            return -0.5 * kp * jacobi(JacobiCode::sd, K * w / pi, cp) / std::cosh(0.5 * w);
        };
        cplx lhs = gamma(z) * std::sin(0.5 * pi * z) * mellin_numeric(g, 1.0 - z, tol);
        cplx rhsv = mellin_numeric(gs, z, tol, 0.5);
        return std::abs(lhs - rhsv);
    }

    if (pair_id == "0b") {
        auto g = [](double x) { return cplx(1.0 / std::cosh(x)); };
        auto gc = [](double w) { return cplx(0.5 * pi / std::cosh(0.5 * pi * w)); };
        cplx lhs = gamma(z) * std::cos(0.5 * pi * z) * mellin_numeric(g, 1.0 - z, tol, 1.0);
        cplx rhsv = mellin_numeric(gc, z, tol, 0.5 * pi);
        return std::abs(lhs - rhsv);
    }

    throw domain_error("mellin_reflection_residual: no reflection route for pair " + pair_id);
}

}  // namespace elliptika

#endif
