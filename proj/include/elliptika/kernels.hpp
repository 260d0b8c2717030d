#ifndef ELLIPTIKA_KERNELS_HPP
#define ELLIPTIKA_KERNELS_HPP

#include <functional>
#include <string>
#include <vector>

#include "elliptika/common.hpp"
#include "elliptika/elliptic.hpp"

namespace elliptika {

enum class Parity { even, odd, none };

// A named real-argument kernel (closed-form transform, Mellin integrand,
// derivative-formula kernel). `raw` is the evaluation away from the removable
// point; kernel_eval supplies the limit at y = 0 when needed.
struct KernelFn {
    std::string name;
    EllipticParams params;
    Parity parity = Parity::none;
    bool singular_at_zero = false;  // removable 0/0 at y = 0
    std::function<cplx(double)> raw;
};

// Evaluate, replacing y = 0 (and only y = 0) at removable points by the
// analytic limit from symmetric samples at +-h, +-2h, +-4h with two
// Richardson steps. No node ever sits at the singular point.
inline cplx kernel_eval(const KernelFn& fn, double y) {
    if (!fn.singular_at_zero || std::abs(y) > 1e-11) return fn.raw(y);
    const double h = 1.0 / 128.0;  // ladder top 1/32; kernel poles sit at |y| = 1/2
    auto sym = [&](double hh) { return 0.5 * (fn.raw(hh) + fn.raw(-hh)); };
    cplx a4 = sym(4.0 * h), a2 = sym(2.0 * h), a1 = sym(h);
    cplx r1a = (4.0 * a2 - a4) / 3.0;
    cplx r1b = (4.0 * a1 - a2) / 3.0;
    cplx r2 = (16.0 * r1b - r1a) / 15.0;
    // |r2 - r1b| ~ the h^4 truncation of r1b; a genuine pole shows up as an
    // exploding, level-dependent estimate instead.
    if (std::abs(r2 - r1b) > 1e-3 * std::max(1.0, std::abs(r2)))
        throw convergence_error("kernel_eval: removable-point limit did not stabilise");
    return r2;
}

// Finite-difference weights for the p-th derivative at x0 on an arbitrary
// grid (Fornberg, Math. Comp. 51 (1988) 699-706).
inline std::vector<double> fd_weights(double x0, const std::vector<double>& grid, int p) {
    const int n = static_cast<int>(grid.size());
    std::vector<std::vector<double>> w(n, std::vector<double>(p + 1, 0.0));
    double c1 = 1.0, c4 = grid[0] - x0;
    w[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        int mn = std::min(i, p);
        double c2 = 1.0, c5 = c4;
        c4 = grid[i] - x0;
        for (int j = 0; j < i; ++j) {
            double c3 = grid[i] - grid[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    w[i][k] = c1 * (k * w[i - 1][k - 1] - c5 * w[i - 1][k]) / c2;
                w[i][0] = -c1 * c5 * w[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                w[j][k] = (c4 * w[j][k] - k * w[j][k - 1]) / c3;
            w[j][0] = c4 * w[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = w[i][p];
    return out;
}

struct DerivativeResult {
    cplx value;
    double abs_error_est;
};

// p-th derivative of f at 0 from the staggered symmetric grid
// +-(j+1/2) h, j = 0..7 (never sampling 0). Three step scales give the
// stability check; the largest step keeps roundoff amplification lowest
// while the 16-point stencil keeps truncation negligible.
inline DerivativeResult derivative_at_zero(const std::function<cplx(double)>& f, int p,
                                           double h,
                                           const Tolerances& tol = default_tolerances()) {
    if (p < 0 || p > 15) throw domain_error("derivative_at_zero: order out of range");
    auto eval = [&](double scale) {
        std::vector<double> grid;
        for (int sjj = 7; sjj >= 0; --sjj) grid.push_back(-(sjj + 0.5) * h * scale);
        for (int sjj = 0; sjj < 8; ++sjj) grid.push_back((sjj + 0.5) * h * scale);
        std::vector<double> w = fd_weights(0.0, grid, p);
        cplx acc = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) acc += w[i] * f(grid[i]);
        return acc;
    };
    cplx d1 = eval(1.0), d2 = eval(0.75), d3 = eval(0.5);
    double spread = std::max(std::abs(d1 - d2), std::abs(d2 - d3));
    double scale = std::max(1.0, std::abs(d3));
    if (spread > tol.richardson_instability * scale)
        throw convergence_error("derivative_at_zero: step levels disagree");
    // the halved step has the smallest truncation; kernel poles sit no closer
    // than |y| = 1/2 while the outermost node stays at 3.75 h
    return {d3, spread};
}

}  // namespace elliptika

#endif
