#ifndef ELLIPTIKA_QUADRATURE_HPP
#define ELLIPTIKA_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "elliptika/common.hpp"

namespace elliptika {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule of the given order, computed once via Newton iteration
// on P_n and cached. Nodes are deterministic to the last bit.
inline const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Bonnet recurrence for P_n(x) and P_{n-1}(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // One clean-up Newton step, then the weight.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return cache.emplace(n, std::move(rule)).first->second;
}

// Composite Gauss-Legendre over [a, b] with fixed panel width. Returns the
// integral and reports how many function evaluations were spent.
template <typename F>
cplx integrate_panels(F&& f, double a, double b, double panel_width, int order,
                      long* evals = nullptr) {
    if (b <= a) return integrate_panels(f, b, a, panel_width, order, evals) * (-1.0);
    const GaussRule& rule = gauss_rule(order);
    int n_panels = static_cast<int>(std::ceil((b - a) / panel_width));
    if (n_panels < 1) n_panels = 1;
    double w = (b - a) / n_panels;
    cplx total = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        double lo = a + p * w;
        double mid = lo + 0.5 * w;
        double half = 0.5 * w;
        cplx acc = 0.0;
        for (int i = 0; i < order; ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += acc * half;
    }
    if (evals) *evals += static_cast<long>(n_panels) * order;
    return total;
}

// Same integral with the panel width halved until two successive values agree
// within tol. Throws convergence_error when refinement stalls.
template <typename F>
cplx integrate_refined(F&& f, double a, double b, double panel_width, int order,
                       double tol, long* evals = nullptr, int max_halvings = 3) {
    cplx prev = integrate_panels(f, a, b, panel_width, order, evals);
    for (int level = 0; level < max_halvings; ++level) {
        panel_width *= 0.5;
        cplx next = integrate_panels(f, a, b, panel_width, order, evals);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
    }
    throw convergence_error("quadrature refinement stalled before reaching tolerance");
}

}  // namespace elliptika

#endif
