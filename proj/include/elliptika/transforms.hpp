#ifndef ELLIPTIKA_TRANSFORMS_HPP
#define ELLIPTIKA_TRANSFORMS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "elliptika/common.hpp"
#include "elliptika/elliptic.hpp"
#include "elliptika/jacobi.hpp"
#include "elliptika/kernels.hpp"
#include "elliptika/lfunc.hpp"
#include "elliptika/quadrature.hpp"

namespace elliptika {

// How a catalog entry is verified. Entries 0a/0b are half-line sine/cosine
// warm-ups, 0c is a Mellin pair; 1..25 go through the contour operator
// F[f](y) = int_{R+i eps} f(x) e^{2 pi i x y} dx.
enum class PairKind { contour, half_line_sine, half_line_cosine, mellin_sinh };

struct TransformPair {
    std::string id;
    PairKind kind = PairKind::contour;
    std::function<cplx(cplx)> lhs;  // the f in f(x) e^{2 pi i x y}
    KernelFn rhs;                   // closed-form transform
    double contour_offset = 0.25;
    std::vector<double> lhs_pole_heights;  // Im heights mod 1 of poles of f
    Parity parity = Parity::none;          // parity of f
    bool transform_parity_valid = false;   // f has no poles on the real line
    std::vector<double> fixed_verify_grid; // overrides the y grid (Mellin entry)
    std::string source;                    // e.g. "dc/cosh"
};

namespace detail {

inline cplx cosh_c(cplx z) { return std::cosh(z); }
inline cplx sinh_c(cplx z) { return std::sinh(z); }

}  // namespace detail

// The full catalog of transform pairs for one real modulus: warm-ups 0a-0c,
// the 24 table rows, and the theta4 log-derivative pair 25.
class TransformCatalog {
  public:
    explicit TransformCatalog(const EllipticParams& params) : params_(params) {
        if (!params.real_modulus)
            throw domain_error("TransformCatalog: contour verification needs a real modulus");
        comp_ = params.complement();
        build();
    }

    const EllipticParams& params() const { return params_; }
    const EllipticParams& complement_params() const { return comp_; }

    const TransformPair& pair(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw domain_error("unknown pair id: " + id);
        return pairs_[it->second];
    }

    const std::vector<TransformPair>& pairs() const { return pairs_; }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& p : pairs_) out.push_back(p.id);
        return out;
    }

  private:
    void add(TransformPair p) {
        index_[p.id] = pairs_.size();
        pairs_.push_back(std::move(p));
    }

    // f(x) = J(2K'x, k) / (cosh|sinh)(pi x)
    std::function<cplx(cplx)> table_lhs(JacobiCode code, bool cosh_den) const {
        const EllipticParams par = params_;
        const cplx twoKp = 2.0 * par.big_kprime;
        if (cosh_den)
            return [par, twoKp, code](cplx x) {
                return jacobi(code, twoKp * x, par) / std::cosh(pi * x);
            };
        return [par, twoKp, code](cplx x) {
            return jacobi(code, twoKp * x, par) / std::sinh(pi * x);
        };
    }

    void build() {
        const EllipticParams par = params_;
        const EllipticParams cp = comp_;
        const double k = par.k.real(), kp = par.kprime.real();
        const double K = par.big_k.real(), Kp = par.big_kprime.real();
        const cplx twoK = 2.0 * par.big_k;

        auto J = [cp, twoK](JacobiCode code, double y) {
            return jacobi(code, twoK * y, cp);
        };

        auto kernel = [&](std::string name, Parity parity, bool sing,
                          std::function<cplx(double)> fn) {
            KernelFn kf;
            kf.name = std::move(name);
            kf.params = par;
            kf.parity = parity;
            kf.singular_at_zero = sing;
            kf.raw = std::move(fn);
            return kf;
        };

        // --- warm-ups -------------------------------------------------------
        {
            TransformPair p;
            p.id = "0a";
            p.kind = PairKind::half_line_sine;
            p.source = "sin/sinh";
            p.parity = Parity::odd;
            p.transform_parity_valid = true;
            p.rhs = kernel("tanh-warmup", Parity::odd, false, [](double y) {
                return cplx(0.5 * pi * std::tanh(0.5 * pi * y));
            });
            add(std::move(p));
        }
        {
            TransformPair p;
            p.id = "0b";
            p.kind = PairKind::half_line_cosine;
            p.source = "cos/cosh";
            p.parity = Parity::even;
            p.transform_parity_valid = true;
            p.rhs = kernel("sech-warmup", Parity::even, false, [](double y) {
                return cplx(0.5 * pi / std::cosh(0.5 * pi * y));
            });
            add(std::move(p));
        }
        {
            TransformPair p;
            p.id = "0c";
            p.kind = PairKind::mellin_sinh;
            p.source = "mellin 1/sinh";
            p.rhs = kernel("mellin-sinh-closed", Parity::none, false, [](double s) {
                return 2.0 * (1.0 - std::pow(2.0, -s)) * gamma(cplx(s, 0)) *
                       riemann_zeta(cplx(s, 0)).value;
            });
            p.fixed_verify_grid = {1.5, 2.0, 3.0};  // grid in s, not y
            add(std::move(p));
        }

        // --- simple-pole rows 1..18 -------------------------------------------
        struct Row {
            const char* id;
            JacobiCode code;
            bool cosh_den;
            Parity parity;
            bool real_poles;  // f has poles on the real line
            bool rhs_singular;
            std::function<cplx(double)> rhs;
        };

        // brace terms shared by the double-pole rows:
        //   B(y)  = k^2 int_0^{2Ky} nd(u,k')^2 du + 2(E-K) y
        //   B2(y) = int_0^{2Ky} dn(u,k')^2 du + 2(E-K) y
        const double E = par.big_e.real();
        auto B = [k, K, E, cp](double y) {
            return k * k * nd_squared_integral(2.0 * K * y, cp) + 2.0 * (E - K) * y;
        };
        auto B2 = [K, E, cp](double y) {
            return jacobi_epsilon(2.0 * K * y, cp) + 2.0 * (E - K) * y;
        };

        std::vector<Row> rows;
        rows.push_back({"1", JacobiCode::dc, true, Parity::even, true, false, [=](double y) {
            return -2.0 * k * (kp * J(JacobiCode::sd, y) - std::exp(pi * y)) /
                   (std::exp(2.0 * pi * y) + 1.0);
        }});
        rows.push_back({"2", JacobiCode::nc, true, Parity::even, true, true, [=](double y) {
            return 2.0 * k * J(JacobiCode::sd, y) / (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"3", JacobiCode::sc, true, Parity::odd, true, true, [=](double y) {
            return -2.0 * iu * (J(JacobiCode::cn, y) - std::exp(pi * y)) /
                   (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"4", JacobiCode::cd, true, Parity::even, false, false, [=](double y) {
            return -(1.0 / k) * (kp * J(JacobiCode::cd, y) - 1.0) / std::cosh(pi * y);
        }});
        rows.push_back({"5", JacobiCode::nd, true, Parity::even, false, true, [=](double y) {
            return J(JacobiCode::sn, y) / std::sinh(pi * y);
        }});
        rows.push_back({"6", JacobiCode::sd, true, Parity::odd, false, true, [=](double y) {
            return -(iu / k) * (J(JacobiCode::cd, y) - 1.0) / std::sinh(pi * y);
        }});
        rows.push_back({"7", JacobiCode::cs, true, Parity::odd, true, true, [=](double y) {
            return 2.0 * iu * (J(JacobiCode::dn, y) - std::exp(pi * y)) /
                   (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"8", JacobiCode::ds, true, Parity::odd, true, true, [=](double y) {
            return 2.0 * iu * k * (J(JacobiCode::nd, y) - std::exp(pi * y)) /
                   (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"9", JacobiCode::ns, true, Parity::odd, true, false, [=](double y) {
            return -2.0 * iu * k * J(JacobiCode::nd, y) / (std::exp(2.0 * pi * y) + 1.0);
        }});
        rows.push_back({"10", JacobiCode::dc, false, Parity::odd, true, false, [=](double y) {
            return 2.0 * iu * (kp * J(JacobiCode::cd, y) - 1.0) /
                   (std::exp(2.0 * pi * y) + 1.0);
        }});
        rows.push_back({"11", JacobiCode::nc, false, Parity::odd, true, true, [=](double y) {
            return -2.0 * iu * (J(JacobiCode::cd, y) - 1.0) /
                   (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"12", JacobiCode::sc, false, Parity::even, true, true, [=](double y) {
            return 2.0 * J(JacobiCode::sn, y) / (std::exp(2.0 * pi * y) - 1.0);
        }});
        rows.push_back({"13", JacobiCode::cd, false, Parity::odd, true, false, [=](double y) {
            return -iu * (kp * J(JacobiCode::sd, y) + std::exp(-pi * y)) / std::cosh(pi * y);
        }});
        rows.push_back({"14", JacobiCode::nd, false, Parity::odd, true, true, [=](double y) {
            return -iu * (J(JacobiCode::cn, y) - std::exp(-pi * y)) / std::sinh(pi * y);
        }});
        rows.push_back({"15", JacobiCode::sd, false, Parity::even, false, true, [=](double y) {
            return J(JacobiCode::sd, y) / std::sinh(pi * y);
        }});
        rows.push_back({"16", JacobiCode::cn, false, Parity::odd, true, true, [=](double y) {
            return -iu * (J(JacobiCode::nd, y) - std::exp(-pi * y)) / std::sinh(pi * y);
        }});
        rows.push_back({"17", JacobiCode::dn, false, Parity::odd, true, true, [=](double y) {
            return -iu * (J(JacobiCode::dn, y) - std::exp(-pi * y)) / std::sinh(pi * y);
        }});
        rows.push_back({"18", JacobiCode::sn, false, Parity::even, false, false, [=](double y) {
            return J(JacobiCode::nd, y) / std::cosh(pi * y);
        }});

        // --- double-pole rows 19..24 ------------------------------------------
        rows.push_back({"19", JacobiCode::sn, true, Parity::odd, false, false, [=](double y) {
            return (iu / k) * B(y) / std::cosh(pi * y);
        }});
        rows.push_back({"20", JacobiCode::cn, true, Parity::even, false, true, [=](double y) {
            return (1.0 / k) * B(y) / std::sinh(pi * y);
        }});
        rows.push_back({"21", JacobiCode::dn, true, Parity::even, false, true, [=](double y) {
            return cplx(B2(y) / std::sinh(pi * y));
        }});
        rows.push_back({"22", JacobiCode::ns, false, Parity::even, true, false, [=](double y) {
            return cplx(2.0 * B(y) / (1.0 + std::exp(2.0 * pi * y)));
        }});
        rows.push_back({"23", JacobiCode::ds, false, Parity::even, true, true, [=](double y) {
            return cplx(2.0 * B(y) / (1.0 - std::exp(2.0 * pi * y)));
        }});
        rows.push_back({"24", JacobiCode::cs, false, Parity::even, true, true, [=](double y) {
            return cplx(2.0 * B2(y) / (1.0 - std::exp(2.0 * pi * y)));
        }});

        for (auto& r : rows) {
            TransformPair p;
            p.id = r.id;
            p.kind = PairKind::contour;
            p.lhs = table_lhs(r.code, r.cosh_den);
            p.source = std::string(to_string(r.code)) + (r.cosh_den ? "/cosh" : "/sinh");
            p.parity = r.parity;
            p.transform_parity_valid = !r.real_poles;
            // pole rows: the denominator row plus the Jacobi-function rows
            p.lhs_pole_heights = {r.cosh_den ? 0.5 : 0.0};
            int pl, ql;
            detail::jacobi_letters(r.code, pl, ql);
            double jrow = (ql == 0 || ql == 1) ? 0.0 : 0.5;  // s,c -> integer rows
            if (std::find(p.lhs_pole_heights.begin(), p.lhs_pole_heights.end(), jrow) ==
                p.lhs_pole_heights.end())
                p.lhs_pole_heights.push_back(jrow);
            p.rhs = kernel(std::string("pair-") + r.id,
                           r.real_poles ? Parity::none : r.parity, r.rhs_singular, r.rhs);
            add(std::move(p));
        }

        // --- pair 25: theta4 log-derivative over cosh -------------------------
        {
            TransformPair p;
            p.id = "25";
            p.kind = PairKind::contour;
            p.source = "theta4-logderiv/cosh";
            p.parity = Parity::odd;
            p.transform_parity_valid = true;
            p.lhs_pole_heights = {0.5};
            p.lhs = [par](cplx x) {
                return theta4_log_derivative(x, par) / std::cosh(pi * x);
            };
            double ratio = K / Kp;
            p.rhs = kernel("pair-25", Parity::odd, false, [=](double y) {
                cplx f = theta4_log_derivative(y, cp);
                return (iu * K / Kp) * (f + 2.0 * y - std::tanh(pi * y) / ratio) /
                       std::cosh(pi * y);
            });
            add(std::move(p));
        }
    }

    EllipticParams params_;
    EllipticParams comp_;
    std::vector<TransformPair> pairs_;
    std::map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Quadrature engines
// ---------------------------------------------------------------------------

struct QuadStats {
    long nodes = 0;
    double truncation_x = 0.0;
};

// F[f](y) along Im x = eps. Truncation and panel sizes follow the integrand
// envelope e^{-pi |Re x|} and the oscillation rate max(1,|y|).
inline cplx contour_fourier_integral(const std::function<cplx(cplx)>& f, double y,
                                     double tol, double eps = 0.25,
                                     QuadStats* stats = nullptr) {
    if (tol < 1e-14) throw domain_error("contour_fourier_integral: tol too tight for doubles");
    const double X = (-std::log(tol)) / pi + 2.0 + std::log1p(std::abs(y));
    const double width = 1.0 / (2.0 * std::max(1.0, std::abs(y)));
    auto line = [&](double t) {
        cplx x(t, eps);
        return f(x) * std::exp(2.0 * pi * iu * x * y);
    };
    long evals = 0;
    cplx v = integrate_refined(line, -X, X, width, 16, tol, &evals);
    if (stats) {
        stats->nodes += evals;
        stats->truncation_x = X;
    }
    return v;
}

// Half-line oscillatory integrals int_0^inf g(x) trig(x y) dx for integrands
// with an e^{-x} envelope (the elementary warm-ups).
inline cplx half_line_transform(const std::function<double(double)>& g, double y, bool sine,
                                double tol, QuadStats* stats = nullptr) {
    const double X = -std::log(tol) + 5.0;
    const double width = std::min(1.0, pi / (2.0 * std::max(1.0, std::abs(y))));
    auto integrand = [&](double x) {
        double tr = sine ? std::sin(x * y) : std::cos(x * y);
        return cplx(g(x) * tr);
    };
    long evals = 0;
    cplx v = integrate_refined(integrand, 1e-12, X, width, 16, tol, &evals);
    if (stats) {
        stats->nodes += evals;
        stats->truncation_x = X;
    }
    return v;
}

// Mellin transform of 1/sinh on (0, infinity), Re s > 1. The [0,1] part is
// mapped by x = e^{-t}; the integrand there decays like e^{-t(s-1)}.
inline cplx mellin_sinh_numeric(double s, double tol, QuadStats* stats = nullptr) {
    if (!(s > 1.0)) throw domain_error("mellin_sinh_numeric: requires s > 1");
    long evals = 0;
    double T = (-std::log(tol) + 4.0) / (s - 1.0);
    auto part1 = [&](double t) {
        double x = std::exp(-t);
        return cplx(std::exp(-t * s) / std::sinh(x));
    };
    cplx v1 = integrate_refined(part1, 0.0, T, 1.0, 16, tol, &evals);
    double X = -std::log(tol) + 5.0;
    auto part2 = [&](double x) { return cplx(std::pow(x, s - 1.0) / std::sinh(x)); };
    cplx v2 = integrate_refined(part2, 1.0, X, 0.5, 16, tol, &evals);
    if (stats) {
        stats->nodes += evals;
        stats->truncation_x = X;
    }
    return v1 + v2;
}

// Numeric side of one catalog pair at one grid point.
inline cplx contour_fourier(const TransformPair& pair, double y, double tol,
                            QuadStats* stats = nullptr, double eps_override = -1.0) {
    if (!(tol >= 1e-12)) throw domain_error("contour_fourier: tol must be at least 1e-12");
    switch (pair.kind) {
        case PairKind::half_line_sine:
            return half_line_transform([](double x) { return 1.0 / std::sinh(x); }, y, true,
                                       tol, stats);
        case PairKind::half_line_cosine:
            return half_line_transform([](double x) { return 1.0 / std::cosh(x); }, y, false,
                                       tol, stats);
        case PairKind::mellin_sinh:
            return mellin_sinh_numeric(y, tol, stats);
        case PairKind::contour:
        default: {
            double eps = eps_override > 0.0 ? eps_override : pair.contour_offset;
            for (double h : pair.lhs_pole_heights)
                if (std::abs(eps - h) < 1e-9)
                    throw pole_error("contour offset collides with a pole row of pair " + pair.id);
            return contour_fourier_integral(pair.lhs, y, tol, eps, stats);
        }
    }
}

// Catalog right-hand side, with removable points handled by kernel_eval.
inline cplx pair_closed_form(const TransformPair& pair, double y) {
    return kernel_eval(pair.rhs, y);
}

struct VerifyReport {
    std::string pair_id;
    double y = 0.0;
    cplx numeric;
    cplx closed_form;
    double abs_residual = 0.0;
    long quadrature_nodes = 0;
    double truncation_x = 0.0;
    bool pass = false;
    std::string note;  // empty on success, error text otherwise
};

// Verify one pair over a grid; per-point failures are recorded, not thrown.
// Pass criterion: |numeric - closed| < 10 * tol.
inline std::vector<VerifyReport> verify_pair(const TransformPair& pair,
                                             const std::vector<double>& y_grid, double tol) {
    std::vector<VerifyReport> out;
    const std::vector<double>& grid =
        pair.fixed_verify_grid.empty() ? y_grid : pair.fixed_verify_grid;
    for (double y : grid) {
        VerifyReport r;
        r.pair_id = pair.id;
        r.y = y;
        try {
            if (pair.kind == PairKind::contour && std::abs(y) > 6.0)
                throw domain_error("verify_pair: |y| > 6 is outside the desk-scale window");
            QuadStats st;
            r.numeric = contour_fourier(pair, y, tol, &st);
            r.closed_form = pair_closed_form(pair, y);
            r.abs_residual = std::abs(r.numeric - r.closed_form);
            r.quadrature_nodes = st.nodes;
            r.truncation_x = st.truncation_x;
            r.pass = r.abs_residual < 10.0 * tol;
        } catch (const error& e) {
            r.pass = false;
            r.note = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace elliptika

#endif
