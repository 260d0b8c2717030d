#ifndef ELLIPTIKA_CERTIFY_HPP
#define ELLIPTIKA_CERTIFY_HPP

#include <chrono>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "elliptika/eisenstein.hpp"
#include "elliptika/mellin.hpp"
#include "elliptika/parallel.hpp"
#include "elliptika/report.hpp"
#include "elliptika/transforms.hpp"

namespace elliptika {

struct CertifyConfig {
    double k = 0.6;            // real-modulus criteria
    bool has_tau = false;      // complex-tau subset instead
    cplx tau;
    double tol = 1e-9;         // quadrature target for the pair sweep
    std::uint64_t seed = 12345;
    int threads = 1;
};

struct CriterionLine {
    CriterionLine() = default;
    CriterionLine(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;     // worst defect observed (criterion-specific units)
    double threshold = 0.0; // pinned pass threshold
    double seconds = 0.0;
    std::string detail;
};

struct CertifyResult {
    std::vector<CriterionLine> lines;
    bool all_pass = true;
    std::string report;  // canonical machine report (numbers at 17 digits)
};

namespace detail {

class CriterionTimer {
  public:
    CriterionTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline void finish_line(CriterionLine& line, double worst, double threshold,
                        const CriterionTimer& t, double budget_seconds) {
    line.worst = worst;
    line.threshold = threshold;
    line.seconds = t.seconds();
    line.pass = worst < threshold && line.seconds < budget_seconds;
}

}  // namespace detail

// Runs the acceptance criteria once and assembles the canonical report.
// Every tolerance below is pinned here, not configurable.
inline CertifyResult run_certify_once(const CertifyConfig& cfg) {
    CertifyResult out;
    std::string& rep = out.report;
    const double quad_tol = std::min(cfg.tol, 1e-9);

    const cplx tau_grid[2] = {cplx(0.0, 1.0), cplx(0.3, 1.2)};

    const bool complex_mode = cfg.has_tau && std::abs(cfg.tau.real()) > 1e-14;
    std::vector<cplx> funceq_taus;
    if (complex_mode) {
        funceq_taus = {cfg.tau};
    } else {
        funceq_taus = {tau_grid[0], tau_grid[1]};
    }

    auto add_line = [&](CriterionLine line) {
        out.all_pass = out.all_pass && line.pass;
        out.lines.push_back(std::move(line));
    };

    EllipticParams par;
    std::optional<TransformCatalog> cat_opt;
    TransformCatalog* cat = nullptr;
    if (!complex_mode) {
        par = params_from_k(cfg.k);
        cat_opt.emplace(par);
        cat = &*cat_opt;
    }

    // ---- 1: warm-up identities ------------------------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{1, "warm-up sin/sinh and cos/cosh transforms"};
        double worst = 0.0;
        for (const char* id : {"0a", "0b"}) {
            for (double y : {0.25, 1.0, 3.0}) {
                cplx num = contour_fourier(cat->pair(id), y, 1e-11);
                cplx cf = pair_closed_form(cat->pair(id), y);
                double r = std::abs(num - cf);
                worst = std::max(worst, r);
                rep += "C1," + std::string(id) + "," + fmt17(y) + "," + fmt17(r) + "\n";
            }
        }
        detail::finish_line(line, worst, 1e-10, t, 1.0);
        add_line(line);
    }

    // ---- 2: full 25-pair catalog ----------------------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{2, "full catalog, 25 pairs x 3 grid points"};
        std::vector<double> grid = {-1.3, 0.35, 2.0};
        std::vector<std::string> ids;
        for (int i = 1; i <= 25; ++i) ids.push_back(std::to_string(i));
        std::vector<std::vector<VerifyReport>> all(ids.size());
        parallel_for(ids.size(), cfg.threads, [&](std::size_t i) {
            all[i] = verify_pair(cat->pair(ids[i]), grid, quad_tol);
        });
        double worst = 0.0;
        for (const auto& reports : all) {
            for (const auto& r : reports) {
                worst = std::max(worst, r.note.empty() ? r.abs_residual : 1.0);
                rep += "C2," + to_csv(r) + "\n";
            }
        }
        detail::finish_line(line, worst, 1e-8, t, 60.0);
        add_line(line);
    }

    // ---- 3: double-pole pairs near the removable point -------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{3, "pairs 19-24 near y = 0"};
        double worst = 0.0;
        for (int i = 19; i <= 24; ++i) {
            auto reports = verify_pair(cat->pair(std::to_string(i)), {-0.05, 0.05}, quad_tol);
            for (const auto& r : reports) {
                worst = std::max(worst, r.note.empty() ? r.abs_residual : 1.0);
                rep += "C3," + to_csv(r) + "\n";
            }
        }
        detail::finish_line(line, worst, 1e-7, t, 30.0);
        add_line(line);
    }

    // ---- 4: Hurwitz asymptotic scaling ------------------------------------
    {
        detail::CriterionTimer t;
        CriterionLine line{4, "Hurwitz/alternating asymptotic defect scaling"};
        double worst = 0.0;
        cplx dir = std::exp(iu * (pi / 3.0));
        for (cplx s : {cplx(1.6, 0.0), cplx(2.0, 0.7)}) {
            auto defect = [&](double R) {
                cplx a = R * dir;
                return std::abs(hurwitz_zeta(s, a).value - std::pow(a, 1.0 - s) / (s - 1.0) -
                                0.5 * std::pow(a, -s));
            };
            double ratio = defect(32.0) / defect(16.0);
            double dev = std::abs(ratio / std::pow(2.0, -s.real() - 1.0) - 1.0);
            worst = std::max(worst, dev);
            rep += "C4,hurwitz," + fmt17(s.real()) + "," + fmt17(dev) + "\n";
        }
        {
            cplx s(1.6, 0.0);
            auto defect = [&](double R) {
                cplx a = R * dir;
                return std::abs(alt_hurwitz_zeta(s, a).value - 0.5 * std::pow(a, -s) -
                                0.25 * s * std::pow(a, -s - 1.0));
            };
            double ratio = defect(32.0) / defect(16.0);
            double dev = std::abs(ratio / std::pow(2.0, -s.real() - 3.0) - 1.0);
            worst = std::max(worst, dev);
            rep += "C4,alt_hurwitz," + fmt17(s.real()) + "," + fmt17(dev) + "\n";
        }
        detail::finish_line(line, worst, 0.2, t, 10.0);
        add_line(line);
    }

    // ---- 5: oracle equivalence over all sixteen indices -------------------
    {
        detail::CriterionTimer t;
        CriterionLine line{5, "lambda_jl vs brute-force double sum, 16 indices"};
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> ur(0.0, 1.0);
        std::vector<cplx> svals;
        for (int i = 0; i < 6; ++i)
            svals.emplace_back(1.2 + 1.8 * ur(rng), -2.0 + 4.0 * ur(rng));
        std::vector<cplx> taus = complex_mode
                                     ? std::vector<cplx>{cfg.tau}
                                     : std::vector<cplx>{tau_grid[0], tau_grid[1]};
        struct Task {
            SeriesIndex idx;
            cplx s, tau;
        };
        std::vector<Task> tasks;
        for (cplx tv : taus)
            for (int j = 0; j < 4; ++j)
                for (int l = 0; l < 4; ++l)
                    for (cplx s : svals) tasks.push_back({SeriesIndex::make(j, l), s, tv});
        std::vector<double> defects(tasks.size());
        parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
            const Task& tk = tasks[i];
            auto direct = zeta_jl_direct(tk.idx, tk.s, tk.tau, 600, 600);
            cplx gf = std::pow(cplx(pi, 0.0), -0.5 * tk.s) *
                      gamma(0.5 * (tk.s + static_cast<double>(tk.idx.frak_a)));
            cplx rows = lambda_jl(tk.idx, tk.s, tk.tau).value;
            defects[i] = std::abs(rows - gf * direct.value);
        });
        double worst = 0.0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            worst = std::max(worst, defects[i]);
            rep += "C5," + tasks[i].idx.name() + "," + fmt17(tasks[i].s.real()) + "," +
                   fmt17(tasks[i].s.imag()) + "," + fmt17(defects[i]) + "\n";
        }
        detail::finish_line(line, worst, 1e-7, t, 120.0);
        add_line(line);
    }

    // ---- 6: printed special values ----------------------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{6, "explicit closed-form values (n=0 and n=1)"};
        double worst0 = 0.0, worst1 = 0.0;
        int count = 0;
        for (int j = 0; j < 4; ++j) {
            for (int l = 0; l < 4; ++l) {
                auto idx = SeriesIndex::make(j, l);
                for (int n = 0; n <= 1; ++n) {
                    auto cf = closed_form_value(idx, n, par);
                    if (!cf) continue;
                    ++count;
                    auto sv = special_value(idx, n, par);
                    double defect = std::abs(sv.value - *cf);
                    (n == 0 ? worst0 : worst1) = std::max(n == 0 ? worst0 : worst1, defect);
                    rep += "C6," + idx.name() + "," + std::to_string(sv.s_integer) + "," +
                           fmt17(defect) + "\n";
                }
            }
        }
        rep += "C6,count," + std::to_string(count) + "\n";
        // n=0 values gate at 1e-8, n=1 derivative formulas at 1e-6
        detail::finish_line(line, std::max(worst0, worst1 * 1e-2), 1e-8, t, 30.0);
        line.detail = std::to_string(count) + " closed forms; worst n=0 " + fmt_sig(worst0, 3) +
                      ", n=1 " + fmt_sig(worst1, 3);
        line.pass = line.pass && count == 23 && worst0 < 1e-8 && worst1 < 1e-6;
        add_line(line);
    }

    // ---- 7: the ten functional equations ----------------------------------
    {
        detail::CriterionTimer t;
        CriterionLine line{7, "functional-equation residuals, 10 equations"};
        std::vector<cplx> sgrid = {cplx(0.5, 0.0), cplx(0.5, 1.3), cplx(0.5, -1.3),
                                   cplx(-0.25, 0.0)};
        struct Task {
            SeriesIndex idx;
            cplx s, tau;
        };
        std::vector<Task> tasks;
        const int firsts[10][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 2},
                                   {3, 3}, {0, 1}, {0, 2}, {0, 3}, {0, 0}};
        for (cplx tv : funceq_taus)
            for (auto& jl : firsts)
                for (cplx s : sgrid)
                    tasks.push_back({SeriesIndex::make(jl[0], jl[1]), s, tv});
        std::vector<double> res(tasks.size());
        parallel_for(tasks.size(), cfg.threads, [&](std::size_t i) {
            res[i] = std::abs(funceq_residual(tasks[i].idx, tasks[i].s, tasks[i].tau));
        });
        double worst = 0.0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            worst = std::max(worst, res[i]);
            rep += "C7," + tasks[i].idx.name() + "," + fmt17(tasks[i].s.real()) + "," +
                   fmt17(tasks[i].s.imag()) + "," + fmt17(tasks[i].tau.real()) + "," +
                   fmt17(tasks[i].tau.imag()) + "," + fmt17(res[i]) + "\n";
        }
        detail::finish_line(line, worst, 1e-8, t, 120.0);
        add_line(line);
    }

    // ---- 8: residues of the pole-bearing indices ---------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{8, "residues at s = 1"};
        double worst = 0.0;
        const int idxs[4][2] = {{3, 1}, {2, 2}, {3, 2}, {2, 3}};
        for (auto& jl : idxs) {
            auto rr = residue_at_one(SeriesIndex::make(jl[0], jl[1]), par.tau);
            double defect = std::abs(rr.numeric - rr.closed_form);
            worst = std::max(worst, defect);
            rep += "C8,(" + std::to_string(jl[0]) + "," + std::to_string(jl[1]) + ")," +
                   fmt17(defect) + "\n";
        }
        detail::finish_line(line, worst, 1e-6, t, 30.0);
        add_line(line);
    }

    // ---- 9: Mellin reflection ----------------------------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{9, "Mellin reflection for the pair-4 and pair-13 kernels"};
        double worst = 0.0;
        for (const char* id : {"4", "13"}) {
            for (cplx z : {cplx(0.5, 0.0), cplx(0.6, 0.0), cplx(0.5, 0.5)}) {
                double r = mellin_reflection_residual(*cat, id, z);
                worst = std::max(worst, r);
                rep += "C9," + std::string(id) + "," + fmt17(z.real()) + "," +
                       fmt17(z.imag()) + "," + fmt17(r) + "\n";
            }
        }
        detail::finish_line(line, worst, 1e-7, t, 60.0);
        add_line(line);
    }

    // ---- 10: Identity-25 infrastructure ------------------------------------
    if (!complex_mode) {
        detail::CriterionTimer t;
        CriterionLine line{10, "theta4 log-derivative periodicity and theta4''/theta4"};
        double worst = 0.0;
        {
            double ratio = par.big_k.real() / par.big_kprime.real();
            cplx d1 = theta4_log_derivative(cplx(0.37 + ratio, 0.0), par) -
                      theta4_log_derivative(cplx(0.37, 0.0), par);
            worst = std::max(worst, std::abs(d1));
            rep += "C10,period_real," + fmt17(std::abs(d1)) + "\n";

            auto p7 = params_from_k(0.7);
            cplx d2 = theta4_log_derivative(cplx(0.21, 1.0), p7) -
                      theta4_log_derivative(cplx(0.21, 0.0), p7) + 2.0 * iu;
            worst = std::max(worst, std::abs(d2));
            rep += "C10,period_imag," + fmt17(std::abs(d2)) + "\n";
        }
        double ratio_defect;
        {
            cplx ratio = theta(4, 0.0, par.tau, 2) / theta(4, 0.0, par.tau);
            cplx expect = 4.0 * par.big_k * (par.big_k - par.big_e) / (pi * pi);
            ratio_defect = std::abs(ratio - expect);
            rep += "C10,theta4_ratio," + fmt17(ratio_defect) + "\n";
        }
        // periodicity defects gate at 1e-11, the theta4''/theta4 value at 1e-10
        detail::finish_line(line, std::max(worst, ratio_defect * 1e-1), 1e-11, t, 10.0);
        line.detail = "periodicity " + fmt_sig(worst, 3) + ", ratio " + fmt_sig(ratio_defect, 3);
        line.pass = line.pass && worst < 1e-11 && ratio_defect < 1e-10;
        add_line(line);
    }

    return out;
}

// Full certification: run everything twice and require byte-identical
// reports (criterion 11), then emit the summary.
inline CertifyResult run_certify(const CertifyConfig& cfg) {
    CertifyResult first = run_certify_once(cfg);
    CertifyResult second = run_certify_once(cfg);

    CriterionLine det{11, "determinism: byte-identical re-run"};
    det.threshold = 1.0;
    det.worst = (first.report == second.report) ? 0.0 : 1.0;
    det.pass = first.report == second.report;
    det.seconds = 0.0;
    first.all_pass = first.all_pass && det.pass;
    first.lines.push_back(det);
    return first;
}

inline std::string certify_summary(const CertifyResult& res) {
    std::string s;
    for (const auto& line : res.lines) {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "[%s] criterion %2d: %-55s worst=%-11.3g (< %.3g) %.2fs",
                      line.pass ? "PASS" : "FAIL", line.id, line.name.c_str(), line.worst,
                      line.threshold, line.seconds);
        s += buf;
        if (!line.detail.empty()) s += "  [" + line.detail + "]";
        s += "\n";
    }
    s += res.all_pass ? "CERTIFY: all criteria passed\n" : "CERTIFY: FAILURES present\n";
    return s;
}

}  // namespace elliptika

#endif
