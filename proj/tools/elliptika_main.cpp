// elliptika CLI: verification sweeps, single-point evaluation, and the
// certification run, with json/csv/pretty output for scripting.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "elliptika/elliptika.hpp"

using namespace elliptika;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

struct GlobalOpts {
    double k = 0.0;
    std::string tau_str;
    double tol = 1e-9;
    std::string format = "pretty";
    std::uint64_t seed = 12345;
    int threads = 0;
};

cplx parse_complex(const std::string& text) {
    // accepts "1.5", "i", "-i", "0.3+1.2i", "0.5-0.5i", "2i"
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw domain_error("empty complex literal");
    if (s == "i") return cplx(0, 1);
    if (s == "-i") return cplx(0, -1);
    if (s.back() == 'i' || s.back() == 'j') {
        s.pop_back();
        // split at the last +/- that is not an exponent sign or leading sign
        for (std::size_t p = s.size(); p-- > 1;) {
            if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
                double re = std::stod(s.substr(0, p));
                std::string im_part = s.substr(p);
                double im = (im_part == "+" || im_part == "-") ? (im_part == "+" ? 1.0 : -1.0)
                                                               : std::stod(im_part);
                return cplx(re, im);
            }
        }
        if (s.empty() || s == "+") return cplx(0, 1);
        if (s == "-") return cplx(0, -1);
        return cplx(0, std::stod(s));
    }
    return cplx(std::stod(s), 0.0);
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw domain_error("empty list: " + text);
    return out;
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_complex(tok));
    }
    if (out.empty()) throw domain_error("empty list: " + text);
    return out;
}

// Resolved modulus/lattice input. Exactly one of --k / --tau.
struct ResolvedParams {
    EllipticParams par;
    cplx tau;
    bool from_k = false;
};

ResolvedParams resolve_params(const GlobalOpts& g, bool need_real_modulus) {
    const bool has_k = g.k != 0.0;
    const bool has_tau = !g.tau_str.empty();
    if (has_k == has_tau)
        throw domain_error("provide exactly one of --k or --tau");
    ResolvedParams r;
    if (has_k) {
        if (!(g.k > 0.0 && g.k < 1.0)) throw domain_error("--k must lie in (0,1)");
        r.par = params_from_k(g.k);
        r.tau = r.par.tau;
        r.from_k = true;
    } else {
        cplx tau = parse_complex(g.tau_str);
        if (!(tau.imag() > 0.0)) throw domain_error("--tau must have positive imaginary part");
        r.par = params_from_tau(tau);
        r.tau = tau;
        r.from_k = std::abs(tau.real()) < 1e-14;
        if (need_real_modulus && !r.from_k)
            throw domain_error("this subcommand needs a real modulus (--k, or purely imaginary --tau)");
    }
    return r;
}

void check_tol(double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-6))
        throw domain_error("--tol must lie in [1e-12, 1e-6]");
}

std::vector<std::pair<int, int>> parse_indices(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    if (text == "all") {
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l) out.emplace_back(j, l);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.size() != 2 || tok[0] < '0' || tok[0] > '3' || tok[1] < '0' || tok[1] > '3')
            throw domain_error("bad index '" + tok + "': want two digits jl, e.g. 31, or 'all'");
        out.emplace_back(tok[0] - '0', tok[1] - '0');
    }
    if (out.empty()) throw domain_error("empty index list");
    return out;
}

std::vector<std::string> parse_pairs(const std::string& text, const TransformCatalog& cat) {
    if (text == "all") return cat.ids();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) {
            cat.pair(tok);  // validates
            out.push_back(tok);
        }
    }
    if (out.empty()) throw domain_error("empty pair list");
    return out;
}

template <typename Row>
void emit_rows(const std::vector<Row>& rows, OutputFormat fmt, const std::string& csv_header) {
    if (fmt == OutputFormat::csv) std::cout << csv_header << "\n";
    for (const auto& r : rows) {
        switch (fmt) {
            case OutputFormat::csv: std::cout << to_csv(r) << "\n"; break;
            case OutputFormat::json: std::cout << to_jsonl(r) << "\n"; break;
            case OutputFormat::pretty: std::cout << to_pretty(r) << "\n"; break;
        }
    }
}

int cmd_verify_pairs(const GlobalOpts& g, const std::string& pairs_sel,
                     const std::string& y_sel) {
    check_tol(g.tol);
    auto rp = resolve_params(g, true);
    TransformCatalog cat(rp.par);
    std::vector<std::string> ids = parse_pairs(pairs_sel, cat);
    std::vector<double> grid = parse_real_list(y_sel);

    int threads = resolve_thread_count(g.threads);
    std::vector<std::vector<VerifyReport>> all(ids.size());
    parallel_for(ids.size(), threads, [&](std::size_t i) {
        all[i] = verify_pair(cat.pair(ids[i]), grid, g.tol);
    });

    std::vector<VerifyReport> rows;
    for (auto& v : all)
        for (auto& r : v) rows.push_back(std::move(r));

    emit_rows(rows, output_format_from_string(g.format), verify_csv_header());
    bool all_pass = std::all_of(rows.begin(), rows.end(),
                                [](const VerifyReport& r) { return r.pass; });
    if (!all_pass) {
        for (const auto& r : rows)
            if (!r.pass)
                std::cerr << "FAIL pair " << r.pair_id << " y=" << r.y
                          << (r.note.empty() ? "" : (": " + r.note)) << "\n";
    }
    return all_pass ? exit_ok : exit_verification_failure;
}

int cmd_eval(const GlobalOpts& g, int j, int l, const std::string& s_str) {
    check_tol(g.tol);
    auto rp = resolve_params(g, false);
    auto idx = SeriesIndex::make(j, l);
    cplx s = parse_complex(s_str);
    auto ev = lambda_jl(idx, s, rp.tau);
    SeriesRow row{j, l, s, rp.tau, ev.value, ev.abs_error_est, to_string(ev.method)};
    emit_rows(std::vector<SeriesRow>{row}, output_format_from_string(g.format),
              series_csv_header());
    return exit_ok;
}

int cmd_funceq(const GlobalOpts& g, const std::string& idx_sel, const std::string& s_sel) {
    check_tol(g.tol);
    auto rp = resolve_params(g, false);
    auto indices = parse_indices(idx_sel);
    std::vector<cplx> sgrid = parse_complex_list(s_sel);

    struct Task {
        SeriesIndex idx;
        cplx s;
    };
    std::vector<Task> tasks;
    for (auto& jl : indices)
        for (cplx s : sgrid) tasks.push_back({SeriesIndex::make(jl.first, jl.second), s});

    int threads = resolve_thread_count(g.threads);
    std::vector<double> res(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t i) {
        res[i] = std::abs(funceq_residual(tasks[i].idx, tasks[i].s, rp.tau));
    });

    OutputFormat fmt = output_format_from_string(g.format);
    if (fmt == OutputFormat::csv) std::cout << "j,l,s_re,s_im,residual\n";
    bool ok = true;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        ok = ok && res[i] < 1e-8;
        const auto& t = tasks[i];
        switch (fmt) {
            case OutputFormat::csv:
                std::cout << t.idx.j << ',' << t.idx.l << ',' << fmt17(t.s.real()) << ','
                          << fmt17(t.s.imag()) << ',' << fmt17(res[i]) << "\n";
                break;
            case OutputFormat::json:
                std::cout << "{\"j\":" << t.idx.j << ",\"l\":" << t.idx.l
                          << ",\"s_re\":" << fmt17(t.s.real()) << ",\"s_im\":" << fmt17(t.s.imag())
                          << ",\"residual\":" << fmt17(res[i]) << "}\n";
                break;
            case OutputFormat::pretty:
                std::printf("funceq %s s=(%g,%g) residual=%.3g %s\n", t.idx.name().c_str(),
                            t.s.real(), t.s.imag(), res[i], res[i] < 1e-8 ? "ok" : "FAIL");
                break;
        }
    }
    return ok ? exit_ok : exit_verification_failure;
}

int cmd_residues(const GlobalOpts& g) {
    auto rp = resolve_params(g, false);
    const int idxs[4][2] = {{3, 1}, {2, 2}, {3, 2}, {2, 3}};
    OutputFormat fmt = output_format_from_string(g.format);
    if (fmt == OutputFormat::csv) std::cout << "j,l,num_re,num_im,cf_re,cf_im,defect\n";
    bool ok = true;
    for (auto& jl : idxs) {
        auto rr = residue_at_one(SeriesIndex::make(jl[0], jl[1]), rp.tau);
        double defect = std::abs(rr.numeric - rr.closed_form);
        ok = ok && defect < 1e-6;
        switch (fmt) {
            case OutputFormat::csv:
                std::cout << jl[0] << ',' << jl[1] << ',' << fmt17(rr.numeric.real()) << ','
                          << fmt17(rr.numeric.imag()) << ',' << fmt17(rr.closed_form.real())
                          << ',' << fmt17(rr.closed_form.imag()) << ',' << fmt17(defect) << "\n";
                break;
            case OutputFormat::json:
                std::cout << "{\"j\":" << jl[0] << ",\"l\":" << jl[1]
                          << ",\"num_re\":" << fmt17(rr.numeric.real())
                          << ",\"num_im\":" << fmt17(rr.numeric.imag())
                          << ",\"cf_re\":" << fmt17(rr.closed_form.real())
                          << ",\"cf_im\":" << fmt17(rr.closed_form.imag())
                          << ",\"defect\":" << fmt17(defect) << "}\n";
                break;
            case OutputFormat::pretty:
                std::printf("residue (%d,%d): numeric %.12g%+.12gi  closed %.12g%+.12gi  defect %.3g\n",
                            jl[0], jl[1], rr.numeric.real(), rr.numeric.imag(),
                            rr.closed_form.real(), rr.closed_form.imag(), defect);
                break;
        }
    }
    return ok ? exit_ok : exit_verification_failure;
}

int cmd_special_values(const GlobalOpts& g, const std::string& idx_sel,
                       const std::string& n_sel) {
    auto rp = resolve_params(g, true);
    auto indices = parse_indices(idx_sel);
    std::vector<double> ns = parse_real_list(n_sel);
    OutputFormat fmt = output_format_from_string(g.format);
    if (fmt == OutputFormat::csv)
        std::cout << "j,l,n,s,value_re,value_im,cf_re,cf_im,defect\n";
    bool ok = true;
    for (auto& jl : indices) {
        auto idx = SeriesIndex::make(jl.first, jl.second);
        for (double nd : ns) {
            int n = static_cast<int>(nd);
            auto sv = special_value(idx, n, rp.par);
            double defect = sv.closed_form ? std::abs(sv.value - *sv.closed_form) : 0.0;
            if (sv.closed_form) ok = ok && defect < (n == 0 ? 1e-8 : 1e-6);
            std::string cf_re = sv.closed_form ? fmt17(sv.closed_form->real()) : "";
            std::string cf_im = sv.closed_form ? fmt17(sv.closed_form->imag()) : "";
            switch (fmt) {
                case OutputFormat::csv:
                    std::cout << idx.j << ',' << idx.l << ',' << n << ',' << sv.s_integer << ','
                              << fmt17(sv.value.real()) << ',' << fmt17(sv.value.imag()) << ','
                              << cf_re << ',' << cf_im << ',' << fmt17(defect) << "\n";
                    break;
                case OutputFormat::json:
                    std::cout << "{\"j\":" << idx.j << ",\"l\":" << idx.l << ",\"n\":" << n
                              << ",\"s\":" << sv.s_integer
                              << ",\"value_re\":" << fmt17(sv.value.real())
                              << ",\"value_im\":" << fmt17(sv.value.imag());
                    if (sv.closed_form)
                        std::cout << ",\"cf_re\":" << cf_re << ",\"cf_im\":" << cf_im
                                  << ",\"defect\":" << fmt17(defect);
                    std::cout << "}\n";
                    break;
                case OutputFormat::pretty:
                    std::printf("Lambda(%d,%d)(%d) = %.12g%+.12gi", idx.j, idx.l, sv.s_integer,
                                sv.value.real(), sv.value.imag());
                    if (sv.closed_form)
                        std::printf("  closed %.12g%+.12gi  defect %.3g",
                                    sv.closed_form->real(), sv.closed_form->imag(), defect);
                    std::printf("\n");
                    break;
            }
        }
    }
    return ok ? exit_ok : exit_verification_failure;
}

int cmd_mellin_check(const GlobalOpts& g, const std::string& pairs_sel,
                     const std::string& z_sel) {
    check_tol(g.tol);
    auto rp = resolve_params(g, true);
    TransformCatalog cat(rp.par);
    std::vector<std::string> ids;
    {
        std::stringstream ss(pairs_sel);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) ids.push_back(tok);
    }
    std::vector<cplx> zs = parse_complex_list(z_sel);
    OutputFormat fmt = output_format_from_string(g.format);
    if (fmt == OutputFormat::csv) std::cout << "pair_id,z_re,z_im,residual\n";
    bool ok = true;
    for (const auto& id : ids) {
        for (cplx z : zs) {
            double r = mellin_reflection_residual(cat, id, z);
            ok = ok && r < 1e-7;
            switch (fmt) {
                case OutputFormat::csv:
                    std::cout << id << ',' << fmt17(z.real()) << ',' << fmt17(z.imag()) << ','
                              << fmt17(r) << "\n";
                    break;
                case OutputFormat::json:
                    std::cout << "{\"pair_id\":\"" << id << "\",\"z_re\":" << fmt17(z.real())
                              << ",\"z_im\":" << fmt17(z.imag()) << ",\"residual\":" << fmt17(r)
                              << "}\n";
                    break;
                case OutputFormat::pretty:
                    std::printf("mellin pair %s z=(%g,%g) residual=%.3g %s\n", id.c_str(),
                                z.real(), z.imag(), r, r < 1e-7 ? "ok" : "FAIL");
                    break;
            }
        }
    }
    return ok ? exit_ok : exit_verification_failure;
}

int cmd_certify(const GlobalOpts& g) {
    check_tol(g.tol);
    CertifyConfig cfg;
    cfg.tol = g.tol;
    cfg.seed = g.seed;
    cfg.threads = resolve_thread_count(g.threads);
    const bool has_k = g.k != 0.0;
    const bool has_tau = !g.tau_str.empty();
    if (has_k == has_tau) throw domain_error("provide exactly one of --k or --tau");
    if (has_k) {
        if (!(g.k > 0.0 && g.k < 1.0)) throw domain_error("--k must lie in (0,1)");
        cfg.k = g.k;
    } else {
        cplx tau = parse_complex(g.tau_str);
        if (!(tau.imag() > 0.0)) throw domain_error("--tau must have positive imaginary part");
        if (std::abs(tau.real()) < 1e-14) {
            cfg.k = params_from_tau(tau).k.real();
        } else {
            cfg.has_tau = true;
            cfg.tau = tau;
        }
    }
    CertifyResult res = run_certify(cfg);
    std::cout << certify_summary(res);
    return res.all_pass ? exit_ok : exit_verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptika: elliptic-function Fourier-transform pairs and Eisenstein-type "
                 "series, numerically certified"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--k", g.k, "modulus k in (0,1)");
    app.add_option("--tau", g.tau_str, "lattice parameter tau, Im > 0 (e.g. '0.3+1.2i' or 'i')");
    app.add_option("--tol", g.tol, "quadrature tolerance, in [1e-12, 1e-6]")
        ->default_val(1e-9);
    app.add_option("--format", g.format, "output format: json|csv|pretty")->default_val("pretty");
    app.add_option("--seed", g.seed, "seed for randomized grids")->default_val(12345);
    app.add_option("--threads", g.threads,
                   "worker threads (default: ELLIPTIKA_THREADS or 1)");

    // allow the shared --k/--tau/--tol/... to appear after the subcommand
    app.fallthrough();

    std::string pairs_sel = "all", y_sel = "-1.3,0.35,2.0";
    auto* vp = app.add_subcommand("verify-pairs", "verify Fourier-transform pairs by quadrature");
    vp->add_option("--pairs", pairs_sel, "comma list of pair ids, or 'all'");
    vp->add_option("--y", y_sel, "comma list of y grid points");

    int ev_j = 0, ev_l = 0;
    std::string ev_s = "2";
    auto* ev = app.add_subcommand("eval", "evaluate one completed series Lambda_{j,l}(s,tau)");
    ev->add_option("--j", ev_j, "row index j in 0..3")->required();
    ev->add_option("--l", ev_l, "column index l in 0..3")->required();
    ev->add_option("--s", ev_s, "complex argument s");

    std::string fq_idx = "all", fq_s = "0.5,0.5+1.3i,0.5-1.3i,-0.25";
    auto* fq = app.add_subcommand("funceq", "functional-equation residuals");
    fq->add_option("--indices", fq_idx, "comma list of jl digit pairs, or 'all'");
    fq->add_option("--s", fq_s, "comma list of complex s values");

    auto* rs = app.add_subcommand("residues", "numeric vs closed residues at s = 1");

    std::string sv_idx = "all", sv_n = "0,1";
    auto* sv = app.add_subcommand("special-values", "integer special values via derivative formulas");
    sv->add_option("--indices", sv_idx, "comma list of jl digit pairs, or 'all'");
    sv->add_option("--n", sv_n, "comma list of n values (0..3)");

    std::string mc_pairs = "4,13", mc_z = "0.5,0.6,0.5+0.5i";
    auto* mc = app.add_subcommand("mellin-check", "Mellin reflection-formula residuals");
    mc->add_option("--pairs", mc_pairs, "kernel ids: 4, 13, 0b");
    mc->add_option("--s", mc_z, "comma list of complex z values");

    auto* ct = app.add_subcommand("certify", "run the full certification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (vp->parsed()) return cmd_verify_pairs(g, pairs_sel, y_sel);
        if (ev->parsed()) return cmd_eval(g, ev_j, ev_l, ev_s);
        if (fq->parsed()) return cmd_funceq(g, fq_idx, fq_s);
        if (rs->parsed()) return cmd_residues(g);
        if (sv->parsed()) return cmd_special_values(g, sv_idx, sv_n);
        if (mc->parsed()) return cmd_mellin_check(g, mc_pairs, mc_z);
        if (ct->parsed()) return cmd_certify(g);
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return exit_verification_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
