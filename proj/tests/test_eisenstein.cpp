#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "elliptika/eisenstein.hpp"

using namespace elliptika;

namespace {

const EllipticParams& par06() {
    static const EllipticParams p = params_from_k(0.6);
    return p;
}

}  // namespace

TEST_CASE("series index bit decomposition and parity table") {
    // frak_a drives the Gamma factor; hand-checked against all ten
    // reflection identities
    const int expected_frak[4][4] = {
        {0, 0, 1, 1},  // j=0: l=0..3
        {0, 1, 1, 0},  // j=1
        {1, 1, 0, 0},  // j=2
        {1, 0, 0, 1},  // j=3
    };
    for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) {
            auto idx = SeriesIndex::make(j, l);
            CHECK(idx.j == 2 * idx.a + idx.b);
            CHECK(idx.l == 2 * idx.c + idx.d);
            CHECK(idx.frak_a == expected_frak[j][l]);
            CHECK(idx.omit_n0 == (l == 0));
        }
    }
    // pole-bearing set
    int poles = 0;
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l)
            if (SeriesIndex::make(j, l).has_pole_at_1) ++poles;
    CHECK(poles == 4);
    CHECK(SeriesIndex::make(3, 1).has_pole_at_1);
    CHECK(SeriesIndex::make(2, 2).has_pole_at_1);
    CHECK(SeriesIndex::make(3, 2).has_pole_at_1);
    CHECK(SeriesIndex::make(2, 3).has_pole_at_1);
    CHECK_FALSE(SeriesIndex::make(2, 1).has_pole_at_1);
    CHECK_THROWS_AS(SeriesIndex::make(4, 0), domain_error);
}

TEST_CASE("direct double sum: guards and convergence") {
    auto idx = SeriesIndex::make(2, 1);
    CHECK_THROWS_AS(zeta_jl_direct(idx, 0.8, iu, 100, 20), domain_error);
    CHECK_THROWS_AS(zeta_jl_direct(idx, 2.0, cplx(0.3, -1.0), 100, 20), domain_error);
    CHECK_THROWS_AS(zeta_jl_direct(idx, 2.0, iu, 100000, 20), domain_error);

    // (0,0): the omitted n=0 row would divide by sin(0) = 0; the convention
    // is load-bearing and the sum must come out finite
    auto v00 = zeta_jl_direct(SeriesIndex::make(0, 0), 2.0, iu, 200, 20);
    CHECK(is_finite(v00.value));
    CHECK(std::abs(detail::row_denominator(0, cplx(0.0))) == 0.0);

    // ring decay: raising the n-cutoff by 5 moves the value by less than
    // e^{-5 pi Im tau} times a modest constant
    cplx tau(0.3, 1.2);
    auto idx21 = SeriesIndex::make(2, 1);
    cplx a = zeta_jl_direct(idx21, 2.5, tau, 400, 10).value;
    cplx b = zeta_jl_direct(idx21, 2.5, tau, 400, 15).value;
    CHECK(std::abs(a - b) < std::exp(-5.0 * pi * 1.2) * 10.0);
}

TEST_CASE("oracle equivalence: rows vs tail-corrected double sum") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (cplx tau : {cplx(0, 1), cplx(0.3, 1.2)}) {
        for (int j = 0; j < 4; ++j) {
            for (int l = 0; l < 4; ++l) {
                auto idx = SeriesIndex::make(j, l);
                cplx s(1.2 + 1.8 * ur(rng), -2.0 + 4.0 * ur(rng));
                auto direct = zeta_jl_direct(idx, s, tau, 600, 40);
                cplx gf = std::pow(cplx(pi, 0.0), -0.5 * s) *
                          gamma(0.5 * (s + static_cast<double>(idx.frak_a)));
                auto rows = lambda_jl(idx, s, tau);
                INFO("idx=" << idx.name() << " s=" << s.real() << "+" << s.imag() << "i");
                CHECK(std::abs(rows.value - gf * direct.value) < 1e-7);
                CHECK(rows.method == SeriesMethod::hurwitz_rows);
                CHECK(rows.rows_used >= 1);
            }
        }
    }
}

TEST_CASE("printed closed forms reproduced by the derivative formulas") {
    const auto& p = par06();
    int n_forms = 0;
    for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) {
            auto idx = SeriesIndex::make(j, l);
            for (int n = 0; n <= 1; ++n) {
                auto cf = closed_form_value(idx, n, p);
                if (!cf) continue;
                ++n_forms;
                auto sv = special_value(idx, n, p);
                INFO("idx=" << idx.name() << " n=" << n);
                CHECK(sv.closed_form.has_value());
                CHECK(std::abs(sv.value - *cf) < (n == 0 ? 1e-8 : 1e-6));
                // parity contract: odd integers when frak_a = 1
                CHECK(sv.s_integer % 2 == (idx.frak_a == 1 ? 1 : 0));
            }
        }
    }
    CHECK(n_forms == 23);
}

TEST_CASE("closed forms also match the row evaluator at integer s") {
    const auto& p = par06();
    cplx tau = p.tau;
    // Lambda_{1,1}(1) = i (k'-1) K / sqrt(pi)
    CHECK(std::abs(lambda_jl(SeriesIndex::make(1, 1), 1.0, tau).value -
                   cplx(0.0, -0.19755141179233780)) < 1e-12);
    // Lambda_{2,2}(2) = K(pi^2 + 4(1-k^2)K^2)/(2 pi^2)
    cplx e22 = *closed_form_value(SeriesIndex::make(2, 2), 0, p);
    CHECK(std::abs(lambda_jl(SeriesIndex::make(2, 2), 2.0, tau).value - e22) < 1e-9);
    // Lambda_{0,0}(2) = (pi^2 - 4KE)/(2 pi)
    cplx e00 = *closed_form_value(SeriesIndex::make(0, 0), 0, p);
    CHECK(std::abs(lambda_jl(SeriesIndex::make(0, 0), 2.0, tau).value - e00) < 1e-9);
    // special_value matches lambda_jl for the fraktur-kernel index
    auto sv = special_value(SeriesIndex::make(0, 0), 0, p);
    CHECK(std::abs(sv.value - lambda_jl(SeriesIndex::make(0, 0), 2.0, tau).value) < 1e-7);
}

TEST_CASE("exactly at s = 1: digamma rows for the entire zeta-row indices") {
    const auto& p = par06();
    cplx v = lambda_jl(SeriesIndex::make(2, 1), 1.0, p.tau).value;
    cplx expect = *closed_form_value(SeriesIndex::make(2, 1), 0, p);
    CHECK(std::abs(v - expect) < 1e-10);
    cplx v33 = lambda_jl(SeriesIndex::make(3, 3), 1.0, p.tau).value;
    cplx e33 = *closed_form_value(SeriesIndex::make(3, 3), 0, p);
    CHECK(std::abs(v33 - e33) < 1e-10);
}

TEST_CASE("functional equations across the critical line") {
    std::vector<cplx> sgrid = {cplx(0.5, 0.0), cplx(0.5, 1.3), cplx(0.5, -1.3), cplx(-0.25, 0.0)};
    for (cplx tau : {cplx(0, 1), cplx(0.3, 1.2)}) {
        for (int j = 0; j < 4; ++j) {
            for (int l = 0; l < 4; ++l) {
                auto idx = SeriesIndex::make(j, l);
                for (cplx s : sgrid) {
                    INFO("idx=" << idx.name() << " s=(" << s.real() << "," << s.imag()
                                << ") tau=(" << tau.real() << "," << tau.imag() << ")");
                    CHECK(std::abs(funceq_residual(idx, s, tau)) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("spot residuals at the exact example points") {
    CHECK(std::abs(funceq_residual(SeriesIndex::make(3, 3), cplx(0.4, 1.3), iu)) < 1e-8);
    CHECK(std::abs(funceq_residual(SeriesIndex::make(2, 2), 0.5, cplx(0.3, 1.2))) < 1e-8);
    CHECK(std::abs(funceq_residual(SeriesIndex::make(0, 0), 0.5, iu)) < 1e-8);
}

TEST_CASE("reflected evaluation agrees with direct rows in the overlap") {
    // (1,3) has alternating rows, entire for Re s > -3; compare the
    // reflection route against the row evaluation at Re s = -1.2
    const auto& p = par06();
    auto idx = SeriesIndex::make(1, 3);
    cplx s(-1.2, 0.4);
    auto reflected = lambda_jl(idx, s, p.tau);
    CHECK(reflected.method == SeriesMethod::reflected);
    auto direct = detail::lambda_rows(idx, s, p.tau, default_tolerances());
    CHECK(std::abs(reflected.value - direct.value) < 1e-9);
}

TEST_CASE("reflected values match an external multiprecision reference") {
    // frozen from an independent multiprecision row evaluation
    auto v31 = lambda_jl(SeriesIndex::make(3, 1), cplx(-1.2, 0.4), iu);
    CHECK(v31.method == SeriesMethod::reflected);
    CHECK(std::abs(v31.value - cplx(-0.13657848365900496, 0.59352233434080468)) < 1e-10);
    auto v21 = lambda_jl(SeriesIndex::make(2, 1), cplx(-1.3, 0.0), iu);
    CHECK(v21.method == SeriesMethod::reflected);
    CHECK(std::abs(v21.value - cplx(-1.1409941341393261, 0.0)) < 1e-10);
}

TEST_CASE("residues at s = 1") {
    const auto& p = par06();
    cplx tau = p.tau;
    double K = p.big_k.real(), k = 0.6, kp = 0.8;

    auto r22 = residue_at_one(SeriesIndex::make(2, 2), tau);
    CHECK(std::abs(r22.closed_form - 2.0 * K / pi) < 1e-15);
    CHECK(std::abs(r22.numeric - r22.closed_form) < 1e-6);

    auto r31 = residue_at_one(SeriesIndex::make(3, 1), tau);
    CHECK(std::abs(r31.closed_form - (-2.0 * iu * k * K / pi)) < 1e-15);
    CHECK(std::abs(r31.numeric - r31.closed_form) < 1e-6);

    auto r32 = residue_at_one(SeriesIndex::make(3, 2), tau);
    CHECK(std::abs(r32.closed_form - 2.0 * kp * K / pi) < 1e-15);
    CHECK(std::abs(r32.numeric - r32.closed_form) < 1e-6);

    auto r23 = residue_at_one(SeriesIndex::make(2, 3), tau);
    CHECK(std::abs(r23.closed_form - 2.0 * k * K / pi) < 1e-15);
    CHECK(std::abs(r23.numeric - r23.closed_form) < 1e-6);

    CHECK_THROWS_AS(residue_at_one(SeriesIndex::make(2, 1), tau), domain_error);
}

TEST_CASE("pole error carries the residue in its message") {
    const auto& p = par06();
    try {
        lambda_jl(SeriesIndex::make(2, 2), 1.0, p.tau);
        FAIL("expected pole_error");
    } catch (const pole_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("residue") != std::string::npos);
        CHECK(msg.find("1.114564") != std::string::npos);  // 2K/pi for k = 0.6
    }
}

TEST_CASE("entirety probe: the twelve entire indices cross s = 1 smoothly") {
    const auto& p = par06();
    for (int j = 0; j < 4; ++j) {
        for (int l = 0; l < 4; ++l) {
            auto idx = SeriesIndex::make(j, l);
            if (idx.has_pole_at_1) continue;
            cplx up = lambda_jl(idx, 1.0 + 1e-3, p.tau).value;
            cplx dn = lambda_jl(idx, 1.0 - 1e-3, p.tau).value;
            double scale = std::max({1.0, std::abs(up), std::abs(dn)});
            INFO("idx=" << idx.name());
            CHECK(is_finite(up));
            CHECK(is_finite(dn));
            CHECK(std::abs(up - dn) < 1e-2 * scale);
        }
    }
}

TEST_CASE("special_value guards") {
    const auto& p = par06();
    CHECK_THROWS_AS(special_value(SeriesIndex::make(1, 1), 5, p), domain_error);
    auto pc = params_from_tau(cplx(0.3, 1.2));
    CHECK_THROWS_AS(special_value(SeriesIndex::make(1, 1), 0, pc), domain_error);
}
