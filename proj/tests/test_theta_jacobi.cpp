#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "elliptika/elliptic.hpp"
#include "elliptika/jacobi.hpp"
#include "elliptika/theta.hpp"

using namespace elliptika;

TEST_CASE("theta q-series against frozen external values") {
    // reference values computed with an independent multiprecision evaluation
    cplx tau(0.3, 1.2), z(0.3, 0.1);
    CHECK(std::abs(theta(1, z, tau) - cplx(0.2078974919755553553, 0.1262996859875456874)) < 1e-14);
    CHECK(std::abs(theta(2, z, tau) - cplx(0.7328956894649615290, 0.1525228741468405866)) < 1e-14);
    CHECK(std::abs(theta(3, z, tau) - cplx(1.0270572087182973537, 0.0283237819976943945)) < 1e-14);
    CHECK(std::abs(theta(4, z, tau) - cplx(0.9729421789175532276, -0.0283236922065123029)) < 1e-14);
    CHECK(std::abs(theta(3, z, tau, 1) - cplx(-0.0188210478402370724, -0.0519756435514893110)) < 1e-13);
    CHECK(std::abs(theta(1, z, tau, 2) - cplx(-0.2098500252097552397, -0.1243139195376790966)) < 1e-13);
}

TEST_CASE("theta basics: odd/even at the origin") {
    for (cplx tau : {cplx(0, 1), cplx(0.3, 1.2), cplx(-0.2, 0.8)}) {
        CHECK(std::abs(theta(1, 0.0, tau)) < 1e-15);      // theta_1 is odd
        CHECK(std::abs(theta(4, 0.0, tau, 1)) < 1e-15);   // theta_4 is even
        CHECK(std::abs(theta(2, 0.0, tau, 1)) < 1e-15);
    }
}

TEST_CASE("theta Jacobi identity th2^4 + th4^4 = th3^4") {
    for (cplx tau : {cplx(0, 1), cplx(0, 0.6), cplx(0.3, 1.2), cplx(-0.4, 2.0)}) {
        cplx t2 = theta(2, 0.0, tau), t3 = theta(3, 0.0, tau), t4 = theta(4, 0.0, tau);
        cplx defect = std::pow(t2, 4) + std::pow(t4, 4) - std::pow(t3, 4);
        CHECK(std::abs(defect) < 1e-11);
    }
}

TEST_CASE("theta4''/theta4 equals 4K(K-E)/pi^2") {
    auto p = params_from_k(0.6);
    cplx ratio = theta(4, 0.0, p.tau, 2) / theta(4, 0.0, p.tau);
    cplx expect = 4.0 * p.big_k * (p.big_k - p.big_e) / (pi * pi);
    CHECK(std::abs(ratio - expect) < 1e-10);
    // frozen value for k = 0.6
    CHECK(std::abs(ratio - 0.23604754925208611) < 1e-12);
}

TEST_CASE("theta domain and truncation errors") {
    CHECK_THROWS_AS(theta(0, 0.0, iu), domain_error);
    CHECK_THROWS_AS(theta(3, 0.0, cplx(0.1, -1.0)), domain_error);
    ThetaSeriesConfig tight;
    tight.max_terms = 2;
    // slow-decay nome: |q| close to 1 cannot converge in two terms
    CHECK_THROWS_AS(theta(3, 0.0, cplx(0.0, 0.01), 0, tight), truncation_error);
}

TEST_CASE("jacobi origin values and frozen points") {
    auto p = params_from_k(0.3);
    CHECK(std::abs(jacobi(JacobiCode::sn, 0.0, p)) < 1e-14);
    CHECK(std::abs(jacobi(JacobiCode::cn, 0.0, p) - 1.0) < 1e-14);
    CHECK(std::abs(jacobi(JacobiCode::dn, 0.0, p) - 1.0) < 1e-14);

    auto p6 = params_from_k(0.6);
    // dc(i K', k) = k
    CHECK(std::abs(jacobi(JacobiCode::dc, iu * p6.big_kprime, p6) - 0.6) < 1e-12);
    // frozen: sd(0.8, 0.6), dc(0.37+0.2i, 0.6)
    CHECK(std::abs(jacobi(JacobiCode::sd, 0.8, p6) - 0.7691712198440484) < 1e-13);
    CHECK(std::abs(jacobi(JacobiCode::dc, cplx(0.37, 0.2), p6) -
                   cplx(1.0292349358220724, 0.0509356921031973)) < 1e-13);
}

TEST_CASE("jacobi reciprocal and quotient relations at random points") {
    auto p = params_from_k(0.6);
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> ur(-1.5, 1.5);
    for (int i = 0; i < 12; ++i) {
        cplx z(ur(rng), 0.4 * ur(rng));
        cplx sn = jacobi(JacobiCode::sn, z, p);
        cplx cn = jacobi(JacobiCode::cn, z, p);
        cplx dn = jacobi(JacobiCode::dn, z, p);
        if (std::abs(sn) < 0.05 || std::abs(cn) < 0.05 || std::abs(dn) < 0.05) continue;
        CHECK(std::abs(jacobi(JacobiCode::ns, z, p) - 1.0 / sn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::nc, z, p) - 1.0 / cn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::nd, z, p) - 1.0 / dn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::sc, z, p) - sn / cn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::cs, z, p) - cn / sn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::sd, z, p) - sn / dn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::ds, z, p) - dn / sn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::cd, z, p) - cn / dn) < 1e-12);
        CHECK(std::abs(jacobi(JacobiCode::dc, z, p) - dn / cn) < 1e-12);
        // fundamental identities
        CHECK(std::abs(sn * sn + cn * cn - 1.0) < 1e-12);
        CHECK(std::abs(dn * dn + p.k * p.k * sn * sn - 1.0) < 1e-12);
    }
}

TEST_CASE("jacobi lattice periodicity") {
    auto p = params_from_k(0.6);
    cplx twoK = 2.0 * p.big_k, twoiKp = 2.0 * iu * p.big_kprime;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        cplx z(1.3 * ur(rng), 0.5 * ur(rng));
        // dc(z + 2iK') = dc(z), dc(z + 2K) = -dc(z)
        CHECK(std::abs(jacobi(JacobiCode::dc, z + twoiKp, p) -
                       jacobi(JacobiCode::dc, z, p)) < 1e-10);
        CHECK(std::abs(jacobi(JacobiCode::dc, z + twoK, p) +
                       jacobi(JacobiCode::dc, z, p)) < 1e-10);
        // sn: antiperiodic over 2K, periodic over 2iK'
        CHECK(std::abs(jacobi(JacobiCode::sn, z + twoK, p) +
                       jacobi(JacobiCode::sn, z, p)) < 1e-10);
        CHECK(std::abs(jacobi(JacobiCode::sn, z + twoiKp, p) -
                       jacobi(JacobiCode::sn, z, p)) < 1e-10);
        // dn: periodic over 2K, antiperiodic over 2iK'
        CHECK(std::abs(jacobi(JacobiCode::dn, z + twoK, p) -
                       jacobi(JacobiCode::dn, z, p)) < 1e-10);
        CHECK(std::abs(jacobi(JacobiCode::dn, z + twoiKp, p) +
                       jacobi(JacobiCode::dn, z, p)) < 1e-10);
    }
}

TEST_CASE("sd matches its hyperbolic Fourier series on the real line") {
    auto p = params_from_k(0.6);
    double K = p.big_k.real(), Kp = p.big_kprime.real();
    double kk = 0.6, kp = p.kprime.real();
    double q = std::exp(-pi * Kp / K);
    for (double z : {0.3, 0.8, 1.4, 2.9}) {
        double series = 0.0;
        for (int n = 0; n < 40; ++n) {
            double qp = std::pow(q, n + 0.5);
            series += (n % 2 ? -1.0 : 1.0) * qp / (1.0 + qp * qp) *
                      std::sin(pi * (n + 0.5) * z / K);
        }
        series *= 2.0 * pi / (kk * kp * K);
        CHECK(std::abs(jacobi(JacobiCode::sd, z, p) - series) < 1e-13);
    }
}

TEST_CASE("sn Laurent behaviour near iK'") {
    auto p = params_from_k(0.6);
    // k u sn(u + iK') -> 1 as u -> 0, with O(u^2) error; Richardson over u, u/2
    auto probe = [&](double u) {
        return 0.6 * u * jacobi(JacobiCode::sn, cplx(u, 0) + iu * p.big_kprime, p);
    };
    cplx a = probe(1e-3), b = probe(5e-4);
    cplx limit = (4.0 * b - a) / 3.0;
    CHECK(std::abs(limit - 1.0) < 1e-6);
}

TEST_CASE("jacobi pole detection") {
    auto p = params_from_k(0.6);
    CHECK_THROWS_AS(jacobi(JacobiCode::ns, 0.0, p), pole_error);
    CHECK_THROWS_AS(jacobi(JacobiCode::sn, iu * p.big_kprime, p), pole_error);
    CHECK_THROWS_AS(jacobi(JacobiCode::dc, p.big_k, p), pole_error);
}

TEST_CASE("jacobi epsilon integral") {
    auto p = params_from_k(0.6);
    CHECK(jacobi_epsilon(0.0, p) == 0.0);
    // full period: int_0^{2K} dn^2 = 2E
    double twoK = 2.0 * p.big_k.real();
    CHECK(std::abs(jacobi_epsilon(twoK, p) - 2.0 * p.big_e.real()) < 1e-11);
    // frozen quadrature value and self-refinement agreement
    CHECK(std::abs(jacobi_epsilon(0.8, p) - 0.7478233121772716) < 1e-12);
    CHECK(std::abs(jacobi_epsilon(0.8, p, 16) - jacobi_epsilon(0.8, p, 32)) < 1e-12);
    // odd in z
    CHECK(std::abs(jacobi_epsilon(-1.1, p) + jacobi_epsilon(1.1, p)) < 1e-13);
    // nd^2 integral, same treatment
    CHECK(std::abs(nd_squared_integral(0.8, p) - 0.8588106761128827) < 1e-12);
    CHECK(std::abs(nd_squared_integral(0.8, p, 16) - nd_squared_integral(0.8, p, 32)) < 1e-12);
}

TEST_CASE("dn^2 Fourier series identity") {
    auto p = params_from_k(0.6);
    double K = p.big_k.real(), E = p.big_e.real();
    double q = p.q.real();
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (int i = 0; i < 10; ++i) {
        double z = ur(rng);
        double lhs = 0.0;
        for (int n = 1; n < 60; ++n)
            lhs += n * std::pow(q, n) / (1.0 - std::pow(q, 2 * n)) * std::cos(2 * n * pi * z);
        cplx dn = jacobi(JacobiCode::dn, 2.0 * K * z, p);
        double rhs = (K * K * (dn * dn).real() - K * E) / (2.0 * pi * pi);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("theta4 log-derivative: value, periodicity, series") {
    auto p6 = params_from_k(0.6);
    CHECK(std::abs(theta4_log_derivative(0.0, p6)) < 1e-14);

    double ratio6 = p6.big_k.real() / p6.big_kprime.real();
    cplx x0(0.37, 0.0);
    CHECK(std::abs(theta4_log_derivative(x0 + ratio6, p6) -
                   theta4_log_derivative(x0, p6)) < 1e-11);

    auto p7 = params_from_k(0.7);
    cplx x1(0.21, 0.0);
    CHECK(std::abs(theta4_log_derivative(x1 + iu, p7) -
                   theta4_log_derivative(x1, p7) + 2.0 * iu) < 1e-11);

    // real-line Fourier series: f(x) = 2i sum sin(2 pi n (K'/K) x)/sin(pi n tau)
    double Kp_over_K = p6.big_kprime.real() / p6.big_k.real();
    for (double x : {0.11, 0.37, 0.8}) {
        cplx series = 0.0;
        for (int n = 1; n < 60; ++n)
            series += std::sin(2.0 * pi * n * Kp_over_K * x) /
                      std::sin(pi * static_cast<double>(n) * p6.tau);
        series *= 2.0 * iu;
        CHECK(std::abs(theta4_log_derivative(x, p6) - series) < 1e-12);
    }

    // pole at x = i/2
    CHECK_THROWS_AS(theta4_log_derivative(cplx(0.0, 0.5), p6), pole_error);
}
