#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "spdkern/special_fn.hpp"

using namespace spdkern;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("legendre closed forms") {
    const auto p = make_jacobi(0.0, 0.0);
    for (double t = -1.0; t <= 1.0 + 1e-12; t += 0.125) {
        CHECK(jacobi_eval(p, 0, t) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(jacobi_eval(p, 1, t) == doctest::Approx(t).epsilon(1e-14));
        CHECK(jacobi_eval(p, 2, t) == doctest::Approx(0.5 * (3 * t * t - 1)).epsilon(1e-13));
        CHECK(jacobi_eval(p, 3, t) ==
              doctest::Approx(0.5 * (5 * t * t * t - 3 * t)).epsilon(1e-13));
    }
}

TEST_CASE("chebyshev relation at alpha = beta = -1/2") {
    // P_k(cos x) / P_k(1) = cos(k x).
    const auto p = make_jacobi(-0.5, -0.5);
    for (int k = 0; k <= 25; ++k) {
        const double at_one = jacobi_at_one(p, k);
        for (double x = 0.0; x <= kPi + 1e-12; x += kPi / 7) {
            CHECK(jacobi_eval(p, k, std::cos(x)) / at_one ==
                  doctest::Approx(std::cos(k * x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("second kind chebyshev relation at alpha = beta = 1/2") {
    // P_k(cos x) / P_k(1) = sin((k+1)x) / ((k+1) sin x).
    const auto p = make_jacobi(0.5, 0.5);
    for (int k = 0; k <= 20; ++k) {
        const double at_one = jacobi_at_one(p, k);
        for (double x = 0.3; x < kPi; x += 0.7) {
            const double want = std::sin((k + 1) * x) / ((k + 1) * std::sin(x));
            CHECK(jacobi_eval(p, k, std::cos(x)) / at_one ==
                  doctest::Approx(want).epsilon(1e-11));
        }
    }
}

TEST_CASE("value at one matches the gamma ratio") {
    for (double alpha : {-0.5, 0.0, 0.5, 1.0, 3.0, 7.0}) {
        const auto p = make_jacobi(alpha, -0.5);
        for (int k = 0; k <= 12; ++k) {
            const double want = std::exp(std::lgamma(k + alpha + 1) - std::lgamma(k + 1.0) -
                                         std::lgamma(alpha + 1));
            CHECK(jacobi_at_one(p, k) == doctest::Approx(want).epsilon(1e-12));
            CHECK(jacobi_eval(p, k, 1.0) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("range evaluation agrees with single evaluation") {
    const auto p = make_jacobi(1.5, 0.0);
    const double t = -0.37;
    const auto values = jacobi_eval_range(p, 30, t);
    REQUIRE(values.size() == 31);
    for (int k = 0; k <= 30; ++k) {
        CHECK(values[static_cast<size_t>(k)] == doctest::Approx(jacobi_eval(p, k, t)).epsilon(1e-13));
    }
}

TEST_CASE("jacobi differential equation") {
    // (1-t^2) y'' + (beta - alpha - (alpha+beta+2) t) y' + k(k+alpha+beta+1) y = 0.
    for (auto [alpha, beta] : {std::pair{0.0, 0.0}, {0.5, -0.5}, {1.0, 0.0}, {3.0, 1.0}}) {
        const auto p = make_jacobi(alpha, beta);
        const double h = 1e-5;
        for (int k : {1, 2, 5, 9}) {
            for (double t : {-0.6, -0.1, 0.4, 0.8}) {
                const double y = jacobi_eval(p, k, t);
                const double yp =
                    (jacobi_eval(p, k, t + h) - jacobi_eval(p, k, t - h)) / (2 * h);
                const double ypp =
                    (jacobi_eval(p, k, t + h) - 2 * y + jacobi_eval(p, k, t - h)) / (h * h);
                const double ode = (1 - t * t) * ypp + (beta - alpha - (alpha + beta + 2) * t) * yp +
                                   k * (k + alpha + beta + 1) * y;
                CHECK(std::abs(ode) < 1e-4 * std::max(1.0, std::abs(y)));
            }
        }
    }
}

TEST_CASE("addition coefficient times value at one is the level dimension") {
    // c_k P_k(1) must come out as an integer for every admissible family.
    struct Row {
        double alpha, beta;
        long long want_k1;
    };
    // alpha = (d-3)/2 with the family beta values; k=1 dimensions are known.
    for (const Row r : {Row{0.0, 0.0, 3},        // S2: 2k+1
                        Row{-0.5, -0.5, 2},      // circle: 2
                        Row{0.5, -0.5, 9},       // RP d=4: N(4, 2)
                        Row{1.0, 0.0, 8},        // CP d=5
                        Row{3.0, 1.0, 14},       // quaternionic d=9
                        Row{7.0, 3.0, 26}}) {    // cayley d=17
        const auto p = make_jacobi(r.alpha, r.beta);
        CHECK(addition_coefficient(p, 0) == doctest::Approx(1.0).epsilon(1e-14));
        const double dim1 = addition_coefficient(p, 1) * jacobi_at_one(p, 1);
        CHECK(dim1 == doctest::Approx(static_cast<double>(r.want_k1)).epsilon(1e-12));
    }
}

TEST_CASE("circle basis walks frequencies in flat order") {
    const double theta = 0.83;
    using std::complex;
    const complex<double> i(0.0, 1.0);
    CHECK(std::abs(circle_basis(0, theta) - complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(circle_basis(3, theta) - std::exp(3.0 * i * theta)) < 1e-14);
    CHECK(std::abs(circle_basis(-3, theta) - std::exp(-3.0 * i * theta)) < 1e-14);
    CHECK(std::abs(circle_basis(5, theta) * circle_basis(-5, theta) -
                   complex<double>(1.0, 0.0)) < 1e-14);
}

TEST_CASE("sphere harmonics: normalization and conjugation") {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 5; ++trial) {
        std::array<double, 3> p{gauss(rng), gauss(rng), gauss(rng)};
        const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (auto& v : p) v /= norm;
        for (int k = 0; k <= 6; ++k) {
            // Scaled so the m-sum of |Y|^2 equals the level dimension 2k+1.
            double sum = 0.0;
            for (int m = -k; m <= k; ++m) sum += std::norm(sphere2_harmonic(k, m, p));
            CHECK(sum == doctest::Approx(2.0 * k + 1.0).epsilon(1e-11));
            for (int m = 0; m <= k; ++m) {
                const auto plus = sphere2_harmonic(k, m, p);
                const auto minus = sphere2_harmonic(k, -m, p);
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                CHECK(std::abs(minus - sign * std::conj(plus)) < 1e-11);
            }
        }
    }
}

TEST_CASE("harmonics vanish nowhere they should not: k=1 explicit forms") {
    // Y_{1,0} scaled = sqrt(3) z; |Y_{1,+-1}| scaled = sqrt(3/2)|x +- i y|.
    std::array<double, 3> p{0.48, -0.6, 0.64};
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (auto& v : p) v /= n;
    CHECK(sphere2_harmonic(1, 0, p).real() == doctest::Approx(std::sqrt(3.0) * p[2]).epsilon(1e-12));
    const double want = std::sqrt(1.5) * std::hypot(p[0], p[1]);
    CHECK(std::abs(sphere2_harmonic(1, 1, p)) == doctest::Approx(want).epsilon(1e-12));
    CHECK(std::abs(sphere2_harmonic(1, -1, p)) == doctest::Approx(want).epsilon(1e-12));
}
