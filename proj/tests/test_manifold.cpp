#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "spdkern/manifold.hpp"

using namespace spdkern;

namespace {

constexpr double kPi = std::numbers::pi;

// Dimension of degree-n spherical harmonics on S^{d-1}:
// N(d, n) = (2n + d - 2) (n + d - 3)! / (n! (d - 2)!), N(d, 0) = 1.
double harmonic_dimension(int d, long long n) {
    if (n == 0) return 1.0;
    double v = static_cast<double>(2 * n + d - 2);
    for (int i = 1; i <= d - 3; ++i) v *= static_cast<double>(n + i);
    for (int i = 2; i <= d - 2; ++i) v /= static_cast<double>(i);
    return v;
}

}  // namespace

TEST_CASE("admissible parameters") {
    CHECK_NOTHROW(make_manifold(Family::Circle, 2));
    CHECK_THROWS_AS(make_manifold(Family::Circle, 3), error);
    CHECK_NOTHROW(make_manifold(Family::Sphere, 3));
    CHECK_THROWS_AS(make_manifold(Family::Sphere, 2), error);
    CHECK_NOTHROW(make_manifold(Family::RealProjective, 3));
    CHECK_THROWS_AS(make_manifold(Family::RealProjective, 2), error);
    CHECK_NOTHROW(make_manifold(Family::ComplexProjective, 5));
    CHECK_THROWS_AS(make_manifold(Family::ComplexProjective, 4), error);
    CHECK_THROWS_AS(make_manifold(Family::ComplexProjective, 3), error);
    CHECK_NOTHROW(make_manifold(Family::Quaternionic, 9));
    CHECK_THROWS_AS(make_manifold(Family::Quaternionic, 11), error);
    CHECK_NOTHROW(make_manifold(Family::Cayley16, 17));
    CHECK_THROWS_AS(make_manifold(Family::Cayley16, 16), error);
}

TEST_CASE("jacobi parameters and flags per family") {
    const auto s5 = make_manifold(Family::Sphere, 5);
    CHECK(s5.jacobi.alpha == doctest::Approx(1.0));
    CHECK(s5.jacobi.beta == doctest::Approx(1.0));
    CHECK(s5.epsilon == 1);
    const auto rp5 = make_manifold(Family::RealProjective, 5);
    CHECK(rp5.jacobi.alpha == doctest::Approx(1.0));
    CHECK(rp5.jacobi.beta == doctest::Approx(-0.5));
    CHECK(rp5.epsilon == 2);
    const auto cp5 = make_manifold(Family::ComplexProjective, 5);
    CHECK(cp5.jacobi.beta == doctest::Approx(0.0));
    CHECK_FALSE(cp5.geometry_enabled);
    const auto q9 = make_manifold(Family::Quaternionic, 9);
    CHECK(q9.jacobi.beta == doctest::Approx(1.0));
    const auto c17 = make_manifold(Family::Cayley16, 17);
    CHECK(c17.jacobi.alpha == doctest::Approx(7.0));
    CHECK(c17.jacobi.beta == doctest::Approx(3.0));
    CHECK(c17.dim() == 16);
    const auto circ = make_manifold(Family::Circle, 2);
    CHECK(circ.geometry_enabled);
    CHECK(circ.dim() == 1);
}

TEST_CASE("sphere multiplicities match the harmonic dimension formula") {
    for (int d = 3; d <= 10; ++d) {
        const auto m = make_manifold(Family::Sphere, d);
        for (int k = 0; k <= 100; ++k) {
            const double want = harmonic_dimension(d, k);
            const double got = multiplicity(m, k);
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
            CHECK(std::abs(got - std::llround(got)) == 0.0);  // exact integer
        }
    }
}

TEST_CASE("projective multiplicities are even-degree sphere dimensions") {
    for (int d = 3; d <= 6; ++d) {
        const auto m = make_manifold(Family::RealProjective, d);
        for (int k = 0; k <= 100; ++k) {
            CHECK(multiplicity(m, k) == doctest::Approx(harmonic_dimension(d, 2LL * k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("circle multiplicities") {
    const auto m = make_manifold(Family::Circle, 2);
    CHECK(multiplicity(m, 0) == 1.0);
    for (int k = 1; k <= 40; ++k) CHECK(multiplicity(m, k) == 2.0);
}

TEST_CASE("cayley first level") {
    const auto m = make_manifold(Family::Cayley16, 17);
    CHECK(multiplicity(m, 0) == 1.0);
    CHECK(multiplicity(m, 1) == 26.0);
}

TEST_CASE("multiplicity ratio agrees with the direct quotient") {
    for (Family f : {Family::Sphere, Family::RealProjective, Family::Circle}) {
        const int d = f == Family::Circle ? 2 : 5;
        const auto m = make_manifold(f, d);
        for (int k = 1; k <= 60; ++k) {
            CHECK(multiplicity_ratio(m, k) ==
                  doctest::Approx(multiplicity(m, k) / multiplicity(m, k - 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("eigenvalues") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    for (int k = 0; k <= 20; ++k) CHECK(eigenvalue(s2, k) == doctest::Approx(k * (k + 1.0)));
    const auto c = make_manifold(Family::Circle, 2);
    for (int k = 0; k <= 20; ++k) CHECK(eigenvalue(c, k) == doctest::Approx(double(k) * k));
    const auto rp = make_manifold(Family::RealProjective, 4);
    for (int k = 0; k <= 20; ++k) {
        CHECK(eigenvalue(rp, k) == doctest::Approx(2.0 * k * (2.0 * k + 2.0)));
    }
    const auto cp = make_manifold(Family::ComplexProjective, 5);
    CHECK_THROWS_AS(eigenvalue(cp, 1), error);
}

TEST_CASE("distances: range, symmetry, identity") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    const auto pts = sample_points(s2, 40, Sampling::UniformRandom, 1234);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(geodesic_distance(s2, pts[i], pts[i]) < 1e-7);  // arccos endpoint conditioning
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dij = geodesic_distance(s2, pts[i], pts[j]);
            CHECK(dij >= 0.0);
            CHECK(dij <= kPi + 1e-12);
            CHECK(dij == doctest::Approx(geodesic_distance(s2, pts[j], pts[i])).epsilon(1e-12));
            CHECK(cosine_argument(s2, pts[i], pts[j]) == doctest::Approx(std::cos(dij)).epsilon(1e-12));
        }
    }
}

TEST_CASE("triangle inequality on sampled sphere triples") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    const auto pts = sample_points(s2, 30, Sampling::UniformRandom, 99);
    for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
        const double ab = geodesic_distance(s2, pts[i], pts[i + 1]);
        const double bc = geodesic_distance(s2, pts[i + 1], pts[i + 2]);
        const double ac = geodesic_distance(s2, pts[i], pts[i + 2]);
        CHECK(ac <= ab + bc + 1e-10);
    }
}

TEST_CASE("projective points identify antipodes") {
    const auto rp = make_manifold(Family::RealProjective, 4);
    const auto pts = sample_points(rp, 10, Sampling::UniformRandom, 5);
    for (const auto& p : pts) {
        Point q = p;
        for (auto& v : q.x) v = -v;
        CHECK(geodesic_distance(rp, p, q) < 1e-7);  // arccos endpoint conditioning
        for (const auto& other : pts) {
            CHECK(std::abs(geodesic_distance(rp, p, other) -
                           geodesic_distance(rp, q, other)) < 1e-7);
        }
    }
}

TEST_CASE("projective distance stays within the diameter") {
    const auto rp = make_manifold(Family::RealProjective, 4);
    const auto pts = sample_points(rp, 20, Sampling::UniformRandom, 6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d = geodesic_distance(rp, pts[i], pts[j]);
            CHECK(d >= 0.0);
            CHECK(d <= kPi + 1e-12);
            // Zonal argument t = cos(d/2) never leaves [0, 1] on projective space.
            const double t = cosine_argument(rp, pts[i], pts[j]);
            CHECK(t >= -1e-12);
            CHECK(t <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("sampling is deterministic and separated") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    const auto a = sample_points(s2, 25, Sampling::UniformRandom, 7);
    const auto b = sample_points(s2, 25, Sampling::UniformRandom, 7);
    const auto c = sample_points(s2, 25, Sampling::UniformRandom, 8);
    REQUIRE(a.size() == 25);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);  // bit-identical per seed
    }
    bool any_differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_differs = any_differs || a[i].x != c[i].x;
    CHECK(any_differs);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i].x[0] * a[i].x[0] + a[i].x[1] * a[i].x[1] + a[i].x[2] * a[i].x[2] - 1.0) <
              1e-12);
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            CHECK(geodesic_distance(s2, a[i], a[j]) > 1e-9);
        }
    }
}

TEST_CASE("equispaced circle sampling") {
    const auto c = make_manifold(Family::Circle, 2);
    const auto pts = sample_points(c, 6, Sampling::Equispaced, 0);
    REQUIRE(pts.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(pts[static_cast<size_t>(i)].x[0] == doctest::Approx(2.0 * kPi * i / 6).epsilon(1e-13));
    }
}

TEST_CASE("antipodal pairs sampling") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    const auto pts = sample_points(s2, 6, Sampling::AntipodalPairs, 3);
    REQUIRE(pts.size() == 6);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        for (int c = 0; c < 3; ++c) CHECK(pts[i].x[c] == doctest::Approx(-pts[i + 1].x[c]));
    }
}

TEST_CASE("product sampling splits into factor points") {
    const auto s2 = make_manifold(Family::Sphere, 3);
    const auto circ = make_manifold(Family::Circle, 2);
    const ProductManifold pm{s2, circ};
    const auto pts = sample_points(pm, 9, Sampling::UniformRandom, 21);
    REQUIRE(pts.size() == 9);
    for (const auto& p : pts) {
        REQUIRE(p.x.size() == 4);
        const Point a = first_factor(pm, p);
        const Point b = second_factor(pm, p);
        CHECK(a.x.size() == 3);
        CHECK(b.x.size() == 1);
        const Point r = product_point(a, b);
        CHECK(r.x == p.x);
    }
}
