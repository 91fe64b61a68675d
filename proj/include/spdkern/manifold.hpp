#pragma once

#include <cstdint>
#include <vector>

#include "spdkern/special_fn.hpp"

namespace spdkern {

// The five compact two-point homogeneous families plus the circle, which is
// handled separately (Fourier basis, two-dimensional eigenspaces).
// Conventions: the manifold attached to (family, d) has dimension d-1, so
// (Sphere, 3) is S^2 and (RealProjective, 4) is P^3(R).
enum class Family { Circle, Sphere, RealProjective, ComplexProjective, Quaternionic, Cayley16 };

const char* family_name(Family f);

struct ManifoldDescriptor {
    Family family;
    int d;               // S^{d-1} / P^{d-1}(...) superscript convention
    JacobiParams jacobi; // alpha = (d-3)/2, beta per family
    int epsilon;         // 2 for RealProjective, else 1
    bool geometry_enabled;

    int dim() const { return d - 1; }
};

bool operator==(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

// Validates family-specific admissible d:
//   Circle: d = 2. Sphere, RealProjective: d >= 3.
//   ComplexProjective: d odd, d >= 5. Quaternionic: d = 1 mod 4, d >= 9.
//   Cayley16: d = 17.
ManifoldDescriptor make_manifold(Family family, int d);

// Laplacian eigenvalue of level k (closed form; geometry families only).
double eigenvalue(const ManifoldDescriptor& m, int k);

// Dimension of the level-k eigenspace, m_k = c_k * P_k^{(alpha,beta)}(1).
// Computed in exact rational arithmetic (2*alpha and 2*beta are integers for
// every family); non-integrality raises an internal consistency error.
double multiplicity(const ManifoldDescriptor& m, int k);

// m_{k}/m_{k-1} for k >= 1, as a double. Used by tail summation.
double multiplicity_ratio(const ManifoldDescriptor& m, int k);

// A point on a single manifold or on a product. Circle: {theta}. Sphere and
// projective families: unit vector in R^d. Products: concatenated factors.
struct Point {
    std::vector<double> x;
};

// Geodesic distance, diameter-pi convention. RealProjective uses
// 2*arccos|<p,q>| so that cos(d/epsilon) = |<p,q>|.
double geodesic_distance(const ManifoldDescriptor& m, const Point& p, const Point& q);

// cos(geodesic_distance / epsilon): the canonical zonal argument t.
double cosine_argument(const ManifoldDescriptor& m, const Point& p, const Point& q);

enum class Sampling { UniformRandom, Equispaced, Fibonacci, AntipodalPairs };

// Deterministic for a fixed (strategy, seed). Points are pairwise distinct
// (geodesic distance > 1e-9, enforced by rejection). Equispaced is
// circle-only, Fibonacci is Sphere d=3 only, AntipodalPairs needs even n and
// a family where p != -p.
std::vector<Point> sample_points(const ManifoldDescriptor& m, int n, Sampling strategy,
                                 std::uint64_t seed);

struct ProductManifold {
    ManifoldDescriptor first;
    ManifoldDescriptor second;
};

// UniformRandom only; factor streams are derived independently from seed.
std::vector<Point> sample_points(const ProductManifold& m, int n, Sampling strategy,
                                 std::uint64_t seed);

Point product_point(const Point& a, const Point& b);
Point first_factor(const ProductManifold& m, const Point& p);
Point second_factor(const ProductManifold& m, const Point& p);

}  // namespace spdkern
