#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "spdkern/manifold.hpp"
#include "spdkern/spectral_set.hpp"

namespace spdkern {

// ---------------------------------------------------------------------------
// Coefficient tails
// ---------------------------------------------------------------------------

struct ZeroTail {};

// b_k = p * r^k on masked levels k >= window size.
struct GeometricTail {
    double p = 1.0;
    double r = 0.5;
};

// b_k = p * (1 + lambda_k)^(-q); needs an implemented spectrum and
// q > (d-1)/2 + 1 so that sum b_k m_k converges.
struct PowerTail {
    double p = 1.0;
    double q = 2.0;
};

using TailRule = std::variant<ZeroTail, GeometricTail, PowerTail>;

bool is_zero_tail(const TailRule& t);

// Level coefficients b_k: explicit window for k < window.size(), then the
// tail rule on levels the mask contains. The mask only governs the tail.
struct CoefficientSequence {
    std::vector<double> window;
    TailRule tail = ZeroTail{};
    SpectralSet mask = SpectralSet::all();
};

// b_k with window/tail/mask applied.
double coefficient(const ManifoldDescriptor& m, const CoefficientSequence& c, int k);

// F = {k : b_k > 0} as a canonical SpectralSet.
SpectralSet support(const CoefficientSequence& c);

// Upper bound on sum_{k >= from} |b_k| * m_k (closed-form beyond the window;
// the mask is ignored there, which only loosens the bound). Decreases
// monotonically in `from`.
double tail_mass_bound(const ManifoldDescriptor& m, const CoefficientSequence& c, int from);

// ---------------------------------------------------------------------------
// Schemes
// ---------------------------------------------------------------------------

// K(xi,zeta) = sum_k b_k c_k P_k(T_eps(t)), t = cos(d/eps).
struct ZonalScheme {
    ManifoldDescriptor manifold;
    CoefficientSequence coeffs;
};

// Diagonal coefficients d_{j,k} on explicit bases; Circle or Sphere d=3.
// levels[k] has exactly m_k entries.
struct ConvolutionalScheme {
    ManifoldDescriptor manifold;
    std::vector<std::vector<double>> levels;
};

// Dense Hermitian window a_{l,l'} over the flat basis; Circle or Sphere d=3.
struct GeneralScheme {
    ManifoldDescriptor manifold;
    Eigen::MatrixXcd window;
};

// a_{k,k'} = p * r1^k * r2^k' on masked pairs with k >= rows, k' >= cols of
// the explicit window (the tail lives past the window in both coordinates).
struct ProductGeometricTail {
    double p = 1.0;
    double r1 = 0.5;
    double r2 = 0.5;
};

using ProductTailRule = std::variant<ZeroTail, ProductGeometricTail>;

struct ProductZonalScheme {
    ProductManifold manifold;
    Eigen::MatrixXd window;  // nonnegative entries
    ProductTailRule tail = ZeroTail{};
    ProductSpectralSet mask;
};

using Scheme = std::variant<ZonalScheme, ConvolutionalScheme, GeneralScheme, ProductZonalScheme>;

// Validating constructors; each throws spdkern::error on contract breaches
// (divergent tails, ragged level vectors, non-Hermitian windows, negative
// product coefficients, unsupported manifolds for explicit bases).
ZonalScheme make_zonal(ManifoldDescriptor m, CoefficientSequence c);
ConvolutionalScheme make_convolutional(ManifoldDescriptor m,
                                       std::vector<std::vector<double>> levels);
GeneralScheme make_general(ManifoldDescriptor m, Eigen::MatrixXcd window);
ProductZonalScheme make_product_zonal(ProductManifold m, Eigen::MatrixXd window,
                                      ProductTailRule tail, ProductSpectralSet mask);

// Support sets feeding the verdict engine.
SpectralSet conv_support_u(const ConvolutionalScheme& s);  // some entry nonzero
SpectralSet conv_support_l(const ConvolutionalScheme& s);  // every entry positive
double product_coefficient(const ProductZonalScheme& s, int k, int kp);
ProductSpectralSet product_support(const ProductZonalScheme& s);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct EvalResult {
    double value = 0.0;
    double tail_bound = 0.0;
};

struct KernelValue {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
};

// Truncated zonal kernel as a function of t = cos(d/eps); sums levels k < n.
EvalResult zonal_eval(const ZonalScheme& s, double t, int n);

// Truncated product kernel from the two zonal arguments.
EvalResult product_zonal_eval(const ProductZonalScheme& s, double t1, double t2, int n1, int n2);

// Pointwise evaluation for every scheme type. Zonal dispatches through the
// manifold geometry; Convolutional/General need explicit bases (Circle, S^2);
// products use n for both factors. Hermitian: K(xi,zeta) = conj(K(zeta,xi)).
KernelValue kernel_eval(const Scheme& s, const Point& xi, const Point& zeta, int n);

// m_k^{-1/2} c_k P_k(T_eps(t)) with t from the manifold geometry; equals
// m_k^{1/2} at xi = zeta.
double zonal_component(const ManifoldDescriptor& m, int k, const Point& xi, const Point& zeta);

// Coefficient maps between this library's b_k (on c_k P_k) and the
// m_k^{1/2}-absorbed parametrization.
double d_from_b(const ManifoldDescriptor& m, int k, double b);
double b_from_d(const ManifoldDescriptor& m, int k, double d);

// Smallest n with tail_mass_bound(n) <= rel_tol * (value at t = 1); window
// size when the tail is Zero. Throws if no n below the internal cap works.
int default_truncation(const ZonalScheme& s, double rel_tol = 1e-10);
std::pair<int, int> default_truncation(const ProductZonalScheme& s, double rel_tol = 1e-10);
int default_truncation(const Scheme& s, double rel_tol = 1e-10);

// ---------------------------------------------------------------------------
// Flat basis (Circle: frequencies 0, 1, -1, 2, -2, ...; S^2: l = k^2 + k + m)
// ---------------------------------------------------------------------------

bool has_explicit_basis(const ManifoldDescriptor& m);
long long flat_count(const ManifoldDescriptor& m, int max_level);  // levels 0..max_level
int flat_level(const ManifoldDescriptor& m, long long ell);
long long circle_frequency(long long ell);
long long circle_flat_index(long long freq);
std::complex<double> flat_basis_eval(const ManifoldDescriptor& m, long long ell, const Point& p);
Eigen::VectorXcd basis_vector(const ManifoldDescriptor& m, long long count, const Point& p);

// ---------------------------------------------------------------------------
// Coefficient recovery on the circle (trapezoid quadrature, exact on
// trigonometric polynomials when q_nodes >= 2*max_frequency + 1)
// ---------------------------------------------------------------------------

std::complex<double> recover_coefficient(const Scheme& s, long long ell, long long ell_prime,
                                         int q_nodes, int truncation);

// All entries a_{l,l'} for l,l' < count in one pass (F^H K F / Q^2).
Eigen::MatrixXcd recover_window(const Scheme& s, long long count, int q_nodes, int truncation);

}  // namespace spdkern
