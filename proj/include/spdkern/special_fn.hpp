#pragma once

#include <array>
#include <complex>
#include <vector>

#include "spdkern/common.hpp"

namespace spdkern {

// Jacobi exponent pair. Both entries must be > -1.
struct JacobiParams {
    double alpha;
    double beta;
};

JacobiParams make_jacobi(double alpha, double beta);

// P_k^{(alpha,beta)}(t) in the classical normalization, i.e.
// P_k(1) = Gamma(k+alpha+1) / (Gamma(k+1) Gamma(alpha+1)).
// t must lie in [-1, 1] up to 1e-14 slack; values just outside are clamped.
double jacobi_eval(const JacobiParams& p, int degree, double t);

// P_0(t) .. P_max_degree(t) in one recurrence pass.
std::vector<double> jacobi_eval_range(const JacobiParams& p, int max_degree, double t);

// P_k(1) evaluated from the Gamma form (independent of the recurrence).
double jacobi_at_one(const JacobiParams& p, int degree);

// Coefficient c_k of the addition formula
//   sum_j f_{j,k}(x) conj(f_{j,k}(y)) = c_k P_k^{(alpha,beta)}(cos d(x,y))
// for bases orthonormal with respect to the probability measure:
//   c_k = Gamma(beta+1) (2k+alpha+beta+1) Gamma(k+alpha+beta+1)
//         / (Gamma(alpha+beta+2) Gamma(k+beta+1)),   c_0 = 1.
double addition_coefficient(const JacobiParams& p, int k);

// exp(i k theta); orthonormal on the circle under dtheta/(2 pi).
std::complex<double> circle_basis(long long k, double theta);

// Spherical harmonic on S^2, normalized so that the *probability* measure
// makes the family orthonormal: Y~_{k,m} = sqrt(4 pi) Y_{k,m}^{classical},
// Condon-Shortley phase included. Requires |m| <= k and |p| = 1 within 1e-12.
std::complex<double> sphere2_harmonic(int k, int m, const std::array<double, 3>& p);

}  // namespace spdkern
