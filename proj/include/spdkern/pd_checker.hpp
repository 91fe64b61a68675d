#pragma once

#include "spdkern/kernels.hpp"
#include "spdkern/spectral_set.hpp"

namespace spdkern {

// ---------------------------------------------------------------------------
// Positive definiteness (coefficient sign checks; exact, no tolerances)
// ---------------------------------------------------------------------------

Verdict pd_convolutional(const ZonalScheme& s);
Verdict pd_convolutional(const ConvolutionalScheme& s);

// Smallest eigenvalue of the leading k x k window block >= -tol_psd * max
// diagonal entry.
bool psd_submatrix(const GeneralScheme& g, Eigen::Index k, double tol_psd = 1e-10);

// ---------------------------------------------------------------------------
// Diagonal dominance of the weighted matrix (1+l_l)^s |a_ll'| (1+l_l')^s
// ---------------------------------------------------------------------------

struct DominanceReport {
    double exponent_s = 0.0;
    double sigma_achieved = 0.0;  // max over rows of off-sum / diagonal
    long long rows_checked = 0;
    double tail_row_bound = 0.0;  // always 0 for finite windows
    Verdict verdict;
};

// Uniform strict dominance at s = dim/4: Proven iff every diagonal is nonzero
// and sigma_achieved < 1 strictly. Global summability is automatic for the
// finite window; the verdict notes this.
DominanceReport uniform_diagonal_dominance(const GeneralScheme& g);

// Row-wise strict dominance at caller-chosen s >= dim/4 (throws below that).
DominanceReport diagonal_dominance_with_s(const GeneralScheme& g, double s);

// ---------------------------------------------------------------------------
// Sobolev / summability diagnostics (reported as analysis, not theorems)
// ---------------------------------------------------------------------------

struct PointwiseSumReport {
    std::vector<double> partial;  // cumulative sums of (1+lambda_k)^-e m_k
    bool converges;               // ratio analysis: 2e > dim
};

// Homogeneity makes the per-level |f|^2 sums equal m_k at every point, so no
// point argument is needed. Spectrum-implemented manifolds only.
PointwiseSumReport sobolev_pointwise_sum(const ManifoldDescriptor& m, double e, int n);

// (sum (1+l_l+l_l')^r |a_ll'|^2)^(1/2); zonal version truncates at n levels
// and reports a tail bound (infinite when the weighted tail diverges).
EvalResult sobolev_norm(const GeneralScheme& g, double r);
EvalResult sobolev_norm(const ZonalScheme& s, double r, int n);

struct SummabilityReport {
    std::vector<double> partial;  // cumulative sums of the weighted |a|
    bool h2s_plausible;
    std::string note;
};

SummabilityReport summability(const GeneralScheme& g, double s);
SummabilityReport summability(const ZonalScheme& z, double s, int n);

// ---------------------------------------------------------------------------
// Strict positive definiteness via support arithmetic
// ---------------------------------------------------------------------------

// Single-factor conditions: circle = symmetrized covering; sphere (d > 2) =
// both parities infinite; projective families = unbounded support.
Verdict spd_zonal(const ManifoldDescriptor& m, const SpectralSet& f);

// Necessity on U = {k : some entry nonzero}, sufficiency on L = {k : all
// entries positive}. Assumes pd_convolutional(s) already Proven.
Verdict spd_via_UL(const ConvolutionalScheme& s);

// Sufficiency-only recursion: G = {l : slice(j, l) induces SPD on the second
// factor} (eventually periodic, hence representable), then the single-factor
// condition on the first. Never returns Disproven.
Verdict spd_product_recursion(const ProductManifold& m, const ProductSpectralSet& j);

// Six-case dispatch on the factor families. Disproven only from the
// necessary condition on j; Proven only from the sufficient condition on f;
// anything in between is Unknown. Callers with a >= 0 schemes pass j = f.
Verdict spd_product_corollary(const ProductManifold& m, const ProductSpectralSet& j,
                              const ProductSpectralSet& f, int torus_bound = 8);

// ---------------------------------------------------------------------------
// Quadratic-form and spectral-vector oracles
// ---------------------------------------------------------------------------

// sum_{xi,zeta} c_xi conj(c_zeta) K(xi,zeta); the imaginary residue must stay
// below 1e-12 of the form's scale (asserted, then discarded).
double quadratic_form(const Scheme& s, const std::vector<Point>& xi,
                      const std::vector<std::complex<double>>& c, int n);

// y_l = sum_xi c_xi f_l(xi) for l < count (explicit-basis manifolds).
Eigen::VectorXcd spectral_vector(const ManifoldDescriptor& m, const std::vector<Point>& xi,
                                 const std::vector<std::complex<double>>& c, long long count);

}  // namespace spdkern
