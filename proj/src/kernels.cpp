#include "spdkern/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spdkern {

namespace {

constexpr int kTruncationCap = 1'000'000;

double transformed_argument(const ManifoldDescriptor& m, double t) {
    // Degree-k polynomial in cos(d) = T_eps(t); only eps = 2 transforms.
    return m.epsilon == 2 ? 2.0 * t * t - 1.0 : t;
}

// m_k as a double via the exact per-step ratios (avoids the rational
// overflow guard at large k; relative drift ~ k * eps is harmless in bounds).
double mult_ladder_to(const ManifoldDescriptor& m, int k) {
    double v = 1.0;
    for (int j = 1; j <= k; ++j) v *= multiplicity_ratio(m, j);
    return v;
}

bool spectrum_implemented(const ManifoldDescriptor& m) {
    return m.family == Family::Circle || m.family == Family::Sphere ||
           m.family == Family::RealProjective;
}

void validate_tail(const ManifoldDescriptor& m, const TailRule& tail) {
    if (const auto* g = std::get_if<GeometricTail>(&tail)) {
        if (!(g->p > 0.0) || !std::isfinite(g->p)) throw error("geometric tail: scale p must be > 0");
        if (!(g->r > 0.0 && g->r < 1.0)) throw error("geometric tail: base r must lie in (0,1)");
    } else if (const auto* w = std::get_if<PowerTail>(&tail)) {
        if (!(w->p > 0.0) || !std::isfinite(w->p)) throw error("power tail: scale p must be > 0");
        if (!spectrum_implemented(m))
            throw error("power tail needs an implemented spectrum (circle, sphere, "
                        "real projective)");
        const double q_min = (m.d - 1) / 2.0 + 1.0;
        if (!(w->q > q_min))
            throw error("power tail: exponent q must exceed (d-1)/2 + 1 for convergence");
    }
}

double tail_value(const ManifoldDescriptor& m, const TailRule& tail, int k) {
    if (std::holds_alternative<ZeroTail>(tail)) return 0.0;
    if (const auto* g = std::get_if<GeometricTail>(&tail)) return g->p * std::pow(g->r, k);
    const auto& w = std::get<PowerTail>(tail);
    return w.p * std::pow(1.0 + eigenvalue(m, k), -w.q);
}

// Upper bound on sum_{k >= from} p r^k m_k. The term ratio rho_k =
// r * m_{k+1}/m_k decreases toward r, so once it clears the cutoff the
// remainder telescopes into a geometric series.
double geometric_mass_bound(const ManifoldDescriptor& m, double p, double r, int from) {
    double t = p * std::pow(r, from) * mult_ladder_to(m, from);
    if (t == 0.0) return 0.0;
    const double cutoff = (1.0 + r) / 2.0;
    double total = 0.0;
    int k = from;
    while (true) {
        const double rho = r * multiplicity_ratio(m, k + 1);
        if (rho < cutoff) return total + t / (1.0 - rho);
        total += t;
        t *= rho;
        ++k;
        if (k > from + 2'000'000) throw error("geometric tail bound: ratio did not settle");
    }
}

// Upper bound on sum_{k >= from} p (1+lambda_k)^-q m_k. For k >= K1 >= d the
// terms obey t_k <= t_K1 * 2^q * (k/K1)^(d-2-2q) (eigenvalues grow like k^2,
// multiplicities at most like k^(d-2)), and the exponent is < -3, so an
// integral comparison closes the sum.
double power_mass_bound(const ManifoldDescriptor& m, double p, double q, int from) {
    const int k1 = std::max(from, std::max(m.d, 10));
    double mk = mult_ladder_to(m, from);
    double total = 0.0;
    for (int k = from; k < k1; ++k) {
        total += p * std::pow(1.0 + eigenvalue(m, k), -q) * mk;
        mk *= multiplicity_ratio(m, k + 1);
    }
    const double t_k1 = p * std::pow(1.0 + eigenvalue(m, k1), -q) * mk;
    const double decay = 2.0 * q - (m.d - 2);
    return total + t_k1 * std::pow(2.0, q) * (1.0 + k1 / (decay - 1.0));
}

}  // namespace

bool is_zero_tail(const TailRule& t) { return std::holds_alternative<ZeroTail>(t); }

double coefficient(const ManifoldDescriptor& m, const CoefficientSequence& c, int k) {
    if (k < 0) throw error("coefficient: negative level");
    if (static_cast<size_t>(k) < c.window.size()) return c.window[static_cast<size_t>(k)];
    if (is_zero_tail(c.tail) || !c.mask.contains(k)) return 0.0;
    return tail_value(m, c.tail, k);
}

SpectralSet support(const CoefficientSequence& c) {
    std::vector<long long> finite;
    for (size_t k = 0; k < c.window.size(); ++k)
        if (c.window[k] > 0.0) finite.push_back(static_cast<long long>(k));
    SpectralSet head = SpectralSet::finite_set(std::move(finite));
    if (is_zero_tail(c.tail) || c.mask.empty()) return head;
    return set_union(head, restrict_min(c.mask, static_cast<long long>(c.window.size())));
}

double tail_mass_bound(const ManifoldDescriptor& m, const CoefficientSequence& c, int from) {
    if (from < 0) throw error("tail_mass_bound: negative start");
    double total = 0.0;
    const int w = static_cast<int>(c.window.size());
    if (from < w) {
        double mk = mult_ladder_to(m, from);
        for (int k = from; k < w; ++k) {
            total += std::abs(c.window[static_cast<size_t>(k)]) * mk;
            mk *= multiplicity_ratio(m, k + 1);
        }
    }
    if (is_zero_tail(c.tail) || c.mask.empty()) return total;
    const int k0 = std::max(from, w);
    if (const auto* g = std::get_if<GeometricTail>(&c.tail))
        return total + geometric_mass_bound(m, g->p, g->r, k0);
    const auto& pw = std::get<PowerTail>(c.tail);
    return total + power_mass_bound(m, pw.p, pw.q, k0);
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

ZonalScheme make_zonal(ManifoldDescriptor m, CoefficientSequence c) {
    for (double b : c.window)
        if (!std::isfinite(b)) throw error("zonal scheme: nonfinite coefficient");
    validate_tail(m, c.tail);
    return ZonalScheme{m, std::move(c)};
}

ConvolutionalScheme make_convolutional(ManifoldDescriptor m,
                                       std::vector<std::vector<double>> levels) {
    if (!has_explicit_basis(m))
        throw error("convolutional scheme: explicit basis only on the circle and S^2");
    for (size_t k = 0; k < levels.size(); ++k) {
        const auto want = static_cast<size_t>(multiplicity(m, static_cast<int>(k)));
        if (levels[k].size() != want)
            throw error("convolutional scheme: level " + std::to_string(k) + " needs " +
                        std::to_string(want) + " entries");
        for (double v : levels[k])
            if (!std::isfinite(v)) throw error("convolutional scheme: nonfinite entry");
    }
    return ConvolutionalScheme{m, std::move(levels)};
}

GeneralScheme make_general(ManifoldDescriptor m, Eigen::MatrixXcd window) {
    if (!has_explicit_basis(m))
        throw error("general scheme: explicit basis only on the circle and S^2");
    if (window.rows() != window.cols()) throw error("general scheme: window must be square");
    for (Eigen::Index i = 0; i < window.rows(); ++i)
        for (Eigen::Index j = i; j < window.cols(); ++j) {
            if (!std::isfinite(window(i, j).real()) || !std::isfinite(window(i, j).imag()))
                throw error("general scheme: nonfinite entry");
            if (window(i, j) != std::conj(window(j, i)))
                throw error("general scheme: window must be Hermitian as stored");
        }
    return GeneralScheme{m, std::move(window)};
}

ProductZonalScheme make_product_zonal(ProductManifold m, Eigen::MatrixXd window,
                                      ProductTailRule tail, ProductSpectralSet mask) {
    for (Eigen::Index i = 0; i < window.rows(); ++i)
        for (Eigen::Index j = 0; j < window.cols(); ++j)
            if (!(window(i, j) >= 0.0) || !std::isfinite(window(i, j)))
                throw error("product zonal scheme: coefficients must be finite and >= 0");
    if (const auto* g = std::get_if<ProductGeometricTail>(&tail)) {
        if (!(g->p > 0.0) || !std::isfinite(g->p))
            throw error("product tail: scale p must be > 0");
        if (!(g->r1 > 0.0 && g->r1 < 1.0) || !(g->r2 > 0.0 && g->r2 < 1.0))
            throw error("product tail: bases must lie in (0,1)");
    }
    return ProductZonalScheme{m, std::move(window), tail, std::move(mask)};
}

// ---------------------------------------------------------------------------
// Support sets
// ---------------------------------------------------------------------------

SpectralSet conv_support_u(const ConvolutionalScheme& s) {
    std::vector<long long> finite;
    for (size_t k = 0; k < s.levels.size(); ++k)
        if (std::any_of(s.levels[k].begin(), s.levels[k].end(),
                        [](double v) { return v != 0.0; }))
            finite.push_back(static_cast<long long>(k));
    return SpectralSet::finite_set(std::move(finite));
}

SpectralSet conv_support_l(const ConvolutionalScheme& s) {
    std::vector<long long> finite;
    for (size_t k = 0; k < s.levels.size(); ++k)
        if (std::all_of(s.levels[k].begin(), s.levels[k].end(),
                        [](double v) { return v > 0.0; }))
            finite.push_back(static_cast<long long>(k));
    return SpectralSet::finite_set(std::move(finite));
}

double product_coefficient(const ProductZonalScheme& s, int k, int kp) {
    if (k < 0 || kp < 0) throw error("product_coefficient: negative level");
    if (k < s.window.rows() && kp < s.window.cols()) return s.window(k, kp);
    const auto* g = std::get_if<ProductGeometricTail>(&s.tail);
    if (g == nullptr) return 0.0;
    if (k < s.window.rows() || kp < s.window.cols()) return 0.0;
    if (!s.mask.contains(k, kp)) return 0.0;
    return g->p * std::pow(g->r1, k) * std::pow(g->r2, kp);
}

ProductSpectralSet product_support(const ProductZonalScheme& s) {
    std::vector<std::pair<long long, long long>> finite;
    for (Eigen::Index i = 0; i < s.window.rows(); ++i)
        for (Eigen::Index j = 0; j < s.window.cols(); ++j)
            if (s.window(i, j) > 0.0) finite.emplace_back(i, j);
    std::vector<Box> boxes;
    if (std::holds_alternative<ProductGeometricTail>(s.tail) && !s.mask.empty()) {
        const long long n1 = s.window.rows(), n2 = s.window.cols();
        for (auto b : s.mask.boxes()) {
            if (b.first.start < n1)
                b.first.start += ((n1 - b.first.start + b.first.step - 1) / b.first.step) *
                                 b.first.step;
            if (b.second.start < n2)
                b.second.start += ((n2 - b.second.start + b.second.step - 1) / b.second.step) *
                                  b.second.step;
            boxes.push_back(b);
        }
        for (const auto& f : s.mask.finite())
            if (f.first >= n1 && f.second >= n2) finite.push_back(f);
    }
    return ProductSpectralSet::make(std::move(finite), std::move(boxes));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

EvalResult zonal_eval(const ZonalScheme& s, double t, int n) {
    if (n < 1) throw error("zonal_eval: truncation must be >= 1");
    const double x = transformed_argument(s.manifold, t);
    const std::vector<double> pk = jacobi_eval_range(s.manifold.jacobi, n - 1, x);
    double value = 0.0;
    for (int k = 0; k < n; ++k) {
        const double b = coefficient(s.manifold, s.coeffs, k);
        if (b == 0.0) continue;
        value += b * addition_coefficient(s.manifold.jacobi, k) * pk[static_cast<size_t>(k)];
    }
    return EvalResult{value, tail_mass_bound(s.manifold, s.coeffs, n)};
}

namespace {

// Level functions c_k P_k(T_eps(t)) for k < n.
std::vector<double> level_functions(const ManifoldDescriptor& m, double t, int n) {
    const std::vector<double> pk = jacobi_eval_range(m.jacobi, n - 1, transformed_argument(m, t));
    std::vector<double> out(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<size_t>(k)] = addition_coefficient(m.jacobi, k) * pk[static_cast<size_t>(k)];
    return out;
}

double product_tail_bound(const ProductZonalScheme& s, int n1, int n2) {
    const auto* g = std::get_if<ProductGeometricTail>(&s.tail);
    if (g == nullptr || s.mask.empty()) return 0.0;
    const int w1 = static_cast<int>(s.window.rows());
    const int w2 = static_cast<int>(s.window.cols());
    // Tail support sits in the quadrant [w1,inf) x [w2,inf); everything the
    // evaluation rectangle misses lies in one of the two half-strips.
    const double g1_w = geometric_mass_bound(s.manifold.first, 1.0, g->r1, w1);
    const double g2_w = geometric_mass_bound(s.manifold.second, 1.0, g->r2, w2);
    const double g1_n = geometric_mass_bound(s.manifold.first, 1.0, g->r1, std::max(n1, w1));
    const double g2_n = geometric_mass_bound(s.manifold.second, 1.0, g->r2, std::max(n2, w2));
    return g->p * (g1_n * g2_w + g1_w * g2_n);
}

}  // namespace

EvalResult product_zonal_eval(const ProductZonalScheme& s, double t1, double t2, int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw error("product_zonal_eval: truncations must be >= 1");
    const std::vector<double> u = level_functions(s.manifold.first, t1, n1);
    const std::vector<double> v = level_functions(s.manifold.second, t2, n2);
    double value = 0.0;
    const int w1 = std::min<int>(static_cast<int>(s.window.rows()), n1);
    const int w2 = std::min<int>(static_cast<int>(s.window.cols()), n2);
    for (int i = 0; i < w1; ++i)
        for (int j = 0; j < w2; ++j) {
            const double a = s.window(i, j);
            if (a != 0.0) value += a * u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        }
    if (const auto* g = std::get_if<ProductGeometricTail>(&s.tail); g != nullptr) {
        for (int k = static_cast<int>(s.window.rows()); k < n1; ++k)
            for (int kp = static_cast<int>(s.window.cols()); kp < n2; ++kp) {
                if (!s.mask.contains(k, kp)) continue;
                value += g->p * std::pow(g->r1, k) * std::pow(g->r2, kp) *
                         u[static_cast<size_t>(k)] * v[static_cast<size_t>(kp)];
            }
    }
    double dropped_window = 0.0;
    if (n1 < s.window.rows() || n2 < s.window.cols()) {
        // Exact mass of explicit entries outside the evaluation rectangle.
        for (int i = 0; i < s.window.rows(); ++i)
            for (int j = 0; j < s.window.cols(); ++j)
                if ((i >= n1 || j >= n2) && s.window(i, j) != 0.0)
                    dropped_window += std::abs(s.window(i, j)) *
                                      mult_ladder_to(s.manifold.first, i) *
                                      mult_ladder_to(s.manifold.second, j);
    }
    return EvalResult{value, dropped_window + product_tail_bound(s, n1, n2)};
}

double zonal_component(const ManifoldDescriptor& m, int k, const Point& xi, const Point& zeta) {
    if (!m.geometry_enabled) throw error("zonal_component: geometry not enabled");
    const double x = transformed_argument(m, cosine_argument(m, xi, zeta));
    return addition_coefficient(m.jacobi, k) * jacobi_eval(m.jacobi, k, x) /
           std::sqrt(multiplicity(m, k));
}

double d_from_b(const ManifoldDescriptor& m, int k, double b) {
    return b * std::sqrt(multiplicity(m, k));
}

double b_from_d(const ManifoldDescriptor& m, int k, double d) {
    return d / std::sqrt(multiplicity(m, k));
}

namespace {

KernelValue eval_convolutional(const ConvolutionalScheme& s, const Point& xi, const Point& zeta,
                               int n) {
    const int levels = static_cast<int>(s.levels.size());
    const int used = std::min(levels, n);
    std::complex<double> value{0.0, 0.0};
    if (s.manifold.family == Family::Circle) {
        const double th1 = xi.x.at(0), th2 = zeta.x.at(0);
        for (int k = 0; k < used; ++k) {
            const auto& d = s.levels[static_cast<size_t>(k)];
            if (k == 0) {
                value += d[0];
            } else {
                value += d[0] * circle_basis(k, th1) * std::conj(circle_basis(k, th2));
                value += d[1] * circle_basis(-k, th1) * std::conj(circle_basis(-k, th2));
            }
        }
    } else {
        const std::array<double, 3> p1{xi.x.at(0), xi.x.at(1), xi.x.at(2)};
        const std::array<double, 3> p2{zeta.x.at(0), zeta.x.at(1), zeta.x.at(2)};
        for (int k = 0; k < used; ++k) {
            const auto& d = s.levels[static_cast<size_t>(k)];
            for (int mm = -k; mm <= k; ++mm) {
                const double w = d[static_cast<size_t>(mm + k)];
                if (w == 0.0) continue;
                value += w * sphere2_harmonic(k, mm, p1) * std::conj(sphere2_harmonic(k, mm, p2));
            }
        }
    }
    // |sum_j d_j f_j(xi) conj(f_j(zeta))| <= max_j |d_j| * m_k (Cauchy-Schwarz
    // plus the addition formula at t = 1).
    double bound = 0.0;
    if (used < levels) {
        double mk = mult_ladder_to(s.manifold, used);
        for (int k = used; k < levels; ++k) {
            double mx = 0.0;
            for (double dv : s.levels[static_cast<size_t>(k)]) mx = std::max(mx, std::abs(dv));
            bound += mx * mk;
            mk *= multiplicity_ratio(s.manifold, k + 1);
        }
    }
    return KernelValue{value, bound};
}

KernelValue eval_general(const GeneralScheme& s, const Point& xi, const Point& zeta) {
    const Eigen::VectorXcd u = basis_vector(s.manifold, s.window.rows(), xi);
    const Eigen::VectorXcd v = basis_vector(s.manifold, s.window.rows(), zeta);
    const Eigen::VectorXcd w = s.window * v.conjugate();
    return KernelValue{(u.array() * w.array()).sum(), 0.0};
}

}  // namespace

KernelValue kernel_eval(const Scheme& s, const Point& xi, const Point& zeta, int n) {
    if (const auto* z = std::get_if<ZonalScheme>(&s)) {
        if (!z->manifold.geometry_enabled)
            throw error("kernel_eval: zonal scheme needs point geometry; supply t directly "
                        "via zonal_eval");
        const EvalResult r = zonal_eval(*z, cosine_argument(z->manifold, xi, zeta), n);
        return KernelValue{r.value, r.tail_bound};
    }
    if (const auto* c = std::get_if<ConvolutionalScheme>(&s)) return eval_convolutional(*c, xi, zeta, n);
    if (const auto* g = std::get_if<GeneralScheme>(&s)) return eval_general(*g, xi, zeta);
    const auto& p = std::get<ProductZonalScheme>(s);
    if (!p.manifold.first.geometry_enabled || !p.manifold.second.geometry_enabled)
        throw error("kernel_eval: product factors need point geometry");
    const double t1 = cosine_argument(p.manifold.first, first_factor(p.manifold, xi),
                                      first_factor(p.manifold, zeta));
    const double t2 = cosine_argument(p.manifold.second, second_factor(p.manifold, xi),
                                      second_factor(p.manifold, zeta));
    const EvalResult r = product_zonal_eval(p, t1, t2, n, n);
    return KernelValue{r.value, r.tail_bound};
}

// ---------------------------------------------------------------------------
// Truncation defaults
// ---------------------------------------------------------------------------

namespace {

// Partial mass sum_{k<n} |b_k| m_k; the t = 1 value the tolerance is
// relative to.
double partial_mass(const ManifoldDescriptor& m, const CoefficientSequence& c, int n) {
    double total = 0.0;
    double mk = 1.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0) mk *= multiplicity_ratio(m, k);
        total += std::abs(coefficient(m, c, k)) * mk;
    }
    return total;
}

}  // namespace

int default_truncation(const ZonalScheme& s, double rel_tol) {
    const int w = std::max<int>(1, static_cast<int>(s.coeffs.window.size()));
    if (is_zero_tail(s.coeffs.tail) || s.coeffs.mask.empty()) return w;
    const auto ok = [&](int n) {
        return tail_mass_bound(s.manifold, s.coeffs, n) <=
               rel_tol * partial_mass(s.manifold, s.coeffs, n);
    };
    int lo = w;  // last known failing candidate - 1 semantics below
    if (ok(lo)) return lo;
    int hi = lo;
    while (!ok(hi)) {
        if (hi >= kTruncationCap)
            throw error("default_truncation: tolerance unreachable below internal cap");
        lo = hi;
        hi = std::min(kTruncationCap, hi * 2);
    }
    // Smallest passing n in (lo, hi].
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<int, int> default_truncation(const ProductZonalScheme& s, double rel_tol) {
    const int w = std::max<int>(
        1, static_cast<int>(std::max(s.window.rows(), s.window.cols())));
    if (std::holds_alternative<ZeroTail>(s.tail) || s.mask.empty()) return {w, w};
    const auto partial = [&](int n) {
        double total = 0.0;
        std::vector<double> m1(static_cast<size_t>(n)), m2(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            m1[static_cast<size_t>(k)] = k == 0 ? 1.0 : m1[static_cast<size_t>(k - 1)] *
                                                            multiplicity_ratio(s.manifold.first, k);
            m2[static_cast<size_t>(k)] = k == 0 ? 1.0 : m2[static_cast<size_t>(k - 1)] *
                                                            multiplicity_ratio(s.manifold.second, k);
        }
        for (int k = 0; k < n; ++k)
            for (int kp = 0; kp < n; ++kp) {
                const double a = product_coefficient(s, k, kp);
                if (a != 0.0)
                    total += a * m1[static_cast<size_t>(k)] * m2[static_cast<size_t>(kp)];
            }
        return total;
    };
    const auto ok = [&](int n) { return product_tail_bound(s, n, n) <= rel_tol * partial(n); };
    int lo = w;
    if (ok(lo)) return {lo, lo};
    int hi = lo;
    while (!ok(hi)) {
        if (hi >= 100'000)
            throw error("default_truncation: tolerance unreachable below internal cap");
        lo = hi;
        hi = std::min(100'000, hi * 2);
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return {hi, hi};
}

int default_truncation(const Scheme& s, double rel_tol) {
    if (const auto* z = std::get_if<ZonalScheme>(&s)) return default_truncation(*z, rel_tol);
    if (const auto* c = std::get_if<ConvolutionalScheme>(&s))
        return std::max<int>(1, static_cast<int>(c->levels.size()));
    if (const auto* g = std::get_if<GeneralScheme>(&s))
        return std::max<int>(1, flat_level(g->manifold, std::max<Eigen::Index>(
                                               0, g->window.rows() - 1)) + 1);
    const auto nn = default_truncation(std::get<ProductZonalScheme>(s), rel_tol);
    return std::max(nn.first, nn.second);
}

// ---------------------------------------------------------------------------
// Flat basis
// ---------------------------------------------------------------------------

bool has_explicit_basis(const ManifoldDescriptor& m) {
    return m.family == Family::Circle || (m.family == Family::Sphere && m.d == 3);
}

long long flat_count(const ManifoldDescriptor& m, int max_level) {
    if (max_level < 0) return 0;
    if (m.family == Family::Circle) return 2LL * max_level + 1;
    if (m.family == Family::Sphere && m.d == 3)
        return static_cast<long long>(max_level + 1) * (max_level + 1);
    throw error("flat basis only on the circle and S^2");
}

int flat_level(const ManifoldDescriptor& m, long long ell) {
    if (ell < 0) throw error("flat_level: negative index");
    if (m.family == Family::Circle) return static_cast<int>((ell + 1) / 2);
    if (m.family == Family::Sphere && m.d == 3) {
        auto k = static_cast<long long>(std::sqrt(static_cast<double>(ell)));
        while (k * k > ell) --k;
        while ((k + 1) * (k + 1) <= ell) ++k;
        return static_cast<int>(k);
    }
    throw error("flat basis only on the circle and S^2");
}

long long circle_frequency(long long ell) {
    if (ell < 0) throw error("circle_frequency: negative index");
    if (ell == 0) return 0;
    return ell % 2 == 1 ? (ell + 1) / 2 : -(ell / 2);
}

long long circle_flat_index(long long freq) {
    if (freq == 0) return 0;
    return freq > 0 ? 2 * freq - 1 : -2 * freq;
}

std::complex<double> flat_basis_eval(const ManifoldDescriptor& m, long long ell, const Point& p) {
    if (m.family == Family::Circle) return circle_basis(circle_frequency(ell), p.x.at(0));
    if (m.family == Family::Sphere && m.d == 3) {
        const int k = flat_level(m, ell);
        const int mm = static_cast<int>(ell - static_cast<long long>(k) * k - k);
        return sphere2_harmonic(k, mm, {p.x.at(0), p.x.at(1), p.x.at(2)});
    }
    throw error("flat basis only on the circle and S^2");
}

Eigen::VectorXcd basis_vector(const ManifoldDescriptor& m, long long count, const Point& p) {
    Eigen::VectorXcd v(count);
    for (long long ell = 0; ell < count; ++ell) v(ell) = flat_basis_eval(m, ell, p);
    return v;
}

// ---------------------------------------------------------------------------
// Coefficient recovery (circle)
// ---------------------------------------------------------------------------

namespace {

const ManifoldDescriptor& recovery_manifold(const Scheme& s) {
    if (const auto* z = std::get_if<ZonalScheme>(&s)) return z->manifold;
    if (const auto* c = std::get_if<ConvolutionalScheme>(&s)) return c->manifold;
    if (const auto* g = std::get_if<GeneralScheme>(&s)) return g->manifold;
    throw error("recover_coefficient: single-factor circle schemes only");
}

long long recovery_max_frequency(const Scheme& s, int truncation) {
    if (const auto* g = std::get_if<GeneralScheme>(&s)) {
        long long mx = 0;
        for (Eigen::Index ell = 0; ell < g->window.rows(); ++ell)
            mx = std::max(mx, std::llabs(circle_frequency(ell)));
        return mx;
    }
    return std::max(0, truncation - 1);
}

}  // namespace

Eigen::MatrixXcd recover_window(const Scheme& s, long long count, int q_nodes, int truncation) {
    const ManifoldDescriptor& m = recovery_manifold(s);
    if (m.family != Family::Circle) throw error("recover_coefficient: circle schemes only");
    long long need = recovery_max_frequency(s, truncation);
    for (long long ell = 0; ell < count; ++ell)
        need = std::max(need, std::llabs(circle_frequency(ell)));
    if (q_nodes < 2 * need + 1)
        throw error("recover_coefficient: need at least 2*max_frequency+1 quadrature nodes");
    Eigen::MatrixXcd gram(q_nodes, q_nodes);
    std::vector<Point> theta(static_cast<size_t>(q_nodes));
    for (int i = 0; i < q_nodes; ++i)
        theta[static_cast<size_t>(i)] = Point{{2.0 * M_PI * i / q_nodes}};
    for (int i = 0; i < q_nodes; ++i)
        for (int j = 0; j < q_nodes; ++j)
            gram(i, j) = kernel_eval(s, theta[static_cast<size_t>(i)],
                                     theta[static_cast<size_t>(j)], truncation)
                             .value;
    Eigen::MatrixXcd basis(q_nodes, count);
    for (int i = 0; i < q_nodes; ++i)
        basis.row(i) = basis_vector(m, count, theta[static_cast<size_t>(i)]).transpose();
    return (basis.adjoint() * gram * basis) / (static_cast<double>(q_nodes) * q_nodes);
}

std::complex<double> recover_coefficient(const Scheme& s, long long ell, long long ell_prime,
                                         int q_nodes, int truncation) {
    const long long count = std::max(ell, ell_prime) + 1;
    return recover_window(s, count, q_nodes, truncation)(ell, ell_prime);
}

}  // namespace spdkern
