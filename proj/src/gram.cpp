#include "spdkern/gram.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <variant>

namespace spdkern {

namespace {

const ManifoldDescriptor* single_manifold(const Scheme& s) {
    if (const auto* z = std::get_if<ZonalScheme>(&s)) return &z->manifold;
    if (const auto* c = std::get_if<ConvolutionalScheme>(&s)) return &c->manifold;
    if (const auto* g = std::get_if<GeneralScheme>(&s)) return &g->manifold;
    return nullptr;
}

double point_distance(const Scheme& s, const Point& a, const Point& b) {
    if (const auto* p = std::get_if<ProductZonalScheme>(&s)) {
        const double d1 = geodesic_distance(p->manifold.first, first_factor(p->manifold, a),
                                            first_factor(p->manifold, b));
        const double d2 = geodesic_distance(p->manifold.second, second_factor(p->manifold, a),
                                            second_factor(p->manifold, b));
        return std::hypot(d1, d2);
    }
    return geodesic_distance(*single_manifold(s), a, b);
}

void require_distinct(const Scheme& s, const std::vector<Point>& xi) {
    constexpr double kMinSeparation = 1e-9;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        for (std::size_t j = i + 1; j < xi.size(); ++j) {
            if (point_distance(s, xi[i], xi[j]) <= kMinSeparation) {
                throw error("assemble_gram: points " + std::to_string(i) + " and " +
                            std::to_string(j) + " are coincident");
            }
        }
    }
}

}  // namespace

const char* spectrum_class_name(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::StrictlyPD: return "StrictlyPD";
        case SpectrumClass::SemidefiniteSingular: return "SemidefiniteSingular";
        case SpectrumClass::NotPD: return "NotPD";
    }
    return "?";
}

GramMatrix assemble_gram(const Scheme& s, const std::vector<Point>& xi, int n) {
    if (xi.empty()) throw error("assemble_gram: empty point set");
    require_distinct(s, xi);
    const auto m = static_cast<Eigen::Index>(xi.size());
    Eigen::MatrixXcd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i; j < m; ++j) {
            const KernelValue v = kernel_eval(s, xi[static_cast<std::size_t>(i)],
                                              xi[static_cast<std::size_t>(j)], n);
            if (i == j) {
                g(i, j) = std::complex<double>(v.value.real(), 0.0);
            } else {
                g(i, j) = v.value;
                g(j, i) = std::conj(v.value);
            }
        }
    }
    return GramMatrix{std::move(g), s, xi, n};
}

SpectrumReport verify_pd(const GramMatrix& g, double tol_strict, double tol_singular) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g.entries,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw error("verify_pd: eigensolver failed");
    SpectrumReport r;
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.max_diagonal = g.entries.diagonal().real().maxCoeff();
    r.tol_strict = tol_strict;
    r.tol_singular = tol_singular;
    const double scale = std::max(std::abs(r.max_diagonal), 1e-300);
    if (r.min_eigenvalue < -tol_singular * scale) {
        r.classification = SpectrumClass::NotPD;
    } else if (r.min_eigenvalue > tol_strict * scale) {
        r.classification = SpectrumClass::StrictlyPD;
    } else {
        r.classification = SpectrumClass::SemidefiniteSingular;
    }
    return r;
}

Interpolant fit(const Scheme& s, const std::vector<Point>& xi, const Eigen::VectorXcd& f,
                double lambda, int n) {
    if (static_cast<std::size_t>(f.size()) != xi.size()) {
        throw error("fit: data length does not match point count");
    }
    if (lambda < 0.0) throw error("fit: negative regularization");
    GramMatrix g = assemble_gram(s, xi, n);
    if (lambda == 0.0) {
        const SpectrumReport r = verify_pd(g);
        if (r.classification != SpectrumClass::StrictlyPD) {
            throw error("fit: gram matrix is " + std::string(spectrum_class_name(r.classification)) +
                        " at lambda = 0 (min eigenvalue " + std::to_string(r.min_eigenvalue) +
                        ", max diagonal " + std::to_string(r.max_diagonal) + ")");
        }
    }
    Eigen::MatrixXcd a = g.entries;
    a.diagonal().array() += std::complex<double>(lambda, 0.0);
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw error("fit: factorization failed");
    Eigen::VectorXcd c = ldlt.solve(f);
    return Interpolant{s, xi, std::move(c), lambda, n};
}

std::complex<double> evaluate(const Interpolant& it, const Point& zeta) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < it.points.size(); ++i) {
        acc += it.coefficients(static_cast<Eigen::Index>(i)) *
               kernel_eval(it.scheme, zeta, it.points[i], it.truncation).value;
    }
    return acc;
}

namespace {

DegeneracyWitness checked_witness(const Scheme& s, std::vector<Point> points,
                                  std::vector<std::complex<double>> coeffs, int n) {
    const double form = quadratic_form(s, points, coeffs, n);
    double diag = 0.0;
    double csum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        diag = std::max(diag, std::abs(kernel_eval(s, points[i], points[i], n).value.real()));
        csum += std::norm(coeffs[i]);
    }
    const double scale = std::max(diag * csum, 1e-300);
    const double residual = std::abs(form) / scale;
    if (residual > 1e-9) {
        throw error("degeneracy_witness: construction failed to annihilate (residual " +
                    std::to_string(residual) + ")");
    }
    return DegeneracyWitness{std::move(points), std::move(coeffs), residual};
}

std::optional<DegeneracyWitness> antipodal_witness(const Scheme& s,
                                                   const ManifoldDescriptor& m,
                                                   const ParityDefect& pd, int n,
                                                   std::uint64_t seed) {
    if (m.family != Family::Sphere) return std::nullopt;
    std::complex<double> second;
    if (pd.odd_missing && pd.odd_max < 0) {
        second = {-1.0, 0.0};  // support entirely even: K(p,p) = K(p,-p)
    } else if (pd.even_missing && pd.even_max < 0) {
        second = {1.0, 0.0};  // support entirely odd: K(p,p) = -K(p,-p)
    } else {
        return std::nullopt;  // a finite remnant of the other parity blocks the pair
    }
    std::vector<Point> pts = sample_points(m, 2, Sampling::AntipodalPairs, seed);
    return checked_witness(s, std::move(pts), {std::complex<double>(1.0, 0.0), second}, n);
}

std::optional<DegeneracyWitness> roots_of_unity_witness(const Scheme& s,
                                                        const ManifoldDescriptor& m,
                                                        const ApWitness& aw, int n) {
    if (m.family != Family::Circle) return std::nullopt;
    if (aw.modulus < 2) return std::nullopt;
    const auto mod = static_cast<int>(aw.modulus);
    std::vector<Point> pts = sample_points(m, mod, Sampling::Equispaced, 0);
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(mod));
    for (int j = 0; j < mod; ++j) {
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(aw.c) *
                             static_cast<double>(j) / static_cast<double>(mod);
        coeffs[static_cast<std::size_t>(j)] = std::polar(1.0, phase);
    }
    return checked_witness(s, std::move(pts), std::move(coeffs), n);
}

std::optional<DegeneracyWitness> torus_grid_witness(const Scheme& s,
                                                    const ProductManifold& m,
                                                    const SubgroupWitness& sw, int n) {
    if (m.first.family != Family::Circle || m.second.family != Family::Circle) {
        return std::nullopt;
    }
    // Dual grid of (a,b)Z + (0,d)Z inside the torus, with the character of the
    // missed translation as coefficients: the grid sum of e^{i<k,x>} vanishes
    // off the coset, so every supported frequency pair is annihilated.
    const long long a = sw.a;
    const long long b = sw.b;
    const long long d = sw.d;
    std::vector<Point> pts;
    std::vector<std::complex<double>> coeffs;
    pts.reserve(static_cast<std::size_t>(a * d));
    for (long long r = 0; r < a; ++r) {
        for (long long t = 0; t < d; ++t) {
            const double x1 = 2.0 * std::numbers::pi * static_cast<double>(r * d - b * t) /
                              static_cast<double>(a * d);
            const double x2 = 2.0 * std::numbers::pi * static_cast<double>(t) /
                              static_cast<double>(d);
            const double x1n = x1 - 2.0 * std::numbers::pi *
                                         std::floor(x1 / (2.0 * std::numbers::pi));
            pts.push_back(product_point(Point{{x1n}}, Point{{x2}}));
            const double phase = -(static_cast<double>(sw.t1) * x1 +
                                   static_cast<double>(sw.t2) * x2);
            coeffs.push_back(std::polar(1.0, phase));
        }
    }
    return checked_witness(s, std::move(pts), std::move(coeffs), n);
}

}  // namespace

std::optional<DegeneracyWitness> degeneracy_witness(const Scheme& s, const Verdict& v, int n,
                                                    std::uint64_t seed) {
    if (v.status != Status::Disproven) return std::nullopt;
    if (const auto* pd = std::get_if<ParityDefect>(&v.evidence)) {
        if (const auto* m = single_manifold(s)) return antipodal_witness(s, *m, *pd, n, seed);
        return std::nullopt;
    }
    if (const auto* aw = std::get_if<ApWitness>(&v.evidence)) {
        if (const auto* m = single_manifold(s)) return roots_of_unity_witness(s, *m, *aw, n);
        return std::nullopt;
    }
    if (const auto* sw = std::get_if<SubgroupWitness>(&v.evidence)) {
        if (const auto* p = std::get_if<ProductZonalScheme>(&s)) {
            return torus_grid_witness(s, p->manifold, *sw, n);
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Point> sample_for_scheme(const Scheme& s, int n, std::uint64_t seed) {
    if (const auto* p = std::get_if<ProductZonalScheme>(&s)) {
        return sample_points(p->manifold, n, Sampling::UniformRandom, seed);
    }
    return sample_points(*single_manifold(s), n, Sampling::UniformRandom, seed);
}

SpectrumReport random_psd_trial(const Scheme& s, int n_points, std::uint64_t seed, int truncation,
                                double tol_strict, double tol_singular) {
    const std::vector<Point> xi = sample_for_scheme(s, n_points, seed);
    const GramMatrix g = assemble_gram(s, xi, truncation);
    return verify_pd(g, tol_strict, tol_singular);
}

}  // namespace spdkern
