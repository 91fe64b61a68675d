// Acceptance suite: twelve end-to-end checks tying the analytic criteria to
// numerical oracles. Each prints one PASS/FAIL line; the exit code is the
// number of failures. Tolerances are pinned here, not read from anywhere.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spdkern/io.hpp"

using namespace spdkern;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "spdkern_acceptance";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
    const fs::path p = work_dir() / name;
    std::ofstream f(p, std::ios::binary);
    f << body;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

// Environment overrides the build-time locations so the binary can drive an
// installed CLI as well as the one in the build tree.
std::string cli_path() {
    if (const char* env = std::getenv("SPDKERN_CLI_PATH")) return env;
#ifdef SPDKERN_CLI_PATH
    return SPDKERN_CLI_PATH;
#else
    throw error("SPDKERN_CLI_PATH is not set");
#endif
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("SPDKERN_FIXTURES_DIR")) return env;
#ifdef SPDKERN_FIXTURES_DIR
    return SPDKERN_FIXTURES_DIR;
#else
    throw error("SPDKERN_FIXTURES_DIR is not set");
#endif
}

int run_cli_binary(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) throw error("failed to launch CLI");
    return WEXITSTATUS(status);
}

// Exact eigenspace dimension for S^{d-1}: (2n+d-2) * (n+1)...(n+d-3) / (d-2)!
long long harmonic_dimension(int d, long long n) {
    if (n == 0) return 1;
    unsigned __int128 num = static_cast<unsigned long long>(2 * n + d - 2);
    for (int i = 1; i <= d - 3; ++i) num *= static_cast<unsigned long long>(n + i);
    unsigned long long fact = 1;
    for (int i = 2; i <= d - 2; ++i) fact *= static_cast<unsigned long long>(i);
    return static_cast<long long>(num / fact);
}

const ManifoldDescriptor s2 = make_manifold(Family::Sphere, 3);
const ManifoldDescriptor circle = make_manifold(Family::Circle, 2);

// Seeded random circle configurations with separation >= half the grid
// spacing. Uniform sampling routinely produces point clusters that push an
// analytic kernel's Gram min eigenvalue below any fixed relative band, so the
// strictness trials pin well-separated jittered configurations instead.
std::vector<Point> jittered_circle(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    const double spacing = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        pts.push_back(Point{{spacing * (j + 0.5 * u)}});
    }
    return pts;
}

const char* kCircle3NSpec = R"json({
  "manifold": {"family": "circle", "d": 2},
  "kernel": {"type": "zonal", "coefficients": [1.0],
             "tail": {"type": "geometric", "p": 1.0, "r": 0.5}, "mask": "ap:0+3n"}
})json";

const char* kCircleFullSpec = R"json({
  "manifold": {"family": "circle", "d": 2},
  "kernel": {"type": "zonal", "coefficients": [],
             "tail": {"type": "geometric", "p": 1.0, "r": 0.5}, "mask": "all"}
})json";

// --------------------------------------------------------------------------
// 1. Addition theorem on S^2: spherical harmonic level sums against the
//    zonal closed form, k <= 20, 100 seeded point pairs, 1e-9, under 5 s.
// --------------------------------------------------------------------------
bool check_addition_theorem(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto pts = sample_points(s2, 200, Sampling::UniformRandom, 42);
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double ck = addition_coefficient(s2.jacobi, k);
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            const std::array<double, 3> a{pts[i].x[0], pts[i].x[1], pts[i].x[2]};
            const std::array<double, 3> b{pts[i + 1].x[0], pts[i + 1].x[1], pts[i + 1].x[2]};
            std::complex<double> sum{0.0, 0.0};
            for (int m = -k; m <= k; ++m)
                sum += sphere2_harmonic(k, m, a) * std::conj(sphere2_harmonic(k, m, b));
            const double zonal =
                ck * jacobi_eval(s2.jacobi, k, cosine_argument(s2, pts[i], pts[i + 1]));
            worst = std::max(worst, std::abs(sum - std::complex<double>(zonal, 0.0)));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "max deviation " << worst << ", " << seconds << " s";
    detail = os.str();
    return worst <= 1e-9 && seconds < 5.0;
}

// --------------------------------------------------------------------------
// 2. Multiplicity integrality against the closed-form dimension oracle:
//    Sphere d = 3..10, RealProjective d = 3..6, k <= 50, exact after
//    rounding with pre-rounding deviation <= 1e-8.
// --------------------------------------------------------------------------
bool check_multiplicity_integrality(std::string& detail) {
    double worst = 0.0;
    long long rows = 0;
    for (int d = 3; d <= 10; ++d) {
        const auto m = make_manifold(Family::Sphere, d);
        for (int k = 0; k <= 50; ++k, ++rows) {
            const double v = multiplicity(m, k);
            worst = std::max(worst, std::abs(v - std::round(v)));
            if (std::llround(v) != harmonic_dimension(d, k)) {
                detail = "sphere d=" + std::to_string(d) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    for (int d = 3; d <= 6; ++d) {
        const auto m = make_manifold(Family::RealProjective, d);
        for (int k = 0; k <= 50; ++k, ++rows) {
            const double v = multiplicity(m, k);
            worst = std::max(worst, std::abs(v - std::round(v)));
            if (std::llround(v) != harmonic_dimension(d, 2LL * k)) {
                detail = "projective d=" + std::to_string(d) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    std::ostringstream os;
    os << rows << " rows, max pre-rounding deviation " << worst;
    detail = os.str();
    return worst <= 1e-8;
}

// --------------------------------------------------------------------------
// 3. Generating function on S^2 with b_k = 0.5^k at N = 60 against
//    (1-r^2)(1-2rt+r^2)^(-3/2), after re-deriving that identity with an
//    independent long-double Legendre recurrence.
// --------------------------------------------------------------------------
bool check_generating_function(std::string& detail) {
    const long double r = 0.5L;
    // Independent verification of the oracle identity at extended precision.
    for (int i = 0; i <= 20; ++i) {
        const long double t = -1.0L + 0.1L * i;
        long double pk_prev = 1.0L, pk = t;
        long double series = pk_prev;  // k = 0 term
        long double rk = r;
        series += 3.0L * rk * pk;
        for (int k = 2; k <= 200; ++k) {
            const long double next =
                ((2.0L * k - 1.0L) * t * pk - (k - 1.0L) * pk_prev) / k;
            pk_prev = pk;
            pk = next;
            rk *= r;
            series += (2.0L * k + 1.0L) * rk * pk;
        }
        const long double closed =
            (1.0L - r * r) / powl(1.0L - 2.0L * r * t + r * r, 1.5L);
        if (fabsl(series - closed) > 1e-15L) {
            detail = "oracle identity deviates at t = " + std::to_string(static_cast<double>(t));
            return false;
        }
    }
    CoefficientSequence c;
    c.tail = GeometricTail{1.0, 0.5};
    const auto scheme = make_zonal(s2, c);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = -1.0 + 0.1 * i;
        const double closed = (1.0 - 0.25) / std::pow(1.0 - t + 0.25, 1.5);
        worst = std::max(worst, std::abs(zonal_eval(scheme, t, 60).value - closed));
    }
    std::ostringstream os;
    os << "max deviation " << worst << " over 21 grid points";
    detail = os.str();
    return worst <= 1e-8;
}

// --------------------------------------------------------------------------
// 4. PSD witness-free direction: 50 seeded nonnegative zonal schemes on S^2,
//    30 random points each; every Gram min eigenvalue >= -1e-9 * max diag.
// --------------------------------------------------------------------------
bool check_random_psd(std::string& detail) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> window_len(0, 6);
    std::uniform_int_distribution<int> mask_kind(0, 3);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        CoefficientSequence c;
        const int len = window_len(rng);
        for (int i = 0; i < len; ++i) c.window.push_back(unit(rng));
        c.tail = GeometricTail{0.5 + unit(rng), 0.1 + 0.75 * unit(rng)};
        switch (mask_kind(rng)) {
            case 0: c.mask = SpectralSet::all(); break;
            case 1: c.mask = SpectralSet::make({}, {{0, 2}}); break;
            case 2: c.mask = SpectralSet::make({}, {{1, 2}}); break;
            default: c.mask = SpectralSet::make({}, {{0, 3}}); break;
        }
        const Scheme s = make_zonal(s2, c);
        const auto rep = random_psd_trial(s, 30, 5000 + static_cast<std::uint64_t>(trial),
                                          default_truncation(s));
        const double scale = std::max(rep.max_diagonal, 1e-300);
        worst_rel = std::max(worst_rel, -rep.min_eigenvalue / scale);
        if (rep.min_eigenvalue < -1e-9 * scale) {
            detail = "trial " + std::to_string(trial) + " min eigenvalue " +
                     std::to_string(rep.min_eigenvalue);
            return false;
        }
    }
    std::ostringstream os;
    os << "50 schemes x 30 points, worst -min/scale = " << worst_rel;
    detail = os.str();
    return true;
}

// --------------------------------------------------------------------------
// 5. Sphere parity necessity: even-only scheme on an antipodal pair lands in
//    the singular band (<= 1e-10 relative) and the (1,-1) vector annihilates
//    the quadratic form; odd-only uses (1,1).
// --------------------------------------------------------------------------
bool check_parity_witness(std::string& detail) {
    const auto pts = sample_points(s2, 2, Sampling::AntipodalPairs, 12);
    double worst = 0.0;
    for (int parity = 0; parity <= 1; ++parity) {
        CoefficientSequence c;
        c.tail = GeometricTail{1.0, 0.5};
        c.mask = SpectralSet::make({}, {{parity, 2}});
        const Scheme s = make_zonal(s2, c);
        const int n = default_truncation(s);
        const auto rep = verify_pd(assemble_gram(s, pts, n));
        if (rep.classification != SpectrumClass::SemidefiniteSingular) {
            detail = "parity " + std::to_string(parity) + " classified " +
                     spectrum_class_name(rep.classification);
            return false;
        }
        if (std::abs(rep.min_eigenvalue) > 1e-10 * rep.max_diagonal) {
            detail = "parity " + std::to_string(parity) + " min eigenvalue too large";
            return false;
        }
        const std::vector<std::complex<double>> coeff = {
            {1.0, 0.0}, {parity == 0 ? -1.0 : 1.0, 0.0}};
        const double q = quadratic_form(s, pts, coeff, n);
        const double scale = rep.max_diagonal * 2.0;
        worst = std::max(worst, std::abs(q) / scale);
        if (std::abs(q) > 1e-10 * scale) {
            detail = "parity " + std::to_string(parity) + " quadratic form " + std::to_string(q);
            return false;
        }
    }
    std::ostringstream os;
    os << "both parities singular, worst |form|/scale = " << worst;
    detail = os.str();
    return true;
}

// --------------------------------------------------------------------------
// 6. Circle support arithmetic end to end: the 3N scheme exits 2 through the
//    CLI with the 1+3Z witness and a verified roots-of-unity null vector; the
//    full-support scheme exits 0 and stays strictly PD over 20 Gram trials.
// --------------------------------------------------------------------------
bool check_circle_ap(std::string& detail) {
    const std::string spec3n = write_file("circle_3n.json", kCircle3NSpec);
    const std::string out3n = (work_dir() / "circle_3n_verdict.json").string();
    if (run_cli_binary("check --spec " + spec3n + " --out " + out3n) != 2) {
        detail = "3N spec did not exit 2";
        return false;
    }
    const Json j = Json::parse(slurp(out3n));
    const Json& w = j.at("verdict").at("witness");
    if (w.at("type") != "arithmetic_progression" || w.at("modulus") != 3 ||
        ((w.at("c").get<long long>() % 3) + 3) % 3 != 1) {
        detail = "witness is not the 1+3Z progression: " + w.dump();
        return false;
    }
    // Reconstruct the witness in-process and drive the quadratic form.
    const SpecFile spec = parse_spec_text(kCircle3NSpec);
    const int n = default_truncation(spec.scheme);
    const Verdict v = run_check(spec, n, spec.torus_bound);
    const auto null_vec = degeneracy_witness(spec.scheme, v, n, 6);
    if (!null_vec || null_vec->points.size() != 3) {
        detail = "roots-of-unity construction missing";
        return false;
    }
    const double q = quadratic_form(spec.scheme, null_vec->points, null_vec->coefficients, n);
    const double diag = zonal_eval(std::get<ZonalScheme>(spec.scheme), 1.0, n).value;
    const double scale = diag * 3.0;
    if (std::abs(q) > 1e-10 * scale) {
        detail = "witness form residual " + std::to_string(q);
        return false;
    }

    const std::string full = write_file("circle_full.json", kCircleFullSpec);
    if (run_cli_binary("check --spec " + full) != 0) {
        detail = "full-support spec did not exit 0";
        return false;
    }
    const SpecFile full_spec = parse_spec_text(kCircleFullSpec);
    const int nf = default_truncation(full_spec.scheme);
    for (int trial = 0; trial < 20; ++trial) {
        const int n_points = 12 + 2 * trial;  // 12..50
        const auto pts_t = jittered_circle(n_points, 900 + static_cast<std::uint64_t>(trial));
        const auto rep = verify_pd(assemble_gram(full_spec.scheme, pts_t, nf), 1e-8, 1e-10);
        if (rep.classification != SpectrumClass::StrictlyPD) {
            detail = "trial " + std::to_string(trial) + " (" + std::to_string(n_points) +
                     " points) classified " + spectrum_class_name(rep.classification);
            return false;
        }
    }
    detail = "exit 2 with 1+3Z witness, |form| <= 1e-10*scale; exit 0 with 20 strict trials";
    return true;
}

// --------------------------------------------------------------------------
// 7. Uniform diagonal dominance: the paired-coupling circle window hits
//    sigma = 0.8 within 1e-12, is Proven, and 20 Gram trials at 40 points
//    stay strictly PD.
// --------------------------------------------------------------------------
bool check_dominance(std::string& detail) {
    const int size = 81;
    const double s_exp = circle.dim() / 4.0;
    std::vector<double> w(static_cast<size_t>(size));
    for (int l = 0; l < size; ++l)
        w[static_cast<size_t>(l)] = std::pow(1.0 + eigenvalue(circle, flat_level(circle, l)), s_exp);
    Eigen::MatrixXcd a(size, size);
    a.setZero();
    for (int l = 0; l < size; ++l)
        a(l, l) = 1.0 / (w[static_cast<size_t>(l)] * w[static_cast<size_t>(l)]);
    for (int l = 0; l + 1 < size; l += 2) {
        const double v = 0.8 / (w[static_cast<size_t>(l)] * w[static_cast<size_t>(l + 1)]);
        a(l, l + 1) = v;
        a(l + 1, l) = v;
    }
    const auto g = make_general(circle, a);
    const auto rep = uniform_diagonal_dominance(g);
    if (std::abs(rep.sigma_achieved - 0.8) > 1e-12 || rep.verdict.status != Status::Proven) {
        std::ostringstream os;
        os << "sigma " << rep.sigma_achieved << ", status " << status_name(rep.verdict.status);
        detail = os.str();
        return false;
    }
    const Scheme s{g};
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts_t = jittered_circle(40, 7100 + static_cast<std::uint64_t>(trial));
        const auto r = verify_pd(assemble_gram(s, pts_t, size), 1e-8, 1e-10);
        if (r.classification != SpectrumClass::StrictlyPD) {
            detail = "trial " + std::to_string(trial) + " classified " +
                     spectrum_class_name(r.classification);
            return false;
        }
    }
    std::ostringstream os;
    os << "sigma = " << rep.sigma_achieved << ", 20 strict trials at 40 points";
    detail = os.str();
    return true;
}

// --------------------------------------------------------------------------
// 8. Covering-system decision with exhaustive residue cross-check mod 12.
// --------------------------------------------------------------------------
bool check_covering_system(std::string& detail) {
    const auto full = SpectralSet::make({}, {{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}});
    const auto part = SpectralSet::make({}, {{0, 2}, {0, 3}, {1, 4}, {5, 6}});
    const auto brute_covered = [](const SpectralSet& s, long long c) {
        for (long long k = c; k <= c + 240; k += 12)
            if (s.contains(k)) return true;
        return false;
    };
    if (intersects_every_full_ap(full).status != Status::Proven) {
        detail = "five-class system not Proven";
        return false;
    }
    for (long long c = 0; c < 12; ++c) {
        if (!brute_covered(full, c)) {
            detail = "residue " + std::to_string(c) + " escapes the full system";
            return false;
        }
    }
    const auto v = intersects_every_full_ap(part);
    const auto* w = std::get_if<ApWitness>(&v.evidence);
    if (v.status != Status::Disproven || w == nullptr) {
        detail = "four-class system not Disproven with an AP witness";
        return false;
    }
    if (!ap_witness_misses(part, *w, false)) {
        detail = "reported witness fails re-verification";
        return false;
    }
    long long uncovered = -1;
    for (long long c = 0; c < 12; ++c)
        if (!brute_covered(part, c)) uncovered = c;
    if (uncovered != ((w->c % w->modulus) + w->modulus) % w->modulus || w->modulus != 12) {
        detail = "witness disagrees with exhaustive enumeration";
        return false;
    }
    detail = "Proven with cover; Disproven with witness " + std::to_string(w->c) + "+" +
             std::to_string(w->modulus) + "Z matching enumeration";
    return true;
}

// --------------------------------------------------------------------------
// 9. Product corollary on the torus: N x N is Proven structurally; even-sum
//    support is Disproven by the (1,0) + (1,1)Z + (0,2)Z coset, and the
//    tensor roots-of-unity vector annihilates the product kernel.
// --------------------------------------------------------------------------
bool check_torus_corollary(std::string& detail) {
    const ProductManifold pm{circle, circle};
    const auto full = ProductSpectralSet::make({}, {Box{{0, 1}, {0, 1}}});
    const auto vf = spd_product_corollary(pm, full, full);
    if (vf.status != Status::Proven || vf.criterion != "full_quadrant") {
        detail = "N x N support not structurally Proven";
        return false;
    }
    Eigen::MatrixXd win(0, 0);
    const auto mask = ProductSpectralSet::make({}, {Box{{0, 2}, {0, 2}}, Box{{1, 2}, {1, 2}}});
    const auto ps = make_product_zonal(pm, win, ProductGeometricTail{1.0, 0.5, 0.5}, mask);
    const auto support_set = product_support(ps);
    const auto v = spd_product_corollary(pm, support_set, support_set);
    const auto* w = std::get_if<SubgroupWitness>(&v.evidence);
    if (v.status != Status::Disproven || w == nullptr) {
        detail = "even-sum support not Disproven with a subgroup witness";
        return false;
    }
    // Same coset as (1,0) + (1,1)Z + (0,2)Z: generators match up to parity
    // and the translations differ by a subgroup element.
    const bool same_lattice = (w->a == 1 && w->d == 2 && (((w->b % 2) + 2) % 2) == 1);
    const long long mdiff = w->t1 - 1;
    const bool same_coset = ((w->t2 - mdiff * w->b) % 2 + 2) % 2 == 0;
    if (!same_lattice || !same_coset || !subgroup_witness_misses(support_set, *w)) {
        detail = "witness is not the expected coset";
        return false;
    }
    const Scheme s{ps};
    const auto [n1, n2] = default_truncation(ps);
    const int n = std::max(n1, n2);
    const auto null_vec = degeneracy_witness(s, v, n, 4);
    if (!null_vec) {
        detail = "tensor witness construction missing";
        return false;
    }
    const double q = quadratic_form(s, null_vec->points, null_vec->coefficients, n);
    const double diag = product_zonal_eval(ps, 1.0, 1.0, n1, n2).value;
    double csum = 0.0;
    for (const auto& z : null_vec->coefficients) csum += std::norm(z);
    const double scale = diag * csum;
    if (std::abs(q) > 1e-9 * scale) {
        detail = "tensor witness form residual " + std::to_string(q);
        return false;
    }
    std::ostringstream os;
    os << "structural Proven; coset witness verified; |form|/scale = " << std::abs(q) / scale;
    detail = os.str();
    return true;
}

// --------------------------------------------------------------------------
// 10. Interpolation at lambda = 0 on S^2 with a strictly PD kernel: residual
//     at the 20 seeded sites <= 1e-8 * sup|f|, and interpolating a kernel
//     column recovers the indicator coefficient vector.
// --------------------------------------------------------------------------
bool check_interpolation(std::string& detail) {
    CoefficientSequence c;
    c.tail = PowerTail{1.0, 2.2};
    const Scheme s = make_zonal(s2, c);
    const int n = default_truncation(s);
    const auto pts = sample_points(s2, 20, Sampling::UniformRandom, 77);
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::VectorXcd f(20);
    for (int i = 0; i < 20; ++i) f(i) = std::complex<double>(unit(rng), unit(rng));
    const auto it = fit(s, pts, f, 0.0, n);
    double resid = 0.0, sup = 0.0;
    for (int i = 0; i < 20; ++i) {
        resid = std::max(resid, std::abs(evaluate(it, pts[static_cast<size_t>(i)]) - f(i)));
        sup = std::max(sup, std::abs(f(i)));
    }
    if (resid > 1e-8 * sup) {
        detail = "site residual " + std::to_string(resid) + " vs sup " + std::to_string(sup);
        return false;
    }
    // Kernel column: data K(x_i, x_0) must come back as the indicator at 0.
    Eigen::VectorXcd column(20);
    for (int i = 0; i < 20; ++i)
        column(i) = kernel_eval(s, pts[static_cast<size_t>(i)], pts[0], n).value;
    const auto ind = fit(s, pts, column, 0.0, n);
    double coeff_err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double want = (i == 0) ? 1.0 : 0.0;
        coeff_err = std::max(coeff_err, std::abs(ind.coefficients(i) - want));
    }
    if (coeff_err > 1e-8) {
        detail = "indicator coefficients off by " + std::to_string(coeff_err);
        return false;
    }
    std::ostringstream os;
    os << "site residual " << resid << ", indicator deviation " << coeff_err
       << " (truncation " << n << ")";
    detail = os.str();
    return true;
}

// --------------------------------------------------------------------------
// 11. Circle coefficient recovery: every entry of a 21 x 21 window comes
//     back through trapezoid quadrature to 1e-10.
// --------------------------------------------------------------------------
bool check_coefficient_recovery(std::string& detail) {
    const long long count = 21;  // frequencies -10..10
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::MatrixXcd w(count, count);
    for (long long i = 0; i < count; ++i) {
        w(i, i) = std::complex<double>(2.0 + unit(rng), 0.0);
        for (long long j = i + 1; j < count; ++j) {
            w(i, j) = std::complex<double>(unit(rng), unit(rng)) * 0.25;
            w(j, i) = std::conj(w(i, j));
        }
    }
    const Scheme s = make_general(circle, w);
    const int q_nodes = 2 * 10 + 1;
    double worst = 0.0;
    for (long long l = 0; l < count; ++l) {
        for (long long lp = 0; lp < count; ++lp) {
            const auto got = recover_coefficient(s, l, lp, q_nodes, 11);
            worst = std::max(worst, std::abs(got - w(l, lp)));
        }
    }
    std::ostringstream os;
    os << "max entry deviation " << worst << " with " << q_nodes << " nodes";
    detail = os.str();
    return worst <= 1e-10;
}

// --------------------------------------------------------------------------
// 12. Determinism: the oracle command twice with one seed gives
//     byte-identical JSON and exit 0.
// --------------------------------------------------------------------------
bool check_oracle_determinism(std::string& detail) {
    const std::string out1 = (work_dir() / "oracle_run1.json").string();
    const std::string out2 = (work_dir() / "oracle_run2.json").string();
    const std::string args = "oracle --fixtures " + fixtures_dir() + " --seed 5 --out ";
    if (run_cli_binary(args + out1) != 0 || run_cli_binary(args + out2) != 0) {
        detail = "oracle suite did not exit 0";
        return false;
    }
    const std::string a = slurp(out1), b = slurp(out2);
    if (a.empty() || a != b) {
        detail = "outputs differ or are empty";
        return false;
    }
    detail = std::to_string(a.size()) + " identical bytes across runs";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "addition theorem on S^2", check_addition_theorem},
        {2, "multiplicity integrality", check_multiplicity_integrality},
        {3, "geometric generating function", check_generating_function},
        {4, "nonnegative schemes stay PSD", check_random_psd},
        {5, "sphere parity witness", check_parity_witness},
        {6, "circle progression support", check_circle_ap},
        {7, "uniform diagonal dominance", check_dominance},
        {8, "covering-system decision", check_covering_system},
        {9, "torus product corollary", check_torus_corollary},
        {10, "scattered-data interpolation", check_interpolation},
        {11, "circle coefficient recovery", check_coefficient_recovery},
        {12, "oracle determinism", check_oracle_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  %2d  %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str());
    }
    if (failures) std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
