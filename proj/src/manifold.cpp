#include "spdkern/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace spdkern {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinSeparation = 1e-9;

// Exact rational on __int128, just enough for the multiplicity recurrence.
struct Rat {
    __int128 num = 1;
    __int128 den = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void reduce() {
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    void mul(long long n, long long d) {
        num *= n;
        den *= d;
        reduce();
        const __int128 limit = static_cast<__int128>(1) << 120;
        if (num > limit || num < -limit || den > limit)
            throw error("multiplicity: rational overflow");
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// 2*alpha and 2*beta, guaranteed integral for all supported families.
void doubled_params(const ManifoldDescriptor& m, long long& ta, long long& tb) {
    ta = m.d - 3;
    const double b2 = 2.0 * m.jacobi.beta;
    tb = std::llround(b2);
    if (std::abs(b2 - static_cast<double>(tb)) > 1e-12)
        throw error("multiplicity: beta is not half-integral");
}

Rat exact_multiplicity(const ManifoldDescriptor& m, int k) {
    Rat r;
    if (k == 0) return r;
    long long ta, tb;
    doubled_params(m, ta, tb);
    // m_1 = (alpha+beta+3)(alpha+1)/(beta+1); the generic ratio below breaks
    // at k=1 when alpha+beta = -1 (circle parameters), so start here.
    r.mul(ta + tb + 6, tb + 2);
    r.mul(ta + 2, 2);
    for (long long j = 2; j <= k; ++j) {
        // m_j / m_{j-1} = (2j+a+b+1)(j+a+b)(j+a) / ((2j+a+b-1)(j+b) j),
        // written with doubled integers.
        r.mul(4 * j + ta + tb + 2, 4 * j + ta + tb - 2);
        r.mul(2 * j + ta + tb, 2 * j + tb);
        r.mul(2 * j + ta, 2 * j);
    }
    return r;
}

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{seed, stream, static_cast<std::uint64_t>(0x9e3779b97f4a7c15ULL)};
    return std::mt19937_64(seq);
}

Point random_point(const ManifoldDescriptor& m, std::mt19937_64& rng) {
    if (m.family == Family::Circle) {
        std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
        return Point{{u(rng)}};
    }
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> v(static_cast<size_t>(m.d));
    double nrm = 0.0;
    do {
        nrm = 0.0;
        for (auto& c : v) {
            c = g(rng);
            nrm += c * c;
        }
        nrm = std::sqrt(nrm);
    } while (nrm < 1e-8);
    for (auto& c : v) c /= nrm;
    if (m.family == Family::RealProjective) {
        // Canonical representative: first nonzero coordinate positive.
        for (auto& c : v) {
            if (std::abs(c) > 1e-12) {
                if (c < 0)
                    for (auto& w : v) w = -w;
                break;
            }
        }
    }
    return Point{std::move(v)};
}

Point antipode(const ManifoldDescriptor& m, const Point& p) {
    if (m.family == Family::Circle) return Point{{p.x[0] + kPi}};
    Point q = p;
    for (auto& c : q.x) c = -c;
    return q;
}

bool separated(const ManifoldDescriptor& m, const std::vector<Point>& pts, const Point& p) {
    for (const auto& q : pts)
        if (geodesic_distance(m, p, q) <= kMinSeparation) return false;
    return true;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Circle: return "circle";
        case Family::Sphere: return "sphere";
        case Family::RealProjective: return "real_projective";
        case Family::ComplexProjective: return "complex_projective";
        case Family::Quaternionic: return "quaternionic";
        case Family::Cayley16: return "cayley16";
    }
    return "?";
}

bool operator==(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
    return a.family == b.family && a.d == b.d;
}

ManifoldDescriptor make_manifold(Family family, int d) {
    auto reject = [&](const char* why) {
        throw error(std::string("make_manifold: ") + family_name(family) + " with d=" +
                    std::to_string(d) + " inadmissible (" + why + ")");
    };
    switch (family) {
        case Family::Circle:
            if (d != 2) reject("circle requires d=2");
            break;
        case Family::Sphere:
            if (d < 3) reject("sphere requires d>=3; d=2 is the circle family");
            break;
        case Family::RealProjective:
            if (d < 3) reject("requires d>=3");
            break;
        case Family::ComplexProjective:
            if (d < 5 || (d - 1) % 2 != 0) reject("requires odd d>=5");
            break;
        case Family::Quaternionic:
            if (d < 9 || (d - 1) % 4 != 0) reject("requires d=1 mod 4, d>=9");
            break;
        case Family::Cayley16:
            if (d != 17) reject("requires d=17");
            break;
    }
    const double alpha = (d - 3) / 2.0;
    double beta = 0.0;
    switch (family) {
        case Family::Circle: beta = -0.5; break;
        case Family::Sphere: beta = alpha; break;
        case Family::RealProjective: beta = -0.5; break;
        case Family::ComplexProjective: beta = 0.0; break;
        case Family::Quaternionic: beta = 1.0; break;
        case Family::Cayley16: beta = 3.0; break;
    }
    const int eps = family == Family::RealProjective ? 2 : 1;
    const bool geom = family == Family::Circle || family == Family::Sphere ||
                      family == Family::RealProjective;
    return ManifoldDescriptor{family, d, make_jacobi(alpha, beta), eps, geom};
}

double eigenvalue(const ManifoldDescriptor& m, int k) {
    if (k < 0) throw error("eigenvalue: negative level");
    const double kk = k;
    switch (m.family) {
        case Family::Circle: return kk * kk;
        case Family::Sphere: return kk * (kk + m.d - 2);
        case Family::RealProjective: return 2.0 * kk * (2.0 * kk + m.d - 2);
        default:
            throw error(std::string("eigenvalue: spectrum not implemented for ") +
                        family_name(m.family));
    }
}

double multiplicity(const ManifoldDescriptor& m, int k) {
    if (k < 0) throw error("multiplicity: negative level");
    if (k > 100000) throw error("multiplicity: level too large");
    Rat r = exact_multiplicity(m, k);
    if (r.den != 1)
        throw error("multiplicity: non-integral eigenspace dimension at level " +
                    std::to_string(k));
    return r.to_double();
}

double multiplicity_ratio(const ManifoldDescriptor& m, int k) {
    if (k < 1) throw error("multiplicity_ratio: need k >= 1");
    if (k == 1) return multiplicity(m, 1);
    long long ta, tb;
    doubled_params(m, ta, tb);
    const double j = k;
    return (4 * j + ta + tb + 2) * (2 * j + ta + tb) * (2 * j + ta) /
           ((4 * j + ta + tb - 2) * (2 * j + tb) * (2 * j));
}

double geodesic_distance(const ManifoldDescriptor& m, const Point& p, const Point& q) {
    if (!m.geometry_enabled)
        throw error(std::string("geodesic_distance: geometry not enabled for ") +
                    family_name(m.family));
    if (m.family == Family::Circle) {
        if (p.x.size() != 1 || q.x.size() != 1) throw error("geodesic_distance: bad circle point");
        double dt = std::fmod(std::abs(p.x[0] - q.x[0]), 2.0 * kPi);
        return std::min(dt, 2.0 * kPi - dt);
    }
    if (static_cast<int>(p.x.size()) != m.d || static_cast<int>(q.x.size()) != m.d)
        throw error("geodesic_distance: point dimension mismatch");
    double dot = 0.0;
    for (int i = 0; i < m.d; ++i) dot += p.x[i] * q.x[i];
    dot = std::clamp(dot, -1.0, 1.0);
    if (m.family == Family::RealProjective) return 2.0 * std::acos(std::abs(dot));
    return std::acos(dot);
}

double cosine_argument(const ManifoldDescriptor& m, const Point& p, const Point& q) {
    if (m.family == Family::Circle) return std::cos(geodesic_distance(m, p, q));
    if (static_cast<int>(p.x.size()) != m.d || static_cast<int>(q.x.size()) != m.d)
        throw error("cosine_argument: point dimension mismatch");
    double dot = 0.0;
    for (int i = 0; i < m.d; ++i) dot += p.x[i] * q.x[i];
    dot = std::clamp(dot, -1.0, 1.0);
    return m.family == Family::RealProjective ? std::abs(dot) : dot;
}

std::vector<Point> sample_points(const ManifoldDescriptor& m, int n, Sampling strategy,
                                 std::uint64_t seed) {
    if (n <= 0) throw error("sample_points: need n > 0");
    if (!m.geometry_enabled)
        throw error(std::string("sample_points: geometry not enabled for ") +
                    family_name(m.family));
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    auto rng = engine_for(seed, 1);
    switch (strategy) {
        case Sampling::UniformRandom: {
            for (int i = 0; i < n; ++i) {
                Point p = random_point(m, rng);
                int tries = 0;
                while (!separated(m, pts, p)) {
                    if (++tries > 1000) throw error("sample_points: separation failure");
                    p = random_point(m, rng);
                }
                pts.push_back(std::move(p));
            }
            break;
        }
        case Sampling::Equispaced: {
            if (m.family != Family::Circle)
                throw error("sample_points: Equispaced is circle-only");
            for (int i = 0; i < n; ++i) pts.push_back(Point{{2.0 * kPi * i / n}});
            break;
        }
        case Sampling::Fibonacci: {
            if (m.family != Family::Sphere || m.d != 3)
                throw error("sample_points: Fibonacci requires the 2-sphere");
            const double golden = kPi * (3.0 - std::sqrt(5.0));
            for (int i = 0; i < n; ++i) {
                const double z = 1.0 - (2.0 * i + 1.0) / n;
                const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                const double phi = golden * i;
                pts.push_back(Point{{r * std::cos(phi), r * std::sin(phi), z}});
            }
            break;
        }
        case Sampling::AntipodalPairs: {
            if (n % 2 != 0) throw error("sample_points: AntipodalPairs needs even n");
            if (m.family == Family::RealProjective)
                throw error("sample_points: antipodal pairs coincide on projective space");
            for (int i = 0; i < n / 2; ++i) {
                Point p = random_point(m, rng);
                int tries = 0;
                while (!separated(m, pts, p) || !separated(m, pts, antipode(m, p)) ||
                       geodesic_distance(m, p, antipode(m, p)) <= kMinSeparation) {
                    if (++tries > 1000) throw error("sample_points: separation failure");
                    p = random_point(m, rng);
                }
                pts.push_back(p);
                pts.push_back(antipode(m, p));
            }
            break;
        }
    }
    return pts;
}

std::vector<Point> sample_points(const ProductManifold& m, int n, Sampling strategy,
                                 std::uint64_t seed) {
    if (strategy != Sampling::UniformRandom)
        throw error("sample_points: products support UniformRandom only");
    auto a = sample_points(m.first, n, strategy, seed);
    auto b = sample_points(m.second, n, strategy, seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(product_point(a[i], b[i]));
    return pts;
}

Point product_point(const Point& a, const Point& b) {
    Point p = a;
    p.x.insert(p.x.end(), b.x.begin(), b.x.end());
    return p;
}

Point first_factor(const ProductManifold& m, const Point& p) {
    const size_t na = m.first.family == Family::Circle ? 1 : static_cast<size_t>(m.first.d);
    if (p.x.size() < na) throw error("first_factor: point too short");
    return Point{std::vector<double>(p.x.begin(), p.x.begin() + static_cast<long>(na))};
}

Point second_factor(const ProductManifold& m, const Point& p) {
    const size_t na = m.first.family == Family::Circle ? 1 : static_cast<size_t>(m.first.d);
    const size_t nb = m.second.family == Family::Circle ? 1 : static_cast<size_t>(m.second.d);
    if (p.x.size() != na + nb) throw error("second_factor: point dimension mismatch");
    return Point{std::vector<double>(p.x.begin() + static_cast<long>(na), p.x.end())};
}

}  // namespace spdkern
