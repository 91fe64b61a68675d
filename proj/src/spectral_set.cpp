#include "spdkern/spectral_set.hpp"

#include <algorithm>
#include <numeric>

namespace spdkern {

namespace {

constexpr long long kLcmGuard = 10'000'000;

long long mod_norm(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

bool prog_contains(const Progression& p, long long k) {
    return k >= p.start && (k - p.start) % p.step == 0;
}

// A1 subset of A2 as subsets of N.
bool prog_subset(const Progression& a1, const Progression& a2) {
    return a1.step % a2.step == 0 && a1.start >= a2.start &&
           (a1.start - a2.start) % a2.step == 0;
}

// Smallest nonnegative x with A x = B (mod M), if any.
std::optional<long long> solve_congruence(long long A, long long B, long long M) {
    A = mod_norm(A, M);
    B = mod_norm(B, M);
    if (M == 1) return 0;
    const long long g = std::gcd(A == 0 ? M : A, M);
    if (B % g != 0) return std::nullopt;
    if (A == 0) return 0;  // B = 0 mod M at this point
    // Extended Euclid for the inverse of A/g modulo M/g.
    long long a = A / g, m = M / g, b = B / g;
    long long x0 = 0, x1 = 1, r0 = m, r1 = a % m;
    while (r1 != 0) {
        const long long q = r0 / r1;
        long long t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    const long long inv = mod_norm(x0, m);
    return static_cast<long long>((static_cast<__int128>(inv) * mod_norm(b, m)) % m);
}

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::Proven: return "proven";
        case Status::Disproven: return "disproven";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

Verdict Verdict::proven(std::string criterion, Evidence e) {
    return Verdict{Status::Proven, std::move(criterion), std::move(e), {}};
}
Verdict Verdict::disproven(std::string criterion, Evidence e) {
    return Verdict{Status::Disproven, std::move(criterion), std::move(e), {}};
}
Verdict Verdict::unknown(std::string criterion, Evidence e) {
    return Verdict{Status::Unknown, std::move(criterion), std::move(e), {}};
}

// ---------------------------------------------------------------------------
// SpectralSet
// ---------------------------------------------------------------------------

SpectralSet SpectralSet::make(std::vector<long long> finite, std::vector<Progression> progs) {
    for (const auto& p : progs)
        if (p.start < 0 || p.step < 1)
            throw error("SpectralSet: progression needs start >= 0 and step >= 1");
    for (long long f : finite)
        if (f < 0) throw error("SpectralSet: negative element");
    // Coarser progressions (smaller step) come first, so a single pass keeps
    // exactly the containment-maximal ones.
    std::sort(progs.begin(), progs.end(), [](const Progression& a, const Progression& b) {
        return a.step != b.step ? a.step < b.step : a.start < b.start;
    });
    SpectralSet s;
    for (const auto& p : progs) {
        bool covered = false;
        for (const auto& q : s.progs_)
            if (prog_subset(p, q)) {
                covered = true;
                break;
            }
        if (!covered) s.progs_.push_back(p);
    }
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (long long f : finite) {
        bool covered = false;
        for (const auto& q : s.progs_)
            if (prog_contains(q, f)) {
                covered = true;
                break;
            }
        if (!covered) s.finite_.push_back(f);
    }
    return s;
}

SpectralSet SpectralSet::finite_set(std::vector<long long> finite) {
    return make(std::move(finite), {});
}

SpectralSet SpectralSet::all() { return make({}, {Progression{0, 1}}); }

bool SpectralSet::contains(long long k) const {
    if (k < 0) return false;
    if (std::binary_search(finite_.begin(), finite_.end(), k)) return true;
    for (const auto& p : progs_)
        if (prog_contains(p, k)) return true;
    return false;
}

bool SpectralSet::empty() const { return finite_.empty() && progs_.empty(); }

long long SpectralSet::max_finite() const { return finite_.empty() ? -1 : finite_.back(); }

std::vector<long long> SpectralSet::enumerate_up_to(long long limit) const {
    std::vector<long long> out;
    for (long long k = 0; k <= limit; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

SpectralSet set_union(const SpectralSet& a, const SpectralSet& b) {
    std::vector<long long> finite = a.finite();
    finite.insert(finite.end(), b.finite().begin(), b.finite().end());
    std::vector<Progression> progs = a.progressions();
    progs.insert(progs.end(), b.progressions().begin(), b.progressions().end());
    return SpectralSet::make(std::move(finite), std::move(progs));
}

ParityCensus parity_census(const SpectralSet& s) {
    ParityCensus c;
    for (const auto& p : s.progressions()) {
        if (p.step % 2 != 0) {
            c.even_infinite = true;
            c.odd_infinite = true;
        } else if (p.start % 2 == 0) {
            c.even_infinite = true;
        } else {
            c.odd_infinite = true;
        }
    }
    return c;
}

SpectralSet restrict_min(const SpectralSet& s, long long gamma) {
    std::vector<long long> finite;
    for (long long f : s.finite())
        if (f >= gamma) finite.push_back(f);
    std::vector<Progression> progs;
    for (auto p : s.progressions()) {
        if (p.start < gamma) {
            const long long lift = (gamma - p.start + p.step - 1) / p.step;
            p.start += lift * p.step;
        }
        progs.push_back(p);
    }
    return SpectralSet::make(std::move(finite), std::move(progs));
}

SpectralSet parity_filter(const SpectralSet& s, int parity) {
    if (parity != 0 && parity != 1) throw error("parity_filter: parity must be 0 or 1");
    std::vector<long long> finite;
    for (long long f : s.finite())
        if (f % 2 == parity) finite.push_back(f);
    std::vector<Progression> progs;
    for (const auto& p : s.progressions()) {
        if (p.step % 2 != 0) {
            // Odd step hits both parities; the matching sub-progression has
            // step 2*step and starts at the first element of the right parity.
            const long long n0 = mod_norm(parity - p.start, 2);
            progs.push_back(Progression{p.start + n0 * p.step, 2 * p.step});
        } else if (p.start % 2 == parity) {
            progs.push_back(p);
        }
    }
    return SpectralSet::make(std::move(finite), std::move(progs));
}

namespace {

// Witness refinement: the smallest uncovered residue c0 mod L avoids every
// progression, but may collide with finite elements. Scale the modulus to
// L*P and shift within the c0 class until the AP misses the finite part too
// (P = |collisions|+1 always suffices, so this terminates).
ApWitness refine_witness(const std::vector<long long>& finite, bool symmetric, long long c0,
                         long long L) {
    for (long long P = 1;; ++P) {
        const long long M = L * P;
        for (long long j = 0; j < P; ++j) {
            const long long c = c0 + L * j;
            bool clean = true;
            for (long long f : finite) {
                if (mod_norm(f - c, M) == 0 || (symmetric && mod_norm(-f - c, M) == 0)) {
                    clean = false;
                    break;
                }
            }
            if (clean) return ApWitness{c, M};
        }
    }
}

Verdict covering_check(const SpectralSet& s, bool symmetric, const char* criterion) {
    if (!s.has_progressions())
        return Verdict::disproven(criterion, refine_witness(s.finite(), symmetric, 0, 1));
    long long L = 1;
    for (const auto& p : s.progressions()) {
        L = std::lcm(L, p.step);
        if (L > kLcmGuard) throw error("covering check: lcm of steps too large");
    }
    std::vector<char> hit(static_cast<size_t>(L), 0);
    for (const auto& p : s.progressions()) {
        for (long long r = mod_norm(p.start, p.step); r < L; r += p.step) hit[r] = 1;
        if (symmetric)
            for (long long r = mod_norm(-p.start, p.step); r < L; r += p.step) hit[r] = 1;
    }
    for (long long c0 = 0; c0 < L; ++c0)
        if (!hit[c0])
            return Verdict::disproven(criterion, refine_witness(s.finite(), symmetric, c0, L));
    return Verdict::proven(criterion);
}

}  // namespace

Verdict intersects_every_full_ap(const SpectralSet& s) {
    return covering_check(s, false, "covering_system");
}

Verdict z_set_intersects_every_full_ap(const SpectralSet& s) {
    return covering_check(s, true, "symmetric_covering");
}

bool ap_witness_misses(const SpectralSet& s, const ApWitness& w, bool symmetric) {
    if (w.modulus < 1) throw error("ap_witness_misses: bad modulus");
    for (const auto& p : s.progressions()) {
        const long long g = std::gcd(p.step, w.modulus);
        if (mod_norm(w.c - p.start, g) == 0) return false;
        if (symmetric && mod_norm(w.c + p.start, g) == 0) return false;
    }
    for (long long f : s.finite()) {
        if (mod_norm(f - w.c, w.modulus) == 0) return false;
        if (symmetric && mod_norm(-f - w.c, w.modulus) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ProductSpectralSet
// ---------------------------------------------------------------------------

ProductSpectralSet ProductSpectralSet::make(std::vector<std::pair<long long, long long>> finite,
                                            std::vector<Box> boxes) {
    for (const auto& b : boxes)
        if (b.first.start < 0 || b.first.step < 1 || b.second.start < 0 || b.second.step < 1)
            throw error("ProductSpectralSet: bad box");
    for (const auto& f : finite)
        if (f.first < 0 || f.second < 0) throw error("ProductSpectralSet: negative pair");
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        return std::tie(a.first.step, a.second.step, a.first.start, a.second.start) <
               std::tie(b.first.step, b.second.step, b.first.start, b.second.start);
    });
    ProductSpectralSet s;
    for (const auto& b : boxes) {
        bool covered = false;
        for (const auto& kept : s.boxes_)
            if (prog_subset(b.first, kept.first) && prog_subset(b.second, kept.second)) {
                covered = true;
                break;
            }
        if (!covered) s.boxes_.push_back(b);
    }
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (const auto& f : finite)
        if (!std::any_of(s.boxes_.begin(), s.boxes_.end(), [&](const Box& b) {
                return prog_contains(b.first, f.first) && prog_contains(b.second, f.second);
            }))
            s.finite_.push_back(f);
    return s;
}

bool ProductSpectralSet::contains(long long k, long long kp) const {
    if (k < 0 || kp < 0) return false;
    if (std::binary_search(finite_.begin(), finite_.end(), std::make_pair(k, kp))) return true;
    for (const auto& b : boxes_)
        if (prog_contains(b.first, k) && prog_contains(b.second, kp)) return true;
    return false;
}

bool ProductSpectralSet::empty() const { return finite_.empty() && boxes_.empty(); }

ProductSpectralSet transpose(const ProductSpectralSet& j) {
    std::vector<std::pair<long long, long long>> finite;
    finite.reserve(j.finite().size());
    for (const auto& f : j.finite()) finite.emplace_back(f.second, f.first);
    std::vector<Box> boxes;
    boxes.reserve(j.boxes().size());
    for (const auto& b : j.boxes()) boxes.push_back(Box{b.second, b.first});
    return ProductSpectralSet::make(std::move(finite), std::move(boxes));
}

SpectralSet slice(const ProductSpectralSet& j, long long k) {
    std::vector<long long> finite;
    for (const auto& f : j.finite())
        if (f.first == k) finite.push_back(f.second);
    std::vector<Progression> progs;
    for (const auto& b : j.boxes())
        if (prog_contains(b.first, k)) progs.push_back(b.second);
    return SpectralSet::make(std::move(finite), std::move(progs));
}

SymmetrizedIndexSet symmetrized_index_set(const ProductSpectralSet& j, long long gamma,
                                          int parity) {
    if (parity < -1 || parity > 1) throw error("symmetrized_index_set: parity in {-1,0,1}");
    SymmetrizedIndexSet out;
    std::vector<long long> finite;
    long long gamma_star = 0;
    for (const auto& f : j.finite()) {
        if (parity >= 0 && f.second % 2 != parity) continue;
        gamma_star = std::max(gamma_star, f.second + 1);
        if (f.second >= gamma) finite.push_back(f.first);
    }
    std::vector<Progression> progs;
    for (const auto& b : j.boxes()) {
        const bool parity_ok =
            parity < 0 || b.second.step % 2 != 0 || b.second.start % 2 == parity;
        // A progression either misses the parity class entirely or meets it in
        // an unbounded subset, so the gamma cut never empties it.
        if (parity_ok) progs.push_back(b.first);
    }
    out.base = SpectralSet::make(std::move(finite), std::move(progs));
    out.gamma_star = gamma_star;
    return out;
}

// ---------------------------------------------------------------------------
// Torus coset condition
// ---------------------------------------------------------------------------

namespace {

// Does the symmetric image of box A x B meet the coset (t1,t2) + (a,b)Z+(0,d)Z?
// First coordinate: s1*(a1+b1*x) = t1 + a*m for some x >= 0; solutions form an
// AP in x, and along it m runs through m0 + s1*(b1/g1)*tau. Second coordinate
// then needs s2*(a2+b2*y) = t2 + b*m (mod d) for one of those m, which is a
// linear congruence in tau. Everything reduces to gcd divisibility.
bool box_meets_coset(const Box& box, long long a, long long b, long long d, long long t1,
                     long long t2) {
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            const long long a1 = box.first.start, b1 = box.first.step;
            const long long a2 = box.second.start, b2 = box.second.step;
            const auto x0 = solve_congruence(s1 * b1, t1 - s1 * a1, a);
            if (!x0) continue;
            const long long m0 = (s1 * (a1 + b1 * *x0) - t1) / a;
            const long long M = b1 / std::gcd(b1, a);
            const long long g2 = std::gcd(b2, d);
            const long long C = mod_norm(t2 + b * m0 - s2 * a2, g2);
            const long long G = std::gcd(mod_norm(b * M, g2), g2);
            if (C % G == 0) return true;
        }
    }
    return false;
}

bool pair_meets_coset(long long p, long long q, long long a, long long b, long long d,
                      long long t1, long long t2) {
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            if (mod_norm(s1 * p - t1, a) != 0) continue;
            const long long m = (s1 * p - t1) / a;
            if (mod_norm(s2 * q - t2 - b * m, d) == 0) return true;
        }
    }
    return false;
}

bool coset_meets(const ProductSpectralSet& j, long long a, long long b, long long d,
                 long long t1, long long t2) {
    for (const auto& f : j.finite())
        if (pair_meets_coset(f.first, f.second, a, b, d, t1, t2)) return true;
    for (const auto& box : j.boxes())
        if (box_meets_coset(box, a, b, d, t1, t2)) return true;
    return false;
}

}  // namespace

Verdict torus_condition(const ProductSpectralSet& j, int bound) {
    if (bound < 1) throw error("torus_condition: bound must be >= 1");
    for (const auto& b : j.boxes())
        if (b.first.step == 1 && b.second.step == 1)
            return Verdict::proven("full_quadrant");
    for (long long a = 1; a <= bound; ++a)
        for (long long d = 1; d <= bound; ++d)
            for (long long b = 0; b < d; ++b)
                for (long long t1 = 0; t1 < a; ++t1)
                    for (long long t2 = 0; t2 < d; ++t2)
                        if (!coset_meets(j, a, b, d, t1, t2))
                            return Verdict::disproven("torus_cosets",
                                                      SubgroupWitness{a, b, d, t1, t2});
    return Verdict::unknown("torus_cosets", BoundReached{bound});
}

bool subgroup_witness_misses(const ProductSpectralSet& j, const SubgroupWitness& w) {
    return !coset_meets(j, w.a, w.b, w.d, w.t1, w.t2);
}

}  // namespace spdkern
