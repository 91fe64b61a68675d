#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spdkern/common.hpp"

namespace spdkern {

// ---------------------------------------------------------------------------
// Verdicts: three-valued results with machine-checkable evidence.
// ---------------------------------------------------------------------------

enum class Status { Proven, Disproven, Unknown };

const char* status_name(Status s);

// Full arithmetic progression c + d*Z that misses the set in question.
struct ApWitness {
    long long c = 0;
    long long modulus = 1;
};

// Coset (t1, t2) + (a,b)Z + (0,d)Z of Z^2 missing a symmetric support set.
struct SubgroupWitness {
    long long a = 1, b = 0, d = 1;
    long long t1 = 0, t2 = 0;
};

// Parity failure of a sphere support set; max = -1 means that side is empty.
struct ParityDefect {
    bool even_missing = false;
    bool odd_missing = false;
    long long even_max = -1;
    long long odd_max = -1;
};

// Support of a projective-family scheme is finite; max_element = -1 if empty.
struct FiniteSupportDefect {
    long long max_element = -1;
};

// Offending coefficient index (level k, optional within-level index j).
struct IndexWitness {
    long long k = 0;
    long long j = -1;
};

struct BoundReached {
    long long bound = 0;
};

struct Note {
    std::string text;
};

using Evidence = std::variant<std::monostate, ApWitness, SubgroupWitness, ParityDefect,
                              FiniteSupportDefect, IndexWitness, BoundReached, Note>;

struct Verdict {
    Status status = Status::Unknown;
    std::string criterion;
    Evidence evidence;
    std::vector<Verdict> sub;

    static Verdict proven(std::string criterion, Evidence e = std::monostate{});
    static Verdict disproven(std::string criterion, Evidence e);
    static Verdict unknown(std::string criterion, Evidence e = std::monostate{});
};

// ---------------------------------------------------------------------------
// Subsets of N: finite part plus arithmetic progressions {start + step*n}.
// ---------------------------------------------------------------------------

struct Progression {
    long long start = 0;
    long long step = 1;  // >= 1
};

class SpectralSet {
  public:
    SpectralSet() = default;
    static SpectralSet make(std::vector<long long> finite, std::vector<Progression> progs);
    static SpectralSet finite_set(std::vector<long long> finite);
    static SpectralSet all();  // {0 + 1n}

    bool contains(long long k) const;
    bool empty() const;
    bool has_progressions() const { return !progs_.empty(); }
    long long max_finite() const;  // -1 when the finite part is empty

    const std::vector<long long>& finite() const { return finite_; }
    const std::vector<Progression>& progressions() const { return progs_; }

    // Elements <= limit, ascending (test / display helper).
    std::vector<long long> enumerate_up_to(long long limit) const;

  private:
    std::vector<long long> finite_;
    std::vector<Progression> progs_;
};

SpectralSet set_union(const SpectralSet& a, const SpectralSet& b);

struct ParityCensus {
    bool even_infinite = false;
    bool odd_infinite = false;
};

ParityCensus parity_census(const SpectralSet& s);

// {k in S : k >= gamma}.
SpectralSet restrict_min(const SpectralSet& s, long long gamma);

// {k in S : k = parity mod 2}, parity in {0, 1}.
SpectralSet parity_filter(const SpectralSet& s, int parity);

// Does S meet every full arithmetic progression c + d*Z? Decided exactly via
// the covering-system test on the progression residues modulo L = lcm(steps);
// the finite part never helps (a finite set always misses some full AP).
// Disproven carries a witness AP that misses the whole set, finite part
// included (the modulus is scaled past colliding finite elements).
Verdict intersects_every_full_ap(const SpectralSet& s);

// Same question for the symmetric set S u (-S) as a subset of Z.
Verdict z_set_intersects_every_full_ap(const SpectralSet& s);

// Exact re-verification that c + modulus*Z misses S (or S u -S): progression
// vs AP intersection reduces to gcd divisibility, finite part to congruence.
bool ap_witness_misses(const SpectralSet& s, const ApWitness& w, bool symmetric);

// ---------------------------------------------------------------------------
// Subsets of N^2: finite pairs plus progression boxes A x B.
// ---------------------------------------------------------------------------

struct Box {
    Progression first;
    Progression second;
};

class ProductSpectralSet {
  public:
    ProductSpectralSet() = default;
    static ProductSpectralSet make(std::vector<std::pair<long long, long long>> finite,
                                   std::vector<Box> boxes);

    bool contains(long long k, long long kp) const;
    bool empty() const;

    const std::vector<std::pair<long long, long long>>& finite() const { return finite_; }
    const std::vector<Box>& boxes() const { return boxes_; }

  private:
    std::vector<std::pair<long long, long long>> finite_;
    std::vector<Box> boxes_;
};

ProductSpectralSet transpose(const ProductSpectralSet& j);

// Slice {k' : (k, k') in J}.
SpectralSet slice(const ProductSpectralSet& j, long long k);

// T = {k in Z : slice(J, |k|) n {>= gamma} n parity != empty}, reported via
// its nonnegative base (the set is symmetric by construction). Box-backed
// contributions are gamma-uniform (progressions are unbounded); finite pairs
// stop contributing beyond the reported threshold gamma_star.
struct SymmetrizedIndexSet {
    SpectralSet base;
    long long gamma_star = 0;
};

// parity: 0 even, 1 odd, -1 any.
SymmetrizedIndexSet symmetrized_index_set(const ProductSpectralSet& j, long long gamma,
                                          int parity);

// Does S2 = {(k,l) in Z^2 : (|k|,|l|) in J} meet every coset of every
// subgroup (a,b)Z + (0,d)Z with 1 <= a,d <= bound (b reduced mod d)?
// Proven only by the structural rule (some box with both steps 1, so S2
// contains a translated full quadrant); otherwise exhaustive coset checks up
// to the bound give Disproven (lexicographically smallest witness in
// (a, d, b, t1, t2) order) or Unknown(bound).
Verdict torus_condition(const ProductSpectralSet& j, int bound);

// Exact re-verification of a torus witness against J.
bool subgroup_witness_misses(const ProductSpectralSet& j, const SubgroupWitness& w);

}  // namespace spdkern
