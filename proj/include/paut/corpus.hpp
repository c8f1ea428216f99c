#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paut/block_algebra.hpp"
#include "paut/gaussq.hpp"
#include "paut/partial_system.hpp"

namespace paut {

/// Certified rational enclosure of pi from the base-16 digit series;
/// lower() < pi < upper() with width 16^{-terms}.
class PiBounds {
public:
    explicit PiBounds(int terms = 2);
    void refine();  // one more term, width shrinks by 16x
    const Rational &lower() const { return lower_; }
    Rational upper() const;
    int terms() const { return terms_; }

private:
    Rational lower_;
    int terms_ = 0;
};

/// An exact number q + m*pi.  Equality is componentwise (pi is irrational);
/// ordering is decided through the certified enclosure, refined on demand.
class PiRational {
public:
    PiRational() : q_(0), m_(0) {}
    PiRational(Rational q, long m = 0) : q_(std::move(q)), m_(m) {}

    const Rational &q() const { return q_; }
    long m() const { return m_; }

    PiRational operator+(const PiRational &o) const { return {q_ + o.q_, m_ + o.m_}; }
    PiRational operator-(const PiRational &o) const { return {q_ - o.q_, m_ - o.m_}; }

    bool operator==(const PiRational &o) const { return q_ == o.q_ && m_ == o.m_; }
    bool operator!=(const PiRational &o) const { return !(*this == o); }
    bool operator<(const PiRational &o) const;
    bool operator<=(const PiRational &o) const { return *this == o || *this < o; }

    /// Enclosing rational interval at the given enclosure.
    std::pair<Rational, Rational> enclosure(const PiBounds &pi) const;

    std::string to_string() const;

private:
    Rational q_;
    long m_;
};

/// sigma_n, the shift on C^n: a single chain of n one-dimensional blocks.
PartialSystem shift_system(int n);

/// A single cycle of k one-dimensional blocks (an automorphism).
PartialSystem cycle_system(int k);

/// Size-N truncation of the forward shift on c0.
PartialSystem c0_shift_truncated(int n);

/// sigma_1 + sigma_2 + ... + sigma_n, the triangular truncation of the
/// c0(N^2) example; ladder ideals follow the anti-diagonal index formula.
PartialSystem direct_sum_shifts(int n);

/// Deterministic random partial injection on `size` one-dimensional blocks;
/// each block gets an image with probability `density_percent`/100.
PartialSystem random_system(std::uint64_t seed, int size, int density_percent);

/// Dispatch by name: shift_n, cycle_k, c0_shift_truncated_N,
/// direct_sum_shifts_N, random (params: seed, size, density in percent).
PartialSystem named_system(const std::string &name, const std::vector<long> &params);

/// All partial injections on k <= max_blocks one-dimensional blocks, up to
/// relabeling (the isomorphism class is the multiset of orbit types).
/// Deterministic order; max_blocks is capped at 4 unless relaxed.
std::vector<PartialSystem> enumerate_systems(int max_blocks, int cap = 4);

/// Every labeled partial injection on exactly `blocks` points (no
/// deduplication); used by the exhaustive property suites.
std::vector<PartialSystem> all_labeled_systems(int blocks);

/// The Sieben set: {0, +-H_1, ..., +-H_N} + offset*pi, H_j the j-th
/// harmonic partial sum.
std::vector<PiRational> sieben_set(int depth, long pi_offset);

/// Exact disjointness of U_{k=1..n}(S + k pi) and U_{k=0..n-1}(S - k pi):
/// the pi-components alone separate the unions, so the conclusion holds for
/// every truncation depth at once (a proof, not a sample).
struct SiebenDisjointnessReport {
    int n = 0;
    bool disjoint = false;
    bool proof_for_all_depths = false;
    std::string argument;
};

SiebenDisjointnessReport sieben_disjointness(int n);

/// Largest gap of U_{0<k<=M}(S_N + k pi) inside [-R, R], as an exact q+m*pi
/// value plus a rational enclosure.  Evidence for density, not a proof.
struct SiebenGapReport {
    int n_terms = 0;
    int translates = 0;
    Rational window_radius;
    PiRational exact_gap;
    Rational gap_lower, gap_upper;
};

SiebenGapReport sieben_density_gap(int n_terms, const Rational &window_radius, int translates);

}  // namespace paut
