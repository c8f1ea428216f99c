#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paut/block_algebra.hpp"

namespace paut {

/// A partial injection on block indices, encoded as a forward table with -1
/// for "undefined".
class PartialInjection {
public:
    PartialInjection() = default;
    explicit PartialInjection(std::vector<int> fwd);

    static PartialInjection identity(int n);

    int size() const { return int(fwd_.size()); }
    int apply(int i) const { return fwd_[size_t(i)]; }  // -1 if undefined
    bool defined(int i) const { return fwd_[size_t(i)] >= 0; }

    std::vector<int> domain() const;
    std::vector<int> range() const;

    PartialInjection inverse() const;
    /// Composition this . other: first other, then this.
    PartialInjection compose(const PartialInjection &other) const;

    /// Image of a block set (only blocks inside the domain contribute).
    std::vector<int> image(const std::vector<int> &blocks) const;

    bool operator==(const PartialInjection &o) const { return fwd_ == o.fwd_; }

private:
    std::vector<int> fwd_;
};

struct Orbit {
    enum class Kind { chain, cycle };
    Kind kind = Kind::chain;
    std::vector<int> blocks;  // in map order; for cycles, blocks[i] -> blocks[i+1 mod len]
    long block_dim = 1;

    int length() const { return int(blocks.size()); }
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;
};

struct WoldDecomposition {
    IdealSet core;           // D_inf * D_-inf: the automorphic core
    IdealSet forward_part;   // D_-inf minus the core
    IdealSet backward_part;  // D_inf minus the core
    IdealSet finite_part;    // everything else (chains)
};

struct Classification {
    bool nilpotent = false;
    int nilpotency_index = 0;  // smallest n > 0 with D_n = 0, when nilpotent
    bool forward_shift = false;
    bool backward_shift = false;
    bool completely_nonautomorphic = false;
    bool automorphism = false;
    bool nilpotent_lemma_ok = true;  // the four-way equivalence, checked per n
};

struct MapIdealsReport {
    bool pass = true;
    int bad_n = 0, bad_k = 0;  // first counterexample when !pass
    std::string detail;
};

struct EventuallyConstantReport {
    int stabilization_up = 0;    // min k >= 0 with D_k = D_{k+1}
    int stabilization_down = 0;  // max n <= 0 with D_n = D_{n-1}
    bool constant_beyond_ok = true;
    bool invariant_implies_constant_ok = true;
    bool symmetry_ok = true;  // stabilization_down == -stabilization_up
    bool restriction_bijective = true;
    bool ok() const
    {
        return constant_beyond_ok && invariant_implies_constant_ok && symmetry_ok &&
               restriction_bijective;
    }
};

class PartialSystem;

struct SubquotientStructure {
    int n = 0;
    IdealSet ladder;       // I_n in the ambient algebra
    IdealSet ladder_next;  // I_{n+1}
    // The subquotient system lives on I_n \ I_{n+1}.
    std::shared_ptr<PartialSystem> subquotient;
    IdealSet base;  // ideal of the subquotient's algebra
    int copies = 0;
    /// (base block index in the subquotient algebra, copy j in 1..n) -> block.
    std::map<std::pair<int, int>, int> witness;
    bool witness_bijective = false;
    bool witness_intertwines = false;
};

/// A partial automorphism of a BlockAlgebra: a dimension-compatible partial
/// injection on its block index set.  The range of the n-th power is the
/// power ideal D_n (domain for negative n), and everything in this module is
/// read off from those ideals.
class PartialSystem {
public:
    PartialSystem(AlgebraPtr algebra, const std::vector<std::pair<std::string, std::string>> &pairs);
    PartialSystem(AlgebraPtr algebra, PartialInjection map);

    const AlgebraPtr &algebra() const { return algebra_; }
    const PartialInjection &map() const { return map_; }
    int block_count() const { return algebra_->size(); }
    std::vector<std::pair<std::string, std::string>> map_pairs() const;

    PartialSystem inverse_system() const;

    /// f^n as a partial injection; f^0 is the identity on all blocks.
    PartialInjection power(int n) const;

    /// The power ideal D_n: range of f^n (domain of f^{|n|} for n < 0).
    IdealSet ideal_d(int n) const;

    /// D_{+inf} or D_{-inf}: the intersection of all D_n of one sign,
    /// computed at exponent = block count (the D_n stabilize by then).
    IdealSet d_infinity(int sign) const;

    /// Image of an ideal under f^n.
    IdealSet apply_power(int n, const IdealSet &ideal) const;

    bool is_invariant(const IdealSet &ideal) const;

    /// Restriction to an invariant ideal; its D_n are B intersect D_n.
    PartialSystem restrict_to(const IdealSet &ideal) const;

    /// Quotient by an invariant ideal; its D_n are D_n \ I.
    PartialSystem quotient_by(const IdealSet &ideal) const;

    MapIdealsReport verify_map_ideals(int bound) const;

    WoldDecomposition wold() const;
    Classification classify() const;
    OrbitDecomposition orbits() const;

    /// The ladder ideal I_n = D_{1-n} + D_{2-n}D_1 + ... + D_{n-1}, n >= 2.
    IdealSet ladder_ideal(int n) const;

    SubquotientStructure subquotient_structure(int n) const;

    EventuallyConstantReport eventually_constant_checks() const;

    /// Tensor with a single d x d matrix block: scales every block dimension
    /// by d and keeps the same map.
    PartialSystem tensor_with_block(long d) const;

private:
    void validate() const;

    AlgebraPtr algebra_;
    PartialInjection map_;
};

}  // namespace paut
