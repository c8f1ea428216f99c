#pragma once

#include <map>
#include <string>
#include <vector>

#include "paut/crossed_product.hpp"
#include "paut/partial_system.hpp"

namespace paut {

/// Report for the dual-coaction grading: the spectral subspace of degree n
/// is D_n m^n, multiplication adds degrees and the adjoint negates them.
struct DualCoactionReport {
    std::map<int, long> dims;
    bool dims_ok = true;
    bool degree_additive_ok = true;
    bool adjoint_negates_ok = true;
    bool ok() const { return dims_ok && degree_additive_ok && adjoint_negates_ok; }
};

DualCoactionReport dual_coaction_check(const PartialSystem &sys);

/// The partition of unity witnessing innerness of the dual coaction:
/// q_n = p_inf (p_{n+1} - p_n) for n < 0, p_n - p_{n+1} for n >= 0.
struct PartitionOfUnity {
    std::map<int, IdealSet> q;  // only nonempty entries are listed
    bool partitions = false;    // disjoint with union = all blocks
    bool shift_relation = false;  // f(q_k n D_{-1}) = q_{k+1} n D_1 for all k
};

/// Requires a completely nonautomorphic system; throws naming the core
/// blocks otherwise.
PartitionOfUnity inner_partition(const PartialSystem &sys);

/// Crossed product by the (inner) dual coaction:
/// (A x Z) x Z = (A x Z) (x) c0(Z), as a descriptor.
StructureDescriptor inner_crossed_product(const PartialSystem &sys);

struct OrbitVerdict {
    Orbit orbit;
    bool holds = false;
    StructureDescriptor lhs;  // (A x Z) x Z on the orbit
    StructureDescriptor rhs;  // A (x) K(l^2(Z)) on the orbit
    std::string witness;
};

/// Per-orbit Takai-Takesaki verdict; duality holds globally exactly when
/// the map is a total bijection.
struct DualityVerdict {
    std::vector<OrbitVerdict> per_orbit;
    bool global_holds = true;
};

DualityVerdict duality_verdict(const PartialSystem &sys);

/// The n = 1 subquotient: with I = D_{-1} + D_1, the quotient double
/// crossed product is A/I (x) c0(Z).
struct SpecialSubquotientReport {
    IdealSet ideal;                  // I = D_{-1} + D_1
    StructureDescriptor quotient_double;  // computed on A/I
    StructureDescriptor expected;         // one c0(Z, M_d) per block outside I
    bool ok = false;
};

SpecialSubquotientReport special_subquotient_check(const PartialSystem &sys);

/// The three-way invariant decomposition A = I_1 + I_2 + I_3 of a completely
/// nonautomorphic system, with the dual coaction inner on each part.
struct CorDecomposition {
    IdealSet i1, i2, i3;
    bool partitions = false;
    bool all_invariant = false;
    bool inner_on_each = false;
    bool ok() const { return partitions && all_invariant && inner_on_each; }
};

CorDecomposition cor_decomposition(const PartialSystem &sys);

}  // namespace paut
