#pragma once

#include <map>
#include <string>
#include <vector>

#include "paut/gaussq.hpp"
#include "paut/matrix.hpp"
#include "paut/partial_system.hpp"

namespace paut {

/// An element of the block algebra: one square matrix per supported block.
/// Blocks carrying the zero matrix are pruned, so support is meaningful.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement block_unit(const AlgebraPtr &algebra, int block);
    static AlgebraElement matrix_unit(const AlgebraPtr &algebra, int block, int r, int c);
    /// The central projection supported on an ideal.
    static AlgebraElement projection(const IdealSet &ideal);

    void set_block(const AlgebraPtr &algebra, int block, Matrix<GaussQ> value);
    const std::map<int, Matrix<GaussQ>> &components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    std::vector<int> support() const;

    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator*(const AlgebraElement &o) const;  // blockwise
    AlgebraElement adjoint() const;

    /// Push the element along a partial injection on blocks; blocks outside
    /// the domain are dropped.
    AlgebraElement mapped_by(const PartialInjection &f) const;

    bool operator==(const AlgebraElement &o) const { return comps_ == o.comps_; }

private:
    std::map<int, Matrix<GaussQ>> comps_;
};

/// An element of the crossed product as a finitely supported Z-graded sum:
/// the degree-n component lies in the power ideal D_n.
class GradedElement {
public:
    GradedElement() = default;

    void set_component(int degree, AlgebraElement value);
    const std::map<int, AlgebraElement> &components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    GradedElement operator+(const GradedElement &o) const;

    bool operator==(const GradedElement &o) const { return comps_ == o.comps_; }

private:
    std::map<int, AlgebraElement> comps_;
};

/// Check that every graded component is supported inside its power ideal.
bool graded_support_ok(const PartialSystem &sys, const GradedElement &x);

/// The convolution product (xy)_n = sum_k f^k(f^{-k}(x_k) y_{n-k}).
GradedElement graded_multiply(const PartialSystem &sys, const GradedElement &x,
                              const GradedElement &y);

/// The twisted involution (x*)_n = f^n((x_{-n})*).
GradedElement graded_adjoint(const PartialSystem &sys, const GradedElement &x);

/// Dimensions of the spectral subspaces D_n m^n for |n| <= window
/// (default: block count + 1, past which the D_n have stabilized).
std::map<int, long> spectral_dims(const PartialSystem &sys, int window = -1);

/// A covariant representation of one orbit: pi places each block on its own
/// diagonal slot and u is the block shift.  Chain orbits need only constant
/// coefficients; cycle orbits put the unitary circle variable z in the
/// wrap-around entry, so matrices here carry Laurent entries uniformly.
struct CovariantRep {
    Orbit orbit;
    long space_dim = 0;
    std::map<int, int> slot_of_block;  // block index -> first coordinate of its slot
    Matrix<Laurent> u;

    Matrix<Laurent> pi(const AlgebraElement &a, const AlgebraPtr &algebra) const;
    Matrix<Laurent> pi_projection(const IdealSet &ideal) const;
};

CovariantRep standard_rep(const PartialSystem &sys, const Orbit &orbit);

/// pi x u:  sum_n pi(x_n) u^n.  The element must be supported on the orbit.
Matrix<Laurent> represent(const PartialSystem &sys, const CovariantRep &rep,
                          const GradedElement &x);

enum class SummandKind { finite_matrix, circle_fibered, repeated_countably };

struct Summand {
    SummandKind kind = SummandKind::finite_matrix;
    long size = 0;

    auto operator<=>(const Summand &) const = default;
};

/// Isomorphism-class descriptor: a multiset of summands, with a flag for
/// algebras stabilized by the compacts on l^2(Z).
struct StructureDescriptor {
    std::vector<Summand> summands;  // kept sorted
    bool stable = false;

    void add(SummandKind kind, long size);
    void normalize();
    bool operator==(const StructureDescriptor &o) const = default;

    std::string to_string() const;
};

std::string to_string(SummandKind kind);

/// Isomorphism class of the crossed product, orbit by orbit: a chain of
/// length n with blocks of dimension d contributes a full matrix algebra of
/// size n*d; a cycle of length k contributes k*d x k*d matrices over the
/// circle.
StructureDescriptor structure(const PartialSystem &sys);

struct RestrictedCrossedProduct {
    StructureDescriptor descriptor;
    std::map<int, long> graded_dims;
};

/// The ideal I x Z inside A x Z, for an invariant ideal I.
RestrictedCrossedProduct restrict_crossed_product(const PartialSystem &sys,
                                                  const IdealSet &ideal);

/// The quotient (A x Z)/(I x Z) = (A/I) x Z, for an invariant ideal I.
StructureDescriptor quotient_crossed_product(const PartialSystem &sys, const IdealSet &ideal);

}  // namespace paut
