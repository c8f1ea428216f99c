#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paut/gaussq.hpp"
#include "paut/matrix.hpp"

namespace paut {

/// Reduced row span over GaussQ with sparse rows; rows are kept in reduced
/// echelon form so a span has a canonical basis.
class RowSpan {
public:
    using SparseVec = std::map<int, GaussQ>;

    static SparseVec flatten(const Matrix<GaussQ> &m);

    int dim() const { return int(rows_.size()); }
    const std::vector<SparseVec> &rows() const { return rows_; }

    /// Reduce v against the basis; returns the residual.
    SparseVec reduce(SparseVec v) const;

    /// Reduce and, if the residual is nonzero, insert it (normalized) and
    /// back-substitute.  Returns true when the span grew.
    bool add(SparseVec v);

    /// Coordinates of v in the current basis, or nullopt if v is outside.
    std::optional<std::vector<GaussQ>> express(SparseVec v) const;

    bool operator==(const RowSpan &o) const { return rows_ == o.rows_; }

private:
    std::vector<SparseVec> rows_;          // sorted by pivot
    std::map<int, int> row_of_pivot_;
};

/// A *-closed, product-closed linear span of matrices over the Gaussian
/// rationals, with a canonical reduced basis.  Produced by saturate().
struct MatrixStarAlgebra {
    int ambient_dim = 0;
    std::vector<Matrix<GaussQ>> basis;
    RowSpan span;

    int dim() const { return int(basis.size()); }
};

/// Smallest *-closed algebra spanned by the generators: repeatedly add
/// adjoints, then all pairwise products, re-extracting a reduced basis,
/// until nothing new appears.  Deterministic; terminates since the span
/// dimension is bounded by ambient_dim^2.
MatrixStarAlgebra saturate(const std::vector<Matrix<GaussQ>> &generators);

struct WedderburnResult {
    bool ok = false;
    std::vector<long> block_sizes;  // sorted descending
    std::string failure;            // set when !ok; never silently wrong
};

/// Wedderburn decomposition of a saturated algebra: find the minimal central
/// idempotents by exact spectral splitting of self-adjoint central elements
/// (rational eigenvalues only), and report the full matrix block sizes.
/// When the center does not split over the Gaussian rationals the result
/// carries an "indecomposable over exact field" failure instead.
WedderburnResult wedderburn(const MatrixStarAlgebra &alg);

}  // namespace paut
