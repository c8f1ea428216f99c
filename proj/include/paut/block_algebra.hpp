#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace paut {

struct Block {
    std::string id;
    long dim = 1;

    bool operator==(const Block &o) const = default;
};

/// A finite-dimensional C*-algebra presented as an ordered list of full
/// matrix blocks.  The zero algebra is the empty list.  Block ids are opaque
/// tokens compared by equality; the input order is kept only so output is
/// deterministic.
class BlockAlgebra {
public:
    BlockAlgebra() = default;
    explicit BlockAlgebra(std::vector<Block> blocks);

    int size() const { return int(blocks_.size()); }
    const std::vector<Block> &blocks() const { return blocks_; }
    const std::string &id_of(int i) const { return blocks_[size_t(i)].id; }
    long dim_of(int i) const { return blocks_[size_t(i)].dim; }
    std::optional<int> index_of(const std::string &id) const;

    /// Vector-space dimension: sum of dim^2 over blocks.
    long total_dim() const;

    bool operator==(const BlockAlgebra &o) const { return blocks_ == o.blocks_; }

private:
    std::vector<Block> blocks_;
};

using AlgebraPtr = std::shared_ptr<const BlockAlgebra>;

inline AlgebraPtr make_algebra(std::vector<Block> blocks)
{
    return std::make_shared<const BlockAlgebra>(std::move(blocks));
}

/// An ideal of a BlockAlgebra: a subset of its blocks.  Ideals of a
/// finite-dimensional C*-algebra are exactly the sums of central blocks, so
/// this also carries the central projection supported on the ideal.
class IdealSet {
public:
    IdealSet() = default;
    IdealSet(AlgebraPtr parent, std::vector<int> members);

    static IdealSet empty(AlgebraPtr parent) { return IdealSet(std::move(parent), {}); }
    static IdealSet full(AlgebraPtr parent);

    const AlgebraPtr &parent() const { return parent_; }
    const std::vector<int> &members() const { return members_; }  // sorted, unique
    int count() const { return int(members_.size()); }
    bool is_empty() const { return members_.empty(); }
    bool is_full() const { return parent_ && count() == parent_->size(); }
    bool contains(int block) const;
    long dim() const;  // sum of dim^2 over members

    std::vector<std::string> member_ids() const;

    bool operator==(const IdealSet &o) const;
    bool operator!=(const IdealSet &o) const { return !(*this == o); }

private:
    AlgebraPtr parent_;
    std::vector<int> members_;
};

bool same_parent(const IdealSet &a, const IdealSet &b);
bool subset_of(const IdealSet &a, const IdealSet &b);

/// Product of ideals; in a C*-algebra this coincides with intersection.
IdealSet ideal_product(const IdealSet &a, const IdealSet &b);

/// Sum of ideals (set union).
IdealSet ideal_sum(const IdealSet &a, const IdealSet &b);

/// Relative complement a \ b, requiring b to be contained in a.  Represents
/// both the quotient a/b and the projection difference p_a - p_b.
IdealSet ideal_complement_in(const IdealSet &a, const IdealSet &b);

}  // namespace paut
