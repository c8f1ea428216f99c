#include "paut/block_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace paut {

BlockAlgebra::BlockAlgebra(std::vector<Block> blocks) : blocks_(std::move(blocks))
{
    std::set<std::string> seen;
    for (const Block &b : blocks_) {
        if (b.dim < 1)
            throw std::invalid_argument("block '" + b.id + "': dim must be >= 1");
        if (!seen.insert(b.id).second)
            throw std::invalid_argument("duplicate block id '" + b.id + "'");
    }
}

std::optional<int> BlockAlgebra::index_of(const std::string &id) const
{
    for (int i = 0; i < size(); ++i)
        if (blocks_[size_t(i)].id == id)
            return i;
    return std::nullopt;
}

long BlockAlgebra::total_dim() const
{
    long t = 0;
    for (const Block &b : blocks_)
        t += b.dim * b.dim;
    return t;
}

IdealSet::IdealSet(AlgebraPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members))
{
    if (!parent_)
        throw std::invalid_argument("ideal requires a parent algebra");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int m : members_)
        if (m < 0 || m >= parent_->size())
            throw std::invalid_argument("ideal member out of range");
}

IdealSet IdealSet::full(AlgebraPtr parent)
{
    std::vector<int> all(size_t(parent->size()));
    for (int i = 0; i < int(all.size()); ++i)
        all[size_t(i)] = i;
    return IdealSet(std::move(parent), std::move(all));
}

bool IdealSet::contains(int block) const
{
    return std::binary_search(members_.begin(), members_.end(), block);
}

long IdealSet::dim() const
{
    long t = 0;
    for (int m : members_)
        t += parent_->dim_of(m) * parent_->dim_of(m);
    return t;
}

std::vector<std::string> IdealSet::member_ids() const
{
    std::vector<std::string> ids;
    ids.reserve(members_.size());
    for (int m : members_)
        ids.push_back(parent_->id_of(m));
    return ids;
}

bool IdealSet::operator==(const IdealSet &o) const
{
    return same_parent(*this, o) && members_ == o.members_;
}

bool same_parent(const IdealSet &a, const IdealSet &b)
{
    if (!a.parent() || !b.parent())
        return false;
    return a.parent() == b.parent() || *a.parent() == *b.parent();
}

bool subset_of(const IdealSet &a, const IdealSet &b)
{
    return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                         a.members().end());
}

namespace {

void require_same_parent(const IdealSet &a, const IdealSet &b)
{
    if (!same_parent(a, b))
        throw std::invalid_argument("ideals belong to incompatible algebras");
}

}  // namespace

IdealSet ideal_product(const IdealSet &a, const IdealSet &b)
{
    require_same_parent(a, b);
    std::vector<int> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(out));
    return IdealSet(a.parent(), std::move(out));
}

IdealSet ideal_sum(const IdealSet &a, const IdealSet &b)
{
    require_same_parent(a, b);
    std::vector<int> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                   b.members().end(), std::back_inserter(out));
    return IdealSet(a.parent(), std::move(out));
}

IdealSet ideal_complement_in(const IdealSet &a, const IdealSet &b)
{
    require_same_parent(a, b);
    if (!subset_of(b, a))
        throw std::invalid_argument("complement requires the second ideal inside the first");
    std::vector<int> out;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
    return IdealSet(a.parent(), std::move(out));
}

}  // namespace paut
