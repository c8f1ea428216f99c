#include "paut/partial_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paut {

PartialInjection::PartialInjection(std::vector<int> fwd) : fwd_(std::move(fwd))
{
    std::set<int> targets;
    for (int t : fwd_) {
        if (t < 0)
            continue;
        if (t >= int(fwd_.size()))
            throw std::invalid_argument("partial injection target out of range");
        if (!targets.insert(t).second)
            throw std::invalid_argument("partial injection has a repeated target");
    }
}

PartialInjection PartialInjection::identity(int n)
{
    std::vector<int> fwd(size_t(n));
    for (int i = 0; i < n; ++i)
        fwd[size_t(i)] = i;
    return PartialInjection(std::move(fwd));
}

std::vector<int> PartialInjection::domain() const
{
    std::vector<int> d;
    for (int i = 0; i < size(); ++i)
        if (defined(i))
            d.push_back(i);
    return d;
}

std::vector<int> PartialInjection::range() const
{
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (defined(i))
            r.push_back(fwd_[size_t(i)]);
    std::sort(r.begin(), r.end());
    return r;
}

PartialInjection PartialInjection::inverse() const
{
    std::vector<int> bwd(fwd_.size(), -1);
    for (int i = 0; i < size(); ++i)
        if (defined(i))
            bwd[size_t(fwd_[size_t(i)])] = i;
    return PartialInjection(std::move(bwd));
}

PartialInjection PartialInjection::compose(const PartialInjection &other) const
{
    // domain of this.other: everything other maps into the domain of this
    std::vector<int> fwd(fwd_.size(), -1);
    for (int i = 0; i < other.size(); ++i) {
        int mid = other.apply(i);
        if (mid >= 0 && defined(mid))
            fwd[size_t(i)] = apply(mid);
    }
    return PartialInjection(std::move(fwd));
}

std::vector<int> PartialInjection::image(const std::vector<int> &blocks) const
{
    std::vector<int> out;
    for (int b : blocks)
        if (defined(b))
            out.push_back(apply(b));
    std::sort(out.begin(), out.end());
    return out;
}

PartialSystem::PartialSystem(AlgebraPtr algebra,
                             const std::vector<std::pair<std::string, std::string>> &pairs)
    : algebra_(std::move(algebra))
{
    std::vector<int> fwd(size_t(algebra_->size()), -1);
    std::set<int> targets;
    for (const auto &[src, dst] : pairs) {
        auto s = algebra_->index_of(src);
        auto t = algebra_->index_of(dst);
        if (!s)
            throw std::invalid_argument("map source '" + src + "' is not a block id");
        if (!t)
            throw std::invalid_argument("map target '" + dst + "' is not a block id");
        if (fwd[size_t(*s)] != -1)
            throw std::invalid_argument("map not functional at source '" + src + "'");
        if (!targets.insert(*t).second)
            throw std::invalid_argument("map not injective at target '" + dst + "'");
        fwd[size_t(*s)] = *t;
    }
    map_ = PartialInjection(std::move(fwd));
    validate();
}

PartialSystem::PartialSystem(AlgebraPtr algebra, PartialInjection map)
    : algebra_(std::move(algebra)), map_(std::move(map))
{
    if (map_.size() != algebra_->size())
        throw std::invalid_argument("map size does not match block count");
    validate();
}

void PartialSystem::validate() const
{
    for (int i = 0; i < map_.size(); ++i) {
        int t = map_.apply(i);
        if (t >= 0 && algebra_->dim_of(i) != algebra_->dim_of(t)) {
            std::ostringstream os;
            os << "map pair " << algebra_->id_of(i) << " -> " << algebra_->id_of(t)
               << ": dimension mismatch (" << algebra_->dim_of(i) << " vs "
               << algebra_->dim_of(t) << ")";
            throw std::invalid_argument(os.str());
        }
    }
}

std::vector<std::pair<std::string, std::string>> PartialSystem::map_pairs() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < map_.size(); ++i)
        if (map_.defined(i))
            out.emplace_back(algebra_->id_of(i), algebra_->id_of(map_.apply(i)));
    return out;
}

PartialSystem PartialSystem::inverse_system() const
{
    return PartialSystem(algebra_, map_.inverse());
}

PartialInjection PartialSystem::power(int n) const
{
    PartialInjection base = n >= 0 ? map_ : map_.inverse();
    int k = n >= 0 ? n : -n;
    PartialInjection acc = PartialInjection::identity(map_.size());
    for (int i = 0; i < k; ++i)
        acc = base.compose(acc);
    return acc;
}

IdealSet PartialSystem::ideal_d(int n) const
{
    return IdealSet(algebra_, power(n).range());
}

IdealSet PartialSystem::d_infinity(int sign) const
{
    int n = std::max(1, block_count());
    return ideal_d(sign >= 0 ? n : -n);
}

IdealSet PartialSystem::apply_power(int n, const IdealSet &ideal) const
{
    return IdealSet(algebra_, power(n).image(ideal.members()));
}

bool PartialSystem::is_invariant(const IdealSet &ideal) const
{
    if (!same_parent(ideal, IdealSet::empty(algebra_)))
        throw std::invalid_argument("ideal belongs to a different algebra");
    // For block ideals the two containments of the definition amount to:
    // every map pair has both endpoints inside or both outside.
    for (int i = 0; i < map_.size(); ++i) {
        int t = map_.apply(i);
        if (t >= 0 && ideal.contains(i) != ideal.contains(t))
            return false;
    }
    return true;
}

namespace {

int find_violating_block(const PartialSystem &sys, const IdealSet &ideal)
{
    for (int i = 0; i < sys.map().size(); ++i) {
        int t = sys.map().apply(i);
        if (t >= 0 && ideal.contains(i) != ideal.contains(t))
            return ideal.contains(i) ? t : i;
    }
    return -1;
}

}  // namespace

PartialSystem PartialSystem::restrict_to(const IdealSet &ideal) const
{
    if (!is_invariant(ideal)) {
        int bad = find_violating_block(*this, ideal);
        throw std::invalid_argument("ideal is not invariant: block '" +
                                    algebra_->id_of(bad) + "' escapes it");
    }
    std::vector<Block> blocks;
    std::vector<int> new_index(size_t(block_count()), -1);
    for (int m : ideal.members()) {
        new_index[size_t(m)] = int(blocks.size());
        blocks.push_back(algebra_->blocks()[size_t(m)]);
    }
    std::vector<int> fwd(blocks.size(), -1);
    for (int m : ideal.members()) {
        int t = map_.apply(m);
        if (t >= 0)
            fwd[size_t(new_index[size_t(m)])] = new_index[size_t(t)];
    }
    return PartialSystem(make_algebra(std::move(blocks)), PartialInjection(std::move(fwd)));
}

PartialSystem PartialSystem::quotient_by(const IdealSet &ideal) const
{
    if (!is_invariant(ideal)) {
        int bad = find_violating_block(*this, ideal);
        throw std::invalid_argument("ideal is not invariant: block '" +
                                    algebra_->id_of(bad) + "' escapes it");
    }
    std::vector<int> rest;
    for (int i = 0; i < block_count(); ++i)
        if (!ideal.contains(i))
            rest.push_back(i);
    return restrict_to(IdealSet(algebra_, std::move(rest)));
}

MapIdealsReport PartialSystem::verify_map_ideals(int bound) const
{
    if (bound < 1)
        throw std::invalid_argument("verify_map_ideals requires bound >= 1");
    MapIdealsReport rep;
    for (int n = -bound; n <= bound; ++n)
        for (int k = -bound; k <= bound; ++k) {
            IdealSet lhs = apply_power(n, ideal_product(ideal_d(k), ideal_d(-n)));
            IdealSet rhs = ideal_product(ideal_d(n + k), ideal_d(n));
            if (lhs != rhs) {
                rep.pass = false;
                rep.bad_n = n;
                rep.bad_k = k;
                std::ostringstream os;
                os << "f^" << n << "(D_" << k << " D_" << -n << ") != D_" << (n + k)
                   << " D_" << n;
                rep.detail = os.str();
                return rep;
            }
        }
    return rep;
}

WoldDecomposition PartialSystem::wold() const
{
    IdealSet dinf = d_infinity(+1);
    IdealSet dminf = d_infinity(-1);
    IdealSet core = ideal_product(dinf, dminf);
    IdealSet forward = ideal_complement_in(dminf, core);
    IdealSet backward = ideal_complement_in(dinf, core);
    IdealSet rest = ideal_complement_in(
        IdealSet::full(algebra_), ideal_sum(core, ideal_sum(forward, backward)));
    return WoldDecomposition{core, forward, backward, rest};
}

Classification PartialSystem::classify() const
{
    Classification c;
    int n = block_count();
    IdealSet full = IdealSet::full(algebra_);

    for (int k = 1; k <= n + 1; ++k) {
        if (ideal_d(k).is_empty()) {
            c.nilpotent = true;
            c.nilpotency_index = k;
            break;
        }
    }

    // Lemma: D_n = 0  <=>  D_{-n} = 0  <=>  D_{n-1}D_{-1} = 0  <=>  D_{1-n}D_1 = 0.
    for (int k = 1; k <= n + 1; ++k) {
        bool a = ideal_d(k).is_empty();
        bool b = ideal_d(-k).is_empty();
        bool p = ideal_product(ideal_d(k - 1), ideal_d(-1)).is_empty();
        bool q = ideal_product(ideal_d(1 - k), ideal_d(1)).is_empty();
        if (a != b || a != p || a != q)
            c.nilpotent_lemma_ok = false;
    }

    bool all_neg_full = true, all_pos_full = true;
    for (int k = 1; k <= n + 1; ++k) {
        if (ideal_d(-k) != full)
            all_neg_full = false;
        if (ideal_d(k) != full)
            all_pos_full = false;
    }
    c.forward_shift = all_neg_full && d_infinity(+1).is_empty();
    c.backward_shift = all_pos_full && d_infinity(-1).is_empty();
    c.completely_nonautomorphic = ideal_product(d_infinity(+1), d_infinity(-1)).is_empty();
    c.automorphism =
        int(map_.domain().size()) == block_count() && int(map_.range().size()) == block_count();
    return c;
}

OrbitDecomposition PartialSystem::orbits() const
{
    OrbitDecomposition dec;
    int n = block_count();
    std::vector<bool> seen(size_t(n), false);
    PartialInjection inv = map_.inverse();

    // Chains start outside the range of the map.
    for (int start = 0; start < n; ++start) {
        if (seen[size_t(start)] || inv.defined(start))
            continue;
        Orbit o;
        o.kind = Orbit::Kind::chain;
        o.block_dim = algebra_->dim_of(start);
        for (int cur = start; cur >= 0; cur = map_.apply(cur)) {
            o.blocks.push_back(cur);
            seen[size_t(cur)] = true;
            if (!map_.defined(cur))
                break;
        }
        dec.orbits.push_back(std::move(o));
    }

    // Everything left lies on a cycle.
    for (int start = 0; start < n; ++start) {
        if (seen[size_t(start)])
            continue;
        Orbit o;
        o.kind = Orbit::Kind::cycle;
        o.block_dim = algebra_->dim_of(start);
        int cur = start;
        do {
            o.blocks.push_back(cur);
            seen[size_t(cur)] = true;
            cur = map_.apply(cur);
        } while (cur != start);
        dec.orbits.push_back(std::move(o));
    }
    return dec;
}

IdealSet PartialSystem::ladder_ideal(int n) const
{
    if (n < 2)
        throw std::invalid_argument("ladder ideal requires n >= 2");
    IdealSet acc = IdealSet::empty(algebra_);
    for (int j = 1; j <= n; ++j)
        acc = ideal_sum(acc, ideal_product(ideal_d(j - n), ideal_d(j - 1)));
    return acc;
}

SubquotientStructure PartialSystem::subquotient_structure(int n) const
{
    if (n < 2)
        throw std::invalid_argument("subquotient structure requires n >= 2");
    SubquotientStructure out;
    out.n = n;
    out.copies = n;
    out.ladder = ladder_ideal(n);
    out.ladder_next = ladder_ideal(n + 1);

    // The subquotient I_n / I_{n+1} lives on I_n \ I_{n+1}.
    PartialSystem restricted = restrict_to(out.ladder);
    IdealSet next_inside(restricted.algebra(), [&] {
        std::vector<int> members;
        for (int i = 0; i < restricted.block_count(); ++i)
            if (out.ladder_next.contains(
                    *algebra_->index_of(restricted.algebra()->id_of(i))))
                members.push_back(i);
        return members;
    }());
    out.subquotient = std::make_shared<PartialSystem>(restricted.quotient_by(next_inside));

    const PartialSystem &sq = *out.subquotient;
    // base = D_{n-1} \ (D_n + D_{n-1}D_{-1}), taken inside the subquotient.
    IdealSet dn1 = sq.ideal_d(n - 1);
    IdealSet removed = ideal_sum(sq.ideal_d(n), ideal_product(dn1, sq.ideal_d(-1)));
    out.base = ideal_complement_in(dn1, ideal_product(dn1, removed));

    // Copy j of the base is f^{j-1} f^{1-n}(base); the witness sends
    // (base block, j) to its block in copy j.
    std::set<int> covered;
    bool total = true;
    for (int b : out.base.members()) {
        for (int j = 1; j <= n; ++j) {
            PartialInjection step = sq.power(j - 1).compose(sq.power(1 - n));
            int img = step.defined(b) ? step.apply(b) : -1;
            if (img < 0) {
                total = false;
                continue;
            }
            out.witness[{b, j}] = img;
            covered.insert(img);
        }
    }
    out.witness_bijective = total &&
                            int(out.witness.size()) == out.base.count() * n &&
                            int(covered.size()) == sq.block_count() &&
                            int(out.witness.size()) == int(covered.size());

    // The map must carry copy j into copy j+1.
    out.witness_intertwines = true;
    for (const auto &[key, img] : out.witness) {
        auto [b, j] = key;
        int next = sq.map().defined(img) ? sq.map().apply(img) : -1;
        auto it = out.witness.find({b, j + 1});
        int expected = it == out.witness.end() ? -1 : it->second;
        if (next != expected)
            out.witness_intertwines = false;
    }
    return out;
}

EventuallyConstantReport PartialSystem::eventually_constant_checks() const
{
    EventuallyConstantReport rep;
    int n = block_count();

    int up = 0;
    while (up <= n && ideal_d(up) != ideal_d(up + 1))
        ++up;
    rep.stabilization_up = up;

    int down = 0;
    while (down >= -n && ideal_d(down) != ideal_d(down - 1))
        --down;
    rep.stabilization_down = down;

    for (int k = up; k <= n + 2; ++k)
        if (ideal_d(k) != ideal_d(up))
            rep.constant_beyond_ok = false;
    for (int k = down; k >= -n - 2; --k)
        if (ideal_d(k) != ideal_d(down))
            rep.constant_beyond_ok = false;

    // If n < 0 and f(D_n) is inside D_n, then D_n = D_{n-1}.
    for (int k = -1; k >= -n - 1; --k) {
        IdealSet dk = ideal_d(k);
        if (subset_of(apply_power(1, ideal_product(dk, ideal_d(-1))), dk) &&
            dk != ideal_d(k - 1))
            rep.invariant_implies_constant_ok = false;
    }

    rep.symmetry_ok = (rep.stabilization_down == -rep.stabilization_up);

    IdealSet stable = ideal_d(rep.stabilization_down);
    PartialSystem core = restrict_to(stable);
    rep.restriction_bijective = core.classify().automorphism;
    return rep;
}

PartialSystem PartialSystem::tensor_with_block(long d) const
{
    if (d < 1)
        throw std::invalid_argument("tensor factor dimension must be >= 1");
    std::vector<Block> blocks = algebra_->blocks();
    for (Block &b : blocks)
        b.dim *= d;
    return PartialSystem(make_algebra(std::move(blocks)), map_);
}

}  // namespace paut
