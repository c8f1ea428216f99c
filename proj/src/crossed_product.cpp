#include "paut/crossed_product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paut {

AlgebraElement AlgebraElement::block_unit(const AlgebraPtr &algebra, int block)
{
    AlgebraElement e;
    e.set_block(algebra, block, Matrix<GaussQ>::identity(int(algebra->dim_of(block))));
    return e;
}

AlgebraElement AlgebraElement::matrix_unit(const AlgebraPtr &algebra, int block, int r, int c)
{
    Matrix<GaussQ> m(int(algebra->dim_of(block)), int(algebra->dim_of(block)));
    m(r, c) = GaussQ(1);
    AlgebraElement e;
    e.set_block(algebra, block, std::move(m));
    return e;
}

AlgebraElement AlgebraElement::projection(const IdealSet &ideal)
{
    AlgebraElement e;
    for (int b : ideal.members())
        e.set_block(ideal.parent(), b,
                    Matrix<GaussQ>::identity(int(ideal.parent()->dim_of(b))));
    return e;
}

void AlgebraElement::set_block(const AlgebraPtr &algebra, int block, Matrix<GaussQ> value)
{
    long d = algebra->dim_of(block);
    if (value.rows() != d || value.cols() != d)
        throw std::invalid_argument("block value has wrong shape");
    if (value.is_zero())
        comps_.erase(block);
    else
        comps_[block] = std::move(value);
}

std::vector<int> AlgebraElement::support() const
{
    std::vector<int> s;
    for (const auto &[b, m] : comps_)
        s.push_back(b);
    return s;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const
{
    AlgebraElement r = *this;
    for (const auto &[b, m] : o.comps_) {
        auto it = r.comps_.find(b);
        if (it == r.comps_.end()) {
            r.comps_[b] = m;
        } else {
            Matrix<GaussQ> sum = it->second + m;
            if (sum.is_zero())
                r.comps_.erase(it);
            else
                it->second = std::move(sum);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement &o) const
{
    AlgebraElement r;
    for (const auto &[b, m] : comps_) {
        auto it = o.comps_.find(b);
        if (it == o.comps_.end())
            continue;
        Matrix<GaussQ> prod = m * it->second;
        if (!prod.is_zero())
            r.comps_[b] = std::move(prod);
    }
    return r;
}

AlgebraElement AlgebraElement::adjoint() const
{
    AlgebraElement r;
    for (const auto &[b, m] : comps_)
        r.comps_[b] = m.adjoint();
    return r;
}

AlgebraElement AlgebraElement::mapped_by(const PartialInjection &f) const
{
    AlgebraElement r;
    for (const auto &[b, m] : comps_)
        if (f.defined(b))
            r.comps_[f.apply(b)] = m;
    return r;
}

void GradedElement::set_component(int degree, AlgebraElement value)
{
    if (value.is_zero())
        comps_.erase(degree);
    else
        comps_[degree] = std::move(value);
}

GradedElement GradedElement::operator+(const GradedElement &o) const
{
    GradedElement r = *this;
    for (const auto &[n, a] : o.comps_)
        r.set_component(n, r.comps_.count(n) ? r.comps_[n] + a : a);
    return r;
}

bool graded_support_ok(const PartialSystem &sys, const GradedElement &x)
{
    for (const auto &[n, a] : x.components()) {
        IdealSet dn = sys.ideal_d(n);
        for (int b : a.support())
            if (!dn.contains(b))
                return false;
    }
    return true;
}

GradedElement graded_multiply(const PartialSystem &sys, const GradedElement &x,
                              const GradedElement &y)
{
    GradedElement out;
    std::map<int, AlgebraElement> acc;
    for (const auto &[k, xk] : x.components()) {
        PartialInjection back = sys.power(-k);
        PartialInjection fwd = sys.power(k);
        for (const auto &[j, yj] : y.components()) {
            AlgebraElement term = (xk.mapped_by(back) * yj).mapped_by(fwd);
            if (term.is_zero())
                continue;
            int n = k + j;
            auto it = acc.find(n);
            if (it == acc.end())
                acc[n] = std::move(term);
            else
                it->second = it->second + term;
        }
    }
    for (auto &[n, a] : acc)
        out.set_component(n, std::move(a));
    return out;
}

GradedElement graded_adjoint(const PartialSystem &sys, const GradedElement &x)
{
    GradedElement out;
    for (const auto &[n, a] : x.components())
        out.set_component(-n, a.adjoint().mapped_by(sys.power(-n)));
    return out;
}

std::map<int, long> spectral_dims(const PartialSystem &sys, int window)
{
    if (window < 0)
        window = sys.block_count() + 1;
    std::map<int, long> dims;
    for (int n = -window; n <= window; ++n)
        dims[n] = sys.ideal_d(n).dim();
    return dims;
}

Matrix<Laurent> CovariantRep::pi(const AlgebraElement &a, const AlgebraPtr &algebra) const
{
    Matrix<Laurent> m(int(space_dim), int(space_dim));
    for (const auto &[b, val] : a.components()) {
        auto it = slot_of_block.find(b);
        if (it == slot_of_block.end())
            throw std::invalid_argument("element supported outside the orbit (block '" +
                                        algebra->id_of(b) + "')");
        int off = it->second;
        for (int r = 0; r < val.rows(); ++r)
            for (int c = 0; c < val.cols(); ++c)
                if (!val(r, c).is_zero())
                    m(off + r, off + c) = Laurent(val(r, c));
    }
    return m;
}

Matrix<Laurent> CovariantRep::pi_projection(const IdealSet &ideal) const
{
    Matrix<Laurent> m(int(space_dim), int(space_dim));
    for (int b : ideal.members()) {
        auto it = slot_of_block.find(b);
        if (it == slot_of_block.end())
            continue;
        long d = ideal.parent()->dim_of(b);
        for (int r = 0; r < d; ++r)
            m(it->second + r, it->second + r) = Laurent(GaussQ(1));
    }
    return m;
}

CovariantRep standard_rep(const PartialSystem &sys, const Orbit &orbit)
{
    CovariantRep rep;
    rep.orbit = orbit;
    long d = orbit.block_dim;
    int len = orbit.length();
    rep.space_dim = d * len;
    for (int j = 0; j < len; ++j)
        rep.slot_of_block[orbit.blocks[size_t(j)]] = int(d) * j;

    rep.u = Matrix<Laurent>(int(rep.space_dim), int(rep.space_dim));
    for (int j = 0; j + 1 < len; ++j)
        for (int r = 0; r < d; ++r)
            rep.u(int(d) * (j + 1) + r, int(d) * j + r) = Laurent(GaussQ(1));
    if (orbit.kind == Orbit::Kind::cycle)
        for (int r = 0; r < d; ++r)
            rep.u(r, int(d) * (len - 1) + r) = Laurent::monomial(1);
    (void)sys;
    return rep;
}

Matrix<Laurent> represent(const PartialSystem &sys, const CovariantRep &rep,
                          const GradedElement &x)
{
    Matrix<Laurent> out(int(rep.space_dim), int(rep.space_dim));
    for (const auto &[n, a] : x.components())
        out = out + rep.pi(a, sys.algebra()) * rep.u.isometry_power(n);
    return out;
}

void StructureDescriptor::add(SummandKind kind, long size)
{
    summands.push_back({kind, size});
    normalize();
}

void StructureDescriptor::normalize() { std::sort(summands.begin(), summands.end()); }

std::string to_string(SummandKind kind)
{
    switch (kind) {
    case SummandKind::finite_matrix: return "M";
    case SummandKind::circle_fibered: return "C(T,M)";
    case SummandKind::repeated_countably: return "c0(Z,M)";
    }
    return "?";
}

std::string StructureDescriptor::to_string() const
{
    if (summands.empty())
        return stable ? "0 (stable)" : "0";
    std::ostringstream os;
    bool first = true;
    for (const Summand &s : summands) {
        if (!first)
            os << " + ";
        first = false;
        switch (s.kind) {
        case SummandKind::finite_matrix: os << "M_" << s.size; break;
        case SummandKind::circle_fibered: os << "C(T, M_" << s.size << ")"; break;
        case SummandKind::repeated_countably: os << "c0(Z, M_" << s.size << ")"; break;
        }
    }
    if (stable)
        os << " (x) K(l2(Z))";
    return os.str();
}

StructureDescriptor structure(const PartialSystem &sys)
{
    StructureDescriptor d;
    for (const Orbit &o : sys.orbits().orbits) {
        long size = o.block_dim * o.length();
        d.summands.push_back({o.kind == Orbit::Kind::chain ? SummandKind::finite_matrix
                                                           : SummandKind::circle_fibered,
                              size});
    }
    d.normalize();
    return d;
}

RestrictedCrossedProduct restrict_crossed_product(const PartialSystem &sys,
                                                  const IdealSet &ideal)
{
    RestrictedCrossedProduct out;
    out.descriptor = structure(sys.restrict_to(ideal));
    int window = sys.block_count() + 1;
    for (int n = -window; n <= window; ++n)
        out.graded_dims[n] = ideal_product(ideal, sys.ideal_d(n)).dim();
    return out;
}

StructureDescriptor quotient_crossed_product(const PartialSystem &sys, const IdealSet &ideal)
{
    return structure(sys.quotient_by(ideal));
}

}  // namespace paut
