#include "paut/star_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace paut {

RowSpan::SparseVec RowSpan::flatten(const Matrix<GaussQ> &m)
{
    SparseVec v;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                v[r * m.cols() + c] = m(r, c);
    return v;
}

RowSpan::SparseVec RowSpan::reduce(SparseVec v) const
{
    for (const auto &[pivot, row_idx] : row_of_pivot_) {
        auto it = v.find(pivot);
        if (it == v.end())
            continue;
        GaussQ coef = it->second;
        const SparseVec &row = rows_[size_t(row_idx)];
        for (const auto &[pos, val] : row) {
            auto vt = v.find(pos);
            if (vt == v.end()) {
                v[pos] = -(coef * val);
            } else {
                vt->second -= coef * val;
                if (vt->second.is_zero())
                    v.erase(vt);
            }
        }
    }
    return v;
}

bool RowSpan::add(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    int pivot = v.begin()->first;
    GaussQ lead = v.begin()->second;
    for (auto &[pos, val] : v)
        val = val / lead;

    // Back-substitute so the basis stays in reduced echelon form.
    for (SparseVec &row : rows_) {
        auto it = row.find(pivot);
        if (it == row.end())
            continue;
        GaussQ coef = it->second;
        for (const auto &[pos, val] : v) {
            auto rt = row.find(pos);
            if (rt == row.end()) {
                row[pos] = -(coef * val);
            } else {
                rt->second -= coef * val;
                if (rt->second.is_zero())
                    row.erase(rt);
            }
        }
    }

    int idx = int(rows_.size());
    rows_.push_back(std::move(v));
    row_of_pivot_[pivot] = idx;

    // Keep rows sorted by pivot.
    std::vector<SparseVec> sorted;
    sorted.reserve(rows_.size());
    for (auto &[p, i] : row_of_pivot_)
        sorted.push_back(std::move(rows_[size_t(i)]));
    rows_ = std::move(sorted);
    int k = 0;
    for (auto &[p, i] : row_of_pivot_)
        i = k++;
    return true;
}

std::optional<std::vector<GaussQ>> RowSpan::express(SparseVec v) const
{
    std::vector<GaussQ> coords(rows_.size());
    for (const auto &[pivot, row_idx] : row_of_pivot_) {
        auto it = v.find(pivot);
        if (it == v.end())
            continue;
        GaussQ coef = it->second;
        coords[size_t(row_idx)] = coef;
        const SparseVec &row = rows_[size_t(row_idx)];
        for (const auto &[pos, val] : row) {
            auto vt = v.find(pos);
            if (vt == v.end()) {
                v[pos] = -(coef * val);
            } else {
                vt->second -= coef * val;
                if (vt->second.is_zero())
                    v.erase(vt);
            }
        }
    }
    if (!v.empty())
        return std::nullopt;
    return coords;
}

MatrixStarAlgebra saturate(const std::vector<Matrix<GaussQ>> &generators)
{
    MatrixStarAlgebra alg;
    if (generators.empty())
        return alg;
    alg.ambient_dim = generators.front().rows();
    for (const Matrix<GaussQ> &g : generators)
        if (g.rows() != alg.ambient_dim || g.cols() != alg.ambient_dim)
            throw std::invalid_argument("saturate: generators must be square of equal size");

    for (const Matrix<GaussQ> &g : generators)
        alg.span.add(RowSpan::flatten(g));

    auto unflatten = [&](const RowSpan::SparseVec &v) {
        Matrix<GaussQ> m(alg.ambient_dim, alg.ambient_dim);
        for (const auto &[pos, val] : v)
            m(pos / alg.ambient_dim, pos % alg.ambient_dim) = val;
        return m;
    };

    // Adjoints first, then products, until a full round adds nothing.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix<GaussQ>> current;
        current.reserve(size_t(alg.span.dim()));
        for (const auto &row : alg.span.rows())
            current.push_back(unflatten(row));
        for (const Matrix<GaussQ> &m : current)
            grew |= alg.span.add(RowSpan::flatten(m.adjoint()));
        for (const Matrix<GaussQ> &a : current)
            for (const Matrix<GaussQ> &b : current)
                grew |= alg.span.add(RowSpan::flatten(a * b));
    }

    alg.basis.clear();
    for (const auto &row : alg.span.rows())
        alg.basis.push_back(unflatten(row));
    return alg;
}

namespace {

using Coords = std::vector<GaussQ>;

// Coefficients a with sum a_i vecs_i = target, if target lies in the span.
std::optional<Coords> solve_combination(const std::vector<Coords> &vecs, const Coords &target)
{
    size_t m = vecs.size();
    size_t w = target.size();
    if (m == 0) {
        for (const GaussQ &c : target)
            if (!c.is_zero())
                return std::nullopt;
        return Coords{};
    }
    std::vector<Coords> rows(w, Coords(m + 1));
    for (size_t p = 0; p < w; ++p) {
        for (size_t i = 0; i < m; ++i)
            rows[p][i] = vecs[i][p];
        rows[p][m] = target[p];
    }
    std::vector<int> pivot_col_of_row;
    size_t rank = 0;
    for (size_t col = 0; col <= m && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        GaussQ inv = GaussQ(1) / rows[rank][col];
        for (size_t j = col; j <= m; ++j)
            rows[rank][j] = rows[rank][j] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            GaussQ f = rows[r][col];
            for (size_t j = col; j <= m; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        pivot_col_of_row.push_back(int(col));
        ++rank;
    }
    Coords sol(m);
    for (size_t r = 0; r < rank; ++r) {
        int pc = pivot_col_of_row[r];
        if (pc == int(m))
            return std::nullopt;  // inconsistent
        sol[size_t(pc)] = rows[r][m];
    }
    return sol;
}

std::vector<Coords> nullspace(std::vector<Coords> rows, size_t width)
{
    std::vector<int> pivot_col_of_row;
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero())
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        GaussQ inv = GaussQ(1) / rows[rank][col];
        for (size_t j = col; j < width; ++j)
            rows[rank][j] = rows[rank][j] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            GaussQ f = rows[r][col];
            for (size_t j = col; j < width; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        pivot_col_of_row.push_back(int(col));
        ++rank;
    }
    std::set<int> pivots(pivot_col_of_row.begin(), pivot_col_of_row.end());
    std::vector<Coords> basis;
    for (size_t freec = 0; freec < width; ++freec) {
        if (pivots.count(int(freec)))
            continue;
        Coords v(width);
        v[freec] = GaussQ(1);
        for (size_t r = 0; r < rank; ++r)
            v[size_t(pivot_col_of_row[r])] = -rows[r][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Multiplication in basis coordinates through the structure constants.
struct CoordAlgebra {
    int d = 0;
    std::vector<std::map<int, GaussQ>> lambda;  // lambda[i*d+j]: coords of b_i b_j
    std::vector<Coords> star_of;                // coords of b_i^*

    Coords mul(const Coords &x, const Coords &y) const
    {
        Coords out(size_t(d));
        for (int i = 0; i < d; ++i) {
            if (x[size_t(i)].is_zero())
                continue;
            for (int j = 0; j < d; ++j) {
                if (y[size_t(j)].is_zero())
                    continue;
                GaussQ f = x[size_t(i)] * y[size_t(j)];
                for (const auto &[k, lam] : lambda[size_t(i * d + j)])
                    out[size_t(k)] += f * lam;
            }
        }
        return out;
    }

    Coords star(const Coords &x) const
    {
        Coords out(size_t(d));
        for (int i = 0; i < d; ++i) {
            if (x[size_t(i)].is_zero())
                continue;
            GaussQ c = paut::star(x[size_t(i)]);
            for (int k = 0; k < d; ++k)
                out[size_t(k)] += c * star_of[size_t(i)][size_t(k)];
        }
        return out;
    }

    static bool is_zero(const Coords &x)
    {
        for (const GaussQ &c : x)
            if (!c.is_zero())
                return false;
        return true;
    }
};

std::optional<CoordAlgebra> build_coord_algebra(const MatrixStarAlgebra &alg)
{
    CoordAlgebra ca;
    ca.d = alg.dim();
    ca.lambda.resize(size_t(ca.d) * size_t(ca.d));
    ca.star_of.resize(size_t(ca.d));
    for (int i = 0; i < ca.d; ++i) {
        auto coords = alg.span.express(RowSpan::flatten(alg.basis[size_t(i)].adjoint()));
        if (!coords)
            return std::nullopt;
        ca.star_of[size_t(i)] = std::move(*coords);
        for (int j = 0; j < ca.d; ++j) {
            auto prod = alg.span.express(
                RowSpan::flatten(alg.basis[size_t(i)] * alg.basis[size_t(j)]));
            if (!prod)
                return std::nullopt;
            std::map<int, GaussQ> sparse;
            for (int k = 0; k < ca.d; ++k)
                if (!(*prod)[size_t(k)].is_zero())
                    sparse[k] = (*prod)[size_t(k)];
            ca.lambda[size_t(i * ca.d + j)] = std::move(sparse);
        }
    }
    return ca;
}

RowSpan::SparseVec to_sparse(const Coords &v)
{
    RowSpan::SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            s[int(i)] = v[i];
    return s;
}

// Rational roots of a polynomial with rational coefficients (lowest degree
// first): divisor pairs of the cleared constant and leading coefficients,
// plus a fixed small-fraction sweep.  Deterministic and bounded; roots the
// search misses only mean a coarser (still exact) splitting, caught by the
// minimality check.
std::vector<Rational> rational_roots(const std::vector<Rational> &poly)
{
    std::vector<Rational> roots;
    if (poly.empty())
        return roots;

    auto eval = [&](const Rational &r) {
        Rational acc(0);
        for (size_t i = poly.size(); i-- > 0;)
            acc = acc * r + poly[i];
        return acc;
    };

    size_t low = 0;
    while (low < poly.size() && poly[low] == 0)
        ++low;
    if (low == poly.size())
        return roots;
    if (low > 0)
        roots.push_back(Rational(0));

    mpz_class common(1);
    for (size_t i = low; i < poly.size(); ++i)
        common = lcm(common, poly[i].get_den());
    mpz_class a0 = abs(poly[low].get_num() * (common / poly[low].get_den()));
    mpz_class an = abs(poly.back().get_num() * (common / poly.back().get_den()));

    auto divisors = [](const mpz_class &n) {
        std::vector<mpz_class> divs;
        if (n == 0)
            return divs;
        mpz_class i(1);
        while (i * i <= n && divs.size() < 4096 && i < 100000) {
            if (n % i == 0) {
                divs.push_back(i);
                if (i * i != n)
                    divs.push_back(n / i);
            }
            ++i;
        }
        return divs;
    };

    std::set<Rational> seen;
    auto try_root = [&](Rational r) {
        r.canonicalize();
        if (!seen.insert(r).second)
            return;
        if (eval(r) == 0)
            roots.push_back(r);
    };

    for (const mpz_class &p : divisors(a0))
        for (const mpz_class &q : divisors(an)) {
            try_root(Rational(p, q));
            try_root(Rational(-p, q));
        }
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 12; ++den)
            try_root(Rational(num, den));
    return roots;
}

}  // namespace

WedderburnResult wedderburn(const MatrixStarAlgebra &alg)
{
    WedderburnResult res;
    int d = alg.dim();
    if (d == 0) {
        res.ok = true;
        return res;
    }

    auto ca_opt = build_coord_algebra(alg);
    if (!ca_opt) {
        res.failure = "algebra is not saturated (product or adjoint escapes the span)";
        return res;
    }
    const CoordAlgebra &ca = *ca_opt;

    // Unit: e * b_i = b_i * e = b_i for every basis element.
    Coords unit;
    {
        std::vector<Coords> vecs(size_t(d), Coords(size_t(2 * d * d)));
        Coords target(size_t(2 * d * d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                for (const auto &[k, lam] : ca.lambda[size_t(i * d + j)])
                    vecs[size_t(i)][size_t(j * d + k)] = lam;  // (e b_j)_k
                for (const auto &[k, lam] : ca.lambda[size_t(j * d + i)])
                    vecs[size_t(i)][size_t(d * d + j * d + k)] = lam;  // (b_j e)_k
            }
        for (int j = 0; j < d; ++j) {
            target[size_t(j * d + j)] = GaussQ(1);
            target[size_t(d * d + j * d + j)] = GaussQ(1);
        }
        auto sol = solve_combination(vecs, target);
        if (!sol) {
            res.failure = "algebra has no unit over the exact field";
            return res;
        }
        unit = std::move(*sol);
    }

    // Center: nullspace of the commutator constraints against the basis.
    std::vector<Coords> center;
    {
        std::vector<Coords> constraint_rows;
        for (int j = 0; j < d; ++j) {
            std::vector<Coords> rows(size_t(d), Coords(size_t(d)));
            for (int i = 0; i < d; ++i) {
                for (const auto &[k, lam] : ca.lambda[size_t(i * d + j)])
                    rows[size_t(k)][size_t(i)] += lam;
                for (const auto &[k, lam] : ca.lambda[size_t(j * d + i)])
                    rows[size_t(k)][size_t(i)] -= lam;
            }
            for (Coords &r : rows)
                if (!CoordAlgebra::is_zero(r))
                    constraint_rows.push_back(std::move(r));
        }
        center = nullspace(std::move(constraint_rows), size_t(d));
    }

    // Self-adjoint central elements drive the spectral splitting.
    std::vector<Coords> candidates;
    for (const Coords &z : center) {
        Coords zs = ca.star(z);
        Coords h1(size_t(d)), h2(size_t(d));
        for (int i = 0; i < d; ++i) {
            h1[size_t(i)] = z[size_t(i)] + zs[size_t(i)];
            h2[size_t(i)] = (zs[size_t(i)] - z[size_t(i)]) * GaussQ(0, 1);
        }
        if (!CoordAlgebra::is_zero(h1))
            candidates.push_back(std::move(h1));
        if (!CoordAlgebra::is_zero(h2))
            candidates.push_back(std::move(h2));
    }

    std::vector<Coords> idempotents{unit};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Coords &h : candidates) {
            std::vector<Coords> next;
            for (const Coords &q : idempotents) {
                Coords p = ca.mul(h, q);
                // Minimal polynomial of p in the corner with identity q.
                std::vector<Coords> powers{q};
                std::vector<GaussQ> dep;
                while (true) {
                    Coords nxt = ca.mul(p, powers.back());
                    auto sol = solve_combination(powers, nxt);
                    if (sol) {
                        dep = std::move(*sol);
                        break;
                    }
                    powers.push_back(std::move(nxt));
                }
                if (powers.size() <= 1) {
                    next.push_back(q);  // p is a multiple of q; nothing to split
                    continue;
                }
                // monic minimal polynomial: t^m - sum dep_i t^i
                std::vector<Rational> poly(powers.size() + 1);
                bool rational_coeffs = true;
                for (size_t i = 0; i < dep.size(); ++i) {
                    if (dep[i].im() != 0)
                        rational_coeffs = false;
                    poly[i] = -dep[i].re();
                }
                poly.back() = Rational(1);
                if (!rational_coeffs) {
                    next.push_back(q);
                    continue;
                }

                std::vector<Coords> pieces;
                Coords remainder = q;
                for (const Rational &r : rational_roots(poly)) {
                    // mu(t) = (t - r) g(t); eigenprojection g(p)/g(r).
                    std::vector<Rational> g(poly.size() - 1);
                    Rational carry(0);
                    for (size_t i = poly.size(); i-- > 1;) {
                        carry = poly[i] + carry * r;
                        g[i - 1] = carry;
                    }
                    Rational gr(0);
                    for (size_t i = g.size(); i-- > 0;)
                        gr = gr * r + g[i];
                    if (gr == 0)
                        continue;  // repeated root
                    Coords proj(size_t(d));
                    Coords power = q;
                    for (size_t i = 0; i < g.size(); ++i) {
                        GaussQ c(g[i] / gr);
                        for (int k = 0; k < d; ++k)
                            proj[size_t(k)] += power[size_t(k)] * c;
                        power = ca.mul(power, p);
                    }
                    if (CoordAlgebra::is_zero(proj))
                        continue;
                    if (ca.mul(proj, proj) != proj)
                        continue;  // exactness guard
                    for (int k = 0; k < d; ++k)
                        remainder[size_t(k)] -= proj[size_t(k)];
                    pieces.push_back(std::move(proj));
                }
                size_t piece_count = pieces.size() + (CoordAlgebra::is_zero(remainder) ? 0 : 1);
                if (pieces.empty() || piece_count < 2) {
                    next.push_back(q);
                    continue;
                }
                changed = true;
                for (Coords &piece : pieces)
                    next.push_back(std::move(piece));
                if (!CoordAlgebra::is_zero(remainder))
                    next.push_back(std::move(remainder));
            }
            idempotents = std::move(next);
        }
    }

    // Exactness: the pieces must be orthogonal idempotents summing to the unit.
    {
        Coords sum(size_t(d));
        for (const Coords &q : idempotents) {
            if (ca.mul(q, q) != q) {
                res.failure = "internal: spectral splitting produced a non-idempotent";
                return res;
            }
            for (int k = 0; k < d; ++k)
                sum[size_t(k)] += q[size_t(k)];
        }
        for (size_t a = 0; a < idempotents.size(); ++a)
            for (size_t b = 0; b < idempotents.size(); ++b)
                if (a != b && !CoordAlgebra::is_zero(ca.mul(idempotents[a], idempotents[b]))) {
                    res.failure = "internal: spectral splitting produced non-orthogonal pieces";
                    return res;
                }
        if (sum != unit) {
            res.failure = "internal: spectral pieces do not sum to the unit";
            return res;
        }
    }

    // Minimality: the corner of the center over each idempotent must be
    // one-dimensional, else the center did not split over Q(i).
    for (const Coords &q : idempotents) {
        RowSpan corner;
        corner.add(to_sparse(q));
        for (const Coords &z : center)
            corner.add(to_sparse(ca.mul(z, q)));
        if (corner.dim() != 1) {
            res.failure =
                "indecomposable over exact field: a central summand has no rational "
                "spectral splitting";
            return res;
        }
    }

    // Block sizes: each minimal central ideal q*A is a full matrix algebra,
    // so its linear dimension is a perfect square.
    long total = 0;
    for (const Coords &q : idempotents) {
        RowSpan ideal;
        for (int i = 0; i < d; ++i) {
            Coords e(size_t(d));
            e[size_t(i)] = GaussQ(1);
            ideal.add(to_sparse(ca.mul(q, e)));
        }
        long dim_q = ideal.dim();
        mpz_class n2(dim_q);
        if (!mpz_perfect_square_p(n2.get_mpz_t())) {
            std::ostringstream os;
            os << "indecomposable over exact field: central summand of dimension " << dim_q
               << " is not a square";
            res.failure = os.str();
            return res;
        }
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n2.get_mpz_t());
        res.block_sizes.push_back(root.get_si());
        total += dim_q;
    }
    if (total != d) {
        res.failure = "internal: central ideals do not exhaust the algebra";
        return res;
    }
    std::sort(res.block_sizes.rbegin(), res.block_sizes.rend());
    res.ok = true;
    return res;
}

}  // namespace paut
