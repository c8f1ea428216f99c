#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>

namespace paut {

using Rational = mpq_class;

/// Gaussian rational: re + im*i with exact rational components.
class GaussQ {
public:
    GaussQ() : re_(0), im_(0) {}
    GaussQ(Rational re) : re_(std::move(re)), im_(0) {}
    GaussQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussQ(long re) : re_(re), im_(0) {}
    GaussQ(long re, long im) : re_(re), im_(im) {}

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussQ operator+(const GaussQ &o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussQ operator-(const GaussQ &o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussQ operator-() const { return {-re_, -im_}; }

    GaussQ operator*(const GaussQ &o) const
    {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }

    GaussQ operator/(const GaussQ &o) const
    {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }

    GaussQ &operator+=(const GaussQ &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }

    GaussQ &operator-=(const GaussQ &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    bool operator==(const GaussQ &o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussQ &o) const { return !(*this == o); }

    friend std::ostream &operator<<(std::ostream &os, const GaussQ &x)
    {
        if (x.im_ == 0)
            return os << x.re_;
        if (x.re_ == 0)
            return os << x.im_ << "i";
        return os << x.re_ << (x.im_ > 0 ? "+" : "") << x.im_ << "i";
    }

private:
    Rational re_, im_;
};

inline GaussQ star(const GaussQ &x) { return {x.re(), -x.im()}; }

/// Laurent polynomial in one unitary variable z over GaussQ.  The involution
/// sends z to z^{-1} and conjugates coefficients.
class Laurent {
public:
    Laurent() = default;
    Laurent(GaussQ c)
    {
        if (!c.is_zero())
            coeffs_[0] = std::move(c);
    }
    Laurent(long c) : Laurent(GaussQ(c)) {}

    static Laurent monomial(int exp, GaussQ c = GaussQ(1))
    {
        Laurent p;
        if (!c.is_zero())
            p.coeffs_[exp] = std::move(c);
        return p;
    }

    const std::map<int, GaussQ> &coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const
    {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    GaussQ constant_term() const
    {
        auto it = coeffs_.find(0);
        return it == coeffs_.end() ? GaussQ() : it->second;
    }

    Laurent operator+(const Laurent &o) const
    {
        Laurent r = *this;
        for (const auto &[e, c] : o.coeffs_)
            r.add_term(e, c);
        return r;
    }

    Laurent operator-(const Laurent &o) const
    {
        Laurent r = *this;
        for (const auto &[e, c] : o.coeffs_)
            r.add_term(e, -c);
        return r;
    }

    Laurent operator-() const
    {
        Laurent r;
        for (const auto &[e, c] : coeffs_)
            r.coeffs_[e] = -c;
        return r;
    }

    Laurent operator*(const Laurent &o) const
    {
        Laurent r;
        for (const auto &[e1, c1] : coeffs_)
            for (const auto &[e2, c2] : o.coeffs_)
                r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    Laurent &operator+=(const Laurent &o)
    {
        for (const auto &[e, c] : o.coeffs_)
            add_term(e, c);
        return *this;
    }

    bool operator==(const Laurent &o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent &o) const { return !(*this == o); }

    friend std::ostream &operator<<(std::ostream &os, const Laurent &p)
    {
        if (p.coeffs_.empty())
            return os << "0";
        bool first = true;
        for (const auto &[e, c] : p.coeffs_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e != 0)
                os << "z^" << e;
        }
        return os;
    }

private:
    void add_term(int exp, const GaussQ &c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = coeffs_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    std::map<int, GaussQ> coeffs_;  // exponent -> nonzero coefficient
};

inline Laurent star(const Laurent &p)
{
    Laurent r;
    for (const auto &[e, c] : p.coeffs())
        r += Laurent::monomial(-e, star(c));
    return r;
}

}  // namespace paut
