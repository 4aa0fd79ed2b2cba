#pragma once

#include "affh/laurent_poly.hpp"
#include "affh/series.hpp"

#include <map>
#include <string>

namespace affh {

/// Fraction num / Π f^e of Laurent polynomials in v and torus characters.
/// Each denominator factor f is normalized: no monomial content and a positive
/// lex-leading coefficient; the units removed from f are moved into num.
/// Factors are never split, so distinct factors need not be coprime.
class RationalClass {
public:
    explicit RationalClass(int torus_rank = 0) : num_(torus_rank) {}
    RationalClass(const LaurentPoly& p) : num_(p) {}

    static RationalClass fraction(const LaurentPoly& num, const LaurentPoly& den)
    {
        RationalClass r(num);
        r.divide_by(den);
        return r;
    }

    int torus_rank() const { return num_.torus_rank(); }
    const LaurentPoly& num() const { return num_; }
    const std::map<LaurentPoly, int>& den_factors() const { return den_; }

    LaurentPoly den() const
    {
        LaurentPoly d(torus_rank(), 1);
        for (auto& [f, e] : den_) d *= f.pow(e);
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    LaurentPoly polynomial() const
    {
        if (!den_.empty()) throw Error("rational class is not a Laurent polynomial");
        return num_;
    }

    /// Divide by a nonzero polynomial, cancelling whatever divides exactly.
    RationalClass& divide_by(const LaurentPoly& d)
    {
        if (d.is_zero()) throw Error("division by zero factor");
        auto [mono, f] = strip_monomial(d);
        for (auto& m : mono) m = -m;
        num_ *= LaurentPoly::monomial(mono);
        if (f.terms().rbegin()->second < 0) {
            f = -f;
            num_ = -num_;
        }
        if (f.is_monomial()) {
            // f is a positive integer constant.
            auto c = f.terms().begin()->second;
            if (c != 1) {
                auto q = exact_divide(num_, f);
                if (q) num_ = *q;
                else den_[f] += 1;
            }
            return *this;
        }
        auto q = exact_divide(num_, f);
        if (q) num_ = *q;
        else den_[f] += 1;
        return *this;
    }

    friend RationalClass operator*(const RationalClass& a, const RationalClass& b)
    {
        RationalClass r(a.num_ * b.num_);
        r.den_ = a.den_;
        for (auto& [f, e] : b.den_) r.den_[f] += e;
        r.cancel();
        return r;
    }

    friend RationalClass operator+(const RationalClass& a, const RationalClass& b)
    {
        std::map<LaurentPoly, int> common = a.den_;
        for (auto& [f, e] : b.den_) common[f] = std::max(common[f], e);
        auto lift = [&](const RationalClass& x) {
            LaurentPoly n = x.num_;
            for (auto& [f, e] : common) {
                auto it = x.den_.find(f);
                int have = it == x.den_.end() ? 0 : it->second;
                n *= f.pow(e - have);
            }
            return n;
        };
        RationalClass r(lift(a) + lift(b));
        r.den_ = common;
        r.cancel();
        return r;
    }
    RationalClass operator-() const
    {
        RationalClass r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalClass operator-(const RationalClass& a, const RationalClass& b) { return a + (-b); }
    RationalClass& operator+=(const RationalClass& o) { return *this = *this + o; }
    RationalClass& operator*=(const RationalClass& o) { return *this = *this * o; }

    /// Multiplicative inverse; num becomes a denominator factor.
    RationalClass inverse() const
    {
        if (num_.is_zero()) throw Error("division by zero factor");
        RationalClass r(den());
        r.divide_by(num_);
        return r;
    }
    friend RationalClass operator/(const RationalClass& a, const RationalClass& b) { return a * b.inverse(); }

    friend bool operator==(const RationalClass& a, const RationalClass& b)
    {
        return a.num_ * b.den() == b.num_ * a.den();
    }
    friend bool operator!=(const RationalClass& a, const RationalClass& b) { return !(a == b); }

    RationalClass bar_v() const { return map_coeffs([](const LaurentPoly& p) { return p.bar_v(); }); }
    RationalClass dual_all() const { return map_coeffs([](const LaurentPoly& p) { return p.dual_all(); }); }
    RationalClass invert_chars() const { return map_coeffs([](const LaurentPoly& p) { return p.invert_chars(); }); }
    RationalClass substitute(const std::map<int, long long>& vals) const
    {
        RationalClass r(num_.substitute(vals));
        LaurentPoly d = den().substitute(vals);
        if (d.is_zero()) throw Error("denominator vanishes at the evaluation point");
        r.divide_by(d);
        return r;
    }

    Rational eval_at(const std::vector<long long>& values) const
    {
        Rational d = den().eval_at(values);
        if (d == 0) throw Error("denominator vanishes at the evaluation point");
        return num_.eval_at(values) / d;
    }

    /// The denominator is expandable at v = ∞ when its top-v part is ± a character monomial.
    bool expandable() const
    {
        for (auto& [f, e] : den_) {
            LaurentPoly top = f.v_coeff(*f.max_v());
            if (!top.is_monomial()) return false;
            auto c = top.terms().begin()->second;
            if (c != 1 && c != -1) return false;
        }
        return true;
    }

    SeriesTrunc expand(int N = 12) const
    {
        if (!expandable()) throw Error("not expandable at v = infinity");
        return expand_quotient(num_, den(), N);
    }

    std::string str() const
    {
        if (den_.empty()) return num_.str();
        std::string s = "(" + num_.str() + ")/(";
        bool first = true;
        for (auto& [f, e] : den_) {
            if (!first) s += "*";
            first = false;
            s += "(" + f.str() + ")";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s + ")";
    }

private:
    template <class F>
    RationalClass map_coeffs(F fn) const
    {
        RationalClass r(fn(num_));
        for (auto& [f, e] : den_)
            for (int k = 0; k < e; ++k) r.divide_by(fn(f));
        return r;
    }

    void cancel()
    {
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = exact_divide(num_, it->first);
                if (!q) break;
                num_ = *q;
                --it->second;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
        if (num_.is_zero()) den_.clear();
    }

    LaurentPoly num_;
    std::map<LaurentPoly, int> den_;
};

/// ∇ = exterior_class(zgf) / exterior_class(h).
inline RationalClass nabla_e(const std::vector<LaurentPoly>& zgf_weights, const std::vector<LaurentPoly>& h_weights,
                             int torus_rank)
{
    RationalClass r(exterior_class(zgf_weights, torus_rank));
    for (auto& m : h_weights) {
        LaurentPoly f = LaurentPoly(torus_rank, 1) - m;
        if (f.is_zero()) throw Error("division by zero factor: trivial weight in h");
        r.divide_by(f);
    }
    return r;
}

} // namespace affh
