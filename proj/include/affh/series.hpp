#pragma once

#include "affh/laurent_poly.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>

namespace affh {

/// Truncated expansion in R_C((v^{-1})): Σ_e c_e v^e with c_e character polynomials.
/// Coefficients are known for every exponent e >= floor(); an exact series has no floor.
class SeriesTrunc {
public:
    explicit SeriesTrunc(int torus_rank = 0, std::optional<int> floor = std::nullopt)
        : nx_(torus_rank), floor_(floor) {}

    static SeriesTrunc exact(const LaurentPoly& p)
    {
        SeriesTrunc s(p.torus_rank());
        for (auto& [e, c] : p.terms()) {
            Exps f = e;
            f[0] = 0;
            s.c_.try_emplace(e[0], p.torus_rank()).first->second.add_term(f, c);
        }
        s.prune();
        return s;
    }

    int torus_rank() const { return nx_; }
    bool is_exact() const { return !floor_.has_value(); }
    std::optional<int> floor() const { return floor_; }

    LaurentPoly coeff(int e) const
    {
        if (floor_ && e < *floor_) throw Error("series coefficient below truncation order requested");
        auto it = c_.find(e);
        return it == c_.end() ? LaurentPoly(nx_) : it->second;
    }

    /// Highest exponent carrying a nonzero coefficient, if any.
    std::optional<int> lead() const
    {
        if (c_.empty()) return std::nullopt;
        return c_.rbegin()->first;
    }

    /// Nonzero coefficients in decreasing exponent order.
    const std::map<int, LaurentPoly>& coeffs() const { return c_; }

    SeriesTrunc truncated(int floor) const
    {
        SeriesTrunc s(nx_, floor_ ? std::max(*floor_, floor) : floor);
        for (auto& [e, c] : c_)
            if (e >= *s.floor_) s.c_[e] = c;
        return s;
    }

    friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b)
    {
        SeriesTrunc s(a.nx_, merge_floor(a.floor_, b.floor_));
        for (auto* src : {&a, &b})
            for (auto& [e, c] : src->c_)
                if (!s.floor_ || e >= *s.floor_) {
                    auto [it, fresh] = s.c_.try_emplace(e, c);
                    if (!fresh) it->second += c;
                }
        s.prune();
        return s;
    }
    SeriesTrunc operator-() const
    {
        SeriesTrunc s = *this;
        for (auto& kv : s.c_) kv.second = -kv.second;
        return s;
    }
    friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) { return a + (-b); }

    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b)
    {
        // The unknown tail of one factor (below its floor) pollutes exponents below
        // that floor plus the other factor's highest possibly-nonzero exponent.
        auto top = [](const SeriesTrunc& p) -> std::optional<int> {
            if (auto l = p.lead()) return l;
            if (p.floor_) return *p.floor_ - 1;
            return std::nullopt;
        };
        if ((a.is_exact() && a.c_.empty()) || (b.is_exact() && b.c_.empty())) return SeriesTrunc(a.nx_);
        std::optional<int> fl;
        if (a.floor_) fl = merge_floor(fl, *a.floor_ + *top(b));
        if (b.floor_) fl = merge_floor(fl, *b.floor_ + *top(a));
        SeriesTrunc s(a.nx_, fl);
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) {
                int e = ea + eb;
                if (s.floor_ && e < *s.floor_) continue;
                auto [it, fresh] = s.c_.try_emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        s.prune();
        return s;
    }

    /// Equality on the common known window.
    friend bool agree(const SeriesTrunc& a, const SeriesTrunc& b)
    {
        auto fl = merge_floor(a.floor_, b.floor_);
        int lo = INT_MAX, hi = INT_MIN;
        for (auto* s : {&a, &b})
            for (auto& kv : s->c_) {
                lo = std::min(lo, kv.first);
                hi = std::max(hi, kv.first);
            }
        if (lo > hi) return true;
        if (fl) lo = std::max(lo, *fl);
        for (int e = lo; e <= hi; ++e)
            if (a.coeff(e) != b.coeff(e)) return false;
        return true;
    }

    std::string str() const
    {
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.str() + ")*v^" + std::to_string(it->first);
        }
        if (s.empty()) s = "0";
        if (floor_) s += " + O(v^" + std::to_string(*floor_ - 1) + ")";
        return s;
    }

private:
    static std::optional<int> merge_floor(std::optional<int> a, std::optional<int> b)
    {
        if (!a) return b;
        if (!b) return a;
        return std::max(*a, *b);
    }
    void prune()
    {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->second.is_zero()) it = c_.erase(it);
            else ++it;
        }
    }

    int nx_;
    std::optional<int> floor_;
    std::map<int, LaurentPoly> c_;
};

/// Expand num/den in v^{-1}, keeping every exponent >= -N.
/// The top-v part of den must be ±(character monomial)·v^d.
inline SeriesTrunc expand_quotient(const LaurentPoly& num, const LaurentPoly& den, int N)
{
    if (den.is_zero()) throw Error("division by zero in series expansion");
    const int nx = den.torus_rank();
    const int d = *den.max_v();
    LaurentPoly top = den.v_coeff(d);
    if (!top.is_monomial() || (top.terms().begin()->second != 1 && top.terms().begin()->second != -1))
        throw Error("not expandable at v = infinity");
    // top^{-1} is ± the inverse character monomial.
    LaurentPoly top_inv = LaurentPoly::monomial(top.terms().begin()->first, top.terms().begin()->second).dual_all();
    SeriesTrunc dser = SeriesTrunc::exact(den);
    SeriesTrunc out(nx, -N);
    if (num.is_zero()) return out;
    std::map<int, LaurentPoly> rem = SeriesTrunc::exact(num).coeffs();
    // Long division from the top: each step kills the highest remaining coefficient.
    while (!rem.empty()) {
        int er = rem.rbegin()->first;
        int e = er - d;
        if (e < -N) break;
        LaurentPoly q = rem.rbegin()->second * top_inv;
        for (auto& [ed, cd] : dser.coeffs()) {
            auto& slot = rem.try_emplace(e + ed, nx).first->second;
            slot -= q * cd;
            if (slot.is_zero()) rem.erase(e + ed);
        }
        out = out + SeriesTrunc::exact(q * LaurentPoly::v(nx, e));
    }
    return out.truncated(-N);
}

} // namespace affh
