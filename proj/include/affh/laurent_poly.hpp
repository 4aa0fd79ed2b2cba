#pragma once

#include "affh/bigint.hpp"
#include "affh/laurent_v.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affh {

/// Exponent vector: slot 0 is the exponent of v, slots 1..r are torus characters x_1..x_r.
using Exps = std::vector<int>;

/// Sparse multivariate Laurent polynomial over Z in v and r torus characters.
class LaurentPoly {
public:
    explicit LaurentPoly(int torus_rank = 0) : nx_(torus_rank) {}
    LaurentPoly(int torus_rank, const BigInt& c) : nx_(torus_rank)
    {
        if (c != 0) t_[Exps(static_cast<size_t>(torus_rank) + 1, 0)] = c;
    }

    static LaurentPoly monomial(const Exps& e, const BigInt& c = 1)
    {
        LaurentPoly p(static_cast<int>(e.size()) - 1);
        if (c != 0) p.t_[e] = c;
        return p;
    }
    static LaurentPoly v(int torus_rank, int k = 1)
    {
        Exps e(static_cast<size_t>(torus_rank) + 1, 0);
        e[0] = k;
        return monomial(e);
    }
    /// x_i^k for 1 <= i <= torus_rank.
    static LaurentPoly x(int torus_rank, int i, int k = 1)
    {
        Exps e(static_cast<size_t>(torus_rank) + 1, 0);
        e.at(static_cast<size_t>(i)) = k;
        return monomial(e);
    }
    static LaurentPoly from_v(const LaurentV& p, int torus_rank)
    {
        LaurentPoly r(torus_rank);
        for (auto& [e, c] : p.terms()) r += v(torus_rank, e) * LaurentPoly(torus_rank, c);
        return r;
    }

    int torus_rank() const { return nx_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exps, BigInt>& terms() const { return t_; }

    BigInt coeff(const Exps& e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? BigInt(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        check(o);
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        check(o);
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check(b);
        LaurentPoly r(a.nx_);
        Exps e(static_cast<size_t>(a.nx_) + 1);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(int n) const
    {
        if (n < 0) throw Error("negative power of a Laurent polynomial");
        LaurentPoly r(nx_, 1);
        for (int k = 0; k < n; ++k) r *= *this;
        return r;
    }

    /// Negate a chosen subset of exponent slots.
    LaurentPoly negate_slots(bool v_slot, bool char_slots) const
    {
        LaurentPoly r(nx_);
        for (auto e : t_) {
            Exps f = e.first;
            if (v_slot) f[0] = -f[0];
            if (char_slots)
                for (size_t k = 1; k < f.size(); ++k) f[k] = -f[k];
            r.t_[f] = e.second;
        }
        return r;
    }
    LaurentPoly bar_v() const { return negate_slots(true, false); }
    LaurentPoly dual_all() const { return negate_slots(true, true); }
    LaurentPoly invert_chars() const { return negate_slots(false, true); }

    /// Substitute values for some variables: slot -> nonzero integer.
    /// Characters evaluated at 0 are rejected. Remaining slots stay symbolic.
    LaurentPoly substitute(const std::map<int, long long>& vals) const
    {
        for (auto& [slot, val] : vals) {
            if (slot < 0 || slot > nx_) throw Error("substitute: variable index out of range");
            if (val == 0) throw Error("evaluation at 0 is invalid for a Laurent variable");
            if (val != 1 && val != -1) throw Error("substitute supports values +1 and -1 only");
        }
        LaurentPoly r(nx_);
        for (auto& [e, c] : t_) {
            Exps f = e;
            bool neg = false;
            for (auto& [slot, val] : vals) {
                if (val == -1 && (f[static_cast<size_t>(slot)] % 2 != 0)) neg = !neg;
                f[static_cast<size_t>(slot)] = 0;
            }
            r.add_term(f, neg ? BigInt(-c) : c);
        }
        return r;
    }

    /// Full evaluation. values[0] is v; values[i] the character x_i.
    Rational eval_at(const std::vector<long long>& values) const
    {
        if (values.size() != static_cast<size_t>(nx_) + 1) throw Error("eval_at: value count mismatch");
        for (size_t k = 0; k < values.size(); ++k)
            if (values[k] == 0) throw Error(k == 0 ? "evaluation at v = 0 is invalid" : "evaluation at 0 for a character is invalid");
        Rational s = 0;
        for (auto& [e, c] : t_) {
            Rational term(c);
            for (size_t k = 0; k < e.size(); ++k) {
                Rational base(values[k]);
                int n = e[k];
                if (n < 0) {
                    base = 1 / base;
                    n = -n;
                }
                for (int j = 0; j < n; ++j) term *= base;
            }
            s += term;
        }
        return s;
    }

    bool is_monomial() const { return t_.size() == 1; }

    std::optional<int> max_v() const
    {
        if (t_.empty()) return std::nullopt;
        int m = t_.begin()->first[0];
        for (auto& kv : t_) m = std::max(m, kv.first[0]);
        return m;
    }
    std::optional<int> min_v() const
    {
        if (t_.empty()) return std::nullopt;
        int m = t_.begin()->first[0];
        for (auto& kv : t_) m = std::min(m, kv.first[0]);
        return m;
    }

    /// Coefficient of v^k, as a polynomial in the characters (v-exponent 0).
    LaurentPoly v_coeff(int k) const
    {
        LaurentPoly r(nx_);
        for (auto& [e, c] : t_)
            if (e[0] == k) {
                Exps f = e;
                f[0] = 0;
                r.t_[f] = c;
            }
        return r;
    }

    /// True when no character appears.
    bool is_char_free() const
    {
        for (auto& kv : t_)
            for (size_t k = 1; k < kv.first.size(); ++k)
                if (kv.first[k] != 0) return false;
        return true;
    }

    LaurentV to_v() const
    {
        if (!is_char_free()) throw Error("polynomial involves torus characters");
        LaurentV r;
        for (auto& [e, c] : t_) r += LaurentV::monomial(e[0], c);
        return r;
    }

    bool all_nonnegative() const
    {
        for (auto& kv : t_)
            if (kv.second < 0) return false;
        return true;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.nx_ == b.nx_ && a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.nx_ != b.nx_) return a.nx_ < b.nx_;
        return a.t_ < b.t_;
    }

    std::string str() const
    {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            BigInt a = it->second;
            if (!s.empty()) s += a < 0 ? " - " : " + ";
            else if (a < 0) s += "-";
            if (a < 0) a = -a;
            std::string mono;
            for (size_t k = 0; k < it->first.size(); ++k) {
                int n = it->first[k];
                if (n == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += k == 0 ? std::string("v") : (nx_ == 1 ? std::string("x") : "x" + std::to_string(k));
                if (n != 1) mono += "^" + std::to_string(n);
            }
            if (mono.empty()) s += a.str();
            else s += (a == 1 ? std::string() : a.str() + "*") + mono;
        }
        return s;
    }

    void add_term(const Exps& e, const BigInt& c)
    {
        if (c == 0) return;
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

private:
    void check(const LaurentPoly& o) const
    {
        if (o.nx_ != nx_) throw Error("incompatible variable sets in Laurent polynomial arithmetic");
    }

    int nx_;
    std::map<Exps, BigInt> t_;
};

/// Split p = m * q where m is a monomial and q has componentwise minimal exponent zero.
inline std::pair<Exps, LaurentPoly> strip_monomial(const LaurentPoly& p)
{
    Exps lo(static_cast<size_t>(p.torus_rank()) + 1, 0);
    bool first = true;
    for (auto& kv : p.terms()) {
        for (size_t k = 0; k < lo.size(); ++k) lo[k] = first ? kv.first[k] : std::min(lo[k], kv.first[k]);
        first = false;
    }
    LaurentPoly q(p.torus_rank());
    for (auto& [e, c] : p.terms()) {
        Exps f = e;
        for (size_t k = 0; k < f.size(); ++k) f[k] -= lo[k];
        q.add_term(f, c);
    }
    return {lo, q};
}

/// Exact division in the Laurent ring. Returns nullopt unless b divides a.
/// Works by polynomial long division in lex order after clearing monomials;
/// this decides divisibility exactly but is not a gcd algorithm.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw Error("division by zero polynomial");
    const int nx = a.torus_rank();
    if (a.is_zero()) return LaurentPoly(nx);
    auto [mb, pb] = strip_monomial(b);
    auto [ma, pa] = strip_monomial(a);
    const auto& lead_b = *pb.terms().rbegin();
    LaurentPoly q(nx);
    LaurentPoly r = pa;
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().rbegin();
        Exps e = lead_r.first;
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] -= lead_b.first[k];
            if (e[k] < 0) return std::nullopt;
        }
        if (lead_r.second % lead_b.second != 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(e, lead_r.second / lead_b.second);
        q += t;
        r -= t * pb;
    }
    Exps shift(ma.size());
    for (size_t k = 0; k < shift.size(); ++k) shift[k] = ma[k] - mb[k];
    return q * LaurentPoly::monomial(shift);
}

/// Product of (1 - m) over the given character monomials.
inline LaurentPoly exterior_class(const std::vector<LaurentPoly>& weights, int torus_rank)
{
    LaurentPoly r(torus_rank, 1);
    for (auto& m : weights) {
        if (!m.is_monomial()) throw Error("exterior_class expects monomial weights");
        r *= LaurentPoly(torus_rank, 1) - m;
    }
    return r;
}

} // namespace affh
