#pragma once

#include "affh/braid.hpp"
#include "affh/laurent_v.hpp"

#include <unordered_map>
#include <vector>

namespace affh {

/// Finitely supported map W_aff -> Z[v, v^{-1}]; a vector in either the Hecke algebra
/// (basis H_x) or the antispherical module (basis N_x).
class HeckeElt {
public:
    using Map = std::unordered_map<ExtWeylElt, LaurentV, ExtWeylHash>;

    HeckeElt() = default;
    static HeckeElt basis(const ExtWeylElt& x, const LaurentV& c = 1)
    {
        HeckeElt h;
        h.add(x, c);
        return h;
    }

    const Map& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    size_t size() const { return m_.size(); }

    LaurentV coeff(const ExtWeylElt& x) const
    {
        auto it = m_.find(x);
        return it == m_.end() ? LaurentV() : it->second;
    }

    void add(const ExtWeylElt& x, const LaurentV& c)
    {
        if (c.is_zero()) return;
        auto [it, fresh] = m_.try_emplace(x, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m_.erase(it);
        }
    }

    HeckeElt& operator+=(const HeckeElt& o)
    {
        for (auto& [x, c] : o.m_) add(x, c);
        return *this;
    }
    HeckeElt& operator-=(const HeckeElt& o)
    {
        for (auto& [x, c] : o.m_) add(x, -c);
        return *this;
    }
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const LaurentV& c, const HeckeElt& a)
    {
        HeckeElt r;
        if (c.is_zero()) return r;
        for (auto& [x, d] : a.m_) r.m_.emplace(x, c * d);
        return r;
    }
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.m_ == b.m_; }
    friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

    /// Terms sorted by element, for deterministic output.
    std::vector<std::pair<ExtWeylElt, LaurentV>> sorted() const
    {
        std::vector<std::pair<ExtWeylElt, LaurentV>> v(m_.begin(), m_.end());
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return v;
    }

private:
    Map m_;
};

inline LaurentV v_minus_vinv() { return LaurentV::v() - LaurentV::vinv(); }
inline LaurentV vinv_minus_v() { return LaurentV::vinv() - LaurentV::v(); }

/// Extended affine Hecke algebra with (H_s - v^{-1})(H_s + v) = 0.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const RootDatum& rd) : rd_(&rd) {}
    const RootDatum& datum() const { return *rd_; }

    HeckeElt one() const { return HeckeElt::basis(rd_->identity()); }
    HeckeElt standard(const ExtWeylElt& x) const { return HeckeElt::basis(x); }

    /// a · H_{s_i}^{exp}
    HeckeElt mul_simple_right(const HeckeElt& a, int i, int exp = 1) const { return mul_simple(a, i, exp, true); }
    /// H_{s_i}^{exp} · a
    HeckeElt mul_simple_left(const HeckeElt& a, int i, int exp = 1) const { return mul_simple(a, i, exp, false); }

    HeckeElt mul_omega_right(const HeckeElt& a, const ExtWeylElt& omega) const
    {
        HeckeElt r;
        for (auto& [x, c] : a.terms()) r.add(rd_->mul(x, omega), c);
        return r;
    }
    HeckeElt mul_omega_left(const ExtWeylElt& omega, const HeckeElt& a) const
    {
        HeckeElt r;
        for (auto& [x, c] : a.terms()) r.add(rd_->mul(omega, x), c);
        return r;
    }

    /// a · H_y through y = ω s_{i1} ... s_{ik}.
    HeckeElt mul_standard_right(const HeckeElt& a, const ExtWeylElt& y) const
    {
        auto [k, u] = rd_->split_left(y);
        HeckeElt r = k == 0 ? a : mul_omega_right(a, rd_->omega_group()[static_cast<size_t>(k)].x);
        for (int i : rd_->reduced_word(u)) r = mul_simple_right(r, i, 1);
        return r;
    }

    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const
    {
        HeckeElt r;
        for (auto& [y, c] : b.terms()) r += c * mul_standard_right(a, y);
        return r;
    }

    /// Homomorphism from the braid group; multiplies letter by letter on the right.
    HeckeElt from_braid(const BraidWord& b) const { return apply_word(one(), b); }

    HeckeElt apply_word(HeckeElt a, const BraidWord& b) const
    {
        for (auto& l : b) {
            switch (l.kind) {
            case BraidLetter::Kind::Simple: a = mul_simple_right(a, l.node, l.exp); break;
            case BraidLetter::Kind::Omega: a = mul_omega_right(a, rd_->omega_group().at(static_cast<size_t>(l.omega)).x); break;
            case BraidLetter::Kind::Theta: a = apply_word(std::move(a), theta(*rd_, l.lambda)); break;
            }
        }
        return a;
    }

    /// bar(Σ c_x H_x) = Σ bar(c_x) (H_{x^{-1}})^{-1}.
    HeckeElt bar(const HeckeElt& a) const
    {
        std::unordered_map<ExtWeylElt, HeckeElt, ExtWeylHash> memo;
        HeckeElt r;
        for (auto& [x, c] : a.terms()) r += c.bar() * bar_standard(x, memo);
        return r;
    }

private:
    HeckeElt mul_simple(const HeckeElt& a, int i, int exp, bool right) const
    {
        const ExtWeylElt& s = rd_->simple(i);
        HeckeElt r;
        const LaurentV q = vinv_minus_v();
        for (auto& [x, c] : a.terms()) {
            ExtWeylElt y = right ? rd_->mul(x, s) : rd_->mul(s, x);
            r.add(y, c);
            if (rd_->length(y) < rd_->length(x)) r.add(x, q * c);
        }
        if (exp == -1) r += v_minus_vinv() * a;
        else if (exp != 1) throw Error("simple letter exponent must be +1 or -1");
        return r;
    }

    const HeckeElt& bar_standard(const ExtWeylElt& x, std::unordered_map<ExtWeylElt, HeckeElt, ExtWeylHash>& memo) const
    {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        HeckeElt val;
        if (rd_->length(x) == 0) {
            val = standard(x);
        } else {
            // x = x' s with x' shorter: bar(H_x) = bar(H_{x'}) H_s^{-1}.
            for (int i = 0; i < rd_->num_nodes(); ++i) {
                ExtWeylElt xp = rd_->mul(x, rd_->simple(i));
                if (rd_->length(xp) < rd_->length(x)) {
                    HeckeElt pre = bar_standard(xp, memo);
                    val = mul_simple_right(pre, i, -1);
                    break;
                }
            }
        }
        return memo.emplace(x, std::move(val)).first->second;
    }

    const RootDatum* rd_;
};

} // namespace affh
