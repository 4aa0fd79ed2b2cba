#pragma once

#include "affh/bigint.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace affh {

/// Dense Laurent polynomial in one variable v with integer coefficients.
/// Coefficient of v^(low_+k) is c_[k]; both ends of c_ are nonzero.
class LaurentV {
public:
    LaurentV() = default;
    LaurentV(long long n) { if (n != 0) c_.push_back(BigInt(n)); }
    LaurentV(const BigInt& n) { if (n != 0) c_.push_back(n); }

    static LaurentV monomial(int e, const BigInt& coef = 1)
    {
        LaurentV p;
        if (coef != 0) {
            p.low_ = e;
            p.c_.push_back(coef);
        }
        return p;
    }
    static LaurentV v() { return monomial(1); }
    static LaurentV vinv() { return monomial(-1); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }

    BigInt operator[](int e) const
    {
        if (c_.empty() || e < low_ || e > high()) return 0;
        return c_[e - low_];
    }

    LaurentV& operator+=(const LaurentV& o) { return add_scaled(o, 1); }
    LaurentV& operator-=(const LaurentV& o) { return add_scaled(o, -1); }

    friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
    friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }
    LaurentV operator-() const
    {
        LaurentV r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend LaurentV operator*(const LaurentV& a, const LaurentV& b)
    {
        LaurentV r;
        if (a.is_zero() || b.is_zero()) return r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }

    /// Multiply by v^k.
    LaurentV shifted(int k) const
    {
        LaurentV r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }

    /// v -> v^{-1}.
    LaurentV bar() const
    {
        LaurentV r;
        if (is_zero()) return r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.low_ = -high();
        return r;
    }

    BigInt eval(long long x) const
    {
        if (x != 1 && x != -1) throw Error("LaurentV::eval supports v = +1 or -1 only");
        BigInt s = 0;
        for (size_t k = 0; k < c_.size(); ++k) {
            long long e = low_ + static_cast<long long>(k);
            s += (x == -1 && (e % 2 != 0)) ? -c_[k] : c_[k];
        }
        return s;
    }

    bool all_nonnegative() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x >= 0; });
    }

    friend bool operator==(const LaurentV& a, const LaurentV& b)
    {
        return (a.is_zero() && b.is_zero()) || (a.low_ == b.low_ && a.c_ == b.c_);
    }

    friend bool operator<(const LaurentV& a, const LaurentV& b)
    {
        if (a.low_ != b.low_) return a.low_ < b.low_;
        return a.c_ < b.c_;
    }

    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<int, BigInt>> terms() const
    {
        std::vector<std::pair<int, BigInt>> out;
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), c_[k]);
        return out;
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            int e = low_ + static_cast<int>(k);
            BigInt a = c_[k];
            if (!s.empty()) s += a < 0 ? " - " : " + ";
            else if (a < 0) s += "-";
            if (a < 0) a = -a;
            if (e == 0) s += a.str();
            else {
                if (a != 1) s += a.str() + "*";
                s += e == 1 ? "v" : "v^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    LaurentV& add_scaled(const LaurentV& o, int sign)
    {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = sign > 0 ? o : -o;
            return *this;
        }
        int lo = std::min(low_, o.low_);
        int hi = std::max(high(), o.high());
        if (lo < low_) c_.insert(c_.begin(), static_cast<size_t>(low_ - lo), BigInt(0));
        low_ = lo;
        c_.resize(static_cast<size_t>(hi - lo + 1), BigInt(0));
        for (size_t k = 0; k < o.c_.size(); ++k) {
            auto& slot = c_[o.low_ - lo + k];
            if (sign > 0) slot += o.c_[k];
            else slot -= o.c_[k];
        }
        trim();
        return *this;
    }

    void trim()
    {
        size_t b = 0;
        while (b < c_.size() && c_[b] == 0) ++b;
        if (b == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        size_t e = c_.size();
        while (c_[e - 1] == 0) --e;
        c_.erase(c_.begin() + static_cast<long>(e), c_.end());
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(b));
        low_ += static_cast<int>(b);
    }

    int low_ = 0;
    std::vector<BigInt> c_;
};

} // namespace affh
