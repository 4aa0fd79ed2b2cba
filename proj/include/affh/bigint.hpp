#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace affh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

/// Library-level failure with a human-readable reason.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const Rational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw Error("malformed rational '" + s + "'");
    }
}

} // namespace affh
