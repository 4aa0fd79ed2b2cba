#pragma once

#include "affh/alcove.hpp"

#include <optional>
#include <vector>

namespace affh {

struct BraidLetter {
    enum class Kind { Simple, Omega, Theta };
    Kind kind = Kind::Simple;
    int node = 0;   ///< Simple: affine node
    int exp = 1;    ///< Simple: +1 or -1
    int omega = 0;  ///< Omega: index into RootDatum::omega_group()
    IVec lambda;    ///< Theta: weight

    static BraidLetter simple(int node, int exp) { return {Kind::Simple, node, exp, 0, {}}; }
    static BraidLetter omega_letter(int k) { return {Kind::Omega, 0, 1, k, {}}; }
    static BraidLetter theta(const IVec& l) { return {Kind::Theta, 0, 1, 0, l}; }

    friend bool operator==(const BraidLetter& a, const BraidLetter& b)
    {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
        case Kind::Simple: return a.node == b.node && a.exp == b.exp;
        case Kind::Omega: return a.omega == b.omega;
        case Kind::Theta: return a.lambda == b.lambda;
        }
        return false;
    }
};

/// Free word in the extended affine braid group; identities are certified through Hecke images.
using BraidWord = std::vector<BraidLetter>;

inline int omega_inverse_index(const RootDatum& rd, int k)
{
    return rd.omega_index(rd.inverse(rd.omega_group().at(static_cast<size_t>(k)).x));
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b)
{
    BraidWord c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

inline BraidWord invert(const RootDatum& rd, const BraidWord& b)
{
    BraidWord out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        BraidLetter l = *it;
        switch (l.kind) {
        case BraidLetter::Kind::Simple: l.exp = -l.exp; break;
        case BraidLetter::Kind::Omega: l.omega = omega_inverse_index(rd, l.omega); break;
        case BraidLetter::Kind::Theta:
            for (auto& c : l.lambda) c = -c;
            break;
        }
        out.push_back(l);
    }
    return out;
}

inline bool is_positive(const BraidWord& b)
{
    for (auto& l : b)
        if (l.kind != BraidLetter::Kind::Simple || l.exp != 1) return false;
    return true;
}

/// Image in W_aff: s̃^{±1} -> s, Omega(ω) -> ω, Theta(λ) -> t_λ.
inline ExtWeylElt word_image(const RootDatum& rd, const BraidWord& b)
{
    ExtWeylElt x = rd.identity();
    for (auto& l : b) {
        switch (l.kind) {
        case BraidLetter::Kind::Simple: x = rd.mul(x, rd.simple(l.node)); break;
        case BraidLetter::Kind::Omega: x = rd.mul(x, rd.omega_group().at(static_cast<size_t>(l.omega)).x); break;
        case BraidLetter::Kind::Theta: x = rd.mul(x, rd.translation(l.lambda)); break;
        }
    }
    return x;
}

/// Omega(ω) followed by a reduced word of the Coxeter part u, where x = ω·u.
inline BraidWord canonical_lift(const RootDatum& rd, const ExtWeylElt& x)
{
    auto [k, u] = rd.split_left(x);
    BraidWord b;
    if (k != 0) b.push_back(BraidLetter::omega_letter(k));
    for (int i : rd.reduced_word(u)) b.push_back(BraidLetter::simple(i, 1));
    return b;
}

/// θ_λ = μ̃·ν̃^{-1} with μ = max(λ, 0) componentwise and ν = μ - λ.
inline BraidWord theta(const RootDatum& rd, const IVec& lambda)
{
    IVec mu = lambda, nu = lambda;
    for (size_t i = 0; i < lambda.size(); ++i) {
        mu[i] = std::max<long long>(lambda[i], 0);
        nu[i] = mu[i] - lambda[i];
    }
    BraidWord b = canonical_lift(rd, rd.translation(mu));
    bool nu_zero = std::all_of(nu.begin(), nu.end(), [](long long c) { return c == 0; });
    if (!nu_zero) b = concat(b, invert(rd, canonical_lift(rd, rd.translation(nu))));
    return b;
}

/// For each gallery step C -> C^{s_i} emit s̃_i if C^{s_i} lies above C, else s̃_i^{-1}.
/// A supplied gallery is a node sequence that must lead from a1 to a2.
inline BraidWord b_alcove(const RootDatum& rd, const Alcove& a1, const Alcove& a2,
                          const std::optional<std::vector<int>>& nodes = std::nullopt)
{
    std::vector<int> steps;
    if (nodes) {
        steps = *nodes;
        ExtWeylElt cur = a1.u;
        for (int i : steps) {
            if (i < 0 || i >= rd.num_nodes()) throw Error("malformed gallery: node index out of range");
            cur = rd.mul(cur, rd.simple(i));
        }
        if (cur != a2.u) throw Error("malformed gallery: does not end at the target alcove");
    } else {
        steps = gallery(rd, a1, a2).nodes;
    }
    BraidWord b;
    Alcove cur = a1;
    for (int i : steps) {
        Alcove next = alcove_of(rd, rd.mul(cur.u, rd.simple(i)));
        b.push_back(BraidLetter::simple(i, lies_above(rd, next, cur) ? 1 : -1));
        cur = next;
    }
    return b;
}

} // namespace affh
