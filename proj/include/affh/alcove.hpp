#pragma once

#include "affh/rootdata.hpp"

#include <set>
#include <string>
#include <vector>

namespace affh {

/// Affine coroot hyperplane <α^∨, ·> = level.
struct Wall {
    IVec coroot;
    long long level = 0;
    friend bool operator==(const Wall& a, const Wall& b) { return a.coroot == b.coroot && a.level == b.level; }
    friend bool operator<(const Wall& a, const Wall& b)
    {
        return a.coroot != b.coroot ? a.coroot < b.coroot : a.level < b.level;
    }
};

inline std::string wall_name(const Wall& w)
{
    std::string s = "H(coroot=[";
    for (size_t i = 0; i < w.coroot.size(); ++i) s += (i ? "," : "") + std::to_string(w.coroot[i]);
    return s + "], level=" + std::to_string(w.level) + ")";
}

/// Alcove u(A0) with u in the Coxeter part. hpoint = h·u(ρ/h), an integer vector.
struct Alcove {
    ExtWeylElt u;
    IVec hpoint;
    friend bool operator==(const Alcove& a, const Alcove& b) { return a.u == b.u; }
    friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
    friend bool operator<(const Alcove& a, const Alcove& b) { return a.u < b.u; }
};

struct Gallery {
    std::vector<Alcove> alcoves; ///< alcoves.size() == nodes.size() + 1
    std::vector<int> nodes;      ///< node crossed between alcoves[k] and alcoves[k+1]
};

inline Alcove alcove_of(const RootDatum& rd, const ExtWeylElt& u)
{
    if (!rd.is_coxeter(u)) throw Error("alcove address must lie in the Coxeter part");
    return Alcove{u, rd.act_scaled(u, rd.rho())};
}

inline Alcove fundamental(const RootDatum& rd) { return alcove_of(rd, rd.identity()); }

inline Alcove from_address(const RootDatum& rd, const std::vector<int>& word) { return alcove_of(rd, rd.from_word(word)); }

inline std::vector<int> address(const RootDatum& rd, const Alcove& a) { return rd.reduced_word(a.u); }

inline std::vector<Rational> point(const RootDatum& rd, const Alcove& a)
{
    std::vector<Rational> p;
    for (auto c : a.hpoint) p.emplace_back(Rational(c, rd.coxeter_number()));
    return p;
}

/// (uw)(A0), projected to the Coxeter part along Ω.
inline Alcove act_right(const RootDatum& rd, const Alcove& a, const ExtWeylElt& w)
{
    return alcove_of(rd, rd.split_right(rd.mul(a.u, w)).first);
}

inline Alcove translate(const RootDatum& rd, const Alcove& a, const IVec& lambda)
{
    return alcove_of(rd, rd.split_right(rd.mul(rd.translation(lambda), a.u)).first);
}

inline long long floor_value(const RootDatum& rd, const IVec& coroot, const Alcove& a)
{
    return floor_div(rd.pair(coroot, a.hpoint), rd.coxeter_number());
}

inline std::vector<Wall> separating_walls(const RootDatum& rd, const Alcove& a, const Alcove& b)
{
    std::vector<Wall> out;
    for (auto& c : rd.positive_coroots()) {
        long long fa = floor_value(rd, c, a), fb = floor_value(rd, c, b);
        for (long long n = std::min(fa, fb) + 1; n <= std::max(fa, fb); ++n) out.push_back({c, n});
    }
    return out;
}

/// Every separating wall H has a1 strictly above and a2 strictly below.
inline bool lies_above(const RootDatum& rd, const Alcove& a1, const Alcove& a2)
{
    for (auto& c : rd.positive_coroots())
        if (floor_value(rd, c, a1) < floor_value(rd, c, a2)) return false;
    return true;
}

/// Minimal gallery read off a reduced word of u1^{-1} u2.
inline Gallery gallery(const RootDatum& rd, const Alcove& a1, const Alcove& a2)
{
    Gallery g;
    g.alcoves.push_back(a1);
    ExtWeylElt cur = a1.u;
    for (int i : rd.reduced_word(rd.mul(rd.inverse(a1.u), a2.u))) {
        cur = rd.mul(cur, rd.simple(i));
        g.nodes.push_back(i);
        g.alcoves.push_back(alcove_of(rd, cur));
    }
    return g;
}

/// Alcove containing p; p on a wall is reported with the wall's name.
inline Alcove alcove_from_point(const RootDatum& rd, const std::vector<Rational>& p)
{
    const int r = rd.rank();
    if (p.size() != static_cast<size_t>(r)) throw Error("dimension mismatch in point");
    for (auto& c : rd.positive_coroots()) {
        Rational s = 0;
        for (int i = 0; i < r; ++i) s += Rational(c[static_cast<size_t>(i)]) * p[static_cast<size_t>(i)];
        if (boost::multiprecision::denominator(s) == 1)
            throw Error("point on wall " + wall_name({c, static_cast<long long>(boost::multiprecision::numerator(s))}));
    }
    // Walk from A0: while u^{-1}(p) violates a wall of A0, cross it.
    ExtWeylElt u = rd.identity();
    auto local = [&](const ExtWeylElt& x) {
        ExtWeylElt xi = rd.inverse(x);
        std::vector<Rational> q(static_cast<size_t>(r), Rational(0));
        IVec lam = rd.lambda(xi);
        for (int i = 0; i < r; ++i) {
            IVec e(static_cast<size_t>(r), 0);
            e[static_cast<size_t>(i)] = 1;
            IVec col = rd.act(static_cast<int>(xi.w), e);
            for (int k = 0; k < r; ++k) q[static_cast<size_t>(k)] += Rational(col[static_cast<size_t>(k)]) * p[static_cast<size_t>(i)];
        }
        for (int k = 0; k < r; ++k) q[static_cast<size_t>(k)] += Rational(lam[static_cast<size_t>(k)]);
        return q;
    };
    for (int guard = 0; guard < 100000; ++guard) {
        auto q = local(u);
        int bad = -1;
        for (int i = 1; i <= r && bad < 0; ++i)
            if (q[static_cast<size_t>(i - 1)] < 0) bad = i;
        if (bad < 0) {
            Rational t = 0;
            for (int i = 0; i < r; ++i) t += Rational(rd.highest_coroot()[static_cast<size_t>(i)]) * q[static_cast<size_t>(i)];
            if (t > 1) bad = 0;
        }
        if (bad < 0) return alcove_of(rd, u);
        u = rd.mul(u, rd.simple(bad));
    }
    throw Error("internal: alcove walk did not terminate");
}

/// All alcoves of address length <= radius, sorted by (length, address).
inline std::vector<Alcove> enumerate_alcoves(const RootDatum& rd, int radius)
{
    std::vector<std::pair<std::vector<int>, Alcove>> found;
    std::set<ExtWeylElt> seen{rd.identity()};
    std::vector<ExtWeylElt> layer{rd.identity()};
    found.push_back({{}, fundamental(rd)});
    for (int l = 1; l <= radius; ++l) {
        std::vector<ExtWeylElt> next;
        for (auto& x : layer)
            for (int i = 0; i < rd.num_nodes(); ++i) {
                ExtWeylElt y = rd.mul(x, rd.simple(i));
                if (rd.length(y) == l && seen.insert(y).second) next.push_back(y);
            }
        for (auto& y : next) found.push_back({rd.reduced_word(y), alcove_of(rd, y)});
        layer = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](auto& a, auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    std::vector<Alcove> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
}

/// Face of closure(A) inside the P-wall W_P = {<α_j^∨, ·> = 0 : j ∈ J}.
struct PFace {
    bool full = false;                         ///< face has full dimension in W_P
    std::vector<std::vector<Rational>> vertices; ///< vertices of A lying in W_P
    std::vector<Wall> walls;                   ///< walls of A containing the face (when full)
};

inline void check_parabolic(const RootDatum& rd, const std::vector<int>& J)
{
    std::set<int> s(J.begin(), J.end());
    for (int j : s)
        if (j < 1 || j > rd.rank()) throw Error("parabolic subset must consist of finite nodes 1..rank");
    if (static_cast<int>(s.size()) == rd.rank()) throw Error("degenerate parabolic subset: J contains all finite nodes");
}

inline std::vector<std::vector<Rational>> vertices(const RootDatum& rd, const Alcove& a)
{
    // Vertices of A0: 0 and ω_i / c_i.
    const int r = rd.rank();
    auto marks = rd.marks();
    std::vector<std::vector<Rational>> out;
    for (int k = 0; k <= r; ++k) {
        std::vector<Rational> v0(static_cast<size_t>(r), Rational(0));
        if (k > 0) v0[static_cast<size_t>(k - 1)] = Rational(1, marks[static_cast<size_t>(k)]);
        std::vector<Rational> v(static_cast<size_t>(r), Rational(0));
        IVec lam = rd.lambda(a.u);
        for (int i = 0; i < r; ++i) {
            IVec e(static_cast<size_t>(r), 0);
            e[static_cast<size_t>(i)] = 1;
            IVec col = rd.act(static_cast<int>(a.u.w), e);
            for (int j = 0; j < r; ++j) v[static_cast<size_t>(j)] += Rational(col[static_cast<size_t>(j)]) * v0[static_cast<size_t>(i)];
        }
        for (int j = 0; j < r; ++j) v[static_cast<size_t>(j)] += Rational(lam[static_cast<size_t>(j)]);
        out.push_back(v);
    }
    return out;
}

inline PFace p_alcove(const RootDatum& rd, const Alcove& a, const std::vector<int>& J)
{
    check_parabolic(rd, J);
    std::set<int> js(J.begin(), J.end());
    auto verts = vertices(rd, a);
    std::vector<bool> inside;
    PFace f;
    for (auto& v : verts) {
        bool in = true;
        for (int j : js)
            if (v[static_cast<size_t>(j - 1)] != 0) in = false;
        inside.push_back(in);
        if (in) f.vertices.push_back(v);
    }
    f.full = static_cast<int>(f.vertices.size()) == rd.rank() - static_cast<int>(js.size()) + 1;
    if (!f.full) {
        f.vertices.clear();
        return f;
    }
    // Facet opposite vertex k contains the face iff vertex k is outside W_P.
    for (size_t k = 0; k < verts.size(); ++k) {
        if (inside[k]) continue;
        for (auto& c : rd.positive_coroots()) {
            std::optional<Rational> level;
            bool ok = true;
            for (size_t m = 0; m < verts.size() && ok; ++m) {
                if (m == k) continue;
                Rational s = 0;
                for (int i = 0; i < rd.rank(); ++i) s += Rational(c[static_cast<size_t>(i)]) * verts[m][static_cast<size_t>(i)];
                if (!level) level = s;
                else if (*level != s) ok = false;
            }
            if (ok && level && boost::multiprecision::denominator(*level) == 1) {
                f.walls.push_back({c, static_cast<long long>(boost::multiprecision::numerator(*level))});
                break;
            }
        }
    }
    std::sort(f.walls.begin(), f.walls.end());
    return f;
}

/// Chamber condition from the proof of the P-alcove bijection: with ε the sign of each
/// coroot on the Weyl chamber of A and L the coroots spanned by J, whenever α^∨ ∉ L is positive
/// on the chamber and β^∨ ∈ L with α^∨ + β^∨ a coroot, α^∨ + β^∨ is positive on the chamber too.
inline bool near_wall(const RootDatum& rd, const Alcove& a, const std::vector<int>& J)
{
    check_parabolic(rd, J);
    std::set<int> js(J.begin(), J.end());
    const int r = rd.rank();
    std::vector<IVec> all; // every coroot, with its sign on the chamber
    std::vector<int> sign;
    for (auto& c : rd.positive_coroots()) {
        int s = rd.pair(c, a.hpoint) > 0 ? 1 : -1;
        IVec n = c;
        for (auto& x : n) x = -x;
        all.push_back(c);
        sign.push_back(s);
        all.push_back(n);
        sign.push_back(-s);
    }
    auto in_levi = [&](const IVec& c) {
        for (int i = 0; i < r; ++i)
            if (c[static_cast<size_t>(i)] != 0 && !js.count(i + 1)) return false;
        return true;
    };
    auto find = [&](const IVec& c) -> int {
        for (size_t k = 0; k < all.size(); ++k)
            if (all[k] == c) return static_cast<int>(k);
        return -1;
    };
    for (size_t a1 = 0; a1 < all.size(); ++a1) {
        if (in_levi(all[a1]) || sign[a1] < 0) continue;
        for (size_t b1 = 0; b1 < all.size(); ++b1) {
            if (!in_levi(all[b1])) continue;
            IVec s = all[a1];
            for (int i = 0; i < r; ++i) s[static_cast<size_t>(i)] += all[b1][static_cast<size_t>(i)];
            int k = find(s);
            if (k >= 0 && sign[static_cast<size_t>(k)] < 0) return false;
        }
    }
    return true;
}

} // namespace affh
