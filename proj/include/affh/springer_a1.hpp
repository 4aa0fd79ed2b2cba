#pragma once

#include "affh/canonlab.hpp"

#include <array>
#include <string>
#include <vector>

namespace affh {

namespace sl2 {

using Mat2 = std::array<std::array<int, 2>, 2>;

inline Mat2 commutator(const Mat2& a, const Mat2& b)
{
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

/// Basis vector of sl2 with its torus weight: Ad(diag(t, t^{-1})) scales E_ij by t^{a_i - a_j}, a = (1, -1).
struct BasisVector {
    std::string name;
    Mat2 m;
    int weight;
};

inline std::vector<BasisVector> basis()
{
    const std::array<int, 2> a{1, -1};
    std::vector<BasisVector> out;
    Mat2 e{{{0, 1}, {0, 0}}}, f{{{0, 0}, {1, 0}}}, h{{{1, 0}, {0, -1}}};
    for (auto [name, m] : {std::pair{"e", e}, std::pair{"f", f}, std::pair{"h", h}}) {
        int w = 0;
        bool found = false;
        for (int i = 0; i < 2 && !found; ++i)
            for (int j = 0; j < 2 && !found; ++j)
                if (m[i][j] != 0) {
                    w = a[i] - a[j];
                    found = true;
                }
        out.push_back({name, m, w});
    }
    return out;
}

/// A T-fixed Borel subalgebra: upper (stabilizing e_1) or lower (stabilizing e_2) triangular.
struct Borel {
    std::string name;
    int stable_line; ///< index of the coordinate line of C^2 preserved by the Borel
    bool contains(const Mat2& m) const
    {
        // Upper triangular kills the (1,0) entry; lower triangular the (0,1) entry.
        return stable_line == 0 ? m[1][0] == 0 : m[0][1] == 0;
    }
};

inline std::vector<Borel> fixed_borels() { return {{"b+", 0}, {"b-", 1}}; }

} // namespace sl2

enum class Nilpotent { Zero, Regular };

/// Weights at one T-fixed point of the zero section B ⊂ Ñ.
struct FixedPointData {
    std::string name;
    LaurentPoly base;     ///< tangent weight of B = G/B (g/b)
    LaurentPoly fiber;    ///< tangent weight of the cotangent fibre n_b, including the dilation v^{-2}
    LaurentPoly o_minus1; ///< weight of O(-1): the line in C^2 fixed by the Borel
};

/// Equivariant weights derived from explicit sl2 matrices. C̃ = T × G_m acts on g by (c,t)X = t^{-2} Ad(c φ(t)) X.
struct Sl2Weights {
    std::vector<FixedPointData> points;
    std::vector<LaurentPoly> zgf; ///< weights of Z_g(f)
    std::vector<LaurentPoly> h;   ///< weights of h with the dilation
    int torus_rank = 1;
};

/// x = character of diag(t, t^{-1}); v = dilation parameter.
inline Sl2Weights sl2_weight_oracle(Nilpotent e)
{
    Sl2Weights w;
    auto basis = sl2::basis();
    if (e == Nilpotent::Zero) {
        w.torus_rank = 1;
        auto mono = [](int xexp, int vexp) { return LaurentPoly::monomial({vexp, xexp}); };
        for (auto& b : sl2::fixed_borels()) {
            FixedPointData p;
            p.name = b.name;
            for (auto& bv : basis) {
                if (!b.contains(bv.m)) p.base = mono(bv.weight, 0);                 // g/b
                else if (bv.weight != 0) p.fiber = mono(bv.weight, -2);             // n_b with dilation
            }
            p.o_minus1 = mono(b.stable_line == 0 ? 1 : -1, 0);                      // diag(t,t^{-1}) on e_1 / e_2
            w.points.push_back(p);
        }
        // f = 0: Z_g(f) = g.
        for (auto& bv : basis) w.zgf.push_back(mono(bv.weight, -2));
        for (auto& bv : basis)
            if (bv.name == "h") w.h.push_back(mono(0, -2));
    } else {
        // Regular: C is trivial and φ(t) = diag(t, t^{-1}); Ad(φ(t)) has weight t^{weight}.
        w.torus_rank = 0;
        auto mono = [](int vexp) { return LaurentPoly::monomial({vexp}); };
        auto f = basis[1];
        for (auto& bv : basis) {
            auto c = sl2::commutator(bv.m, f.m);
            bool central = c[0][0] == 0 && c[0][1] == 0 && c[1][0] == 0 && c[1][1] == 0;
            if (central) w.zgf.push_back(mono(bv.weight - 2));
            if (bv.name == "h") w.h.push_back(mono(-2));
        }
        FixedPointData p;
        p.name = "pt";
        w.points.push_back(p);
    }
    return w;
}

/// Restrictions (F_p) of a class to the T-fixed points.
using FixedClass = std::vector<RationalClass>;

/// G = SL2 instance. For e = 0 the slice is Ñ = T*P¹ with two fixed points; for e regular it is a point.
class A1Instance {
public:
    explicit A1Instance(Nilpotent e) : e_(e), w_(sl2_weight_oracle(e))
    {
        nx_ = w_.torus_rank;
        dim_B_ = 1;
        dim_Be_ = e == Nilpotent::Zero ? 1 : 0;
        select_upsilon();
    }

    Nilpotent nilpotent() const { return e_; }
    const Sl2Weights& weights() const { return w_; }
    int torus_rank() const { return nx_; }
    int dim_B() const { return dim_B_; }
    int dim_Be() const { return dim_Be_; }
    size_t npoints() const { return w_.points.size(); }
    const std::string& upsilon_name() const { return ups_name_; }

    LaurentPoly one() const { return LaurentPoly(nx_, 1); }
    LaurentPoly vpow(int k) const { return LaurentPoly::v(nx_, k); }
    LaurentPoly xpow(int k) const { return nx_ == 0 ? one() : LaurentPoly::x(nx_, 1, k); }

    FixedClass scale(const FixedClass& f, const RationalClass& c) const
    {
        FixedClass g = f;
        for (auto& x : g) x = x * c;
        return g;
    }
    FixedClass add(const FixedClass& a, const FixedClass& b) const
    {
        FixedClass g = a;
        for (size_t i = 0; i < g.size(); ++i) g[i] = g[i] + b[i];
        return g;
    }

    /// O(n) ⊗ v^d pulled back along Ñ -> B; point class for e regular.
    FixedClass line_bundle(int n, int d) const
    {
        FixedClass f;
        for (auto& p : w_.points) {
            LaurentPoly c = vpow(d);
            if (e_ == Nilpotent::Zero) c *= monomial_pow(p.o_minus1, -n);
            f.push_back(RationalClass(c));
        }
        return f;
    }

    /// Zero-section pushforward i_*: multiply by the Koszul factor 1 - fiber^{-1}.
    FixedClass zero_section(const FixedClass& f) const
    {
        if (e_ != Nilpotent::Zero) return f;
        FixedClass g = f;
        for (size_t i = 0; i < g.size(); ++i) g[i] = g[i] * RationalClass(one() - w_.points[i].fiber.dual_all());
        return g;
    }

    /// Skyscraper at a fixed point (pushed forward to Ñ).
    FixedClass skyscraper(size_t k) const
    {
        FixedClass f(npoints(), RationalClass(nx_));
        const auto& p = w_.points[k];
        LaurentPoly c = one();
        if (e_ == Nilpotent::Zero) c = (one() - p.base.dual_all()) * (one() - p.fiber.dual_all());
        f[k] = RationalClass(c);
        return f;
    }

    /// GKM: F_+ - F_- divisible by 1 - (tangent character) after clearing denominators.
    bool gkm(const FixedClass& f) const
    {
        if (e_ != Nilpotent::Zero) return true;
        RationalClass d = f[0] - f[1];
        RationalClass q = d;
        q.divide_by(one() - w_.points[0].base);
        // Divisible iff the new factor cancelled.
        return q.den_factors().size() == d.den_factors().size() &&
               std::equal(q.den_factors().begin(), q.den_factors().end(), d.den_factors().begin());
    }

    /// Σ_p F_p G_p / Π_tangent (1 - m^{-1}); for e regular the point pairing F·G.
    RationalClass euler_pairing(const FixedClass& f, const FixedClass& g) const
    {
        RationalClass s(nx_);
        for (size_t i = 0; i < npoints(); ++i) s += f[i] * g[i] * local_inverse(i);
        return s;
    }

    /// χ(B, i^*F) on the zero section.
    RationalClass chi_base(const FixedClass& f) const
    {
        if (e_ != Nilpotent::Zero) return f[0];
        RationalClass s(nx_);
        for (size_t i = 0; i < npoints(); ++i) s += f[i] / RationalClass(one() - w_.points[i].base.dual_all());
        return s;
    }

    /// Grothendieck–Serre duality: dualize restrictions, multiply by the canonical class det T^*.
    FixedClass duality(const FixedClass& f) const
    {
        FixedClass g;
        for (size_t i = 0; i < npoints(); ++i) g.push_back(f[i].dual_all() * RationalClass(canonical_class(i)));
        return g;
    }

    LaurentPoly canonical_class(size_t i) const
    {
        if (e_ != Nilpotent::Zero) return one();
        return (w_.points[i].base * w_.points[i].fiber).dual_all();
    }

    /// Action of s̃ by convolution with v^{-1}[O_Δ] + v^{-1}[O_{P¹×P¹}(-1,-1)], localized at the fixed-point pairs.
    /// For e regular the slice is a point and s̃ acts through the index character H_s -> v^{-1}.
    FixedClass braid(const FixedClass& f) const
    {
        FixedClass g = scale(f, RationalClass(vpow(-1)));
        if (e_ != Nilpotent::Zero) return g;
        auto K = kernel();
        for (size_t p = 0; p < npoints(); ++p)
            for (size_t q = 0; q < npoints(); ++q) g[p] = g[p] + RationalClass(vpow(-1)) * K[p][q] * f[q] * local_inverse(q);
        return g;
    }

    /// Kernel class of [O_{P¹×P¹}(-1,-1)] at the fixed-point pairs (p, q).
    std::vector<std::vector<RationalClass>> kernel() const
    {
        std::vector<std::vector<RationalClass>> K(npoints(), std::vector<RationalClass>(npoints(), RationalClass(nx_)));
        for (size_t p = 0; p < npoints(); ++p)
            for (size_t q = 0; q < npoints(); ++q) {
                const auto& P = w_.points[p];
                const auto& Q = w_.points[q];
                K[p][q] = RationalClass(P.o_minus1 * Q.o_minus1 * (one() - P.fiber.dual_all()) * (one() - Q.fiber.dual_all()));
            }
        return K;
    }

    /// GKM for the kernel on Ñ×Ñ along both factors.
    bool kernel_gkm() const
    {
        if (e_ != Nilpotent::Zero) return true;
        auto K = kernel();
        for (size_t q = 0; q < 2; ++q)
            if (!gkm({K[0][q], K[1][q]}) || !gkm({K[q][0], K[q][1]})) return false;
        return true;
    }

    /// Candidate Υ: identity or pullback along the Weyl element (swap fixed points, invert characters).
    FixedClass upsilon(const FixedClass& f, bool inversion) const
    {
        if (!inversion) return f;
        FixedClass g(npoints(), RationalClass(nx_));
        for (size_t i = 0; i < npoints(); ++i) g[i] = f[npoints() - 1 - i].invert_chars();
        return g;
    }
    FixedClass upsilon(const FixedClass& f) const { return upsilon(f, ups_inversion_); }

    /// β_S = v^{dim B + 2 dim B_e} Υ ∘ s̃ ∘ D.
    FixedClass beta_S(const FixedClass& f) const
    {
        return scale(upsilon(braid(duality(f))), RationalClass(vpow(dim_B_ + 2 * dim_Be_)));
    }
    FixedClass beta_e(const FixedClass& f) const { return scale(beta_S(f), RationalClass(vpow(-2 * dim_Be_))); }

    /// (F ‖ G) = (F : D β_S G).
    RationalClass pairing(const FixedClass& f, const FixedClass& g) const { return euler_pairing(f, duality(beta_S(g))); }

    /// Coordinates in the line-bundle basis {O, O(1)} (e = 0) or {pt} (e regular); throws if not integral.
    std::vector<LaurentPoly> coords(const FixedClass& f) const
    {
        if (e_ != Nilpotent::Zero) return {f[0].polynomial()};
        // a + b·O(1)_p = F_p: b = (F_- - F_+) / (O(1)_- - O(1)_+).
        FixedClass o1 = line_bundle(1, 0);
        RationalClass b = (f[1] - f[0]) / (o1[1] - o1[0]);
        RationalClass a = f[0] - b * o1[0];
        if (!a.is_polynomial() || !b.is_polynomial()) throw Error("class is not in the integral K-group");
        return {a.polynomial(), b.polynomial()};
    }
    FixedClass from_coords(const std::vector<LaurentPoly>& c) const
    {
        if (e_ != Nilpotent::Zero) return {RationalClass(c[0])};
        return add(scale(line_bundle(0, 0), RationalClass(c[0])), scale(line_bundle(1, 0), RationalClass(c[1])));
    }

    /// Matrix of s̃ in the line-bundle basis (columns are images of basis vectors).
    std::vector<std::vector<RationalClass>> braid_action() const
    {
        size_t n = e_ == Nilpotent::Zero ? 2 : 1;
        std::vector<std::vector<RationalClass>> m(n, std::vector<RationalClass>(n, RationalClass(nx_)));
        for (size_t j = 0; j < n; ++j) {
            std::vector<LaurentPoly> ej(n, LaurentPoly(nx_));
            ej[j] = one();
            auto img = coords(braid(from_coords(ej)));
            for (size_t i = 0; i < n; ++i) m[i][j] = RationalClass(img[i]);
        }
        return m;
    }

    /// (M - v^{-1})(M + v) = 0 exactly.
    bool quadratic_relation() const
    {
        auto m = braid_action();
        size_t n = m.size();
        auto shifted = [&](const RationalClass& c) {
            auto r = m;
            for (size_t i = 0; i < n; ++i) r[i][i] = r[i][i] + c;
            return r;
        };
        auto a = shifted(RationalClass(-vpow(-1))), b = shifted(RationalClass(vpow(1)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                RationalClass s(nx_);
                for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
                if (!s.is_zero()) return false;
            }
        return true;
    }

    /// At v = 1, x = 1 the braid matrix squares to the identity.
    bool springer_check() const
    {
        auto m = braid_action();
        size_t n = m.size();
        std::vector<long long> at_one(static_cast<size_t>(nx_) + 1, 1);
        std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) e[i][j] = m[i][j].eval_at(at_one);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (size_t k = 0; k < n; ++k) s += e[i][k] * e[k][j];
                if (s != (i == j ? 1 : 0)) return false;
            }
        return true;
    }

    /// Value of the P¹-limit: v^0 coefficient of the expansion at v = 0, evaluated at x = 1.
    Rational p1_limit(const RationalClass& r, int N = 12) const
    {
        SeriesTrunc s = r.bar_v().expand(N);
        std::vector<long long> at_one(static_cast<size_t>(nx_) + 1, 1);
        return s.coeff(0).eval_at(at_one);
    }

    RationalClass nabla() const { return nabla_e(w_.zgf, w_.h, nx_); }

    struct Bases {
        std::vector<FixedClass> BS;      ///< Ẽ_i
        std::vector<FixedClass> Ltilde;  ///< dual family with (L̃_i ‖ Ẽ_j) = δ_ij v^{-2 dim B_e}
        std::vector<FixedClass> Be;      ///< v^{2 dim B_e} L̃_i, fixed by β_e
        int twist = 0;                   ///< v-twist of the second element of B_S
    };

    /// Ẽ_0 = v^{2 dim B_e} O; the twist of O(1) is the unique d in [-4, 4] making it β_S-fixed.
    Bases build_bases() const
    {
        Bases b;
        FixedClass e0 = line_bundle(0, 2 * dim_Be_);
        if (beta_S(e0) != e0) throw Error("instance inconsistent: Ẽ_0 is not fixed by beta_S");
        b.BS.push_back(e0);
        if (e_ == Nilpotent::Zero) {
            std::vector<int> hits;
            for (int d = -4; d <= 4; ++d)
                if (beta_S(line_bundle(1, d)) == line_bundle(1, d)) hits.push_back(d);
            if (hits.size() != 1) throw Error("instance inconsistent: no unique beta_S-fixed twist of O(1)");
            b.twist = hits[0];
            b.BS.push_back(line_bundle(1, b.twist));
        }
        // Dual family: L̃ = v^{-2 dim B_e} Σ (P^{-1})_{ik} Ẽ_k with P_kj = (Ẽ_k ‖ Ẽ_j).
        size_t n = b.BS.size();
        std::vector<std::vector<RationalClass>> P(n, std::vector<RationalClass>(n, RationalClass(nx_)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) P[i][j] = pairing(b.BS[i], b.BS[j]);
        auto Pinv = invert(P);
        for (size_t i = 0; i < n; ++i) {
            FixedClass l(npoints(), RationalClass(nx_));
            for (size_t k = 0; k < n; ++k) l = add(l, scale(b.BS[k], Pinv[i][k] * RationalClass(vpow(-2 * dim_Be_))));
            coords(l); // integrality
            b.Ltilde.push_back(l);
            b.Be.push_back(scale(l, RationalClass(vpow(2 * dim_Be_))));
        }
        return b;
    }

    /// The canonlab view: module coordinates are taken in the basis B_S.
    struct Modules {
        PairedModule S;  ///< bar = β_S
        PairedModule e;  ///< bar = β_e
        std::vector<ModVec> BS, Be, Ltilde;
    };

    Modules modules() const
    {
        Bases b = build_bases();
        Modules m;
        size_t n = b.BS.size();
        auto to_mod = [&](const FixedClass& f) {
            // Solve F = Σ c_k Ẽ_k using line-bundle coordinates.
            auto target = coords(f);
            std::vector<std::vector<LaurentPoly>> cols;
            for (auto& e : b.BS) cols.push_back(coords(e));
            return solve_unit_diagonal(cols, target);
        };
        for (auto* mod : {&m.S, &m.e}) {
            mod->torus_rank = nx_;
            mod->dim_B = dim_B_;
            mod->dim_Be = dim_Be_;
            mod->bar_coeff = CoeffInvolution{true, false};
            mod->pairing_conj = CoeffInvolution{false, true};
            mod->labels.clear();
            for (size_t i = 0; i < n; ++i) mod->labels.push_back(n == 1 ? "pt" : (i == 0 ? "O" : "O(1)"));
            mod->bar.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(nx_)));
            mod->pairing.assign(n, std::vector<RationalClass>(n, RationalClass(nx_)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) mod->pairing[i][j] = pairing(b.BS[i], b.BS[j]);
        }
        for (size_t j = 0; j < n; ++j) {
            auto cs = to_mod(beta_S(b.BS[j]));
            auto ce = to_mod(beta_e(b.BS[j]));
            for (size_t i = 0; i < n; ++i) {
                m.S.bar[i][j] = cs[i];
                m.e.bar[i][j] = ce[i];
            }
        }
        for (auto& f : b.BS) m.BS.push_back(to_mod(f));
        for (auto& f : b.Be) m.Be.push_back(to_mod(f));
        for (auto& f : b.Ltilde) m.Ltilde.push_back(to_mod(f));
        return m;
    }

private:
    static LaurentPoly monomial_pow(const LaurentPoly& m, int k)
    {
        return k >= 0 ? m.pow(k) : m.dual_all().pow(-k);
    }

    /// 1 / Π_tangent (1 - m^{-1}) at fixed point i.
    RationalClass local_inverse(size_t i) const
    {
        if (e_ != Nilpotent::Zero) return RationalClass(one());
        const auto& p = w_.points[i];
        RationalClass r(one());
        r.divide_by(one() - p.base.dual_all());
        r.divide_by(one() - p.fiber.dual_all());
        return r;
    }

    /// Υ is chosen among {identity, Weyl pullback} by (Ups2): Υ = s̃ ∘ D at v = 1, probed on
    /// the line-bundle basis and on character multiples (so linear and semilinear maps are told apart).
    void select_upsilon()
    {
        std::vector<FixedClass> probes;
        if (e_ == Nilpotent::Zero)
            for (int n : {0, 1}) {
                probes.push_back(line_bundle(n, 0));
                probes.push_back(scale(line_bundle(n, 0), RationalClass(xpow(1))));
            }
        else
            probes.push_back(line_bundle(0, 0));
        std::map<int, long long> v_is_one{{0, 1}};
        for (bool inv : {false, true}) {
            bool ok = true;
            for (auto& f : probes) {
                auto lhs = coords(upsilon(f, inv));
                auto rhs = coords(braid(duality(f)));
                for (size_t k = 0; k < lhs.size() && ok; ++k)
                    if (lhs[k].substitute(v_is_one) != rhs[k].substitute(v_is_one)) ok = false;
            }
            if (ok) {
                ups_inversion_ = inv;
                ups_name_ = inv ? "weyl-pullback" : "identity";
                return;
            }
        }
        throw Error("instance inconsistent: no Upsilon candidate satisfies (Ups2)");
    }

    static std::vector<std::vector<RationalClass>> invert(std::vector<std::vector<RationalClass>> a)
    {
        size_t n = a.size();
        int nx = a[0][0].torus_rank();
        std::vector<std::vector<RationalClass>> inv(n, std::vector<RationalClass>(n, RationalClass(nx)));
        for (size_t i = 0; i < n; ++i) inv[i][i] = RationalClass(LaurentPoly(nx, 1));
        for (size_t c = 0; c < n; ++c) {
            size_t p = c;
            while (a[p][c].is_zero()) ++p;
            std::swap(a[p], a[c]);
            std::swap(inv[p], inv[c]);
            RationalClass piv = a[c][c].inverse();
            for (size_t j = 0; j < n; ++j) {
                a[c][j] = a[c][j] * piv;
                inv[c][j] = inv[c][j] * piv;
            }
            for (size_t i = 0; i < n; ++i)
                if (i != c && !a[i][c].is_zero()) {
                    RationalClass f = a[i][c];
                    for (size_t j = 0; j < n; ++j) {
                        a[i][j] = a[i][j] - f * a[c][j];
                        inv[i][j] = inv[i][j] - f * inv[c][j];
                    }
                }
        }
        return inv;
    }

    /// Solve Σ_k c_k cols[k] = target when cols is an invertible matrix over the Laurent ring.
    std::vector<LaurentPoly> solve_unit_diagonal(const std::vector<std::vector<LaurentPoly>>& cols,
                                                 const std::vector<LaurentPoly>& target) const
    {
        size_t n = cols.size();
        std::vector<std::vector<RationalClass>> a(n, std::vector<RationalClass>(n, RationalClass(nx_)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) a[i][k] = RationalClass(cols[k][i]);
        auto ai = invert(a);
        std::vector<LaurentPoly> out;
        for (size_t k = 0; k < n; ++k) {
            RationalClass s(nx_);
            for (size_t i = 0; i < n; ++i) s += ai[k][i] * RationalClass(target[i]);
            if (!s.is_polynomial()) throw Error("class has non-integral coordinates in the module basis");
            out.push_back(s.polynomial());
        }
        return out;
    }

    Nilpotent e_;
    Sl2Weights w_;
    int nx_ = 1;
    int dim_B_ = 1, dim_Be_ = 1;
    bool ups_inversion_ = false;
    std::string ups_name_;
};

/// D on K^T(P¹) in the basis {[O_pt], [O]} at x = 1, with D normalized by (-1)^{dim}: F ↦ F^∨ ⊗ ω_{P¹}.
struct AppendixShadow {
    std::vector<std::vector<Rational>> matrix; ///< columns: D[O_pt], D[O]
    bool involution = false;
    std::vector<int> graded_signs; ///< diagonal entries on the associated graded (H², H⁰ order: pt, O)
    bool ok = false;
};

inline AppendixShadow appendix_shadow()
{
    const int nx = 1;
    auto w = sl2_weight_oracle(Nilpotent::Zero);
    LaurentPoly one(nx, 1);
    // Classes on P¹ as restrictions to the two fixed points (no fibre, no v).
    using Cls = std::array<RationalClass, 2>;
    auto o = [&](int n) {
        Cls c;
        for (size_t i = 0; i < 2; ++i) {
            auto m = w.points[i].o_minus1;
            c[i] = RationalClass(n >= 0 ? m.dual_all().pow(n) : m.pow(-n));
        }
        return c;
    };
    Cls pt{RationalClass(one - w.points[0].base.dual_all()), RationalClass(LaurentPoly(nx))};
    Cls O = o(0);
    auto D = [&](const Cls& f) {
        Cls g;
        for (size_t i = 0; i < 2; ++i) g[i] = f[i].invert_chars() * RationalClass(w.points[i].base.dual_all());
        return g;
    };
    // Coordinates in {pt, O}: O-coefficient read at the second point, pt-coefficient from the first.
    auto coords = [&](const Cls& f) {
        RationalClass b = f[1] / O[1];
        RationalClass a = (f[0] - b * O[0]) / pt[0];
        if (!a.is_polynomial() || !b.is_polynomial()) throw Error("appendix shadow: non-integral class");
        return std::array<LaurentPoly, 2>{a.polynomial(), b.polynomial()};
    };
    AppendixShadow s;
    s.matrix.assign(2, std::vector<Rational>(2));
    Cls cols[2] = {D(pt), D(O)};
    std::vector<long long> at_one{1, 1};
    for (size_t j = 0; j < 2; ++j) {
        auto c = coords(cols[j]);
        for (size_t i = 0; i < 2; ++i) s.matrix[i][j] = c[i].eval_at(at_one);
    }
    // D² on the equivariant classes.
    s.involution = true;
    for (auto& f : {pt, O}) {
        auto g = D(D(f));
        for (size_t i = 0; i < 2; ++i)
            if (g[i] != f[i]) s.involution = false;
    }
    bool triangular = s.matrix[1][0] == 0; // D preserves the filtration span{pt}
    s.graded_signs = {static_cast<int>(boost::multiprecision::numerator(s.matrix[0][0])),
                      static_cast<int>(boost::multiprecision::numerator(s.matrix[1][1]))};
    // σ = (-1)^i on H^{2i}: pt ↔ H², O ↔ H⁰.
    s.ok = s.involution && triangular && s.graded_signs == std::vector<int>{-1, 1};
    return s;
}

} // namespace affh
