#pragma once

#include "affh/bigint.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace affh {

inline constexpr int kMaxRank = 8;

enum class Lattice { Weight, Root };

/// Element t_λ·w of the extended affine Weyl group W ⋉ Λ.
/// w indexes the finite Weyl group of the owning RootDatum; λ is in weight coordinates.
struct ExtWeylElt {
    std::uint32_t w = 0;
    std::array<std::int32_t, kMaxRank> lam{};

    friend bool operator==(const ExtWeylElt& a, const ExtWeylElt& b) { return a.w == b.w && a.lam == b.lam; }
    friend bool operator!=(const ExtWeylElt& a, const ExtWeylElt& b) { return !(a == b); }
    friend bool operator<(const ExtWeylElt& a, const ExtWeylElt& b)
    {
        if (a.w != b.w) return a.w < b.w;
        return a.lam < b.lam;
    }
};

struct ExtWeylHash {
    std::size_t operator()(const ExtWeylElt& x) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ x.w;
        for (auto c : x.lam) h = (h ^ static_cast<std::uint32_t>(c)) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

/// Length-zero element of W_aff together with its permutation of the affine nodes.
struct OmegaElt {
    ExtWeylElt x;
    std::vector<int> perm; ///< perm[i] = j when x s_i x^{-1} = s_j.
};

/// Root datum of a finite-type Cartan matrix, a_ij = <α_i^∨, α_j>.
/// Weights are in fundamental-weight coordinates, coroots in simple-coroot coordinates.
/// Affine node 0 is s_0 = t_{α_θ} s_θ with θ^∨ the highest coroot; finite nodes are 1..rank.
class RootDatum {
public:
    static RootDatum build(const IMat& cartan, Lattice lattice = Lattice::Weight)
    {
        RootDatum rd;
        rd.init(cartan, lattice);
        return rd;
    }

    static IMat preset_cartan(std::string name)
    {
        const std::string suffix = "affine";
        if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
            name.resize(name.size() - suffix.size());
        static const std::map<std::string, IMat> presets = {
            {"A1", {{2}}},
            {"A2", {{2, -1}, {-1, 2}}},
            {"B2", {{2, -1}, {-2, 2}}},
            {"C2", {{2, -2}, {-1, 2}}},
            {"G2", {{2, -1}, {-3, 2}}},
            {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        };
        auto it = presets.find(name);
        if (it == presets.end()) throw Error("unknown type preset '" + name + "'");
        return it->second;
    }

    static RootDatum preset(const std::string& name, Lattice lattice = Lattice::Weight)
    {
        return build(preset_cartan(name), lattice);
    }

    int rank() const { return r_; }
    const IMat& cartan() const { return a_; }
    Lattice lattice() const { return lattice_; }

    /// α_j in weight coordinates (column j of the Cartan matrix), j = 0..rank-1.
    IVec simple_root(int j) const
    {
        IVec v(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i) v[static_cast<size_t>(i)] = a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return v;
    }
    IVec fundamental_weight(int j) const
    {
        IVec v(static_cast<size_t>(r_), 0);
        v[static_cast<size_t>(j)] = 1;
        return v;
    }

    const std::vector<IVec>& positive_coroots() const { return coroots_; }
    /// Roots matching positive_coroots() entry by entry, in weight coordinates.
    const std::vector<IVec>& positive_roots() const { return roots_; }

    long long pair(const IVec& coroot, const IVec& weight) const
    {
        if (coroot.size() != static_cast<size_t>(r_) || weight.size() != static_cast<size_t>(r_))
            throw Error("dimension mismatch in pairing");
        long long s = 0;
        for (int i = 0; i < r_; ++i) s += coroot[static_cast<size_t>(i)] * weight[static_cast<size_t>(i)];
        return s;
    }

    IVec rho() const { return IVec(static_cast<size_t>(r_), 1); }
    int coxeter_number() const { return h_; }
    const IVec& highest_coroot() const { return theta_co_; }
    /// The root α_θ paired with the highest coroot.
    const IVec& highest_coroot_root() const { return theta_root_; }
    /// Marks of the affine diagram: node 0 has mark 1, node i the coefficient of α_i^∨ in θ^∨.
    std::vector<long long> marks() const
    {
        std::vector<long long> m{1};
        m.insert(m.end(), theta_co_.begin(), theta_co_.end());
        return m;
    }
    long long height(const IVec& coroot) const
    {
        long long s = 0;
        for (auto c : coroot) s += c;
        return s;
    }

    // ---- finite Weyl group ----

    int weyl_order() const { return static_cast<int>(wmat_.size()); }
    const std::vector<int>& reduced_word(int w) const { return words_[static_cast<size_t>(w)]; }
    int weyl_length(int w) const { return static_cast<int>(words_[static_cast<size_t>(w)].size()); }
    int longest() const { return longest_; }
    /// w·s_i for finite node i in 1..rank.
    int rmul_simple(int w, int i) const { return rmul_[static_cast<size_t>(w)][static_cast<size_t>(i - 1)]; }
    int lmul_simple(int w, int i) const { return lmul_[static_cast<size_t>(w)][static_cast<size_t>(i - 1)]; }
    int weyl_mul(int a, int b) const
    {
        if (!table_.empty()) return table_[static_cast<size_t>(a) * wmat_.size() + static_cast<size_t>(b)];
        return lookup(act(a, act(b, rho())));
    }
    int weyl_inverse(int w) const { return winv_[static_cast<size_t>(w)]; }

    IVec act(int w, const IVec& mu) const
    {
        const auto& m = wmat_[static_cast<size_t>(w)];
        IVec out(static_cast<size_t>(r_), 0);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                out[static_cast<size_t>(i)] += m[static_cast<size_t>(i * r_ + j)] * mu[static_cast<size_t>(j)];
        return out;
    }
    /// Number of positive coroots sent to negative coroots by w.
    int inversions(int w) const
    {
        // <w α^∨, ρ> = <α^∨, w^{-1} ρ>
        IVec p = act(weyl_inverse(w), rho());
        int n = 0;
        for (auto& c : coroots_)
            if (pair(c, p) < 0) ++n;
        return n;
    }
    /// Index of the element sending ρ to the given vector; throws if not in the orbit.
    int lookup(const IVec& w_rho) const
    {
        auto it = index_.find(w_rho);
        if (it == index_.end()) throw Error("vector is not in the W-orbit of rho");
        return it->second;
    }
    /// Finite reflection along a positive root index.
    int reflection(int root_index) const { return refl_[static_cast<size_t>(root_index)]; }

    // ---- lattices ----

    /// Coordinates of λ in the simple-root basis, if λ lies in Q.
    std::optional<IVec> root_coords(const IVec& lambda) const
    {
        IVec out(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i) {
            Rational s = 0;
            for (int j = 0; j < r_; ++j)
                s += ainv_[static_cast<size_t>(i)][static_cast<size_t>(j)] * Rational(lambda[static_cast<size_t>(j)]);
            if (boost::multiprecision::denominator(s) != 1) return std::nullopt;
            out[static_cast<size_t>(i)] = static_cast<long long>(boost::multiprecision::numerator(s));
        }
        return out;
    }
    bool in_root_lattice(const IVec& lambda) const { return root_coords(lambda).has_value(); }
    bool in_lattice(const IVec& lambda) const { return lattice_ == Lattice::Weight || in_root_lattice(lambda); }
    IVec from_root_coords(const IVec& c) const
    {
        IVec out(static_cast<size_t>(r_), 0);
        for (int j = 0; j < r_; ++j)
            for (int i = 0; i < r_; ++i)
                out[static_cast<size_t>(i)] += a_[static_cast<size_t>(i)][static_cast<size_t>(j)] * c[static_cast<size_t>(j)];
        return out;
    }

    // ---- extended affine Weyl group ----

    ExtWeylElt identity() const { return ExtWeylElt{}; }
    ExtWeylElt make(int w, const IVec& lambda) const
    {
        if (lambda.size() != static_cast<size_t>(r_)) throw Error("weight has wrong dimension");
        if (!in_lattice(lambda)) throw Error("weight is not in the chosen lattice");
        ExtWeylElt x;
        x.w = static_cast<std::uint32_t>(w);
        for (int i = 0; i < r_; ++i) x.lam[static_cast<size_t>(i)] = static_cast<std::int32_t>(lambda[static_cast<size_t>(i)]);
        return x;
    }
    ExtWeylElt translation(const IVec& lambda) const { return make(0, lambda); }
    ExtWeylElt finite(int w) const { return make(w, IVec(static_cast<size_t>(r_), 0)); }
    IVec lambda(const ExtWeylElt& x) const
    {
        return IVec(x.lam.begin(), x.lam.begin() + r_);
    }

    /// Simple reflection for affine node i (0 = affine node).
    const ExtWeylElt& simple(int i) const { return simples_[static_cast<size_t>(i)]; }
    int num_nodes() const { return r_ + 1; }

    ExtWeylElt mul(const ExtWeylElt& a, const ExtWeylElt& b) const
    {
        ExtWeylElt c;
        c.w = static_cast<std::uint32_t>(weyl_mul(static_cast<int>(a.w), static_cast<int>(b.w)));
        const auto& m = wmat_[a.w];
        for (int i = 0; i < r_; ++i) {
            long long s = a.lam[static_cast<size_t>(i)];
            for (int j = 0; j < r_; ++j) s += m[static_cast<size_t>(i * r_ + j)] * b.lam[static_cast<size_t>(j)];
            c.lam[static_cast<size_t>(i)] = static_cast<std::int32_t>(s);
        }
        return c;
    }
    ExtWeylElt inverse(const ExtWeylElt& x) const
    {
        int wi = weyl_inverse(static_cast<int>(x.w));
        IVec l = act(wi, lambda(x));
        for (auto& c : l) c = -c;
        return make(wi, l);
    }

    /// h·x(p/h) for an h-scaled point: x acts affinely on Λ⊗Q.
    IVec act_scaled(const ExtWeylElt& x, const IVec& hp) const
    {
        IVec out = act(static_cast<int>(x.w), hp);
        for (int i = 0; i < r_; ++i) out[static_cast<size_t>(i)] += static_cast<long long>(h_) * x.lam[static_cast<size_t>(i)];
        return out;
    }

    /// Number of affine coroot hyperplanes separating A0 from x(A0).
    int length(const ExtWeylElt& x) const
    {
        const auto& wr = coroot_wrho_[x.w];
        int n = 0;
        for (size_t k = 0; k < coroots_.size(); ++k) {
            long long s = wr[k];
            const auto& c = coroots_[k];
            for (int i = 0; i < r_; ++i) s += static_cast<long long>(h_) * c[static_cast<size_t>(i)] * x.lam[static_cast<size_t>(i)];
            long long f = floor_div(s, h_);
            n += static_cast<int>(f < 0 ? -f : f);
        }
        return n;
    }

    bool is_coxeter(const ExtWeylElt& x) const { return in_root_lattice(lambda(x)); }

    /// Reduced word (affine node indices) of a Coxeter-part element.
    std::vector<int> reduced_word(const ExtWeylElt& x) const
    {
        if (!is_coxeter(x)) throw Error("reduced_word requires an element of the Coxeter part");
        std::vector<int> word;
        ExtWeylElt y = x;
        int l = length(y);
        while (l > 0) {
            bool found = false;
            for (int i = 0; i <= r_; ++i) {
                ExtWeylElt z = mul(y, simple(i));
                int lz = length(z);
                if (lz < l) {
                    word.push_back(i);
                    y = z;
                    l = lz;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("internal: no descent found for element of positive length");
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    ExtWeylElt from_word(const std::vector<int>& word) const
    {
        ExtWeylElt x = identity();
        for (int i : word) {
            if (i < 0 || i > r_) throw Error("node index out of range");
            x = mul(x, simple(i));
        }
        return x;
    }

    const std::vector<OmegaElt>& omega_group() const { return omega_; }

    /// Index into omega_group() of the Ω element in the class of λ modulo Q.
    int omega_class(const IVec& lambda) const
    {
        for (size_t k = 0; k < omega_.size(); ++k) {
            IVec d = this->lambda(omega_[k].x);
            for (int i = 0; i < r_; ++i) d[static_cast<size_t>(i)] -= lambda[static_cast<size_t>(i)];
            if (in_root_lattice(d)) return static_cast<int>(k);
        }
        throw Error("weight outside the lattice");
    }
    int omega_index(const ExtWeylElt& omega) const
    {
        for (size_t k = 0; k < omega_.size(); ++k)
            if (omega_[k].x == omega) return static_cast<int>(k);
        throw Error("element is not in Omega");
    }

    /// x = ω·u with u in the Coxeter part. Returns (index of ω, u).
    std::pair<int, ExtWeylElt> split_left(const ExtWeylElt& x) const
    {
        int k = omega_class(lambda(x));
        return {k, mul(inverse(omega_[static_cast<size_t>(k)].x), x)};
    }
    /// x = u·ω with u in the Coxeter part. Returns (u, index of ω).
    std::pair<ExtWeylElt, int> split_right(const ExtWeylElt& x) const
    {
        // u = x ω^{-1}; the class of x modulo Cox is that of λ.
        int k = omega_class(lambda(x));
        return {mul(x, inverse(omega_[static_cast<size_t>(k)].x)), k};
    }

    /// Order m_ij of s_i s_j for affine nodes.
    int coxeter_m(int i, int j) const
    {
        if (i == j) return 1;
        ExtWeylElt p = mul(simple(i), simple(j));
        ExtWeylElt q = p;
        for (int m = 1; m <= 12; ++m) {
            if (q == identity()) return m;
            q = mul(q, p);
        }
        return 0; // infinite
    }

private:
    void init(const IMat& cartan, Lattice lattice)
    {
        a_ = cartan;
        lattice_ = lattice;
        r_ = static_cast<int>(cartan.size());
        check_finite_type();
        if (r_ > kMaxRank) throw Error("rank above the supported maximum");

        ainv_ = invert(a_);

        // Positive (root, coroot) pairs by closure under simple reflections.
        std::deque<std::pair<IVec, IVec>> todo;
        std::map<IVec, IVec> seen; // coroot -> root
        for (int j = 0; j < r_; ++j) {
            IVec co(static_cast<size_t>(r_), 0);
            co[static_cast<size_t>(j)] = 1;
            todo.emplace_back(simple_root(j), co);
            seen[co] = simple_root(j);
        }
        while (!todo.empty()) {
            auto [root, co] = todo.front();
            todo.pop_front();
            for (int i = 0; i < r_; ++i) {
                IVec r2 = root, c2 = co;
                long long ri = root[static_cast<size_t>(i)];
                IVec ai = simple_root(i);
                for (int k = 0; k < r_; ++k) r2[static_cast<size_t>(k)] -= ri * ai[static_cast<size_t>(k)];
                long long ci = 0;
                for (int k = 0; k < r_; ++k) ci += co[static_cast<size_t>(k)] * a_[static_cast<size_t>(k)][static_cast<size_t>(i)];
                c2[static_cast<size_t>(i)] -= ci;
                bool pos = std::all_of(c2.begin(), c2.end(), [](long long c) { return c >= 0; });
                if (pos && !seen.count(c2)) {
                    seen[c2] = r2;
                    todo.emplace_back(r2, c2);
                }
            }
        }
        std::vector<std::pair<IVec, IVec>> pairs(seen.begin(), seen.end());
        std::stable_sort(pairs.begin(), pairs.end(), [&](auto& x, auto& y) { return height(x.first) < height(y.first); });
        for (auto& [co, root] : pairs) {
            coroots_.push_back(co);
            roots_.push_back(root);
        }
        theta_co_ = coroots_.back();
        theta_root_ = roots_.back();
        for (size_t k = 0; k < coroots_.size(); ++k)
            if (height(coroots_[k]) > height(theta_co_)) {
                theta_co_ = coroots_[k];
                theta_root_ = roots_[k];
            }
        h_ = static_cast<int>(height(theta_co_)) + 1;

        build_weyl();

        refl_.clear();
        for (auto& root : roots_) {
            size_t k = &root - roots_.data();
            IVec p = rho();
            long long c = pair(coroots_[k], p);
            for (int i = 0; i < r_; ++i) p[static_cast<size_t>(i)] -= c * root[static_cast<size_t>(i)];
            refl_.push_back(lookup(p));
        }

        coroot_wrho_.assign(wmat_.size(), {});
        for (size_t w = 0; w < wmat_.size(); ++w) {
            IVec p = act(static_cast<int>(w), rho());
            for (auto& c : coroots_) coroot_wrho_[w].push_back(pair(c, p));
        }

        simples_.clear();
        // s_0 = t_{α_θ} s_θ
        int theta_index = static_cast<int>(std::find(coroots_.begin(), coroots_.end(), theta_co_) - coroots_.begin());
        simples_.push_back(make_unchecked(reflection(theta_index), theta_root_));
        for (int i = 1; i <= r_; ++i) simples_.push_back(make_unchecked(lookup(act_simple(i - 1, rho())), IVec(static_cast<size_t>(r_), 0)));

        build_omega();
    }

    ExtWeylElt make_unchecked(int w, const IVec& lambda) const
    {
        ExtWeylElt x;
        x.w = static_cast<std::uint32_t>(w);
        for (int i = 0; i < r_; ++i) x.lam[static_cast<size_t>(i)] = static_cast<std::int32_t>(lambda[static_cast<size_t>(i)]);
        return x;
    }

    IVec act_simple(int i, const IVec& mu) const
    {
        IVec out = mu;
        IVec ai = simple_root(i);
        for (int k = 0; k < r_; ++k) out[static_cast<size_t>(k)] -= mu[static_cast<size_t>(i)] * ai[static_cast<size_t>(k)];
        return out;
    }

    void check_finite_type()
    {
        if (r_ == 0) throw Error("not finite type: empty Cartan matrix");
        for (auto& row : a_)
            if (row.size() != static_cast<size_t>(r_)) throw Error("not finite type: Cartan matrix is not square");
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) {
                long long x = a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                long long y = a_[static_cast<size_t>(j)][static_cast<size_t>(i)];
                if (i == j && x != 2) throw Error("not finite type: diagonal entry differs from 2");
                if (i != j && (x > 0 || ((x == 0) != (y == 0)))) throw Error("not finite type: invalid off-diagonal entry");
            }
        // Symmetrize: d_i a_ij = d_j a_ji.
        std::vector<Rational> d(static_cast<size_t>(r_), Rational(0));
        for (int s = 0; s < r_; ++s) {
            if (d[static_cast<size_t>(s)] != 0) continue;
            d[static_cast<size_t>(s)] = 1;
            std::deque<int> q{s};
            while (!q.empty()) {
                int i = q.front();
                q.pop_front();
                for (int j = 0; j < r_; ++j) {
                    long long aij = a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (i == j || aij == 0) continue;
                    Rational dj = d[static_cast<size_t>(i)] * Rational(aij) / Rational(a_[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                    if (d[static_cast<size_t>(j)] == 0) {
                        d[static_cast<size_t>(j)] = dj;
                        q.push_back(j);
                    } else if (d[static_cast<size_t>(j)] != dj) {
                        throw Error("not finite type: matrix is not symmetrizable");
                    }
                }
            }
        }
        std::vector<std::vector<Rational>> b(static_cast<size_t>(r_), std::vector<Rational>(static_cast<size_t>(r_)));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                b[static_cast<size_t>(i)][static_cast<size_t>(j)] = d[static_cast<size_t>(i)] * Rational(a_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        // Leading principal minors via Gaussian elimination on the symmetric form.
        for (int k = 0; k < r_; ++k) {
            if (b[static_cast<size_t>(k)][static_cast<size_t>(k)] <= 0)
                throw Error("not finite type: symmetrized matrix is not positive definite");
            for (int i = k + 1; i < r_; ++i) {
                Rational f = b[static_cast<size_t>(i)][static_cast<size_t>(k)] / b[static_cast<size_t>(k)][static_cast<size_t>(k)];
                for (int j = k; j < r_; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
            }
        }
    }

    static std::vector<std::vector<Rational>> invert(const IMat& m)
    {
        size_t n = m.size();
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
            a[i][n + i] = 1;
        }
        for (size_t c = 0; c < n; ++c) {
            size_t p = c;
            while (a[p][c] == 0) ++p;
            std::swap(a[p], a[c]);
            Rational piv = a[c][c];
            for (auto& x : a[c]) x /= piv;
            for (size_t i = 0; i < n; ++i)
                if (i != c && a[i][c] != 0) {
                    Rational f = a[i][c];
                    for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
                }
        }
        std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
        return inv;
    }

    void build_weyl()
    {
        // BFS on the orbit of ρ; w·s_i has image w(s_i ρ).
        std::vector<IVec> images{rho()};
        index_.clear();
        index_[rho()] = 0;
        words_ = {{}};
        std::vector<std::vector<long long>> mats;
        IVec idm(static_cast<size_t>(r_ * r_), 0);
        for (int i = 0; i < r_; ++i) idm[static_cast<size_t>(i * r_ + i)] = 1;
        mats.push_back(idm);
        std::vector<IVec> smat;
        for (int i = 0; i < r_; ++i) {
            IVec m(static_cast<size_t>(r_ * r_), 0);
            for (int c = 0; c < r_; ++c) {
                IVec e(static_cast<size_t>(r_), 0);
                e[static_cast<size_t>(c)] = 1;
                IVec col = act_simple(i, e);
                for (int rr = 0; rr < r_; ++rr) m[static_cast<size_t>(rr * r_ + c)] = col[static_cast<size_t>(rr)];
            }
            smat.push_back(m);
        }
        for (size_t k = 0; k < mats.size(); ++k) {
            for (int i = 0; i < r_; ++i) {
                IVec m(static_cast<size_t>(r_ * r_), 0);
                for (int a = 0; a < r_; ++a)
                    for (int b = 0; b < r_; ++b) {
                        long long s = 0;
                        for (int c = 0; c < r_; ++c) s += mats[k][static_cast<size_t>(a * r_ + c)] * smat[static_cast<size_t>(i)][static_cast<size_t>(c * r_ + b)];
                        m[static_cast<size_t>(a * r_ + b)] = s;
                    }
                IVec img(static_cast<size_t>(r_), 0);
                for (int a = 0; a < r_; ++a)
                    for (int b = 0; b < r_; ++b) img[static_cast<size_t>(a)] += m[static_cast<size_t>(a * r_ + b)];
                if (!index_.count(img)) {
                    index_[img] = static_cast<int>(mats.size());
                    mats.push_back(m);
                    auto w = words_[k];
                    w.push_back(i + 1);
                    words_.push_back(w);
                    if (mats.size() > 100000) throw Error("Weyl group too large");
                }
            }
        }
        wmat_ = mats;
        size_t n = wmat_.size();
        rmul_.assign(n, std::vector<int>(static_cast<size_t>(r_)));
        lmul_.assign(n, std::vector<int>(static_cast<size_t>(r_)));
        winv_.assign(n, 0);
        longest_ = 0;
        for (size_t w = 0; w < n; ++w) {
            for (int i = 0; i < r_; ++i) {
                rmul_[w][static_cast<size_t>(i)] = lookup(act(static_cast<int>(w), act_simple(i, rho())));
                lmul_[w][static_cast<size_t>(i)] = lookup(act_simple(i, act(static_cast<int>(w), rho())));
            }
            if (words_[w].size() > words_[static_cast<size_t>(longest_)].size()) longest_ = static_cast<int>(w);
        }
        table_.clear();
        if (n <= 2048) {
            table_.assign(n * n, 0);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    table_[a * n + b] = lookup(act(static_cast<int>(a), act(static_cast<int>(b), rho())));
        }
        for (size_t w = 0; w < n; ++w)
            for (size_t u = 0; u < n; ++u)
                if (weyl_mul(static_cast<int>(w), static_cast<int>(u)) == 0) {
                    winv_[w] = static_cast<int>(u);
                    break;
                }
    }

    void build_omega()
    {
        omega_.clear();
        long long det = 1;
        // |Λ/Q| from the Cartan determinant.
        {
            std::vector<std::vector<Rational>> b(static_cast<size_t>(r_), std::vector<Rational>(static_cast<size_t>(r_)));
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] = a_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            Rational dd = 1;
            for (int k = 0; k < r_; ++k) {
                dd *= b[static_cast<size_t>(k)][static_cast<size_t>(k)];
                for (int i = k + 1; i < r_; ++i) {
                    Rational f = b[static_cast<size_t>(i)][static_cast<size_t>(k)] / b[static_cast<size_t>(k)][static_cast<size_t>(k)];
                    for (int j = k; j < r_; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
                }
            }
            det = static_cast<long long>(boost::multiprecision::numerator(dd));
        }
        const long long expected = lattice_ == Lattice::Weight ? det : 1;
        // Search t_λ w of length 0 with λ ∈ {-1,0,1}^r in the lattice.
        IVec lam(static_cast<size_t>(r_), -1);
        std::vector<IVec> reps;
        while (true) {
            if (in_lattice(lam)) {
                bool new_class = true;
                for (auto& o : omega_) {
                    IVec d = lambda(o.x);
                    for (int i = 0; i < r_; ++i) d[static_cast<size_t>(i)] -= lam[static_cast<size_t>(i)];
                    if (in_root_lattice(d)) new_class = false;
                }
                if (new_class)
                    for (int w = 0; w < weyl_order(); ++w) {
                        ExtWeylElt x = make_unchecked(w, lam);
                        if (length(x) == 0) {
                            omega_.push_back({x, {}});
                            break;
                        }
                    }
            }
            int k = 0;
            while (k < r_ && lam[static_cast<size_t>(k)] == 1) lam[static_cast<size_t>(k++)] = -1;
            if (k == r_) break;
            ++lam[static_cast<size_t>(k)];
        }
        if (static_cast<long long>(omega_.size()) != expected)
            throw Error("internal: Omega search found " + std::to_string(omega_.size()) + " classes, expected " + std::to_string(expected));
        std::sort(omega_.begin(), omega_.end(), [](const OmegaElt& a, const OmegaElt& b) { return a.x < b.x; });
        // identity first
        auto it = std::find_if(omega_.begin(), omega_.end(), [&](const OmegaElt& o) { return o.x == identity(); });
        std::rotate(omega_.begin(), it, it + 1);
        for (auto& o : omega_) {
            ExtWeylElt oi = inverse(o.x);
            for (int i = 0; i <= r_; ++i) {
                ExtWeylElt c = mul(mul(o.x, simple(i)), oi);
                int j = -1;
                for (int k = 0; k <= r_; ++k)
                    if (simple(k) == c) j = k;
                if (j < 0) throw Error("internal: Omega element does not normalize the simple reflections");
                o.perm.push_back(j);
            }
        }
    }

    int r_ = 0;
    IMat a_;
    Lattice lattice_ = Lattice::Weight;
    std::vector<std::vector<Rational>> ainv_;
    std::vector<IVec> coroots_, roots_;
    IVec theta_co_, theta_root_;
    int h_ = 0;
    std::vector<IVec> wmat_;
    std::map<IVec, int> index_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> rmul_, lmul_;
    std::vector<int> table_, winv_;
    int longest_ = 0;
    std::vector<int> refl_;
    std::vector<std::vector<long long>> coroot_wrho_;
    std::vector<ExtWeylElt> simples_;
    std::vector<OmegaElt> omega_;
};

} // namespace affh
