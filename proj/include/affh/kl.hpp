#pragma once

#include "affh/hecke.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace affh {

/// Kazhdan–Lusztig basis b_x ∈ H_x + Σ_{y<x} vZ[v] H_y via b_s b_x = b_{sx} + Σ μ(z,x) b_z.
/// Results are cached per element; the cache is guarded by a mutex and may be disabled.
class KLBasis {
public:
    KLBasis(const HeckeAlgebra& H, int max_len = -1, bool use_cache = true)
        : H_(&H), max_len_(max_len < 0 ? default_bound(H.datum()) : max_len), use_cache_(use_cache)
    {
        if (max_len_ > max_bound(H.datum())) throw Error("length bound exceeded");
    }

    static int default_bound(const RootDatum& rd) { return rd.rank() == 1 ? 10 : (rd.rank() == 2 ? 7 : 5); }
    /// Largest bound accepted; beyond it the element count makes the solve impractical.
    static int max_bound(const RootDatum& rd) { return rd.rank() == 1 ? 200 : (rd.rank() == 2 ? 16 : 10); }
    int max_len() const { return max_len_; }
    const HeckeAlgebra& algebra() const { return *H_; }

    HeckeElt basis(const ExtWeylElt& x) const
    {
        const RootDatum& rd = H_->datum();
        if (rd.length(x) > max_len_) throw Error("length bound exceeded");
        auto [k, u] = rd.split_left(x);
        HeckeElt b = coxeter_basis(u);
        if (k == 0) return b;
        return H_->mul_omega_left(rd.omega_group()[static_cast<size_t>(k)].x, b);
    }

    /// Coefficient h_{y,x} of H_y in b_x.
    LaurentV poly(const ExtWeylElt& y, const ExtWeylElt& x) const { return basis(x).coeff(y); }

    /// Classical P_{y,x}(q) from h_{y,x} = v^{ℓ(x)-ℓ(y)} P_{y,x}(v^{-2}); index k holds the q^k coefficient.
    std::vector<BigInt> classical(const ExtWeylElt& y, const ExtWeylElt& x) const
    {
        const RootDatum& rd = H_->datum();
        LaurentV h = poly(y, x);
        int d = rd.length(x) - rd.length(y);
        std::vector<BigInt> p;
        for (auto& [e, c] : h.terms()) {
            int k = d - e;
            if (k < 0 || k % 2 != 0) throw Error("internal: KL polynomial has unexpected degree pattern");
            k /= 2;
            if (static_cast<int>(p.size()) <= k) p.resize(static_cast<size_t>(k) + 1, 0);
            p[static_cast<size_t>(k)] = c;
        }
        return p;
    }

    long long mu(const ExtWeylElt& y, const ExtWeylElt& x) const
    {
        return static_cast<long long>(poly(y, x)[1]);
    }

private:
    HeckeElt coxeter_basis(const ExtWeylElt& u) const
    {
        const RootDatum& rd = H_->datum();
        if (use_cache_) {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->map.find(u);
            if (it != cache_->map.end()) return it->second;
        }
        HeckeElt b;
        const int lu = rd.length(u);
        if (lu == 0) {
            b = H_->one();
        } else {
            int s = -1;
            ExtWeylElt su;
            for (int i = 0; i < rd.num_nodes(); ++i) {
                su = rd.mul(rd.simple(i), u);
                if (rd.length(su) < lu) {
                    s = i;
                    break;
                }
            }
            HeckeElt bsu = coxeter_basis(su);
            b = H_->mul_simple_left(bsu, s) + LaurentV::v() * bsu;
            for (auto& [z, c] : bsu.sorted()) {
                if (z == su) continue;
                BigInt m = c[1];
                if (m == 0) continue;
                if (rd.length(rd.mul(rd.simple(s), z)) < rd.length(z)) b -= LaurentV(m) * coxeter_basis(z);
            }
        }
        if (use_cache_) {
            std::lock_guard<std::mutex> lock(cache_->mu);
            cache_->map.emplace(u, b);
        }
        return b;
    }

    struct Cache {
        std::mutex mu;
        std::unordered_map<ExtWeylElt, HeckeElt, ExtWeylHash> map;
    };

    const HeckeAlgebra* H_;
    int max_len_;
    bool use_cache_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Coxeter-part elements of length <= L, sorted by (length, reduced word).
inline std::vector<ExtWeylElt> enumerate_elements(const RootDatum& rd, int L)
{
    std::vector<ExtWeylElt> out;
    for (auto& a : enumerate_alcoves(rd, L)) out.push_back(a.u);
    return out;
}

struct CellPartition {
    int bound = 0;
    std::vector<std::vector<ExtWeylElt>> left, right, two_sided;
};

namespace detail {

/// Strongly connected components, ordered by their first vertex.
inline std::vector<std::vector<int>> scc(const std::vector<std::set<int>>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0), comp(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    std::vector<bool> on(static_cast<size_t>(n), false);
    int counter = 0, ncomp = 0;
    // Iterative Tarjan.
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] >= 0) continue;
        std::vector<std::pair<int, std::set<int>::const_iterator>> call{{root, adj[static_cast<size_t>(root)].begin()}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on[static_cast<size_t>(root)] = true;
        while (!call.empty()) {
            auto& [v, it] = call.back();
            if (it != adj[static_cast<size_t>(v)].end()) {
                int w = *it++;
                if (index[static_cast<size_t>(w)] < 0) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                    stack.push_back(w);
                    on[static_cast<size_t>(w)] = true;
                    call.push_back({w, adj[static_cast<size_t>(w)].begin()});
                } else if (on[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
                }
            } else {
                int vv = v;
                call.pop_back();
                if (!call.empty()) {
                    int p = call.back().first;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(vv)]);
                }
                if (low[static_cast<size_t>(vv)] == index[static_cast<size_t>(vv)]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on[static_cast<size_t>(w)] = false;
                        comp[static_cast<size_t>(w)] = ncomp;
                    } while (w != vv);
                    ++ncomp;
                }
            }
        }
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(ncomp));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Left, right and two-sided cells of W_aff^Cox restricted to length <= L.
/// Edge x -> y when b_y occurs in b_s b_x (left) or b_x b_s (right) for some simple s.
inline CellPartition cells(const KLBasis& kl, int L)
{
    const RootDatum& rd = kl.algebra().datum();
    if (L > kl.max_len()) throw Error("length bound exceeded");
    auto elems = enumerate_elements(rd, L);
    std::unordered_map<ExtWeylElt, int, ExtWeylHash> idx;
    for (size_t k = 0; k < elems.size(); ++k) idx[elems[k]] = static_cast<int>(k);
    const size_t n = elems.size();
    std::vector<std::set<int>> left(n), right(n), both(n);
    for (size_t k = 0; k < n; ++k) {
        const ExtWeylElt& x = elems[k];
        const int lx = rd.length(x);
        HeckeElt bx = kl.basis(x);
        for (int s = 0; s < rd.num_nodes(); ++s) {
            for (int side = 0; side < 2; ++side) {
                auto& adj = side == 0 ? left : right;
                auto act = [&](const ExtWeylElt& z) { return side == 0 ? rd.mul(rd.simple(s), z) : rd.mul(z, rd.simple(s)); };
                ExtWeylElt sx = act(x);
                if (rd.length(sx) < lx) continue; // b_s b_x = (v + v^{-1}) b_x
                if (auto it = idx.find(sx); it != idx.end()) adj[k].insert(it->second);
                for (auto& [z, c] : bx.terms()) {
                    if (z == x || c[1] == 0) continue;
                    if (rd.length(act(z)) < rd.length(z)) adj[k].insert(idx.at(z));
                }
            }
        }
        both[k].insert(left[k].begin(), left[k].end());
        both[k].insert(right[k].begin(), right[k].end());
    }
    auto to_elems = [&](const std::vector<std::vector<int>>& comps) {
        std::vector<std::vector<ExtWeylElt>> out;
        for (auto& c : comps) {
            std::vector<ExtWeylElt> e;
            for (int i : c) e.push_back(elems[static_cast<size_t>(i)]);
            out.push_back(e);
        }
        return out;
    };
    CellPartition p;
    p.bound = L;
    p.left = to_elems(detail::scc(left));
    p.right = to_elems(detail::scc(right));
    p.two_sided = to_elems(detail::scc(both));
    return p;
}

} // namespace affh
