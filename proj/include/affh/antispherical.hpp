#pragma once

#include "affh/kl.hpp"

namespace affh {

/// Right H-module with basis N_x, x minimal in W x, induced from the sign character
/// (N_e H_s = -v N_e for finite s) or, with spherical = true, from H_s -> v^{-1}.
class AntisphericalModule {
public:
    AntisphericalModule(const KLBasis& kl, bool spherical = false) : kl_(&kl), spherical_(spherical) {}

    const RootDatum& datum() const { return kl_->algebra().datum(); }

    bool is_minimal(const ExtWeylElt& x) const
    {
        const RootDatum& rd = datum();
        const int lx = rd.length(x);
        for (int i = 1; i <= rd.rank(); ++i)
            if (rd.length(rd.mul(rd.simple(i), x)) < lx) return false;
        return true;
    }

    HeckeElt generator() const { return HeckeElt::basis(datum().identity()); }

    HeckeElt act_simple(const HeckeElt& m, int i, int exp = 1) const
    {
        const RootDatum& rd = datum();
        const ExtWeylElt& s = rd.simple(i);
        const LaurentV q = vinv_minus_v();
        const LaurentV stuck = spherical_ ? LaurentV::vinv() : -LaurentV::v();
        HeckeElt r;
        for (auto& [x, c] : m.terms()) {
            ExtWeylElt y = rd.mul(x, s);
            int lx = rd.length(x), ly = rd.length(y);
            if (ly < lx) {
                r.add(y, c);
                r.add(x, q * c);
            } else if (is_minimal(y)) {
                r.add(y, c);
            } else {
                r.add(x, stuck * c);
            }
        }
        if (exp == -1) r += v_minus_vinv() * m;
        else if (exp != 1) throw Error("simple letter exponent must be +1 or -1");
        return r;
    }

    HeckeElt act_omega(const HeckeElt& m, const ExtWeylElt& omega) const
    {
        HeckeElt r;
        for (auto& [x, c] : m.terms()) r.add(datum().mul(x, omega), c);
        return r;
    }

    /// m · h
    HeckeElt act(const HeckeElt& m, const HeckeElt& h) const
    {
        const RootDatum& rd = datum();
        HeckeElt out;
        for (auto& [y, c] : h.terms()) {
            auto [k, u] = rd.split_left(y);
            HeckeElt t = k == 0 ? m : act_omega(m, rd.omega_group()[static_cast<size_t>(k)].x);
            for (int i : rd.reduced_word(u)) t = act_simple(t, i, 1);
            out += c * t;
        }
        return out;
    }

    HeckeElt act_braid(HeckeElt m, const BraidWord& b) const
    {
        for (auto& l : b) {
            switch (l.kind) {
            case BraidLetter::Kind::Simple: m = act_simple(m, l.node, l.exp); break;
            case BraidLetter::Kind::Omega: m = act_omega(m, datum().omega_group().at(static_cast<size_t>(l.omega)).x); break;
            case BraidLetter::Kind::Theta: m = act_braid(std::move(m), theta(datum(), l.lambda)); break;
            }
        }
        return m;
    }

    /// N_e · b_x for a minimal representative x.
    HeckeElt canonical(const ExtWeylElt& x) const
    {
        if (!is_minimal(x)) throw Error("element is not a minimal coset representative");
        return act(generator(), kl_->basis(x));
    }

    /// Minimal representatives in the Coxeter part of length <= L, sorted by (length, word).
    std::vector<ExtWeylElt> minimal_reps(int L) const
    {
        std::vector<ExtWeylElt> out;
        for (auto& x : enumerate_elements(datum(), L))
            if (is_minimal(x)) out.push_back(x);
        return out;
    }

private:
    const KLBasis* kl_;
    bool spherical_;
};

} // namespace affh
