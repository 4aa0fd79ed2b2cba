#include "affh/antispherical.hpp"
#include "affh/kl.hpp"
#include "affh/suites.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace affh;

namespace {

oracle::Mat to_mat(const IMat& a) { return oracle::Mat(a.begin(), a.end()); }

LaurentV lv(const oracle::Poly& p)
{
    LaurentV r;
    for (auto& [e, c] : p) r += LaurentV(static_cast<long long>(c)) * LaurentV::monomial(e);
    return r;
}

HeckeElt to_hecke(const RootDatum& rd, const oracle::AffineWeyl& W, const oracle::Elt& e)
{
    HeckeElt h;
    for (auto& [y, p] : e) h.add(rd.from_word(W.word(y)), lv(p));
    return h;
}

const LaurentV v = LaurentV::v();
const LaurentV vi = LaurentV::vinv();

} // namespace

TEST(Hecke, QuadraticRelation)
{
    for (auto& name : {"A1", "A2", "B2", "C2", "G2"}) {
        auto rd = RootDatum::preset(name);
        HeckeAlgebra H(rd);
        for (int s = 0; s < rd.num_nodes(); ++s) {
            HeckeElt hs = H.standard(rd.simple(s));
            EXPECT_EQ(H.mul(hs, hs), H.one() + (vi - v) * hs) << name;
            EXPECT_EQ(H.mul(hs - vi * H.one(), hs + v * H.one()), HeckeElt()) << name;
            BraidWord p{BraidLetter::simple(s, 1)}, m{BraidLetter::simple(s, -1)};
            EXPECT_EQ(H.from_braid(p) - H.from_braid(m), (vi - v) * H.one());
            EXPECT_EQ(H.bar(hs), hs + (v - vi) * H.one());
        }
        for (auto& om : rd.omega_group())
            EXPECT_EQ(H.mul(H.standard(om.x), H.standard(rd.inverse(om.x))), H.one());
        EXPECT_EQ(H.from_braid({}), H.one());
        EXPECT_EQ(H.bar(H.one()), H.one());
    }
}

TEST(Hecke, BraidRelationA2)
{
    auto rd = RootDatum::preset("A2");
    HeckeAlgebra H(rd);
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            if (s == t) continue;
            HeckeElt a = H.standard(rd.simple(s)), b = H.standard(rd.simple(t));
            EXPECT_EQ(H.mul(H.mul(a, b), a), H.mul(H.mul(b, a), b));
        }
}

TEST(Hecke, MultiplicationMatchesOracle)
{
    auto rd = RootDatum::preset("B2");
    oracle::AffineWeyl W(to_mat(rd.cartan()), 5);
    HeckeAlgebra H(rd);
    auto el = W.elements(3);
    for (auto& x : el)
        for (int s = 0; s < W.num_gens(); ++s) {
            oracle::Elt e{{x, {{0, 1}}}};
            EXPECT_EQ(H.mul_simple_right(H.standard(rd.from_word(W.word(x))), s), to_hecke(rd, W, oracle::mul_gen_right(W, e, s)));
        }
}

TEST(Hecke, BarIsAnInvolution)
{
    auto rd = RootDatum::preset("G2");
    HeckeAlgebra H(rd);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        BraidWord b;
        for (int k = 0; k < 6; ++k) {
            int kind = static_cast<int>(rng() % 4);
            if (kind == 3) b.push_back(BraidLetter::theta({static_cast<long long>(rng() % 3) - 1, static_cast<long long>(rng() % 3) - 1}));
            else b.push_back(BraidLetter::simple(static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1));
        }
        HeckeElt h = H.from_braid(b);
        EXPECT_EQ(H.bar(H.bar(h)), h);
    }
}

TEST(Hecke, BernsteinCommutativity)
{
    for (auto& name : {"A2", "C2"}) {
        auto rd = RootDatum::preset(name);
        auto r = suites::bernstein(rd, name, 1);
        EXPECT_TRUE(r.ok()) << name;
    }
}

TEST(Hecke, KLBase)
{
    auto rd = RootDatum::preset("A2");
    HeckeAlgebra H(rd);
    KLBasis K(H, 3);
    EXPECT_EQ(K.basis(rd.identity()), H.one());
    for (int s = 0; s < 3; ++s) EXPECT_EQ(K.basis(rd.simple(s)), H.standard(rd.simple(s)) + v * H.one());
    EXPECT_THROW(K.basis(rd.from_word({0, 1, 2, 0})), Error);
    EXPECT_THROW(KLBasis(H, KLBasis::max_bound(rd) + 1), Error);
}

TEST(Hecke, AffineA1AllKLPolynomialsAreOne)
{
    auto rd = RootDatum::preset("A1");
    HeckeAlgebra H(rd);
    KLBasis K(H, 8);
    oracle::AffineWeyl W(to_mat(rd.cartan()), 8);
    for (auto& x : W.elements(8)) {
        ExtWeylElt X = rd.from_word(W.word(x));
        HeckeElt expect;
        // y ≤ x in the infinite dihedral group: every element strictly shorter, plus x itself
        for (auto& y : W.elements(W.length(x)))
            if (W.length(y) < W.length(x) || y == x) expect.add(rd.from_word(W.word(y)), LaurentV::monomial(W.length(x) - W.length(y)));
        EXPECT_EQ(K.basis(X), expect);
        for (auto& [y, c] : K.basis(X).terms()) EXPECT_EQ(K.classical(y, X), std::vector<BigInt>{1});
    }
}

TEST(Hecke, KLMatchesBarInvarianceSolver)
{
    for (auto [name, L] : std::vector<std::pair<std::string, int>>{{"A1", 8}, {"A2", 5}}) {
        auto rd = RootDatum::preset(name);
        HeckeAlgebra H(rd);
        KLBasis K(H, L);
        oracle::AffineWeyl W(to_mat(rd.cartan()), L);
        oracle::KLSolver S(W, L);
        for (auto& x : W.elements(L)) EXPECT_EQ(K.basis(rd.from_word(W.word(x))), to_hecke(rd, W, S.basis(x))) << name;
    }
}

TEST(Hecke, CellsAffineA1)
{
    auto rd = RootDatum::preset("A1");
    HeckeAlgebra H(rd);
    KLBasis K(H, 8);
    auto p = cells(K, 8);
    ASSERT_EQ(p.two_sided.size(), 2u);
    EXPECT_EQ(p.two_sided[0], std::vector<ExtWeylElt>{rd.identity()});
    EXPECT_EQ(p.left.size(), 3u);
    for (auto& c : p.left) {
        if (c.size() == 1) continue;
        int last = rd.reduced_word(c.front()).back();
        for (auto& x : c) EXPECT_EQ(rd.reduced_word(x).back(), last);
    }
}

TEST(Hecke, CellsMatchOracle)
{
    for (auto [name, L] : std::vector<std::pair<std::string, int>>{{"A1", 8}, {"A2", 4}, {"B2", 4}}) {
        auto rd = RootDatum::preset(name);
        HeckeAlgebra H(rd);
        KLBasis K(H, L + 1);
        oracle::AffineWeyl W(to_mat(rd.cartan()), L + 1);
        oracle::KLSolver S(W, L + 1);
        auto want = oracle::cells(W, S, L);
        auto got = cells(K, L);
        auto as_sets = [&](const std::vector<std::vector<oracle::Affine>>& cs) {
            std::set<std::set<std::vector<int>>> out;
            for (auto& c : cs) {
                std::set<std::vector<int>> s;
                for (auto& x : c) s.insert(W.word(x));
                out.insert(s);
            }
            return out;
        };
        auto lib_sets = [&](const std::vector<std::vector<ExtWeylElt>>& cs) {
            std::set<std::set<std::vector<int>>> out;
            for (auto& c : cs) {
                std::set<std::vector<int>> s;
                for (auto& x : c) s.insert(W.word(W.from_word(rd.reduced_word(x))));
                out.insert(s);
            }
            return out;
        };
        EXPECT_EQ(lib_sets(got.left), as_sets(want.left)) << name;
        EXPECT_EQ(lib_sets(got.two_sided), as_sets(want.two_sided)) << name;
    }
}

TEST(Hecke, IdentityIsAloneInItsCell)
{
    for (auto& name : {"A2", "G2"}) {
        auto rd = RootDatum::preset(name);
        HeckeAlgebra H(rd);
        KLBasis K(H, 4);
        for (int L : {2, 3, 4}) {
            auto p = cells(K, L);
            EXPECT_EQ(p.two_sided[0], std::vector<ExtWeylElt>{rd.identity()});
        }
    }
}

TEST(Hecke, Antispherical)
{
    for (auto [name, L] : std::vector<std::pair<std::string, int>>{{"A1", 6}, {"A2", 4}}) {
        auto rd = RootDatum::preset(name);
        HeckeAlgebra H(rd);
        KLBasis K(H, L);
        AntisphericalModule M(K);
        EXPECT_EQ(M.act(M.generator(), H.one()), M.generator());
        for (int s = 1; s <= rd.rank(); ++s) EXPECT_TRUE(M.act(M.generator(), K.basis(rd.simple(s))).is_zero());
        oracle::AffineWeyl W(to_mat(rd.cartan()), L);
        oracle::KLSolver S(W, L);
        auto reps = M.minimal_reps(L);
        int n = 0;
        for (auto& x : W.elements(L)) {
            if (!S.is_minimal(x)) continue;
            ++n;
            ExtWeylElt X = rd.from_word(W.word(x));
            EXPECT_TRUE(M.is_minimal(X));
            EXPECT_EQ(M.canonical(X), to_hecke(rd, W, S.antispherical(x))) << name;
        }
        EXPECT_EQ(static_cast<size_t>(n), reps.size());
    }
}
