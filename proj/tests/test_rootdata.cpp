#include "affh/rootdata.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace affh;

namespace {

oracle::Mat to_mat(const IMat& a) { return oracle::Mat(a.begin(), a.end()); }

const std::vector<std::string> kTypes{"A1", "A2", "B2", "C2", "G2", "A3"};

} // namespace

TEST(RootData, A1Basics)
{
    auto rd = RootDatum::preset("A1");
    EXPECT_EQ(rd.rank(), 1);
    EXPECT_EQ(rd.positive_coroots().size(), 1u);
    EXPECT_EQ(rd.coxeter_number(), 2);
    EXPECT_EQ(rd.omega_group().size(), 2u);
    EXPECT_EQ(rd.pair({1}, rd.fundamental_weight(0)), 1);
    EXPECT_EQ(rd.pair({1}, rd.simple_root(0)), 2);
}

TEST(RootData, A2AndG2CountsMatchClosure)
{
    for (auto [name, roots, h, omega] : std::vector<std::tuple<std::string, size_t, int, size_t>>{
             {"A2", 3, 3, 3}, {"G2", 6, 6, 1}}) {
        auto rd = RootDatum::preset(name);
        auto rs = oracle::roots_by_closure(to_mat(rd.cartan()));
        EXPECT_EQ(rd.positive_coroots().size(), roots) << name;
        EXPECT_EQ(rs.positive.size(), roots) << name;
        EXPECT_EQ(rd.coxeter_number(), h) << name;
        EXPECT_EQ(rs.coxeter_number, h) << name;
        EXPECT_EQ(rd.omega_group().size(), omega) << name;
    }
}

TEST(RootData, CorootsAndRootsAgreeWithClosure)
{
    for (auto& name : kTypes) {
        auto rd = RootDatum::preset(name);
        auto rs = oracle::roots_by_closure(to_mat(rd.cartan()));
        std::set<IVec> co(rd.positive_coroots().begin(), rd.positive_coroots().end());
        std::set<IVec> ro(rd.positive_roots().begin(), rd.positive_roots().end());
        std::set<IVec> oco, oro;
        for (auto& [r, c] : rs.positive) {
            oco.insert(c);
            oro.insert(rd.from_root_coords(r));
        }
        EXPECT_EQ(co, oco) << name;
        EXPECT_EQ(ro, oro) << name;
        EXPECT_EQ(rd.highest_coroot(), rs.highest_coroot) << name;
    }
}

TEST(RootData, HeightOfHighestCorootIsHMinusOne)
{
    for (auto& name : kTypes) {
        auto rd = RootDatum::preset(name);
        for (auto& c : rd.positive_coroots()) EXPECT_LE(rd.pair(c, rd.rho()), rd.coxeter_number() - 1);
        EXPECT_EQ(rd.pair(rd.highest_coroot(), rd.rho()), rd.coxeter_number() - 1) << name;
    }
}

TEST(RootData, FundamentalWeightsAreDual)
{
    for (auto& name : kTypes) {
        auto rd = RootDatum::preset(name);
        for (int i = 0; i < rd.rank(); ++i)
            for (int j = 0; j < rd.rank(); ++j) {
                IVec e(static_cast<size_t>(rd.rank()), 0);
                e[static_cast<size_t>(i)] = 1;
                EXPECT_EQ(rd.pair(e, rd.fundamental_weight(j)), i == j ? 1 : 0);
            }
    }
}

TEST(RootData, WeylOrderAndLongestElement)
{
    std::map<std::string, int> order{{"A1", 2}, {"A2", 6}, {"B2", 8}, {"C2", 8}, {"G2", 12}, {"A3", 24}};
    for (auto& name : kTypes) {
        auto rd = RootDatum::preset(name);
        EXPECT_EQ(rd.weyl_order(), order[name]) << name;
        EXPECT_EQ(rd.weyl_length(rd.longest()), static_cast<int>(rd.positive_coroots().size())) << name;
        IVec mu{};
        for (int i = 0; i < rd.rank(); ++i) mu.push_back(i + 3);
        EXPECT_EQ(rd.act(0, mu), mu);
    }
    auto a1 = RootDatum::preset("A1");
    EXPECT_EQ(a1.act(a1.longest(), {1}), IVec{-1});
    auto a2 = RootDatum::preset("A2");
    EXPECT_EQ(a2.weyl_length(a2.longest()), 3);
    EXPECT_EQ(a2.act(a2.longest(), {1, 0}), (IVec{0, -1}));
}

TEST(RootData, OmegaIsIndexOfRootLattice)
{
    std::map<std::string, size_t> index{{"A1", 2}, {"A2", 3}, {"B2", 2}, {"C2", 2}, {"G2", 1}, {"A3", 4}};
    for (auto& name : kTypes) {
        auto rd = RootDatum::preset(name);
        EXPECT_EQ(rd.omega_group().size(), index[name]) << name;
        auto marks = rd.marks();
        for (auto& om : rd.omega_group()) {
            EXPECT_EQ(rd.length(om.x), 0);
            std::vector<long long> permuted(marks.size());
            for (size_t i = 0; i < marks.size(); ++i) permuted[static_cast<size_t>(om.perm[i])] = marks[i];
            EXPECT_EQ(permuted, marks) << name;
        }
        EXPECT_EQ(RootDatum::preset(name, Lattice::Root).omega_group().size(), 1u);
    }
}

TEST(RootData, LengthMatchesCayleyGraphDistance)
{
    for (auto& name : {"A1", "A2", "B2", "G2"}) {
        auto rd = RootDatum::preset(name);
        oracle::AffineWeyl W(to_mat(rd.cartan()), 5);
        for (auto& x : W.elements(5)) EXPECT_EQ(rd.length(rd.from_word(W.word(x))), W.length(x)) << name;
    }
}

TEST(RootData, GroupLawIsSemidirect)
{
    auto rd = RootDatum::preset("B2");
    for (int w = 0; w < rd.weyl_order(); ++w)
        for (int u = 0; u < rd.weyl_order(); ++u) {
            IVec l{1, -2}, m{0, 3};
            auto lhs = rd.mul(rd.make(w, l), rd.make(u, m));
            IVec wm = rd.act(w, m);
            EXPECT_EQ(lhs, rd.make(rd.weyl_mul(w, u), IVec{l[0] + wm[0], l[1] + wm[1]}));
        }
}

TEST(RootData, RejectsInvalidCartan)
{
    EXPECT_THROW(RootDatum::build({{2, 1}, {1, 2}}, Lattice::Weight), Error);
    EXPECT_THROW(RootDatum::build({{2, -2}, {-2, 2}}, Lattice::Weight), Error);
    EXPECT_THROW(RootDatum::preset("E9"), Error);
}

TEST(RootData, AffineSuffixIsAccepted)
{
    EXPECT_EQ(RootDatum::preset("A2affine").cartan(), RootDatum::preset("A2").cartan());
}
