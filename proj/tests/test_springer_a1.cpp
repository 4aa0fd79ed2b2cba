#include "affh/springer_a1.hpp"

#include <gtest/gtest.h>

using namespace affh;

namespace {

LaurentPoly x(int k) { return LaurentPoly::x(1, 1, k); }

/// Character of H^0(P^1, O(n)) = Sym^n of the standard representation.
LaurentPoly sym_character(int n)
{
    LaurentPoly s(1);
    for (int k = 0; k <= n; ++k) s += x(n - 2 * k);
    return s;
}

std::vector<std::vector<Rational>> at_one(const std::vector<std::vector<RationalClass>>& m)
{
    std::vector<std::vector<Rational>> out;
    for (auto& row : m) {
        out.emplace_back();
        for (auto& c : row) out.back().push_back(c.eval_at({1, 1}));
    }
    return out;
}

} // namespace

TEST(SpringerA1, WeightsComeFromMatrices)
{
    auto w = sl2_weight_oracle(Nilpotent::Zero);
    ASSERT_EQ(w.points.size(), 2u);
    EXPECT_EQ(w.zgf.size(), 3u);
    EXPECT_EQ(w.h.size(), 1u);
    // the tangent characters at the two Borels are inverse to each other
    EXPECT_EQ(w.points[0].base, w.points[1].base.invert_chars());
    EXPECT_EQ(sl2_weight_oracle(Nilpotent::Regular).points.size(), 1u);
}

TEST(SpringerA1, LineBundles)
{
    A1Instance I(Nilpotent::Zero);
    auto O = I.line_bundle(0, 0);
    EXPECT_EQ(O, (FixedClass{RationalClass(LaurentPoly(1, 1)), RationalClass(LaurentPoly(1, 1))}));
    auto O1 = I.line_bundle(1, 0);
    std::set<std::string> got{O1[0].str(), O1[1].str()};
    EXPECT_EQ(got, (std::set<std::string>{RationalClass(x(1)).str(), RationalClass(x(-1)).str()}));
    for (int n = -3; n <= 3; ++n)
        for (int d = -2; d <= 2; ++d)
            EXPECT_EQ(I.line_bundle(n, d), I.scale(I.line_bundle(n, 0), RationalClass(LaurentPoly::v(1, d))));
    for (int n = -4; n <= 4; ++n) EXPECT_TRUE(I.gkm(I.line_bundle(n, 0))) << n;
}

TEST(SpringerA1, EulerCharacteristicsByLocalization)
{
    A1Instance I(Nilpotent::Zero);
    for (int n = 0; n <= 4; ++n) {
        RationalClass chi = I.chi_base(I.line_bundle(n, 0));
        ASSERT_TRUE(chi.is_polynomial()) << n;
        EXPECT_EQ(chi.polynomial(), sym_character(n)) << n;
    }
    EXPECT_TRUE(I.chi_base(I.line_bundle(-1, 0)).is_zero());
    auto O = I.line_bundle(0, 0);
    EXPECT_EQ(I.p1_limit(I.euler_pairing(O, O)), Rational(1));
    EXPECT_EQ(I.p1_limit(I.euler_pairing(I.line_bundle(-1, 0), O)), Rational(0));
    EXPECT_EQ(I.p1_limit(I.euler_pairing(I.line_bundle(1, 0), O)), Rational(2));
    for (int n = -2; n <= 2; ++n)
        for (int m = -2; m <= 2; ++m)
            EXPECT_EQ(I.euler_pairing(I.line_bundle(n, 1), I.line_bundle(m, 0)),
                      I.euler_pairing(I.line_bundle(m, 0), I.line_bundle(n, 1)));
}

TEST(SpringerA1, BraidAction)
{
    A1Instance I(Nilpotent::Zero);
    EXPECT_TRUE(I.kernel_gkm());
    EXPECT_TRUE(I.quadratic_relation());
    EXPECT_TRUE(I.springer_check());
    auto m = at_one(I.braid_action());
    ASSERT_EQ(m.size(), 2u);
    std::vector<std::vector<Rational>> sq(2, std::vector<Rational>(2, 0));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t k = 0; k < 2; ++k) sq[i][j] += m[i][k] * m[k][j];
    EXPECT_EQ(sq, (std::vector<std::vector<Rational>>{{1, 0}, {0, 1}}));
}

TEST(SpringerA1, SkyscraperIsIndependentOfBorel)
{
    A1Instance I(Nilpotent::Zero);
    auto c0 = I.coords(I.skyscraper(0)), c1 = I.coords(I.skyscraper(1));
    for (size_t k = 0; k < c0.size(); ++k) EXPECT_EQ(c0[k].substitute({{1, 1}}), c1[k].substitute({{1, 1}}));
}

TEST(SpringerA1, Bases)
{
    A1Instance I(Nilpotent::Zero);
    auto b = I.build_bases();
    EXPECT_EQ(b.BS.size(), 2u);
    EXPECT_EQ(b.Be.size(), 2u);
    EXPECT_EQ(I.dim_Be(), 1);
    for (size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(I.beta_S(b.BS[i]), b.BS[i]);
        EXPECT_EQ(I.beta_S(I.beta_S(b.Be[i])), b.Be[i]);
        EXPECT_EQ(I.beta_S(b.Be[i]), I.scale(I.beta_e(b.Be[i]), RationalClass(LaurentPoly::v(1, 2))));
        for (size_t j = 0; j < 2; ++j) {
            RationalClass want = i == j ? RationalClass(LaurentPoly::v(1, -2)) : RationalClass(1);
            EXPECT_EQ(I.pairing(b.Ltilde[i], b.BS[j]), want);
        }
    }
    A1Instance R(Nilpotent::Regular);
    auto rb = R.build_bases();
    EXPECT_EQ(rb.BS.size(), 1u);
    EXPECT_EQ(R.dim_Be(), 0);
}

TEST(SpringerA1, AppendixShadow)
{
    auto s = appendix_shadow();
    EXPECT_TRUE(s.ok);
    EXPECT_TRUE(s.involution);
    EXPECT_EQ(s.graded_signs, (std::vector<int>{-1, 1}));
}

TEST(SpringerA1, NonIntegralClassIsRejected)
{
    A1Instance I(Nilpotent::Zero);
    EXPECT_THROW(I.coords(I.scale(I.line_bundle(0, 0), RationalClass(LaurentPoly(1, 1)) / RationalClass(LaurentPoly(1, 2)))), Error);
}
