#include "affh/rational_class.hpp"
#include "affh/serialize.hpp"
#include "affh/springer_a1.hpp"

#include <gtest/gtest.h>

using namespace affh;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v(1, k); }
LaurentPoly x(int k) { return LaurentPoly::x(1, 1, k); }
LaurentPoly one() { return LaurentPoly(1, 1); }

} // namespace

TEST(Coeffs, LaurentArithmetic)
{
    EXPECT_EQ((v(1) + x(1) * v(2)).bar_v(), v(-1) + x(1) * v(-2));
    EXPECT_EQ((x(1) * v(1)).dual_all(), x(-1) * v(-1));
    EXPECT_EQ((one() + v(2)).eval_at({-1, 1}), Rational(2));
    EXPECT_EQ((one() + v(1)) * (one() - v(1)), one() - v(2));
    EXPECT_THROW((one() + v(1)).eval_at({0, 1}), Error);
    EXPECT_THROW((one() + v(1)).substitute({{0, 2}}), Error);
}

TEST(Coeffs, GeometricSeries)
{
    RationalClass r(one());
    r.divide_by(one() - x(1) * v(-2));
    SeriesTrunc s = r.expand(3);
    EXPECT_EQ(s.coeff(0), one());
    EXPECT_EQ(s.coeff(-1), LaurentPoly(1));
    EXPECT_EQ(s.coeff(-2), x(1));
    EXPECT_EQ(s.coeff(-3), LaurentPoly(1));
    EXPECT_THROW(s.coeff(-4), Error);
}

TEST(Coeffs, ExactCancellation)
{
    RationalClass q(v(1));
    q.divide_by(v(1));
    EXPECT_TRUE(q.is_polynomial());
    EXPECT_EQ(q.polynomial(), one());
    EXPECT_TRUE(q.expand(12).coeffs().size() == 1);

    RationalClass g(one());
    g.divide_by(one() - x(1) * v(-2));
    RationalClass prod = RationalClass(one() - x(1) * v(-2)) * g;
    EXPECT_TRUE(prod.is_polynomial());
    EXPECT_EQ(prod.polynomial(), one());
    EXPECT_EQ(g - g, RationalClass(1));
}

TEST(Coeffs, ExteriorClass)
{
    EXPECT_EQ(exterior_class({}, 1), one());
    EXPECT_EQ(exterior_class({x(1) * v(-2)}, 1), one() - x(1) * v(-2));
    EXPECT_EQ(exterior_class({x(1), x(-1) * v(2)}, 1), (one() - x(1)) * (one() - x(-1) * v(2)));
    EXPECT_THROW(exterior_class({one() + x(1)}, 1), Error);
}

TEST(Coeffs, Nabla)
{
    std::vector<LaurentPoly> same{x(2) * v(-2), v(-2)};
    EXPECT_EQ(nabla_e(same, same, 1), RationalClass(one()));
    EXPECT_THROW(nabla_e({}, {one()}, 1), Error);

    // e regular: Z_g(f) is spanned by f, and ∇ still has constant term 1
    auto reg = sl2_weight_oracle(Nilpotent::Regular);
    EXPECT_EQ(nabla_e(reg.zgf, reg.h, reg.torus_rank).expand(12).coeff(0), LaurentPoly(reg.torus_rank, 1));

    // e = 0: ∇_e ∈ 1 + v^{-1} R[[v^{-1}]]
    A1Instance inst(Nilpotent::Zero);
    SeriesTrunc s = inst.nabla().expand(12);
    EXPECT_EQ(s.coeff(0), LaurentPoly(1, 1));
    ASSERT_TRUE(s.lead().has_value());
    EXPECT_EQ(*s.lead(), 0);
}

TEST(Coeffs, DenominatorVanishingIsAnError)
{
    RationalClass r(one());
    r.divide_by(one() - x(1));
    EXPECT_THROW(r.eval_at({1, 1}), Error);
    EXPECT_EQ(r.eval_at({1, -1}), Rational(1, 2));
}

TEST(Coeffs, SerializationRoundTrip)
{
    LaurentPoly p = v(3) - x(-2) * v(-1) + LaurentPoly(1, 7);
    EXPECT_EQ(io::parse_poly(io::json::parse(io::to_json(p).dump()), 1), p);
    RationalClass r(p);
    r.divide_by(one() - x(1) * v(-2));
    r.divide_by(one() - x(1) * v(-2));
    EXPECT_EQ(io::parse_rational_class(io::json::parse(io::to_json(r).dump()), 1), r);
    SeriesTrunc s = r.expand(6);
    auto back = io::parse_series(io::json::parse(io::to_json(s).dump()));
    EXPECT_EQ(back.coeffs(), s.coeffs());
    EXPECT_EQ(back.floor(), s.floor());
}
