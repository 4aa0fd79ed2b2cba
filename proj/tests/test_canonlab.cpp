#include "affh/canonlab.hpp"
#include "affh/springer_a1.hpp"
#include "affh/suites.hpp"

#include <gtest/gtest.h>

using namespace affh;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v(1, k); }
LaurentPoly x(int k) { return LaurentPoly::x(1, 1, k); }
LaurentPoly c(long long n) { return LaurentPoly(1, n); }

/// Free module of the given rank with bar = identity on the basis, v -> v^{-1} on scalars, characters inert under bar and
/// conjugated in the second argument of the pairing.
PairedModule module(std::vector<std::vector<RationalClass>> pairing, int dim_Be = 0)
{
    PairedModule m;
    m.torus_rank = 1;
    const size_t n = pairing.size();
    for (size_t i = 0; i < n; ++i) m.labels.push_back("e" + std::to_string(i));
    m.bar.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(1)));
    for (size_t i = 0; i < n; ++i) m.bar[i][i] = c(1);
    m.pairing = std::move(pairing);
    m.dim_Be = dim_Be;
    m.bar_coeff = {true, false};
    m.pairing_conj = {false, true};
    return m;
}

RationalClass geometric()
{
    RationalClass r(c(1));
    r.divide_by(c(1) - x(1) * v(-2));
    return r;
}

bool all_pass(const CanonicalReport& r) { return r.passed(); }

} // namespace

TEST(Canonlab, BarFixed)
{
    auto m = module({{RationalClass(c(1)), RationalClass(1)}, {RationalClass(1), RationalClass(c(1))}});
    EXPECT_TRUE(m.bar_is_involution());
    EXPECT_TRUE(check_bar_fixed(m, {c(3), c(-2)}));
    EXPECT_TRUE(check_bar_fixed(m, {x(1), c(0)}));
    EXPECT_FALSE(check_bar_fixed(m, {v(1), c(0)}));
    PairedModule twisted = m;
    twisted.bar[0][0] = c(-1);
    EXPECT_FALSE(check_bar_fixed(twisted, {c(1), c(0)}));
}

TEST(Canonlab, AsymptoticOrthonormality)
{
    auto m = module({{RationalClass(c(1))}});
    EXPECT_TRUE(all_pass(asymptotic_orthonormality(m, {{c(1)}}, 12)));
    auto g = module({{geometric()}});
    EXPECT_TRUE(all_pass(asymptotic_orthonormality(g, {{c(1)}}, 12)));
    auto bad = module({{RationalClass(v(1) + c(1))}});
    auto rep = asymptotic_orthonormality(bad, {{c(1)}}, 12);
    ASSERT_FALSE(rep.passed());
    ASSERT_FALSE(rep.entries.front().leading.empty());
    EXPECT_NE(rep.entries.front().leading.front().find("v"), std::string::npos);
}

TEST(Canonlab, Recognize)
{
    auto m = module({{RationalClass(c(1)), RationalClass(1)}, {RationalClass(1), RationalClass(c(1))}});
    std::vector<ModVec> basis{{c(1), c(0)}, {c(0), c(1)}};
    auto r = recognize(m, basis, {c(0), c(1)}, 12);
    EXPECT_EQ(r.sign, 1);
    EXPECT_EQ(r.index, 1);
    auto n = recognize(m, basis, {c(-1), c(0)}, 12);
    EXPECT_EQ(n.sign, -1);
    EXPECT_EQ(n.index, 0);
    auto t = recognize(m, basis, {x(2), c(0)}, 12);
    EXPECT_EQ(t.twist, (Exps{0, 2}));
    try {
        recognize(m, basis, {v(1), c(0)}, 12);
        FAIL() << "v multiple was recognized";
    } catch (const Error& e) {
        EXPECT_STREQ(e.what(), "not asymptotically norm one");
    }
}

TEST(Canonlab, Duality)
{
    auto m = module({{RationalClass(c(1))}}, 1);
    EXPECT_TRUE(all_pass(duality_check(m, {{c(1)}}, {{v(-2)}})));
    auto m2 = module({{RationalClass(c(1)), RationalClass(v(-1))}, {RationalClass(1), RationalClass(c(1))}}, 1);
    EXPECT_FALSE(duality_check(m2, {{c(1), c(0)}, {c(0), c(1)}}, {{v(-2), c(0)}, {c(0), v(-2)}}).passed());
}

TEST(Canonlab, ParityAndPositivity)
{
    auto p = module({{RationalClass(c(2)), RationalClass(c(3))}, {RationalClass(c(3)), RationalClass(c(1))}});
    std::vector<ModVec> basis{{c(1), c(0)}, {c(0), c(1)}};
    EXPECT_TRUE(all_pass(parity_check(p, basis, 12)));
    EXPECT_TRUE(all_pass(positivity_check(p, basis, RationalClass(c(1)), 12)));
    auto mixed = module({{RationalClass(v(-1) + v(-2))}});
    EXPECT_FALSE(parity_check(mixed, {{c(1)}}, 12).passed());
    auto neg = module({{RationalClass(c(1) - v(-2))}});
    EXPECT_FALSE(positivity_check(neg, {{c(1)}}, RationalClass(c(1)), 12).passed());
}

TEST(Canonlab, SpringerInstancePasses)
{
    for (auto e : {Nilpotent::Zero, Nilpotent::Regular}) {
        auto rep = suites::a1_report(e, 12);
        for (auto& entry : rep.entries)
            if (!entry.informational) EXPECT_EQ(entry.verdict, Verdict::Pass) << entry.axiom;
    }
}
