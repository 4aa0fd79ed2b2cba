#include "affh/suites.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace affh;
using io::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(AFFH_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& body)
{
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

} // namespace

TEST(Cli, BOfAffineNeighbor)
{
    auto r = run("b --type A2 --from \"[]\" --to \"[0]\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"word\":[\"s0+\"]}\n");
}

TEST(Cli, AffineA1KLTableIsAllOnes)
{
    auto r = run("kl --type A1affine --max-len 6");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    ASSERT_FALSE(j["rows"].empty());
    for (auto& row : j["rows"]) EXPECT_EQ(row["P"], "1");
}

TEST(Cli, CheckCocycle)
{
    auto r = run("check --suite cocycle --type B2 --radius 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["verdict"], "pass");
}

TEST(Cli, ParentFlagsWorkOnEitherSide)
{
    EXPECT_EQ(run("--type A2 roots").out, run("roots --type A2").out);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("roots --type E9").code, 2);
    EXPECT_EQ(run("b --type A2 --from \"[\" --to \"[]\"").code, 2);
    EXPECT_EQ(run("kl --type A2 --max-len 99").code, 2);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("hecke-eval --type A1 --word '[\"q7\"]'").code, 2);
    EXPECT_EQ(run("b --type A2 --from \"[]\" --to \"[0]\" --gallery \"[1]\"").code, 2);
}

TEST(Cli, CustomCartanFile)
{
    auto path = write_temp("g2.json", R"({"cartan": [[2,-1],[-3,2]], "lattice": "weight"})");
    auto r = run("roots --cartan " + path);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["coxeter_number"], 6);
    auto bad = write_temp("bad.json", R"({"cartan": [[2,1],[1,2]]})");
    EXPECT_EQ(run("roots --cartan " + bad).code, 2);
}

TEST(Cli, CanonVerify)
{
    auto a1 = run("canon-verify --nilpotent zero");
    EXPECT_EQ(a1.code, 0);
    EXPECT_EQ(json::parse(a1.out)["verdict"], "pass");
    const std::string unit = R"([{"term":{"v":0,"x":[]},"coef":1}])";
    const std::string mod = R"({"torus_rank":0,"labels":["e"],"bar":[[)" + unit + R"(]],"pairing":[[{"num":)" + unit +
                            R"(,"den":[]}]],"dim_Be":1})";
    auto good = write_temp("good.json", R"({"module":)" + mod + R"(,"basis":[[)" + unit + R"(]],"dual_basis":[[[{"term":{"v":-2,"x":[]},"coef":1}]]]})");
    auto r = run("canon-verify --input " + good);
    EXPECT_EQ(r.code, 0);
    auto fail = write_temp("fail.json", R"({"module":)" + mod + R"(,"basis":[[[{"term":{"v":1,"x":[]},"coef":1}]]]})");
    EXPECT_EQ(run("canon-verify --input " + fail).code, 1);
}

TEST(Cli, A1DemoHasBothReports)
{
    auto r = run("a1-demo");
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    ASSERT_EQ(j["reports"].size(), 2u);
    for (auto& rep : j["reports"]) EXPECT_EQ(rep["verdict"], "pass");
}

TEST(Cli, TsvOutput)
{
    auto r = run("kl --type A1 --max-len 2 --format tsv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("P\tmu\tx\ty\n"), std::string::npos);
    EXPECT_EQ(run("roots --type A1 --format xml").code, 2);
}

TEST(Cli, Deterministic)
{
    for (auto& args : {"kl --type A2 --max-len 3", "cells --type A1 --max-len 5", "antispherical --type A2 --max-len 3",
                       "check --suite translation --type C2 --seed 5"})
        EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Serialize, RoundTrips)
{
    for (auto& name : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
        auto rd = RootDatum::preset(name);
        auto r = suites::roundtrip(rd, name);
        EXPECT_TRUE(r.ok()) << name;
    }
    EXPECT_TRUE(suites::roundtrip_coeffs().ok());
}

TEST(Serialize, ReportAndModule)
{
    auto rep = suites::a1_report(Nilpotent::Zero, 12);
    auto back = io::parse_report(json::parse(io::to_json(rep).dump()));
    EXPECT_EQ(back.name, rep.name);
    EXPECT_EQ(io::to_json(back).dump(), io::to_json(rep).dump());
    A1Instance I(Nilpotent::Zero);
    auto m = I.modules().S;
    auto m2 = io::parse_paired_module(json::parse(io::to_json(m).dump()));
    EXPECT_EQ(io::to_json(m2), io::to_json(m));
    EXPECT_THROW(io::parse_letter("theta:[1", RootDatum::preset("A2")), Error);
}
