// affh: command-line front end. JSON (default) or TSV on stdout, diagnostics on stderr.
// Exit codes: 0 success, 1 a checked axiom failed, 2 usage or input error.

#include "affh/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace affh;
using io::json;

namespace {

struct Global {
    std::string type;
    std::string cartan;
    int max_len = -1;
    int order = 12;
    std::string format = "json";
    std::uint64_t seed = 1;
};

struct UsageError : Error {
    using Error::Error;
};

json parse_arg(const std::string& s, const std::string& flag)
{
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded()) throw UsageError("malformed JSON in " + flag + ": " + s);
    return j;
}

std::vector<int> parse_nodes(const std::string& s, const std::string& flag)
{
    std::vector<int> out;
    for (auto c : io::parse_ivec(parse_arg(s, flag))) out.push_back(static_cast<int>(c));
    return out;
}

std::pair<RootDatum, std::string> datum(const Global& g)
{
    if (!g.cartan.empty()) {
        std::ifstream in(g.cartan);
        if (!in) throw UsageError("cannot open Cartan file " + g.cartan);
        std::stringstream ss;
        ss << in.rdbuf();
        return {io::parse_root_datum(parse_arg(ss.str(), "--cartan")), "custom"};
    }
    if (g.type.empty()) throw UsageError("--type or --cartan is required");
    return {RootDatum::preset(g.type), g.type};
}

Alcove alcove_arg(const RootDatum& rd, const std::string& s, const std::string& flag)
{
    auto nodes = parse_nodes(s, flag);
    for (int i : nodes)
        if (i < 0 || i >= rd.num_nodes()) throw UsageError(flag + " uses a node outside 0.." + std::to_string(rd.rank()));
    return from_address(rd, nodes);
}

std::string q_poly(const std::vector<BigInt>& p)
{
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string c = p[k] == 1 && k > 0 ? "" : to_string(p[k]);
        s += k == 0 ? c : c + (k == 1 ? "q" : "q^" + std::to_string(k));
    }
    return s.empty() ? "0" : s;
}

json word_of(const RootDatum& rd, const ExtWeylElt& x) { return rd.reduced_word(x); }

// ---- TSV ----------------------------------------------------------------

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Arrays of objects become a table; objects become key/value lines, recursing into table-valued keys.
void tsv(std::ostream& os, const json& j, const std::string& prefix = "")
{
    auto is_table = [](const json& v) { return v.is_array() && !v.empty() && v.front().is_object(); };
    if (is_table(j)) {
        bool nested = false;
        for (auto& [k, v] : j.front().items()) nested = nested || is_table(v);
        if (nested) {
            for (size_t i = 0; i < j.size(); ++i) tsv(os, j[i], prefix + "[" + std::to_string(i) + "]");
            return;
        }
        std::vector<std::string> keys;
        for (auto& [k, v] : j.front().items()) keys.push_back(k);
        if (!prefix.empty()) os << "# " << prefix << "\n";
        for (size_t i = 0; i < keys.size(); ++i) os << (i ? "\t" : "") << keys[i];
        os << "\n";
        for (auto& row : j) {
            for (size_t i = 0; i < keys.size(); ++i) os << (i ? "\t" : "") << (row.contains(keys[i]) ? cell(row[keys[i]]) : "");
            os << "\n";
        }
        return;
    }
    if (j.is_object()) {
        std::vector<std::pair<std::string, json>> tables;
        for (auto& [k, v] : j.items()) {
            if (is_table(v)) tables.emplace_back(k, v);
            else os << (prefix.empty() ? k : prefix + "." + k) << "\t" << cell(v) << "\n";
        }
        for (auto& [k, v] : tables) tsv(os, v, prefix.empty() ? k : prefix + "." + k);
        return;
    }
    os << cell(j) << "\n";
}

void emit(const Global& g, const json& j)
{
    if (g.format == "tsv") tsv(std::cout, j);
    else std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact alcove, affine Hecke algebra and canonical basis computations"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--type", g.type, "Type preset: A1, A2, B2, C2, G2, A3 (optional suffix 'affine')");
    app.add_option("--cartan", g.cartan, "JSON file {\"cartan\": [[...]], \"lattice\": \"weight\"|\"root\"}");
    app.add_option("--max-len", g.max_len, "Length bound for KL, cells and antispherical computations");
    app.add_option("--order", g.order, "Truncation order of v^{-1} expansions")->check(CLI::Range(1, 200));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", g.seed, "Seed for randomized property sampling");

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    std::string address, point, translate, act, from, to, gal, word, lambda, suite = "all", input, nilpotent = "zero";
    bool bar = false, spherical = false;
    int radius = 3, samples = 100;

    auto* roots = sub("roots", "Root datum summary");
    auto* alcove = sub("alcove", "Alcove from an address or an interior point");
    alcove->add_option("--address", address, "Node word, e.g. \"[0,1]\"");
    alcove->add_option("--point", point, "Rational coordinates, e.g. '[\"1/3\",\"-1/6\"]'");
    alcove->add_option("--translate", translate, "Weight shift lambda");
    alcove->add_option("--act", act, "Node word acting on the right");
    auto* gallery_cmd = sub("gallery", "Minimal gallery between two alcoves");
    gallery_cmd->add_option("--from", from)->required();
    gallery_cmd->add_option("--to", to)->required();
    auto* b = sub("b", "Braid word b(A1, A2)");
    b->add_option("--from", from)->required();
    b->add_option("--to", to)->required();
    b->add_option("--gallery", gal, "Node sequence of a (possibly non-minimal) gallery");
    auto* theta_cmd = sub("theta", "Braid word of theta_lambda");
    theta_cmd->add_option("--lambda", lambda)->required();
    auto* heval = sub("hecke-eval", "Hecke image of a braid word");
    heval->add_option("--word", word, "e.g. '[\"s0+\",\"s1-\",\"omega:1\",\"theta:[1,0]\"]'")->required();
    heval->add_flag("--bar", bar, "Apply the bar involution to the image");
    auto* kl_cmd = sub("kl", "Kazhdan-Lusztig polynomials up to the length bound");
    auto* cells_cmd = sub("cells", "Left, right and two-sided cells restricted to the length bound");
    auto* as = sub("antispherical", "Canonical basis of the antispherical module");
    as->add_flag("--spherical", spherical, "Induce from H_s -> v^{-1} instead of the sign character");
    auto* canon = sub("canon-verify", "Run the canonical basis axioms on a paired module");
    canon->add_option("--input", input, "JSON file with module, basis and optional dual_basis, nabla, recognize");
    canon->add_option("--nilpotent", nilpotent, "Built-in SL2 instance when no input is given")->check(CLI::IsMember({"zero", "regular"}));
    auto* demo = sub("a1-demo", "Full report for the SL2 instance, both nilpotents");
    auto* check = sub("check", "Property suites");
    check->add_option("--suite", suite, "Suite name or 'all'");
    check->add_option("--radius", radius, "Alcove radius for geometric suites")->check(CLI::Range(0, 6));
    check->add_option("--samples", samples, "Random samples for the translation suite")->check(CLI::Range(1, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (roots->parsed()) {
            auto [rd, name] = datum(g);
            json j = io::to_json(rd);
            j["type"] = name;
            emit(g, j);
            return 0;
        }
        if (alcove->parsed()) {
            auto [rd, name] = datum(g);
            if (address.empty() == point.empty()) throw UsageError("give exactly one of --address and --point");
            Alcove a = fundamental(rd);
            if (!address.empty()) {
                a = alcove_arg(rd, address, "--address");
            } else {
                std::vector<Rational> p;
                json pj = parse_arg(point, "--point");
                if (!pj.is_array() || static_cast<int>(pj.size()) != rd.rank()) throw UsageError("--point needs rank coordinates");
                for (auto& c : pj) p.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
                a = alcove_from_point(rd, p);
            }
            if (!translate.empty()) a = affh::translate(rd, a, io::parse_ivec(parse_arg(translate, "--translate")));
            if (!act.empty()) a = act_right(rd, a, rd.from_word(parse_nodes(act, "--act")));
            json j = io::to_json(a, rd);
            j["length"] = rd.length(a.u);
            emit(g, j);
            return 0;
        }
        if (gallery_cmd->parsed()) {
            auto [rd, name] = datum(g);
            emit(g, io::to_json(gallery(rd, alcove_arg(rd, from, "--from"), alcove_arg(rd, to, "--to")), rd));
            return 0;
        }
        if (b->parsed()) {
            auto [rd, name] = datum(g);
            std::optional<std::vector<int>> nodes;
            if (!gal.empty()) nodes = parse_nodes(gal, "--gallery");
            emit(g, json{{"word", io::to_json(b_alcove(rd, alcove_arg(rd, from, "--from"), alcove_arg(rd, to, "--to"), nodes))}});
            return 0;
        }
        if (theta_cmd->parsed()) {
            auto [rd, name] = datum(g);
            IVec l = io::parse_ivec(parse_arg(lambda, "--lambda"));
            if (static_cast<int>(l.size()) != rd.rank()) throw UsageError("--lambda needs rank coordinates");
            emit(g, json{{"word", io::to_json(theta(rd, l))}});
            return 0;
        }
        if (heval->parsed()) {
            auto [rd, name] = datum(g);
            HeckeAlgebra H(rd);
            HeckeElt h = H.from_braid(io::parse_word(parse_arg(word, "--word"), rd));
            if (bar) h = H.bar(h);
            emit(g, json{{"element", io::to_json(h, rd)}, {"terms", h.size()}});
            return 0;
        }
        if (kl_cmd->parsed() || cells_cmd->parsed() || as->parsed()) {
            auto [rd, name] = datum(g);
            HeckeAlgebra H(rd);
            const int L = g.max_len >= 0 ? g.max_len : KLBasis::default_bound(rd);
            KLBasis K(H, L);
            if (kl_cmd->parsed()) {
                json rows = json::array();
                for (auto& x : enumerate_elements(rd, L)) {
                    HeckeElt bx = K.basis(x);
                    std::vector<ExtWeylElt> ys;
                    for (auto& [y, c] : bx.terms()) ys.push_back(y);
                    std::sort(ys.begin(), ys.end(), [&](auto& p, auto& q) {
                        return rd.length(p) != rd.length(q) ? rd.length(p) < rd.length(q) : rd.reduced_word(p) < rd.reduced_word(q);
                    });
                    for (auto& y : ys)
                        rows.push_back({{"x", word_of(rd, x)}, {"y", word_of(rd, y)}, {"P", q_poly(K.classical(y, x))}, {"mu", K.mu(y, x)}});
                }
                emit(g, json{{"bound", L}, {"type", name}, {"rows", rows}});
                return 0;
            }
            if (cells_cmd->parsed()) {
                auto p = cells(K, L);
                auto enc = [&](const std::vector<std::vector<ExtWeylElt>>& cs) {
                    json a = json::array();
                    for (auto& c : cs) {
                        json e = json::array();
                        for (auto& x : c) e.push_back(word_of(rd, x));
                        a.push_back(e);
                    }
                    return a;
                };
                emit(g, json{{"restricted_to_length", L}, {"left", enc(p.left)}, {"right", enc(p.right)}, {"two_sided", enc(p.two_sided)}});
                return 0;
            }
            AntisphericalModule M(K, spherical);
            json rows = json::array();
            for (auto& x : M.minimal_reps(L)) rows.push_back({{"x", word_of(rd, x)}, {"canonical", io::to_json(M.canonical(x), rd)}});
            emit(g, json{{"bound", L}, {"module", spherical ? "spherical" : "antispherical"}, {"rows", rows}});
            return 0;
        }
        if (canon->parsed()) {
            CanonicalReport rep;
            if (input.empty()) {
                rep = suites::a1_report(nilpotent == "zero" ? Nilpotent::Zero : Nilpotent::Regular, g.order);
            } else {
                std::ifstream in(input);
                if (!in) throw UsageError("cannot open input " + input);
                std::stringstream ss;
                ss << in.rdbuf();
                json j = parse_arg(ss.str(), "--input");
                PairedModule m = io::parse_paired_module(j.at("module"));
                std::vector<ModVec> basis;
                for (auto& v : j.at("basis")) basis.push_back(io::parse_modvec(v, m));
                rep.name = j.value("name", input);
                ReportEntry inv;
                inv.axiom = "bar_involution";
                inv.verdict = m.bar_is_involution() ? Verdict::Pass : Verdict::Fail;
                rep.entries.push_back(inv);
                rep.append(bar_fixed_report(m, basis));
                rep.append(asymptotic_orthonormality(m, basis, g.order));
                rep.append(parity_check(m, basis, g.order));
                if (j.contains("nabla")) rep.append(positivity_check(m, basis, io::parse_rational_class(j.at("nabla"), m.torus_rank), g.order));
                if (j.contains("dual_basis")) {
                    std::vector<ModVec> dual;
                    for (auto& v : j.at("dual_basis")) dual.push_back(io::parse_modvec(v, m));
                    rep.append(duality_check(m, dual, basis));
                }
                if (j.contains("recognize"))
                    for (auto& v : j.at("recognize")) {
                        ReportEntry e;
                        e.axiom = "recognize";
                        try {
                            auto r = recognize(m, basis, io::parse_modvec(v, m), g.order);
                            rep.recognized.emplace_back(v.dump(), r);
                        } catch (const Error& ex) {
                            e.verdict = Verdict::Fail;
                            e.note = ex.what();
                        }
                        rep.entries.push_back(e);
                    }
            }
            emit(g, io::to_json(rep));
            return rep.passed() ? 0 : 1;
        }
        if (demo->parsed()) {
            json reports = json::array();
            bool ok = true;
            for (auto e : {Nilpotent::Zero, Nilpotent::Regular}) {
                auto rep = suites::a1_report(e, g.order);
                ok = ok && rep.passed();
                reports.push_back(io::to_json(rep));
            }
            emit(g, json{{"order", g.order}, {"reports", reports}, {"verdict", ok ? "pass" : "fail"}});
            return ok ? 0 : 1;
        }
        if (check->parsed()) {
            suites::Options o;
            o.radius = radius;
            o.max_len = g.max_len;
            o.order = g.order;
            o.samples = samples;
            o.seed = g.seed;
            std::vector<std::string> names = suite == "all" ? suites::suite_names() : std::vector<std::string>{suites::canonical_suite(suite)};
            json results = json::array();
            bool ok = true;
            for (auto& s : names) {
                std::vector<std::pair<RootDatum, std::string>> data;
                if (!g.type.empty() || !g.cartan.empty()) data.push_back(datum(g));
                else
                    for (auto& t : suites::default_types(s)) data.emplace_back(RootDatum::preset(t), t);
                for (auto& [rd, name] : data) {
                    auto r = suites::run(s, rd, name, o);
                    ok = ok && r.ok();
                    if (!r.ok()) std::cerr << "suite " << s << " (" << name << ") failed: " << r.failures.front() << "\n";
                    results.push_back(suites::to_json(r));
                }
            }
            emit(g, json{{"results", results}, {"verdict", ok ? "pass" : "fail"}});
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
