#pragma once

// JSON encodings for the value types. Every to_json has a matching parser that
// re-reads its output to an equal value.

#include "affh/antispherical.hpp"
#include "affh/canonlab.hpp"

#include <json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace affh::io {

using json = nlohmann::json;

inline json bigint_json(const BigInt& n)
{
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return static_cast<long long>(n);
    return n.str();
}

inline BigInt parse_bigint(const json& j)
{
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error("malformed JSON: expected an integer");
}

inline IVec parse_ivec(const json& j)
{
    if (!j.is_array()) throw Error("malformed JSON: expected an integer array");
    IVec v;
    for (auto& c : j) {
        if (!c.is_number_integer()) throw Error("malformed JSON: expected an integer array");
        v.push_back(c.get<long long>());
    }
    return v;
}

// ---- Laurent polynomials -------------------------------------------------

inline json to_json(const LaurentPoly& p)
{
    json a = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json x = json::array();
        for (size_t i = 1; i < it->first.size(); ++i) x.push_back(it->first[i]);
        a.push_back({{"term", {{"v", it->first[0]}, {"x", x}}}, {"coef", bigint_json(it->second)}});
    }
    return a;
}

inline LaurentPoly parse_poly(const json& j, int torus_rank)
{
    if (!j.is_array()) throw Error("malformed JSON: polynomial must be an array of terms");
    LaurentPoly p(torus_rank);
    for (auto& t : j) {
        const json& term = t.at("term");
        Exps e{term.at("v").get<int>()};
        auto x = parse_ivec(term.value("x", json::array()));
        if (static_cast<int>(x.size()) != torus_rank) throw Error("malformed JSON: torus rank mismatch");
        for (auto c : x) e.push_back(static_cast<int>(c));
        p.add_term(e, parse_bigint(t.at("coef")));
    }
    return p;
}

inline json to_json(const LaurentV& p) { return to_json(LaurentPoly::from_v(p, 0)); }
inline LaurentV parse_laurent_v(const json& j) { return parse_poly(j, 0).to_v(); }

inline json to_json(const SeriesTrunc& s)
{
    json c = json::array();
    if (auto lead = s.lead()) {
        int lo = s.floor() ? *s.floor() : s.coeffs().begin()->first;
        for (int e = *lead; e >= lo; --e) c.push_back(to_json(s.coeff(e)));
    }
    json j;
    j["lead"] = s.lead() ? json(*s.lead()) : json(nullptr);
    j["order"] = s.floor() ? json(-*s.floor()) : json(nullptr);
    j["torus_rank"] = s.torus_rank();
    j["coeffs"] = c;
    return j;
}

inline SeriesTrunc parse_series(const json& j)
{
    int nx = j.at("torus_rank").get<int>();
    LaurentPoly p(nx);
    if (!j.at("lead").is_null()) {
        int e = j.at("lead").get<int>();
        for (auto& c : j.at("coeffs")) p += LaurentPoly::v(nx, e--) * parse_poly(c, nx);
    }
    SeriesTrunc s = SeriesTrunc::exact(p);
    if (!j.at("order").is_null()) s = s.truncated(-j.at("order").get<int>());
    return s;
}

inline json to_json(const RationalClass& r)
{
    json den = json::array();
    for (auto& [f, e] : r.den_factors()) den.push_back({{"factor", to_json(f)}, {"exp", e}});
    return {{"num", to_json(r.num())}, {"den", den}};
}

inline RationalClass parse_rational_class(const json& j, int torus_rank)
{
    RationalClass r(parse_poly(j.at("num"), torus_rank));
    for (auto& f : j.at("den")) {
        LaurentPoly d = parse_poly(f.at("factor"), torus_rank);
        for (int k = 0; k < f.at("exp").get<int>(); ++k) r.divide_by(d);
    }
    return r;
}

// ---- Root data and alcoves ----------------------------------------------

inline json to_json(const RootDatum& rd)
{
    json cr = json::array();
    for (auto& c : rd.positive_coroots()) cr.push_back(c);
    json om = json::array();
    for (auto& o : rd.omega_group()) om.push_back({{"lambda", rd.lambda(o.x)}, {"finite", rd.reduced_word(static_cast<int>(o.x.w))}, {"perm", o.perm}});
    return {{"rank", rd.rank()},
            {"cartan", rd.cartan()},
            {"lattice", rd.lattice() == Lattice::Weight ? "weight" : "root"},
            {"coxeter_number", rd.coxeter_number()},
            {"rho", rd.rho()},
            {"highest_coroot", rd.highest_coroot()},
            {"marks", rd.marks()},
            {"weyl_order", rd.weyl_order()},
            {"positive_coroots", cr},
            {"omega", om}};
}

/// {"cartan": [[...]], "lattice": "weight"|"root"}
inline RootDatum parse_root_datum(const json& j)
{
    if (!j.is_object() || !j.contains("cartan")) throw Error("malformed JSON: expected {\"cartan\": [[...]]}");
    IMat a;
    for (auto& row : j.at("cartan")) a.push_back(parse_ivec(row));
    std::string lat = j.value("lattice", "weight");
    if (lat != "weight" && lat != "root") throw Error("invalid lattice '" + lat + "'");
    return RootDatum::build(a, lat == "weight" ? Lattice::Weight : Lattice::Root);
}

inline json to_json(const ExtWeylElt& x, const RootDatum& rd)
{
    return {{"finite", rd.reduced_word(static_cast<int>(x.w))}, {"lambda", rd.lambda(x)}};
}

inline ExtWeylElt parse_ext(const json& j, const RootDatum& rd)
{
    ExtWeylElt w = rd.identity();
    for (auto i : parse_ivec(j.at("finite"))) {
        if (i < 1 || i > rd.rank()) throw Error("malformed JSON: finite word uses node outside 1..rank");
        w = rd.mul(w, rd.simple(static_cast<int>(i)));
    }
    return rd.make(static_cast<int>(w.w), parse_ivec(j.at("lambda")));
}

inline json to_json(const Alcove& a, const RootDatum& rd)
{
    json p = json::array();
    for (auto& q : point(rd, a)) p.push_back(to_string(q));
    return {{"address", address(rd, a)}, {"point", p}};
}

inline Alcove parse_alcove(const json& j, const RootDatum& rd)
{
    std::vector<int> word;
    for (auto i : parse_ivec(j.at("address"))) word.push_back(static_cast<int>(i));
    for (int i : word)
        if (i < 0 || i >= rd.num_nodes()) throw Error("malformed JSON: address node out of range");
    Alcove a = from_address(rd, word);
    if (j.contains("point")) {
        std::vector<Rational> p;
        for (auto& s : j.at("point")) p.push_back(parse_rational(s.get<std::string>()));
        if (p != point(rd, a)) throw Error("malformed JSON: alcove point does not match its address");
    }
    return a;
}

inline json to_json(const Gallery& g, const RootDatum& rd)
{
    json steps = json::array();
    for (size_t k = 0; k < g.nodes.size(); ++k) steps.push_back({{"node", g.nodes[k]}, {"alcove", to_json(g.alcoves[k + 1], rd)}});
    return {{"start", to_json(g.alcoves.front(), rd)}, {"length", g.nodes.size()}, {"steps", steps}};
}

// ---- Braid words --------------------------------------------------------

inline std::string letter_str(const BraidLetter& l)
{
    switch (l.kind) {
    case BraidLetter::Kind::Simple: return "s" + std::to_string(l.node) + (l.exp > 0 ? "+" : "-");
    case BraidLetter::Kind::Omega: return "omega:" + std::to_string(l.omega);
    case BraidLetter::Kind::Theta: return "theta:" + json(l.lambda).dump();
    }
    return "?";
}

inline json to_json(const BraidWord& b)
{
    json a = json::array();
    for (auto& l : b) a.push_back(letter_str(l));
    return a;
}

inline BraidLetter parse_letter(const std::string& s, const RootDatum& rd)
{
    static const std::regex simple(R"(s(\d+)([+-]))"), omega(R"(omega:(\d+))"), theta(R"(theta:(\[.*\]))");
    std::smatch m;
    if (std::regex_match(s, m, simple)) {
        int node = std::stoi(m[1]);
        if (node >= rd.num_nodes()) throw Error("braid letter '" + s + "' names a node outside the affine diagram");
        return BraidLetter::simple(node, m[2] == "+" ? 1 : -1);
    }
    if (std::regex_match(s, m, omega)) {
        int k = std::stoi(m[1]);
        if (k >= static_cast<int>(rd.omega_group().size())) throw Error("braid letter '" + s + "' names an Omega element out of range");
        return BraidLetter::omega_letter(k);
    }
    if (std::regex_match(s, m, theta)) {
        json l = json::parse(m[1].str(), nullptr, false);
        if (l.is_discarded()) throw Error("malformed JSON in braid letter '" + s + "'");
        IVec lam = parse_ivec(l);
        if (static_cast<int>(lam.size()) != rd.rank() || !rd.in_lattice(lam)) throw Error("braid letter '" + s + "' has an invalid weight");
        return BraidLetter::theta(lam);
    }
    throw Error("unrecognized braid letter '" + s + "'");
}

inline BraidWord parse_word(const json& j, const RootDatum& rd)
{
    if (!j.is_array()) throw Error("malformed JSON: braid word must be an array of strings");
    BraidWord b;
    for (auto& s : j) b.push_back(parse_letter(s.get<std::string>(), rd));
    return b;
}

// ---- Hecke elements -----------------------------------------------------

/// Terms ordered by (length, serialized element) for stable output.
inline json to_json(const HeckeElt& h, const RootDatum& rd)
{
    std::vector<std::pair<ExtWeylElt, LaurentV>> t(h.terms().begin(), h.terms().end());
    std::vector<std::tuple<int, std::string, json>> rows;
    for (auto& [x, c] : t) {
        json w = to_json(x, rd);
        rows.emplace_back(rd.length(x), w.dump(), json{{"w", w}, {"coef", to_json(c)}});
    }
    std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) {
        return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
    });
    json a = json::array();
    for (auto& r : rows) a.push_back(std::get<2>(r));
    return a;
}

inline HeckeElt parse_hecke(const json& j, const RootDatum& rd)
{
    if (!j.is_array()) throw Error("malformed JSON: Hecke element must be an array of terms");
    HeckeElt h;
    for (auto& t : j) h.add(parse_ext(t.at("w"), rd), parse_laurent_v(t.at("coef")));
    return h;
}

// ---- Reports ------------------------------------------------------------

inline json to_json(const ReportEntry& e)
{
    return {{"axiom", e.axiom},
            {"pair", e.pair},
            {"leading", e.leading},
            {"verdict", verdict_name(e.verdict)},
            {"informational", e.informational},
            {"note", e.note}};
}

inline Verdict parse_verdict(const std::string& s)
{
    if (s == "pass") return Verdict::Pass;
    if (s == "fail") return Verdict::Fail;
    if (s == "inconclusive") return Verdict::Inconclusive;
    throw Error("malformed JSON: unknown verdict '" + s + "'");
}

inline json to_json(const CanonicalReport& r)
{
    json entries = json::array();
    for (auto& e : r.entries) entries.push_back(to_json(e));
    json rec = json::array();
    for (auto& [name, g] : r.recognized) {
        std::vector<int> tw(g.twist.begin() + (g.twist.empty() ? 0 : 1), g.twist.end());
        rec.push_back({{"input", name}, {"sign", g.sign}, {"index", g.index}, {"twist", tw}});
    }
    return {{"name", r.name}, {"verdict", r.passed() ? "pass" : "fail"}, {"entries", entries}, {"recognized", rec}};
}

inline CanonicalReport parse_report(const json& j)
{
    CanonicalReport r;
    r.name = j.at("name").get<std::string>();
    for (auto& e : j.at("entries")) {
        ReportEntry x;
        x.axiom = e.at("axiom").get<std::string>();
        x.pair = e.at("pair").get<std::vector<int>>();
        x.leading = e.at("leading").get<std::vector<std::string>>();
        x.verdict = parse_verdict(e.at("verdict").get<std::string>());
        x.informational = e.at("informational").get<bool>();
        x.note = e.at("note").get<std::string>();
        r.entries.push_back(x);
    }
    for (auto& g : j.at("recognized")) {
        Recognized x;
        x.sign = g.at("sign").get<int>();
        x.index = g.at("index").get<int>();
        x.twist = {0};
        for (int c : g.at("twist").get<std::vector<int>>()) x.twist.push_back(c);
        r.recognized.emplace_back(g.at("input").get<std::string>(), x);
    }
    return r;
}

inline bool operator==(const ReportEntry& a, const ReportEntry& b)
{
    return a.axiom == b.axiom && a.pair == b.pair && a.leading == b.leading && a.verdict == b.verdict &&
           a.informational == b.informational && a.note == b.note;
}

// ---- Paired modules -----------------------------------------------------

inline json to_json(const PairedModule& m)
{
    json bar = json::array(), pairing = json::array();
    for (size_t i = 0; i < m.size(); ++i) {
        json br = json::array(), pr = json::array();
        for (size_t j = 0; j < m.size(); ++j) {
            br.push_back(to_json(m.bar[i][j]));
            pr.push_back(to_json(m.pairing[i][j]));
        }
        bar.push_back(br);
        pairing.push_back(pr);
    }
    return {{"torus_rank", m.torus_rank},
            {"labels", m.labels},
            {"bar", bar},
            {"bar_coeff", {{"v", m.bar_coeff.v}, {"chars", m.bar_coeff.chars}}},
            {"pairing", pairing},
            {"pairing_conj", {{"v", m.pairing_conj.v}, {"chars", m.pairing_conj.chars}}},
            {"dim_B", m.dim_B},
            {"dim_Be", m.dim_Be}};
}

inline json to_json(const ModVec& v)
{
    json a = json::array();
    for (auto& c : v) a.push_back(to_json(c));
    return a;
}

inline PairedModule parse_paired_module(const json& j)
{
    PairedModule m;
    m.torus_rank = j.at("torus_rank").get<int>();
    m.labels = j.at("labels").get<std::vector<std::string>>();
    const size_t n = m.labels.size();
    auto matrix = [&](const json& a, const char* what) {
        if (!a.is_array() || a.size() != n) throw Error(std::string("malformed JSON: ") + what + " must be a square matrix");
        for (auto& row : a)
            if (!row.is_array() || row.size() != n) throw Error(std::string("malformed JSON: ") + what + " must be a square matrix");
    };
    matrix(j.at("bar"), "bar");
    matrix(j.at("pairing"), "pairing");
    m.bar.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(m.torus_rank)));
    m.pairing.assign(n, std::vector<RationalClass>(n, RationalClass(m.torus_rank)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            m.bar[i][k] = parse_poly(j.at("bar")[i][k], m.torus_rank);
            m.pairing[i][k] = parse_rational_class(j.at("pairing")[i][k], m.torus_rank);
        }
    auto inv = [](const json& o, CoeffInvolution d) {
        return CoeffInvolution{o.value("v", d.v), o.value("chars", d.chars)};
    };
    m.bar_coeff = inv(j.value("bar_coeff", json::object()), CoeffInvolution{true, true});
    m.pairing_conj = inv(j.value("pairing_conj", json::object()), CoeffInvolution{});
    m.dim_B = j.value("dim_B", 0);
    m.dim_Be = j.value("dim_Be", 0);
    return m;
}

inline ModVec parse_modvec(const json& j, const PairedModule& m)
{
    if (!j.is_array() || j.size() != m.size()) throw Error("malformed JSON: module vector has the wrong length");
    ModVec v;
    for (auto& c : j) v.push_back(parse_poly(c, m.torus_rank));
    return v;
}

} // namespace affh::io
