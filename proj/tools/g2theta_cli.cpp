// g2theta-cli: command-line front end for the G2 theta-correspondence engine.
//
// Subcommands: rootsys, decompose, packet, jacquet, ie-filtration,
// theta {d2g|b2g|g2p|p2g}, dichotomy, ds-target, verify.
// Exit codes: 0 ok, 1 property/verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <g2theta/jacquet.hpp>
#include <g2theta/langlands.hpp>
#include <g2theta/literal.hpp>
#include <g2theta/reducibility.hpp>
#include <g2theta/theta.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace g2theta;

namespace {

// ---------------------------------------------------------------------------
// shared option state
// ---------------------------------------------------------------------------

struct Options {
    std::string registry_path;
    std::string p_text;
    std::string format = "text";
    unsigned long long seed = 0;
    int size = 100;

    RegistryPtr registry() const {
        std::string path = registry_path;
        if (path.empty())
            if (const char* env = std::getenv("REGISTRY")) path = env;
        if (path.empty()) return Registry::with_defaults();
        return Registry::load(path);
    }

    PContext p() const {
        std::string t = p_text;
        if (t.empty())
            if (const char* env = std::getenv("PCONTEXT")) t = env;
        if (t.empty() || t == "other") return PContext::Other;
        if (t == "2") return PContext::Two;
        if (t == "3") return PContext::Three;
        throw CLI::ValidationError("--p must be one of 2, 3, other");
    }
};

void emit(const Options& opt, const json& out, const std::string& text) {
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    else std::cout << text;
}

// ---------------------------------------------------------------------------
// JSON encoders
// ---------------------------------------------------------------------------

json rep_structure_json(const RepStructure& s) {
    json cs = json::array();
    for (const auto& c : s.constituents)
        cs.push_back({{"rep", to_string(c.rep)}, {"position", to_string(c.position)}});
    return {{"irreducible", s.irreducible},
            {"length", s.length},
            {"length_exact", s.length_exact},
            {"constituents", cs}};
}

std::string rep_structure_text(const RepStructure& s) {
    std::string out = s.irreducible ? "irreducible" : "reducible";
    out += ", length " + (s.length_exact ? std::to_string(s.length)
                                         : ">= " + std::to_string(s.length));
    out += "\n";
    for (const auto& c : s.constituents)
        out += "  [" + std::string(to_string(c.position)) + "] " + to_string(c.rep) + "\n";
    return out;
}

json pieces_json(const std::vector<FiltrationPiece>& pieces) {
    json out = json::array();
    for (const auto& p : pieces) {
        json tw = json::array();
        for (const auto& t : p.twists) tw.push_back(rat_to_string(t));
        json refs = json::array();
        for (const auto& [g, n] : p.referenced)
            refs.push_back(to_string(g) + "." + to_string(n));
        out.push_back({{"layer", p.layer},
                       {"descriptor", p.descriptor},
                       {"inducing_subgroups", p.inducing_subgroups},
                       {"datum", p.datum},
                       {"delta", p.delta},
                       {"twists", tw},
                       {"multiplicity", p.multiplicity},
                       {"referenced", refs}});
    }
    return out;
}

std::string pieces_text(const std::vector<FiltrationPiece>& pieces) {
    std::string out;
    for (const auto& p : pieces) {
        out += "layer " + std::to_string(p.layer) + ": " + p.descriptor;
        if (p.multiplicity != 1) out += "  (x" + std::to_string(p.multiplicity) + ")";
        out += "\n";
    }
    return out;
}

template <class Target>
json lift_json(const std::string& command, const std::string& input, const Options& opt,
               const Lift<Target>& l, const std::string& provenance) {
    json out = {{"command", command},
                {"input", input},
                {"p", opt.p_text.empty() ? "other" : opt.p_text},
                {"value", to_string(l.value)},
                {"target", nullptr},
                {"big_theta_note", nullptr},
                {"provenance", provenance}};
    if (l.rep) out["target"] = to_string(*l.rep);
    if (l.big_theta_note) out["big_theta_note"] = *l.big_theta_note;
    return out;
}

template <class Target>
std::string lift_text(const Lift<Target>& l) {
    std::string out = "value: " + to_string(l.value) + "\n";
    if (l.rep) out += "target: " + to_string(*l.rep) + "\n";
    if (l.big_theta_note) out += "note: " + *l.big_theta_note + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// literal extraction helpers (usage errors -> exit 2 via CLI::ValidationError)
// ---------------------------------------------------------------------------

template <class T>
T expect_literal(const std::string& text, RegistryPtr reg, const char* what) {
    RepLiteral lit = parse_rep_literal(text, std::move(reg));
    if (auto* p = std::get_if<T>(&lit)) return std::move(*p);
    throw CLI::ValidationError(std::string("expected ") + what + " literal, got: " + text);
}

Group parse_group(const std::string& g) {
    if (g == "G2") return Group::G2;
    if (g == "PGSp6") return Group::PGSp6;
    if (g == "GL3") return Group::GL3;
    if (g == "GSp4") return Group::GSp4;
    throw CLI::ValidationError("unknown group: " + g);
}

ParName parse_parabolic(const std::string& n) {
    for (auto p : {ParName::P, ParName::Q, ParName::B, ParName::P1, ParName::P2, ParName::P3,
                   ParName::P13, ParName::Q1, ParName::Q2})
        if (to_string(p) == n) return p;
    throw CLI::ValidationError("unknown parabolic: " + n);
}

EtaleCubic parse_etale(const std::string& e) {
    if (e == "F^3") return etale_split();
    if (e == "FxK" || e == "F x K") return etale_partial_split("K");
    return etale_field(e);
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

struct PropertyReport {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;
};

ExponentChar random_char(std::mt19937_64& rng, const RegistryPtr& reg, bool unitary) {
    ExponentChar c = ExponentChar::trivial(reg);
    const auto& syms = reg->symbols();
    size_t pick = rng() % (syms.size() + 1);
    if (pick < syms.size() && syms[pick].name != "1")
        c = ExponentChar::symbol(reg, syms[pick].name, 1 + static_cast<long long>(rng() % 2));
    if (!unitary) {
        long long num = 1 + static_cast<long long>(rng() % 8);
        c = char_mul(c, ExponentChar::norm_power(reg, Rat(num, (rng() % 2) ? 2 : 1)));
    }
    return c;
}

GL2Rep random_tempered_gl2(std::mt19937_64& rng, const RegistryPtr& reg) {
    switch (rng() % 4) {
        case 0: return gl2_st(random_char(rng, reg, true));
        case 1: return gl2_sc("v" + std::to_string(rng() % 32), false,
                              ExponentChar::trivial(reg));
        case 2: return gl2_sc("w" + std::to_string(rng() % 32), true,
                              ExponentChar::trivial(reg));
        default: return gl2_sc("x" + std::to_string(rng() % 32), true,
                               ExponentChar::symbol(reg, "chi2u"), (rng() % 2) == 0);
    }
}

G2Rep random_g2(std::mt19937_64& rng, const RegistryPtr& reg) {
    ExponentChar triv = ExponentChar::trivial(reg);
    switch (rng() % 12) {
        case 0: return g2_st();
        case 1: return g2_pi_gen_1();
        case 2: return g2_pi_deg_1();
        case 3: {
            PiScLabel ls[] = {PiScLabel::One, PiScLabel::MinusOne, PiScLabel::Omega,
                              PiScLabel::OmegaSq};
            return g2_pi_sc(ls[rng() % 4]);
        }
        case 4: return g2_jp(Rat(1 + static_cast<long long>(rng() % 8), 2),
                             random_tempered_gl2(rng, reg));
        case 5: return g2_jq(Rat(1 + static_cast<long long>(rng() % 8), 2),
                             random_tempered_gl2(rng, reg));
        case 6: {
            long long b = 1 + static_cast<long long>(rng() % 3);
            long long a = b + 1 + static_cast<long long>(rng() % 3);
            if (a == 2 && b == 1) a = 5;  // avoid the trivial representation
            return g2_jb({char_mul(random_char(rng, reg, true), ExponentChar::norm_power(reg, Rat(a))),
                          ExponentChar::norm_power(reg, Rat(b))});
        }
        case 7: return g2_delta_p(gl2_sc("t" + std::to_string(rng() % 64), true, triv));
        case 8: return g2_delta_q(gl2_sc("t" + std::to_string(rng() % 64), true, triv));
        case 9: return g2_sc_from_pd(
            pd_other("d" + std::to_string(rng() % 64), Heart::Yes, PContext::Other));
        case 10: return g2_sc_from_b(
            pgl3_ext(gl3_sc("e" + std::to_string(rng() % 64), false), Ext::InducedPlus));
        default: return g2_sc_abstract("s" + std::to_string(rng() % 64), (rng() % 2) == 0);
    }
}

PropertyReport verify_weyl(const Options& opt) {
    PropertyReport rep{"weyl", 0, {}};
    std::mt19937_64 rng(opt.seed);
    if (g2_weyl_order() != 12) rep.failures.push_back("g2_weyl_order != 12");
    if (c3_weyl_order() != 48) rep.failures.push_back("c3_weyl_order != 48");
    rep.cases = 2;
    for (int i = 0; i < opt.size; ++i) {
        C3Vec v{Rat(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 3)),
                Rat(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 3)),
                Rat(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 3))};
        Rat q = c3_form_q(v);
        for (const auto& w : c3_weyl_elements())
            if (c3_form_q(w.apply(v)) != q) {
                rep.failures.push_back("q not invariant at (" + rat_to_string(v.s1) + ", " +
                                       rat_to_string(v.s2) + ", " + rat_to_string(v.s3) + ")");
                break;
            }
        ++rep.cases;
    }
    return rep;
}

PropertyReport verify_dichotomy(const Options& opt) {
    PropertyReport rep{"dichotomy", 0, {}};
    std::mt19937_64 rng(opt.seed);
    auto reg = opt.registry();
    for (int i = 0; i < opt.size; ++i) {
        G2Rep pi = random_g2(rng, reg);
        ++rep.cases;
        try {
            if (dichotomy(pi, PContext::Other) == DichotomySide::Unknown)
                rep.failures.push_back("unknown side: " + to_string(pi));
        } catch (const std::exception& e) {
            rep.failures.push_back(to_string(pi) + ": " + e.what());
        }
    }
    return rep;
}

PropertyReport verify_howe(const Options& opt) {
    PropertyReport rep{"howe", 0, {}};
    std::mt19937_64 rng(opt.seed);
    auto reg = opt.registry();
    std::map<std::string, std::string> image;
    for (int i = 0; i < opt.size; ++i) {
        G2Rep pi = random_g2(rng, reg);
        ++rep.cases;
        auto l = theta_G2_to_P6(pi);
        if (l.value != LiftValue::Rep) continue;
        auto [it, fresh] = image.emplace(to_string(*l.rep), to_string(pi));
        if (!fresh && it->second != to_string(pi))
            rep.failures.push_back("collision: " + to_string(pi) + " vs " + it->second);
    }
    return rep;
}

PropertyReport verify_roundtrip(const Options& opt) {
    PropertyReport rep{"roundtrip", 0, {}};
    std::mt19937_64 rng(opt.seed);
    auto reg = opt.registry();
    for (int i = 0; i < opt.size; ++i) {
        Rat s(1 + static_cast<long long>(rng() % 8), 2);
        GL2Rep tau = random_tempered_gl2(rng, reg);
        G2Rep jq = g2_jq(s, tau), jp = g2_jp(s, tau);
        rep.cases += 4;
        auto check = [&](const G2Rep& pi) {
            auto back = theta_P6_to_G2(*theta_G2_to_P6(pi).rep);
            if (back.value != LiftValue::Rep || !(*back.rep == pi))
                rep.failures.push_back("round trip failed: " + to_string(pi));
        };
        check(jq);
        check(jp);
        auto checkb = [&](const PGSp6Rep& sigma) {
            auto back = theta_G2_to_P6(*theta_P6_to_G2(sigma).rep);
            if (back.value != LiftValue::Rep || !(*back.rep == sigma))
                rep.failures.push_back("round trip failed: " + to_string(sigma));
        };
        checkb(p6_j2(s, tau));
        checkb(p6_j13(s, tau));
        // literal grammar round trip on the generated data
        G2Rep pi = random_g2(rng, reg);
        ++rep.cases;
        std::string lit = to_string(pi);
        if (to_string(parse_rep_literal(lit, reg)) != lit)
            rep.failures.push_back("literal round trip failed: " + lit);
    }
    return rep;
}

PropertyReport verify_packets(const Options& opt) {
    PropertyReport rep{"packets", 0, {}};
    std::mt19937_64 rng(opt.seed);
    auto reg = opt.registry();
    std::vector<LParamG2> params = {param_principal(), param_subregular_trivial()};
    for (const auto& sym : reg->symbols()) {
        if (sym.order == 2) params.push_back(param_subregular_mu2(ExponentChar::symbol(reg, sym.name)));
        if (sym.order == 3) params.push_back(param_subregular_mu3(ExponentChar::symbol(reg, sym.name)));
    }
    for (int i = 0; i < opt.size; ++i) {
        switch (rng() % 3) {
            case 0:
                params.push_back(param_short_root(
                    gl2_sc("t" + std::to_string(rng() % 64), true, ExponentChar::trivial(reg))));
                break;
            case 1:
                params.push_back(param_long_root(
                    gl2_sc("t" + std::to_string(rng() % 64), true, ExponentChar::trivial(reg))));
                break;
            default:
                params.push_back(param_subregular_s3(gl2_sc("u" + std::to_string(rng() % 64), true,
                                                            ExponentChar::symbol(reg, "chi2u"),
                                                            true)));
        }
    }
    for (const auto& phi : params) {
        ++rep.cases;
        auto pkt = packet_of(phi);
        if (static_cast<int>(pkt.size()) != character_count(component_group(phi))) {
            rep.failures.push_back("size mismatch: " + to_string(phi));
            continue;
        }
        int generic = 0;
        for (const auto& m : pkt) {
            const auto* g = std::get_if<G2Rep>(&m.rep);
            if (g && is_generic(*g)) {
                ++generic;
                if (m.character != "1")
                    rep.failures.push_back("generic member off the trivial character: " +
                                           to_string(phi));
            }
        }
        if (generic != 1) rep.failures.push_back("generic count != 1: " + to_string(phi));
    }
    return rep;
}

int run_verify(const Options& opt, const std::string& suite) {
    std::vector<PropertyReport> reports;
    if (suite == "weyl" || suite == "all") reports.push_back(verify_weyl(opt));
    if (suite == "dichotomy" || suite == "all") reports.push_back(verify_dichotomy(opt));
    if (suite == "howe" || suite == "all") reports.push_back(verify_howe(opt));
    if (suite == "roundtrip" || suite == "all") reports.push_back(verify_roundtrip(opt));
    if (suite == "packets" || suite == "all") reports.push_back(verify_packets(opt));
    if (reports.empty())
        throw CLI::ValidationError("unknown suite: " + suite +
                                   " (expected dichotomy, howe, weyl, roundtrip, packets, all)");
    json props = json::array();
    bool failed = false;
    std::string text;
    for (const auto& r : reports) {
        props.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
        failed = failed || !r.failures.empty();
        text += r.name + ": " + std::to_string(r.cases) + " cases, " +
                std::to_string(r.failures.size()) + " failures\n";
        for (const auto& f : r.failures) text += "  FAIL " + f + "\n";
    }
    json out = {{"command", "verify"},
                {"suite", suite},
                {"seed", opt.seed},
                {"size", opt.size},
                {"properties", props}};
    emit(opt, out, text);
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

// Debug view for the corrected C3 quadratic form: the formula as printed in
// the source literature fails Weyl invariance in both readings of its typo
// (cubed and squared third term); the implemented q is the invariant one.
int run_q_reading(const Options& opt, const std::string& vec_text) {
    std::vector<Rat> parts;
    std::string cur;
    for (char ch : vec_text + ",") {
        if (ch == ',') {
            parts.push_back(rat_from_string(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (parts.size() != 3)
        throw CLI::ValidationError("--q-reading expects three rationals: s1,s2,s3");
    C3Vec v{parts[0], parts[1], parts[2]};
    json out = {{"command", "rootsys"},
                {"q_reading",
                 {{"vector", {rat_to_string(v.s1), rat_to_string(v.s2), rat_to_string(v.s3)}},
                  {"literal_cubed", rat_to_string(c3_form_q_printed(v, true))},
                  {"literal_squared", rat_to_string(c3_form_q_printed(v, false))},
                  {"corrected", rat_to_string(c3_form_q(v))}}}};
    std::string text = "literal (s3 cubed):   " + rat_to_string(c3_form_q_printed(v, true)) +
                       "\nliteral (s3 squared): " + rat_to_string(c3_form_q_printed(v, false)) +
                       "\ncorrected q:          " + rat_to_string(c3_form_q(v)) + "\n";
    emit(opt, out, text);
    return 0;
}

int run_rootsys(const Options& opt) {
    json g2roots = json::array();
    for (const auto& r : g2_roots())
        g2roots.push_back({{"coords", {r.a, r.b}}, {"length", g2_is_long(r) ? "long" : "short"}});
    json triple = json::array();
    for (const auto& r : long_root_triple()) triple.push_back({r.a, r.b});
    json c3roots = json::array();
    for (const auto& r : c3_roots())
        c3roots.push_back({rat_to_string(r.s1), rat_to_string(r.s2), rat_to_string(r.s3)});
    json pars = json::array();
    for (auto [g, n] : std::vector<std::pair<Group, ParName>>{
             {Group::G2, ParName::P},
             {Group::G2, ParName::Q},
             {Group::G2, ParName::B},
             {Group::PGSp6, ParName::P1},
             {Group::PGSp6, ParName::P2},
             {Group::PGSp6, ParName::P3},
             {Group::PGSp6, ParName::P13},
             {Group::GL3, ParName::Q1},
             {Group::GL3, ParName::Q2},
             {Group::GSp4, ParName::Q1},
             {Group::GSp4, ParName::Q2}}) {
        auto d = parabolic_data(g, n);
        json me = json::array();
        for (const auto& e : d.modulus_exponents) me.push_back(rat_to_string(e));
        pars.push_back({{"group", to_string(g)},
                        {"parabolic", to_string(n)},
                        {"levi", d.levi},
                        {"modulus", d.modulus},
                        {"modulus_exponents", me},
                        {"nilradical_size",
                         std::max(d.nilradical_g2.size(), d.nilradical_c3.size())}});
    }
    json out = {{"command", "rootsys"},
                {"g2", {{"roots", g2roots}, {"weyl_order", g2_weyl_order()},
                        {"long_root_triple", triple}}},
                {"c3", {{"roots", c3roots}, {"weyl_order", c3_weyl_order()}}},
                {"parabolics", pars}};
    std::string text = "G2: 12 roots, |W| = " + std::to_string(g2_weyl_order()) +
                       "\nC3: 18 roots, |W| = " + std::to_string(c3_weyl_order()) + "\n";
    for (const auto& p : pars)
        text += p["group"].get<std::string>() + "." + p["parabolic"].get<std::string>() +
                ": Levi " + p["levi"].get<std::string>() + ", modulus " +
                p["modulus"].get<std::string>() + "\n";
    emit(opt, out, text);
    return 0;
}

int run_decompose(const Options& opt, const std::string& group, const std::string& par,
                  const std::string& s_text, const std::string& rep_text) {
    auto reg = opt.registry();
    Group g = parse_group(group);
    ParName n = parse_parabolic(par);
    Rat s = rat_from_string(s_text);
    RepStructure st;
    if (g == Group::G2 && n == ParName::P)
        st = decompose_IP(s, expect_literal<GL2Rep>(rep_text, reg, "a GL2"));
    else if (g == Group::G2 && n == ParName::Q)
        st = decompose_IQ(s, expect_literal<GL2Rep>(rep_text, reg, "a GL2"));
    else if (g == Group::G2 && n == ParName::B) {
        // datum: a pair of torus characters "c1; c2" (s is ignored)
        auto semi = rep_text.find(';');
        if (semi == std::string::npos)
            throw CLI::ValidationError("decompose G2 B needs a character pair 'c1; c2'");
        RepLiteral lit = parse_rep_literal("JB(" + rep_text + ")", reg);
        st = decompose_IB_G2(std::get<G2JB>(std::get<G2Rep>(lit).kind).chi);
    } else if (g == Group::PGSp6 && n == ParName::P2)
        st = decompose_I2(s, expect_literal<GL2Rep>(rep_text, reg, "a GL2"));
    else if (g == Group::PGSp6 && n == ParName::P13)
        st = decompose_I13(s, expect_literal<GL2Rep>(rep_text, reg, "a GL2"));
    else if (g == Group::PGSp6 && n == ParName::P3) {
        RepLiteral lit = parse_rep_literal(rep_text, reg);
        if (auto* g3 = std::get_if<GL3Rep>(&lit)) st = decompose_I3(*g3);
        else if (auto* g2r = std::get_if<GL2Rep>(&lit)) {
            // bare supercuspidal literals default to GL2; reinterpret for I3
            const auto* sc = std::get_if<GL2Sc>(&g2r->kind);
            if (!sc) throw CLI::ValidationError("decompose PGSp6 P3 needs a GL3 literal");
            st = decompose_I3(gl3_sc(sc->label, sc->self_dual, g2r->twist));
        } else
            throw CLI::ValidationError("decompose PGSp6 P3 needs a GL3 literal");
    } else if (g == Group::PGSp6 && n == ParName::P1) {
        RepLiteral lit = parse_rep_literal(rep_text, reg);
        const auto* p6 = std::get_if<PGSp6Rep>(&lit);
        const P6J1* j1 = p6 ? std::get_if<P6J1>(&p6->kind) : nullptr;
        if (j1) st = decompose_I1(s, j1->tau);
        else throw CLI::ValidationError(
            "decompose PGSp6 P1 needs a GSp4 supercuspidal wrapped as J1(s; sp4sc(...))");
    } else
        throw CLI::ValidationError("no decomposition engine for " + group + " " + par);
    json out = {{"command", "decompose"},
                {"group", group},
                {"parabolic", par},
                {"s", rat_to_string(s)},
                {"datum", rep_text},
                {"structure", rep_structure_json(st)}};
    emit(opt, out, rep_structure_text(st));
    return 0;
}

int run_packet(const Options& opt, const std::string& param_text) {
    auto reg = opt.registry();
    LParamG2 phi = expect_literal<LParamG2>(param_text, reg, "a parameter");
    json members = json::array();
    std::string text;
    for (const auto& m : packet_of(phi)) {
        std::string rep_text = std::visit(
            [](const auto& r) -> std::string {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, G2Rep>) return to_string(r);
                else return "abstract[" + r.character + " of " + r.param + "]";
            },
            m.rep);
        members.push_back({{"character", m.character}, {"rep", rep_text}});
        text += m.character + ": " + rep_text + "\n";
    }
    json cg = nullptr;
    try {
        switch (component_group(phi)) {
            case ComponentGroup::Trivial: cg = "1"; break;
            case ComponentGroup::Mu2: cg = "mu2"; break;
            case ComponentGroup::Mu3: cg = "mu3"; break;
            case ComponentGroup::S3: cg = "S3"; break;
        }
    } catch (const RepError&) {
        // cuspidal parameters: component group not determined
    }
    json out = {{"command", "packet"},
                {"param", to_string(phi)},
                {"component_group", cg},
                {"members", members}};
    emit(opt, out, text.empty() ? "(membership not enumerated)\n" : text);
    return 0;
}

int run_jacquet(const Options& opt, const std::string& group, const std::string& par) {
    Group g = parse_group(group);
    ParName n = parse_parabolic(par);
    auto pieces = g == Group::PGSp6 ? minrep_jacquet_p6(n) : minrep_jacquet(g, n);
    json out = {{"command", "jacquet"},
                {"group", group},
                {"parabolic", par},
                {"layers", pieces_json(pieces)}};
    emit(opt, out, pieces_text(pieces));
    return 0;
}

int run_ie(const Options& opt, const std::string& s_text, const std::string& e_text) {
    Rat s = rat_from_string(s_text);
    EtaleCubic e = parse_etale(e_text);
    auto pieces = ie_filtration(s, e);
    json out = {{"command", "ie-filtration"},
                {"s", rat_to_string(s)},
                {"E", to_string(e)},
                {"m_E", e.m()},
                {"layers", pieces_json(pieces)}};
    emit(opt, out, pieces_text(pieces));
    return 0;
}

int run_theta(const Options& opt, const std::string& dir, const std::string& rep_text) {
    auto reg = opt.registry();
    PContext p = opt.p();
    if (dir == "d2g") {
        auto l = theta_D_to_G2(expect_literal<PDxRep>(rep_text, reg, "a PD^x"), p);
        emit(opt, lift_json("theta d2g", rep_text, opt, l, "forward-table"), lift_text(l));
    } else if (dir == "b2g") {
        auto l = theta_B_to_G2(expect_literal<PGL3ExtRep>(rep_text, reg, "an ext(...)"), p);
        emit(opt, lift_json("theta b2g", rep_text, opt, l, "forward-table"), lift_text(l));
    } else if (dir == "g2p") {
        auto l = theta_G2_to_P6(expect_literal<G2Rep>(rep_text, reg, "a G2"), p);
        emit(opt, lift_json("theta g2p", rep_text, opt, l, "forward-table"), lift_text(l));
    } else if (dir == "p2g") {
        auto l = theta_P6_to_G2(expect_literal<PGSp6Rep>(rep_text, reg, "a PGSp6"), p);
        emit(opt, lift_json("theta p2g", rep_text, opt, l, "inverse-lookup"), lift_text(l));
    } else {
        throw CLI::ValidationError("theta direction must be d2g, b2g, g2p, or p2g");
    }
    return 0;
}

int run_dichotomy(const Options& opt, const std::string& rep_text) {
    auto reg = opt.registry();
    DichotomySide side = dichotomy(expect_literal<G2Rep>(rep_text, reg, "a G2"), opt.p());
    json out = {{"command", "dichotomy"},
                {"input", rep_text},
                {"p", opt.p_text.empty() ? "other" : opt.p_text},
                {"value", to_string(side)},
                {"target", nullptr},
                {"big_theta_note", nullptr},
                {"provenance", "partition"}};
    emit(opt, out, "side: " + to_string(side) + "\n");
    return 0;
}

int run_ds_target(const Options& opt, const std::string& rep_text) {
    auto reg = opt.registry();
    DsTarget t = discrete_series_target(expect_literal<G2Rep>(rep_text, reg, "a G2"), opt.p());
    json out = {{"command", "ds-target"},
                {"input", rep_text},
                {"p", opt.p_text.empty() ? "other" : opt.p_text},
                {"value", to_string(t)},
                {"target", to_string(t)},
                {"big_theta_note", nullptr},
                {"provenance", "trichotomy"}};
    emit(opt, out, "target: " + to_string(t) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic engine for the exceptional theta correspondences of G2"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--registry", opt.registry_path, "character registry file");
    app.add_option("--p", opt.p_text, "residue characteristic context: 2, 3, or other");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "verification seed");
    app.add_option("--size", opt.size, "verification case count");

    std::string a1, a2, a3, a4;
    std::function<int()> action;

    auto* rootsys = app.add_subcommand("rootsys", "root data, Weyl orders, parabolic tables");
    std::string q_reading;
    rootsys->add_option("--q-reading", q_reading,
                        "evaluate the C3 quadratic form on s1,s2,s3 in the literal printed "
                        "readings (both non-invariant) and the corrected invariant form");
    rootsys->callback([&] {
        action = [&] {
            return q_reading.empty() ? run_rootsys(opt) : run_q_reading(opt, q_reading);
        };
    });

    auto* dec = app.add_subcommand("decompose", "decompose a degenerate principal series");
    dec->add_option("group", a1)->required();
    dec->add_option("parabolic", a2)->required();
    dec->add_option("s", a3)->required();
    dec->add_option("rep", a4)->required();
    dec->callback([&] { action = [&] { return run_decompose(opt, a1, a2, a3, a4); }; });

    auto* pkt = app.add_subcommand("packet", "list an L-packet");
    pkt->add_option("param", a1)->required();
    pkt->callback([&] { action = [&] { return run_packet(opt, a1); }; });

    auto* jac = app.add_subcommand("jacquet", "Jacquet modules of the minimal representation");
    jac->add_option("group", a1)->required();
    jac->add_option("parabolic", a2)->required();
    jac->callback([&] { action = [&] { return run_jacquet(opt, a1, a2); }; });

    auto* ie = app.add_subcommand("ie-filtration", "Mackey filtration of I_E(s)");
    ie->add_option("s", a1)->required();
    ie->add_option("E", a2)->required();
    ie->callback([&] { action = [&] { return run_ie(opt, a1, a2); }; });

    auto* th = app.add_subcommand("theta", "theta lift oracles");
    th->add_option("direction", a1)->required()
        ->check(CLI::IsMember({"d2g", "b2g", "g2p", "p2g"}));
    th->add_option("rep", a2)->required();
    th->callback([&] { action = [&] { return run_theta(opt, a1, a2); }; });

    auto* dich = app.add_subcommand("dichotomy", "PD^x / PGSp6 dichotomy side");
    dich->add_option("rep", a1)->required();
    dich->callback([&] { action = [&] { return run_dichotomy(opt, a1); }; });

    auto* ds = app.add_subcommand("ds-target", "discrete-series trichotomy target");
    ds->add_option("rep", a1)->required();
    ds->callback([&] { action = [&] { return run_ds_target(opt, a1); }; });

    auto* ver = app.add_subcommand("verify", "run a property-verification suite");
    ver->add_option("suite", a1)->required();
    ver->callback([&] { action = [&] { return run_verify(opt, a1); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
