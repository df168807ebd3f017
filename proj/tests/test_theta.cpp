#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <g2theta/theta.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace g2theta;

namespace {

RegistryPtr reg = Registry::with_defaults();
ExponentChar triv = ExponentChar::trivial(reg);
ExponentChar chi2 = ExponentChar::symbol(reg, "chi2u");
ExponentChar chi2r = ExponentChar::symbol(reg, "chi2r");
ExponentChar chi3 = ExponentChar::symbol(reg, "chi3u");
ExponentChar chi3r = ExponentChar::symbol(reg, "chi3r");
ExponentChar nu(const Rat& s) { return ExponentChar::norm_power(reg, s); }

// tempered unitary GL2 data usable as standard-module input
std::vector<GL2Rep> tempered_gl2() {
    return {
        gl2_st(triv),
        gl2_st(chi2),
        gl2_st(chi2r),
        gl2_sc("a1", false, triv),
        gl2_sc("a2", false, chi3),
        gl2_sc("b1", true, triv),
        gl2_sc("b2", true, triv),
        gl2_sc("c1", true, chi2, false),
        gl2_sc("c2", true, chi2, true),
        gl2_ps(triv, chi2),
    };
}

// self-dual unitary supercuspidals with trivial central character
std::vector<GL2Rep> sd_sc_gl2(int n, const std::string& stem) {
    std::vector<GL2Rep> out;
    for (int i = 0; i < n; ++i) out.push_back(gl2_sc(stem + std::to_string(i), true, triv));
    return out;
}

// A large family of pairwise distinct representations of G2, avoiding the
// known notation aliases (J_B on a chamber wall, J_B = trivial at (2,1),
// principal-series data fed through two different parabolic summand nodes).
std::vector<G2Rep> g2_family() {
    std::vector<G2Rep> fam;
    std::set<std::string> seen;
    auto add = [&](G2Rep r) {
        auto key = to_string(r);
        if (seen.insert(key).second) fam.push_back(std::move(r));
    };

    add(g2_st());
    add(g2_trivial());
    add(g2_pi_gen_1());
    add(g2_pi_deg_1());
    for (auto l : {PiScLabel::One, PiScLabel::MinusOne, PiScLabel::Omega, PiScLabel::OmegaSq})
        add(g2_pi_sc(l));
    for (const auto& q : {chi2, chi2r, char_mul(chi2, chi2r)}) add(g2_pi_gen_quad(q));
    add(g2_pi_gen_cubic(chi3));
    add(g2_pi_gen_cubic(chi3r));
    add(g2_pi_gen_dihedral(gl2_sc("c2", true, chi2, true)));
    add(g2_pi_gen_dihedral(gl2_sc("c3", true, chi2r, true)));

    for (int i = 0; i < 60; ++i)
        add(g2_sc_from_pd(pd_other("d" + std::to_string(i), Heart::Yes, PContext::Other)));
    for (int i = 0; i < 60; ++i)
        add(g2_sc_from_b(pgl3_ext(gl3_sc("e" + std::to_string(i), false), Ext::InducedPlus)));
    for (int i = 0; i < 8; ++i) {
        add(g2_sc_from_b(pgl3_ext(gl3_sc("f" + std::to_string(i), true), Ext::Plus)));
        add(g2_sc_from_b(pgl3_ext(gl3_sc("f" + std::to_string(i), true), Ext::Minus)));
    }
    for (int i = 0; i < 60; ++i) add(g2_sc_abstract("g" + std::to_string(i), i % 2 == 0));
    for (const auto& rho : sd_sc_gl2(5, "r"))
        add(g2_sc_abstract("pi_rho[" + to_string(rho) + "]", false, rho));

    for (const auto& tau : sd_sc_gl2(10, "t")) {
        add(g2_delta_p(tau));
        add(g2_delta_q(tau));
    }

    // tempered summands of unitarily induced representations
    for (const auto& tau : tempered_gl2()) {
        if (std::holds_alternative<GL2Ps>(tau.kind)) continue;  // alias with Ind_B
        bool sd_nontriv_central = is_self_dual(tau) && !gl2_central_char(tau).is_trivial();
        if (is_discrete_series(tau) && gl2_central_char(tau).order() <= 2) {
            add(g2_ip_summand(tau, true));
            if (sd_nontriv_central) add(g2_ip_summand(tau, false));
        }
        add(g2_iq_summand(tau, true));
        if (sd_nontriv_central) add(g2_iq_summand(tau, false));
    }
    add(g2_ib_summand({chi2, chi2r}, true));
    add(g2_ib_summand({chi2, chi2r}, false));  // the three-quadratics split case
    add(g2_ib_summand({chi2, triv}, true));
    add(g2_ib_summand({chi3, triv}, true));
    add(g2_ib_summand({chi3, chi3}, true));
    add(g2_ib_summand({triv, triv}, true));

    // Langlands quotients
    std::vector<Rat> svals = {Rat(1, 2), Rat(1),    Rat(3, 2), Rat(2), Rat(5, 2),
                              Rat(3),    Rat(7, 2), Rat(4),    Rat(9, 2)};
    for (const auto& s : svals)
        for (const auto& tau : tempered_gl2()) {
            add(g2_jp(s, tau));
            add(g2_jq(s, tau));
        }
    std::vector<std::pair<Rat, Rat>> exps = {
        {Rat(2), Rat(1)},        {Rat(3), Rat(1)},        {Rat(3), Rat(2)},
        {Rat(4), Rat(1)},        {Rat(4), Rat(3)},        {Rat(5, 2), Rat(1, 2)},
        {Rat(5, 2), Rat(3, 2)},  {Rat(7, 2), Rat(1, 2)},  {Rat(7, 2), Rat(5, 2)},
        {Rat(3, 2), Rat(1, 2)},
    };
    std::vector<ExponentChar> tors1 = {triv, chi2, chi3};
    std::vector<ExponentChar> tors2 = {triv, chi2, chi3};
    for (const auto& [a, b] : exps)
        for (const auto& t1 : tors1)
            for (const auto& t2 : tors2) {
                if (a == Rat(2) && b == Rat(1) && t1.is_trivial() && t2.is_trivial())
                    continue;  // J_B at (2, 1) is the trivial representation
                add(g2_jb({char_mul(t1, nu(a)), char_mul(t2, nu(b))}));
            }
    return fam;
}

bool in_theta_d_image(const G2Rep& r) { return lifts_from_D(r); }

}  // namespace

TEST_CASE("theta_D_to_G2: golden lifts") {
    auto l1 = theta_D_to_G2(pd_trivial());
    REQUIRE(l1.value == LiftValue::Rep);
    CHECK(*l1.rep == g2_pi_deg_1());

    auto lw = theta_D_to_G2(pd_unram_cubic(chi3, 1));
    REQUIRE(lw.value == LiftValue::Rep);
    CHECK(*lw.rep == g2_pi_sc(PiScLabel::Omega));
    auto lw2 = theta_D_to_G2(pd_unram_cubic(chi3, 2));
    REQUIRE(lw2.value == LiftValue::Rep);
    CHECK(*lw2.rep == g2_pi_sc(PiScLabel::OmegaSq));

    auto ly = theta_D_to_G2(pd_other("tau", Heart::Yes, PContext::Other));
    REQUIRE(ly.value == LiftValue::Rep);
    CHECK(*ly.rep == g2_sc_from_pd(pd_other("tau", Heart::Yes, PContext::Other)));
    CHECK(is_supercuspidal(*ly.rep));
    CHECK(!is_generic(*ly.rep));

    CHECK(theta_D_to_G2(pd_other("tau", Heart::No, PContext::Other)).value == LiftValue::Zero);
    auto lu = theta_D_to_G2(pd_other("tau", Heart::Unknown, PContext::Three), PContext::Three);
    CHECK(lu.value == LiftValue::Unknown);
    CHECK(lu.big_theta_note.has_value());
}

TEST_CASE("theta_B_to_G2: golden lifts and vanishing") {
    // Steinberg: the two extensions hit the subregular-trivial packet.
    auto st = gl3_st(triv);
    auto lp = theta_B_to_G2(pgl3_ext(st, Ext::Plus));
    REQUIRE(lp.value == LiftValue::Rep);
    CHECK(*lp.rep == g2_pi_gen_1());
    auto lm = theta_B_to_G2(pgl3_ext(st, Ext::Minus));
    REQUIRE(lm.value == LiftValue::Rep);
    CHECK(*lm.rep == g2_pi_sc(PiScLabel::One));

    // twisted Steinberg by a cubic character: not self-dual
    auto lc = theta_B_to_G2(pgl3_ext(gl3_st(chi3), Ext::InducedPlus));
    REQUIRE(lc.value == LiftValue::Rep);
    CHECK(*lc.rep == g2_pi_gen_cubic(chi3));
    CHECK(theta_B_to_G2(pgl3_ext(gl3_st(char_inv(chi3)), Ext::InducedPlus)) == lc);

    // supercuspidal base
    auto ls = theta_B_to_G2(pgl3_ext(gl3_sc("x", false), Ext::InducedPlus));
    REQUIRE(ls.value == LiftValue::Rep);
    CHECK(is_supercuspidal(*ls.rep));
    CHECK(is_generic(*ls.rep));

    // GL2 discrete series sigma with omega = 1: tau- lift vanishes
    auto sig1 = gl2_sc("b1", true, triv);
    auto tb1 = gl3_from_gl2(sig1);
    CHECK(theta_B_to_G2(pgl3_ext(tb1, Ext::Minus)).value == LiftValue::Zero);
    auto li = theta_B_to_G2(pgl3_ext(tb1, Ext::Plus));
    REQUIRE(li.value == LiftValue::Rep);
    CHECK(*li.rep == g2_ip_summand(sig1, true));

    // omega quadratic nontrivial: both extensions lift
    auto sig2 = gl2_sc("c1", true, chi2, false);
    auto tb2 = gl3_from_gl2(sig2);
    auto lip = theta_B_to_G2(pgl3_ext(tb2, Ext::Plus));
    auto lim = theta_B_to_G2(pgl3_ext(tb2, Ext::Minus));
    REQUIRE(lip.value == LiftValue::Rep);
    REQUIRE(lim.value == LiftValue::Rep);
    CHECK(*lip.rep == g2_ip_summand(sig2, true));
    CHECK(*lim.rep == g2_ip_summand(sig2, false));

    // three nontrivial quadratic characters: generic/degenerate summand pair
    auto tq = gl3_ps({chi2, chi2r, char_mul(chi2, chi2r)});
    auto lq = theta_B_to_G2(pgl3_ext(tq, Ext::Plus));
    auto lqm = theta_B_to_G2(pgl3_ext(tq, Ext::Minus));
    REQUIRE(lq.value == LiftValue::Rep);
    REQUIRE(lqm.value == LiftValue::Rep);
    CHECK(*lq.rep == g2_ib_summand({chi2, chi2r}, true));
    CHECK(*lqm.rep == g2_ib_summand({chi2, chi2r}, false));

    // a self-dual principal series containing the trivial character: tau-
    // vanishes, tau+ lifts to a full-induced summand
    auto tsd = gl3_ps({triv, chi2, chi2});
    CHECK(theta_B_to_G2(pgl3_ext(tsd, Ext::Minus)).value == LiftValue::Zero);
    CHECK(theta_B_to_G2(pgl3_ext(tsd, Ext::Plus)).value == LiftValue::Rep);

    // nontempered data land in Langlands quotients on B
    auto lj = theta_B_to_G2(
        pgl3_ext(gl3_jb({nu(Rat(1)), triv, nu(Rat(-1))}), Ext::Plus));
    REQUIRE(lj.value == LiftValue::Rep);
    CHECK(std::holds_alternative<G2JB>(lj.rep->kind));
    CHECK(!is_tempered(*lj.rep));

    // nonzero central twist is rejected
    CHECK_THROWS_AS(theta_B_to_G2(pgl3_ext(gl3_sc("x", false, Rat(1)), Ext::InducedPlus)),
                    RepError);
}

TEST_CASE("theta_B_to_G2: residue characteristic gating for self-dual supercuspidals") {
    auto tau = pgl3_ext(gl3_sc("y", true), Ext::Plus);
    CHECK_THROWS_AS(theta_B_to_G2(tau, PContext::Other), RepError);
    CHECK_THROWS_AS(theta_B_to_G2(tau, PContext::Three), RepError);
    auto l = theta_B_to_G2(tau, PContext::Two);
    REQUIRE(l.value == LiftValue::Rep);
    CHECK(*l.rep == g2_sc_from_b(tau));
}

TEST_CASE("theta_G2_to_P6: golden tempered lifts") {
    auto ck = [](const G2Rep& pi, const PGSp6Rep& expect) {
        auto l = theta_G2_to_P6(pi);
        REQUIRE(l.value == LiftValue::Rep);
        CHECK(*l.rep == expect);
    };
    ck(g2_st(), p6_st());
    auto tau = gl2_sc("t0", true, triv);
    ck(g2_delta_q(tau), p6_delta2(tau));
    ck(g2_delta_p(tau), p6_delta13(tau));
    auto dih = gl2_sc("c2", true, chi2, true);
    ck(g2_pi_gen_dihedral(dih), p6_sigma_gen_tau(dih));
    ck(g2_pi_gen_quad(chi2), p6_sigma_gen_chi(chi2));
    ck(g2_iq_summand(gl2_st(triv), true), p6_i2_summand(gl2_st(triv), true));

    // the subregular-trivial packet: generic and supercuspidal members go to
    // the two constituents of the Siegel induction from st(1)
    ck(g2_pi_gen_1(), PGSp6Rep{P6I3Summand{gl3_st(triv), true}});
    ck(g2_pi_sc(PiScLabel::One), PGSp6Rep{P6I3Summand{gl3_st(triv), false}});

    // cubic-twisted Steinberg: irreducible Siegel induction
    auto lc = theta_G2_to_P6(g2_pi_gen_cubic(chi3));
    REQUIRE(lc.value == LiftValue::Rep);
    CHECK(std::holds_alternative<P6I3Irred>(lc.rep->kind));

    // members lifted from the PD^x tower have zero lift here
    CHECK(theta_G2_to_P6(g2_pi_deg_1()).value == LiftValue::Zero);
    CHECK(theta_G2_to_P6(g2_pi_sc(PiScLabel::Omega)).value == LiftValue::Zero);
    CHECK(theta_G2_to_P6(g2_pi_sc(PiScLabel::OmegaSq)).value == LiftValue::Zero);
    CHECK(theta_G2_to_P6(g2_sc_from_pd(pd_other("d", Heart::Yes, PContext::Other))).value ==
          LiftValue::Zero);

    // pi_sc[-1] goes to a nongeneric supercuspidal
    auto lsc = theta_G2_to_P6(g2_pi_sc(PiScLabel::MinusOne));
    REQUIRE(lsc.value == LiftValue::Rep);
    CHECK(*lsc.rep == p6_sc_abstract("theta(pi_sc[-1])", false));

    // supercuspidal theta-lift from the metaplectic SL2: Saito-Kurokawa
    auto rho = gl2_sc("r0", true, triv);
    auto pr = g2_sc_abstract("pi_rho[" + to_string(rho) + "]", false, rho);
    auto lr = theta_G2_to_P6(pr);
    REQUIRE(lr.value == LiftValue::Rep);
    const auto* d1 = std::get_if<P6Delta1>(&lr.rep->kind);
    REQUIRE(d1);
    CHECK(d1->tau.saito_kurokawa);
    CHECK(d1->tau.std_contains_trivial);
    CHECK(!is_generic(*lr.rep));

    // other supercuspidals transfer to supercuspidals
    auto lo = theta_G2_to_P6(g2_sc_abstract("z", true));
    REQUIRE(lo.value == LiftValue::Rep);
    CHECK(*lo.rep == p6_sc_abstract("theta(z)", true));
}

TEST_CASE("theta_G2_to_P6 / theta_P6_to_G2: nontempered transport") {
    auto tau = gl2_st(triv);
    Rat s(2);

    auto lq = theta_G2_to_P6(g2_jq(s, tau));
    REQUIRE(lq.value == LiftValue::Rep);
    CHECK(*lq.rep == p6_j2(s, tau));
    CHECK(lq.big_theta_note == std::optional<std::string>{"quotient of I_2(tau (x) tau)"});

    auto lp = theta_G2_to_P6(g2_jp(s, tau));
    REQUIRE(lp.value == LiftValue::Rep);
    CHECK(*lp.rep == p6_j13(s, tau));
    CHECK(lp.big_theta_note == std::optional<std::string>{"quotient of I_13(tau (x) 1)"});

    // backward
    auto bq = theta_P6_to_G2(p6_j2(s, tau));
    REQUIRE(bq.value == LiftValue::Rep);
    CHECK(*bq.rep == g2_jq(s, tau));
    auto bp = theta_P6_to_G2(p6_j13(s, tau));
    REQUIRE(bp.value == LiftValue::Rep);
    CHECK(*bp.rep == g2_jp(s, tau));

    // the Siegel-type quotient J_1 is not in the image
    CHECK(theta_P6_to_G2(p6_j1(Rat(1), GSp4Sc{"u", false, false})).value == LiftValue::Zero);

    // trivial representation: J_B at (2, 1) through P
    auto lt = theta_G2_to_P6(g2_trivial());
    REQUIRE(lt.value == LiftValue::Rep);
    const auto* j13 = std::get_if<P6J13>(&lt.rep->kind);
    REQUIRE(j13);
    CHECK(j13->s == Rat(3, 2));
    CHECK(std::holds_alternative<GL2One>(j13->tau.kind));
    auto bt = theta_P6_to_G2(*lt.rep);
    REQUIRE(bt.value == LiftValue::Rep);
    CHECK(*bt.rep == g2_jb({nu(Rat(2)), nu(Rat(1))}));  // the trivial rep, in J_B form
}

TEST_CASE("theta_P6_to_G2: golden tempered lifts and unknowns") {
    CHECK(*theta_P6_to_G2(p6_st()).rep == g2_st());
    auto tau = gl2_sc("t0", true, triv);
    CHECK(*theta_P6_to_G2(p6_delta2(tau)).rep == g2_delta_q(tau));
    CHECK(*theta_P6_to_G2(p6_delta13(tau)).rep == g2_delta_p(tau));
    CHECK(*theta_P6_to_G2(p6_sigma_gen_chi(chi2)).rep == g2_pi_gen_quad(chi2));
    auto dih = gl2_sc("c2", true, chi2, true);
    CHECK(*theta_P6_to_G2(p6_sigma_gen_tau(dih)).rep == g2_pi_gen_dihedral(dih));
    CHECK(*theta_P6_to_G2(p6_i2_summand(tau, false)).rep == g2_iq_summand(tau, false));
    CHECK(*theta_P6_to_G2(p6_sc_abstract("theta(pi_sc[-1])", false)).rep ==
          g2_pi_sc(PiScLabel::MinusOne));
    CHECK(*theta_P6_to_G2(p6_sc_abstract("theta(z)", true)).rep == g2_sc_abstract("z", true));

    // inversion is a forward-table lookup: data outside the recorded image
    // are undetermined, not zero
    CHECK(theta_P6_to_G2(p6_sc_abstract("mystery", false)).value == LiftValue::Unknown);
    CHECK(theta_P6_to_G2(p6_delta1(GSp4Sc{"u", true, true})).value == LiftValue::Unknown);
    CHECK(theta_P6_to_G2(p6_unresolved("note")).value == LiftValue::Unknown);
}

TEST_CASE("round trips through PGSp6 over the whole family") {
    int checked = 0;
    for (const auto& pi : g2_family()) {
        auto fwd = theta_G2_to_P6(pi);
        if (fwd.value != LiftValue::Rep) continue;
        auto back = theta_P6_to_G2(*fwd.rep);
        // the trivial representation returns in its J_B normal form
        if (std::holds_alternative<G2Triv>(pi.kind)) {
            CHECK(*back.rep == g2_jb({nu(Rat(2)), nu(Rat(1))}));
            continue;
        }
        if (back.value != LiftValue::Rep) {
            // inversion may be undetermined, but never zero and never wrong
            CHECK(back.value == LiftValue::Unknown);
            continue;
        }
        CHECK(*back.rep == pi);
        ++checked;
    }
    CHECK(checked >= 450);
}

TEST_CASE("Howe duality: injectivity of the three forward oracles") {
    // theta_D
    {
        std::map<std::string, std::string> image;
        std::vector<PDxRep> fam = {pd_trivial(), pd_unram_cubic(chi3, 1), pd_unram_cubic(chi3, 2)};
        for (int i = 0; i < 40; ++i)
            fam.push_back(pd_other("d" + std::to_string(i), Heart::Yes, PContext::Other));
        for (const auto& tau : fam) {
            auto l = theta_D_to_G2(tau);
            REQUIRE(l.value == LiftValue::Rep);
            auto [it, fresh] = image.emplace(to_string(*l.rep), to_string(tau));
            CHECK_MESSAGE(fresh, "collision at ", to_string(tau), " with ", it->second);
        }
        CHECK(image.size() == fam.size());
    }
    // theta_B
    {
        std::vector<PGL3ExtRep> fam = {
            pgl3_ext(gl3_st(triv), Ext::Plus),
            pgl3_ext(gl3_st(triv), Ext::Minus),
            pgl3_ext(gl3_st(chi3), Ext::InducedPlus),
            pgl3_ext(gl3_st(chi3r), Ext::InducedPlus),
            pgl3_ext(gl3_from_gl2(gl2_sc("b1", true, triv)), Ext::Plus),
            pgl3_ext(gl3_from_gl2(gl2_sc("c1", true, chi2, false)), Ext::Plus),
            pgl3_ext(gl3_from_gl2(gl2_sc("c1", true, chi2, false)), Ext::Minus),
            pgl3_ext(gl3_ps({chi2, chi2r, char_mul(chi2, chi2r)}), Ext::Plus),
            pgl3_ext(gl3_ps({chi2, chi2r, char_mul(chi2, chi2r)}), Ext::Minus),
            pgl3_ext(gl3_ps({triv, chi2, chi2}), Ext::Plus),
            pgl3_ext(gl3_ps({triv, chi3, char_inv(chi3)}), Ext::Plus),
        };
        for (int i = 0; i < 40; ++i)
            fam.push_back(pgl3_ext(gl3_sc("e" + std::to_string(i), false), Ext::InducedPlus));
        std::map<std::string, std::string> image;
        for (const auto& tau : fam) {
            auto l = theta_B_to_G2(tau);
            REQUIRE(l.value == LiftValue::Rep);
            auto [it, fresh] = image.emplace(to_string(*l.rep), to_string(tau));
            CHECK_MESSAGE(fresh, "collision at ", to_string(tau), " with ", it->second);
        }
        CHECK(image.size() == fam.size());
    }
    // theta : G2 -> PGSp6
    {
        auto fam = g2_family();
        CHECK(fam.size() >= 500);
        std::map<std::string, std::string> image;
        int lifted = 0;
        for (const auto& pi : fam) {
            auto l = theta_G2_to_P6(pi);
            if (l.value != LiftValue::Rep) continue;
            ++lifted;
            auto [it, fresh] = image.emplace(to_string(*l.rep), to_string(pi));
            CHECK_MESSAGE(fresh, "collision at ", to_string(pi), " with ", it->second);
        }
        CHECK(lifted >= 500 - 100);  // only the PD^x-tower members drop out
    }
}

TEST_CASE("the images of theta_B and theta_D inside Irr(G2) are disjoint") {
    std::set<std::string> from_d;
    from_d.insert(to_string(*theta_D_to_G2(pd_trivial()).rep));
    from_d.insert(to_string(*theta_D_to_G2(pd_unram_cubic(chi3, 1)).rep));
    from_d.insert(to_string(*theta_D_to_G2(pd_unram_cubic(chi3, 2)).rep));
    for (int i = 0; i < 40; ++i)
        from_d.insert(to_string(
            *theta_D_to_G2(pd_other("d" + std::to_string(i), Heart::Yes, PContext::Other)).rep));

    std::vector<PGL3ExtRep> bfam = {
        pgl3_ext(gl3_st(triv), Ext::Plus),
        pgl3_ext(gl3_st(triv), Ext::Minus),
        pgl3_ext(gl3_st(chi3), Ext::InducedPlus),
        pgl3_ext(gl3_from_gl2(gl2_sc("b1", true, triv)), Ext::Plus),
        pgl3_ext(gl3_ps({chi2, chi2r, char_mul(chi2, chi2r)}), Ext::Minus),
    };
    for (int i = 0; i < 40; ++i)
        bfam.push_back(pgl3_ext(gl3_sc("e" + std::to_string(i), false), Ext::InducedPlus));
    for (const auto& tau : bfam) {
        auto l = theta_B_to_G2(tau);
        REQUIRE(l.value == LiftValue::Rep);
        CHECK(from_d.count(to_string(*l.rep)) == 0);
    }

    // lifts_from_D recognizes exactly the D-tower image
    for (const auto& key : from_d) (void)key;
    CHECK(lifts_from_D(g2_pi_deg_1()));
    CHECK(lifts_from_D(g2_pi_sc(PiScLabel::Omega)));
    CHECK(!lifts_from_D(g2_pi_sc(PiScLabel::One)));
    CHECK(!lifts_from_D(g2_pi_gen_1()));
}

TEST_CASE("dichotomy partitions the family with no unknowns away from p = 2, 3") {
    auto fam = g2_family();
    CHECK(fam.size() >= 500);
    int pd = 0, p6 = 0;
    for (const auto& pi : fam) {
        DichotomySide side = dichotomy(pi, PContext::Other);
        CHECK(side != DichotomySide::Unknown);
        if (side == DichotomySide::PDSide) {
            ++pd;
            CHECK(in_theta_d_image(pi));
            CHECK(theta_G2_to_P6(pi).value == LiftValue::Zero);
        } else {
            ++p6;
            CHECK(theta_G2_to_P6(pi).value == LiftValue::Rep);
        }
    }
    CHECK(pd + p6 == static_cast<int>(fam.size()));
    CHECK(pd >= 40);
    CHECK(p6 >= 400);
}

TEST_CASE("temperedness and genericity are preserved") {
    for (const auto& pi : g2_family()) {
        auto l = theta_G2_to_P6(pi);
        if (l.value != LiftValue::Rep) continue;
        CHECK(is_tempered(pi) == is_tempered(*l.rep));
        if (is_generic(pi)) CHECK(is_generic(*l.rep));
        if (!is_generic(pi)) CHECK(!is_generic(*l.rep));
    }
    // the backward direction on nontempered data
    auto tau = gl2_st(triv);
    CHECK(!is_tempered(*theta_P6_to_G2(p6_j2(Rat(1), tau)).rep));
    CHECK(!is_tempered(*theta_P6_to_G2(p6_j13(Rat(1), tau)).rep));
    CHECK(is_tempered(*theta_P6_to_G2(p6_delta2(gl2_sc("t0", true, triv))).rep));
}

TEST_CASE("discrete series trichotomy") {
    CHECK(discrete_series_target(g2_pi_deg_1()) == DsTarget::PDx);
    CHECK(discrete_series_target(g2_pi_sc(PiScLabel::Omega)) == DsTarget::PDx);
    CHECK(discrete_series_target(g2_pi_sc(PiScLabel::OmegaSq)) == DsTarget::PDx);
    CHECK(discrete_series_target(
              g2_sc_from_pd(pd_other("d", Heart::Yes, PContext::Other))) == DsTarget::PDx);

    CHECK(discrete_series_target(g2_pi_gen_1()) == DsTarget::PGL3);
    CHECK(discrete_series_target(g2_pi_sc(PiScLabel::One)) == DsTarget::PGL3);
    CHECK(discrete_series_target(g2_pi_gen_cubic(chi3)) == DsTarget::PGL3);
    CHECK(discrete_series_target(g2_sc_from_b(
              pgl3_ext(gl3_sc("x", false), Ext::InducedPlus))) == DsTarget::PGL3);

    CHECK(discrete_series_target(g2_st()) == DsTarget::PGSp6);
    CHECK(discrete_series_target(g2_delta_p(gl2_sc("t0", true, triv))) == DsTarget::PGSp6);
    CHECK(discrete_series_target(g2_delta_q(gl2_sc("t0", true, triv))) == DsTarget::PGSp6);
    CHECK(discrete_series_target(g2_pi_gen_quad(chi2)) == DsTarget::PGSp6);
    CHECK(discrete_series_target(g2_pi_sc(PiScLabel::MinusOne)) == DsTarget::PGSp6);
    CHECK(discrete_series_target(g2_sc_abstract("z", true)) == DsTarget::PGSp6);

    // only discrete series have a trichotomy target
    CHECK_THROWS_AS(discrete_series_target(g2_jp(Rat(1), gl2_st(triv))), RepError);
    CHECK_THROWS_AS(discrete_series_target(g2_iq_summand(gl2_st(triv), true)), RepError);

    // every discrete series member of the family gets exactly one target, and
    // the PGSp6-target lifts are themselves discrete series
    for (const auto& pi : g2_family()) {
        if (!is_discrete_series(pi)) continue;
        DsTarget t = discrete_series_target(pi);
        if (t == DsTarget::PGSp6) {
            auto l = theta_G2_to_P6(pi);
            REQUIRE(l.value == LiftValue::Rep);
            CHECK(is_discrete_series(*l.rep));
            CHECK(is_generic(pi) == is_generic(*l.rep));
        }
    }
}
