#ifndef G2THETA_THETA_HPP
#define G2THETA_THETA_HPP

// The three theta-correspondence oracles for the dual pairs
//   PD^x x G2,  (PGL3 x| Z/2) x G2,  G2 x PGSp6,
// together with the global verifiers: the dichotomy, the inverse (PGSp6 to
// G2) lookup, and the discrete-series trichotomy.
//
// Every oracle is a pure case table.  Outputs distinguish a proven-zero lift
// (Zero) from an undetermined one (Unknown); Unknown occurs only in the
// residue-characteristic-3 heart cases on PD^x and for supercuspidal data
// whose lift the tables do not enumerate.

#include <g2theta/reps.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace g2theta {

// ---------------------------------------------------------------------------
// Lift results
// ---------------------------------------------------------------------------

enum class LiftValue { Zero, Rep, Unknown };

inline std::string to_string(LiftValue v) {
    switch (v) {
        case LiftValue::Zero: return "zero";
        case LiftValue::Rep: return "rep";
        case LiftValue::Unknown: return "unknown";
    }
    return "?";
}

template <class Target>
struct Lift {
    LiftValue value = LiftValue::Zero;
    std::optional<Target> rep;                  // set iff value == Rep
    std::optional<std::string> big_theta_note;  // structure of the big lift

    static Lift zero() { return {}; }
    static Lift unknown(std::string note = {}) {
        Lift l;
        l.value = LiftValue::Unknown;
        if (!note.empty()) l.big_theta_note = std::move(note);
        return l;
    }
    static Lift of(Target t, std::string note = {}) {
        Lift l;
        l.value = LiftValue::Rep;
        l.rep = std::move(t);
        if (!note.empty()) l.big_theta_note = std::move(note);
        return l;
    }
    friend bool operator==(const Lift&, const Lift&) = default;
};

using LiftToG2 = Lift<G2Rep>;
using LiftToP6 = Lift<PGSp6Rep>;

struct DichotomyError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class DichotomySide { PDSide, PGSp6Side, Unknown };
enum class DsTarget { PDx, PGL3, PGSp6 };

inline std::string to_string(DichotomySide s) {
    switch (s) {
        case DichotomySide::PDSide: return "PD^x";
        case DichotomySide::PGSp6Side: return "PGSp6";
        case DichotomySide::Unknown: return "unknown";
    }
    return "?";
}

inline std::string to_string(DsTarget t) {
    switch (t) {
        case DsTarget::PDx: return "PD^x";
        case DsTarget::PGL3: return "PGL3";
        case DsTarget::PGSp6: return "PGSp6";
    }
    return "?";
}

// Genericity / temperedness of an extended PGL3 representation.
inline bool pgl3_is_tempered(const PGL3ExtRep& r) { return is_tempered(r.base); }
inline bool pgl3_is_generic(const PGL3ExtRep& r) {
    return is_generic(r.base) && r.ext != Ext::Minus;
}

// ---------------------------------------------------------------------------
// Internal transport helpers
// ---------------------------------------------------------------------------

namespace detail {

// The dominant Weyl-orbit representative of a torus character, suitable as
// Langlands data on B (exponents e1 >= e2 >= 0, not both zero).
inline TorusCharG2 dominant_torus_char(const TorusCharG2& chi) {
    std::optional<TorusCharG2> best;
    for (const auto& w : g2_weyl_elements()) {
        TorusCharG2 img = weyl_apply(w, chi);
        Rat e1 = img.c1.exponent(), e2 = img.c2.exponent();
        if (!(e1 >= e2 && e2 >= Rat(0)) || (e1 == Rat(0) && e2 == Rat(0))) continue;
        if (!best || img < *best) best = img;
    }
    if (!best) throw RepError("no dominant Weyl conjugate with nonzero exponents");
    return *best;
}

// The torus character of G2 attached to a triple of GL1 characters with
// trivial product (inverse of the long-root coordinate map).  Any ordering
// of the triple gives the same Weyl orbit.
inline TorusCharG2 torus_char_from_triple(const std::array<ExponentChar, 3>& chi) {
    return TorusCharG2{chi[2], chi[1]};
}

// Langlands data of the pair (c1, c2) with exponents a >= b >= 0: the twist
// s = (a+b)/2 and the balanced GL2 quotient of c1|.|^{-s} x c2|.|^{-s}.
struct GL2Langlands {
    Rat s;
    GL2Rep sigma;
    bool tempered;  // sigma unitary tempered (so (s, sigma) is standard data)
};

inline GL2Langlands gl2_langlands_from_pair(const ExponentChar& c1, const ExponentChar& c2) {
    Rat a = c1.exponent(), b = c2.exponent();
    Rat s = (a + b) / 2, u = (a - b) / 2;
    ExponentChar m1 = char_mul(c1, ExponentChar::norm_power(c1.registry(), -a));
    ExponentChar m2 = char_mul(c2, ExponentChar::norm_power(c2.registry(), -b));
    if (u == Rat(0))  // tempered unitary principal series
        return {s, gl2_ps(m1, m2), true};
    if (m1 == m2 && u == Rat(1, 2))  // reducible point: one-dimensional quotient
        return {s, gl2_one(m1), false};
    return {s,
            gl2_ps(char_mul(m1, ExponentChar::norm_power(m1.registry(), u)),
                   char_mul(m2, ExponentChar::norm_power(m2.registry(), -u))),
            false};
}

// J_B(chi) of G2 transported through P: the J_13(tau (x) 1) datum on PGSp6.
inline PGSp6Rep jb_to_j13(const G2JB& jb) {
    auto lang = gl2_langlands_from_pair(jb.chi.c1, jb.chi.c2);
    if (lang.tempered) return p6_j13(lang.s, lang.sigma);
    return PGSp6Rep{P6J13{lang.s, std::move(lang.sigma)}};
}

// Inverse of jb_to_j13 for a J_13 datum whose GL2 part is not tempered.
inline G2Rep j13_to_jb(const P6J13& j) {
    ExponentChar c1, c2;
    if (const auto* one = std::get_if<GL2One>(&j.tau.kind)) {
        auto reg = one->chi.registry();
        c1 = char_mul(one->chi, ExponentChar::norm_power(reg, Rat(1, 2)));
        c2 = char_mul(one->chi, ExponentChar::norm_power(reg, Rat(-1, 2)));
    } else if (const auto* ps = std::get_if<GL2Ps>(&j.tau.kind)) {
        c1 = ps->chi1;
        c2 = ps->chi2;
    } else {
        throw RepError("J_13 datum is not of Borel type");
    }
    // Undo the twist: the full i-th character is (stored chi_i) |.|^{s + t}.
    Rat shift = j.s + j.tau.twist;
    c1 = char_mul(c1, ExponentChar::norm_power(c1.registry(), shift));
    c2 = char_mul(c2, ExponentChar::norm_power(c2.registry(), shift));
    return g2_jb(dominant_torus_char(TorusCharG2{std::move(c1), std::move(c2)}));
}

// The lift of a tempered G2 representation whose PGL3 datum is tau_b: a
// constituent of the Siegel-induced I_3(tau_b) on PGSp6.
inline PGSp6Rep i3_image(GL3Rep tau_b, bool gen) {
    if (gl3_three_quadratics(tau_b)) return p6_i3_summand(std::move(tau_b), gen);
    if (is_self_dual(tau_b)) {
        if (gen && gl3_param_contains_trivial(tau_b))
            return PGSp6Rep{P6I3Irred{std::move(tau_b)}};  // I_3(tau_b) irreducible here
        return PGSp6Rep{P6I3Summand{std::move(tau_b), gen}};
    }
    GL3Rep dual = contragredient(tau_b);
    if (to_string(dual) < to_string(tau_b)) tau_b = std::move(dual);
    if (gen) return PGSp6Rep{P6I3Irred{std::move(tau_b)}};
    return PGSp6Rep{P6I3Summand{std::move(tau_b), false}};
}

inline ExponentChar trivial_char_default() { return ExponentChar{}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// theta_D_to_G2
// ---------------------------------------------------------------------------

inline LiftToG2 theta_D_to_G2(const PDxRep& tau, PContext /*p*/ = PContext::Other) {
    return std::visit(
        [&](const auto& k) -> LiftToG2 {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PDTrivial>) {
                return LiftToG2::of(g2_pi_deg_1());
            } else if constexpr (std::is_same_v<T, PDUnramCubic>) {
                return LiftToG2::of(
                    g2_pi_sc(k.power == 1 ? PiScLabel::Omega : PiScLabel::OmegaSq));
            } else {
                switch (k.heart) {
                    case Heart::Yes: return LiftToG2::of(g2_sc_from_pd(PDxRep{k}));
                    case Heart::No: return LiftToG2::zero();
                    case Heart::Unknown:
                        return LiftToG2::unknown(
                            "torus-fixed vectors undetermined in residue characteristic 3");
                }
                return LiftToG2::zero();
            }
        },
        tau.kind);
}

// ---------------------------------------------------------------------------
// theta_B_to_G2
// ---------------------------------------------------------------------------

inline LiftToG2 theta_B_to_G2(const PGL3ExtRep& tau, PContext p = PContext::Other) {
    const GL3Rep& base = tau.base;
    if (base.twist != Rat(0))
        throw RepError("theta_B: the datum must have trivial central character");

    // Vanishing criterion: the lift is zero exactly when the parameter of the
    // (self-dual) base contains the trivial representation and the sign is -.
    if (tau.ext == Ext::Minus && gl3_param_contains_trivial(base)) return LiftToG2::zero();

    const bool gen_side = tau.ext != Ext::Minus;

    return std::visit(
        [&](const auto& k) -> LiftToG2 {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL3St>) {
                if (k.chi.is_trivial())  // Steinberg
                    return LiftToG2::of(gen_side ? g2_pi_gen_1() : g2_pi_sc(PiScLabel::One));
                return LiftToG2::of(g2_pi_gen_cubic(k.chi));  // twisted Steinberg, not self-dual
            } else if constexpr (std::is_same_v<T, GL3Sc>) {
                if (k.self_dual && p != PContext::Two)
                    throw RepError(
                        "self-dual supercuspidal data on PGL3 require residue characteristic 2");
                return LiftToG2::of(g2_sc_from_b(tau));
            } else if constexpr (std::is_same_v<T, GL3FromGL2>) {
                return LiftToG2::of(g2_ip_summand(k.sigma, gen_side));
            } else if constexpr (std::is_same_v<T, GL3Ps>) {
                std::array<ExponentChar, 3> chi{k.chi1, k.chi2, k.chi3};
                TorusCharG2 tc = detail::torus_char_from_triple(chi);
                if (chi[0].is_unitary() && chi[1].is_unitary() && chi[2].is_unitary())
                    return LiftToG2::of(g2_ib_summand(std::move(tc), gen_side));
                return LiftToG2::of(g2_jb(detail::dominant_torus_char(tc)));
            } else {  // GL3Jb: nongeneric Langlands quotient
                TorusCharG2 tc = detail::torus_char_from_triple({k.mu1, k.mu2, k.mu3});
                return LiftToG2::of(g2_jb(detail::dominant_torus_char(tc)));
            }
        },
        base.kind);
}

// ---------------------------------------------------------------------------
// theta_G2_to_P6
// ---------------------------------------------------------------------------

// Representations of G2 that occur in the correspondence with PD^x (the
// image of theta_D_to_G2 over the enumerated shapes).
inline bool lifts_from_D(const G2Rep& pi) {
    if (std::holds_alternative<G2PiDeg1>(pi.kind)) return true;
    if (std::holds_alternative<G2ScFromPD>(pi.kind)) return true;
    if (const auto* sc = std::get_if<G2PiSc>(&pi.kind))
        return sc->label == PiScLabel::Omega || sc->label == PiScLabel::OmegaSq;
    return false;
}

inline LiftToP6 theta_G2_to_P6(const G2Rep& pi, PContext /*p*/ = PContext::Other) {
    constexpr const char* kNoteI2 = "quotient of I_2(tau (x) tau)";
    constexpr const char* kNoteI13 = "quotient of I_13(tau (x) 1)";
    return std::visit(
        [&](const auto& k) -> LiftToP6 {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, G2St>) {
                return LiftToP6::of(p6_st());
            } else if constexpr (std::is_same_v<T, G2Triv>) {
                // 1 = J_B at (|.|^2, |.|), transported through P.
                ExponentChar triv = detail::trivial_char_default();
                auto reg = triv.registry();
                TorusCharG2 chi{ExponentChar::norm_power(reg, Rat(2)),
                                ExponentChar::norm_power(reg, Rat(1))};
                return LiftToP6::of(detail::jb_to_j13(G2JB{std::move(chi)}), kNoteI13);
            } else if constexpr (std::is_same_v<T, G2JP>) {
                return LiftToP6::of(p6_j13(k.s, k.tau), kNoteI13);
            } else if constexpr (std::is_same_v<T, G2JQ>) {
                return LiftToP6::of(p6_j2(k.s, k.tau), kNoteI2);
            } else if constexpr (std::is_same_v<T, G2JB>) {
                return LiftToP6::of(detail::jb_to_j13(k), kNoteI13);
            } else if constexpr (std::is_same_v<T, G2DeltaQ>) {
                return LiftToP6::of(p6_delta2(k.tau));
            } else if constexpr (std::is_same_v<T, G2DeltaP>) {
                return LiftToP6::of(p6_delta13(k.tau));
            } else if constexpr (std::is_same_v<T, G2PiGen>) {
                return std::visit(
                    [&](const auto& g) -> LiftToP6 {
                        using G = std::decay_t<decltype(g)>;
                        if constexpr (std::is_same_v<G, PiGenOne>) {
                            ExponentChar triv = detail::trivial_char_default();
                            return LiftToP6::of(detail::i3_image(gl3_st(triv), true));
                        } else if constexpr (std::is_same_v<G, PiGenQuad>) {
                            return LiftToP6::of(p6_sigma_gen_chi(g.chi));
                        } else if constexpr (std::is_same_v<G, PiGenCubic>) {
                            return LiftToP6::of(detail::i3_image(gl3_st(g.chi), true));
                        } else {  // PiGenDihedral
                            return LiftToP6::of(p6_sigma_gen_tau(g.tau));
                        }
                    },
                    k.param);
            } else if constexpr (std::is_same_v<T, G2PiDeg1>) {
                return LiftToP6::zero();  // lift from PD^x (trivial rep)
            } else if constexpr (std::is_same_v<T, G2PiSc>) {
                switch (k.label) {
                    case PiScLabel::One: {
                        ExponentChar triv = detail::trivial_char_default();
                        return LiftToP6::of(detail::i3_image(gl3_st(triv), false));
                    }
                    case PiScLabel::MinusOne:
                        return LiftToP6::of(p6_sc_abstract("theta(pi_sc[-1])", false));
                    case PiScLabel::Omega:
                    case PiScLabel::OmegaSq:
                        return LiftToP6::zero();  // lifts from PD^x
                }
                return LiftToP6::zero();
            } else if constexpr (std::is_same_v<T, G2IPSummand>) {
                return LiftToP6::of(detail::i3_image(gl3_from_gl2(k.tau), k.gen));
            } else if constexpr (std::is_same_v<T, G2IQSummand>) {
                return LiftToP6::of(p6_i2_summand(k.tau, k.gen));
            } else if constexpr (std::is_same_v<T, G2IBSummand>) {
                auto triple = borel_char_triple(k.chi);
                return LiftToP6::of(detail::i3_image(gl3_ps(triple), k.gen));
            } else if constexpr (std::is_same_v<T, G2ScFromPD>) {
                return LiftToP6::zero();
            } else if constexpr (std::is_same_v<T, G2ScFromB>) {
                return LiftToP6::of(detail::i3_image(k.ext.base, k.ext.ext != Ext::Minus));
            } else {  // G2ScAbstract
                if (k.lifts_to_SL2tilde)
                    return LiftToP6::of(
                        p6_delta1(GSp4Sc{to_string(*k.lifts_to_SL2tilde), true, true}));
                return LiftToP6::of(p6_sc_abstract("theta(" + k.label + ")", k.generic));
            }
        },
        pi.kind);
}

// ---------------------------------------------------------------------------
// theta_P6_to_G2
// ---------------------------------------------------------------------------

inline LiftToG2 theta_P6_to_G2(const PGSp6Rep& sigma, PContext /*p*/ = PContext::Other) {
    constexpr const char* kNoteIQ = "quotient of I_Q(tau)";
    constexpr const char* kNoteIP = "quotient of I_P(tau)";
    return std::visit(
        [&](const auto& k) -> LiftToG2 {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, P6St>) {
                return LiftToG2::of(g2_st());
            } else if constexpr (std::is_same_v<T, P6J2>) {
                return LiftToG2::of(g2_jq(k.s, k.tau), kNoteIQ);
            } else if constexpr (std::is_same_v<T, P6J13>) {
                if (is_unitary(k.tau) && is_tempered(k.tau))
                    return LiftToG2::of(g2_jp(k.s, k.tau), kNoteIP);
                return LiftToG2::of(detail::j13_to_jb(k), kNoteIP);
            } else if constexpr (std::is_same_v<T, P6J1>) {
                return LiftToG2::zero();  // nontempered, not of the two shapes
            } else if constexpr (std::is_same_v<T, P6Delta2>) {
                return LiftToG2::of(g2_delta_q(k.tau));
            } else if constexpr (std::is_same_v<T, P6Delta13>) {
                return LiftToG2::of(g2_delta_p(k.tau));
            } else if constexpr (std::is_same_v<T, P6SigmaGenTau>) {
                return LiftToG2::of(g2_pi_gen_dihedral(k.tau));
            } else if constexpr (std::is_same_v<T, P6SigmaGenChi>) {
                return LiftToG2::of(g2_pi_gen_quad(k.chi));
            } else if constexpr (std::is_same_v<T, P6I2Summand>) {
                return LiftToG2::of(g2_iq_summand(k.tau, k.gen));
            } else if constexpr (std::is_same_v<T, P6I3Irred>) {
                return std::visit(
                    [&](const auto& b) -> LiftToG2 {
                        using B = std::decay_t<decltype(b)>;
                        if constexpr (std::is_same_v<B, GL3Sc>) {
                            if (!is_self_dual(k.tau))
                                return LiftToG2::of(
                                    g2_sc_from_b(pgl3_ext(k.tau, Ext::InducedPlus)));
                            return LiftToG2::unknown("Siegel datum outside the recorded image");
                        } else if constexpr (std::is_same_v<B, GL3St>) {
                            return LiftToG2::of(g2_pi_gen_cubic(b.chi));
                        } else if constexpr (std::is_same_v<B, GL3FromGL2>) {
                            return LiftToG2::of(g2_ip_summand(b.sigma, true));
                        } else if constexpr (std::is_same_v<B, GL3Ps>) {
                            return LiftToG2::of(g2_ib_summand(
                                detail::torus_char_from_triple({b.chi1, b.chi2, b.chi3}), true));
                        } else {
                            return LiftToG2::unknown("Siegel datum outside the recorded image");
                        }
                    },
                    k.tau.kind);
            } else if constexpr (std::is_same_v<T, P6I3Summand>) {
                return std::visit(
                    [&](const auto& b) -> LiftToG2 {
                        using B = std::decay_t<decltype(b)>;
                        if constexpr (std::is_same_v<B, GL3St>) {
                            if (b.chi.is_trivial())
                                return LiftToG2::of(k.gen ? g2_pi_gen_1()
                                                          : g2_pi_sc(PiScLabel::One));
                            return LiftToG2::unknown("Siegel datum outside the recorded image");
                        } else if constexpr (std::is_same_v<B, GL3Sc>) {
                            return LiftToG2::of(g2_sc_from_b(
                                pgl3_ext(k.tau, k.gen ? Ext::Plus : Ext::Minus)));
                        } else if constexpr (std::is_same_v<B, GL3FromGL2>) {
                            return LiftToG2::of(g2_ip_summand(b.sigma, k.gen));
                        } else if constexpr (std::is_same_v<B, GL3Ps>) {
                            return LiftToG2::of(g2_ib_summand(
                                detail::torus_char_from_triple({b.chi1, b.chi2, b.chi3}),
                                k.gen));
                        } else {
                            return LiftToG2::unknown("Siegel datum outside the recorded image");
                        }
                    },
                    k.tau.kind);
            } else if constexpr (std::is_same_v<T, P6Delta1>) {
                return LiftToG2::unknown("inverse of the Saito-Kurokawa branch is not recorded");
            } else if constexpr (std::is_same_v<T, P6ScAbstract>) {
                // Invert the deterministic fresh-label rule where possible.
                if (k.label == "theta(pi_sc[-1])")
                    return LiftToG2::of(g2_pi_sc(PiScLabel::MinusOne));
                if (k.label.size() > 7 && k.label.rfind("theta(", 0) == 0 &&
                    k.label.back() == ')')
                    return LiftToG2::of(g2_sc_abstract(
                        k.label.substr(6, k.label.size() - 7), k.generic));
                return LiftToG2::unknown("supercuspidal outside the recorded image");
            } else {  // P6Unresolved
                return LiftToG2::unknown("unresolved constituent");
            }
        },
        sigma.kind);
}

// ---------------------------------------------------------------------------
// Dichotomy and discrete-series trichotomy
// ---------------------------------------------------------------------------

inline DichotomySide dichotomy(const G2Rep& pi, PContext p = PContext::Other) {
    const bool d_side = lifts_from_D(pi);
    LiftToP6 lift = theta_G2_to_P6(pi, p);
    if (d_side) {
        if (lift.value == LiftValue::Rep)
            throw DichotomyError("dichotomy violated: nonzero lifts to both PD^x and PGSp6 for " +
                                 to_string(pi));
        return DichotomySide::PDSide;
    }
    if (lift.value == LiftValue::Rep) return DichotomySide::PGSp6Side;
    if (lift.value == LiftValue::Unknown) return DichotomySide::Unknown;
    throw DichotomyError("dichotomy violated: no nonzero lift for " + to_string(pi));
}

inline DsTarget discrete_series_target(const G2Rep& pi, PContext p = PContext::Other) {
    if (!is_discrete_series(pi))
        throw RepError("discrete_series_target requires a discrete series representation");
    if (lifts_from_D(pi)) return DsTarget::PDx;
    // Discrete series obtained from PGL3 x| Z/2 with discrete-series datum:
    // their Siegel-type PGSp6 lifts are tempered but not square integrable,
    // so the discrete-series lift lives on the PGL3 side.
    bool from_b_ds = std::holds_alternative<G2ScFromB>(pi.kind);
    if (const auto* g = std::get_if<G2PiGen>(&pi.kind))
        from_b_ds = std::holds_alternative<PiGenOne>(g->param) ||
                    std::holds_alternative<PiGenCubic>(g->param);
    if (const auto* sc = std::get_if<G2PiSc>(&pi.kind))
        from_b_ds = sc->label == PiScLabel::One;
    if (from_b_ds) return DsTarget::PGL3;
    LiftToP6 lift = theta_G2_to_P6(pi, p);
    if (lift.value != LiftValue::Rep || !is_discrete_series(*lift.rep))
        throw DichotomyError("trichotomy violated: no discrete-series lift for " + to_string(pi));
    return DsTarget::PGSp6;
}

}  // namespace g2theta

#endif
