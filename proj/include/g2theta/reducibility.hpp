#ifndef G2THETA_REDUCIBILITY_HPP
#define G2THETA_REDUCIBILITY_HPP

// Composition structure of the parabolically induced representations of G2
// and PGSp6: decision engines for I_P, I_Q, Ind_B (G2) and I_2, I_13, I_3,
// I_1 (PGSp6).  Each engine is table-driven; s < 0 is handled by duality.

#include "reps.hpp"

#include <variant>
#include <vector>

namespace g2theta {

// A constituent the classification does not name.
struct UnresolvedRep {
    std::string note;
    friend bool operator==(const UnresolvedRep&, const UnresolvedRep&) = default;
};

using AnyRep = std::variant<G2Rep, PGSp6Rep, UnresolvedRep>;

inline bool is_generic(const AnyRep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UnresolvedRep>) return false;
            else return is_generic(k);
        },
        r);
}

inline std::string to_string(const AnyRep& r) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, UnresolvedRep>) return "unresolved(" + k.note + ")";
            else return to_string(k);
        },
        r);
}

enum class Position { Sub, Quotient, Subquotient, DirectSummand };

inline const char* to_string(Position p) {
    switch (p) {
        case Position::Sub: return "sub";
        case Position::Quotient: return "quotient";
        case Position::Subquotient: return "subquotient";
        case Position::DirectSummand: return "direct_summand";
    }
    std::abort();
}

struct Constituent {
    AnyRep rep;
    Position position;
    friend bool operator==(const Constituent&, const Constituent&) = default;
};

struct RepStructure {
    bool irreducible = true;
    std::vector<Constituent> constituents;
    int length = 1;
    bool length_exact = true;  // false: `length` is only a lower bound
    friend bool operator==(const RepStructure&, const RepStructure&) = default;
};

namespace detail {

inline RepStructure irred(AnyRep whole, Position pos) {
    return {true, {{std::move(whole), pos}}, 1, true};
}

inline RepStructure chain(std::vector<Constituent> cs) {
    int n = static_cast<int>(cs.size());
    return {false, std::move(cs), n, true};
}

inline RepStructure summands(AnyRep gen, AnyRep deg) {
    return {false,
            {{std::move(gen), Position::DirectSummand}, {std::move(deg), Position::DirectSummand}},
            2, true};
}

inline RepStructure dual_structure(RepStructure s) {
    for (auto& c : s.constituents) {
        if (c.position == Position::Sub) c.position = Position::Quotient;
        else if (c.position == Position::Quotient) c.position = Position::Sub;
    }
    return s;
}

// classification of the GL2 datum relevant to the G2/PGSp6 case tables
enum class GL2Datum { ScSelfDualTriv, ScSelfDualQuadS3, ScSelfDualQuadNotS3, ScOther,
                      StTriv, StQuad, StCubic, StOther, OneTriv, OneQuad, OneCubic, OneOther };

inline GL2Datum classify_gl2(const GL2Rep& tau, const char* who, bool need_s3_flag) {
    if (!is_unitary(tau)) throw RepError(std::string(who) + ": inducing datum must be unitary");
    if (const auto* sc = std::get_if<GL2Sc>(&tau.kind)) {
        if (!sc->self_dual) return GL2Datum::ScOther;
        if (sc->central.is_trivial()) return GL2Datum::ScSelfDualTriv;
        // self-dual with omega != 1: dihedral; the case tables need Im(phi)
        if (need_s3_flag && !sc->dihedral_S3)
            throw RepError(std::string(who) +
                           ": self-dual supercuspidal with omega != 1 needs the Im(phi) = S3 flag");
        return (sc->dihedral_S3 && *sc->dihedral_S3) ? GL2Datum::ScSelfDualQuadS3
                                                     : GL2Datum::ScSelfDualQuadNotS3;
    }
    if (const auto* st = std::get_if<GL2St>(&tau.kind)) {
        if (st->chi.is_trivial()) return GL2Datum::StTriv;
        if (st->chi.is_quadratic_nontrivial()) return GL2Datum::StQuad;
        if (st->chi.is_cubic_nontrivial()) return GL2Datum::StCubic;
        return GL2Datum::StOther;
    }
    if (const auto* one = std::get_if<GL2One>(&tau.kind)) {
        if (one->chi.is_trivial()) return GL2Datum::OneTriv;
        if (one->chi.is_quadratic_nontrivial()) return GL2Datum::OneQuad;
        if (one->chi.is_cubic_nontrivial()) return GL2Datum::OneCubic;
        return GL2Datum::OneOther;
    }
    throw RepError(std::string(who) +
                   ": principal-series inducing data factor through the Borel engine");
}

inline RepStructure irreducible_family(const Rat& s, const GL2Rep& tau,
                                       PGSp6Rep (*j_p6)(Rat, GL2Rep),
                                       G2Rep (*j_g2)(Rat, GL2Rep),
                                       PGSp6Rep (*sum_p6)(GL2Rep, bool),
                                       G2Rep (*sum_g2)(GL2Rep, bool)) {
    bool one_dim = std::holds_alternative<GL2One>(tau.kind);
    if (s > Rat(0)) {
        if (one_dim)
            return irred(UnresolvedRep{"irreducible induction from a one-dimensional datum"},
                         Position::Quotient);
        return j_p6 ? irred(j_p6(s, tau), Position::Quotient)
                    : irred(j_g2(s, tau), Position::Quotient);
    }
    // s = 0: irreducible unitary induction
    if (one_dim)
        return irred(UnresolvedRep{"irreducible induction from a one-dimensional datum"},
                     Position::DirectSummand);
    return sum_p6 ? irred(sum_p6(tau, true), Position::DirectSummand)
                  : irred(sum_g2(tau, true), Position::DirectSummand);
}

}  // namespace detail

using detail::GL2Datum;

// ---------------------------------------------------------------------------
// G2: I_P(s, tau), Siegel-type parabolic P (Levi GL2, long-root Borel datum)

inline RepStructure decompose_IP(const Rat& s, const GL2Rep& tau);
inline RepStructure decompose_IQ(const Rat& s, const GL2Rep& tau);

inline RepStructure decompose_IP(const Rat& s, const GL2Rep& tau) {
    using detail::chain;
    using detail::irred;
    auto d = detail::classify_gl2(tau, "I_P", false);
    if (s < Rat(0)) return detail::dual_structure(decompose_IP(-s, contragredient(tau)));
    auto reg = gl2_central_char(tau).registry();
    auto triv = ExponentChar::trivial(reg);

    switch (d) {
        case GL2Datum::ScSelfDualTriv:
            if (s == Rat(1, 2))
                return chain({{g2_delta_p(tau), Position::Sub},
                              {g2_jp(Rat(1, 2), tau), Position::Quotient}});
            break;
        case GL2Datum::ScSelfDualQuadS3:
        case GL2Datum::ScSelfDualQuadNotS3:
            if (s == Rat(0))
                return detail::summands(g2_ip_summand(tau, true), g2_ip_summand(tau, false));
            break;
        case GL2Datum::ScOther:
            break;
        case GL2Datum::StTriv:
            if (s == Rat(3, 2))
                return chain({{g2_st(), Position::Sub},
                              {g2_jp(Rat(3, 2), tau), Position::Quotient}});
            if (s == Rat(1, 2))
                return chain({{g2_pi_gen_1(), Position::Sub},
                              {g2_jp(Rat(1, 2), tau), Position::Quotient},
                              {g2_jq(Rat(1, 2), tau), Position::Subquotient}});
            break;
        case GL2Datum::StQuad: {
            const auto& chi = std::get<GL2St>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_pi_gen_quad(chi), Position::Sub},
                              {g2_jp(Rat(1, 2), tau), Position::Quotient}});
            break;
        }
        case GL2Datum::StCubic: {
            const auto& chi = std::get<GL2St>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_pi_gen_cubic(chi), Position::Sub},
                              {g2_jp(Rat(1, 2), tau), Position::Quotient}});
            break;
        }
        case GL2Datum::StOther:
            break;
        case GL2Datum::OneTriv:
            if (s == Rat(3, 2))
                return chain({{g2_jq(Rat(5, 2), gl2_st(triv)), Position::Sub},
                              {g2_trivial(), Position::Quotient}});
            if (s == Rat(1, 2))
                return chain({{g2_pi_deg_1(), Position::Sub},
                              {g2_jq(Rat(1), gl2_ps(triv, triv)), Position::Quotient},
                              {g2_jq(Rat(1, 2), gl2_st(triv)), Position::Subquotient}});
            break;
        case GL2Datum::OneQuad: {
            const auto& chi = std::get<GL2One>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_jq(Rat(1, 2), gl2_st(chi)), Position::Sub},
                              {g2_jq(Rat(1, 2), gl2_ps(triv, chi)), Position::Quotient}});
            break;
        }
        case GL2Datum::OneCubic: {
            const auto& chi = std::get<GL2One>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_jp(Rat(1, 2), gl2_st(char_inv(chi))), Position::Sub},
                              {g2_jq(Rat(1, 2), gl2_ps(chi, char_inv(chi))), Position::Quotient}});
            break;
        }
        case GL2Datum::OneOther:
            break;
    }
    return detail::irreducible_family(s, tau, nullptr, &g2_jp, nullptr, &g2_ip_summand);
}

// G2: I_Q(s, tau), non-Siegel parabolic Q (Levi GL2, short-root Borel datum)
inline RepStructure decompose_IQ(const Rat& s, const GL2Rep& tau) {
    using detail::chain;
    auto d = detail::classify_gl2(tau, "I_Q", true);
    if (s < Rat(0)) return detail::dual_structure(decompose_IQ(-s, contragredient(tau)));
    auto reg = gl2_central_char(tau).registry();
    auto triv = ExponentChar::trivial(reg);

    switch (d) {
        case GL2Datum::ScSelfDualTriv:
            if (s == Rat(1, 2))
                return chain({{g2_delta_q(tau), Position::Sub},
                              {g2_jq(Rat(1, 2), tau), Position::Quotient}});
            break;
        case GL2Datum::ScSelfDualQuadS3:
            if (s == Rat(1))
                return chain({{g2_pi_gen_dihedral(tau), Position::Sub},
                              {g2_jq(Rat(1), tau), Position::Quotient}});
            break;
        case GL2Datum::ScSelfDualQuadNotS3:
            if (s == Rat(0))
                return detail::summands(g2_iq_summand(tau, true), g2_iq_summand(tau, false));
            break;
        case GL2Datum::ScOther:
            break;
        case GL2Datum::StTriv:
            if (s == Rat(5, 2))
                return chain({{g2_st(), Position::Sub},
                              {g2_jq(Rat(5, 2), tau), Position::Quotient}});
            if (s == Rat(1, 2))
                return chain({{g2_pi_gen_1(), Position::Sub},
                              {g2_pi_deg_1(), Position::Sub},
                              {g2_jq(Rat(1, 2), tau), Position::Quotient}});
            break;
        case GL2Datum::StQuad: {
            const auto& chi = std::get<GL2St>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_pi_gen_quad(chi), Position::Sub},
                              {g2_jq(Rat(1, 2), tau), Position::Quotient}});
            break;
        }
        case GL2Datum::StCubic:
        case GL2Datum::StOther:
            break;
        case GL2Datum::OneTriv:
            if (s == Rat(5, 2))
                return chain({{g2_jp(Rat(3, 2), gl2_st(triv)), Position::Sub},
                              {g2_trivial(), Position::Quotient}});
            if (s == Rat(1, 2))
                return chain({{g2_jq(Rat(1, 2), gl2_st(triv)), Position::Sub},
                              {g2_jq(Rat(1), gl2_ps(triv, triv)), Position::Quotient},
                              {g2_jp(Rat(1, 2), gl2_st(triv)), Position::Subquotient}});
            break;
        case GL2Datum::OneQuad: {
            const auto& chi = std::get<GL2One>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{g2_jp(Rat(1, 2), gl2_st(chi)), Position::Sub},
                              {g2_jq(Rat(1, 2), gl2_ps(triv, chi)), Position::Quotient}});
            break;
        }
        case GL2Datum::OneCubic:
        case GL2Datum::OneOther:
            break;
    }
    return detail::irreducible_family(s, tau, nullptr, &g2_jq, nullptr, &g2_iq_summand);
}

// ---------------------------------------------------------------------------
// G2: full principal series Ind_B(chi)

namespace detail {
// chi_i = |.|^{+-1}, or chi_i/chi_j = |.|^{+-1} for some i != j
inline bool borel_condition_a(const std::array<ExponentChar, 3>& t) {
    auto reg = t[0].registry();
    auto is_norm = [&](const ExponentChar& c) {
        return c == ExponentChar::norm_power(reg, Rat(1)) ||
               c == ExponentChar::norm_power(reg, Rat(-1));
    };
    for (int i = 0; i < 3; ++i) {
        if (is_norm(t[i])) return true;
        for (int j = 0; j < 3; ++j)
            if (i != j && is_norm(char_mul(t[i], char_inv(t[j])))) return true;
    }
    return false;
}

inline bool borel_condition_b(const std::array<ExponentChar, 3>& t) {
    return t[0].is_quadratic_nontrivial() && t[1].is_quadratic_nontrivial() &&
           t[2].is_quadratic_nontrivial() && !(t[0] == t[1]) && !(t[1] == t[2]) &&
           !(t[0] == t[2]);
}
}  // namespace detail

inline RepStructure decompose_IB_G2(const TorusCharG2& chi) {
    auto triple = borel_char_triple(chi);
    if (detail::borel_condition_b(triple))
        return detail::summands(g2_ib_summand(chi, true), g2_ib_summand(chi, false));
    if (detail::borel_condition_a(triple)) {
        // reducible; the constituents are not classified at this level of
        // generality (the named cases run through I_P and I_Q)
        RepStructure out;
        out.irreducible = false;
        out.constituents = {{UnresolvedRep{"principal-series constituent"}, Position::Subquotient},
                            {UnresolvedRep{"principal-series constituent"}, Position::Subquotient}};
        out.length = 2;
        out.length_exact = false;
        return out;
    }
    // irreducible
    if (chi.c1.is_unitary() && chi.c2.is_unitary())
        return detail::irred(g2_ib_summand(chi, true), Position::DirectSummand);
    // equal to its Langlands quotient at the dominant Weyl conjugate
    std::optional<TorusCharG2> best;
    for (const auto& w : g2_weyl_elements()) {
        TorusCharG2 img = weyl_apply(w, chi);
        Rat e1 = img.c1.exponent(), e2 = img.c2.exponent();
        if (e1 >= e2 && e2 >= Rat(0) && !(best && *best < img) ) {
            if (!best || img < *best) best = img;
        }
    }
    if (!best) throw RepError("no dominant Weyl conjugate found");  // unreachable
    return detail::irred(g2_jb(*best), Position::Quotient);
}

// ---------------------------------------------------------------------------
// PGSp6: I_2(s, tau (x) tau)

inline RepStructure decompose_I2(const Rat& s, const GL2Rep& tau) {
    using detail::chain;
    auto d = detail::classify_gl2(tau, "I_2", true);
    if (s < Rat(0)) return detail::dual_structure(decompose_I2(-s, contragredient(tau)));
    auto reg = gl2_central_char(tau).registry();
    auto triv = ExponentChar::trivial(reg);

    switch (d) {
        case GL2Datum::ScSelfDualTriv:
            if (s == Rat(1, 2))
                return chain({{p6_delta2(tau), Position::Sub},
                              {p6_j2(Rat(1, 2), tau), Position::Quotient}});
            break;
        case GL2Datum::ScSelfDualQuadS3:
            if (s == Rat(1))
                return chain({{p6_sigma_gen_tau(tau), Position::Sub},
                              {p6_j2(Rat(1), tau), Position::Quotient}});
            break;
        case GL2Datum::ScSelfDualQuadNotS3:
            if (s == Rat(0))
                return detail::summands(p6_i2_summand(tau, true), p6_i2_summand(tau, false));
            break;
        case GL2Datum::ScOther:
            break;
        case GL2Datum::StTriv:
            if (s == Rat(5, 2))
                return chain({{p6_st(), Position::Sub},
                              {p6_j2(Rat(5, 2), tau), Position::Quotient}});
            if (s == Rat(1, 2))
                return chain({{p6_i3_summand(gl3_st(triv), true), Position::Sub},
                              {p6_j2(Rat(1, 2), tau), Position::Quotient}});
            break;
        case GL2Datum::StQuad: {
            const auto& chi = std::get<GL2St>(tau.kind).chi;
            if (s == Rat(1, 2))
                return chain({{p6_sigma_gen_chi(chi), Position::Sub},
                              {p6_j2(Rat(1, 2), tau), Position::Quotient}});
            break;
        }
        case GL2Datum::StCubic:
        case GL2Datum::StOther:
            break;
        default:
            throw RepError("I_2: the case tables cover supercuspidal and twisted Steinberg data");
    }
    return detail::irreducible_family(s, tau, &p6_j2, nullptr, &p6_i2_summand, nullptr);
}

// PGSp6: I_13(s, tau (x) 1)
inline RepStructure decompose_I13(const Rat& s, const GL2Rep& tau) {
    auto d = detail::classify_gl2(tau, "I_13", true);
    if (s < Rat(0)) return detail::dual_structure(decompose_I13(-s, contragredient(tau)));

    switch (d) {
        case GL2Datum::ScSelfDualTriv:
            if (s == Rat(1, 2)) {
                // length 4, unique irreducible submodule delta_13(tau); a standard
                // module, so its unique irreducible quotient is J_13(1/2, tau); the
                // other two subquotients are not identified by the classification
                RepStructure out;
                out.irreducible = false;
                out.constituents = {
                    {p6_delta13(tau), Position::Sub},
                    {p6_j13(Rat(1, 2), tau), Position::Quotient},
                    {UnresolvedRep{"subquotient of the length-4 induced module"},
                     Position::Subquotient},
                    {UnresolvedRep{"subquotient of the length-4 induced module"},
                     Position::Subquotient}};
                out.length = 4;
                return out;
            }
            break;
        case GL2Datum::ScSelfDualQuadNotS3:
            if (s == Rat(0))
                return detail::summands(p6_i13_summand(tau, true), p6_i13_summand(tau, false));
            break;
        case GL2Datum::ScSelfDualQuadS3:
        case GL2Datum::ScOther:
            break;
        default:
            throw RepError("I_13: the case table covers supercuspidal data only");
    }
    return detail::irreducible_family(s, tau, &p6_j13, nullptr, &p6_i13_summand, nullptr);
}

// PGSp6: I_3(tau), Levi GL3 (no continuous parameter: det-twists are trivial
// on the image of GL3 in the Levi, so the structure depends on tau alone)
inline RepStructure decompose_I3(const GL3Rep& tau) {
    if (std::holds_alternative<GL3FromGL2>(tau.kind) || std::holds_alternative<GL3Jb>(tau.kind))
        throw RepError("I_3: the case tables cover discrete series and principal-series data");
    if (std::holds_alternative<GL3Sc>(tau.kind) || std::holds_alternative<GL3St>(tau.kind)) {
        if (!is_discrete_series(tau))
            throw RepError("I_3: discrete-series datum must be unitary (carry the twist in tau only if zero)");
        if (is_self_dual(tau))
            return detail::summands(p6_i3_summand(tau, true), p6_i3_summand(tau, false));
        return detail::irred(p6_i3_irred(tau), Position::DirectSummand);  // I_3(tau) ~ I_3(tau^vee)
    }
    const auto& ps = std::get<GL3Ps>(tau.kind);
    std::array<ExponentChar, 3> t{ps.chi1, ps.chi2, ps.chi3};
    if (detail::borel_condition_b(t))
        return detail::summands(p6_i3_summand(tau, true), p6_i3_summand(tau, false));
    if (detail::borel_condition_a(t)) {
        RepStructure out;
        out.irreducible = false;
        out.constituents = {{UnresolvedRep{"principal-series constituent"}, Position::Subquotient},
                            {UnresolvedRep{"principal-series constituent"}, Position::Subquotient}};
        out.length = 2;
        out.length_exact = false;
        return out;
    }
    bool unitary = t[0].is_unitary() && t[1].is_unitary() && t[2].is_unitary();
    if (is_self_dual(tau)) {
        // irreducible with tau ~ tau^vee: keep tau itself as the label
        return detail::irred(PGSp6Rep{P6I3Irred{tau}},
                             unitary ? Position::DirectSummand : Position::Quotient);
    }
    return detail::irred(p6_i3_irred(tau),
                         unitary ? Position::DirectSummand : Position::Quotient);
}

// PGSp6: I_1(s, tau), Levi GSp4, supercuspidal tau with trivial central
// character whose parameter satisfies std o phi > 1
inline RepStructure decompose_I1(const Rat& s, const GSp4Sc& tau) {
    if (!tau.std_contains_trivial)
        throw RepError("I_1: std o phi_tau must contain the trivial representation");
    if (s < Rat(0)) return detail::dual_structure(decompose_I1(-s, tau));  // tau self-dual
    if (s == Rat(1, 2))
        return detail::chain({{p6_delta1(tau), Position::Sub},
                              {p6_j1(Rat(1, 2), tau), Position::Quotient}});
    if (s > Rat(0)) return detail::irred(p6_j1(s, tau), Position::Quotient);
    return detail::irred(UnresolvedRep{"irreducible unitary induction from GSp4"},
                         Position::DirectSummand);
}

}  // namespace g2theta

#endif
