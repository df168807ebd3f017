#ifndef G2THETA_REPS_HPP
#define G2THETA_REPS_HPP

// Typed constructors and predicates for the irreducible representations of
// GL2, GL3, PGL3 x| Z/2, PD^x, GSp4-supercuspidal descriptors, G2 and PGSp6
// appearing in the correspondence tables.  Genericity / temperedness /
// square-integrability are derived from the constructor shape, never stored.

#include "chars.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace g2theta {

struct RepError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// GL2

struct GL2Sc {
    std::string label;
    bool self_dual = false;
    ExponentChar central;                 // finite order
    std::optional<bool> dihedral_S3;      // Im(phi) = S3; explicit input
    friend bool operator==(const GL2Sc&, const GL2Sc&) = default;
};
struct GL2St {  // st_chi
    ExponentChar chi;
    friend bool operator==(const GL2St&, const GL2St&) = default;
};
struct GL2Ps {  // pi(chi1, chi2), irreducible
    ExponentChar chi1, chi2;
    friend bool operator==(const GL2Ps&, const GL2Ps&) = default;
};
struct GL2One {  // chi o det
    ExponentChar chi;
    friend bool operator==(const GL2One&, const GL2One&) = default;
};

struct GL2Rep {
    std::variant<GL2Sc, GL2St, GL2Ps, GL2One> kind;
    Rat twist{0};  // tensor |det|^twist
    friend bool operator==(const GL2Rep&, const GL2Rep&) = default;
};

inline GL2Rep gl2_sc(std::string label, bool self_dual, ExponentChar central,
                     std::optional<bool> dihedral_S3 = std::nullopt, Rat twist = Rat(0)) {
    if (central.order() == 0) throw RepError("supercuspidal central character must have finite order");
    if (self_dual && central.order() > 2)
        throw RepError("self-dual supercuspidal needs omega^2 = 1");
    if (dihedral_S3 && *dihedral_S3) {
        if (!self_dual || !central.is_quadratic_nontrivial())
            throw RepError("Im(phi) = S3 requires a self-dual dihedral with nontrivial quadratic central character");
    }
    return {GL2Sc{std::move(label), self_dual, std::move(central), dihedral_S3}, twist};
}

inline GL2Rep gl2_st(ExponentChar chi, Rat twist = Rat(0)) {
    return {GL2St{std::move(chi)}, twist};
}

inline GL2Rep gl2_ps(ExponentChar chi1, ExponentChar chi2, Rat twist = Rat(0)) {
    ExponentChar ratio = char_mul(chi1, char_inv(chi2));
    auto reg = chi1.registry();
    if (ratio == ExponentChar::norm_power(reg, Rat(1)) ||
        ratio == ExponentChar::norm_power(reg, Rat(-1)))
        throw RepError("pi(chi1, chi2) with chi1/chi2 = |.|^{+-1} is not irreducible");
    // unordered pair: canonical order
    if (chi2 < chi1) std::swap(chi1, chi2);
    return {GL2Ps{std::move(chi1), std::move(chi2)}, twist};
}

inline GL2Rep gl2_one(ExponentChar chi, Rat twist = Rat(0)) {
    return {GL2One{std::move(chi)}, twist};
}

inline ExponentChar gl2_central_char(const GL2Rep& r) {
    ExponentChar base = std::visit(
        [](const auto& k) -> ExponentChar {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL2Sc>) return k.central;
            if constexpr (std::is_same_v<T, GL2St>) return char_pow(k.chi, 2);
            if constexpr (std::is_same_v<T, GL2Ps>) return char_mul(k.chi1, k.chi2);
            if constexpr (std::is_same_v<T, GL2One>) return char_pow(k.chi, 2);
        },
        r.kind);
    auto reg = base.registry();
    return char_mul(base, ExponentChar::norm_power(reg, Rat(2) * r.twist));
}

inline GL2Rep contragredient(const GL2Rep& r);

namespace detail {
inline std::string dual_label(const std::string& label) {
    if (label.size() > 2 && label.substr(label.size() - 2) == "^v")
        return label.substr(0, label.size() - 2);
    return label + "^v";
}
}  // namespace detail

inline GL2Rep contragredient(const GL2Rep& r) {
    GL2Rep out = r;
    out.twist = -r.twist;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL2Sc>) {
                GL2Sc d = k;
                if (!k.self_dual) d.label = detail::dual_label(k.label);
                d.central = char_inv(k.central);
                out.kind = d;
            } else if constexpr (std::is_same_v<T, GL2St>) {
                out.kind = GL2St{char_inv(k.chi)};
            } else if constexpr (std::is_same_v<T, GL2Ps>) {
                ExponentChar a = char_inv(k.chi1), b = char_inv(k.chi2);
                if (b < a) std::swap(a, b);
                out.kind = GL2Ps{a, b};
            } else if constexpr (std::is_same_v<T, GL2One>) {
                out.kind = GL2One{char_inv(k.chi)};
            }
        },
        r.kind);
    return out;
}

inline bool is_self_dual(const GL2Rep& r) { return contragredient(r) == r; }

inline bool is_unitary(const GL2Rep& r) {
    if (r.twist != Rat(0)) return false;
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL2Sc>) return k.central.is_unitary();
            if constexpr (std::is_same_v<T, GL2St>) return k.chi.is_unitary();
            if constexpr (std::is_same_v<T, GL2Ps>)
                // unitary principal series (complementary series are not used here)
                return k.chi1.is_unitary() && k.chi2.is_unitary();
            if constexpr (std::is_same_v<T, GL2One>) return k.chi.is_unitary();
        },
        r.kind);
}

inline bool is_discrete_series(const GL2Rep& r) {
    if (r.twist != Rat(0)) return false;
    return std::holds_alternative<GL2Sc>(r.kind) ||
           (std::holds_alternative<GL2St>(r.kind) && std::get<GL2St>(r.kind).chi.is_unitary());
}

inline bool is_tempered(const GL2Rep& r) {
    if (is_discrete_series(r)) return true;
    if (r.twist != Rat(0)) return false;
    if (const auto* ps = std::get_if<GL2Ps>(&r.kind))
        return ps->chi1.is_unitary() && ps->chi2.is_unitary();
    return false;
}

inline bool is_generic(const GL2Rep& r) { return !std::holds_alternative<GL2One>(r.kind); }

// Im(phi_tau) = S3 predicate (explicit input on the supercuspidal datum).
inline bool gl2_dihedral_s3(const GL2Rep& r) {
    const auto* sc = std::get_if<GL2Sc>(&r.kind);
    return sc && sc->dihedral_S3 && *sc->dihedral_S3;
}

// ---------------------------------------------------------------------------
// GL3 (with trivial central character throughout: representations of PGL3)

struct GL3Sc {
    std::string label;
    bool self_dual = false;
    friend bool operator==(const GL3Sc&, const GL3Sc&) = default;
};
struct GL3St {  // twisted Steinberg st3_chi, chi^3 = 1
    ExponentChar chi;
    friend bool operator==(const GL3St&, const GL3St&) = default;
};
struct GL3FromGL2 {  // isobaric sum sigma |+| omega_sigma for a GL2 discrete series sigma
    GL2Rep sigma;
    friend bool operator==(const GL3FromGL2&, const GL3FromGL2&) = default;
};
struct GL3Ps {  // tau(chi1, chi2, chi3), chi1 chi2 chi3 = 1
    ExponentChar chi1, chi2, chi3;
    friend bool operator==(const GL3Ps&, const GL3Ps&) = default;
};
struct GL3Jb {  // Langlands quotient J_B(mu1 (x) mu2 (x) mu3)
    ExponentChar mu1, mu2, mu3;
    friend bool operator==(const GL3Jb&, const GL3Jb&) = default;
};

struct GL3Rep {
    std::variant<GL3Sc, GL3St, GL3FromGL2, GL3Ps, GL3Jb> kind;
    Rat twist{0};
    friend bool operator==(const GL3Rep&, const GL3Rep&) = default;
};

inline GL3Rep gl3_sc(std::string label, bool self_dual, Rat twist = Rat(0)) {
    return {GL3Sc{std::move(label), self_dual}, twist};
}

inline GL3Rep gl3_st(ExponentChar chi, Rat twist = Rat(0)) {
    if (!chi.is_trivial() && !chi.is_cubic_nontrivial())
        throw RepError("st3_chi on PGL3 needs chi^3 = 1");
    return {GL3St{std::move(chi)}, twist};
}

inline GL3Rep gl3_from_gl2(GL2Rep sigma, Rat twist = Rat(0)) {
    if (!is_discrete_series(sigma))
        throw RepError("the GL2 datum of an isobaric sum must be a discrete series");
    ExponentChar omega = gl2_central_char(sigma);
    if (omega.order() > 2) throw RepError("sigma |+| omega_sigma needs omega^2 = 1 on PGL3");
    return {GL3FromGL2{std::move(sigma)}, twist};
}

inline GL3Rep gl3_ps(std::array<ExponentChar, 3> chi, Rat twist = Rat(0)) {
    if (!char_mul(char_mul(chi[0], chi[1]), chi[2]).is_trivial())
        throw RepError("tau(chi1, chi2, chi3) needs chi1 chi2 chi3 = 1");
    std::sort(chi.begin(), chi.end(), [](const auto& x, const auto& y) { return x < y; });
    return {GL3Ps{chi[0], chi[1], chi[2]}, twist};
}

inline GL3Rep gl3_jb(std::array<ExponentChar, 3> mu, Rat twist = Rat(0)) {
    if (!char_mul(char_mul(mu[0], mu[1]), mu[2]).is_trivial())
        throw RepError("J_B(mu) on PGL3 needs mu1 mu2 mu3 = 1");
    return {GL3Jb{mu[0], mu[1], mu[2]}, twist};
}

// The degenerate shape J_B(chi|.|^{1/2} (x) 1 (x) chi|.|^{-1/2}) with chi^2=1.
inline GL3Rep gl3_jb_degenerate(const ExponentChar& chi) {
    if (chi.order() != 1 && chi.order() != 2)
        throw RepError("degenerate J_B shape needs chi^2 = 1");
    auto reg = chi.registry();
    return gl3_jb({char_mul(chi, ExponentChar::norm_power(reg, Rat(1, 2))),
                   ExponentChar::trivial(reg),
                   char_mul(chi, ExponentChar::norm_power(reg, Rat(-1, 2)))});
}

inline bool gl3_is_degenerate_jb(const GL3Rep& r) {
    const auto* jb = std::get_if<GL3Jb>(&r.kind);
    if (!jb || r.twist != Rat(0)) return false;
    ExponentChar chi = char_mul(jb->mu1, ExponentChar::norm_power(jb->mu1.registry(), Rat(-1, 2)));
    if (chi.order() != 1 && chi.order() != 2) return false;
    return *jb == std::get<GL3Jb>(gl3_jb_degenerate(chi).kind);
}

inline GL3Rep contragredient(const GL3Rep& r) {
    GL3Rep out = r;
    out.twist = -r.twist;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL3Sc>) {
                GL3Sc d = k;
                if (!k.self_dual) d.label = detail::dual_label(k.label);
                out.kind = d;
            } else if constexpr (std::is_same_v<T, GL3St>) {
                out.kind = GL3St{char_inv(k.chi)};
            } else if constexpr (std::is_same_v<T, GL3FromGL2>) {
                out.kind = GL3FromGL2{contragredient(k.sigma)};
            } else if constexpr (std::is_same_v<T, GL3Ps>) {
                std::array<ExponentChar, 3> c{char_inv(k.chi1), char_inv(k.chi2), char_inv(k.chi3)};
                std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x < y; });
                out.kind = GL3Ps{c[0], c[1], c[2]};
            } else if constexpr (std::is_same_v<T, GL3Jb>) {
                out.kind = GL3Jb{char_inv(k.mu3), char_inv(k.mu2), char_inv(k.mu1)};
            }
        },
        r.kind);
    return out;
}

inline bool is_self_dual(const GL3Rep& r) { return contragredient(r) == r; }

inline bool is_discrete_series(const GL3Rep& r) {
    if (r.twist != Rat(0)) return false;
    return std::holds_alternative<GL3Sc>(r.kind) ||
           (std::holds_alternative<GL3St>(r.kind) && std::get<GL3St>(r.kind).chi.is_unitary());
}

inline bool is_tempered(const GL3Rep& r) {
    if (is_discrete_series(r)) return true;
    if (r.twist != Rat(0)) return false;
    if (const auto* f = std::get_if<GL3FromGL2>(&r.kind)) return is_tempered(f->sigma);
    if (const auto* ps = std::get_if<GL3Ps>(&r.kind))
        return ps->chi1.is_unitary() && ps->chi2.is_unitary() && ps->chi3.is_unitary();
    return false;
}

inline bool is_generic(const GL3Rep& r) { return !std::holds_alternative<GL3Jb>(r.kind); }

// L-parameter of tau contains the trivial representation of WD_F.
inline bool gl3_param_contains_trivial(const GL3Rep& r) {
    return std::visit(
        [&](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL3Sc>) return false;
            if constexpr (std::is_same_v<T, GL3St>) return false;  // chi (x) Sym^2
            if constexpr (std::is_same_v<T, GL3FromGL2>)
                return gl2_central_char(k.sigma).is_trivial();  // phi_sigma + omega_sigma
            if constexpr (std::is_same_v<T, GL3Ps>)
                return k.chi1.is_trivial() || k.chi2.is_trivial() || k.chi3.is_trivial();
            if constexpr (std::is_same_v<T, GL3Jb>)
                return gl3_is_degenerate_jb({k, Rat(0)});  // chi (x) S_2 + 1
        },
        r.kind);
}

// The three-quadratics principal series: chi_i quadratic, nontrivial,
// pairwise distinct (and chi1 chi2 chi3 = 1 by construction).
inline bool gl3_three_quadratics(const GL3Rep& r) {
    const auto* ps = std::get_if<GL3Ps>(&r.kind);
    if (!ps || r.twist != Rat(0)) return false;
    return ps->chi1.is_quadratic_nontrivial() && ps->chi2.is_quadratic_nontrivial() &&
           ps->chi3.is_quadratic_nontrivial() && !(ps->chi1 == ps->chi2) &&
           !(ps->chi2 == ps->chi3) && !(ps->chi1 == ps->chi3);
}

// ---------------------------------------------------------------------------
// Extensions to PGL3 x| Z/2

enum class Ext { InducedPlus, Plus, Minus };

struct PGL3ExtRep {
    GL3Rep base;
    Ext ext;
    friend bool operator==(const PGL3ExtRep&, const PGL3ExtRep&) = default;
};

std::string to_string(const GL3Rep& r);

inline PGL3ExtRep pgl3_ext(GL3Rep base, Ext ext) {
    bool sd = is_self_dual(base);
    if (ext == Ext::InducedPlus && sd)
        throw RepError("induced extension exists only for tau not self-dual");
    if (ext != Ext::InducedPlus && !sd)
        throw RepError("tau+ / tau- extensions require self-dual tau");
    if (ext == Ext::InducedPlus) {
        // Ind(tau) ~ Ind(tau^vee): store the smaller of the two bases.
        GL3Rep dual = contragredient(base);
        if (to_string(dual) < to_string(base)) base = std::move(dual);
    }
    return {std::move(base), ext};
}

// Extension set of Irr(PGL3 x| Z/2) over a given tau.
inline std::vector<PGL3ExtRep> classify_pgl3_extension(const GL3Rep& tau) {
    if (!is_self_dual(tau)) return {pgl3_ext(tau, Ext::InducedPlus)};
    return {pgl3_ext(tau, Ext::Plus), pgl3_ext(tau, Ext::Minus)};
}

// ---------------------------------------------------------------------------
// PD^x

enum class Heart { Yes, No, Unknown };
enum class PContext { Two, Three, Other };

struct PDTrivial {
    friend bool operator==(const PDTrivial&, const PDTrivial&) = default;
};
struct PDUnramCubic {
    ExponentChar chi;  // the unramified cubic character
    int power;         // 1 or 2
    friend bool operator==(const PDUnramCubic&, const PDUnramCubic&) = default;
};
struct PDOther {
    std::string label;
    Heart heart;
    friend bool operator==(const PDOther&, const PDOther&) = default;
};

struct PDxRep {
    std::variant<PDTrivial, PDUnramCubic, PDOther> kind;
    friend bool operator==(const PDxRep&, const PDxRep&) = default;
};

inline PDxRep pd_trivial() { return {PDTrivial{}}; }

inline PDxRep pd_unram_cubic(ExponentChar chi, int power) {
    if (!chi.is_cubic_nontrivial() || chi.ramified())
        throw RepError("need an unramified cubic character");
    if (power != 1 && power != 2) throw RepError("cubic power must be 1 or 2");
    return {PDUnramCubic{std::move(chi), power}};
}

inline PDxRep pd_other(std::string label, Heart heart, PContext p) {
    if (heart == Heart::Unknown && p != PContext::Three)
        throw RepError("undetermined heart membership only occurs for residue characteristic 3");
    return {PDOther{std::move(label), heart}};
}

// ---------------------------------------------------------------------------
// GSp4 supercuspidal descriptor (trivial central character)

struct GSp4Sc {
    std::string label;
    bool std_contains_trivial = false;  // std o phi_tau contains the trivial rep
    bool saito_kurokawa = false;        // tau = tau_rho, theta lift from SL2-tilde
    friend bool operator==(const GSp4Sc&, const GSp4Sc&) = default;
};

// ---------------------------------------------------------------------------
// G2

struct G2Rep;

struct G2St {
    friend bool operator==(const G2St&, const G2St&) = default;
};
struct G2Triv {
    friend bool operator==(const G2Triv&, const G2Triv&) = default;
};
struct G2JP {
    Rat s;
    GL2Rep tau;
    friend bool operator==(const G2JP&, const G2JP&) = default;
};
struct G2JQ {
    Rat s;
    GL2Rep tau;
    friend bool operator==(const G2JQ&, const G2JQ&) = default;
};
struct G2JB {
    TorusCharG2 chi;  // Langlands data on the torus, dominant with positive exponents
    friend bool operator==(const G2JB&, const G2JB&) = default;
};
struct G2DeltaP {
    GL2Rep tau;
    friend bool operator==(const G2DeltaP&, const G2DeltaP&) = default;
};
struct G2DeltaQ {
    GL2Rep tau;
    friend bool operator==(const G2DeltaQ&, const G2DeltaQ&) = default;
};
struct PiGenOne {
    friend bool operator==(const PiGenOne&, const PiGenOne&) = default;
};
struct PiGenQuad {
    ExponentChar chi;
    friend bool operator==(const PiGenQuad&, const PiGenQuad&) = default;
};
struct PiGenCubic {
    ExponentChar chi;  // canonical: min(chi, chi^{-1})
    friend bool operator==(const PiGenCubic&, const PiGenCubic&) = default;
};
struct PiGenDihedral {
    GL2Rep tau;
    friend bool operator==(const PiGenDihedral&, const PiGenDihedral&) = default;
};
struct G2PiGen {
    std::variant<PiGenOne, PiGenQuad, PiGenCubic, PiGenDihedral> param;
    friend bool operator==(const G2PiGen&, const G2PiGen&) = default;
};
struct G2PiDeg1 {
    friend bool operator==(const G2PiDeg1&, const G2PiDeg1&) = default;
};
enum class PiScLabel { One, MinusOne, Omega, OmegaSq };
struct G2PiSc {
    PiScLabel label;
    friend bool operator==(const G2PiSc&, const G2PiSc&) = default;
};
struct G2IPSummand {
    GL2Rep tau;  // canonical: min(tau, tau^vee) in print order
    bool gen;
    friend bool operator==(const G2IPSummand&, const G2IPSummand&) = default;
};
struct G2IQSummand {
    GL2Rep tau;
    bool gen;
    friend bool operator==(const G2IQSummand&, const G2IQSummand&) = default;
};
struct G2IBSummand {
    TorusCharG2 chi;  // canonical: Weyl-orbit minimum
    bool gen;
    friend bool operator==(const G2IBSummand&, const G2IBSummand&) = default;
};
struct G2ScFromPD {
    PDxRep pd;  // a heart member of Irr(PD^x) beyond the named cases
    friend bool operator==(const G2ScFromPD&, const G2ScFromPD&) = default;
};
struct G2ScFromB {
    PGL3ExtRep ext;  // supercuspidal base
    friend bool operator==(const G2ScFromB&, const G2ScFromB&) = default;
};
struct G2ScAbstract {
    std::string label;
    bool generic;
    std::optional<GL2Rep> lifts_to_SL2tilde;  // the rho of pi_rho
    friend bool operator==(const G2ScAbstract&, const G2ScAbstract&) = default;
};

struct G2Rep {
    std::variant<G2St, G2Triv, G2JP, G2JQ, G2JB, G2DeltaP, G2DeltaQ, G2PiGen, G2PiDeg1, G2PiSc,
                 G2IPSummand, G2IQSummand, G2IBSummand, G2ScFromPD, G2ScFromB, G2ScAbstract>
        kind;
    friend bool operator==(const G2Rep&, const G2Rep&) = default;
};

namespace detail {
inline void require_standard(const Rat& s, const GL2Rep& tau, const char* who) {
    if (s <= Rat(0)) throw RepError(std::string(who) + ": standard module needs s > 0");
    if (!is_unitary(tau) || !is_tempered(tau))
        throw RepError(std::string(who) + ": inducing datum must be unitary tempered");
}
inline GL2Rep dual_min(const GL2Rep& tau);
}  // namespace detail

inline G2Rep g2_st() { return {G2St{}}; }
inline G2Rep g2_trivial() { return {G2Triv{}}; }

inline G2Rep g2_jp(Rat s, GL2Rep tau) {
    detail::require_standard(s, tau, "J_P");
    return {G2JP{s, std::move(tau)}};
}
inline G2Rep g2_jq(Rat s, GL2Rep tau) {
    detail::require_standard(s, tau, "J_Q");
    return {G2JQ{s, std::move(tau)}};
}
inline G2Rep g2_jb(TorusCharG2 chi) {
    Rat e1 = chi.c1.exponent(), e2 = chi.c2.exponent();
    if (!(e1 >= e2 && e2 >= Rat(0)) || (e1 == Rat(0) && e2 == Rat(0)))
        throw RepError("J_B: torus data must be dominant with positive exponent part");
    return {G2JB{std::move(chi)}};
}

inline G2Rep g2_delta_p(GL2Rep tau) {
    const auto* sc = std::get_if<GL2Sc>(&tau.kind);
    if (!sc || tau.twist != Rat(0) || !sc->self_dual || !sc->central.is_trivial())
        throw RepError("delta_P(tau) needs a self-dual unitary supercuspidal with omega = 1");
    return {G2DeltaP{std::move(tau)}};
}
inline G2Rep g2_delta_q(GL2Rep tau) {
    const auto* sc = std::get_if<GL2Sc>(&tau.kind);
    if (!sc || tau.twist != Rat(0) || !sc->self_dual || !sc->central.is_trivial())
        throw RepError("delta_Q(tau) needs a self-dual unitary supercuspidal with omega = 1");
    return {G2DeltaQ{std::move(tau)}};
}

inline G2Rep g2_pi_gen_1() { return {G2PiGen{PiGenOne{}}}; }
inline G2Rep g2_pi_gen_quad(ExponentChar chi) {
    if (!chi.is_quadratic_nontrivial()) throw RepError("pi_gen[chi] (quadratic) needs chi^2 = 1, chi != 1");
    return {G2PiGen{PiGenQuad{std::move(chi)}}};
}
inline G2Rep g2_pi_gen_cubic(ExponentChar chi) {
    if (!chi.is_cubic_nontrivial()) throw RepError("pi_gen[chi] (cubic) needs chi^3 = 1, chi != 1");
    ExponentChar inv = char_inv(chi);
    if (inv < chi) chi = inv;  // pi_gen[chi] == pi_gen[chi^{-1}]
    return {G2PiGen{PiGenCubic{std::move(chi)}}};
}
inline G2Rep g2_pi_gen_dihedral(GL2Rep tau) {
    if (!gl2_dihedral_s3(tau) || tau.twist != Rat(0))
        throw RepError("pi_gen[tau] needs a unitary dihedral supercuspidal with Im(phi) = S3");
    return {G2PiGen{PiGenDihedral{std::move(tau)}}};
}
inline G2Rep g2_pi_deg_1() { return {G2PiDeg1{}}; }
inline G2Rep g2_pi_sc(PiScLabel label) { return {G2PiSc{label}}; }

inline G2Rep g2_ip_summand(GL2Rep tau, bool gen) {
    if (!is_unitary(tau) || !is_tempered(tau))
        throw RepError("I_P(tau) summand needs unitary tempered tau");
    return {G2IPSummand{detail::dual_min(tau), gen}};
}
inline G2Rep g2_iq_summand(GL2Rep tau, bool gen) {
    if (!is_unitary(tau) || !is_tempered(tau))
        throw RepError("I_Q(tau) summand needs unitary tempered tau");
    return {G2IQSummand{detail::dual_min(tau), gen}};
}
inline G2Rep g2_ib_summand(TorusCharG2 chi, bool gen) {
    if (!chi.c1.is_unitary() || !chi.c2.is_unitary())
        throw RepError("Ind_B(chi) summand needs unitary chi");
    // canonical Weyl-orbit representative
    TorusCharG2 best = chi;
    for (const auto& w : g2_weyl_elements()) {
        TorusCharG2 img = weyl_apply(w, chi);
        if (img < best) best = img;
    }
    return {G2IBSummand{best, gen}};
}

inline G2Rep g2_sc_from_pd(PDxRep pd) {
    const auto* other = std::get_if<PDOther>(&pd.kind);
    if (!other || other->heart != Heart::Yes)
        throw RepError("sc-from-D lifts exist for heart members only");
    return {G2ScFromPD{std::move(pd)}};
}
inline G2Rep g2_sc_from_b(PGL3ExtRep ext) {
    if (!std::holds_alternative<GL3Sc>(ext.base.kind) || ext.base.twist != Rat(0))
        throw RepError("sc-from-B requires a supercuspidal base");
    return {G2ScFromB{std::move(ext)}};
}
inline G2Rep g2_sc_abstract(std::string label, bool generic,
                            std::optional<GL2Rep> rho = std::nullopt) {
    return {G2ScAbstract{std::move(label), generic, std::move(rho)}};
}

inline bool is_discrete_series(const G2Rep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            return std::is_same_v<T, G2St> || std::is_same_v<T, G2DeltaP> ||
                   std::is_same_v<T, G2DeltaQ> || std::is_same_v<T, G2PiGen> ||
                   std::is_same_v<T, G2PiDeg1> || std::is_same_v<T, G2PiSc> ||
                   std::is_same_v<T, G2ScFromPD> || std::is_same_v<T, G2ScFromB> ||
                   std::is_same_v<T, G2ScAbstract>;
        },
        r.kind);
}

inline bool is_tempered(const G2Rep& r) {
    if (is_discrete_series(r)) return true;
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            return std::is_same_v<T, G2IPSummand> || std::is_same_v<T, G2IQSummand> ||
                   std::is_same_v<T, G2IBSummand>;
        },
        r.kind);
}

inline bool is_generic(const G2Rep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, G2St> || std::is_same_v<T, G2PiGen>) return true;
            else if constexpr (std::is_same_v<T, G2DeltaP> || std::is_same_v<T, G2DeltaQ>)
                return true;
            else if constexpr (std::is_same_v<T, G2IPSummand> || std::is_same_v<T, G2IQSummand> ||
                               std::is_same_v<T, G2IBSummand>)
                return k.gen;
            else if constexpr (std::is_same_v<T, G2ScFromB>) return k.ext.ext != Ext::Minus;
            else if constexpr (std::is_same_v<T, G2ScAbstract>) return k.generic;
            else return false;  // trivial, J_*, pi_deg, pi_sc, sc-from-D
        },
        r.kind);
}

inline bool is_supercuspidal(const G2Rep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            return std::is_same_v<T, G2PiSc> || std::is_same_v<T, G2ScFromPD> ||
                   std::is_same_v<T, G2ScFromB> || std::is_same_v<T, G2ScAbstract>;
        },
        r.kind);
}

// ---------------------------------------------------------------------------
// PGSp6

struct P6St {
    friend bool operator==(const P6St&, const P6St&) = default;
};
struct P6J2 {
    Rat s;
    GL2Rep tau;  // I_2(s, tau (x) tau)
    friend bool operator==(const P6J2&, const P6J2&) = default;
};
struct P6Delta2 {
    GL2Rep tau;
    friend bool operator==(const P6Delta2&, const P6Delta2&) = default;
};
struct P6SigmaGenTau {
    GL2Rep tau;  // dihedral S3 case
    friend bool operator==(const P6SigmaGenTau&, const P6SigmaGenTau&) = default;
};
struct P6SigmaGenChi {
    ExponentChar chi;  // quadratic case
    friend bool operator==(const P6SigmaGenChi&, const P6SigmaGenChi&) = default;
};
struct P6I2Summand {
    GL2Rep tau;
    bool gen;
    friend bool operator==(const P6I2Summand&, const P6I2Summand&) = default;
};
struct P6J13 {
    Rat s;
    GL2Rep tau;  // I_13(s, tau (x) 1)
    friend bool operator==(const P6J13&, const P6J13&) = default;
};
struct P6Delta13 {
    GL2Rep tau;
    friend bool operator==(const P6Delta13&, const P6Delta13&) = default;
};
struct P6I13Summand {
    GL2Rep tau;
    bool gen;
    friend bool operator==(const P6I13Summand&, const P6I13Summand&) = default;
};
struct P6I3Irred {
    GL3Rep tau;  // canonical: min(tau, tau^vee); I_3(tau) ~ I_3(tau^vee)
    friend bool operator==(const P6I3Irred&, const P6I3Irred&) = default;
};
struct P6I3Summand {
    GL3Rep tau;  // self-dual
    bool gen;
    friend bool operator==(const P6I3Summand&, const P6I3Summand&) = default;
};
struct P6Delta1 {
    GSp4Sc tau;
    friend bool operator==(const P6Delta1&, const P6Delta1&) = default;
};
struct P6J1 {
    Rat s;
    GSp4Sc tau;
    friend bool operator==(const P6J1&, const P6J1&) = default;
};
struct P6ScAbstract {
    std::string label;
    bool generic;
    friend bool operator==(const P6ScAbstract&, const P6ScAbstract&) = default;
};
struct P6Unresolved {  // a constituent the source does not name
    std::string note;
    friend bool operator==(const P6Unresolved&, const P6Unresolved&) = default;
};

struct PGSp6Rep {
    std::variant<P6St, P6J2, P6Delta2, P6SigmaGenTau, P6SigmaGenChi, P6I2Summand, P6J13,
                 P6Delta13, P6I13Summand, P6I3Irred, P6I3Summand, P6Delta1, P6J1, P6ScAbstract,
                 P6Unresolved>
        kind;
    friend bool operator==(const PGSp6Rep&, const PGSp6Rep&) = default;
};

inline PGSp6Rep p6_st() { return {P6St{}}; }

inline PGSp6Rep p6_j2(Rat s, GL2Rep tau) {
    detail::require_standard(s, tau, "J_2");
    return {P6J2{s, std::move(tau)}};
}
inline PGSp6Rep p6_delta2(GL2Rep tau) {
    const auto* sc = std::get_if<GL2Sc>(&tau.kind);
    if (!sc || tau.twist != Rat(0) || !sc->self_dual || !sc->central.is_trivial())
        throw RepError("delta_2(tau) needs a self-dual unitary supercuspidal with omega = 1");
    return {P6Delta2{std::move(tau)}};
}
inline PGSp6Rep p6_sigma_gen_tau(GL2Rep tau) {
    if (!gl2_dihedral_s3(tau) || tau.twist != Rat(0))
        throw RepError("sigma_gen[tau] needs a unitary dihedral supercuspidal with Im(phi) = S3");
    return {P6SigmaGenTau{std::move(tau)}};
}
inline PGSp6Rep p6_sigma_gen_chi(ExponentChar chi) {
    if (!chi.is_quadratic_nontrivial()) throw RepError("sigma_gen[chi] needs chi^2 = 1, chi != 1");
    return {P6SigmaGenChi{std::move(chi)}};
}
inline PGSp6Rep p6_i2_summand(GL2Rep tau, bool gen) {
    if (!is_unitary(tau) || !is_tempered(tau))
        throw RepError("I_2(tau (x) tau) summand needs unitary tempered tau");
    return {P6I2Summand{detail::dual_min(tau), gen}};
}
inline PGSp6Rep p6_j13(Rat s, GL2Rep tau) {
    detail::require_standard(s, tau, "J_13");
    return {P6J13{s, std::move(tau)}};
}
inline PGSp6Rep p6_delta13(GL2Rep tau) {
    const auto* sc = std::get_if<GL2Sc>(&tau.kind);
    if (!sc || tau.twist != Rat(0) || !sc->self_dual || !sc->central.is_trivial())
        throw RepError("delta_13(tau) needs a self-dual unitary supercuspidal with omega = 1");
    return {P6Delta13{std::move(tau)}};
}
inline PGSp6Rep p6_i13_summand(GL2Rep tau, bool gen) {
    if (!is_unitary(tau) || !is_tempered(tau))
        throw RepError("I_13(tau (x) 1) summand needs unitary tempered tau");
    return {P6I13Summand{detail::dual_min(tau), gen}};
}
inline PGSp6Rep p6_i3_irred(GL3Rep tau);
inline PGSp6Rep p6_i3_summand(GL3Rep tau, bool gen) {
    if (!is_self_dual(tau)) throw RepError("I_3(tau) summands require self-dual tau");
    return {P6I3Summand{std::move(tau), gen}};
}
inline PGSp6Rep p6_delta1(GSp4Sc tau) {
    if (!tau.std_contains_trivial)
        throw RepError("delta_1(tau) needs std o phi_tau to contain the trivial representation");
    return {P6Delta1{std::move(tau)}};
}
inline PGSp6Rep p6_j1(Rat s, GSp4Sc tau) {
    if (s <= Rat(0)) throw RepError("J_1: standard module needs s > 0");
    return {P6J1{s, std::move(tau)}};
}
inline PGSp6Rep p6_sc_abstract(std::string label, bool generic) {
    return {P6ScAbstract{std::move(label), generic}};
}
inline PGSp6Rep p6_unresolved(std::string note) { return {P6Unresolved{std::move(note)}}; }

inline bool is_discrete_series(const PGSp6Rep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            return std::is_same_v<T, P6St> || std::is_same_v<T, P6Delta2> ||
                   std::is_same_v<T, P6SigmaGenTau> || std::is_same_v<T, P6SigmaGenChi> ||
                   std::is_same_v<T, P6Delta13> || std::is_same_v<T, P6Delta1> ||
                   std::is_same_v<T, P6ScAbstract>;
        },
        r.kind);
}

inline bool is_tempered(const PGSp6Rep& r) {
    if (is_discrete_series(r)) return true;
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, P6I2Summand> || std::is_same_v<T, P6I13Summand>)
                return true;
            else if constexpr (std::is_same_v<T, P6I3Irred>) return is_tempered(k.tau);
            else if constexpr (std::is_same_v<T, P6I3Summand>) return is_tempered(k.tau);
            else return false;
        },
        r.kind);
}

inline bool is_generic(const PGSp6Rep& r) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, P6St> || std::is_same_v<T, P6Delta2> ||
                          std::is_same_v<T, P6SigmaGenTau> || std::is_same_v<T, P6SigmaGenChi> ||
                          std::is_same_v<T, P6Delta13>)
                return true;
            else if constexpr (std::is_same_v<T, P6I2Summand> || std::is_same_v<T, P6I13Summand> ||
                               std::is_same_v<T, P6I3Summand>)
                return k.gen;
            else if constexpr (std::is_same_v<T, P6I3Irred>) return is_generic(k.tau);
            else if constexpr (std::is_same_v<T, P6ScAbstract>) return k.generic;
            else return false;  // J_*, delta_1 (from the Saito-Kurokawa datum), unresolved
        },
        r.kind);
}

// ---------------------------------------------------------------------------
// printing (the literal grammar lives in literal.hpp; to_string produces the
// canonical parseable form)

std::string to_string(const GL2Rep& r);
std::string to_string(const GL3Rep& r);
std::string to_string(const PGL3ExtRep& r);
std::string to_string(const PDxRep& r);
std::string to_string(const GSp4Sc& r);
std::string to_string(const G2Rep& r);
std::string to_string(const PGSp6Rep& r);

namespace detail {
inline GL2Rep dual_min(const GL2Rep& tau) {
    GL2Rep dual = contragredient(tau);
    if (dual == tau) return tau;
    return to_string(dual) < to_string(tau) ? dual : tau;
}
}  // namespace detail

inline PGSp6Rep p6_i3_irred(GL3Rep tau) {
    if (is_self_dual(tau)) throw RepError("I_3(tau) with self-dual tau splits; use a summand");
    GL3Rep dual = contragredient(tau);
    if (to_string(dual) < to_string(tau)) tau = dual;
    return {P6I3Irred{std::move(tau)}};
}

inline std::string to_string(const GL2Rep& r) {
    std::string body = std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL2Sc>) {
                if (!k.self_dual && !k.dihedral_S3) return "sc:" + k.label;
                std::string s = "sc(" + k.label;
                if (k.self_dual) s += "; sd";
                if (!k.central.is_trivial()) s += "; w=" + k.central.to_string();
                if (k.dihedral_S3) s += *k.dihedral_S3 ? "; S3" : "; nS3";
                return s + ")";
            } else if constexpr (std::is_same_v<T, GL2St>) {
                return "st(" + k.chi.to_string() + ")";
            } else if constexpr (std::is_same_v<T, GL2Ps>) {
                return "pi(" + k.chi1.to_string() + "; " + k.chi2.to_string() + ")";
            } else if constexpr (std::is_same_v<T, GL2One>) {
                return "one(" + k.chi.to_string() + ")";
            }
        },
        r.kind);
    if (r.twist != Rat(0)) body += "@" + rat_to_string(r.twist);
    return body;
}

inline std::string to_string(const GL3Rep& r) {
    std::string body = std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, GL3Sc>) {
                return k.self_dual ? "sc(" + k.label + "; sd)" : "sc:" + k.label;
            } else if constexpr (std::is_same_v<T, GL3St>) {
                return "st3(" + k.chi.to_string() + ")";
            } else if constexpr (std::is_same_v<T, GL3FromGL2>) {
                return "sum(" + to_string(k.sigma) + ")";
            } else if constexpr (std::is_same_v<T, GL3Ps>) {
                return "tau(" + k.chi1.to_string() + "; " + k.chi2.to_string() + "; " +
                       k.chi3.to_string() + ")";
            } else if constexpr (std::is_same_v<T, GL3Jb>) {
                return "jb3(" + k.mu1.to_string() + "; " + k.mu2.to_string() + "; " +
                       k.mu3.to_string() + ")";
            }
        },
        r.kind);
    if (r.twist != Rat(0)) body += "@" + rat_to_string(r.twist);
    return body;
}

inline std::string to_string(const PGL3ExtRep& r) {
    const char* tag = r.ext == Ext::InducedPlus ? "ind" : (r.ext == Ext::Plus ? "+" : "-");
    return "ext(" + to_string(r.base) + ", " + tag + ")";
}

inline std::string to_string(const PDxRep& r) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PDTrivial>) return "pd:1";
            else if constexpr (std::is_same_v<T, PDUnramCubic>)
                return std::string("pd_cubic(") + k.chi.to_string() + "; " +
                       std::to_string(k.power) + ")";
            else {
                const char* h = k.heart == Heart::Yes ? "yes"
                                : k.heart == Heart::No ? "no"
                                                       : "unknown";
                return "pd(" + k.label + "; heart=" + h + ")";
            }
        },
        r.kind);
}

inline std::string to_string(const GSp4Sc& r) {
    std::string s = "sp4sc(" + r.label;
    if (r.std_contains_trivial) s += "; std1";
    if (r.saito_kurokawa) s += "; SK";
    return s + ")";
}

inline std::string to_string(const G2Rep& r) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, G2St>) return "St_G2";
            else if constexpr (std::is_same_v<T, G2Triv>) return "1_G2";
            else if constexpr (std::is_same_v<T, G2JP>)
                return "JP(" + rat_to_string(k.s) + "; " + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, G2JQ>)
                return "JQ(" + rat_to_string(k.s) + "; " + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, G2JB>)
                return "JB(" + k.chi.c1.to_string() + "; " + k.chi.c2.to_string() + ")";
            else if constexpr (std::is_same_v<T, G2DeltaP>)
                return "delta_P(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, G2DeltaQ>)
                return "delta_Q(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, G2PiGen>) {
                return std::visit(
                    [](const auto& p) -> std::string {
                        using U = std::decay_t<decltype(p)>;
                        if constexpr (std::is_same_v<U, PiGenOne>) return "pi_gen[1]";
                        else if constexpr (std::is_same_v<U, PiGenQuad>)
                            return "pi_gen[" + p.chi.to_string() + "]";
                        else if constexpr (std::is_same_v<U, PiGenCubic>)
                            return "pi_gen[" + p.chi.to_string() + "]";
                        else return "pi_gen[" + to_string(p.tau) + "]";
                    },
                    k.param);
            } else if constexpr (std::is_same_v<T, G2PiDeg1>) return "pi_deg[1]";
            else if constexpr (std::is_same_v<T, G2PiSc>) {
                switch (k.label) {
                    case PiScLabel::One: return "pi_sc[1]";
                    case PiScLabel::MinusOne: return "pi_sc[-1]";
                    case PiScLabel::Omega: return "pi_sc[w]";
                    case PiScLabel::OmegaSq: return "pi_sc[w2]";
                }
                std::abort();
            } else if constexpr (std::is_same_v<T, G2IPSummand>)
                return "IP(" + to_string(k.tau) + std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, G2IQSummand>)
                return "IQ(" + to_string(k.tau) + std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, G2IBSummand>)
                return "IB(" + k.chi.c1.to_string() + "; " + k.chi.c2.to_string() +
                       std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, G2ScFromPD>)
                return "sc_fromD(" + to_string(k.pd) + ")";
            else if constexpr (std::is_same_v<T, G2ScFromB>)
                return "sc_fromB(" + to_string(k.ext) + ")";
            else {
                std::string s = "sc_G2(" + k.label + (k.generic ? "; gen" : "; deg");
                if (k.lifts_to_SL2tilde) s += "; rho=" + to_string(*k.lifts_to_SL2tilde);
                return s + ")";
            }
        },
        r.kind);
}

inline std::string to_string(const PGSp6Rep& r) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, P6St>) return "St_P6";
            else if constexpr (std::is_same_v<T, P6J2>)
                return "J2(" + rat_to_string(k.s) + "; " + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6Delta2>)
                return "delta_2(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6SigmaGenTau>)
                return "sigma_gen[" + to_string(k.tau) + "]";
            else if constexpr (std::is_same_v<T, P6SigmaGenChi>)
                return "sigma_gen[" + k.chi.to_string() + "]";
            else if constexpr (std::is_same_v<T, P6I2Summand>)
                return "I2(" + to_string(k.tau) + std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, P6J13>)
                return "J13(" + rat_to_string(k.s) + "; " + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6Delta13>)
                return "delta_13(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6I13Summand>)
                return "I13(" + to_string(k.tau) + std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, P6I3Irred>)
                return "I3(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6I3Summand>)
                return "I3(" + to_string(k.tau) + std::string(k.gen ? ", +" : ", -") + ")";
            else if constexpr (std::is_same_v<T, P6Delta1>)
                return "delta_1(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6J1>)
                return "J1(" + rat_to_string(k.s) + "; " + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, P6ScAbstract>)
                return "sc_P6(" + k.label + (k.generic ? "; gen" : "; deg") + ")";
            else return "unresolved(" + k.note + ")";
        },
        r.kind);
}

}  // namespace g2theta

#endif
