#ifndef G2THETA_LANGLANDS_HPP
#define G2THETA_LANGLANDS_HPP

// L-parameters for G2 by the image of the principal-SL2 factor, component
// groups A_phi, packet enumeration, and the parameter of a nontempered
// Langlands quotient (factored through the inducing Levi).

#include "reducibility.hpp"
#include "reps.hpp"

#include <variant>
#include <vector>

namespace g2theta {

// ---------------------------------------------------------------------------
// parameters

struct ParamPrincipal {  // phi(SL2) principal
    friend bool operator==(const ParamPrincipal&, const ParamPrincipal&) = default;
};

// subregular SL2 (SO3 in SL3): classified by phi(W_F) inside the centralizer
struct WfTrivial {
    friend bool operator==(const WfTrivial&, const WfTrivial&) = default;
};
struct WfMu2 {
    ExponentChar chi;  // quadratic, nontrivial
    friend bool operator==(const WfMu2&, const WfMu2&) = default;
};
struct WfMu3 {
    ExponentChar chi;  // cubic, nontrivial; canonical: min(chi, chi^{-1})
    friend bool operator==(const WfMu3&, const WfMu3&) = default;
};
struct WfS3 {
    GL2Rep tau;  // dihedral supercuspidal with Im(phi) = S3
    friend bool operator==(const WfS3&, const WfS3&) = default;
};
struct ParamSubregular {
    std::variant<WfTrivial, WfMu2, WfMu3, WfS3> wf_image;
    friend bool operator==(const ParamSubregular&, const ParamSubregular&) = default;
};

struct ParamShortRoot {  // SL2 on the short root; tau sc, tau ~ tau^vee, omega = 1
    GL2Rep tau;
    friend bool operator==(const ParamShortRoot&, const ParamShortRoot&) = default;
};
struct ParamLongRoot {
    GL2Rep tau;
    friend bool operator==(const ParamLongRoot&, const ParamLongRoot&) = default;
};
struct ParamCuspidal {  // phi(SL2) = 1: all members supercuspidal, unenumerated
    std::string label;
    friend bool operator==(const ParamCuspidal&, const ParamCuspidal&) = default;
};

enum class LeviName { M, L, T };
struct ParamLevi {  // factored through a proper Levi
    LeviName levi;
    std::variant<GL2Rep, TorusCharG2> levi_param;  // GL2Rep carries the twist
    bool bounded = false;
    friend bool operator==(const ParamLevi&, const ParamLevi&) = default;
};

struct LParamG2 {
    std::variant<ParamPrincipal, ParamSubregular, ParamShortRoot, ParamLongRoot, ParamCuspidal,
                 ParamLevi>
        kind;
    friend bool operator==(const LParamG2&, const LParamG2&) = default;
};

inline LParamG2 param_principal() { return {ParamPrincipal{}}; }

inline LParamG2 param_subregular_trivial() { return {ParamSubregular{WfTrivial{}}}; }
inline LParamG2 param_subregular_mu2(ExponentChar chi) {
    if (!chi.is_quadratic_nontrivial()) throw RepError("mu2 parameter needs chi^2 = 1, chi != 1");
    return {ParamSubregular{WfMu2{std::move(chi)}}};
}
inline LParamG2 param_subregular_mu3(ExponentChar chi) {
    if (!chi.is_cubic_nontrivial()) throw RepError("mu3 parameter needs chi^3 = 1, chi != 1");
    ExponentChar inv = char_inv(chi);
    if (inv < chi) chi = inv;  // the parameters of chi and chi^{-1} coincide
    return {ParamSubregular{WfMu3{std::move(chi)}}};
}
inline LParamG2 param_subregular_s3(GL2Rep tau) {
    if (!gl2_dihedral_s3(tau) || tau.twist != Rat(0))
        throw RepError("S3 parameter needs a unitary dihedral supercuspidal with Im(phi) = S3");
    return {ParamSubregular{WfS3{std::move(tau)}}};
}

namespace detail {
inline void require_selfdual_sc(const GL2Rep& tau, const char* who) {
    const auto* sc = std::get_if<GL2Sc>(&tau.kind);
    if (!sc || tau.twist != Rat(0) || !sc->self_dual || !sc->central.is_trivial())
        throw RepError(std::string(who) +
                       " needs a self-dual unitary supercuspidal with trivial central character");
}
}  // namespace detail

inline LParamG2 param_short_root(GL2Rep tau) {
    detail::require_selfdual_sc(tau, "short-root parameter");
    return {ParamShortRoot{std::move(tau)}};
}
inline LParamG2 param_long_root(GL2Rep tau) {
    detail::require_selfdual_sc(tau, "long-root parameter");
    return {ParamLongRoot{std::move(tau)}};
}
inline LParamG2 param_cuspidal(std::string label) { return {ParamCuspidal{std::move(label)}}; }

// ---------------------------------------------------------------------------
// component groups

enum class ComponentGroup { Trivial, Mu2, Mu3, S3 };

inline int character_count(ComponentGroup a) {
    switch (a) {
        case ComponentGroup::Trivial: return 1;
        case ComponentGroup::Mu2: return 2;
        case ComponentGroup::Mu3: return 3;
        case ComponentGroup::S3: return 3;
    }
    std::abort();
}

inline ComponentGroup component_group(const LParamG2& phi) {
    return std::visit(
        [](const auto& k) -> ComponentGroup {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ParamPrincipal>) return ComponentGroup::Trivial;
            else if constexpr (std::is_same_v<T, ParamSubregular>) {
                return std::visit(
                    [](const auto& w) -> ComponentGroup {
                        using U = std::decay_t<decltype(w)>;
                        if constexpr (std::is_same_v<U, WfTrivial>) return ComponentGroup::S3;
                        else if constexpr (std::is_same_v<U, WfMu2>) return ComponentGroup::Mu2;
                        else if constexpr (std::is_same_v<U, WfMu3>) return ComponentGroup::Mu3;
                        else return ComponentGroup::Trivial;
                    },
                    k.wf_image);
            } else if constexpr (std::is_same_v<T, ParamShortRoot> ||
                                 std::is_same_v<T, ParamLongRoot>)
                return ComponentGroup::Mu2;
            else if constexpr (std::is_same_v<T, ParamCuspidal>)
                throw RepError("component group of an all-supercuspidal parameter is not determined");
            else return ComponentGroup::Trivial;  // Levi-factored
        },
        phi.kind);
}

// ---------------------------------------------------------------------------
// packets

struct AbstractMember {  // a member the classification does not name
    std::string character;  // the A_phi character it sits at
    std::string param;      // printed parameter, for bookkeeping only
    friend bool operator==(const AbstractMember&, const AbstractMember&) = default;
};

struct PacketMember {
    std::string character;  // "1", "-1", "r", "eps", "w", "w2"
    std::variant<G2Rep, AbstractMember> rep;
    friend bool operator==(const PacketMember&, const PacketMember&) = default;
};

std::string to_string(const LParamG2& phi);

inline std::vector<PacketMember> packet_of(const LParamG2& phi) {
    return std::visit(
        [&](const auto& k) -> std::vector<PacketMember> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ParamPrincipal>) {
                return {{"1", g2_st()}};
            } else if constexpr (std::is_same_v<T, ParamSubregular>) {
                return std::visit(
                    [&](const auto& w) -> std::vector<PacketMember> {
                        using U = std::decay_t<decltype(w)>;
                        if constexpr (std::is_same_v<U, WfTrivial>) {
                            return {{"1", g2_pi_gen_1()},
                                    {"r", g2_pi_deg_1()},
                                    {"eps", g2_pi_sc(PiScLabel::One)}};
                        } else if constexpr (std::is_same_v<U, WfMu2>) {
                            PacketMember minus =
                                w.chi.ramified()
                                    ? PacketMember{"-1", AbstractMember{"-1", to_string(phi)}}
                                    : PacketMember{"-1", g2_pi_sc(PiScLabel::MinusOne)};
                            return {{"1", g2_pi_gen_quad(w.chi)}, minus};
                        } else if constexpr (std::is_same_v<U, WfMu3>) {
                            if (w.chi.ramified())
                                return {{"1", g2_pi_gen_cubic(w.chi)},
                                        {"w", AbstractMember{"w", to_string(phi)}},
                                        {"w2", AbstractMember{"w2", to_string(phi)}}};
                            return {{"1", g2_pi_gen_cubic(w.chi)},
                                    {"w", g2_pi_sc(PiScLabel::Omega)},
                                    {"w2", g2_pi_sc(PiScLabel::OmegaSq)}};
                        } else {
                            return {{"1", g2_pi_gen_dihedral(w.tau)}};
                        }
                    },
                    k.wf_image);
            } else if constexpr (std::is_same_v<T, ParamShortRoot>) {
                return {{"1", g2_delta_p(k.tau)}, {"-1", AbstractMember{"-1", to_string(phi)}}};
            } else if constexpr (std::is_same_v<T, ParamLongRoot>) {
                return {{"1", g2_delta_q(k.tau)}, {"-1", AbstractMember{"-1", to_string(phi)}}};
            } else if constexpr (std::is_same_v<T, ParamCuspidal>) {
                return {};  // membership not enumerated
            } else {
                // Levi-factored parameter
                if (!k.bounded) {
                    // nontempered: singleton, the Langlands quotient
                    if (k.levi == LeviName::T)
                        return {{"1", g2_jb(std::get<TorusCharG2>(k.levi_param))}};
                    const GL2Rep& tw = std::get<GL2Rep>(k.levi_param);
                    GL2Rep tau = tw;
                    tau.twist = Rat(0);
                    if (k.levi == LeviName::M) return {{"1", g2_jp(tw.twist, tau)}};
                    return {{"1", g2_jq(tw.twist, tau)}};
                }
                // bounded: members are the direct summands of the unitary induction
                RepStructure st;
                if (k.levi == LeviName::T) st = decompose_IB_G2(std::get<TorusCharG2>(k.levi_param));
                else if (k.levi == LeviName::M)
                    st = decompose_IP(Rat(0), std::get<GL2Rep>(k.levi_param));
                else st = decompose_IQ(Rat(0), std::get<GL2Rep>(k.levi_param));
                std::vector<PacketMember> out;
                for (const auto& c : st.constituents) {
                    if (c.position != Position::DirectSummand)
                        throw RepError("bounded Levi parameter with non-semisimple induction");
                    const auto* g = std::get_if<G2Rep>(&c.rep);
                    if (!g) throw RepError("unresolved summand in a bounded Levi packet");
                    out.push_back({is_generic(*g) ? "1" : "-1", *g});
                }
                return out;
            }
        },
        phi.kind);
}

// ---------------------------------------------------------------------------
// the parameter of a nontempered Langlands quotient

inline LParamG2 param_of_nontempered(const G2Rep& pi) {
    if (const auto* jp = std::get_if<G2JP>(&pi.kind)) {
        GL2Rep tw = jp->tau;
        tw.twist = jp->s;
        return {ParamLevi{LeviName::M, tw, false}};
    }
    if (const auto* jq = std::get_if<G2JQ>(&pi.kind)) {
        GL2Rep tw = jq->tau;
        tw.twist = jq->s;
        return {ParamLevi{LeviName::L, tw, false}};
    }
    if (const auto* jb = std::get_if<G2JB>(&pi.kind))
        return {ParamLevi{LeviName::T, jb->chi, false}};
    if (is_tempered(pi)) throw RepError("tempered representation: not a Langlands-quotient input");
    throw RepError("nontempered parameter assignment covers J_P, J_Q and J_B only");
}

inline std::string to_string(const LParamG2& phi) {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ParamPrincipal>) return "phi_prin";
            else if constexpr (std::is_same_v<T, ParamSubregular>) {
                return std::visit(
                    [](const auto& w) -> std::string {
                        using U = std::decay_t<decltype(w)>;
                        if constexpr (std::is_same_v<U, WfTrivial>) return "phi_sub(1)";
                        else if constexpr (std::is_same_v<U, WfMu2>)
                            return "phi_sub(" + w.chi.to_string() + ")";
                        else if constexpr (std::is_same_v<U, WfMu3>)
                            return "phi_sub(" + w.chi.to_string() + ")";
                        else return "phi_sub(" + to_string(w.tau) + ")";
                    },
                    k.wf_image);
            } else if constexpr (std::is_same_v<T, ParamShortRoot>)
                return "phi_short(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, ParamLongRoot>)
                return "phi_long(" + to_string(k.tau) + ")";
            else if constexpr (std::is_same_v<T, ParamCuspidal>)
                return "phi_cusp(" + k.label + ")";
            else {
                const char* levi = k.levi == LeviName::M ? "M" : (k.levi == LeviName::L ? "L" : "T");
                std::string inner;
                if (const auto* t = std::get_if<GL2Rep>(&k.levi_param)) inner = to_string(*t);
                else {
                    const auto& c = std::get<TorusCharG2>(k.levi_param);
                    inner = c.c1.to_string() + "; " + c.c2.to_string();
                }
                return std::string("phi_levi(") + levi + "; " + inner + "; " +
                       (k.bounded ? "bounded" : "unbounded") + ")";
            }
        },
        phi.kind);
}

}  // namespace g2theta

#endif
