#ifndef G2THETA_JACQUET_HPP
#define G2THETA_JACQUET_HPP

// Symbolic filtration tables: Jacquet modules of the minimal representations
// along the maximal parabolics of the dual pair G2 x PGSp6, the Mackey
// filtration of the degenerate principal series I_E(s), and the dual-pair
// data tables for the three Freudenthal-Jordan algebras of interest.
//
// Every entry here is a static symbolic descriptor.  Nothing is evaluated;
// the layers record inducing subgroups, inducing data, and exponent twists.

#include <g2theta/rational.hpp>
#include <g2theta/rootsys.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2theta {

// ---------------------------------------------------------------------------
// Filtration pieces
// ---------------------------------------------------------------------------

struct FiltrationPiece {
    int layer = 0;  // 0 = bottom of the filtration
    std::string descriptor;                      // display form of the layer
    std::vector<std::string> inducing_subgroups; // names of the inducing pair
    std::string datum;   // C_c(GL1), C_c(GL2), W, minimal-rep symbols, ...
    std::string delta;   // display of the auxiliary character, "" if none
    std::vector<Rat> twists;  // exponent data appearing in the layer
    int multiplicity = 1;
    // Parabolics of the rootsys tables referenced by this descriptor.
    std::vector<std::pair<Group, ParName>> referenced;
};

inline bool operator==(const FiltrationPiece& a, const FiltrationPiece& b) {
    return a.layer == b.layer && a.descriptor == b.descriptor &&
           a.inducing_subgroups == b.inducing_subgroups && a.datum == b.datum &&
           a.delta == b.delta && a.twists == b.twists &&
           a.multiplicity == b.multiplicity && a.referenced == b.referenced;
}

namespace detail {

inline FiltrationPiece piece(int layer, std::string descriptor,
                             std::vector<std::string> subgroups, std::string datum,
                             std::string delta, std::vector<Rat> twists,
                             std::vector<std::pair<Group, ParName>> refs,
                             int multiplicity = 1) {
    FiltrationPiece p;
    p.layer = layer;
    p.descriptor = std::move(descriptor);
    p.inducing_subgroups = std::move(subgroups);
    p.datum = std::move(datum);
    p.delta = std::move(delta);
    p.twists = std::move(twists);
    p.multiplicity = multiplicity;
    p.referenced = std::move(refs);
    return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Jacquet modules of the minimal representation: G2 side
// ---------------------------------------------------------------------------
//
// r_P(Pi) and r_Q(Pi) for the two maximal parabolics of G2, as modules for
// GL2 x PGSp6.  Pieces are listed in top-to-bottom order; the `layer` field
// is the height above the bottom of the filtration.

inline std::vector<FiltrationPiece> minrep_jacquet(Group group, ParName parabolic) {
    if (group != Group::G2 || (parabolic != ParName::P && parabolic != ParName::Q))
        throw ParabolicNotFound("minrep_jacquet: expected (G2, P) or (G2, Q)");

    std::vector<FiltrationPiece> out;
    if (parabolic == ParName::P) {
        out.push_back(detail::piece(
            2, "Pi_{D6} (x) |det|^{1/2}  (+)  Pi_{0} (x) |det|^{3/2}",
            {"GL2", "PGSp6"}, "Pi_{D6} (+) Pi_{0}", "",
            {Rat(1, 2), Rat(3, 2)}, {{Group::G2, ParName::P}}));
        out.push_back(detail::piece(
            1, "Ind_{Bbar x P2}^{GL2 x PGSp6} delta . C_c(GL1),  delta = |.|^{-1/2} x |.|",
            {"Bbar", "P2"}, "C_c(GL1)", "|.|^{-1/2} x |.|",
            {Rat(-1, 2), Rat(1)}, {{Group::PGSp6, ParName::P2}}));
        out.push_back(detail::piece(
            0, "Ind_{P13}^{PGSp6} C_c(GL2)",
            {"P13"}, "C_c(GL2)", "", {},
            {{Group::PGSp6, ParName::P13}}));
        return out;
    }
    // parabolic == Q
    out.push_back(detail::piece(
        2, "Pi_{A5} (x) |det|^{3/2}  (+)  Pi_{A1} (x) |det|^{2}",
        {"GL2", "PGSp6"}, "Pi_{A5} (+) Pi_{A1}", "",
        {Rat(3, 2), Rat(2)}, {{Group::G2, ParName::Q}}));
    out.push_back(detail::piece(
        1, "Ind_{Bbar x P2}^{GL2 x PGSp6} delta . C_c(GL1),  delta = |.|^{1/2} x |.|",
        {"Bbar", "P2"}, "C_c(GL1)", "|.|^{1/2} x |.|",
        {Rat(1, 2), Rat(1)}, {{Group::PGSp6, ParName::P2}}));
    out.push_back(detail::piece(
        0, "Ind_{P2}^{PGSp6} W",
        {"P2"}, "W", "", {},
        {{Group::PGSp6, ParName::P2}}));
    return out;
}

// ---------------------------------------------------------------------------
// Jacquet modules of the minimal representation: PGSp6 side
// ---------------------------------------------------------------------------
//
// r_{P1}, r_{P2}, r_{P3} of Pi, as modules for G2 x (Levi of P_i).  The P2
// case has four layers; its bottom piece is induced from Q with the Weil
// representation W of GL2 x GSO4 as inducing datum.

inline std::vector<FiltrationPiece> minrep_jacquet_p6(ParName parabolic) {
    std::vector<FiltrationPiece> out;
    switch (parabolic) {
        case ParName::P3:
            out.push_back(detail::piece(
                2, "Pi_{E6}  (+)  Pi_{0} (x) |det|",
                {"G2", "GL3"}, "Pi_{E6} (+) Pi_{0}", "",
                {Rat(0), Rat(1)}, {{Group::PGSp6, ParName::P3}}));
            out.push_back(detail::piece(
                1,
                "Ind_{Q x Q1}^{G2 x GL3} delta . C_c(GL1),  "
                "delta = |g1|^{-1/2} x |det g2|^{1/2}",
                {"Q", "Q1"}, "C_c(GL1)", "|g1|^{-1/2} x |det g2|^{1/2}",
                {Rat(-1, 2), Rat(1, 2)},
                {{Group::G2, ParName::Q}, {Group::GL3, ParName::Q1}}));
            out.push_back(detail::piece(
                0, "Ind_{P x Q2}^{G2 x GL3} C_c(GL2)",
                {"P", "Q2"}, "C_c(GL2)", "", {},
                {{Group::G2, ParName::P}, {Group::GL3, ParName::Q2}}));
            return out;
        case ParName::P1:
            out.push_back(detail::piece(
                2, "Pi_{D6} (x) |nu|^{1/2}  (+)  Pi_{0} (x) |nu|^{3/2}",
                {"G2", "GSp4"}, "Pi_{D6} (+) Pi_{0}", "",
                {Rat(1, 2), Rat(3, 2)}, {{Group::PGSp6, ParName::P1}}));
            out.push_back(detail::piece(
                1,
                "Ind_{Q x Q1}^{G2 x GSp4} delta . C_c(GL1),  "
                "delta = |g1|^{-1/2} x |det g2|^{1/2}",
                {"Q", "Q1"}, "C_c(GL1)", "|g1|^{-1/2} x |det g2|^{1/2}",
                {Rat(-1, 2), Rat(1, 2)},
                {{Group::G2, ParName::Q}, {Group::GSp4, ParName::Q1}}));
            out.push_back(detail::piece(
                0, "Ind_{P x Q2}^{G2 x GSp4} C_c(GL2)",
                {"P", "Q2"}, "C_c(GL2)", "", {},
                {{Group::G2, ParName::P}, {Group::GSp4, ParName::Q2}}));
            return out;
        case ParName::P2:
            out.push_back(detail::piece(
                3, "Pi_{D5} (x) |det|^{1/2}  (+)  Pi_{A1} (x) |det|^{3/2}",
                {"G2", "GL2 x GL2 / GL1"}, "Pi_{D5} (+) Pi_{A1}", "",
                {Rat(1, 2), Rat(3, 2)}, {{Group::PGSp6, ParName::P2}}));
            out.push_back(detail::piece(
                2,
                "Ind_{Q x (Bbar x Bbar)/GL1}^{G2 x (GL2 x GL2)/GL1} delta . C_c(GL1),  "
                "delta = |.|^{1/2} x |.| on each Bbar",
                {"Q", "Bbar x Bbar / GL1"}, "C_c(GL1)", "|.|^{1/2} x |.|",
                {Rat(1, 2), Rat(1)}, {{Group::G2, ParName::Q}}));
            out.push_back(detail::piece(
                1, "Ind_{P x Bbar}^{G2 x GL2} C_c(GL2)",
                {"P", "Bbar"}, "C_c(GL2)", "", {},
                {{Group::G2, ParName::P}}));
            out.push_back(detail::piece(
                0, "Ind_{Q}^{G2} W",
                {"Q"}, "W", "", {},
                {{Group::G2, ParName::Q}}));
            return out;
        default:
            throw ParabolicNotFound("minrep_jacquet_p6: expected P1, P2 or P3");
    }
}

// ---------------------------------------------------------------------------
// Etale cubic algebras
// ---------------------------------------------------------------------------

enum class EtaleType { Split, PartialSplit, Field };

struct EtaleCubic {
    EtaleType type = EtaleType::Split;
    std::string label;  // the K of F x K, or the field label; "" for F^3

    // Multiplicity m_E of the middle Mackey layers: 3, 1, 0.
    int m() const {
        switch (type) {
            case EtaleType::Split: return 3;
            case EtaleType::PartialSplit: return 1;
            case EtaleType::Field: return 0;
        }
        return 0;
    }
    bool is_field() const { return type == EtaleType::Field; }
};

inline EtaleCubic etale_split() { return {EtaleType::Split, ""}; }
inline EtaleCubic etale_partial_split(std::string k_label) {
    return {EtaleType::PartialSplit, std::move(k_label)};
}
inline EtaleCubic etale_field(std::string label) {
    return {EtaleType::Field, std::move(label)};
}

inline bool operator==(const EtaleCubic& a, const EtaleCubic& b) {
    return a.type == b.type && a.label == b.label;
}

inline std::string to_string(const EtaleCubic& e) {
    switch (e.type) {
        case EtaleType::Split: return "F^3";
        case EtaleType::PartialSplit: return "F x " + (e.label.empty() ? "K" : e.label);
        case EtaleType::Field: return e.label.empty() ? "E" : e.label;
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Mackey filtration of the degenerate principal series I_E(s)
// ---------------------------------------------------------------------------
//
// As a G2-module, I_E(s) has a filtration 0 c I0 c I1 c I2 c I3 c I4 with
// bottom piece I0 = ind_N^{G2} psibar_E and successive quotients
//   J1 = I_P(s/2 + 1/4, C_c(PGL2))
//   J2 = m_E . I_P(s/2 + 1/4, ind_N^{PGL2} psi)
//   J3 = m_E . I_Q(s + 1)
//   J4 = I_P(s + 1)
// Layers with multiplicity m_E = 0 are omitted and the remaining layers are
// renumbered contiguously from 0.

inline std::vector<FiltrationPiece> ie_filtration(const Rat& s, const EtaleCubic& e) {
    const int m = e.m();
    const Rat half_twist = s / 2 + Rat(1, 4);
    const Rat full_twist = s + 1;

    std::vector<FiltrationPiece> raw;
    raw.push_back(detail::piece(0, "I0 = ind_N^{G2} psibar_E",
                                {"N", "G2"}, "psibar_E", "", {},
                                {{Group::G2, ParName::P}}));
    raw.push_back(detail::piece(
        0, "J1 = I_P(" + rat_to_string(half_twist) + ", C_c(PGL2))",
        {"P"}, "C_c(PGL2)", "", {half_twist}, {{Group::G2, ParName::P}}));
    raw.push_back(detail::piece(
        0,
        "J2 = " + std::to_string(m) + " . I_P(" + rat_to_string(half_twist) +
            ", ind_N^{PGL2} psi)",
        {"P"}, "ind_N^{PGL2} psi", "", {half_twist},
        {{Group::G2, ParName::P}}, m));
    raw.push_back(detail::piece(
        0, "J3 = " + std::to_string(m) + " . I_Q(" + rat_to_string(full_twist) + ")",
        {"Q"}, "1", "", {full_twist}, {{Group::G2, ParName::Q}}, m));
    raw.push_back(detail::piece(
        0, "J4 = I_P(" + rat_to_string(full_twist) + ")",
        {"P"}, "1", "", {full_twist}, {{Group::G2, ParName::P}}));

    std::vector<FiltrationPiece> out;
    for (auto& p : raw) {
        if (p.multiplicity == 0) continue;  // layer absent when E is a field
        p.layer = static_cast<int>(out.size());
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Freudenthal-Jordan algebras and dual-pair tables
// ---------------------------------------------------------------------------

enum class JordanCase { Dplus, M3F, H3M2 };

inline std::string to_string(JordanCase j) {
    switch (j) {
        case JordanCase::Dplus: return "D+";
        case JordanCase::M3F: return "M3(F)+";
        case JordanCase::H3M2: return "H3(M2(F))";
    }
    return "?";
}

struct DualPairData {
    JordanCase tag;
    int dim;             // dim J
    std::string h_j;     // the group H_J acting through the dual pair
    std::string h_je;    // the stabilizer-side group H_{J,E}
    std::string ambient; // ambient exceptional group
    Rat s_j;             // embedding point of R_J(E) in I_E(s)
};

inline DualPairData dualpair_table(JordanCase j) {
    switch (j) {
        case JordanCase::Dplus:
            return {j, 9, "PD^x", "PE^x", "E6^D", Rat(-1, 2)};
        case JordanCase::M3F:
            return {j, 9, "PGL3 : Z/2", "PE^x : Z/2", "E6 : Z/2", Rat(-1, 2)};
        case JordanCase::H3M2:
            return {j, 15, "PGSp6", "SL2(E)/mu2", "E7", Rat(1, 2)};
    }
    throw std::logic_error("dualpair_table: bad case");
}

// The structure of R_J(E) inside the degenerate principal series at s = s_J.
//
// R_J(E) embeds in I_E(s_J).  I_E(1/2) has length 3 when E is a field and
// length 2 otherwise, with exact sequences
//   0 -> R_{H3(M2(F))}(E) -> I_E(1/2) -> R_{D}(E) -> 0
//   0 -> V -> R_{H3(M2(F))}(E) -> R_{M3(F)+}(E) -> 0
// R_D(E) = 0 when E is not a field; then I_E(1/2) = R_{H3(M2(F))}(E).
struct RjeStructure {
    JordanCase tag;
    Rat s_j;
    bool zero = false;   // true only for D+ with non-field E
    int ie_half_length;  // length of I_E(1/2): 3 if E is a field, else 2
    std::vector<std::string> sequences;
};

inline RjeStructure rje_structure(JordanCase j, const EtaleCubic& e) {
    RjeStructure r;
    r.tag = j;
    r.s_j = dualpair_table(j).s_j;
    r.ie_half_length = e.is_field() ? 3 : 2;
    if (j == JordanCase::Dplus && !e.is_field()) {
        r.zero = true;  // R_D(E) is 0 when E is not a field
        return r;
    }
    if (e.is_field()) {
        r.sequences = {
            "0 -> R_{H3(M2(F))}(E) -> I_E(1/2) -> R_{D+}(E) -> 0",
            "0 -> V -> R_{H3(M2(F))}(E) -> R_{M3(F)+}(E) -> 0",
        };
    } else {
        r.sequences = {
            "I_E(1/2) = R_{H3(M2(F))}(E)",
            "0 -> V -> R_{H3(M2(F))}(E) -> R_{M3(F)+}(E) -> 0",
        };
    }
    return r;
}

}  // namespace g2theta

#endif
