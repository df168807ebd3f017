#ifndef G2THETA_ROOTSYS_HPP
#define G2THETA_ROOTSYS_HPP

// Root-system, Weyl-group and parabolic data for G2 and for the C3 picture of
// PGSp6 realized on the character lattice of the Siegel Levi torus.
//
// G2 roots are stored in simple-root coordinates (a, b) meaning a*alpha + b*beta,
// alpha short, beta long, Gram matrix ((2,-3),(-3,6)).

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2theta {

struct RootVecG2 {
    long long a = 0;
    long long b = 0;
    friend auto operator<=>(const RootVecG2&, const RootVecG2&) = default;
};

inline long long g2_inner(const RootVecG2& x, const RootVecG2& y) {
    return 2 * x.a * y.a + 6 * x.b * y.b - 3 * (x.a * y.b + x.b * y.a);
}

inline long long g2_norm(const RootVecG2& r) { return g2_inner(r, r); }
inline bool g2_is_long(const RootVecG2& r) { return g2_norm(r) == 6; }
inline bool g2_is_short(const RootVecG2& r) { return g2_norm(r) == 2; }

// <lambda, gamma^vee> = 2 (lambda, gamma) / (gamma, gamma); integral on the root lattice.
inline long long g2_coroot_pairing(const RootVecG2& lambda, const RootVecG2& gamma) {
    long long num = 2 * g2_inner(lambda, gamma);
    long long den = g2_norm(gamma);
    if (den == 0 || num % den != 0) throw std::logic_error("non-integral coroot pairing");
    return num / den;
}

// Simple reflections in simple-root coordinates.
inline RootVecG2 g2_reflect_alpha(const RootVecG2& r) { return {-r.a + 3 * r.b, r.b}; }
inline RootVecG2 g2_reflect_beta(const RootVecG2& r) { return {r.a, r.a - r.b}; }

inline std::vector<RootVecG2> g2_roots() {
    std::set<RootVecG2> out;
    std::vector<RootVecG2> frontier = {{1, 0}, {0, 1}};
    out.insert(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        std::vector<RootVecG2> next;
        for (const auto& r : frontier) {
            for (const auto& s : {g2_reflect_alpha(r), g2_reflect_beta(r)}) {
                if (out.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

inline bool g2_is_positive_root(const RootVecG2& r) {
    return r.a > 0 || (r.a == 0 && r.b > 0);
}

struct MatG2 {
    // row-major 2x2 integer matrix acting on (a, b) column vectors
    std::array<long long, 4> m;
    friend auto operator<=>(const MatG2&, const MatG2&) = default;
    RootVecG2 apply(const RootVecG2& r) const {
        return {m[0] * r.a + m[1] * r.b, m[2] * r.a + m[3] * r.b};
    }
    MatG2 compose(const MatG2& o) const {
        return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }
};

inline const std::vector<MatG2>& g2_weyl_elements() {
    static const std::vector<MatG2> elems = [] {
        const MatG2 sa{{-1, 3, 0, 1}};
        const MatG2 sb{{1, 0, 1, -1}};
        std::set<MatG2> seen{MatG2{{1, 0, 0, 1}}};
        std::vector<MatG2> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<MatG2> next;
            for (const auto& g : frontier) {
                for (const auto& gen : {sa, sb}) {
                    MatG2 h = g.compose(gen);
                    if (seen.insert(h).second) next.push_back(h);
                }
            }
            frontier = std::move(next);
        }
        return std::vector<MatG2>(seen.begin(), seen.end());
    }();
    return elems;
}

inline int g2_weyl_order() { return static_cast<int>(g2_weyl_elements().size()); }

inline std::set<RootVecG2> g2_weyl_closure(const RootVecG2& seed) {
    std::set<RootVecG2> orbit;
    for (const auto& w : g2_weyl_elements()) orbit.insert(w.apply(seed));
    return orbit;
}

// All unordered triples of long roots summing to zero, each sorted ascending.
inline std::vector<std::array<RootVecG2, 3>> long_root_triples_all() {
    std::vector<RootVecG2> longs;
    for (const auto& r : g2_roots())
        if (g2_is_long(r)) longs.push_back(r);
    std::vector<std::array<RootVecG2, 3>> out;
    for (size_t i = 0; i < longs.size(); ++i)
        for (size_t j = i + 1; j < longs.size(); ++j)
            for (size_t k = j + 1; k < longs.size(); ++k) {
                if (longs[i].a + longs[j].a + longs[k].a == 0 &&
                    longs[i].b + longs[j].b + longs[k].b == 0) {
                    std::array<RootVecG2, 3> t{longs[i], longs[j], longs[k]};
                    std::sort(t.begin(), t.end());
                    out.push_back(t);
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical representative: lexicographically least triple (sorted by (a, b)).
inline std::array<RootVecG2, 3> long_root_triple() {
    auto all = long_root_triples_all();
    if (all.empty()) throw std::logic_error("no long-root triple");
    return all.front();
}

// ---------------------------------------------------------------------------
// C3 picture of PGSp6.

struct C3Vec {
    Rat s1, s2, s3;
    friend bool operator==(const C3Vec&, const C3Vec&) = default;
    friend bool operator<(const C3Vec& x, const C3Vec& y) {
        if (x.s1 != y.s1) return x.s1 < y.s1;
        if (x.s2 != y.s2) return x.s2 < y.s2;
        return x.s3 < y.s3;
    }
};

// The third printed simple-root vector (0,2,2) is inconsistent with the printed
// coroots (its pairings come out 4 and -2); the vector compatible with
// alpha3^vee(t) = (1,t,t) is (-1,1,1), which is what the third reflection below
// negates.  See the project notes on the source errata.
inline std::array<C3Vec, 3> c3_simple_roots() {
    return {C3Vec{0, 1, -1}, C3Vec{1, -1, 0}, C3Vec{-1, 1, 1}};
}

inline C3Vec c3_reflect(int i, const C3Vec& v) {
    switch (i) {
        case 1: return {v.s1, v.s3, v.s2};
        case 2: return {v.s2, v.s1, v.s3};
        case 3: return {v.s1 + v.s2 + v.s3, -v.s3, -v.s2};
        default: throw std::out_of_range("c3_reflect index must be 1, 2 or 3");
    }
}

// Weyl-invariant quadratic form on the character lattice, normalized so that
// q(1,0,0) = 3/4.  In the coordinates u = (s1+s2, s1+s3, s2+s3) identifying the
// lattice with the standard Sp6 torus characters this is (3/8) * sum u_i^2.
inline Rat c3_form_q(const C3Vec& v) {
    Rat t = v.s1 + v.s2 + v.s3;
    return Rat(3, 8) * (v.s1 * v.s1 + v.s2 * v.s2 + v.s3 * v.s3 + t * t);
}

// The formula as printed in the source, in both readings of its typo: with the
// literal cubed third term and with the squared one.  Neither is invariant under
// the printed reflections; kept for the documented erratum check and the CLI
// debug output.
inline Rat c3_form_q_printed(const C3Vec& v, bool cubed_third_term) {
    Rat t = v.s1 + v.s2 + v.s3;
    Rat third = cubed_third_term ? v.s3 * v.s3 * v.s3 : v.s3 * v.s3;
    return v.s1 * v.s1 + v.s2 * v.s2 + third - Rat(1, 4) * t * t;
}

inline bool c3_positive_chamber(const C3Vec& v) {
    Rat abs3 = v.s3 < Rat(0) ? -v.s3 : v.s3;
    return v.s1 > v.s2 && v.s2 > abs3;
}

struct MatC3 {
    std::array<Rat, 9> m;  // row-major
    friend bool operator==(const MatC3&, const MatC3&) = default;
    friend bool operator<(const MatC3& x, const MatC3& y) {
        for (int i = 0; i < 9; ++i)
            if (x.m[i] != y.m[i]) return x.m[i] < y.m[i];
        return false;
    }
    C3Vec apply(const C3Vec& v) const {
        return {m[0] * v.s1 + m[1] * v.s2 + m[2] * v.s3,
                m[3] * v.s1 + m[4] * v.s2 + m[5] * v.s3,
                m[6] * v.s1 + m[7] * v.s2 + m[8] * v.s3};
    }
    MatC3 compose(const MatC3& o) const {
        MatC3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat acc(0);
                for (int k = 0; k < 3; ++k) acc += m[3 * i + k] * o.m[3 * k + j];
                r.m[3 * i + j] = acc;
            }
        return r;
    }
};

inline const std::vector<MatC3>& c3_weyl_elements() {
    static const std::vector<MatC3> elems = [] {
        const MatC3 s1{{1, 0, 0, 0, 0, 1, 0, 1, 0}};
        const MatC3 s2{{0, 1, 0, 1, 0, 0, 0, 0, 1}};
        const MatC3 s3{{1, 1, 1, 0, 0, -1, 0, -1, 0}};
        std::set<MatC3> seen{MatC3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}};
        std::vector<MatC3> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<MatC3> next;
            for (const auto& g : frontier) {
                for (const auto& gen : {s1, s2, s3}) {
                    MatC3 h = g.compose(gen);
                    if (seen.insert(h).second) next.push_back(h);
                }
            }
            frontier = std::move(next);
        }
        return std::vector<MatC3>(seen.begin(), seen.end());
    }();
    return elems;
}

inline int c3_weyl_order() { return static_cast<int>(c3_weyl_elements().size()); }

inline std::vector<C3Vec> c3_roots() {
    std::set<C3Vec> out;
    for (const auto& a : c3_simple_roots())
        for (const auto& w : c3_weyl_elements()) out.insert(w.apply(a));
    return {out.begin(), out.end()};
}

// Polarization of c3_form_q.
inline Rat c3_form_b(const C3Vec& x, const C3Vec& y) {
    Rat tx = x.s1 + x.s2 + x.s3, ty = y.s1 + y.s2 + y.s3;
    return Rat(3, 8) * (x.s1 * y.s1 + x.s2 * y.s2 + x.s3 * y.s3 + tx * ty);
}

inline bool c3_is_positive_root(const C3Vec& r) {
    return c3_form_b(r, C3Vec{3, 2, 1}) > Rat(0);
}

// ---------------------------------------------------------------------------
// Parabolic tables.

enum class Group { G2, PGSp6, GL3, GSp4 };
enum class ParName { P, Q, B, P1, P2, P3, P13, Q1, Q2 };

inline std::string to_string(Group g) {
    switch (g) {
        case Group::G2: return "G2";
        case Group::PGSp6: return "PGSp6";
        case Group::GL3: return "GL3";
        case Group::GSp4: return "GSp4";
    }
    std::abort();
}

inline std::string to_string(ParName n) {
    switch (n) {
        case ParName::P: return "P";
        case ParName::Q: return "Q";
        case ParName::B: return "B";
        case ParName::P1: return "P1";
        case ParName::P2: return "P2";
        case ParName::P3: return "P3";
        case ParName::P13: return "P13";
        case ParName::Q1: return "Q1";
        case ParName::Q2: return "Q2";
    }
    std::abort();
}

struct ParabolicData {
    Group group;
    ParName name;
    std::string levi;
    std::string modulus;                       // display form
    std::vector<Rat> modulus_exponents;        // scalar [e] or exponent vector
    std::vector<RootVecG2> nilradical_g2;
    std::vector<std::vector<RootVecG2>> grading_g2;
    std::vector<C3Vec> nilradical_c3;
    std::vector<std::vector<C3Vec>> grading_c3;
    std::vector<std::string> grading_layers;   // layer module descriptors where named
};

struct ParabolicNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Expansion of a C3 root in the simple-root basis (Cramer over exact rationals).
inline std::array<Rat, 3> c3_in_simple_basis(const C3Vec& r) {
    auto s = c3_simple_roots();
    auto det3 = [](const std::array<C3Vec, 3>& c) {
        return c[0].s1 * (c[1].s2 * c[2].s3 - c[1].s3 * c[2].s2) -
               c[1].s1 * (c[0].s2 * c[2].s3 - c[0].s3 * c[2].s2) +
               c[2].s1 * (c[0].s2 * c[1].s3 - c[0].s3 * c[1].s2);
    };
    // columns are the simple roots; transpose into column tuples
    std::array<C3Vec, 3> cols{C3Vec{s[0].s1, s[1].s1, s[2].s1},
                              C3Vec{s[0].s2, s[1].s2, s[2].s2},
                              C3Vec{s[0].s3, s[1].s3, s[2].s3}};
    // Work with rows of the coefficient matrix M (M * x = r), M rows = cols above.
    Rat d = det3(cols);
    std::array<Rat, 3> x{};
    for (int i = 0; i < 3; ++i) {
        std::array<C3Vec, 3> m = cols;
        C3Vec rhs{r.s1, r.s2, r.s3};
        Rat* fields[3][3] = {{&m[0].s1, &m[0].s2, &m[0].s3},
                             {&m[1].s1, &m[1].s2, &m[1].s3},
                             {&m[2].s1, &m[2].s2, &m[2].s3}};
        *fields[0][i] = rhs.s1;
        *fields[1][i] = rhs.s2;
        *fields[2][i] = rhs.s3;
        x[i] = det3(m) / d;
    }
    return x;
}

// Positive C3 roots outside the subsystem spanned by the Levi simple roots,
// graded by the total coefficient on the removed simple roots.
inline void c3_nilradical(const std::set<int>& levi_simple,  // subset of {1,2,3}
                          std::vector<C3Vec>& nilradical,
                          std::vector<std::vector<C3Vec>>& grading) {
    struct Entry { Rat level; C3Vec root; };
    std::vector<Entry> entries;
    for (const auto& r : c3_roots()) {
        if (!c3_is_positive_root(r)) continue;
        auto coeff = c3_in_simple_basis(r);
        Rat level(0);
        for (int i = 1; i <= 3; ++i)
            if (!levi_simple.count(i)) level += coeff[i - 1];
        if (level == Rat(0)) continue;  // Levi root
        entries.push_back({level, r});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.level != y.level) return x.level < y.level;
        return x.root < y.root;
    });
    nilradical.clear();
    grading.clear();
    Rat current(-1);
    for (const auto& e : entries) {
        nilradical.push_back(e.root);
        if (grading.empty() || e.level != current) {
            grading.emplace_back();
            current = e.level;
        }
        grading.back().push_back(e.root);
    }
}

}  // namespace detail

inline ParabolicData parabolic_data(Group group, ParName name) {
    ParabolicData d;
    d.group = group;
    d.name = name;
    auto g2_nil = [&](const RootVecG2& levi_root) {
        for (const auto& r : g2_roots())
            if (g2_is_positive_root(r) && r != levi_root) d.nilradical_g2.push_back(r);
        std::sort(d.nilradical_g2.begin(), d.nilradical_g2.end());
    };
    if (group == Group::G2 && name == ParName::P) {
        // Heisenberg parabolic: Levi root alpha; N graded by the beta-coefficient.
        d.levi = "GL2";
        d.modulus = "|det|^3";
        d.modulus_exponents = {Rat(3)};
        g2_nil({1, 0});
        d.grading_g2 = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}, {{3, 2}}};
        d.grading_layers = {"Sym^3(F^2) (x) det^-1", "F (center, U_{beta0})"};
        return d;
    }
    if (group == Group::G2 && name == ParName::Q) {
        // 3-step radical: Levi root beta; graded by the alpha-coefficient.
        d.levi = "GL2";
        d.modulus = "|det|^5";
        d.modulus_exponents = {Rat(5)};
        g2_nil({0, 1});
        d.grading_g2 = {{{1, 0}, {1, 1}}, {{2, 1}}, {{3, 1}, {3, 2}}};
        d.grading_layers = {"F^2", "det", "F^2 (x) det"};
        return d;
    }
    if (group == Group::G2 && name == ParName::B) {
        d.levi = "T";
        // Sum of positive roots 10a+6b = 4*(2a+b) + 2*(a+b): exponents on the
        // torus coordinates ((2a+b)(t), (a+b)(t)).
        d.modulus = "|x1|^4 |x2|^2";
        d.modulus_exponents = {Rat(4), Rat(2)};
        for (const auto& r : g2_roots())
            if (g2_is_positive_root(r)) d.nilradical_g2.push_back(r);
        std::sort(d.nilradical_g2.begin(), d.nilradical_g2.end());
        return d;
    }
    if (group == Group::PGSp6) {
        std::set<int> levi;
        switch (name) {
            case ParName::P1:
                d.levi = "GSp4 x GL1";
                d.modulus = "|nu|^3";
                d.modulus_exponents = {Rat(3)};
                levi = {2, 3};
                break;
            case ParName::P2:
                d.levi = "(GL2 x GL2)/GL1^delta";
                d.modulus = "|det(alpha beta)|^5";
                d.modulus_exponents = {Rat(5)};
                levi = {1, 3};
                break;
            case ParName::P3:
                d.levi = "GL3";
                d.modulus = "|det|^2";
                d.modulus_exponents = {Rat(2)};
                levi = {1, 2};
                break;
            case ParName::P13:
                d.levi = "GL2 x GL1";
                levi = {2};
                break;
            default:
                throw ParabolicNotFound("no parabolic " + to_string(name) + " in PGSp6");
        }
        detail::c3_nilradical(levi, d.nilradical_c3, d.grading_c3);
        if (name == ParName::P13) {
            // Modulus as an exponent vector on the torus coordinates (t1,t2,t3):
            // sum of the nilradical roots.
            C3Vec sum{0, 0, 0};
            for (const auto& r : d.nilradical_c3) {
                sum.s1 += r.s1;
                sum.s2 += r.s2;
                sum.s3 += r.s3;
            }
            d.modulus_exponents = {sum.s1, sum.s2, sum.s3};
            d.modulus = "|t1|^" + rat_to_string(sum.s1) + " |t2|^" + rat_to_string(sum.s2) +
                        " |t3|^" + rat_to_string(sum.s3);
        }
        return d;
    }
    if (group == Group::GL3 && (name == ParName::Q1 || name == ParName::Q2)) {
        d.levi = name == ParName::Q1 ? "GL1 x GL2" : "GL2 x GL1";
        if (name == ParName::Q1) {
            d.modulus = "|g1|^-2 |det(g2)|";
            d.modulus_exponents = {Rat(-2), Rat(1)};
        } else {
            d.modulus = "|g1|^2 |det(g2)|^-1";
            d.modulus_exponents = {Rat(2), Rat(-1)};
        }
        return d;
    }
    if (group == Group::GSp4 && (name == ParName::Q1 || name == ParName::Q2)) {
        d.levi = name == ParName::Q1 ? "GL1 x GL2 (Siegel-opposite)" : "GL2 x GL1";
        if (name == ParName::Q1) {
            d.modulus = "|g1|^-4 |det(g2)|^2";
            d.modulus_exponents = {Rat(-4), Rat(2)};
        } else {
            d.modulus = "|g1|^3 |det(g2)|^-3";
            d.modulus_exponents = {Rat(3), Rat(-3)};
        }
        return d;
    }
    throw ParabolicNotFound("no parabolic " + to_string(name) + " in " + to_string(group));
}

}  // namespace g2theta

#endif
