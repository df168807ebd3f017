#ifndef G2THETA_LITERAL_HPP
#define G2THETA_LITERAL_HPP

// Text grammar for representation and parameter literals.  parse_rep_literal
// inverts the to_string printers: print(parse(s)) == s for every canonical
// form.  Errors carry the offending position.

#include <g2theta/langlands.hpp>
#include <g2theta/reps.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace g2theta {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

using RepLiteral =
    std::variant<GL2Rep, GL3Rep, PGL3ExtRep, PDxRep, G2Rep, PGSp6Rep, LParamG2>;

inline std::string to_string(const RepLiteral& lit) {
    return std::visit([](const auto& r) { return to_string(r); }, lit);
}

namespace detail {

class LiteralParser {
  public:
    LiteralParser(std::string_view src, RegistryPtr reg) : src_(src), reg_(std::move(reg)) {}

    RepLiteral parse_top() {
        RepLiteral out = dispatch();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return out;
    }

  private:
    std::string_view src_;
    size_t pos_ = 0;
    RegistryPtr reg_;

    [[noreturn]] void fail(const std::string& m) const { throw ParseError(pos_, m); }

    void skip_ws() {
        while (pos_ < src_.size() && src_[pos_] == ' ') ++pos_;
    }
    bool consume(std::string_view lit) {
        if (src_.substr(pos_).substr(0, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
        skip_ws();
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    // A token ends at the first ';' ',' ')' ']' or '@' outside nested
    // parentheses/brackets (labels may themselves contain printed literals).
    std::string token() {
        skip_ws();
        size_t start = pos_;
        int depth = 0;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '(' || c == '[') ++depth;
            else if (depth > 0 && (c == ')' || c == ']')) --depth;
            else if (depth == 0 && (c == ';' || c == ',' || c == ')' || c == ']' || c == '@'))
                break;
            ++pos_;
        }
        size_t end = pos_;
        while (end > start && src_[end - 1] == ' ') --end;
        if (end == start) fail("expected a token");
        return std::string(src_.substr(start, end - start));
    }

    Rat rational() {
        size_t at = pos_;
        std::string t = token();
        try {
            return rat_from_string(t);
        } catch (const std::exception&) {
            throw ParseError(at, "bad rational literal: " + t);
        }
    }

    long long integer() {
        size_t at = pos_;
        std::string t = token();
        try {
            return std::stoll(t);
        } catch (const std::exception&) {
            throw ParseError(at, "bad integer literal: " + t);
        }
    }

    // characters: '1', or '*'-joined factors `name`, `name^k`, `|.|^r`
    ExponentChar char_from(const std::string& tok, size_t at) {
        ExponentChar out = ExponentChar::trivial(reg_);
        size_t i = 0;
        while (i < tok.size()) {
            size_t j = i;
            // a factor ends at a '*' that does not belong to a later factor
            while (j < tok.size() && tok[j] != '*') ++j;
            std::string f = tok.substr(i, j - i);
            if (f.empty()) throw ParseError(at + i, "empty character factor");
            if (f == "1") {
                // trivial factor
            } else if (f.rfind("|.|^", 0) == 0) {
                try {
                    out = char_mul(out, ExponentChar::norm_power(reg_, rat_from_string(f.substr(4))));
                } catch (const std::exception&) {
                    throw ParseError(at + i, "bad exponent in " + f);
                }
            } else {
                std::string name = f;
                long long power = 1;
                auto caret = f.find('^');
                if (caret != std::string::npos) {
                    name = f.substr(0, caret);
                    try {
                        power = std::stoll(f.substr(caret + 1));
                    } catch (const std::exception&) {
                        throw ParseError(at + i, "bad symbol power in " + f);
                    }
                }
                if (!reg_->has(name))
                    throw ParseError(at + i, "unknown character symbol '" + name +
                                                 "' (not declared in the registry)");
                out = char_mul(out, ExponentChar::symbol(reg_, name, power));
            }
            i = j + (j < tok.size() ? 1 : 0);
        }
        return out;
    }

    ExponentChar character() {
        size_t at = pos_;
        return char_from(token(), at);
    }

    std::optional<Rat> opt_twist() {
        if (!peek_is('@')) return std::nullopt;
        ++pos_;
        return rational();
    }

    // -- GL2 ----------------------------------------------------------------
    GL2Rep gl2() {
        skip_ws();
        GL2Rep r;
        if (consume("sc:")) {
            r = gl2_sc(token(), false, ExponentChar::trivial(reg_));
        } else if (consume("sc(")) {
            std::string label = token();
            bool sd = false;
            ExponentChar central = ExponentChar::trivial(reg_);
            std::optional<bool> dihedral;
            while (peek_is(';')) {
                expect(';');
                size_t at = pos_;
                std::string opt = token();
                if (opt == "sd") sd = true;
                else if (opt == "S3") dihedral = true;
                else if (opt == "nS3") dihedral = false;
                else if (opt.rfind("w=", 0) == 0) central = char_from(opt.substr(2), at + 2);
                else throw ParseError(at, "unknown sc option: " + opt);
            }
            expect(')');
            r = gl2_sc(std::move(label), sd, std::move(central), dihedral);
        } else if (consume("st(")) {
            ExponentChar chi = character();
            expect(')');
            r = gl2_st(std::move(chi));
        } else if (consume("pi(")) {
            ExponentChar c1 = character();
            expect(';');
            ExponentChar c2 = character();
            expect(')');
            r = gl2_ps(std::move(c1), std::move(c2));
        } else if (consume("one(")) {
            ExponentChar chi = character();
            expect(')');
            r = gl2_one(std::move(chi));
        } else {
            fail("expected a GL2 literal (sc/st/pi/one)");
        }
        if (auto t = opt_twist()) r.twist = *t;
        return r;
    }

    // -- GL3 ----------------------------------------------------------------
    GL3Rep gl3() {
        skip_ws();
        GL3Rep r;
        if (consume("sc:")) {
            r = gl3_sc(token(), false);
        } else if (consume("sc(")) {
            std::string label = token();
            expect(';');
            size_t at = pos_;
            if (token() != "sd") throw ParseError(at, "expected 'sd'");
            expect(')');
            r = gl3_sc(std::move(label), true);
        } else if (consume("st3(")) {
            ExponentChar chi = character();
            expect(')');
            r = gl3_st(std::move(chi));
        } else if (consume("sum(")) {
            GL2Rep sigma = gl2();
            expect(')');
            r = gl3_from_gl2(std::move(sigma));
        } else if (consume("tau(")) {
            ExponentChar c1 = character();
            expect(';');
            ExponentChar c2 = character();
            expect(';');
            ExponentChar c3 = character();
            expect(')');
            r = gl3_ps({std::move(c1), std::move(c2), std::move(c3)});
        } else if (consume("jb3(")) {
            ExponentChar c1 = character();
            expect(';');
            ExponentChar c2 = character();
            expect(';');
            ExponentChar c3 = character();
            expect(')');
            r = gl3_jb({std::move(c1), std::move(c2), std::move(c3)});
        } else {
            fail("expected a GL3 literal (sc/st3/sum/tau/jb3)");
        }
        if (auto t = opt_twist()) r.twist = *t;
        return r;
    }

    PGL3ExtRep ext() {
        if (!consume("ext(")) fail("expected ext(...)");
        GL3Rep base = gl3();
        expect(',');
        size_t at = pos_;
        std::string tag = token();
        expect(')');
        Ext e;
        if (tag == "ind") e = Ext::InducedPlus;
        else if (tag == "+") e = Ext::Plus;
        else if (tag == "-") e = Ext::Minus;
        else throw ParseError(at, "expected extension tag ind/+/-");
        return pgl3_ext(std::move(base), e);
    }

    PDxRep pdx() {
        if (consume("pd:1")) return pd_trivial();
        if (consume("pd_cubic(")) {
            ExponentChar chi = character();
            expect(';');
            long long p = integer();
            expect(')');
            return pd_unram_cubic(std::move(chi), static_cast<int>(p));
        }
        if (consume("pd(")) {
            std::string label = token();
            expect(';');
            size_t at = pos_;
            std::string h = token();
            expect(')');
            Heart heart;
            if (h == "heart=yes") heart = Heart::Yes;
            else if (h == "heart=no") heart = Heart::No;
            else if (h == "heart=unknown") heart = Heart::Unknown;
            else throw ParseError(at, "expected heart=yes/no/unknown");
            return pd_other(std::move(label), heart,
                            heart == Heart::Unknown ? PContext::Three : PContext::Other);
        }
        fail("expected a PD^x literal");
    }

    GSp4Sc sp4() {
        if (!consume("sp4sc(")) fail("expected sp4sc(...)");
        GSp4Sc out;
        out.label = token();
        while (peek_is(';')) {
            expect(';');
            size_t at = pos_;
            std::string opt = token();
            if (opt == "std1") out.std_contains_trivial = true;
            else if (opt == "SK") out.saito_kurokawa = true;
            else throw ParseError(at, "unknown sp4sc option: " + opt);
        }
        expect(')');
        return out;
    }

    bool gen_flag() {
        expect(',');
        size_t at = pos_;
        std::string t = token();
        if (t == "+") return true;
        if (t == "-") return false;
        throw ParseError(at, "expected summand sign +/-");
    }

    // -- G2 -----------------------------------------------------------------
    G2Rep g2() {
        skip_ws();
        if (consume("St_G2")) return g2_st();
        if (consume("1_G2")) return g2_trivial();
        if (consume("JP(")) {
            Rat s = rational();
            expect(';');
            GL2Rep tau = gl2();
            expect(')');
            return g2_jp(s, std::move(tau));
        }
        if (consume("JQ(")) {
            Rat s = rational();
            expect(';');
            GL2Rep tau = gl2();
            expect(')');
            return g2_jq(s, std::move(tau));
        }
        if (consume("JB(")) {
            ExponentChar c1 = character();
            expect(';');
            ExponentChar c2 = character();
            expect(')');
            return g2_jb({std::move(c1), std::move(c2)});
        }
        if (consume("delta_P(")) {
            GL2Rep tau = gl2();
            expect(')');
            return g2_delta_p(std::move(tau));
        }
        if (consume("delta_Q(")) {
            GL2Rep tau = gl2();
            expect(')');
            return g2_delta_q(std::move(tau));
        }
        if (consume("pi_gen[")) {
            skip_ws();
            if (src_.substr(pos_).substr(0, 2) == "sc") {
                GL2Rep tau = gl2();
                expect(']');
                return g2_pi_gen_dihedral(std::move(tau));
            }
            size_t at = pos_;
            ExponentChar chi = character();
            expect(']');
            if (chi.is_trivial()) return g2_pi_gen_1();
            if (chi.is_quadratic_nontrivial()) return g2_pi_gen_quad(std::move(chi));
            if (chi.is_cubic_nontrivial()) return g2_pi_gen_cubic(std::move(chi));
            throw ParseError(at, "pi_gen character must be trivial, quadratic, or cubic");
        }
        if (consume("pi_deg[")) {
            size_t at = pos_;
            if (token() != "1") throw ParseError(at, "expected pi_deg[1]");
            expect(']');
            return g2_pi_deg_1();
        }
        if (consume("pi_sc[")) {
            size_t at = pos_;
            std::string t = token();
            expect(']');
            if (t == "1") return g2_pi_sc(PiScLabel::One);
            if (t == "-1") return g2_pi_sc(PiScLabel::MinusOne);
            if (t == "w") return g2_pi_sc(PiScLabel::Omega);
            if (t == "w2") return g2_pi_sc(PiScLabel::OmegaSq);
            throw ParseError(at, "expected pi_sc label 1/-1/w/w2");
        }
        if (consume("IP(")) {
            GL2Rep tau = gl2();
            bool gen = gen_flag();
            expect(')');
            return g2_ip_summand(std::move(tau), gen);
        }
        if (consume("IQ(")) {
            GL2Rep tau = gl2();
            bool gen = gen_flag();
            expect(')');
            return g2_iq_summand(std::move(tau), gen);
        }
        if (consume("IB(")) {
            ExponentChar c1 = character();
            expect(';');
            ExponentChar c2 = character();
            bool gen = gen_flag();
            expect(')');
            return g2_ib_summand({std::move(c1), std::move(c2)}, gen);
        }
        if (consume("sc_fromD(")) {
            PDxRep pd = pdx();
            expect(')');
            return g2_sc_from_pd(std::move(pd));
        }
        if (consume("sc_fromB(")) {
            PGL3ExtRep e = ext();
            expect(')');
            return g2_sc_from_b(std::move(e));
        }
        if (consume("sc_G2(")) {
            std::string label = token();
            expect(';');
            size_t at = pos_;
            std::string g = token();
            bool generic;
            if (g == "gen") generic = true;
            else if (g == "deg") generic = false;
            else throw ParseError(at, "expected gen/deg");
            std::optional<GL2Rep> rho;
            if (peek_is(';')) {
                expect(';');
                if (!consume("rho=")) fail("expected rho=");
                rho = gl2();
            }
            expect(')');
            return g2_sc_abstract(std::move(label), generic, std::move(rho));
        }
        fail("expected a G2 representation literal");
    }

    // -- PGSp6 --------------------------------------------------------------
    PGSp6Rep p6() {
        skip_ws();
        if (consume("St_P6")) return p6_st();
        if (consume("J2(")) {
            Rat s = rational();
            expect(';');
            GL2Rep tau = gl2();
            expect(')');
            return p6_j2(s, std::move(tau));
        }
        if (consume("J13(")) {
            Rat s = rational();
            expect(';');
            GL2Rep tau = gl2();
            expect(')');
            return PGSp6Rep{P6J13{s, std::move(tau)}};
        }
        if (consume("J1(")) {
            Rat s = rational();
            expect(';');
            GSp4Sc tau = sp4();
            expect(')');
            return PGSp6Rep{P6J1{s, std::move(tau)}};
        }
        if (consume("delta_2(")) {
            GL2Rep tau = gl2();
            expect(')');
            return p6_delta2(std::move(tau));
        }
        if (consume("delta_13(")) {
            GL2Rep tau = gl2();
            expect(')');
            return p6_delta13(std::move(tau));
        }
        if (consume("delta_1(")) {
            GSp4Sc tau = sp4();
            expect(')');
            return p6_delta1(std::move(tau));
        }
        if (consume("sigma_gen[")) {
            skip_ws();
            if (src_.substr(pos_).substr(0, 2) == "sc") {
                GL2Rep tau = gl2();
                expect(']');
                return p6_sigma_gen_tau(std::move(tau));
            }
            ExponentChar chi = character();
            expect(']');
            return p6_sigma_gen_chi(std::move(chi));
        }
        if (consume("I2(")) {
            GL2Rep tau = gl2();
            bool gen = gen_flag();
            expect(')');
            return p6_i2_summand(std::move(tau), gen);
        }
        if (consume("I13(")) {
            GL2Rep tau = gl2();
            bool gen = gen_flag();
            expect(')');
            return p6_i13_summand(std::move(tau), gen);
        }
        if (consume("I3(")) {
            GL3Rep tau = gl3();
            if (peek_is(',')) {
                bool gen = gen_flag();
                expect(')');
                return PGSp6Rep{P6I3Summand{std::move(tau), gen}};
            }
            expect(')');
            return PGSp6Rep{P6I3Irred{std::move(tau)}};
        }
        if (consume("sc_P6(")) {
            std::string label = token();
            expect(';');
            size_t at = pos_;
            std::string g = token();
            expect(')');
            if (g == "gen") return p6_sc_abstract(std::move(label), true);
            if (g == "deg") return p6_sc_abstract(std::move(label), false);
            throw ParseError(at, "expected gen/deg");
        }
        if (consume("unresolved(")) {
            std::string note = token();
            expect(')');
            return p6_unresolved(std::move(note));
        }
        fail("expected a PGSp6 representation literal");
    }

    // -- L-parameters -------------------------------------------------------
    LParamG2 param() {
        if (consume("phi_prin")) return param_principal();
        if (consume("phi_sub(")) {
            skip_ws();
            LParamG2 out;
            if (src_.substr(pos_).substr(0, 2) == "sc") {
                out = param_subregular_s3(gl2());
            } else {
                size_t at = pos_;
                ExponentChar chi = character();
                if (chi.is_trivial()) out = param_subregular_trivial();
                else if (chi.is_quadratic_nontrivial()) out = param_subregular_mu2(std::move(chi));
                else if (chi.is_cubic_nontrivial()) out = param_subregular_mu3(std::move(chi));
                else throw ParseError(at, "subregular character must have order 1, 2, or 3");
            }
            expect(')');
            return out;
        }
        if (consume("phi_short(")) {
            GL2Rep tau = gl2();
            expect(')');
            return param_short_root(std::move(tau));
        }
        if (consume("phi_long(")) {
            GL2Rep tau = gl2();
            expect(')');
            return param_long_root(std::move(tau));
        }
        if (consume("phi_cusp(")) {
            std::string label = token();
            expect(')');
            return param_cuspidal(std::move(label));
        }
        if (consume("phi_levi(")) {
            size_t at = pos_;
            std::string l = token();
            LeviName levi;
            if (l == "M") levi = LeviName::M;
            else if (l == "L") levi = LeviName::L;
            else if (l == "T") levi = LeviName::T;
            else throw ParseError(at, "expected Levi name M/L/T");
            expect(';');
            ParamLevi out;
            out.levi = levi;
            if (levi == LeviName::T) {
                ExponentChar c1 = character();
                expect(';');
                ExponentChar c2 = character();
                out.levi_param = TorusCharG2{std::move(c1), std::move(c2)};
            } else {
                out.levi_param = gl2();
            }
            expect(';');
            size_t bt = pos_;
            std::string b = token();
            if (b == "bounded") out.bounded = true;
            else if (b == "unbounded") out.bounded = false;
            else throw ParseError(bt, "expected bounded/unbounded");
            expect(')');
            return LParamG2{std::move(out)};
        }
        fail("expected a parameter literal");
    }

    RepLiteral dispatch() {
        skip_ws();
        std::string_view rest = src_.substr(pos_);
        auto starts = [&](std::string_view p) { return rest.substr(0, p.size()) == p; };

        if (starts("phi_")) return param();
        if (starts("pd")) return pdx();
        if (starts("ext(")) return ext();
        if (starts("St_G2") || starts("1_G2") || starts("JP(") || starts("JQ(") ||
            starts("JB(") || starts("delta_P(") || starts("delta_Q(") || starts("pi_gen[") ||
            starts("pi_deg[") || starts("pi_sc[") || starts("IP(") || starts("IQ(") ||
            starts("IB(") || starts("sc_fromD(") || starts("sc_fromB(") || starts("sc_G2("))
            return g2();
        if (starts("St_P6") || starts("J2(") || starts("J13(") || starts("J1(") ||
            starts("delta_2(") || starts("delta_13(") || starts("delta_1(") ||
            starts("sigma_gen[") || starts("I2(") || starts("I13(") || starts("I3(") ||
            starts("sc_P6(") || starts("unresolved("))
            return p6();
        if (starts("st3(") || starts("sum(") || starts("tau(") || starts("jb3(")) return gl3();
        // bare sc data default to GL2; GL3 supercuspidals appear inside
        // ext(...)/I3(...)/sum(...) where the context decides
        if (starts("st(") || starts("pi(") || starts("one(") || starts("sc:") || starts("sc("))
            return gl2();
        fail("unrecognized literal");
    }
};

}  // namespace detail

inline RepLiteral parse_rep_literal(std::string_view text,
                                    RegistryPtr reg = Registry::with_defaults()) {
    return detail::LiteralParser(text, std::move(reg)).parse_top();
}

}  // namespace g2theta

#endif
