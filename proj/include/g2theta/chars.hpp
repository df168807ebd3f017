#ifndef G2THETA_CHARS_HPP
#define G2THETA_CHARS_HPP

// Exact arithmetic for characters of F^x and of the maximal tori of G2 and
// PGSp6.  A character is a product of declared finite-order symbols and an
// unramified part |.|^s with s rational.

#include "rational.hpp"
#include "rootsys.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2theta {

struct CharSymbol {
    std::string name;
    int order = 1;
    bool ramified = false;
    friend bool operator==(const CharSymbol&, const CharSymbol&) = default;
};

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Registry {
  public:
    Registry() { declare({"1", 1, false}); }

    void declare(const CharSymbol& sym) {
        if (sym.order < 1) throw RegistryError("symbol order must be >= 1: " + sym.name);
        if (sym.name == "1" && sym.order != 1)
            throw RegistryError("the name \"1\" is reserved for the trivial symbol");
        auto it = by_name_.find(sym.name);
        if (it != by_name_.end()) {
            if (!(symbols_[it->second] == sym))
                throw RegistryError("conflicting redeclaration of symbol " + sym.name);
            return;
        }
        by_name_[sym.name] = symbols_.size();
        symbols_.push_back(sym);
    }

    bool has(const std::string& name) const { return by_name_.count(name) != 0; }

    const CharSymbol& get(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw RegistryError("unknown character symbol: " + name);
        return symbols_[it->second];
    }

    const std::vector<CharSymbol>& symbols() const { return symbols_; }

    friend bool operator==(const Registry& x, const Registry& y) {
        return x.symbols_ == y.symbols_;
    }

    // One unramified and one ramified symbol of each of the orders 2 and 3.
    static std::shared_ptr<const Registry> with_defaults() {
        auto reg = std::make_shared<Registry>();
        reg->declare({"chi2u", 2, false});
        reg->declare({"chi2r", 2, true});
        reg->declare({"chi3u", 3, false});
        reg->declare({"chi3r", 3, true});
        return reg;
    }

    // Line format: `<name> <order> <ramified|unramified>`; '#' starts a comment.
    static std::shared_ptr<const Registry> parse(std::istream& in) {
        auto reg = std::make_shared<Registry>();
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string name, ram;
            int order = 0;
            if (!(ls >> name)) continue;  // blank line
            if (!(ls >> order >> ram) || (ram != "ramified" && ram != "unramified"))
                throw RegistryError("registry line " + std::to_string(lineno) +
                                    ": expected `<name> <order> <ramified|unramified>`");
            std::string extra;
            if (ls >> extra)
                throw RegistryError("registry line " + std::to_string(lineno) +
                                    ": trailing junk: " + extra);
            reg->declare({name, order, ram == "ramified"});
        }
        return reg;
    }

    static std::shared_ptr<const Registry> load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw RegistryError("cannot open registry file: " + path);
        return parse(in);
    }

  private:
    std::vector<CharSymbol> symbols_;
    std::map<std::string, size_t> by_name_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

class ExponentChar {
  public:
    ExponentChar() : reg_(Registry::with_defaults()) {}

    static ExponentChar trivial(RegistryPtr reg) { return ExponentChar(std::move(reg)); }

    // |.|^s
    static ExponentChar norm_power(RegistryPtr reg, const Rat& s) {
        ExponentChar c(std::move(reg));
        c.exponent_ = s;
        return c;
    }

    static ExponentChar symbol(RegistryPtr reg, const std::string& name, long long power = 1) {
        ExponentChar c(std::move(reg));
        const CharSymbol& sym = c.reg_->get(name);
        long long residue = ((power % sym.order) + sym.order) % sym.order;
        if (residue != 0) c.torsion_[name] = static_cast<int>(residue);
        return c;
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::map<std::string, int>& torsion() const { return torsion_; }
    const Rat& exponent() const { return exponent_; }

    bool is_unitary() const { return exponent_ == Rat(0); }
    bool is_trivial() const { return is_unitary() && torsion_.empty(); }

    // Multiplicative order; 0 means infinite (nonzero |.|-exponent).
    long long order() const {
        if (!is_unitary()) return 0;
        long long n = 1;
        for (const auto& [name, res] : torsion_) {
            int ord = reg_->get(name).order;
            long long o = ord / std::gcd(static_cast<long long>(res), static_cast<long long>(ord));
            n = std::lcm(n, o);
        }
        return n;
    }

    bool is_quadratic_nontrivial() const { return order() == 2; }
    bool is_cubic_nontrivial() const { return order() == 3; }

    bool ramified() const {
        for (const auto& [name, res] : torsion_)
            if (reg_->get(name).ramified) return true;
        return false;
    }

    friend ExponentChar char_mul(const ExponentChar& a, const ExponentChar& b) {
        if (!(*a.reg_ == *b.reg_))
            throw RegistryError("character operands come from different registries");
        ExponentChar c(a.reg_);
        c.exponent_ = a.exponent_ + b.exponent_;
        c.torsion_ = a.torsion_;
        for (const auto& [name, res] : b.torsion_) {
            int ord = a.reg_->get(name).order;
            int sum = (c.torsion_[name] + res) % ord;
            if (sum == 0)
                c.torsion_.erase(name);
            else
                c.torsion_[name] = sum;
        }
        return c;
    }

    friend ExponentChar char_inv(const ExponentChar& a) {
        ExponentChar c(a.reg_);
        c.exponent_ = -a.exponent_;
        for (const auto& [name, res] : a.torsion_)
            c.torsion_[name] = a.reg_->get(name).order - res;
        return c;
    }

    friend ExponentChar char_pow(const ExponentChar& a, long long n) {
        ExponentChar c(a.reg_);
        c.exponent_ = a.exponent_ * Rat(n);
        for (const auto& [name, res] : a.torsion_) {
            int ord = a.reg_->get(name).order;
            long long r = ((static_cast<long long>(res) * n) % ord + ord) % ord;
            if (r != 0) c.torsion_[name] = static_cast<int>(r);
        }
        return c;
    }

    // Identity on values (canonical form is maintained by construction).
    ExponentChar normalized() const { return *this; }

    friend bool operator==(const ExponentChar& x, const ExponentChar& y) {
        return x.torsion_ == y.torsion_ && x.exponent_ == y.exponent_;
    }

    friend bool operator<(const ExponentChar& x, const ExponentChar& y) {
        if (x.torsion_ != y.torsion_) return x.torsion_ < y.torsion_;
        return x.exponent_ < y.exponent_;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& [name, res] : torsion_) {
            if (!out.empty()) out += "*";
            out += name;
            if (res != 1) out += "^" + std::to_string(res);
        }
        if (exponent_ != Rat(0)) {
            if (!out.empty()) out += "*";
            out += "|.|^" + rat_to_string(exponent_);
        }
        return out.empty() ? "1" : out;
    }

  private:
    explicit ExponentChar(RegistryPtr reg) : reg_(std::move(reg)) {
        if (!reg_) throw RegistryError("null registry");
    }

    RegistryPtr reg_;
    std::map<std::string, int> torsion_;  // symbol name -> residue in (0, order)
    Rat exponent_{0};
};

// Character of the G2 maximal torus in the coordinates
// t |-> ((2a+b)(t), (a+b)(t)).
struct TorusCharG2 {
    ExponentChar c1, c2;
    friend bool operator==(const TorusCharG2&, const TorusCharG2&) = default;
    friend bool operator<(const TorusCharG2& x, const TorusCharG2& y) {
        if (!(x.c1 == y.c1)) return x.c1 < y.c1;
        return x.c2 < y.c2;
    }
};

// Character (t1,t2,t3) |-> x1(t1) x2(t2) x3(t3) of the Siegel Levi torus.
struct TorusCharC3 {
    ExponentChar x1, x2, x3;
    friend bool operator==(const TorusCharC3&, const TorusCharC3&) = default;
};

// chi composed with a coroot: chi = (c1, c2) against gamma^vee gives
// c1^<2a+b, gamma^vee> * c2^<a+b, gamma^vee>.
inline ExponentChar torus_char_on_coroot(const TorusCharG2& chi, const RootVecG2& gamma) {
    long long p1 = g2_coroot_pairing({2, 1}, gamma);
    long long p2 = g2_coroot_pairing({1, 1}, gamma);
    return char_mul(char_pow(chi.c1, p1), char_pow(chi.c2, p2));
}

// (chi o beta1^vee, chi o beta2^vee, chi o beta3^vee) for the canonical
// long-root triple; the product of the three outputs is trivial.
inline std::array<ExponentChar, 3> borel_char_triple(const TorusCharG2& chi) {
    auto triple = long_root_triple();
    return {torus_char_on_coroot(chi, triple[0]), torus_char_on_coroot(chi, triple[1]),
            torus_char_on_coroot(chi, triple[2])};
}

// Weyl action on torus characters: (w.chi)(t) = chi(w^{-1} t).  Writing
// w(l1) = x1 l1 + y1 l2 and w(l2) = x2 l1 + y2 l2 for the coordinate weights
// l1 = 2a+b, l2 = a+b, the result has coordinates (c1^x1 c2^x2, c1^y1 c2^y2).
inline TorusCharG2 weyl_apply(const MatG2& w, const TorusCharG2& chi) {
    RootVecG2 l1{2, 1}, l2{1, 1};
    RootVecG2 w1 = w.apply(l1), w2 = w.apply(l2);
    // (u, v) in alpha-beta coordinates corresponds to (u - v) l1 + (2v - u) l2.
    auto coords = [](const RootVecG2& r) {
        return std::pair<long long, long long>{r.a - r.b, 2 * r.b - r.a};
    };
    auto [x1, y1] = coords(w1);
    auto [x2, y2] = coords(w2);
    ExponentChar c1p = char_mul(char_pow(chi.c1, x1), char_pow(chi.c2, x2));
    ExponentChar c2p = char_mul(char_pow(chi.c1, y1), char_pow(chi.c2, y2));
    return {c1p, c2p};
}

}  // namespace g2theta

#endif
