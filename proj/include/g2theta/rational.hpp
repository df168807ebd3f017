#ifndef G2THETA_RATIONAL_HPP
#define G2THETA_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace g2theta {

using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += "/" + std::to_string(r.denominator());
    }
    return s;
}

// Accepts "n", "-n", "n/d" with optional sign on the numerator.
inline Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(std::stoll(text));
        }
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

}  // namespace g2theta

#endif
