// rational.hpp - exact rational arithmetic and number parsing.
//
// Accepted textual forms: "3/40" (fraction), "0.125" (terminating decimal),
// "2" (integer).  Values are normalised, so "2/10", "0.2" and "1/5" denote
// the same Rational; serialisation always emits the reduced fraction.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "core.hpp"

namespace razors {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() {
        return std::invalid_argument("cannot parse '" + text +
                                     "' as a rational (expected p/q, a decimal, or an integer)");
    };
    std::string s = text;
    // trim
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw bad();
    const auto e = s.find_last_not_of(" \t\r\n");
    s = s.substr(b, e - b + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s = s.substr(1);
        if (s.empty()) throw bad();
    }

    const auto digits_only = [&](const std::string& part) {
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };

    Rational value;
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw bad();
        const BigInt q(den);
        if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        value = Rational(BigInt(num), q);
    } else if (const auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (!digits_only(whole.empty() ? "0" : whole) || !digits_only(frac)) throw bad();
        BigInt scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        value = Rational(BigInt(whole.empty() ? "0" : whole) * scale + BigInt(frac), scale);
    } else {
        if (!digits_only(s)) throw bad();
        value = Rational(BigInt(s));
    }
    return negative ? -value : value;
}

inline std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace razors
