// Exact rational scalars. All arithmetic in this library is over Q with no
// rounding anywhere; values are kept in lowest terms with positive denominator
// (boost::multiprecision::cpp_rational guarantees both).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "grpdfrob/error.hpp"

namespace grpdfrob {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_zero(const Rat& r) { return r.is_zero(); }

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Accepts "p" or "p/q"; q may carry a sign, the result is canonicalized.
inline Rat rat_parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) throw Error("ParseError", "empty integer in rational literal");
        bool negative = part[0] == '-';
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw Error("ParseError", "sign without digits in rational literal");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw Error("ParseError", "bad character in rational literal: '" + std::string(part) + "'");
        BigInt magnitude{std::string(part.substr(start))};
        return negative ? -magnitude : magnitude;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("ParseError", "zero denominator in rational literal");
    return Rat(num) / Rat(den);
}

}  // namespace grpdfrob
