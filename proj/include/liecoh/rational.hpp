#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "liecoh/error.hpp"

namespace liecoh {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Text form "p" or "p/q", reduced, q > 0.
inline std::string to_string(const Rational& r) {
    return r.get_str(10);
}

// Accepts "p", "p/q" with optional leading '-' on p. The denominator must be
// positive; non-reduced input is canonicalized.
inline Rational parse_rational(std::string_view text) {
    require(!text.empty(), "empty rational");
    auto slash = text.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
        require(!part.empty(), "malformed rational '" + std::string(text) + "'");
        std::size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
        require(start < part.size(), "malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            require(part[i] >= '0' && part[i] <= '9',
                    "malformed rational '" + std::string(text) + "'");
    };
    std::string num(text.substr(0, slash));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    check_int(text.substr(0, slash), true);
    Rational out;
    if (slash == std::string_view::npos) {
        out = Rational(Integer(num, 10));
    } else {
        auto den_text = text.substr(slash + 1);
        check_int(den_text, false);
        Integer den(std::string(den_text), 10);
        require(den != 0, "zero denominator in '" + std::string(text) + "'");
        out = Rational(Integer(num, 10), den);
        out.canonicalize();
    }
    return out;
}

} // namespace liecoh
