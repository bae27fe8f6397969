#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagpoly {

// Exact arbitrary-precision rational. The backend keeps values reduced to
// lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_str(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt rat_floor(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline BigInt rat_ceil(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

inline std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

}  // namespace flagpoly
