#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "stronggeo/errors.hpp"

namespace stronggeo {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// invariant we rely on everywhere: denominator > 0, fraction reduced,
// equality is value equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign : int {
    negative = -1,
    zero = 0,
    positive = 1,
};

inline Sign sign_of(const Rational& x) {
    int s = x.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(const Integer& x) {
    int s = x.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_from_int(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign operator*(Sign a, Sign b) { return sign_from_int(to_int(a) * to_int(b)); }
inline Sign operator-(Sign a) { return sign_from_int(-to_int(a)); }

inline std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "-1";
        case Sign::positive: return "+1";
        default: return "0";
    }
}

// Parses "-?digits(/digits)?". Throws SyntaxError with the given position on
// malformed input; line/column are 1-based and refer to the token start.
inline Rational parse_rational(const std::string& token, int line = 0, int column = 0) {
    std::size_t i = 0;
    bool negative = false;
    if (i < token.size() && (token[i] == '-' || token[i] == '+')) {
        negative = token[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
    if (i == num_begin) throw SyntaxError(line, column, "rational number, got '" + token + "'");
    Integer num(token.substr(num_begin, i - num_begin));
    Integer den = 1;
    if (i < token.size()) {
        if (token[i] != '/') throw SyntaxError(line, column, "rational number, got '" + token + "'");
        ++i;
        std::size_t den_begin = i;
        while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
        if (i == den_begin || i != token.size())
            throw SyntaxError(line, column, "rational number, got '" + token + "'");
        den = Integer(token.substr(den_begin));
        if (den == 0) throw SyntaxError(line, column, "nonzero denominator in '" + token + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

inline std::string format_rational(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

}  // namespace stronggeo
