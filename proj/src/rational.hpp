#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace listlab {

// Exact arithmetic for distribution weights and competitive ratios.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Decimal rendering is presentation-only; all comparisons stay exact.
// Rounds half away from zero at `digits` places after the point.
inline std::string decimal_string(const Rational& r, int digits = 12) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) ++q;
    BigInt whole = q / scale;
    BigInt frac = q % scale;
    std::string frac_str = frac.str();
    frac_str.insert(frac_str.begin(), digits - static_cast<int>(frac_str.size()), '0');
    std::string out = negative && q != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        out += '.';
        out += frac_str;
    }
    return out;
}

}  // namespace listlab
