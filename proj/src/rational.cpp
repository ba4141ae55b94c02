#include "bicoeff/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace bicoeff {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
    throw std::invalid_argument("not a rational or decimal number: '" + std::string(text) + "'");
}

// Decimal digit string -> BigInt. Avoids BigInt's string constructor, which
// treats leading zeros as an octal prefix.
bool parse_digits(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    out = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        out *= 10;
        out += ch - '0';
    }
    return true;
}

bool parse_integer(std::string_view s, BigInt& out) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!parse_digits(s, out)) return false;
    if (negative) out = -out;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) bad_number(text);

    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt n, d;
        if (!parse_integer(std::string_view(s).substr(0, slash), n) ||
            !parse_integer(std::string_view(s).substr(slash + 1), d))
            bad_number(text);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational(n, d);
    }

    // Decimal form with optional exponent: sign digits [. digits] [e sign digits]
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = (s[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool saw_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        digits += s[i];
        saw_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            digits += s[i];
            ++frac_digits;
            saw_digit = true;
        }
    }
    if (!saw_digit) bad_number(text);

    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i >= s.size()) bad_number(text);
        char* end = nullptr;
        exponent = std::strtol(s.c_str() + i, &end, 10);
        if (end != s.c_str() + s.size()) bad_number(text);
    } else if (i != s.size()) {
        bad_number(text);
    }

    BigInt mantissa;
    if (!parse_digits(digits, mantissa)) bad_number(text);
    if (negative) mantissa = -mantissa;

    const long ten_power = exponent - frac_digits;
    BigInt scale = 1;
    for (long k = 0; k < std::labs(ten_power); ++k) scale *= 10;
    Rational value(mantissa);
    if (ten_power >= 0)
        value *= Rational(scale);
    else
        value /= Rational(scale);
    return value;
}

}  // namespace bicoeff
