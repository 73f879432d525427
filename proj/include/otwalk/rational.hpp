#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace otwalk {

using BigInt = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return numerator(q); }
inline BigInt rational_den(const Rational& q) { return denominator(q); }

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& q) { return numerator(q).sign(); }

// Bit length of |v| (0 for v = 0).
inline std::size_t msb_bits(const BigInt& v) {
    if (v.is_zero()) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

// Accepts "num/den", plain integers ("-3") and plain decimal strings ("1.25"),
// all converted exactly. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    }
    if (s.empty()) return std::nullopt;

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = (s[pos] == '-');
        ++pos;
    }
    auto read_digits = [&](std::string& out) {
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') out.push_back(s[pos++]);
    };
    std::string head;
    read_digits(head);

    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string tail;
        bool den_negative = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            den_negative = (s[pos] == '-');
            ++pos;
        }
        read_digits(tail);
        if (head.empty() || tail.empty() || pos != s.size()) return std::nullopt;
        BigInt den(tail);
        if (den == 0) return std::nullopt;
        Rational q(BigInt(head), den);
        if (negative != den_negative) q = -q;
        return q;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::string frac;
        read_digits(frac);
        if ((head.empty() && frac.empty()) || pos != s.size()) return std::nullopt;
        if (head.empty()) head = "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt numer = BigInt(head) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
        Rational q(numer, scale);
        if (negative) q = -q;
        return q;
    }
    if (head.empty() || pos != s.size()) return std::nullopt;
    Rational q{BigInt(head)};
    if (negative) q = -q;
    return q;
}

// Always emits "num/den" (e.g. "3/1", "-2/7").
inline std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Nearest rational with denominator 2^bits; ties round toward +infinity.
inline Rational round_dyadic(const Rational& q, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    BigInt num = numerator(q) * scale * 2 + denominator(q);
    BigInt den = denominator(q) * 2;
    // floor division of num by den
    BigInt quot = num / den;
    if (num < 0 && quot * den != num) --quot;
    return Rational(quot, scale);
}

// Floor dyadic approximation of sqrt(n) with the given fractional bits; n >= 0.
inline Rational dyadic_sqrt(const BigInt& n, unsigned bits) {
    BigInt scaled = n << (2 * bits);
    BigInt root = boost::multiprecision::sqrt(scaled);
    return Rational(root, BigInt(1) << bits);
}

}  // namespace otwalk
