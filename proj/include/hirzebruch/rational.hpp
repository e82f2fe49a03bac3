#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hirzebruch/errors.hpp"

namespace hirzebruch {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p", "p/q" or a plain decimal such as "-0.01" into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    std::string s(text);
    auto fail = [&] { throw ParseError("malformed rational: '" + s + "'"); };
    if (s.empty()) fail();

    auto is_integer = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t.front() == '+') t.erase(0, 1);
        return t;
    };

    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') fail();
        mpz_class d(den, 10);
        if (d == 0) throw ParseError("zero denominator: '" + s + "'");
        r = Rational(mpz_class(strip_plus(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        std::string digits = whole;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.erase(0, 1);
        if (digits.empty() && frac.empty()) fail();
        for (char c : digits + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class value(digits.empty() ? std::string("0") : digits, 10);
        if (!frac.empty()) value = value * scale + mpz_class(frac, 10);
        r = Rational(negative ? mpz_class(-value) : value, scale);
    } else {
        if (!is_integer(s)) fail();
        r = Rational(mpz_class(strip_plus(s), 10), 1);
    }
    r.canonicalize();
    return r;
}

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(Rational r)
{
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Renders an exact multiple of pi, e.g. "3/7 pi", "pi", "0".
inline std::string to_pi_string(const Rational& r)
{
    if (r == 0) return "0";
    if (r == 1) return "pi";
    if (r == -1) return "-pi";
    return to_string(r) + " pi";
}

/// Inverse of to_pi_string.
inline Rational parse_pi_multiple(std::string_view text)
{
    std::string s(text);
    if (s == "0") return Rational(0);
    if (s == "pi") return Rational(1);
    if (s == "-pi") return Rational(-1);
    constexpr std::string_view suffix = " pi";
    if (s.size() <= suffix.size() || s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0)
        throw ParseError("expected a multiple of pi: '" + s + "'");
    return parse_rational(std::string_view(s).substr(0, s.size() - suffix.size()));
}

}  // namespace hirzebruch
