#include "algdesign/rational.hpp"

#include <cctype>

#include "algdesign/errors.hpp"

namespace algdesign {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = trim(s.substr(0, slash));
        auto den = trim(s.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        mpz_class d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(digits), den);
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(s)));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace algdesign
