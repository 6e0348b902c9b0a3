#include "algdesign/ring.hpp"

#include <cctype>
#include <set>

#include "algdesign/errors.hpp"

namespace algdesign {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw ParseError("invalid variable name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
    }
}

Ring Ring::numbered(std::size_t k, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
    return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

namespace {

class Parser {
public:
    Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse_all() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (d.is_zero() || d.size() != 1 || !d.terms().begin()->first.is_one())
                    fail("division only by a nonzero constant");
                acc *= Rational(1 / d.terms().begin()->second);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (!accept('^')) return base;
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        Polynomial result = Polynomial::constant(ring_.arity(), 1);
        for (unsigned long i = 0; i < e; ++i) result = result * base;
        return result;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return Polynomial::constant(ring_.arity(),
                                        parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto index = ring_.index_of(name);
            if (!index) fail("unknown variable '" + std::string(name) + "'");
            return Polynomial::variable(ring_.arity(), *index);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Ring::parse(std::string_view text) const {
    return Parser(*this, text).parse_all();
}

Monomial Ring::parse_monomial(std::string_view text) const {
    Polynomial p = parse(text);
    if (p.size() != 1 || p.terms().begin()->second != 1)
        throw ParseError("'" + std::string(text) + "' is not a monomial");
    return p.terms().begin()->first;
}

std::vector<Polynomial> Ring::parse_list(std::string_view text) const {
    std::vector<Polynomial> out;
    std::size_t depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')' && depth > 0) --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            auto piece = text.substr(start, i - start);
            bool blank = true;
            for (char c : piece)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (blank) throw ParseError("empty item in polynomial list '" + std::string(text) + "'");
            out.push_back(parse(piece));
            start = i + 1;
        }
    }
    return out;
}

std::string Ring::format(const Monomial& m) const {
    if (m.arity() != arity()) throw DimensionError("monomial arity does not match ring");
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names_[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Ring::format(const Polynomial& f, const TermOrder& order) const {
    if (f.arity() != arity()) throw DimensionError("polynomial arity does not match ring");
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.sorted_terms(order)) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) s += '-';
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += to_string(mag);
        } else {
            if (mag != 1) s += to_string(mag) + '*';
            s += format(m);
        }
    }
    return s;
}

}  // namespace algdesign
