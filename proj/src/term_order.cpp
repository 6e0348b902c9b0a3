#include "algdesign/term_order.hpp"

#include <cctype>
#include <sstream>

#include "algdesign/errors.hpp"
#include "algdesign/linalg.hpp"

namespace algdesign {

bool validate_matrix_order(const RationalMatrix& rows) {
    const std::size_t k = rows.size();
    for (const auto& row : rows)
        if (row.size() != k) throw DimensionError("ordering matrix must be square");
    if (k == 0) throw DimensionError("ordering matrix must be non-empty");
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t r = 0;
        while (r < k && is_zero(rows[r][c])) ++r;
        if (r == k || sgn(rows[r][c]) < 0) return false;
    }
    Matrix m(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m(r, c) = rows[r][c];
    return rank(std::move(m)) == k;
}

TermOrder TermOrder::lex() {
    TermOrder t;
    t.kind_ = Kind::Lex;
    return t;
}

TermOrder TermOrder::deglex() {
    TermOrder t;
    t.kind_ = Kind::DegLex;
    return t;
}

TermOrder TermOrder::degrevlex() {
    TermOrder t;
    t.kind_ = Kind::DegRevLex;
    return t;
}

TermOrder TermOrder::matrix(RationalMatrix rows) {
    if (!validate_matrix_order(rows))
        throw InvalidArgument("matrix does not define a term order (needs full rank and "
                              "positive leading entry in every column)");
    TermOrder t;
    t.kind_ = Kind::Matrix;
    t.rows_ = std::move(rows);
    return t;
}

TermOrder TermOrder::weight(std::vector<Rational> w, TermOrder tiebreak) {
    if (w.empty()) throw DimensionError("weight vector must be non-empty");
    for (const auto& x : w)
        if (sgn(x) < 0) throw InvalidArgument("weight vector entries must be non-negative");
    if (auto a = tiebreak.arity(); a && *a != w.size())
        throw DimensionError("weight vector and tiebreak order differ in arity");
    TermOrder t;
    t.kind_ = Kind::Weight;
    t.rows_.push_back(std::move(w));
    t.tiebreak_ = std::make_shared<const TermOrder>(std::move(tiebreak));
    return t;
}

std::optional<std::size_t> TermOrder::arity() const {
    if (kind_ == Kind::Matrix || kind_ == Kind::Weight) return rows_.front().size();
    return std::nullopt;
}

const std::vector<Rational>& TermOrder::weights() const {
    static const std::vector<Rational> empty;
    return kind_ == Kind::Weight ? rows_.front() : empty;
}

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

Rational dot(const std::vector<Rational>& row, const Monomial& m) {
    Rational s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (m[i] != 0) s += row[i] * m[i];
    return s;
}

std::strong_ordering from_cmp(int c) {
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw DimensionError("compared monomials differ in arity");
    if (auto k = arity(); k && *k != a.arity())
        throw DimensionError("monomial arity does not match the term order");
    switch (kind_) {
        case Kind::Lex:
            return compare_lex(a, b);
        case Kind::DegLex: {
            if (auto d = a.degree() <=> b.degree(); d != 0) return d;
            return compare_lex(a, b);
        }
        case Kind::DegRevLex: {
            if (auto d = a.degree() <=> b.degree(); d != 0) return d;
            // the larger monomial has the smaller exponent at the last differing variable
            for (std::size_t i = a.arity(); i-- > 0;)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
        }
        case Kind::Matrix: {
            for (const auto& row : rows_) {
                int c = cmp(dot(row, a), dot(row, b));
                if (c != 0) return from_cmp(c);
            }
            return std::strong_ordering::equal;
        }
        case Kind::Weight: {
            int c = cmp(dot(rows_.front(), a), dot(rows_.front(), b));
            if (c != 0) return from_cmp(c);
            return tiebreak_->compare(a, b);
        }
    }
    throw InternalError("unknown term order kind");
}

namespace {

std::string join_row(const std::vector<Rational>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ',';
        s += to_string(row[i]);
    }
    return s;
}

std::vector<Rational> parse_row(const std::string& text) {
    std::vector<Rational> row;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) row.push_back(parse_rational(item));
    if (row.empty()) throw ParseError("empty row in order specification");
    return row;
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::string TermOrder::to_string() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::DegLex:
            return "deglex";
        case Kind::DegRevLex:
            return "degrevlex";
        case Kind::Matrix: {
            std::string s = "matrix:";
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (r) s += ';';
                s += join_row(rows_[r]);
            }
            return s;
        }
        case Kind::Weight:
            return "weight:" + join_row(rows_.front()) + "+" + tiebreak_->to_string();
    }
    return "?";
}

TermOrder parse_term_order(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = lower(spec.substr(0, colon));
    if (colon == std::string::npos) {
        if (head == "lex") return TermOrder::lex();
        if (head == "deglex") return TermOrder::deglex();
        if (head == "degrevlex") return TermOrder::degrevlex();
        throw ParseError("unknown term order '" + spec + "'");
    }
    std::string body = spec.substr(colon + 1);
    if (head == "matrix") {
        RationalMatrix rows;
        std::stringstream ss(body);
        std::string row;
        while (std::getline(ss, row, ';')) rows.push_back(parse_row(row));
        return TermOrder::matrix(std::move(rows));
    }
    if (head == "weight") {
        auto plus = body.find('+');
        auto w = parse_row(body.substr(0, plus));
        TermOrder tiebreak = plus == std::string::npos ? TermOrder::degrevlex()
                                                       : parse_term_order(body.substr(plus + 1));
        return TermOrder::weight(std::move(w), std::move(tiebreak));
    }
    throw ParseError("unknown term order '" + spec + "'");
}

}  // namespace algdesign
