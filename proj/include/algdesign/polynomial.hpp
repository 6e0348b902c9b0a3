#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algdesign/monomial.hpp"
#include "algdesign/rational.hpp"
#include "algdesign/term_order.hpp"

namespace algdesign {

/// A term: coefficient times monomial.
struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Sparse polynomial over Q in a fixed number of variables. No stored
/// coefficient is zero, so equality of term maps is equality of polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}
    Polynomial(const Monomial& m, Rational c = 1);

    static Polynomial constant(std::size_t arity, Rational c);
    static Polynomial variable(std::size_t arity, std::size_t index);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of `m` (zero when absent).
    Rational coefficient(const Monomial& m) const;
    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
    Polynomial operator-() const { return *this * Rational(-1); }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    /// f * c * m
    Polynomial mul_term(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Throws ZeroPolynomialError for the zero polynomial.
    Term leading_term(const TermOrder& order) const;
    const Monomial& leading_monomial(const TermOrder& order) const;

    /// Terms in descending order.
    std::vector<Term> sorted_terms(const TermOrder& order) const;

    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic(const TermOrder& order) const;

    Rational evaluate(std::span<const Rational> point) const;

    std::uint64_t total_degree() const;

private:
    std::size_t arity_;
    TermMap terms_;
};

/// Value of x^m at a point.
Rational evaluate(const Monomial& m, std::span<const Rational> point);

enum class ArithOp { Add, Sub, Mul };

/// Ring operations with an arity check; `scale` is `f * c`.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);
Polynomial poly_scale(const Polynomial& f, const Rational& c);

/// Leading monomial and coefficient of f; throws ZeroPolynomialError if f = 0.
Term leading_term(const Polynomial& f, const TermOrder& order);

std::strong_ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

}  // namespace algdesign
