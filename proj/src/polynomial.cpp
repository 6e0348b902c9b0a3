#include "algdesign/polynomial.hpp"

#include <algorithm>

#include "algdesign/errors.hpp"

namespace algdesign {

namespace {

void require_same_arity(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("polynomial arity mismatch");
}

}  // namespace

Polynomial::Polynomial(const Monomial& m, Rational c) : arity_(m.arity()) {
    if (!algdesign::is_zero(c)) terms_.emplace(m, std::move(c));
}

Polynomial Polynomial::constant(std::size_t arity, Rational c) {
    return Polynomial(Monomial::one(arity), std::move(c));
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    return Polynomial(Monomial::variable(arity, index));
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    require_same_arity(arity_, m.arity());
    if (algdesign::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (algdesign::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_arity(arity_, g.arity_);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_arity(arity_, g.arity_);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (algdesign::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_arity(f.arity_, g.arity_);
    Polynomial h(f.arity_);
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) h.add_term(mf * mg, cf * cg);
    return h;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    require_same_arity(arity_, m.arity());
    Polynomial h(arity_);
    if (algdesign::is_zero(c)) return h;
    // multiplication by a monomial is injective on monomials, so no cancellation
    for (const auto& [mf, cf] : terms_) h.terms_.emplace_hint(h.terms_.end(), mf * m, cf * c);
    return h;
}

const Monomial& Polynomial::leading_monomial(const TermOrder& order) const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

Term Polynomial::leading_term(const TermOrder& order) const {
    const Monomial& m = leading_monomial(order);
    return {m, terms_.at(m)};
}

std::vector<Term> Polynomial::sorted_terms(const TermOrder& order) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back({m, c});
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
    return out;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    Rational lc = leading_term(order).coefficient;
    return *this * Rational(1 / lc);
}

Rational evaluate(const Monomial& m, std::span<const Rational> point) {
    if (point.size() != m.arity()) throw DimensionError("point arity does not match monomial");
    Rational v = 1;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
        mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
        v *= p;
    }
    return v;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity_) throw DimensionError("point arity does not match polynomial");
    Rational v = 0;
    for (const auto& [m, c] : terms_) v += c * algdesign::evaluate(m, point);
    return v;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
    require_same_arity(f.arity(), g.arity());
    switch (op) {
        case ArithOp::Add:
            return f + g;
        case ArithOp::Sub:
            return f - g;
        case ArithOp::Mul:
            return f * g;
    }
    throw InternalError("unknown arithmetic operation");
}

Polynomial poly_scale(const Polynomial& f, const Rational& c) {
    return f * c;
}

Term leading_term(const Polynomial& f, const TermOrder& order) {
    return f.leading_term(order);
}

std::strong_ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

}  // namespace algdesign
