#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace algdesign {

using Exponent = std::uint32_t;

/// x^a for an exponent vector a of fixed arity. Equality and `<=>` are plain
/// lexicographic comparison of exponent vectors; they give a canonical storage
/// order and are unrelated to any term order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial one(std::size_t arity) { return Monomial(arity); }
    static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

    std::size_t arity() const { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const;

    /// True iff this divides `other` (componentwise <=).
    bool divides(const Monomial& other) const;

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    /// Exact quotient; requires `divisor.divides(*this)`.
    Monomial operator/(const Monomial& divisor) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// lcm(a, b) == a * b.
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace algdesign
