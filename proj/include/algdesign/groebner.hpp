#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "algdesign/polynomial.hpp"
#include "algdesign/term_order.hpp"

namespace algdesign {

/// Ideal presented by its generators, kept verbatim.
class Ideal {
public:
    explicit Ideal(std::vector<Polynomial> generators);
    std::size_t arity() const { return arity_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

private:
    std::vector<Polynomial> gens_;
    std::size_t arity_;
};

/// Downward-closed set of exponent vectors: a saturated hierarchical model.
/// Elements are kept in canonical (exponent-lexicographic) order.
class Staircase {
public:
    Staircase() = default;
    /// Throws InvalidArgument when the set is not downward closed, empty, or
    /// mixes arities. Duplicates are removed.
    Staircase(std::size_t arity, std::vector<Monomial> monomials);

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return monos_.size(); }
    const std::vector<Monomial>& monomials() const { return monos_; }
    bool contains(const Monomial& m) const;

    /// Sum of all total degrees.
    std::uint64_t total_degree() const;
    /// Componentwise sum of the exponent vectors.
    std::vector<std::uint64_t> state_vector() const;
    /// Elements sorted ascending under `order`.
    std::vector<Monomial> sorted(const TermOrder& order) const;

    friend bool operator==(const Staircase&, const Staircase&) = default;
    friend auto operator<=>(const Staircase& a, const Staircase& b) { return a.monos_ <=> b.monos_; }

private:
    std::size_t arity_ = 0;
    std::vector<Monomial> monos_;
};

/// True iff every divisor of every element is an element.
bool is_downward_closed(std::span<const Monomial> monomials);

/// Gröbner basis of an ideal under a fixed order. Reduced bases are monic and
/// sorted by leading monomial ascending.
class GroebnerBasis {
public:
    GroebnerBasis(TermOrder order, std::vector<Polynomial> elements, bool reduced);

    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool reduced() const { return reduced_; }
    std::size_t arity() const { return arity_; }
    std::vector<Monomial> leading_monomials() const;
    bool is_unit() const;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.elements_ == b.elements_ && a.reduced_ == b.reduced_;
    }

private:
    TermOrder order_;
    std::vector<Polynomial> elements_;
    bool reduced_;
    std::size_t arity_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i] * divisors[i] + remainder, with
/// no remainder monomial divisible by any leading monomial. Divisors are tried
/// in the given order.
DivisionResult poly_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                           const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Unique reduced Gröbner basis of the ideal.
GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& order);

/// Inter-reduces a (not necessarily reduced) Gröbner basis into the reduced one.
GroebnerBasis reduce_basis(std::vector<Polynomial> basis, const TermOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Monomials outside the leading-term ideal. Throws NotZeroDimensionalError
/// when that set is infinite.
Staircase quotient_basis(const GroebnerBasis& gb);

/// Every S-pair reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Thread-safe memo of reduced bases keyed by term-order text. Concurrent
/// readers share the lock; racing writers store identical values.
class GroebnerCache {
public:
    std::shared_ptr<const GroebnerBasis> find(const std::string& key) const;
    std::shared_ptr<const GroebnerBasis> store(const std::string& key, GroebnerBasis gb);

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries_;
};

}  // namespace algdesign
