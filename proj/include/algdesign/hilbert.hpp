#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algdesign/groebner.hpp"
#include "algdesign/monomial.hpp"

namespace algdesign {

using IntPoly = std::vector<mpz_class>;  // coefficient of s^j at index j

struct HilbertSeries {
    std::size_t arity = 0;
    /// HS(s) = quotient_numerator(s) / (1-s)^k
    IntPoly quotient_numerator;
    /// inside_numerator(s) / (1-s)^k counts the monomials inside the ideal
    IntPoly inside_numerator;
    /// h_0, h_1, ... when the quotient is finite
    std::optional<IntPoly> coefficients;

    bool finite() const { return coefficients.has_value(); }
};

/// Number of degree-j monomials outside <gens>.
mpz_class hilbert_function(std::span<const Monomial> gens, std::size_t k, unsigned j);

/// An infinite quotient yields only the numerator forms.
HilbertSeries hilbert_series(std::span<const Monomial> gens, std::size_t k);

/// Degree profile of a finite staircase.
HilbertSeries staircase_series(const Staircase& model);

/// Minimal generators of the monomial ideal (duplicates and multiples dropped),
/// in canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// `1 + 6s + s^2`; the zero polynomial prints as `0`.
std::string format_series(const IntPoly& p);

}  // namespace algdesign
