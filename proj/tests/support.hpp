#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algdesign/design.hpp"
#include "algdesign/ring.hpp"

namespace support {

using namespace algdesign;

inline std::string data(const std::string& name) { return std::string(ALGDESIGN_DATA_DIR) + "/" + name; }

inline Design load(const std::string& name) { return read_design_csv(data(name)); }

// Monomials of a comma-separated list such as "1, x1, x2*x3^2".
inline std::vector<Monomial> monomials(const Ring& ring, const std::string& list) {
    std::vector<Monomial> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(ring.parse_monomial(item));
    return out;
}

inline Staircase staircase(const Ring& ring, const std::string& list) {
    return Staircase(ring.arity(), monomials(ring, list));
}

inline std::set<std::string> formatted(const Ring& ring, const Staircase& s) {
    std::set<std::string> out;
    for (const auto& m : s.monomials()) out.insert(ring.format(m));
    return out;
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t k, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    Monomial m(k);
    for (std::size_t i = 0; i < k; ++i) m[i] = e(rng);
    return m;
}

inline Rational random_rational(std::mt19937& rng, int range = 9) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t k, std::size_t terms, unsigned max_exp) {
    Polynomial f(k);
    for (std::size_t t = 0; t < terms; ++t) f.add_term(random_monomial(rng, k, max_exp), random_rational(rng));
    return f;
}

// A random term order: a named order or a random positive integer matrix.
inline TermOrder random_order(std::mt19937& rng, std::size_t k) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return TermOrder::lex();
        case 1: return TermOrder::deglex();
        case 2: return TermOrder::degrevlex();
        default: {
            std::uniform_int_distribution<int> entry(0, 5);
            RationalMatrix rows(k, std::vector<Rational>(k));
            for (;;) {
                for (auto& row : rows)
                    for (auto& x : row) x = entry(rng);
                for (std::size_t i = 0; i < k; ++i) rows[0][i] += 1;
                if (validate_matrix_order(rows)) return TermOrder::matrix(rows);
            }
        }
    }
}

}  // namespace support
