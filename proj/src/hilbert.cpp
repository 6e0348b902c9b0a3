#include "algdesign/hilbert.hpp"

#include <algorithm>

#include "algdesign/errors.hpp"

namespace algdesign {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// a + sign * s^shift * b
IntPoly add_shifted(IntPoly a, const IntPoly& b, std::uint64_t shift, int sign) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
    trim(a);
    return a;
}

// Numerator K with HS(R/I) = K / (1-s)^k, by pivoting on the most frequent variable.
IntPoly quotient_numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); })) return {};

    const std::size_t k = gens.front().arity();
    std::vector<std::size_t> count(k, 0);
    bool pairwise_coprime = true;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < k; ++i)
            if (g[i] > 0 && ++count[i] > 1) pairwise_coprime = false;

    if (pairwise_coprime) {
        IntPoly k_poly{1};
        for (const auto& g : gens) {
            IntPoly factor(g.degree() + 1);
            factor[0] = 1;
            factor[g.degree()] -= 1;
            k_poly = multiply(k_poly, factor);
        }
        return k_poly;
    }

    std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    Monomial x = Monomial::variable(k, pivot);

    // HS(R/I) = HS(R/(I + x)) + s * HS(R/(I : x))
    std::vector<Monomial> plus;
    std::vector<Monomial> colon;
    plus.push_back(x);
    for (const auto& g : gens) {
        if (g[pivot] == 0) plus.push_back(g);
        Monomial c = g;
        if (c[pivot] > 0) --c[pivot];
        colon.push_back(std::move(c));
    }
    return add_shifted(quotient_numerator(std::move(plus)), quotient_numerator(std::move(colon)), 1, 1);
}

mpz_class binomial(long n, long r) {
    if (r < 0 || n < r) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

void require_arity(std::span<const Monomial> gens, std::size_t k) {
    if (k == 0) throw DimensionError("Hilbert series needs at least one variable");
    for (const auto& g : gens)
        if (g.arity() != k) throw DimensionError("monomial generator arity mismatch");
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = j != i && gens[j].divides(gens[i]);
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

mpz_class hilbert_function(std::span<const Monomial> gens, std::size_t k, unsigned j) {
    require_arity(gens, k);
    IntPoly num = quotient_numerator({gens.begin(), gens.end()});
    mpz_class total = 0;
    for (std::size_t i = 0; i < num.size() && i <= j; ++i)
        total += num[i] * binomial(static_cast<long>(j - i + k - 1), static_cast<long>(k - 1));
    return total;
}

HilbertSeries hilbert_series(std::span<const Monomial> gens, std::size_t k) {
    require_arity(gens, k);
    HilbertSeries hs;
    hs.arity = k;
    hs.quotient_numerator = quotient_numerator({gens.begin(), gens.end()});
    hs.inside_numerator = add_shifted(IntPoly{1}, hs.quotient_numerator, 0, -1);

    auto minimal = minimalize({gens.begin(), gens.end()});
    for (std::size_t i = 0; i < k; ++i) {
        bool bounded = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const Monomial& m) { return m[i] > 0 && m.degree() == m[i]; });
        if (!bounded) return hs;
    }
    // divide by (1 - s) k times: prefix sums, exact because K(1) = 0 for finite quotients
    IntPoly h = hs.quotient_numerator;
    for (std::size_t t = 0; t < k; ++t) {
        mpz_class acc = 0;
        for (auto& c : h) {
            acc += c;
            c = acc;
        }
        if (acc != 0) throw InternalError("Hilbert numerator not divisible by (1-s)^k");
        trim(h);
    }
    hs.coefficients = std::move(h);
    return hs;
}

HilbertSeries staircase_series(const Staircase& model) {
    HilbertSeries hs;
    hs.arity = model.arity();
    IntPoly h;
    for (const auto& m : model.monomials()) {
        if (h.size() <= m.degree()) h.resize(m.degree() + 1);
        h[m.degree()] += 1;
    }
    IntPoly k_poly = h;
    for (std::size_t t = 0; t < model.arity(); ++t) k_poly = multiply(k_poly, IntPoly{1, -1});
    hs.quotient_numerator = k_poly;
    hs.inside_numerator = add_shifted(IntPoly{1}, k_poly, 0, -1);
    hs.coefficients = std::move(h);
    return hs;
}

std::string format_series(const IntPoly& p) {
    std::string out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        mpz_class mag = abs(p[j]);
        if (out.empty())
            out += p[j] < 0 ? "-" : "";
        else
            out += p[j] < 0 ? " - " : " + ";
        if (j == 0 || mag != 1) out += mag.get_str();
        if (j >= 1) out += "s";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

}  // namespace algdesign
