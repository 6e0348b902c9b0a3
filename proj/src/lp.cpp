#include "algdesign/lp.hpp"

#include <algorithm>
#include <set>

#include "algdesign/errors.hpp"

namespace algdesign {

// Simplex on the dual  max 1.y  s.t.  D^T y + t = 1,  y, t >= 0.  The slack
// basis is feasible, Bland's rule prevents cycling, an unbounded dual means the
// primal is infeasible, and the primal optimum is minus the slack reduced costs.
std::optional<RationalVector> covering_solution(std::span<const RationalVector> input, std::size_t dim) {
    std::set<RationalVector> unique;
    for (const auto& r : input) {
        if (r.size() != dim) throw DimensionError("LP row length mismatch");
        if (std::none_of(r.begin(), r.end(), [](const Rational& v) { return v > 0; })) return std::nullopt;
        unique.insert(r);
    }
    std::vector<RationalVector> rows(unique.begin(), unique.end());
    const std::size_t m = rows.size();
    const std::size_t cols = m + dim;
    if (m == 0) return RationalVector(dim, 0);

    std::vector<RationalVector> tab(dim, RationalVector(cols + 1, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < m; ++j) tab[i][j] = rows[j][i];
        tab[i][m + i] = 1;
        tab[i][cols] = 1;
    }
    RationalVector reduced(cols, 0);
    for (std::size_t j = 0; j < m; ++j) reduced[j] = 1;
    std::vector<std::size_t> basis(dim);
    for (std::size_t i = 0; i < dim; ++i) basis[i] = m + i;

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols && enter == cols; ++j)
            if (reduced[j] > 0) enter = j;
        if (enter == cols) break;

        std::size_t leave = dim;
        Rational best;
        for (std::size_t i = 0; i < dim; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == dim || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == dim) return std::nullopt;

        RationalVector& prow = tab[leave];
        const Rational pivot = prow[enter];
        for (auto& v : prow) v /= pivot;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (prow[j] != 0) tab[i][j] -= f * prow[j];
        }
        const Rational f = reduced[enter];
        for (std::size_t j = 0; j < cols; ++j)
            if (prow[j] != 0) reduced[j] -= f * prow[j];
        basis[leave] = enter;
    }

    RationalVector w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = -reduced[m + i];
    for (const auto& r : rows) {
        Rational dot = 0;
        for (std::size_t i = 0; i < dim; ++i) dot += r[i] * w[i];
        if (dot < 1 || std::any_of(w.begin(), w.end(), [](const Rational& v) { return v < 0; }))
            throw InternalError("LP certificate failed verification");
    }
    return w;
}

std::optional<RationalVector> free_covering_solution(std::span<const RationalVector> rows, std::size_t dim) {
    std::vector<RationalVector> split;
    split.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != dim) throw DimensionError("LP row length mismatch");
        RationalVector s(2 * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = r[i];
            s[dim + i] = -r[i];
        }
        split.push_back(std::move(s));
    }
    auto uv = covering_solution(split, 2 * dim);
    if (!uv) return std::nullopt;
    RationalVector w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = (*uv)[i] - (*uv)[dim + i];
    return w;
}

}  // namespace algdesign
