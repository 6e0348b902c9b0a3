#include "algdesign/linalg.hpp"

#include <utility>

#include "algdesign/errors.hpp"

namespace algdesign {

RationalVector Matrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

namespace {

// In-place forward elimination; returns the rank and the sign of the row
// permutation applied.
std::pair<std::size_t, int> eliminate(Matrix& m) {
    std::size_t rank = 0;
    int sign = 1;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(pivot, j), m(rank, j));
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (is_zero(m(r, c))) continue;
            Rational f = m(r, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return {rank, sign};
}

}  // namespace

std::size_t rank(Matrix m) {
    return eliminate(m).first;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    auto [r, sign] = eliminate(m);
    if (r < m.rows()) return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
    return det;
}

std::optional<RationalVector> solve(Matrix m, RationalVector b) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n) throw DimensionError("solve: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(m(pivot, c))) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(c, j));
            swap(b[pivot], b[c]);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
            b[r] -= f * b[c];
        }
    }
    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("inverse of a non-square matrix");
    Matrix a = m;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(a(pivot, c))) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                swap(a(pivot, j), a(c, j));
                swap(inv(pivot, j), inv(c, j));
            }
        }
        Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RationalVector multiply(const Matrix& m, std::span<const Rational> x) {
    if (x.size() != m.cols()) throw DimensionError("multiply: shape mismatch");
    RationalVector y(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_zero(x[c])) y[r] += m(r, c) * x[c];
    return y;
}

std::size_t span_rank(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return 0;
    Matrix m(vectors.size(), vectors.front().size());
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != m.cols()) throw DimensionError("span_rank: ragged vectors");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vectors[r][c];
    }
    return rank(std::move(m));
}

bool EchelonBasis::Reduction::independent() const {
    for (const auto& x : residual)
        if (!is_zero(x)) return true;
    return false;
}

EchelonBasis::Reduction EchelonBasis::reduce(std::span<const Rational> v) const {
    if (v.size() != length_) throw DimensionError("echelon basis: vector length mismatch");
    Reduction out;
    out.residual.assign(v.begin(), v.end());
    out.coefficients.assign(rows_.size(), Rational(0));
    for (const auto& row : rows_) {
        Rational t = out.residual[row.pivot];
        if (is_zero(t)) continue;
        for (std::size_t j = row.pivot; j < length_; ++j)
            if (!is_zero(row.vector[j])) out.residual[j] -= t * row.vector[j];
        for (std::size_t i = 0; i < row.combo.size(); ++i)
            if (!is_zero(row.combo[i])) out.coefficients[i] += t * row.combo[i];
    }
    return out;
}

void EchelonBasis::insert(Reduction r) {
    std::size_t pivot = 0;
    while (pivot < length_ && is_zero(r.residual[pivot])) ++pivot;
    if (pivot == length_) throw InternalError("echelon basis: inserting a dependent vector");
    const std::size_t index = rows_.size();
    Rational scale = r.residual[pivot];
    Row row;
    row.pivot = pivot;
    row.vector = std::move(r.residual);
    for (auto& x : row.vector) x /= scale;
    // residual = input - sum coefficients * inserted, input is inserted[index]
    row.combo.assign(index + 1, Rational(0));
    for (std::size_t i = 0; i < index && i < r.coefficients.size(); ++i)
        row.combo[i] = -r.coefficients[i] / scale;
    row.combo[index] = 1 / scale;
    rows_.push_back(std::move(row));
}

bool EchelonBasis::insert(std::span<const Rational> v) {
    auto r = reduce(v);
    if (!r.independent()) return false;
    insert(std::move(r));
    return true;
}

}  // namespace algdesign
