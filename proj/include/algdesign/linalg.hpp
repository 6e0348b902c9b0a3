#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algdesign/rational.hpp"

namespace algdesign {

using RationalVector = std::vector<Rational>;

/// Row-major dense matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    RationalVector column(std::size_t c) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(Matrix m);
Rational determinant(Matrix m);
/// Solves m x = b for square nonsingular m; nullopt when singular.
std::optional<RationalVector> solve(Matrix m, RationalVector b);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
RationalVector multiply(const Matrix& m, std::span<const Rational> x);

/// Rank of the span of the given vectors (all of equal length).
std::size_t span_rank(std::span<const RationalVector> vectors);

/// Incremental row echelon basis of a subspace of Q^n. Each stored vector
/// remembers its combination over the inserted inputs, so a dependent input
/// yields its expansion over the independent ones inserted before it.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length) : length_(length) {}

    struct Reduction {
        RationalVector residual;          // input minus its projection
        RationalVector coefficients;      // input = sum coefficients[i] * inserted[i] + residual
        bool independent() const;
    };

    /// Reduces `v` against the basis without modifying it.
    Reduction reduce(std::span<const Rational> v) const;
    /// Inserts `v`; returns false (and leaves the basis unchanged) when dependent.
    bool insert(std::span<const Rational> v);
    /// Inserts a previously computed independent reduction.
    void insert(Reduction r);

    std::size_t size() const { return rows_.size(); }
    std::size_t length() const { return length_; }

private:
    struct Row {
        RationalVector vector;   // pivot entry normalised to 1
        RationalVector combo;    // vector = sum combo[i] * inserted[i]
        std::size_t pivot;
    };
    std::size_t length_;
    std::vector<Row> rows_;
};

}  // namespace algdesign
