#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fphom/field.hpp"

namespace fphom {

using Vec = std::vector<PrimeField::Elem>;

/// Dense row-major matrix over F_p. Columns index the source basis, rows the target basis.
class Matrix {
public:
    using Elem = PrimeField::Elem;

    Matrix(const PrimeField& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const PrimeField& f, std::size_t n);

    const PrimeField& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void add_to(std::size_t r, std::size_t c, Elem v) { at(r, c) = f_.add(at(r, c), v); }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Vec apply(std::span<const Elem> v) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }
    /// Columns of the result span the kernel; one column per free variable.
    Matrix kernel() const;
    /// Reduced row echelon form and its pivot columns.
    std::pair<Matrix, std::vector<std::size_t>> rref() const;

    /// Stack blocks: [this; other] (same column count).
    Matrix vstack(const Matrix& other) const;
    /// [this | other] (same row count).
    Matrix hstack(const Matrix& other) const;

private:
    PrimeField f_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
/// insert() reports whether the vector was new (outside the current span).
class EchelonSpan {
public:
    EchelonSpan(const PrimeField& f, std::size_t n, bool track_coordinates = false)
        : f_(f), n_(n), track_(track_coordinates) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    bool contains(std::span<const PrimeField::Elem> v) const;
    bool insert(std::span<const PrimeField::Elem> v);
    /// Reduce v against the span; returns the normal form.
    Vec reduce(std::span<const PrimeField::Elem> v) const;
    /// Coordinates of v in the successfully inserted vectors, if v lies in the span.
    /// Requires track_coordinates.
    bool solve(std::span<const PrimeField::Elem> v, Vec& coords) const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    PrimeField f_;
    std::size_t n_;
    bool track_;
    std::vector<Vec> rows_;        // normalized: pivot entry 1
    std::vector<Vec> combos_;      // rows_[k] = sum combos_[k][j] * inserted[j]
    std::vector<std::size_t> pivots_;
    std::size_t inserted_ = 0;
};

}  // namespace fphom
