#include "fphom/matrix.hpp"

#include <algorithm>

namespace fphom {

Matrix::Matrix(const PrimeField& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(const PrimeField& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(f_, rows_, rhs.cols_);
    const auto p = static_cast<std::uint64_t>(f_.p());
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<std::uint64_t> acc(rhs.cols_, 0);
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a == 0)
                continue;
            const Elem* r = rhs.data_.data() + k * rhs.cols_;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                acc[j] += static_cast<std::uint64_t>(a) * r[j];
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.at(i, j) = static_cast<Elem>(acc[j] % p);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = f_.sub(data_[i], rhs.data_[i]);
    return out;
}

Vec Matrix::apply(std::span<const Elem> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply: length mismatch");
    Vec out(rows_, 0);
    const auto p = static_cast<std::uint64_t>(f_.p());
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const Elem* r = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += static_cast<std::uint64_t>(r[j]) * v[j];
        out[i] = static_cast<Elem>(acc % p);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const
{
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::pair<Matrix, std::vector<std::size_t>> Matrix::rref() const
{
    Matrix m(*this);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && m(sel, c) == 0)
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        const Elem inv = f_.inv(m(r, c));
        for (std::size_t j = c; j < cols_; ++j)
            m.at(r, j) = f_.mul(m(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                if (m(r, j) != 0)
                    m.at(i, j) = f_.sub(m(i, j), f_.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t Matrix::rank() const
{
    if (rows_ == 0 || cols_ == 0)
        return 0;
    // Forward elimination only.
    Matrix m(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && m(sel, c) == 0)
            ++sel;
        if (sel == rows_)
            continue;
        if (sel != r)
            for (std::size_t j = c; j < cols_; ++j)
                std::swap(m.at(sel, j), m.at(r, j));
        const Elem inv = f_.inv(m(r, c));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0)
                continue;
            const Elem factor = f_.mul(m(i, c), inv);
            for (std::size_t j = c; j < cols_; ++j)
                if (m(r, j) != 0)
                    m.at(i, j) = f_.sub(m(i, j), f_.mul(factor, m(r, j)));
        }
        ++r;
    }
    return r;
}

Matrix Matrix::kernel() const
{
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(f_, cols_, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        k.at(fc, j) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], j) = f_.neg(m(r, fc));
    }
    return k;
}

Matrix Matrix::vstack(const Matrix& other) const
{
    if (cols_ != other.cols_)
        throw std::invalid_argument("vstack: column mismatch");
    Matrix out(f_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

Matrix Matrix::hstack(const Matrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hstack: row mismatch");
    Matrix out(f_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j)
            out.at(i, cols_ + j) = other(i, j);
    }
    return out;
}

// ---------------------------------------------------------------------------

Vec EchelonSpan::reduce(std::span<const PrimeField::Elem> v) const
{
    Vec w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto c = w[pivots_[k]];
        if (c == 0)
            continue;
        const Vec& r = rows_[k];
        for (std::size_t j = 0; j < n_; ++j)
            if (r[j] != 0)
                w[j] = f_.sub(w[j], f_.mul(c, r[j]));
    }
    return w;
}

bool EchelonSpan::contains(std::span<const PrimeField::Elem> v) const
{
    const Vec w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; });
}

bool EchelonSpan::insert(std::span<const PrimeField::Elem> v)
{
    if (v.size() != n_)
        throw std::invalid_argument("EchelonSpan: length mismatch");
    Vec w(v.begin(), v.end());
    Vec combo;
    if (track_) {
        combo.assign(inserted_ + 1, 0);
        combo[inserted_] = 1;
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto c = w[pivots_[k]];
        if (c == 0)
            continue;
        const Vec& r = rows_[k];
        for (std::size_t j = 0; j < n_; ++j)
            if (r[j] != 0)
                w[j] = f_.sub(w[j], f_.mul(c, r[j]));
        if (track_)
            for (std::size_t j = 0; j < combos_[k].size(); ++j)
                combo[j] = f_.sub(combo[j], f_.mul(c, combos_[k][j]));
    }
    std::size_t piv = 0;
    while (piv < n_ && w[piv] == 0)
        ++piv;
    if (piv == n_)
        return false;
    const auto inv = f_.inv(w[piv]);
    for (auto& e : w)
        e = f_.mul(e, inv);
    if (track_)
        for (auto& e : combo)
            e = f_.mul(e, inv);
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    if (track_)
        combos_.push_back(std::move(combo));
    ++inserted_;
    return true;
}

bool EchelonSpan::solve(std::span<const PrimeField::Elem> v, Vec& coords) const
{
    if (!track_)
        throw std::logic_error("EchelonSpan::solve requires coordinate tracking");
    Vec w(v.begin(), v.end());
    coords.assign(inserted_, 0);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto c = w[pivots_[k]];
        if (c == 0)
            continue;
        const Vec& r = rows_[k];
        for (std::size_t j = 0; j < n_; ++j)
            if (r[j] != 0)
                w[j] = f_.sub(w[j], f_.mul(c, r[j]));
        for (std::size_t j = 0; j < combos_[k].size(); ++j)
            coords[j] = f_.add(coords[j], f_.mul(c, combos_[k][j]));
    }
    return std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; });
}

}  // namespace fphom
