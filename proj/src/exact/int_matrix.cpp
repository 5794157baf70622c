#include "roq/exact/int_matrix.hpp"

#include <fmt/format.h>

#include "roq/util/errors.hpp"

namespace roq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw RoqError("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Integer>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw RoqError("IntMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw RoqError(fmt::format("IntMatrix::at({},{}) out of range {}x{}", i, j, rows_, cols_));
    return (*this)(i, j);
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return std::vector<Integer>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw RoqError(fmt::format("IntMatrix: cannot multiply {}x{} by {}x{}", rows_, cols_, o.rows_, o.cols_));
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Integer& b = o(k, j);
                if (b != 0) r(i, j) += a * b;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw RoqError("IntMatrix: shape mismatch in +");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
    if (v.size() != cols_) throw RoqError("IntMatrix::apply: length mismatch");
    std::vector<Integer> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw RoqError("IntMatrix::hstack: row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw RoqError("IntMatrix::vstack: column mismatch");
    IntMatrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix r(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw RoqError("IntMatrix::block out of range");
    IntMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw RoqError("IntMatrix::determinant: not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    if (empty()) return "[]";
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ',';
            s += (*this)(i, j).str();
        }
    }
    s += ']';
    return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(src, j) != 0) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, src) != 0) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

}  // namespace roq
