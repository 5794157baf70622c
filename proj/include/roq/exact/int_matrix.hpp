#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "roq/exact/integer.hpp"

namespace roq {

// Dense row-major integer matrix. Zero rows or columns are allowed.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix column_vector(const std::vector<Integer>& v);
    // Block matrices built from column lists; all columns must have `rows` entries.
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const;

    std::vector<Integer> column(std::size_t j) const;
    std::vector<Integer> row(std::size_t i) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    std::vector<Integer> apply(const std::vector<Integer>& v) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix vstack(const IntMatrix& o) const;
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

    bool is_zero() const;
    // Fraction-free (Bareiss) determinant of a square matrix.
    Integer determinant() const;

    // "[2,4;6,8]". Empty matrices print as "[]".
    std::string to_string() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& c);
    void add_col(std::size_t dst, std::size_t src, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

}  // namespace roq
