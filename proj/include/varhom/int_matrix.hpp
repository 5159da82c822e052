#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace varhom {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Matrices with zero rows or zero columns are legal and model maps to or
/// from the zero module.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    // All rows must have length `cols`; `cols` is needed when `rows` is empty.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
    static IntMatrix diagonal(std::span<const Integer> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    IntVector column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Integer> values);

    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    IntMatrix select_rows(std::span<const std::size_t> indices) const;
    IntMatrix select_cols(std::span<const std::size_t> indices) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    // Elementary operations, used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);  // row[dst] += factor * row[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);  // col[dst] += factor * col[src]
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    IntVector apply(std::span<const Integer> v) const;

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator-=(const IntMatrix& rhs);
    IntMatrix operator-() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, IntMatrix a);

/// Exact product. Throws StructuralError when a.cols() != b.rows().
IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntMatrix& a);

bool is_zero_vector(std::span<const Integer> v);
std::string to_string(const IntMatrix& m);

} // namespace varhom
