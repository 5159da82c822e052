#include "varhom/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "varhom/errors.hpp"

namespace varhom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw StructuralError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw StructuralError("row " + std::to_string(i) + " has length " +
                                  std::to_string(rows[i].size()) + ", expected " +
                                  std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw StructuralError("column length mismatch");
        m.set_column(j, columns[j]);
    }
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, std::span<const Integer> values)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = values[i];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const
{
    return is_zero_vector(data_);
}

bool IntMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const
{
    IntMatrix m(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j)
            m(k, j) = (*this)(indices[k], j);
    return m;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> indices) const
{
    IntMatrix m(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < indices.size(); ++k)
            m(i, k) = (*this)(i, indices[k]);
    return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw StructuralError("block out of range");
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& s = (*this)(src, j);
        if (sgn(s) != 0)
            mpz_addmul((*this)(dst, j).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& s = (*this)(i, src);
        if (sgn(s) != 0)
            mpz_addmul((*this)(i, dst).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t i)
{
    for (auto& v : row(i))
        mpz_neg(v.get_mpz_t(), v.get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

IntVector IntMatrix::apply(std::span<const Integer> v) const
{
    if (v.size() != cols_)
        throw StructuralError("vector length " + std::to_string(v.size()) +
                              " does not match matrix with " + std::to_string(cols_) + " columns");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0)
                mpz_addmul(out[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), v[j].get_mpz_t());
    return out;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw StructuralError("matrix sum of mismatched shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += rhs.data_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw StructuralError("matrix difference of mismatched shapes");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= rhs.data_[k];
    return *this;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m = *this;
    for (auto& v : m.data_)
        mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator+(IntMatrix a, const IntMatrix& b)
{
    a += b;
    return a;
}

IntMatrix operator-(IntMatrix a, const IntMatrix& b)
{
    a -= b;
    return a;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    return matrix_multiply(a, b);
}

IntMatrix operator*(const Integer& s, IntMatrix a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (auto& v : a.row(i))
            v *= s;
    return a;
}

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw StructuralError("matrix product of " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(brow[j]) != 0)
                    mpz_addmul(out[j].get_mpz_t(), aik.get_mpz_t(), brow[j].get_mpz_t());
        }
    }
    return c;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw StructuralError("hstack of matrices with different row counts");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw StructuralError("vstack of matrices with different column counts");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, j) = b(i, j);
    return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Integer determinant(const IntMatrix& a)
{
    if (!a.is_square())
        throw StructuralError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_zero_vector(std::span<const Integer> v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace varhom
