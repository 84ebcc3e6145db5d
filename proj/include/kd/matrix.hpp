#pragma once

#include <initializer_list>
#include <sstream>
#include <vector>

#include "kd/numeric.hpp"

namespace kd {

/// Dense matrix over an exact scalar type (Int or Rat).  Row-major, 0-based.
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill)
    {
        if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw domain_error("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols())
                throw domain_error("ragged row list");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols)
    {
        if (cols.empty()) return Matrix(0, 0);
        Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols(); ++j) {
            if (static_cast<int>(cols[j].size()) != m.rows())
                throw domain_error("ragged column list");
            for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const
    {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    Matrix operator-() const
    {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const
    {
        if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix operator*(const T& s) const
    {
        Matrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }

    Matrix transpose() const
    {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const
    {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    bool is_symmetric() const
    {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<T> row(int i) const
    {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const
    {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(int j, const std::vector<T>& c)
    {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    Matrix submatrix(int r0, int c0, int nrows, int ncols) const
    {
        Matrix m(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void swap_rows(int a, int b)
    {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(int a, int b)
    {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[a] += f * row[b]
    void add_row(int a, int b, const T& f)
    {
        for (int j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
    }

    // col[a] += f * col[b]
    void add_col(int a, int b, const T& f)
    {
        for (int i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
    }

    void scale_row(int a, const T& f)
    {
        for (int j = 0; j < cols_; ++j) (*this)(a, j) *= f;
    }

    void scale_col(int a, const T& f)
    {
        for (int i = 0; i < rows_; ++i) (*this)(i, a) *= f;
    }

    std::string str() const
    {
        std::vector<std::string> cells(data_.size());
        std::vector<size_t> width(cols_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                cells[static_cast<size_t>(i) * cols_ + j] = kd::to_string((*this)(i, j));
                width[j] = std::max(width[j], cells[static_cast<size_t>(i) * cols_ + j].size());
            }
        std::ostringstream out;
        for (int i = 0; i < rows_; ++i) {
            out << "[";
            for (int j = 0; j < cols_; ++j) {
                const auto& c = cells[static_cast<size_t>(i) * cols_ + j];
                out << std::string(width[j] - c.size(), ' ') << c;
                if (j + 1 < cols_) out << " ";
            }
            out << "]";
            if (i + 1 < rows_) out << "\n";
        }
        return out.str();
    }

private:
    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rat(const IntMat& m)
{
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline bool is_integral(const RatMat& m)
{
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline IntMat to_int(const RatMat& m)
{
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw domain_error("matrix entry is not an integer");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);
Rat det(const RatMat& m);

/// Inverse of a nonsingular rational matrix (Gauss-Jordan).
RatMat inverse(const RatMat& m);

/// Inverse of a unimodular integer matrix; throws if det is not +-1.
IntMat inverse_unimodular(const IntMat& m);

} // namespace kd
