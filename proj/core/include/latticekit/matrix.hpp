#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "latticekit/errors.hpp"

namespace latk {

// Arbitrary-precision integers and rationals. Fixed-width arithmetic is not
// used anywhere in the library, not even as a fast path.
using Int = mpz_class;
using Rat = mpq_class;

class RatMatrix;

// Dense integer matrix, row-major. Values are immutable in spirit: all
// operations return fresh matrices, mutation is limited to construction
// helpers and the in-place entry accessor.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix column(const std::vector<Int>& v);
    static Matrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Int& c) const;

    bool operator==(const Matrix& o) const = default;

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    // Columns [j0, j1) as a new matrix.
    Matrix col_range(std::size_t j0, std::size_t j1) const;
    // Horizontal concatenation [*this | o]; row counts must agree.
    Matrix hcat(const Matrix& o) const;
    // Vertical concatenation; column counts must agree.
    Matrix vcat(const Matrix& o) const;

    bool is_zero() const;
    bool is_symmetric() const;
    // Skew-symmetric with zero diagonal.
    bool is_alternating() const;

    // Exact determinant (Bareiss fraction-free elimination); empty matrix
    // has determinant 1.
    Int det() const;
    bool is_unimodular() const { return is_square() && (det() == 1 || det() == -1); }

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Kronecker product: block (i,j) of the result is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

// Matrix-vector product.
std::vector<Int> mul(const Matrix& a, const std::vector<Int>& x);

// Dense rational matrix; entries are kept canonical (lowest terms, positive
// denominator) by mpq_class arithmetic.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    explicit RatMatrix(const Matrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;

    bool operator==(const RatMatrix& o) const = default;

    // Inverse via Gauss-Jordan elimination; throws SingularMatrix.
    RatMatrix inverse() const;
    Rat det() const;

    bool is_integral() const;
    // Requires is_integral().
    Matrix to_integer() const;
    // Largest denominator over all entries.
    Int max_denominator() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

} // namespace latk
