#pragma once

#include <vector>

#include "epwlab/sampler.hpp"
#include "epwlab/scalar.hpp"

namespace epwlab::exactalg {

// Dense matrix over a fixed scalar field.  All algorithms are exact; there
// is no floating point anywhere in this library.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), field_(kFieldQ) {}
    Matrix(int rows, int cols, field_t field);

    static Matrix identity(int n, field_t field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    field_t field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Scalar> row(int i) const;
    void set_row(int i, const std::vector<Scalar>& v);

  private:
    int rows_, cols_;
    field_t field_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form; pivot columns appended to *pivots when given.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

struct RankKernel {
    int rank;
    // Rows form the canonical (RREF-derived) basis of {x : m x = 0}.
    Matrix kernel;
};
RankKernel rank_and_kernel(const Matrix& m);

// Exact determinant.  Square input required (shape_error).  Over Q the
// fraction-free Bareiss scheme runs on a denominator-cleared integer copy;
// over F_p plain elimination is used.  Both routes agree by construction
// and the test suite cross-checks them against cofactor expansion.
Scalar determinant(const Matrix& m);

// Gauss-Jordan inverse; degeneracy_error when singular.
Matrix inverse(const Matrix& m);

Matrix row_stack(const Matrix& a, const Matrix& b);

// Equality of row spaces (computed via canonical RREF of each).
bool same_row_space(const Matrix& a, const Matrix& b);

Matrix random_matrix(SeededSampler& sampler, int rows, int cols, field_t field);
Matrix random_symmetric_matrix(SeededSampler& sampler, int n, field_t field);

// Matrix-vector products with vectors as std::vector<Scalar>.
std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x);       // m * x
std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Matrix& m);   // x * m
Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace epwlab::exactalg
