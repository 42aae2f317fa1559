#pragma once

#include <gmpxx.h>

#include <vector>

#include "epwlab/errors.hpp"
#include "epwlab/matrix.hpp"

namespace epwlab::exactalg {

// Dense integer matrix with arbitrary-precision entries.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols);
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    IntMat transpose() const;
    bool operator==(const IntMat& o) const;
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += c * row j ; col i += c * col j
    void add_row(int i, int j, const mpz_class& c);
    void add_col(int i, int j, const mpz_class& c);
    void negate_row(int i);
    void negate_col(int i);

    Matrix to_rational() const;  // same entries over Q

  private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithResult {
    IntMat u, d, v;  // u * input * v == d, u and v unimodular, d diagonal
                     // with nonnegative entries d1 | d2 | ... (then zeros)
};

// Smith normal form.  Pivot choice is pinned for reproducibility: the
// nonzero entry of smallest absolute value in the working submatrix, ties
// broken row-major.
SmithResult smith_normal_form(const IntMat& m);

// Row-style Hermite normal form: the canonical upper-echelon basis of the
// row space.  Zero rows are dropped, pivots are positive, entries above a
// pivot are reduced into [0, pivot).
IntMat hermite_normal_form(const IntMat& m);

// Canonical basis (rows) of the left kernel {x : x * m == 0}; the result is
// saturated (a basis of the full integer kernel, not a finite-index piece).
IntMat integer_kernel(const IntMat& m);

mpz_class determinant(const IntMat& m);

std::vector<mpz_class> vec_mat(const std::vector<mpz_class>& x, const IntMat& m);

}  // namespace epwlab::exactalg
