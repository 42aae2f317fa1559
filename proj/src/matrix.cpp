#include "epwlab/matrix.hpp"

#include <algorithm>

namespace epwlab::exactalg {

Matrix::Matrix(int rows, int cols, field_t field)
    : rows_(rows), cols_(cols), field_(field) {
    require_valid_field(field);
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(field));
}

Matrix Matrix::identity(int n, field_t field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

namespace {

void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw context_error("matrix field mismatch");
}

}  // namespace

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(*this, o);
    if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& s = at(i, k);
            if (s.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += s * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sum shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix difference shape mismatch");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> Matrix::row(int i) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

void Matrix::set_row(int i, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != cols_) throw shape_error("row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
    Matrix r = m;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (!r.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return r;
}

int rank(const Matrix& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

RankKernel rank_and_kernel(const Matrix& m) {
    std::vector<int> pivots;
    Matrix r = rref(m, &pivots);
    int rk = static_cast<int>(pivots.size());
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (pi < pivots.size() && pivots[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Matrix kernel(static_cast<int>(free_cols.size()), m.cols(), m.field());
    for (size_t s = 0; s < free_cols.size(); ++s) {
        int fc = free_cols[s];
        kernel.at(static_cast<int>(s), fc) = Scalar::one(m.field());
        for (int i = 0; i < rk; ++i)
            kernel.at(static_cast<int>(s), pivots[i]) = -r.at(i, fc);
    }
    return {rk, kernel};
}

namespace {

Scalar determinant_fp(Matrix m) {
    const int n = m.rows();
    Scalar det = Scalar::one(m.field());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Scalar::zero(m.field());
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// Fraction-free Bareiss determinant of an integer matrix.
mpz_class bareiss_det(std::vector<mpz_class>& a, int n) {
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * n + j]; };
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(piv, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    if (m.field() != kFieldQ) return determinant_fp(m);

    // Clear denominators row by row, track the product, then run Bareiss on
    // the integer matrix.
    std::vector<mpz_class> a(static_cast<size_t>(n) * n);
    mpz_class den_product = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < n; ++j) {
            const mpq_class& q = m.at(i, j).rational();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        den_product *= lcm;
        for (int j = 0; j < n; ++j) {
            const mpq_class& q = m.at(i, j).rational();
            a[static_cast<size_t>(i) * n + j] = q.get_num() * (lcm / q.get_den());
        }
    }
    mpz_class det = bareiss_det(a, n);
    return Scalar::of_mpq(mpq_class(det, den_product));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw shape_error("inverse of a non-square matrix");
    const int n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    std::vector<int> pivots;
    Matrix r = rref(aug, &pivots);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw degeneracy_error("matrix is singular");
    Matrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Matrix row_stack(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.cols() != b.cols()) throw shape_error("row_stack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

namespace {

Matrix nonzero_rref_rows(const Matrix& m) {
    std::vector<int> pivots;
    Matrix r = rref(m, &pivots);
    Matrix out(static_cast<int>(pivots.size()), m.cols(), m.field());
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
    return out;
}

}  // namespace

bool same_row_space(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.cols() != b.cols()) return false;
    return nonzero_rref_rows(a) == nonzero_rref_rows(b);
}

Matrix random_matrix(SeededSampler& sampler, int rows, int cols, field_t field) {
    Matrix m(rows, cols, field);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = sampler.field_element(field);
    return m;
}

Matrix random_symmetric_matrix(SeededSampler& sampler, int n, field_t field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar s = sampler.field_element(field);
            m.at(i, j) = s;
            m.at(j, i) = s;
        }
    return m;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw shape_error("mat_vec: length mismatch");
    std::vector<Scalar> y(m.rows(), Scalar::zero(m.field()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !x[j].is_zero()) y[i] += m.at(i, j) * x[j];
    return y;
}

std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Matrix& m) {
    if (static_cast<int>(x.size()) != m.rows()) throw shape_error("vec_mat: length mismatch");
    std::vector<Scalar> y(m.cols(), Scalar::zero(m.field()));
    for (int i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) y[j] += x[i] * m.at(i, j);
    }
    return y;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) throw shape_error("dot: length mismatch");
    if (a.empty()) throw shape_error("dot: empty vectors");
    Scalar s = Scalar::zero(a[0].field());
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace epwlab::exactalg
