#include "epwlab/smith.hpp"

namespace epwlab::exactalg {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw shape_error("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw shape_error("integer matrix product shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

void IntMat::swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(int i, int j, const mpz_class& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::add_col(int i, int j, const mpz_class& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMat::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMat::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

Matrix IntMat::to_rational() const {
    Matrix m(rows_, cols_, kFieldQ);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = Scalar::of_mpq(mpq_class(at(i, j)));
    return m;
}

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult s{IntMat::identity(m.rows()), m, IntMat::identity(m.cols())};
    IntMat& d = s.d;
    const int n = std::min(m.rows(), m.cols());

    for (int k = 0; k < n; ++k) {
        // Pinned pivot rule: smallest |entry| != 0 in the submatrix starting
        // at (k, k), ties broken row-major.
        auto find_pivot = [&](int& pi, int& pj) -> bool {
            pi = pj = -1;
            mpz_class best;
            for (int i = k; i < d.rows(); ++i)
                for (int j = k; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    mpz_class v = abs(d.at(i, j));
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            return pi >= 0;
        };

        int pi, pj;
        if (!find_pivot(pi, pj)) break;  // submatrix is zero; done

        for (;;) {
            if (pi != k) {
                d.swap_rows(k, pi);
                s.u.swap_rows(k, pi);
            }
            if (pj != k) {
                d.swap_cols(k, pj);
                s.v.swap_cols(k, pj);
            }
            // Reduce column k and row k by the pivot.
            bool clean = true;
            for (int i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, k).get_mpz_t(), d.at(k, k).get_mpz_t());
                d.add_row(i, k, -q);
                s.u.add_row(i, k, -q);
                if (d.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(k, j).get_mpz_t(), d.at(k, k).get_mpz_t());
                d.add_col(j, k, -q);
                s.v.add_col(j, k, -q);
                if (d.at(k, j) != 0) clean = false;
            }
            if (clean) break;
            if (!find_pivot(pi, pj)) throw internal_error("smith: pivot vanished");
        }

        // Divisibility sweep: the pivot must divide every later entry.
        bool restart = false;
        for (int i = k + 1; i < d.rows() && !restart; ++i)
            for (int j = k + 1; j < d.cols(); ++j)
                if (d.at(i, j) % d.at(k, k) != 0) {
                    d.add_row(k, i, 1);
                    s.u.add_row(k, i, 1);
                    restart = true;
                    break;
                }
        if (restart) {
            --k;
            continue;
        }
        if (d.at(k, k) < 0) {
            d.negate_row(k);
            s.u.negate_row(k);
        }
    }
    return s;
}

IntMat hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    int row = 0;
    for (int col = 0; col < h.cols() && row < h.rows(); ++col) {
        // Euclidean reduction of column `col` below `row`.
        for (;;) {
            int piv = -1;
            mpz_class best;
            for (int i = row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                mpz_class v = abs(h.at(i, col));
                if (piv < 0 || v < best) {
                    best = v;
                    piv = i;
                }
            }
            if (piv < 0) break;
            if (piv != row) h.swap_rows(row, piv);
            bool done = true;
            for (int i = row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                h.add_row(i, row, -q);
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (row < h.rows() && h.at(row, col) != 0) {
            if (h.at(row, col) < 0) h.negate_row(row);
            // Reduce the entries above the pivot into [0, pivot).
            for (int i = 0; i < row; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                if (q != 0) h.add_row(i, row, -q);
            }
            ++row;
        }
    }
    IntMat out(row, h.cols());
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < h.cols(); ++j) out.at(i, j) = h.at(i, j);
    return out;
}

IntMat integer_kernel(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    const int n = std::min(m.rows(), m.cols());
    std::vector<int> zero_rows;
    for (int i = 0; i < m.rows(); ++i) {
        bool zero = i >= n || s.d.at(i, i) == 0;
        if (zero) zero_rows.push_back(i);
    }
    IntMat k(static_cast<int>(zero_rows.size()), m.rows());
    for (size_t t = 0; t < zero_rows.size(); ++t)
        for (int j = 0; j < m.rows(); ++j) k.at(static_cast<int>(t), j) = s.u.at(zero_rows[t], j);
    return hermite_normal_form(k);
}

mpz_class determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    Scalar d = determinant(m.to_rational());
    return d.rational().get_num();
}

std::vector<mpz_class> vec_mat(const std::vector<mpz_class>& x, const IntMat& m) {
    if (static_cast<int>(x.size()) != m.rows()) throw shape_error("vec_mat: length mismatch");
    std::vector<mpz_class> y(m.cols(), mpz_class(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) y[j] += x[i] * m.at(i, j);
    }
    return y;
}

}  // namespace epwlab::exactalg
