#include "epwlab/epw.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include <gmpxx.h>

#include "epwlab/errors.hpp"

namespace epwlab::epw {

namespace {

using exterior::KVector;

// Exponent tuples of each homogeneous degree 0..10 in 6 variables, with
// the index maps e -> e + delta_v used by the determinant recursion.
struct HomogTables {
    std::vector<std::vector<std::array<int, 6>>> exps;  // [d][i]
    std::vector<std::array<std::vector<int>, 6>> up;    // [d][v][i] -> index in degree d+1
};

const HomogTables& homog_tables() {
    static const HomogTables tables = [] {
        HomogTables t;
        t.exps.resize(11);
        t.up.resize(10);
        std::vector<std::map<std::array<int, 6>, int>> index(11);
        for (int d = 0; d <= 10; ++d) {
            std::array<int, 6> e{};
            auto rec = [&](auto&& self, int pos, int rem) -> void {
                if (pos == 5) {
                    e[5] = rem;
                    index[d][e] = static_cast<int>(t.exps[d].size());
                    t.exps[d].push_back(e);
                    return;
                }
                for (int k = 0; k <= rem; ++k) {
                    e[pos] = k;
                    self(self, pos + 1, rem - k);
                }
            };
            rec(rec, 0, d);
        }
        for (int d = 0; d < 10; ++d) {
            for (int v = 0; v < 6; ++v) {
                auto& tab = t.up[d][v];
                tab.resize(t.exps[d].size());
                for (int i = 0; i < static_cast<int>(t.exps[d].size()); ++i) {
                    std::array<int, 6> e = t.exps[d][i];
                    e[v] += 1;
                    tab[i] = index[d + 1].at(e);
                }
            }
        }
        return t;
    }();
    return tables;
}

// Triple indices avoiding coordinate 0: the default complement of a graph
// Lagrangian (its frame part is exactly the triples containing 0).
std::vector<int> default_complement_cols() {
    std::vector<int> cols;
    const auto& all = exterior::triples();
    for (int t = 0; t < exterior::kDimWedge3; ++t)
        if (all[t][0] != 0) cols.push_back(t);
    return cols;
}

Matrix coordinate_rows(field_t f, const std::vector<int>& cols) {
    Matrix c(10, exterior::kDimWedge3, f);
    for (int r = 0; r < 10; ++r) c.at(r, cols[r]) = Scalar::one(f);
    return c;
}

// A coordinate complement of the row space of a: the default one when it
// works, the non-pivot columns of the RREF basis otherwise.
Matrix complement_rows(const LagrangianSubspace& a) {
    const field_t f = a.field;
    Matrix c = coordinate_rows(f, default_complement_cols());
    if (exactalg::rank(exactalg::row_stack(a.basis, c)) == exterior::kDimWedge3) return c;
    std::vector<int> pivots;
    exactalg::rref(a.basis, &pivots);
    std::vector<bool> is_pivot(exterior::kDimWedge3, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> cols;
    for (int j = 0; j < exterior::kDimWedge3; ++j)
        if (!is_pivot[j]) cols.push_back(j);
    return coordinate_rows(f, cols);
}

// Rows of the projection onto the complement coordinates along the row
// space of a: the bottom quarter of the inverse of the combined basis.
// Over Q each row is scaled integral; the determinant only changes by a
// nonzero factor, which the monic normalization forgets.
Matrix projection_onto_complement(const LagrangianSubspace& a, const Matrix& comp) {
    const field_t f = a.field;
    const int n = exterior::kDimWedge3;
    Matrix b(n, n, f);
    for (int j = 0; j < 10; ++j) {
        for (int i = 0; i < n; ++i) {
            b.at(i, j) = a.basis.at(j, i);
            b.at(i, 10 + j) = comp.at(j, i);
        }
    }
    const Matrix binv = exactalg::inverse(b);
    Matrix t(10, n, f);
    for (int r = 0; r < 10; ++r)
        for (int i = 0; i < n; ++i) t.at(r, i) = binv.at(10 + r, i);
    if (f == exactalg::kFieldQ) {
        for (int r = 0; r < 10; ++r) {
            mpz_class l(1);
            for (int i = 0; i < n; ++i)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.at(r, i).rational().get_den().get_mpz_t());
            if (l == 1) continue;
            const Scalar s = Scalar::parse(f, l.get_str());
            for (int i = 0; i < n; ++i) t.at(r, i) = t.at(r, i) * s;
        }
    }
    return t;
}

// Coefficient table of the 10x10 chart matrix: lin[(r * 10 + q) * 6 + v]
// is the coefficient of x_v in entry (r, q).  Column q corresponds to the
// q-th pair (i, j) avoiding the chart index; its entry in row r is the
// r-th complement coordinate of v ^ e_i ^ e_j.
std::vector<Scalar> chart_linear_coefficients(const LagrangianSubspace& a, int chart) {
    if (chart < 0 || chart >= exterior::kDimV)
        throw precondition_error("chart index must lie in 0..5");
    const field_t f = a.field;
    const Matrix comp = complement_rows(a);
    const Matrix t = projection_onto_complement(a, comp);
    std::vector<Scalar> lin(10 * 10 * 6, Scalar::zero(f));
    int q = 0;
    for (const auto& pr : exterior::pairs()) {
        const int i = pr[0], j = pr[1];
        if (i == chart || j == chart) continue;
        for (int v = 0; v < exterior::kDimV; ++v) {
            if (v == i || v == j) continue;
            std::array<int, 3> s{v, i, j};
            std::sort(s.begin(), s.end());
            const int tri = exterior::triple_index(s[0], s[1], s[2]);
            const bool neg = (i < v && v < j);  // e_v past e_i costs one transposition
            for (int r = 0; r < 10; ++r) {
                const Scalar& x = t.at(r, tri);
                if (x.is_zero()) continue;
                lin[(static_cast<size_t>(r) * 10 + q) * 6 + v] = neg ? -x : x;
            }
        }
        ++q;
    }
    if (q != 10) throw internal_error("expected exactly 10 pairs avoiding the chart");
    return lin;
}

// Determinant of a 10x10 matrix of linear forms by Laplace recursion over
// column subsets: D(S) for |S| = r is the minor on rows 0..r-1 and columns
// S, stored densely in the degree-r monomial basis.  About 9M scalar
// multiplications in total.
MultiPoly determinant_of_linear_forms(field_t f, const std::vector<Scalar>& lin) {
    const HomogTables& ht = homog_tables();
    const Scalar zero = Scalar::zero(f);
    constexpr int kMasks = 1 << 10;
    std::vector<std::vector<Scalar>> prev(kMasks), next(kMasks);
    prev[0].assign(1, Scalar::one(f));
    for (int r = 0; r < 10; ++r) {
        const int dim_next = static_cast<int>(ht.exps[r + 1].size());
        for (auto& cell : next) cell.clear();
        for (int mask = 0; mask < kMasks; ++mask) {
            const auto& cur = prev[mask];
            if (cur.empty()) continue;
            for (int c = 0; c < 10; ++c) {
                if (mask & (1 << c)) continue;
                const int pos = std::popcount(static_cast<unsigned>(mask & ((1 << c) - 1)));
                const bool neg = ((r + pos) & 1) != 0;
                auto& out = next[mask | (1 << c)];
                if (out.empty()) out.assign(dim_next, zero);
                for (int v = 0; v < exterior::kDimV; ++v) {
                    const Scalar& coef = lin[(static_cast<size_t>(r) * 10 + c) * 6 + v];
                    if (coef.is_zero()) continue;
                    const std::vector<int>& up = ht.up[r][v];
                    for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
                        if (cur[i].is_zero()) continue;
                        const Scalar term = coef * cur[i];
                        if (neg)
                            out[up[i]] -= term;
                        else
                            out[up[i]] += term;
                    }
                }
            }
        }
        prev.swap(next);
    }
    const auto& full = prev[kMasks - 1];
    std::vector<std::pair<std::uint64_t, Scalar>> terms;
    for (int i = 0; i < static_cast<int>(full.size()); ++i) {
        if (full[i].is_zero()) continue;
        const auto& e = ht.exps[10][i];
        terms.emplace_back(exactalg::monomial_key(std::vector<int>(e.begin(), e.end())), full[i]);
    }
    return MultiPoly::from_terms(f, exterior::kDimV, std::move(terms));
}

void check_point(const LagrangianSubspace& a, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != exterior::kDimV)
        throw shape_error("point must have 6 coordinates");
    bool nonzero = false;
    for (const Scalar& x : v) {
        if (x.field() != a.field) throw context_error("point field must match the subspace");
        nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) throw degenerate_input_error("projective point cannot be zero");
}

}  // namespace

int corank_at(const LagrangianSubspace& a, const std::vector<Scalar>& v) {
    check_point(a, v);
    const Matrix rows = exterior::fiber_spanning_rows(v, a.field);
    return exterior::kDimWedge3 - exactalg::rank(exactalg::row_stack(rows, a.basis));
}

Matrix intersection_with_fiber(const LagrangianSubspace& a, const std::vector<Scalar>& v) {
    check_point(a, v);
    const field_t f = a.field;
    const exterior::LagrangianSubspace fib = exterior::fiber(v, a.ambient);
    Matrix stacked(20, 20, f);
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 20; ++c) {
            stacked.at(r, c) = fib.basis.at(r, c);
            stacked.at(10 + r, c) = -a.basis.at(r, c);
        }
    }
    // z in the kernel of the transpose splits as (x, y) with
    // sum x_i fib_i = sum y_j a_j: exactly the intersection.
    const exactalg::RankKernel rk = exactalg::rank_and_kernel(stacked.transpose());
    Matrix out(rk.kernel.rows(), 20, f);
    for (int r = 0; r < rk.kernel.rows(); ++r) {
        for (int i = 0; i < 10; ++i) {
            const Scalar& zi = rk.kernel.at(r, i);
            if (zi.is_zero()) continue;
            for (int c = 0; c < 20; ++c) out.at(r, c) += zi * fib.basis.at(i, c);
        }
    }
    return exactalg::rref(out);
}

std::vector<MultiPoly> chart_matrix_entries(const LagrangianSubspace& a, int chart) {
    const field_t f = a.field;
    const std::vector<Scalar> lin = chart_linear_coefficients(a, chart);
    std::vector<MultiPoly> out;
    out.reserve(100);
    for (int r = 0; r < 10; ++r) {
        for (int q = 0; q < 10; ++q) {
            std::vector<std::pair<std::uint64_t, Scalar>> terms;
            for (int v = 0; v < exterior::kDimV; ++v) {
                const Scalar& c = lin[(static_cast<size_t>(r) * 10 + q) * 6 + v];
                if (c.is_zero()) continue;
                std::vector<int> e(6, 0);
                e[v] = 1;
                terms.emplace_back(exactalg::monomial_key(e), c);
            }
            out.push_back(MultiPoly::from_terms(f, exterior::kDimV, std::move(terms)));
        }
    }
    return out;
}

MultiPoly chart_degeneracy_determinant(const LagrangianSubspace& a, int chart) {
    return determinant_of_linear_forms(a.field, chart_linear_coefficients(a, chart));
}

SexticEquation sextic_equation(const LagrangianSubspace& a, int chart) {
    const field_t f = a.field;
    const MultiPoly det = chart_degeneracy_determinant(a, chart);
    if (det.is_zero())
        return SexticEquation{SexticKind::IdenticallyZero, MultiPoly::zero(f, exterior::kDimV), chart};
    MultiPoly quotient(f, exterior::kDimV);
    try {
        quotient = det.divide_by_variable_power(chart, 4);
    } catch (const divisibility_error&) {
        throw internal_error("chart determinant must be divisible by the fourth power of the chart variable");
    }
    if (quotient.degree() != 6 || !quotient.is_homogeneous(6))
        throw internal_error("chart quotient must be homogeneous of degree 6");
    return SexticEquation{SexticKind::Polynomial, quotient.monic(), chart};
}

bool dual_membership(const LagrangianSubspace& a, const Matrix& w) {
    const field_t f = a.field;
    if (w.rows() != 5 || w.cols() != exterior::kDimV)
        throw shape_error("hyperplane basis must be 5 x 6");
    if (w.field() != f) throw context_error("hyperplane field must match the subspace");
    if (exactalg::rank(w) != 5)
        throw degenerate_input_error("hyperplane basis must have rank 5");
    std::vector<KVector> rows;
    rows.reserve(5);
    for (int i = 0; i < 5; ++i) rows.push_back(exterior::vector1(a.ambient, f, w.row(i)));
    Matrix stacked(20, 20, f);
    int r = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            for (int k = j + 1; k < 5; ++k) {
                const KVector t = exterior::wedge(exterior::wedge(rows[i], rows[j]), rows[k]);
                stacked.set_row(r++, t.c);
            }
        }
    }
    for (int i = 0; i < 10; ++i) stacked.set_row(r++, a.basis.row(i));
    return exactalg::rank(stacked) < 20;
}

Matrix tangent_hyperplane(const SexticEquation& s, const std::vector<Scalar>& point) {
    if (s.kind != SexticKind::Polynomial)
        throw precondition_error("no tangent data for an identically zero equation");
    const field_t f = s.poly.field();
    const MultiPoly::ValueGradient vg = s.poly.eval_gradient(point);
    if (!vg.value.is_zero())
        throw not_on_hypersurface_error("point does not satisfy the equation");
    Matrix g(1, exterior::kDimV, f);
    bool nonzero = false;
    for (int v = 0; v < exterior::kDimV; ++v) {
        g.at(0, v) = vg.gradient[v];
        nonzero = nonzero || !vg.gradient[v].is_zero();
    }
    if (!nonzero) throw not_smooth_error("gradient vanishes at the point");
    return exactalg::rank_and_kernel(g).kernel;
}

Matrix tangent_hyperplane(const LagrangianSubspace& a, const std::vector<Scalar>& point) {
    check_point(a, point);
    if (corank_at(a, point) != 1)
        throw not_smooth_error("tangency needs a point of corank exactly 1");
    int chart = 0;
    while (point[chart].is_zero()) ++chart;
    const SexticEquation s = sextic_equation(a, chart);
    if (s.kind != SexticKind::Polynomial)
        throw not_smooth_error("identically degenerate subspace has no smooth points");
    return tangent_hyperplane(s, point);
}

long multiplicity_at(const MultiPoly& f, const std::vector<Scalar>& point) {
    if (f.is_zero()) throw degenerate_input_error("zero form has no multiplicity");
    if (static_cast<int>(point.size()) != f.nvars())
        throw shape_error("point size must match the variable count");
    int fixed = -1;
    for (int i = 0; i < static_cast<int>(point.size()); ++i) {
        if (!point[i].is_zero()) {
            fixed = i;
            break;
        }
    }
    if (fixed < 0) throw degenerate_input_error("projective point cannot be zero");
    const MultiPoly centred = f.shifted(point, fixed);
    if (centred.is_zero())
        throw internal_error("nonzero form cannot vanish on a whole affine chart");
    const long low = centred.lowest_degree();
    if (low == 0) throw not_on_hypersurface_error("multiplicity needs a point on the hypersurface");
    return low;
}

LagrangianSubspace reduce_mod_p(const LagrangianSubspace& a, long p) {
    if (a.field != exactalg::kFieldQ)
        throw precondition_error("reduction starts from a rational subspace");
    if (p == exactalg::kFieldQ || !exactalg::is_valid_field(p))
        throw precondition_error("modulus must be an odd prime");
    Matrix m(10, exterior::kDimWedge3, p);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < exterior::kDimWedge3; ++j) {
            const mpq_class& x = a.basis.at(i, j).rational();
            const long den = static_cast<long>(
                mpz_fdiv_ui(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)));
            if (den == 0) throw reduction_error("denominator divisible by the modulus");
            const long num = static_cast<long>(
                mpz_fdiv_ui(x.get_num().get_mpz_t(), static_cast<unsigned long>(p)));
            m.at(i, j) = Scalar::of_long(p, exactalg::mod_mul(num, exactalg::mod_inverse(den, p), p));
        }
    }
    return exterior::make_lagrangian(a.ambient, m);
}

std::vector<std::vector<long>> projective_points(long p) {
    if (p == exactalg::kFieldQ || !exactalg::is_valid_field(p))
        throw precondition_error("point enumeration needs an odd prime");
    std::vector<std::vector<long>> out;
    for (int lead = 0; lead < exterior::kDimV; ++lead) {
        const int free_n = exterior::kDimV - 1 - lead;
        std::vector<long> tail(free_n, 0);
        while (true) {
            std::vector<long> pt(exterior::kDimV, 0);
            pt[lead] = 1;
            for (int t = 0; t < free_n; ++t) pt[lead + 1 + t] = tail[t];
            out.push_back(std::move(pt));
            int pos = free_n - 1;
            while (pos >= 0 && tail[pos] == p - 1) {
                tail[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++tail[pos];
        }
    }
    return out;
}

int corank_at_point(const LagrangianSubspace& a, const std::vector<long>& coords) {
    const long p = a.field;
    if (p == exactalg::kFieldQ) throw precondition_error("finite base field required");
    if (static_cast<int>(coords.size()) != exterior::kDimV)
        throw shape_error("point must have 6 coordinates");
    std::array<long, 6> v{};
    bool nonzero = false;
    for (int i = 0; i < exterior::kDimV; ++i) {
        v[i] = exactalg::mod_reduce(coords[i], p);
        nonzero = nonzero || v[i] != 0;
    }
    if (!nonzero) throw degenerate_input_error("projective point cannot be zero");

    // 15 fiber spanning rows (one per pair) over 10 basis rows of a.
    constexpr int kRows = 25, kCols = 20;
    std::array<std::array<long, kCols>, kRows> g{};
    int row = 0;
    for (const auto& pr : exterior::pairs()) {
        const int i = pr[0], j = pr[1];
        for (int m = 0; m < exterior::kDimV; ++m) {
            if (m == i || m == j || v[m] == 0) continue;
            std::array<int, 3> s{m, i, j};
            std::sort(s.begin(), s.end());
            const bool neg = (i < m && m < j);
            g[row][exterior::triple_index(s[0], s[1], s[2])] = neg ? p - v[m] : v[m];
        }
        ++row;
    }
    for (int r = 0; r < 10; ++r, ++row)
        for (int c = 0; c < kCols; ++c) g[row][c] = a.basis.at(r, c).residue();

    int rank = 0;
    for (int col = 0; col < kCols && rank < kRows; ++col) {
        int piv = -1;
        for (int r = rank; r < kRows; ++r) {
            if (g[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(g[piv], g[rank]);
        const long inv = exactalg::mod_inverse(g[rank][col], p);
        for (int c = col; c < kCols; ++c) g[rank][c] = exactalg::mod_mul(g[rank][c], inv, p);
        for (int r = rank + 1; r < kRows; ++r) {
            const long factor = g[r][col];
            if (factor == 0) continue;
            for (int c = col; c < kCols; ++c) {
                const long t = g[r][c] - exactalg::mod_mul(factor, g[rank][c], p);
                g[r][c] = t < 0 ? t + p : t;
            }
        }
        ++rank;
    }
    return kCols - rank;
}

CensusResult corank_census(const LagrangianSubspace& a) {
    const long p = a.field;
    if (p == exactalg::kFieldQ) throw precondition_error("census needs a finite base field");
    CensusResult res;
    res.p = p;
    const std::vector<std::vector<long>> pts = projective_points(p);
    res.total = static_cast<long>(pts.size());
    for (const auto& pt : pts) {
        const int c = corank_at_point(a, pt);
        ++res.by_corank[c];
        if (c >= 2) res.high_corank.emplace_back(pt, c);
    }
    return res;
}

}  // namespace epwlab::epw
