#include "epwlab/exterior.hpp"

#include <algorithm>

namespace epwlab::exterior {

using exactalg::kFieldQ;
using exactalg::rank_and_kernel;
using exactalg::rref;

const std::vector<std::array<int, 2>>& pairs() {
    static const std::vector<std::array<int, 2>> table = [] {
        std::vector<std::array<int, 2>> t;
        for (int i = 0; i < kDimV; ++i)
            for (int j = i + 1; j < kDimV; ++j) t.push_back({i, j});
        return t;
    }();
    return table;
}

const std::vector<std::array<int, 3>>& triples() {
    static const std::vector<std::array<int, 3>> table = [] {
        std::vector<std::array<int, 3>> t;
        for (int i = 0; i < kDimV; ++i)
            for (int j = i + 1; j < kDimV; ++j)
                for (int k = j + 1; k < kDimV; ++k) t.push_back({i, j, k});
        return t;
    }();
    return table;
}

int pair_index(int i, int j) {
    static const auto table = [] {
        std::array<std::array<int, kDimV>, kDimV> t{};
        for (size_t idx = 0; idx < pairs().size(); ++idx) {
            auto [a, b] = pairs()[idx];
            t[a][b] = static_cast<int>(idx);
        }
        return t;
    }();
    return table[i][j];
}

int triple_index(int i, int j, int k) {
    static const auto table = [] {
        std::array<std::array<std::array<int, kDimV>, kDimV>, kDimV> t{};
        for (size_t idx = 0; idx < triples().size(); ++idx) {
            auto [a, b, c] = triples()[idx];
            t[a][b][c] = static_cast<int>(idx);
        }
        return t;
    }();
    return table[i][j][k];
}

int shuffle_sign(const std::vector<int>& left, const std::vector<int>& right) {
    int inversions = 0;
    for (int a : left)
        for (int b : right)
            if (b < a) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Ambient flip(Ambient a) { return a == Ambient::V ? Ambient::Vdual : Ambient::V; }

namespace {

int wedge_dim(int k) {
    switch (k) {
        case 0: return 1;
        case 1: return kDimV;
        case 2: return kDimWedge2;
        case 3: return kDimWedge3;
        case 4: return kDimWedge2;
        case 5: return kDimV;
        case 6: return 1;
        default: throw grading_error("degree out of range 0..6");
    }
}

const std::vector<std::vector<int>>& tuples_of_size(int k) {
    static const auto all = [] {
        std::vector<std::vector<std::vector<int>>> t(kDimV + 1);
        for (int mask = 0; mask < (1 << kDimV); ++mask) {
            std::vector<int> tuple;
            for (int i = 0; i < kDimV; ++i)
                if (mask & (1 << i)) tuple.push_back(i);
            t[tuple.size()].push_back(tuple);
        }
        for (auto& layer : t) std::sort(layer.begin(), layer.end());
        return t;
    }();
    return all[k];
}

int tuple_index(const std::vector<int>& tuple) {
    const auto& layer = tuples_of_size(static_cast<int>(tuple.size()));
    auto it = std::lower_bound(layer.begin(), layer.end(), tuple);
    return static_cast<int>(it - layer.begin());
}

using epwlab::ambient_error;
using epwlab::context_error;
using epwlab::degenerate_input_error;
using epwlab::grading_error;
using epwlab::precondition_error;
using epwlab::shape_error;

}  // namespace

KVector KVector::zero(Ambient amb, int k, field_t field) {
    return KVector{amb, k, field,
                   std::vector<Scalar>(wedge_dim(k), Scalar::zero(field))};
}

KVector KVector::basis(Ambient amb, field_t field, const std::vector<int>& indices) {
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) throw degenerate_input_error("repeated basis index");
    KVector v = zero(amb, static_cast<int>(indices.size()), field);
    v.c[tuple_index(sorted)] = Scalar::one(field);
    return v;
}

bool KVector::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

KVector KVector::scaled(const Scalar& s) const {
    KVector r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

KVector KVector::operator+(const KVector& o) const {
    if (ambient != o.ambient) throw ambient_error("sum across ambients");
    if (k != o.k) throw grading_error("sum across degrees");
    if (field != o.field) throw context_error("sum across fields");
    KVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

KVector KVector::operator-(const KVector& o) const { return *this + o.scaled(-Scalar::one(o.field)); }

bool KVector::operator==(const KVector& o) const {
    return ambient == o.ambient && k == o.k && field == o.field && c == o.c;
}

KVector vector1(Ambient amb, field_t field, const std::vector<Scalar>& coords) {
    if (static_cast<int>(coords.size()) != kDimV) throw shape_error("vector must have 6 coordinates");
    KVector v = KVector::zero(amb, 1, field);
    v.c = coords;
    return v;
}

KVector wedge(const KVector& a, const KVector& b) {
    if (a.ambient != b.ambient) throw ambient_error("wedge across ambients");
    if (a.field != b.field) throw context_error("wedge across fields");
    if (a.k + b.k > kDimV) throw grading_error("wedge degree exceeds 6");
    KVector r = KVector::zero(a.ambient, a.k + b.k, a.field);
    const auto& ta = tuples_of_size(a.k);
    const auto& tb = tuples_of_size(b.k);
    for (size_t ia = 0; ia < ta.size(); ++ia) {
        if (a.c[ia].is_zero()) continue;
        for (size_t ib = 0; ib < tb.size(); ++ib) {
            if (b.c[ib].is_zero()) continue;
            // Disjointness check via merge.
            std::vector<int> merged;
            merged.reserve(ta[ia].size() + tb[ib].size());
            merged.insert(merged.end(), ta[ia].begin(), ta[ia].end());
            merged.insert(merged.end(), tb[ib].begin(), tb[ib].end());
            std::vector<int> sorted = merged;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            int sign = shuffle_sign(ta[ia], tb[ib]);
            Scalar term = a.c[ia] * b.c[ib];
            if (sign < 0) term = -term;
            r.c[tuple_index(sorted)] += term;
        }
    }
    return r;
}

Scalar symplectic_form(const KVector& a, const KVector& b) {
    if (a.ambient != b.ambient) throw ambient_error("symplectic form across ambients");
    if (a.k != 3 || b.k != 3) throw grading_error("symplectic form needs degree-3 arguments");
    if (a.field != b.field) throw context_error("symplectic form across fields");
    Scalar total = Scalar::zero(a.field);
    const auto& t = triples();
    for (size_t i = 0; i < t.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        // The complementary triple sits at the mirrored index in lex order.
        size_t j = t.size() - 1 - i;
        if (b.c[j].is_zero()) continue;
        std::vector<int> left(t[i].begin(), t[i].end());
        std::vector<int> right(t[j].begin(), t[j].end());
        Scalar term = a.c[i] * b.c[j];
        if (shuffle_sign(left, right) < 0) term = -term;
        total += term;
    }
    return total;
}

const std::vector<std::array<int, kDimWedge3>>& omega_gram_int() {
    static const std::vector<std::array<int, kDimWedge3>> gram = [] {
        std::vector<std::array<int, kDimWedge3>> g(kDimWedge3);
        const auto& t = triples();
        for (int i = 0; i < kDimWedge3; ++i) {
            g[i].fill(0);
            int j = kDimWedge3 - 1 - i;
            std::vector<int> left(t[i].begin(), t[i].end());
            std::vector<int> right(t[j].begin(), t[j].end());
            g[i][j] = shuffle_sign(left, right);
        }
        return g;
    }();
    return gram;
}

Matrix omega_gram(field_t field) {
    Matrix m(kDimWedge3, kDimWedge3, field);
    const auto& g = omega_gram_int();
    for (int i = 0; i < kDimWedge3; ++i)
        for (int j = 0; j < kDimWedge3; ++j)
            if (g[i][j] != 0) m.at(i, j) = Scalar::of_long(field, g[i][j]);
    return m;
}

bool is_lagrangian_basis(const Matrix& basis) {
    if (basis.rows() != 10 || basis.cols() != kDimWedge3) return false;
    if (exactalg::rank(basis) != 10) return false;
    Matrix g = omega_gram(basis.field());
    return (basis * g * basis.transpose()).is_zero();
}

LagrangianSubspace make_lagrangian(Ambient amb, const Matrix& basis) {
    if (basis.rows() != 10 || basis.cols() != kDimWedge3)
        throw shape_error("a Lagrangian basis must be 10 x 20");
    if (exactalg::rank(basis) != 10)
        throw degenerate_input_error("basis rows are linearly dependent");
    Matrix g = omega_gram(basis.field());
    if (!(basis * g * basis.transpose()).is_zero())
        throw isotropy_error("subspace is not totally isotropic");
    return LagrangianSubspace{amb, basis.field(), rref(basis)};
}

KVector frame_p(field_t field, int i) {
    static const auto plist = [] {
        std::vector<std::array<int, 3>> v;
        for (const auto& t : triples())
            if (t[0] == 0) v.push_back(t);
        return v;
    }();
    if (i < 0 || i >= 10) throw shape_error("frame index out of range");
    const auto& t = plist[i];
    return KVector::basis(Ambient::V, field, {t[0], t[1], t[2]});
}

KVector frame_q(field_t field, int i) {
    static const auto qlist = [] {
        std::vector<std::pair<std::array<int, 3>, int>> v;
        for (const auto& t : triples()) {
            if (t[0] != 0) continue;
            std::vector<int> left{t[0], t[1], t[2]};
            std::vector<int> comp;
            for (int x = 0; x < kDimV; ++x)
                if (x != t[0] && x != t[1] && x != t[2]) comp.push_back(x);
            v.push_back({{comp[0], comp[1], comp[2]}, shuffle_sign(left, comp)});
        }
        return v;
    }();
    if (i < 0 || i >= 10) throw shape_error("frame index out of range");
    const auto& [t, sign] = qlist[i];
    KVector q = KVector::basis(Ambient::V, field, {t[0], t[1], t[2]});
    if (sign < 0) q = q.scaled(-Scalar::one(field));
    return q;
}

LagrangianSubspace graph_lagrangian(const Matrix& s, Ambient amb) {
    if (s.rows() != 10 || s.cols() != 10) throw shape_error("graph matrix must be 10 x 10");
    if (s != s.transpose()) throw precondition_error("graph matrix must be symmetric");
    field_t field = s.field();
    Matrix basis(10, kDimWedge3, field);
    for (int i = 0; i < 10; ++i) {
        KVector row = frame_p(field, i);
        for (int j = 0; j < 10; ++j) {
            if (s.at(i, j).is_zero()) continue;
            row = row + frame_q(field, j).scaled(s.at(i, j));
        }
        basis.set_row(i, row.c);
    }
    return make_lagrangian(amb, basis);
}

Matrix fiber_spanning_rows(const std::vector<Scalar>& v, field_t field) {
    if (static_cast<int>(v.size()) != kDimV) throw shape_error("vector must have 6 coordinates");
    Matrix rows(kDimWedge2, kDimWedge3, field);
    for (int idx = 0; idx < kDimWedge2; ++idx) {
        auto [i, j] = pairs()[idx];
        // v ^ e_i ^ e_j = sum_m v_m e_m ^ e_i ^ e_j.
        for (int m = 0; m < kDimV; ++m) {
            if (v[m].is_zero() || m == i || m == j) continue;
            std::vector<int> left{m};
            std::vector<int> right{i, j};
            std::vector<int> sorted{m, i, j};
            std::sort(sorted.begin(), sorted.end());
            Scalar term = v[m];
            if (shuffle_sign(left, right) < 0) term = -term;
            rows.at(idx, triple_index(sorted[0], sorted[1], sorted[2])) += term;
        }
    }
    return rows;
}

LagrangianSubspace fiber(const std::vector<Scalar>& v, Ambient amb) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    if (zero) throw degenerate_input_error("fiber of the zero vector");
    field_t field = v[0].field();
    Matrix rows = fiber_spanning_rows(v, field);
    std::vector<int> pivots;
    Matrix r = rref(rows, &pivots);
    if (pivots.size() != 10) throw internal_error("fiber rank is not 10");
    Matrix basis(10, kDimWedge3, field);
    for (int i = 0; i < 10; ++i) basis.set_row(i, r.row(i));
    return make_lagrangian(amb, basis);
}

LagrangianSubspace annihilator(const LagrangianSubspace& a) {
    auto rk = rank_and_kernel(a.basis);
    if (rk.rank != 10 || rk.kernel.rows() != 10)
        throw internal_error("annihilator dimension is not 10");
    return make_lagrangian(flip(a.ambient), rk.kernel);
}

KVector contraction(const KVector& phi, const KVector& alpha) {
    if (phi.k != 1) throw grading_error("contraction needs a degree-1 functional");
    if (phi.ambient != flip(alpha.ambient)) throw ambient_error("contraction needs opposite ambients");
    if (phi.field != alpha.field) throw context_error("contraction across fields");
    if (alpha.k == 0) throw grading_error("cannot contract a degree-0 element");
    KVector r = KVector::zero(alpha.ambient, alpha.k - 1, alpha.field);
    const auto& tuples = tuples_of_size(alpha.k);
    for (size_t idx = 0; idx < tuples.size(); ++idx) {
        if (alpha.c[idx].is_zero()) continue;
        const auto& t = tuples[idx];
        for (size_t m = 0; m < t.size(); ++m) {
            if (phi.c[t[m]].is_zero()) continue;
            std::vector<int> rest;
            for (size_t x = 0; x < t.size(); ++x)
                if (x != m) rest.push_back(t[x]);
            Scalar term = phi.c[t[m]] * alpha.c[idx];
            if (m % 2 == 1) term = -term;
            r.c[tuple_index(rest)] += term;
        }
    }
    return r;
}

Matrix support(const KVector& alpha) {
    if (alpha.k != 3) throw grading_error("support expects a degree-3 element");
    field_t field = alpha.field;
    // Rows: contraction of alpha by each dual basis functional.
    Matrix contractions(kDimV, kDimWedge2, field);
    for (int i = 0; i < kDimV; ++i) {
        std::vector<Scalar> e(kDimV, Scalar::zero(field));
        e[i] = Scalar::one(field);
        KVector c = contraction(vector1(flip(alpha.ambient), field, e), alpha);
        contractions.set_row(i, c.c);
    }
    // Functionals killing alpha = left kernel of the contraction table;
    // the support is the common kernel of those functionals.
    auto killers = rank_and_kernel(contractions.transpose());
    if (killers.kernel.rows() == 0) {
        Matrix full = rref(Matrix::identity(kDimV, field));
        return full;
    }
    auto supp = rank_and_kernel(killers.kernel);
    return supp.kernel;
}

}  // namespace epwlab::exterior
