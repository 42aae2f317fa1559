#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "epwlab/epw.hpp"
#include "epwlab/errors.hpp"
#include "epwlab/sampler.hpp"

using namespace epwlab;
using namespace epwlab::epw;
using exactalg::field_t;
using exactalg::kFieldQ;
using exactalg::Matrix;
using exactalg::MultiPoly;
using exactalg::Scalar;
using exactalg::SeededSampler;
using exterior::Ambient;
using exterior::KVector;

namespace {

std::vector<Scalar> to_scalars(field_t f, const std::vector<long>& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (long x : v) out.push_back(Scalar::of_long(f, x));
    return out;
}

std::vector<Scalar> unit_point(field_t f, int i) {
    std::vector<Scalar> v(6, Scalar::zero(f));
    v[i] = Scalar::one(f);
    return v;
}

LagrangianSubspace random_graph(SeededSampler& s, field_t f) {
    return exterior::graph_lagrangian(exactalg::random_symmetric_matrix(s, 10, f));
}

Matrix diag_symmetric(field_t f, const std::vector<long>& d) {
    Matrix m(10, 10, f);
    for (int i = 0; i < 10; ++i) m.at(i, i) = Scalar::of_long(f, d[i]);
    return m;
}

// Fraction-free Bareiss determinant over the polynomial ring; division-based,
// so an algorithmically independent route to the subset recursion.
MultiPoly bareiss_determinant(field_t f, std::vector<MultiPoly> m) {
    const int n = 10;
    MultiPoly prev = MultiPoly::constant(f, 6, Scalar::one(f));
    bool flip = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k * n + k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m[r * n + k].is_zero()) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) return MultiPoly::zero(f, 6);
            for (int c = 0; c < n; ++c) std::swap(m[k * n + c], m[piv * n + c]);
            flip = !flip;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                const MultiPoly num = m[r * n + c] * m[k * n + k] - m[r * n + k] * m[k * n + c];
                m[r * n + c] = num.divide_exact(prev);
            }
        }
        prev = m[k * n + k];
    }
    return flip ? -m[n * n - 1] : m[n * n - 1];
}

// Kernel of the covector lambda as a 5x6 hyperplane basis.
Matrix hyperplane_of(field_t f, const std::vector<long>& lambda) {
    Matrix l(1, 6, f);
    for (int i = 0; i < 6; ++i) l.at(0, i) = Scalar::of_long(f, lambda[i]);
    return exactalg::rank_and_kernel(l).kernel;
}

// 20 - rank of the ten triple wedges of w stacked over the basis of a:
// the quantity dual_membership thresholds, recomputed independently.
int wedge_intersection_dim(const LagrangianSubspace& a, const Matrix& w) {
    const field_t f = a.field;
    std::vector<KVector> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(exterior::vector1(a.ambient, f, w.row(i)));
    Matrix stacked(20, 20, f);
    int r = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                stacked.set_row(r++, exterior::wedge(exterior::wedge(rows[i], rows[j]), rows[k]).c);
    for (int i = 0; i < 10; ++i) stacked.set_row(r++, a.basis.row(i));
    return 20 - exactalg::rank(stacked);
}

// Image of a Lagrangian under the coordinate permutation e_i -> e_{perm[i]}.
LagrangianSubspace permuted_lagrangian(const LagrangianSubspace& a, const std::array<int, 6>& perm) {
    const field_t f = a.field;
    Matrix rows(10, 20, f);
    const auto& tri = exterior::triples();
    for (int r = 0; r < 10; ++r) {
        for (int t = 0; t < 20; ++t) {
            const Scalar& c = a.basis.at(r, t);
            if (c.is_zero()) continue;
            std::array<int, 3> img{perm[tri[t][0]], perm[tri[t][1]], perm[tri[t][2]]};
            int swaps = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (img[i] > img[j]) ++swaps;
            std::sort(img.begin(), img.end());
            const int dst = exterior::triple_index(img[0], img[1], img[2]);
            rows.at(r, dst) = (swaps % 2 != 0) ? (rows.at(r, dst) - c) : (rows.at(r, dst) + c);
        }
    }
    return exterior::make_lagrangian(a.ambient, rows);
}

// Substitutes x_i -> x_{perm[i]}.
MultiPoly permute_variables(const MultiPoly& p, const std::array<int, 6>& perm) {
    std::vector<std::pair<std::uint64_t, Scalar>> terms;
    for (const auto& [key, coeff] : p.terms()) {
        const std::vector<int> e = exactalg::monomial_exponents(key, 6);
        std::vector<int> moved(6, 0);
        for (int i = 0; i < 6; ++i) moved[perm[i]] += e[i];
        terms.emplace_back(exactalg::monomial_key(moved), coeff);
    }
    return MultiPoly::from_terms(p.field(), 6, std::move(terms));
}

// Fixed rational graph instance: S = B^T B for an integer B of rank 9, so
// the graph Lagrangian meets the fiber at e_0 in exactly one line.
Matrix rational_rank9_symmetric() {
    Matrix b(9, 10, kFieldQ);
    for (int i = 0; i < 9; ++i) {
        b.at(i, i) = Scalar::one(kFieldQ);
        b.at(i, 9) = Scalar::of_long(kFieldQ, i + 1);
    }
    return b.transpose() * b;
}

}  // namespace

TEST_CASE("subset recursion matches Bareiss and pointwise numeric determinants") {
    SeededSampler s(101);
    const LagrangianSubspace a = random_graph(s, 3);
    const MultiPoly det = chart_degeneracy_determinant(a, 0);
    REQUIRE(!det.is_zero());
    CHECK(det.is_homogeneous(10));
    const std::vector<MultiPoly> entries = chart_matrix_entries(a, 0);
    REQUIRE(entries.size() == 100);
    for (const MultiPoly& e : entries) CHECK((e.is_zero() || e.is_homogeneous(1)));
    CHECK(bareiss_determinant(3, entries) == det);

    for (field_t f : {field_t(5), kFieldQ}) {
        const LagrangianSubspace b = random_graph(s, f);
        const MultiPoly d2 = chart_degeneracy_determinant(b, 1);
        const std::vector<MultiPoly> e2 = chart_matrix_entries(b, 1);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Scalar> pt(6, Scalar::zero(f));
            for (auto& x : pt) x = s.field_element(f);
            Matrix m(10, 10, f);
            for (int r = 0; r < 10; ++r)
                for (int q = 0; q < 10; ++q) m.at(r, q) = e2[r * 10 + q].eval(pt);
            CHECK(exactalg::determinant(m) == d2.eval(pt));
        }
    }
}

TEST_CASE("scalar and residue corank routes agree across the full census") {
    SeededSampler s(102);
    const LagrangianSubspace a = random_graph(s, 3);
    const auto pts = projective_points(3);
    REQUIRE(pts.size() == 364);
    for (const auto& pt : pts) {
        const int fast = corank_at_point(a, pt);
        const std::vector<Scalar> sc = to_scalars(3, pt);
        CHECK(fast == corank_at(a, sc));
        CHECK(intersection_with_fiber(a, sc).rows() == fast);
    }
    const CensusResult census = corank_census(a);
    CHECK(census.p == 3);
    CHECK(census.total == 364);
    long sum = 0;
    for (const auto& [c, n] : census.by_corank) sum += n;
    CHECK(sum == census.total);
    for (const auto& [pt, c] : census.high_corank) {
        CHECK(c >= 2);
        CHECK(corank_at_point(a, pt) == c);
    }
}

TEST_CASE("intersection rows lie in the subspace and in the fiber") {
    SeededSampler s(103);
    const LagrangianSubspace a = random_graph(s, 5);
    int inspected = 0;
    for (const auto& pt : projective_points(5)) {
        if (corank_at_point(a, pt) == 0) continue;
        const std::vector<Scalar> sc = to_scalars(5, pt);
        const Matrix inter = intersection_with_fiber(a, sc);
        REQUIRE(inter.rows() >= 1);
        const LagrangianSubspace fib = exterior::fiber(sc, a.ambient);
        CHECK(exactalg::rank(exactalg::row_stack(a.basis, inter)) == 10);
        CHECK(exactalg::rank(exactalg::row_stack(fib.basis, inter)) == 10);
        if (++inspected >= 25) break;
    }
    REQUIRE(inspected == 25);
}

TEST_CASE("graph corank at a frame point equals the kernel dimension of the matrix") {
    SeededSampler s(104);
    for (field_t f : {field_t(3), field_t(5), kFieldQ}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix sym = exactalg::random_symmetric_matrix(s, 10, f);
            const LagrangianSubspace a = exterior::graph_lagrangian(sym);
            CHECK(corank_at(a, unit_point(f, 0)) == 10 - exactalg::rank(sym));
        }
    }
    const Matrix sing = diag_symmetric(3, {0, 0, 1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(corank_at(exterior::graph_lagrangian(sing), unit_point(3, 0)) == 2);
}

TEST_CASE("corank against a fiber subspace takes the pinned values") {
    for (field_t f : {field_t(3), kFieldQ}) {
        const LagrangianSubspace fib = exterior::fiber(unit_point(f, 0), Ambient::V);
        // at the base point the whole subspace is the fiber
        CHECK(corank_at(fib, unit_point(f, 0)) == 10);
        // two distinct base vectors share the 4-dimensional wedge family
        CHECK(corank_at(fib, unit_point(f, 1)) == 4);
        std::vector<Scalar> mixed = unit_point(f, 1);
        mixed[2] = Scalar::one(f);
        CHECK(corank_at(fib, mixed) == 4);
    }
}

TEST_CASE("sextic vanishing detects positive corank at every census point") {
    SeededSampler s(105);
    const LagrangianSubspace a = random_graph(s, 3);
    const SexticEquation sext = sextic_equation(a, 0);
    REQUIRE(sext.kind == SexticKind::Polynomial);
    CHECK(sext.poly.is_homogeneous(6));
    CHECK(sext.poly.leading_coefficient() == Scalar::one(3));
    long on_locus = 0;
    for (const auto& pt : projective_points(3)) {
        const bool vanishes = sext.poly.eval(to_scalars(3, pt)).is_zero();
        const bool degenerate = corank_at_point(a, pt) >= 1;
        CHECK(vanishes == degenerate);
        if (degenerate) ++on_locus;
    }
    CHECK(on_locus > 0);
    CHECK(on_locus < 364);
}

TEST_CASE("all six charts produce the same monic sextic") {
    SeededSampler s(106);
    const LagrangianSubspace a = random_graph(s, 3);
    const SexticEquation base = sextic_equation(a, 0);
    REQUIRE(base.kind == SexticKind::Polynomial);
    for (int chart = 1; chart < 6; ++chart) {
        const SexticEquation other = sextic_equation(a, chart);
        REQUIRE(other.kind == SexticKind::Polynomial);
        CHECK(other.chart == chart);
        CHECK(other.poly == base.poly);
    }
    const LagrangianSubspace b = exterior::graph_lagrangian(rational_rank9_symmetric());
    const SexticEquation q0 = sextic_equation(b, 0);
    const SexticEquation q3 = sextic_equation(b, 3);
    REQUIRE(q0.kind == SexticKind::Polynomial);
    CHECK(q0.poly == q3.poly);
}

TEST_CASE("fiber subspaces have identically zero chart determinants") {
    for (int chart = 0; chart < 6; ++chart) {
        const SexticEquation z =
            sextic_equation(exterior::fiber(unit_point(3, 1), Ambient::V), chart);
        CHECK(z.kind == SexticKind::IdenticallyZero);
        CHECK(z.poly.is_zero());
    }
    // base vector with last coordinate: exercises the fallback complement
    const SexticEquation zq = sextic_equation(exterior::fiber(unit_point(kFieldQ, 5), Ambient::V), 0);
    CHECK(zq.kind == SexticKind::IdenticallyZero);
    SeededSampler s(107);
    std::vector<Scalar> v(6, Scalar::zero(5));
    for (auto& x : v) x = s.field_element(5);
    v[2] = Scalar::one(5);
    CHECK(sextic_equation(exterior::fiber(v, Ambient::V), 4).kind == SexticKind::IdenticallyZero);
}

TEST_CASE("coordinate permutations transport the sextic equation") {
    SeededSampler s(108);
    const LagrangianSubspace a = random_graph(s, 3);
    const std::array<int, 6> perm{5, 0, 3, 1, 4, 2};
    const LagrangianSubspace moved = permuted_lagrangian(a, perm);
    const SexticEquation sa = sextic_equation(a, 0);
    const SexticEquation sm = sextic_equation(moved, 0);
    REQUIRE(sa.kind == SexticKind::Polynomial);
    REQUIRE(sm.kind == SexticKind::Polynomial);
    // substituting x_i -> x_{perm[i]} evaluates at the inverse image point,
    // so it carries the original equation to the moved one
    CHECK(permute_variables(sa.poly, perm).monic() == sm.poly);
}

TEST_CASE("high corank census points are singular points of the sextic") {
    for (long p : {3L, 5L}) {
        const Matrix sing = diag_symmetric(p, {0, 0, 1, p - 1, 1, p - 1, 1, 2, 1, 2});
        const LagrangianSubspace a = exterior::graph_lagrangian(sing);
        const SexticEquation sext = sextic_equation(a, 0);
        REQUIRE(sext.kind == SexticKind::Polynomial);
        const CensusResult census = corank_census(a);
        REQUIRE(!census.high_corank.empty());
        bool saw_base = false;
        for (const auto& [pt, c] : census.high_corank) {
            const std::vector<Scalar> sc = to_scalars(p, pt);
            CHECK(multiplicity_at(sext.poly, sc) >= c);  // rank bound forces the multiplicity
            const MultiPoly::ValueGradient vg = sext.poly.eval_gradient(sc);
            CHECK(vg.value.is_zero());
            for (const Scalar& g : vg.gradient) CHECK(g.is_zero());
            std::vector<long> base{1, 0, 0, 0, 0, 0};
            saw_base = saw_base || pt == base;
        }
        CHECK(saw_base);  // corank 2 at e_0: the kernel of the matrix is 2-dimensional
    }
}

TEST_CASE("hyperplane membership matches the annihilator fiber corank") {
    SeededSampler s(109);
    const LagrangianSubspace a = random_graph(s, 3);
    const LagrangianSubspace ann = exterior::annihilator(a);
    REQUIRE(ann.ambient == Ambient::Vdual);
    long inside = 0, outside = 0;
    const auto lambdas = projective_points(3);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        const Matrix w = hyperplane_of(3, lambdas[i]);
        const bool member = dual_membership(a, w);
        const int dual_corank = corank_at_point(ann, lambdas[i]);
        CHECK(member == (dual_corank >= 1));
        if (i < 60) CHECK(wedge_intersection_dim(a, w) == dual_corank);
        (member ? inside : outside) += 1;
    }
    CHECK(inside > 0);
    CHECK(outside > 0);

    const LagrangianSubspace b = random_graph(s, 5);
    const LagrangianSubspace bann = exterior::annihilator(b);
    const auto lam5 = projective_points(5);
    for (size_t i = 0; i < 200; ++i) {
        const Matrix w = hyperplane_of(5, lam5[i]);
        CHECK(dual_membership(b, w) == (corank_at_point(bann, lam5[i]) >= 1));
    }
}

TEST_CASE("annihilator is involutive on graph subspaces") {
    SeededSampler s(110);
    const LagrangianSubspace a = random_graph(s, 5);
    CHECK(exterior::annihilator(exterior::annihilator(a)).basis == a.basis);
    const LagrangianSubspace b = exterior::graph_lagrangian(rational_rank9_symmetric());
    CHECK(exterior::annihilator(exterior::annihilator(b)).basis == b.basis);
}

TEST_CASE("tangent hyperplanes at smooth census points contain the intersection support") {
    SeededSampler s(111);
    const LagrangianSubspace a = random_graph(s, 5);
    const SexticEquation sext = sextic_equation(a, 0);
    REQUIRE(sext.kind == SexticKind::Polynomial);
    int smooth = 0;
    for (const auto& pt : projective_points(5)) {
        if (corank_at_point(a, pt) != 1) continue;
        const std::vector<Scalar> sc = to_scalars(5, pt);
        const MultiPoly::ValueGradient vg = sext.poly.eval_gradient(sc);
        REQUIRE(vg.value.is_zero());
        bool regular = false;
        for (const Scalar& g : vg.gradient) regular = regular || !g.is_zero();
        if (!regular) continue;
        const Matrix w = tangent_hyperplane(sext, sc);
        REQUIRE(w.rows() == 5);
        CHECK(tangent_hyperplane(a, sc) == w);
        CHECK(multiplicity_at(sext.poly, sc) == 1);

        const Matrix inter = intersection_with_fiber(a, sc);
        REQUIRE(inter.rows() == 1);
        const KVector alpha{a.ambient, 3, 5, inter.row(0)};
        const Matrix supp = exterior::support(alpha);
        // the support IS the tangent hyperplane, and the point lies in it
        CHECK(supp.rows() == 5);
        CHECK(exactalg::rank(exactalg::row_stack(w, supp)) == 5);
        Matrix vrow(1, 6, 5);
        for (int i = 0; i < 6; ++i) vrow.at(0, i) = sc[i];
        CHECK(exactalg::rank(exactalg::row_stack(supp, vrow)) == supp.rows());
        // the wedge criterion certifies the tangent hyperplane as a dual point
        CHECK(dual_membership(a, w));
        if (++smooth >= 50) break;
    }
    REQUIRE(smooth >= 50);

    // the subspace-level overload rejects off-locus and deeply degenerate points
    for (const auto& pt : projective_points(5)) {
        if (corank_at_point(a, pt) == 0) {
            CHECK_THROWS_AS(tangent_hyperplane(a, to_scalars(5, pt)), not_smooth_error);
            break;
        }
    }
    const Matrix sing = diag_symmetric(5, {0, 0, 1, 4, 1, 4, 1, 2, 1, 2});
    CHECK_THROWS_AS(tangent_hyperplane(exterior::graph_lagrangian(sing), unit_point(5, 0)),
                    not_smooth_error);
}

TEST_CASE("rational instance has a distinguished smooth point with tangent data") {
    const Matrix sym = rational_rank9_symmetric();
    const LagrangianSubspace a = exterior::graph_lagrangian(sym);
    const std::vector<Scalar> e0 = unit_point(kFieldQ, 0);
    CHECK(corank_at(a, e0) == 1);

    const SexticEquation sext = sextic_equation(a, 0);
    REQUIRE(sext.kind == SexticKind::Polynomial);
    CHECK(sext.poly.eval(e0).is_zero());

    const Matrix w = tangent_hyperplane(sext, e0);
    const Matrix inter = intersection_with_fiber(a, e0);
    REQUIRE(inter.rows() == 1);
    const KVector alpha{a.ambient, 3, kFieldQ, inter.row(0)};
    const Matrix supp = exterior::support(alpha);
    CHECK(exactalg::rank(exactalg::row_stack(w, supp)) == 5);
    Matrix vrow(1, 6, kFieldQ);
    vrow.at(0, 0) = Scalar::one(kFieldQ);
    CHECK(exactalg::rank(exactalg::row_stack(supp, vrow)) == supp.rows());
    CHECK(dual_membership(a, w));
}

TEST_CASE("identity graph over the rationals matches the finite census after reduction") {
    const LagrangianSubspace a = exterior::graph_lagrangian(exactalg::Matrix::identity(10, kFieldQ));
    const SexticEquation sext = sextic_equation(a, 0);
    REQUIRE(sext.kind == SexticKind::Polynomial);
    const LagrangianSubspace a3 = reduce_mod_p(a, 3);
    std::vector<std::pair<std::uint64_t, Scalar>> reduced;
    for (const auto& [key, coeff] : sext.poly.terms()) {
        const mpq_class& q = coeff.rational();
        REQUIRE(mpz_fdiv_ui(q.get_den().get_mpz_t(), 3) != 0);
        const long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), 3);
        const long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), 3);
        reduced.emplace_back(key, Scalar::of_long(3, exactalg::mod_mul(num, exactalg::mod_inverse(den, 3), 3)));
    }
    const MultiPoly poly3 = MultiPoly::from_terms(3, 6, std::move(reduced));
    REQUIRE(!poly3.is_zero());
    for (const auto& pt : projective_points(3))
        CHECK(poly3.eval(to_scalars(3, pt)).is_zero() == (corank_at_point(a3, pt) >= 1));
}

TEST_CASE("rational sextic reduces to the finite field sextic") {
    const Matrix sym = rational_rank9_symmetric();
    const LagrangianSubspace a = exterior::graph_lagrangian(sym);
    const LagrangianSubspace a5 = reduce_mod_p(a, 5);
    CHECK(a5.field == 5);

    Matrix sym5(10, 10, 5);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            sym5.at(i, j) = Scalar::of_long(5, sym.at(i, j).rational().get_num().get_si());
    CHECK(a5.basis == exterior::graph_lagrangian(sym5).basis);
    CHECK(corank_at(a5, unit_point(5, 0)) == 10 - exactalg::rank(sym5));

    const SexticEquation sq = sextic_equation(a, 0);
    const SexticEquation s5 = sextic_equation(a5, 0);
    REQUIRE(sq.kind == SexticKind::Polynomial);
    REQUIRE(s5.kind == SexticKind::Polynomial);
    std::vector<std::pair<std::uint64_t, Scalar>> reduced;
    for (const auto& [key, coeff] : sq.poly.terms()) {
        const mpq_class& q = coeff.rational();
        const long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), 5);
        REQUIRE(den != 0);
        const long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), 5);
        reduced.emplace_back(key, Scalar::of_long(5, exactalg::mod_mul(num, exactalg::mod_inverse(den, 5), 5)));
    }
    CHECK(MultiPoly::from_terms(5, 6, std::move(reduced)) == s5.poly);
}

TEST_CASE("reduction guards and validation") {
    Matrix sym(10, 10, kFieldQ);
    sym.at(0, 0) = Scalar::parse(kFieldQ, "1/5");
    const LagrangianSubspace a = exterior::graph_lagrangian(sym);
    CHECK_THROWS_AS(reduce_mod_p(a, 5), reduction_error);
    const LagrangianSubspace a3 = reduce_mod_p(a, 3);
    CHECK(exterior::is_lagrangian_basis(a3.basis));

    SeededSampler s(112);
    const LagrangianSubspace b = random_graph(s, 3);
    CHECK_THROWS_AS(reduce_mod_p(b, 5), precondition_error);
    const LagrangianSubspace c = exterior::graph_lagrangian(rational_rank9_symmetric());
    CHECK_THROWS_AS(reduce_mod_p(c, 4), precondition_error);
    CHECK_THROWS_AS(reduce_mod_p(c, 2), precondition_error);
}

TEST_CASE("projective point enumeration is canonical, complete and ordered") {
    const auto p3 = projective_points(3);
    const auto p5 = projective_points(5);
    CHECK(p3.size() == 364);
    CHECK(p5.size() == 3906);
    std::set<std::vector<long>> distinct(p3.begin(), p3.end());
    CHECK(distinct.size() == p3.size());
    for (const auto& pt : p3) {
        int lead = 0;
        while (lead < 6 && pt[lead] == 0) ++lead;
        REQUIRE(lead < 6);
        CHECK(pt[lead] == 1);
        for (long x : pt) CHECK((0 <= x && x < 3));
    }
    CHECK(p3.front() == std::vector<long>({1, 0, 0, 0, 0, 0}));
    CHECK(p3[1] == std::vector<long>({1, 0, 0, 0, 0, 1}));
    CHECK(p3[3] == std::vector<long>({1, 0, 0, 0, 1, 0}));
    CHECK(p3[243] == std::vector<long>({0, 1, 0, 0, 0, 0}));
    CHECK(p3.back() == std::vector<long>({0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(projective_points(4), precondition_error);
    CHECK_THROWS_AS(projective_points(0), precondition_error);
}

TEST_CASE("multiplicity of pinned forms at pinned points") {
    const field_t f = kFieldQ;
    // x_0 x_1^2 + x_2^3
    const MultiPoly p = MultiPoly::monomial(f, 6, {1, 2, 0, 0, 0, 0}, Scalar::one(f)) +
                        MultiPoly::monomial(f, 6, {0, 0, 3, 0, 0, 0}, Scalar::one(f));
    CHECK(multiplicity_at(p, unit_point(f, 0)) == 2);
    CHECK(multiplicity_at(p, unit_point(f, 1)) == 1);
    CHECK(multiplicity_at(p, unit_point(f, 3)) == 3);
    CHECK_THROWS_AS(multiplicity_at(p, unit_point(f, 2)), not_on_hypersurface_error);
    std::vector<Scalar> mixed = unit_point(f, 0);
    mixed[1] = Scalar::one(f);
    CHECK_THROWS_AS(multiplicity_at(p, mixed), not_on_hypersurface_error);

    // split sextic: multiplicity at a coordinate point counts the missing factors
    MultiPoly split = MultiPoly::constant(f, 6, Scalar::one(f));
    for (int v = 0; v < 6; ++v) split = split * MultiPoly::variable(f, 6, v);
    CHECK(multiplicity_at(split, unit_point(f, 0)) == 5);
    std::vector<Scalar> two = unit_point(f, 0);
    two[1] = Scalar::one(f);
    CHECK(multiplicity_at(split, two) == 4);

    CHECK_THROWS_AS(multiplicity_at(p, std::vector<Scalar>(6, Scalar::zero(f))), degenerate_input_error);
    CHECK_THROWS_AS(multiplicity_at(MultiPoly::zero(f, 6), unit_point(f, 0)), degenerate_input_error);
}

TEST_CASE("tangent primitive reports off-locus and singular points") {
    const field_t f = kFieldQ;
    const MultiPoly cusp = MultiPoly::monomial(f, 6, {3, 3, 0, 0, 0, 0}, Scalar::one(f));
    const SexticEquation se{SexticKind::Polynomial, cusp, 0};
    CHECK_THROWS_AS(tangent_hyperplane(se, unit_point(f, 2)), not_smooth_error);
    std::vector<Scalar> off = unit_point(f, 0);
    off[1] = Scalar::one(f);
    CHECK_THROWS_AS(tangent_hyperplane(se, off), not_on_hypersurface_error);

    const MultiPoly plane = MultiPoly::monomial(f, 6, {5, 1, 0, 0, 0, 0}, Scalar::one(f));
    const SexticEquation sp{SexticKind::Polynomial, plane, 0};
    const Matrix w = tangent_hyperplane(sp, unit_point(f, 0));
    REQUIRE(w.rows() == 5);
    // gradient at e_0 is the covector dual to x_1, so the kernel misses e_1
    Matrix e1row(1, 6, f);
    e1row.at(0, 1) = Scalar::one(f);
    CHECK(exactalg::rank(exactalg::row_stack(w, e1row)) == 6);

    const SexticEquation zero{SexticKind::IdenticallyZero, MultiPoly::zero(f, 6), 0};
    CHECK_THROWS_AS(tangent_hyperplane(zero, unit_point(f, 0)), precondition_error);
}

TEST_CASE("argument guards across the module") {
    SeededSampler s(113);
    const LagrangianSubspace a = random_graph(s, 3);
    CHECK_THROWS_AS(sextic_equation(a, 6), precondition_error);
    CHECK_THROWS_AS(sextic_equation(a, -1), precondition_error);
    CHECK_THROWS_AS(corank_at(a, std::vector<Scalar>(6, Scalar::zero(3))), degenerate_input_error);
    CHECK_THROWS_AS(corank_at(a, std::vector<Scalar>(5, Scalar::one(3))), shape_error);
    CHECK_THROWS_AS(corank_at_point(a, {1, 0, 0, 0, 0}), shape_error);
    CHECK_THROWS_AS(corank_at_point(a, {0, 0, 0, 0, 0, 0}), degenerate_input_error);

    const LagrangianSubspace q = exterior::graph_lagrangian(rational_rank9_symmetric());
    CHECK_THROWS_AS(corank_at_point(q, {1, 0, 0, 0, 0, 0}), precondition_error);
    CHECK_THROWS_AS(corank_census(q), precondition_error);

    Matrix wbad(5, 6, 3);
    for (int i = 0; i < 4; ++i) wbad.at(i, i) = Scalar::one(3);
    wbad.set_row(4, wbad.row(0));  // rank 4
    CHECK_THROWS_AS(dual_membership(a, wbad), degenerate_input_error);
    CHECK_THROWS_AS(dual_membership(a, Matrix(4, 6, 3)), shape_error);
}
