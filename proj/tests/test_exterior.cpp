#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epwlab/exterior.hpp"
#include "epwlab/sampler.hpp"

using namespace epwlab;
using namespace epwlab::exactalg;
using namespace epwlab::exterior;

namespace {

Scalar q(long n, long d = 1) { return Scalar::of_mpq(mpq_class(n, d)); }

KVector random_vector1(SeededSampler& s, field_t f) {
    std::vector<Scalar> c;
    for (int i = 0; i < kDimV; ++i) c.push_back(s.field_element(f));
    return vector1(Ambient::V, f, c);
}

}  // namespace

TEST_CASE("tuple bases are lexicographic and indexed consistently") {
    CHECK(pairs().size() == 15);
    CHECK(triples().size() == 20);
    CHECK(pairs()[0] == std::array<int, 2>{0, 1});
    CHECK(pairs()[14] == std::array<int, 2>{4, 5});
    CHECK(triples()[0] == std::array<int, 3>{0, 1, 2});
    CHECK(triples()[19] == std::array<int, 3>{3, 4, 5});
    for (size_t i = 0; i < triples().size(); ++i) {
        auto [a, b, c] = triples()[i];
        CHECK(triple_index(a, b, c) == static_cast<int>(i));
    }
    for (size_t i = 0; i < pairs().size(); ++i) {
        auto [a, b] = pairs()[i];
        CHECK(pair_index(a, b) == static_cast<int>(i));
    }
}

TEST_CASE("wedge is alternating and matches hand signs") {
    field_t f = kFieldQ;
    KVector e0 = KVector::basis(Ambient::V, f, {0});
    KVector e1 = KVector::basis(Ambient::V, f, {1});
    KVector e2 = KVector::basis(Ambient::V, f, {2});

    CHECK(wedge(e0, e0).is_zero());
    KVector e01 = wedge(e0, e1);
    KVector e10 = wedge(e1, e0);
    CHECK(e01.c[pair_index(0, 1)].is_one());
    CHECK((e10 + e01).is_zero());

    // e2 ^ (e0 ^ e1) = + e0 ^ e1 ^ e2 (two transpositions).
    KVector t = wedge(e2, e01);
    CHECK(t.c[triple_index(0, 1, 2)].is_one());
}

TEST_CASE("wedge is associative and bilinear on random inputs") {
    SeededSampler s(42);
    for (int trial = 0; trial < 10; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        KVector a = random_vector1(s, f);
        KVector b = random_vector1(s, f);
        KVector c = random_vector1(s, f);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a, b + c) == wedge(a, b) + wedge(a, c));
        CHECK((wedge(a, b) + wedge(b, a)).is_zero());
        CHECK(wedge(a, a).is_zero());
    }
}

TEST_CASE("symplectic form pairs complementary triples with shuffle signs") {
    field_t f = kFieldQ;
    KVector a = KVector::basis(Ambient::V, f, {0, 1, 2});
    KVector b = KVector::basis(Ambient::V, f, {3, 4, 5});
    CHECK(symplectic_form(a, b).str() == "1");
    CHECK(symplectic_form(b, a).str() == "-1");  // odd-degree swap flips sign
    CHECK(symplectic_form(a, a).is_zero());

    // omega(e_024, e_135): sign of the permutation (0,2,4,1,3,5) = -1.
    KVector c = KVector::basis(Ambient::V, f, {0, 2, 4});
    KVector d = KVector::basis(Ambient::V, f, {1, 3, 5});
    CHECK(symplectic_form(c, d).str() == "-1");
}

TEST_CASE("symplectic form equals the volume coefficient of the wedge") {
    SeededSampler s(43);
    for (int trial = 0; trial < 8; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 3;
        KVector a = wedge(wedge(random_vector1(s, f), random_vector1(s, f)), random_vector1(s, f));
        KVector b = wedge(wedge(random_vector1(s, f), random_vector1(s, f)), random_vector1(s, f));
        KVector top = wedge(a, b);
        CHECK(top.c.size() == 1);
        CHECK(symplectic_form(a, b) == top.c[0]);
    }
}

TEST_CASE("omega Gram matrix is antisymmetric and unimodular") {
    Matrix g = omega_gram(kFieldQ);
    CHECK((g + g.transpose()).is_zero());
    Scalar det = determinant(g);
    CHECK((det.str() == "1" || det.str() == "-1"));
    // Consistency with the form itself on all basis pairs.
    for (int i = 0; i < kDimWedge3; ++i)
        for (int j = 0; j < kDimWedge3; ++j) {
            auto ti = triples()[i];
            auto tj = triples()[j];
            KVector a = KVector::basis(Ambient::V, kFieldQ, {ti[0], ti[1], ti[2]});
            KVector b = KVector::basis(Ambient::V, kFieldQ, {tj[0], tj[1], tj[2]});
            CHECK(symplectic_form(a, b) == g.at(i, j));
        }
}

TEST_CASE("symplectic frame satisfies the duality relations") {
    for (field_t f : {kFieldQ, field_t(3)}) {
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                Scalar pq = symplectic_form(frame_p(f, i), frame_q(f, j));
                CHECK(symplectic_form(frame_p(f, i), frame_p(f, j)).is_zero());
                CHECK(symplectic_form(frame_q(f, i), frame_q(f, j)).is_zero());
                CHECK(pq == (i == j ? Scalar::one(f) : Scalar::zero(f)));
            }
    }
}

TEST_CASE("graph of a symmetric matrix is Lagrangian") {
    SeededSampler s(44);
    for (int trial = 0; trial < 6; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        Matrix sym = random_symmetric_matrix(s, 10, f);
        LagrangianSubspace a = graph_lagrangian(sym);
        CHECK(is_lagrangian_basis(a.basis));
        CHECK(a.basis == rref(a.basis));
    }
    Matrix bad = random_matrix(s, 10, 10, kFieldQ);
    bad.at(0, 1) = bad.at(1, 0) + q(1);
    CHECK_THROWS_AS(graph_lagrangian(bad), precondition_error);
    Matrix wrong(9, 9, kFieldQ);
    CHECK_THROWS_AS(graph_lagrangian(wrong), shape_error);
}

TEST_CASE("fibers of decomposable type are Lagrangian and scale invariant") {
    SeededSampler s(45);
    for (int trial = 0; trial < 6; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 3;
        std::vector<Scalar> v;
        for (int i = 0; i < kDimV; ++i) v.push_back(s.field_element(f));
        bool zero = true;
        for (auto& x : v) zero = zero && x.is_zero();
        if (zero) v[0] = Scalar::one(f);
        LagrangianSubspace fib = fiber(v);
        CHECK(is_lagrangian_basis(fib.basis));

        std::vector<Scalar> w = v;
        Scalar lam = Scalar::of_long(f, 2);
        for (auto& x : w) x *= lam;
        CHECK(fiber(w).basis == fib.basis);

        // v ^ u lies in the fiber for any u.
        KVector u = random_vector1(s, f);
        KVector vu = wedge(wedge(vector1(Ambient::V, f, v), u), random_vector1(s, f));
        Matrix stacked = row_stack(fib.basis, Matrix(1, kDimWedge3, f));
        for (int j = 0; j < kDimWedge3; ++j) stacked.at(10, j) = vu.c[j];
        CHECK(rank(stacked) == 10);
    }
    std::vector<Scalar> zero(kDimV, Scalar::zero(kFieldQ));
    CHECK_THROWS_AS(fiber(zero), degenerate_input_error);
}

TEST_CASE("two independent base vectors give fibers meeting in dimension 4") {
    field_t f = kFieldQ;
    std::vector<Scalar> e1(kDimV, Scalar::zero(f)), e2(kDimV, Scalar::zero(f));
    e1[0] = Scalar::one(f);
    e2[1] = Scalar::one(f);
    Matrix stack = row_stack(fiber(e1).basis, fiber(e2).basis);
    CHECK(rank(stack) == 16);  // 10 + 10 - dim intersection, intersection = e1^e2^V
}

TEST_CASE("annihilator is Lagrangian for the dual form and is involutive") {
    SeededSampler s(46);
    for (int trial = 0; trial < 5; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        LagrangianSubspace a = graph_lagrangian(random_symmetric_matrix(s, 10, f));
        LagrangianSubspace ann = annihilator(a);
        CHECK(ann.ambient == Ambient::Vdual);
        CHECK(is_lagrangian_basis(ann.basis));
        // Pairing of every basis row of a with every row of ann vanishes.
        for (int i = 0; i < 10; ++i) {
            auto row = a.basis.row(i);
            for (int j = 0; j < 10; ++j) CHECK(dot(row, ann.basis.row(j)).is_zero());
        }
        CHECK(annihilator(ann).basis == a.basis);
        CHECK(annihilator(ann).ambient == Ambient::V);
    }
}

TEST_CASE("contraction implements the alternating Leibniz expansion") {
    SeededSampler s(47);
    for (int trial = 0; trial < 8; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 7;
        KVector u = random_vector1(s, f);
        KVector v = random_vector1(s, f);
        KVector w = random_vector1(s, f);
        std::vector<Scalar> phi_c;
        for (int i = 0; i < kDimV; ++i) phi_c.push_back(s.field_element(f));
        KVector phi = vector1(Ambient::Vdual, f, phi_c);

        auto ev = [&](const KVector& x) {
            Scalar t = Scalar::zero(f);
            for (int i = 0; i < kDimV; ++i) t += phi.c[i] * x.c[i];
            return t;
        };
        KVector lhs = contraction(phi, wedge(wedge(u, v), w));
        KVector rhs = wedge(v, w).scaled(ev(u)) - wedge(u, w).scaled(ev(v)) +
                      wedge(u, v).scaled(ev(w));
        CHECK(lhs == rhs);
        // Contracting twice by the same functional gives zero.
        CHECK(contraction(phi, contraction(phi, wedge(wedge(u, v), w))).is_zero());
    }
    KVector bad = KVector::basis(Ambient::V, kFieldQ, {0});
    CHECK_THROWS_AS(contraction(bad, KVector::basis(Ambient::V, kFieldQ, {0, 1, 2})),
                    ambient_error);
}

TEST_CASE("support of a decomposable element is its three-dimensional span") {
    field_t f = kFieldQ;
    KVector e0 = KVector::basis(Ambient::V, f, {0});
    KVector e1 = KVector::basis(Ambient::V, f, {1});
    KVector e2 = KVector::basis(Ambient::V, f, {2});
    KVector e3 = KVector::basis(Ambient::V, f, {3});
    KVector alpha = wedge(wedge(e0 + e1, e2), e3);
    Matrix supp = support(alpha);
    CHECK(supp.rows() == 3);
    Matrix expected(3, kDimV, f);
    expected.at(0, 0) = q(1);
    expected.at(0, 1) = q(1);
    expected.at(1, 2) = q(1);
    expected.at(2, 3) = q(1);
    CHECK(same_row_space(supp, expected));
}

TEST_CASE("support of a split sum is the full space") {
    field_t f = kFieldQ;
    KVector a = KVector::basis(Ambient::V, f, {0, 1, 2});
    KVector b = KVector::basis(Ambient::V, f, {3, 4, 5});
    CHECK(support(a + b).rows() == 6);
}

TEST_CASE("elements lie in the third power of their support") {
    SeededSampler s(48);
    for (int trial = 0; trial < 6; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 3;
        KVector alpha = wedge(wedge(random_vector1(s, f), random_vector1(s, f)),
                              random_vector1(s, f));
        if (trial % 3 == 0)
            alpha = alpha + wedge(wedge(random_vector1(s, f), random_vector1(s, f)),
                                  random_vector1(s, f));
        if (alpha.is_zero()) continue;
        Matrix supp = support(alpha);
        int k = supp.rows();
        if (k < 3) continue;
        // Stack all triple wedges of the support basis; alpha must not
        // enlarge the span.
        std::vector<std::vector<Scalar>> rows;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l) {
                    KVector w = wedge(wedge(vector1(Ambient::V, f, supp.row(i)),
                                            vector1(Ambient::V, f, supp.row(j))),
                                      vector1(Ambient::V, f, supp.row(l)));
                    rows.push_back(w.c);
                }
        Matrix span(static_cast<int>(rows.size()), kDimWedge3, f);
        for (size_t i = 0; i < rows.size(); ++i) span.set_row(static_cast<int>(i), rows[i]);
        int base_rank = rank(span);
        Matrix with_alpha = row_stack(span, Matrix(1, kDimWedge3, f));
        for (int j = 0; j < kDimWedge3; ++j) with_alpha.at(static_cast<int>(rows.size()), j) = alpha.c[j];
        CHECK(rank(with_alpha) == base_rank);
    }
}
