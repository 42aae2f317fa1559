#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epwlab/matrix.hpp"
#include "epwlab/multipoly.hpp"
#include "epwlab/sampler.hpp"
#include "epwlab/scalar.hpp"
#include "epwlab/smith.hpp"

using namespace epwlab;
using namespace epwlab::exactalg;

namespace {

Scalar q(long num, long den = 1) { return Scalar::of_mpq(mpq_class(num, den)); }

// Independent reference determinant: cofactor expansion along the first row.
Scalar cofactor_det(const Matrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Scalar total = Scalar::zero(m.field());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix minor(n - 1, n - 1, m.field());
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Scalar term = m.at(0, j) * cofactor_det(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    Scalar a = q(2, 3), b = q(-1, 6);
    CHECK((a + b).str() == "1/2");
    CHECK((a * b).str() == "-1/9");
    CHECK((a / b).str() == "-4");
    CHECK((a - a).is_zero());
    CHECK(a.inverse().str() == "3/2");

    Scalar x = Scalar::of_long(5, 7);  // 2 mod 5
    Scalar y = Scalar::of_long(5, -1); // 4 mod 5
    CHECK(x.str() == "2");
    CHECK(y.str() == "4");
    CHECK((x + y).str() == "1");
    CHECK((x * y).str() == "3");
    CHECK(x.inverse().str() == "3");
    CHECK((x / y).str() == "3");  // 2 * 4^{-1} = 2 * 4 = 8 = 3

    CHECK_THROWS_AS(Scalar::zero(5).inverse(), undefined_error);
    CHECK_THROWS_AS(q(0).inverse(), undefined_error);
    CHECK_THROWS_AS((void)(a + x), context_error);
    CHECK_THROWS_AS(Scalar::of_long(4, 1), io_error);   // 4 is not prime
    CHECK_THROWS_AS(Scalar::of_long(2, 1), io_error);   // only odd primes
}

TEST_CASE("scalar parsing is strict and canonical") {
    CHECK(Scalar::parse(kFieldQ, "6/4").str() == "3/2");
    CHECK(Scalar::parse(kFieldQ, "-10/5").str() == "-2");
    CHECK(Scalar::parse(kFieldQ, "0").is_zero());
    CHECK(Scalar::parse(7, "12").str() == "5");
    CHECK(Scalar::parse(7, "-1").str() == "6");
    CHECK_THROWS_AS(Scalar::parse(kFieldQ, "abc"), io_error);
    CHECK_THROWS_AS(Scalar::parse(7, "1/2"), io_error);
}

TEST_CASE("seeded sampler is deterministic and respects bounds") {
    SeededSampler s1(42), s2(42);
    for (int i = 0; i < 100; ++i) CHECK(s1.next() == s2.next());
    SeededSampler s3(7);
    for (int i = 0; i < 500; ++i) {
        long v = s3.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    SeededSampler s4(7), s5(8);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= (s4.next() != s5.next());
    CHECK(differs);
}

TEST_CASE("rank and kernel of the hyperbolic plane Gram matrix") {
    Matrix u(2, 2, kFieldQ);
    u.at(0, 1) = q(1);
    u.at(1, 0) = q(1);
    auto rk = rank_and_kernel(u);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.rows() == 0);
}

TEST_CASE("kernel basis is canonical and annihilates the matrix") {
    SeededSampler s(11);
    for (int trial = 0; trial < 20; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        // Build a 4x6 matrix of rank <= 3 by construction: row3 = row0 + row1.
        Matrix m = random_matrix(s, 4, 6, f);
        for (int j = 0; j < 6; ++j) m.at(3, j) = m.at(0, j) + m.at(1, j);
        auto rk = rank_and_kernel(m);
        CHECK(rk.rank <= 3);
        CHECK(rk.rank + rk.kernel.rows() == 6);
        for (int i = 0; i < rk.kernel.rows(); ++i) {
            auto prod = mat_vec(m, rk.kernel.row(i));
            for (const auto& sc : prod) CHECK(sc.is_zero());
        }
    }
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    SeededSampler s(101);
    for (int trial = 0; trial < 40; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 3;
        int n = 1 + static_cast<int>(s.range(0, 4));
        Matrix m = random_matrix(s, n, n, f);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("pinned determinant values") {
    Matrix m(3, 3, kFieldQ);
    long vals[3][3] = {{2, 0, 1}, {-1, 3, 2}, {4, 1, -2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = q(vals[i][j]);
    CHECK(determinant(m).str() == "-29");

    // Rational entries: det [[1/2, 1/3], [1/4, 1/5]] = 1/10 - 1/12 = 1/60.
    Matrix r(2, 2, kFieldQ);
    r.at(0, 0) = q(1, 2);
    r.at(0, 1) = q(1, 3);
    r.at(1, 0) = q(1, 4);
    r.at(1, 1) = q(1, 5);
    CHECK(determinant(r).str() == "1/60");
}

TEST_CASE("determinant vanishes exactly when rank drops") {
    SeededSampler s(202);
    int singular_seen = 0;
    for (int trial = 0; trial < 100; ++trial) {
        field_t f = (trial % 3 == 0) ? kFieldQ : (trial % 3 == 1 ? 3 : 5);
        Matrix m = random_matrix(s, 10, 10, f);
        if (trial % 4 == 0) {
            // Force singularity: last row = sum of the first two rows.
            for (int j = 0; j < 10; ++j) m.at(9, j) = m.at(0, j) + m.at(1, j);
        }
        bool full_rank = rank(m) == 10;
        CHECK(determinant(m).is_zero() == !full_rank);
        if (!full_rank) ++singular_seen;
    }
    CHECK(singular_seen >= 25);
}

TEST_CASE("inverse round trips and rejects singular input") {
    SeededSampler s(303);
    for (int trial = 0; trial < 10; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 7;
        Matrix m = random_matrix(s, 6, 6, f);
        if (rank(m) < 6) continue;
        CHECK(inverse(m) * m == Matrix::identity(6, f));
        CHECK(m * inverse(m) == Matrix::identity(6, f));
    }
    Matrix z(3, 3, kFieldQ);
    CHECK_THROWS_AS(inverse(z), degeneracy_error);
}

TEST_CASE("row space comparison via canonical forms") {
    Matrix a(2, 3, kFieldQ), b(2, 3, kFieldQ);
    a.at(0, 0) = q(1); a.at(0, 1) = q(2); a.at(0, 2) = q(3);
    a.at(1, 0) = q(0); a.at(1, 1) = q(1); a.at(1, 2) = q(1);
    // b spans the same plane: rows are (row0 + row1) and (row0 - row1).
    for (int j = 0; j < 3; ++j) {
        b.at(0, j) = a.at(0, j) + a.at(1, j);
        b.at(1, j) = a.at(0, j) - a.at(1, j);
    }
    CHECK(same_row_space(a, b));
    b.at(1, 2) += q(1);
    CHECK(!same_row_space(a, b));
}

TEST_CASE("smith normal form: pinned examples") {
    // [[2, 1], [1, 2]] has invariant factors 1, 3.
    IntMat m = IntMat::from_rows({{2, 1}, {1, 2}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 3);
    CHECK(s.d.at(0, 1) == 0);
    CHECK(s.d.at(1, 0) == 0);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);

    // diag(2, -2, -2) has invariant factors 2, 2, 2.
    IntMat d3 = IntMat::from_rows({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}});
    SmithResult s3 = smith_normal_form(d3);
    for (int i = 0; i < 3; ++i) CHECK(s3.d.at(i, i) == 2);
    CHECK(s3.u * d3 * s3.v == s3.d);
}

TEST_CASE("smith normal form on random integer matrices") {
    SeededSampler rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + static_cast<int>(rng.range(0, 3));
        int c = 2 + static_cast<int>(rng.range(0, 3));
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rng.range(-6, 6);
        SmithResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(determinant(s.u)) == 1);
        CHECK(abs(determinant(s.v)) == 1);
        int n = std::min(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(s.d.at(i, i) >= 0);
            if (s.d.at(i, i) != 0) CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            if (s.d.at(i, i) == 0) CHECK(s.d.at(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("hermite normal form is canonical on the row space") {
    IntMat a = IntMat::from_rows({{2, 4, 6}, {1, 2, 3}, {0, 0, 5}});
    IntMat h = hermite_normal_form(a);
    CHECK(h.rows() == 2);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 2);
    CHECK(h.at(0, 2) == 3);
    CHECK(h.at(1, 2) == 5);

    // Unimodular row mixing leaves the HNF unchanged.
    IntMat b = IntMat::from_rows({{3, 6, 14}, {1, 2, 3}});
    IntMat c = IntMat::from_rows({{1, 2, 3}, {4, 8, 17}});
    CHECK(hermite_normal_form(b) == hermite_normal_form(c));
}

TEST_CASE("integer kernel is saturated") {
    // Left kernel of rows {(2,4),(1,2)} is generated by (1,-2), not (2,-4).
    IntMat m = IntMat::from_rows({{2, 4}, {1, 2}});
    IntMat k = integer_kernel(m);
    CHECK(k.rows() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 1) == -2);

    // Full-rank square matrix: trivial kernel.
    IntMat f = IntMat::from_rows({{2, 1}, {1, 2}});
    CHECK(integer_kernel(f).rows() == 0);
}

TEST_CASE("graded-lex term order puts highest total degree first") {
    field_t f = kFieldQ;
    MultiPoly p = MultiPoly::monomial(f, 3, {2, 0, 0}, q(1)) +
                  MultiPoly::monomial(f, 3, {0, 0, 3}, q(5));
    CHECK(p.degree() == 3);
    CHECK(monomial_exponents(p.terms().front().first, 3) == std::vector<int>{0, 0, 3});

    // Same degree: lexicographic with x0 > x1 > x2.
    MultiPoly g = MultiPoly::monomial(f, 3, {1, 2, 0}, q(1)) +
                  MultiPoly::monomial(f, 3, {2, 0, 1}, q(1)) +
                  MultiPoly::monomial(f, 3, {1, 1, 1}, q(1));
    CHECK(monomial_exponents(g.terms()[0].first, 3) == std::vector<int>{2, 0, 1});
    CHECK(monomial_exponents(g.terms()[1].first, 3) == std::vector<int>{1, 2, 0});
    CHECK(monomial_exponents(g.terms()[2].first, 3) == std::vector<int>{1, 1, 1});
}

namespace {

MultiPoly random_poly(SeededSampler& s, field_t f, int nvars, int max_deg, int nterms) {
    MultiPoly p(f, nvars);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(nvars);
        int budget = max_deg;
        for (int i = 0; i < nvars; ++i) {
            e[i] = static_cast<int>(s.range(0, budget));
            budget -= e[i];
        }
        p = p + MultiPoly::monomial(f, nvars, e, s.field_element(f));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial ring laws on random samples") {
    SeededSampler s(505);
    for (int trial = 0; trial < 15; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 3;
        MultiPoly a = random_poly(s, f, 4, 4, 5);
        MultiPoly b = random_poly(s, f, 4, 4, 5);
        MultiPoly c = random_poly(s, f, 4, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division round trips and reports remainders") {
    SeededSampler s(606);
    for (int trial = 0; trial < 15; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        MultiPoly a = random_poly(s, f, 3, 3, 4);
        MultiPoly b = random_poly(s, f, 3, 3, 4);
        if (b.is_zero()) continue;
        MultiPoly prod = a * b;
        CHECK(prod.divide_exact(b) == a);
    }

    field_t f = kFieldQ;
    MultiPoly x = MultiPoly::variable(f, 2, 0);
    MultiPoly y = MultiPoly::variable(f, 2, 1);
    MultiPoly p = x * x + y;  // not divisible by x
    bool caught = false;
    try {
        (void)p.divide_exact(x);
    } catch (const divisibility_error& e) {
        caught = true;
        CHECK(!e.remainder.empty());  // witness carries the leftover terms
    }
    CHECK(caught);

    CHECK((x * x * y + x * x * x).divide_by_variable_power(0, 2) == y + x);
    CHECK_THROWS_AS(p.divide_by_variable_power(0, 1), divisibility_error);
}

TEST_CASE("derivative satisfies the product rule") {
    SeededSampler s(707);
    for (int trial = 0; trial < 10; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 7;
        MultiPoly a = random_poly(s, f, 3, 3, 4);
        MultiPoly b = random_poly(s, f, 3, 3, 4);
        for (int v = 0; v < 3; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("gradient accumulation agrees with symbolic differentiation") {
    SeededSampler s(808);
    for (int trial = 0; trial < 12; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        MultiPoly p = random_poly(s, f, 4, 5, 6);
        std::vector<Scalar> pt;
        for (int i = 0; i < 4; ++i) pt.push_back(s.field_element(f));
        auto vg = p.eval_gradient(pt);
        CHECK(vg.value == p.eval(pt));
        for (int v = 0; v < 4; ++v) CHECK(vg.gradient[v] == p.derivative(v).eval(pt));
    }
}

TEST_CASE("shift expansion matches direct evaluation") {
    SeededSampler s(909);
    for (int trial = 0; trial < 10; ++trial) {
        field_t f = (trial % 2 == 0) ? kFieldQ : 5;
        MultiPoly p = random_poly(s, f, 3, 4, 5);
        std::vector<Scalar> base;
        for (int i = 0; i < 3; ++i) base.push_back(s.field_element(f));
        int fixed = static_cast<int>(s.range(0, 2));
        MultiPoly sh = p.shifted(base, fixed);
        // Check p(base + y) == sh(y) at a few sample offsets with y_fixed = 0.
        for (int probe = 0; probe < 4; ++probe) {
            std::vector<Scalar> y, xy;
            for (int i = 0; i < 3; ++i) {
                Scalar off = (i == fixed) ? Scalar::zero(f) : s.field_element(f);
                y.push_back(off);
                xy.push_back(base[i] + off);
            }
            CHECK(sh.eval(y) == p.eval(xy));
        }
    }
}

TEST_CASE("degree bookkeeping") {
    field_t f = kFieldQ;
    MultiPoly x = MultiPoly::variable(f, 2, 0);
    MultiPoly y = MultiPoly::variable(f, 2, 1);
    MultiPoly p = x * x * y + x * y;
    CHECK(p.degree() == 3);
    CHECK(p.lowest_degree() == 2);
    CHECK(!p.is_homogeneous(3));
    CHECK((x * x * y - y * y * y).is_homogeneous(3));
    CHECK_THROWS_AS(MultiPoly::zero(f, 2).lowest_degree(), degenerate_input_error);
    MultiPoly m = (x * y).scaled(q(7)).monic();
    CHECK(m.leading_coefficient().is_one());
}
