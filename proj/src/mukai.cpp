#include "epwlab/mukai.hpp"

#include <algorithm>

namespace epwlab::mukai {

namespace {

std::vector<long> amb(std::initializer_list<std::pair<int, long>> entries) {
    std::vector<long> v(kRank, 0);
    for (auto [i, c] : entries) v[i] = c;
    return v;
}

IntMat middle_gram() {
    IntMat g(kMiddleRank, kMiddleRank);
    // Three hyperbolic pairs.
    for (int p = 0; p < 3; ++p) {
        g.at(2 * p, 2 * p + 1) = 1;
        g.at(2 * p + 1, 2 * p) = 1;
    }
    EvenLattice e8 = lattice::minus_e8();
    for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                g.at(6 + 8 * blk + i, 6 + 8 * blk + j) = e8.gram.at(i, j);
    return g;
}

IntMat ambient_gram() {
    IntMat g(kRank, kRank);
    // <1, eta> = -1; the middle block pairs by its intersection form.
    g.at(0, 1) = -1;
    g.at(1, 0) = -1;
    IntMat mid = middle_gram();
    for (int i = 0; i < kMiddleRank; ++i)
        for (int j = 0; j < kMiddleRank; ++j) g.at(2 + i, 2 + j) = mid.at(i, j);
    return g;
}

Fixture build_fixture() {
    Fixture fx;
    fx.ambient = lattice::make_even_lattice(ambient_gram());
    fx.middle = lattice::make_even_lattice(middle_gram());

    fx.unit = amb({{0, 1}});
    fx.eta = amb({{1, 1}});
    fx.alpha = amb({{2, 1}});
    fx.beta = amb({{3, 1}});
    fx.dvec = amb({{2, 1}, {3, 5}});
    fx.v = amb({{0, 2}, {1, 2}, {2, 1}, {3, 5}});
    fx.w = amb({{0, 1}, {1, -1}});
    fx.five_two_five = amb({{0, 5}, {1, 5}, {2, 2}, {3, 10}});

    // The two integral maps into the rank-24 fixture lattice.  Both are
    // the identity on the last two hyperbolic pairs and the E8 blocks.
    {
        IntMat m = IntMat::identity(kRank);
        auto set_row = [&](int i, std::initializer_list<std::pair<int, long>> entries) {
            for (int j = 0; j < kRank; ++j) m.at(i, j) = 0;
            for (auto [j, c] : entries) m.at(i, j) = c;
        };
        set_row(0, {{1, -2}, {3, -1}});            // unit -> -2 f2 - g2
        set_row(1, {{1, -2}, {2, 1}});             // eta -> -2 f2 + g1
        set_row(2, {{0, 1}, {1, 4}, {2, -2}, {3, 2}});  // alpha
        set_row(3, {{1, 1}});                      // beta -> f2
        fx.upsilon = std::move(m);
    }
    {
        IntMat m = IntMat::identity(kRank);
        auto set_row = [&](int i, std::initializer_list<std::pair<int, long>> entries) {
            for (int j = 0; j < kRank; ++j) m.at(i, j) = 0;
            for (auto [j, c] : entries) m.at(i, j) = c;
        };
        set_row(0, {{1, 1}, {3, 2}});              // unit -> f2 + 2 g2
        set_row(1, {{0, -1}, {3, 2}});             // eta -> -f1 + 2 g2
        set_row(2, {{0, -2}, {1, 2}, {2, 1}, {3, 4}});  // alpha
        set_row(3, {{3, 1}});                      // beta -> g2
        fx.theta = std::move(m);
    }

    // comparison(gamma) = -dual(gamma) + (1/2) <dual(gamma), s> s with
    // s = v + w = 3 + D + eta of square 4.
    {
        std::vector<mpq_class> s(kRank, mpq_class(0));
        s[0] = 3;
        s[1] = 1;
        s[2] = 1;
        s[3] = 5;
        Matrix m(kRank, kRank, kFieldQ);
        for (int i = 0; i < kRank; ++i) {
            std::vector<mpq_class> g(kRank, mpq_class(0));
            g[i] = 1;
            std::vector<mpq_class> gd = dual(g);
            mpq_class coef = lattice::pair_q(fx.ambient, gd, s) / 2;
            for (int j = 0; j < kRank; ++j) {
                mpq_class val = -gd[j] + coef * s[j];
                val.canonicalize();
                m.at(i, j) = Scalar::of_mpq(val);
            }
        }
        fx.comparison = std::move(m);
    }

    fx.a0 = amb({{4, 1}, {5, 2}});
    fx.rvec = amb({{5, 1}, {6, 1}, {7, -1}});
    fx.u0 = amb({{0, 1}, {1, 1}, {4, 1}, {5, 1}, {6, -1}, {7, 1}});
    fx.v0 = amb({{0, 2}, {1, 2}, {4, 2}, {5, 3}, {6, -1}, {7, 1}});
    fx.w0 = amb({{0, 1}, {1, 1}, {4, 1}, {5, 2}});
    fx.yvec = amb({{0, 5}, {1, 5}, {4, 4}, {5, 6}, {6, -2}, {7, 2}});

    // Orthogonal of A0 = f1 + 2 f2 inside the middle block, in middle
    // coordinates (alpha beta | f1 f2 | g1' g2' | E8 E8): replace the
    // second hyperbolic pair by f1 - 2 f2.
    {
        std::vector<std::vector<long>> rows;
        std::vector<long> r(kMiddleRank, 0);
        r[2] = 1;
        r[3] = -2;
        rows.push_back(r);  // f1 - 2 f2, square -4
        for (int j : {0, 1, 4, 5}) {
            std::vector<long> e(kMiddleRank, 0);
            e[j] = 1;
            rows.push_back(e);
        }
        for (int j = 6; j < kMiddleRank; ++j) {
            std::vector<long> e(kMiddleRank, 0);
            e[j] = 1;
            rows.push_back(e);
        }
        fx.a0_perp_basis = IntMat::from_rows(rows);
        IntMat g(21, 21);
        for (int i = 0; i < 21; ++i)
            for (int j = 0; j < 21; ++j)
                g.at(i, j) = lattice::pair_int(fx.middle, rows[i], rows[j]);
        fx.a0_perp = lattice::make_even_lattice(std::move(g));
    }
    return fx;
}

}  // namespace

const Fixture& fixture() {
    static const Fixture fx = build_fixture();
    return fx;
}

mpq_class pair(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    return lattice::pair_q(fixture().ambient, a, b);
}

mpz_class pair_int(const std::vector<long>& a, const std::vector<long>& b) {
    return lattice::pair_int(fixture().ambient, a, b);
}

std::vector<mpq_class> dual(const std::vector<mpq_class>& a) {
    if (static_cast<int>(a.size()) != kRank) throw shape_error("vector length mismatch");
    std::vector<mpq_class> r = a;
    for (int i = 2; i < kRank; ++i) r[i] = -r[i];
    return r;
}

std::vector<long> dual_int(const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != kRank) throw shape_error("vector length mismatch");
    std::vector<long> r = a;
    for (int i = 2; i < kRank; ++i) r[i] = -r[i];
    return r;
}

mpq_class wedge_integral(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (static_cast<int>(a.size()) != kRank || static_cast<int>(b.size()) != kRank)
        throw shape_error("vector length mismatch");
    const Fixture& fx = fixture();
    mpq_class total = a[0] * b[1] + a[1] * b[0];
    for (int i = 2; i < kRank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 2; j < kRank; ++j)
            if (b[j] != 0)
                total += a[i] * mpq_class(fx.middle.gram.at(i - 2, j - 2)) * b[j];
    }
    total.canonicalize();
    return total;
}

std::vector<mpq_class> apply_map(const Matrix& m, const std::vector<mpq_class>& x) {
    if (static_cast<int>(x.size()) != m.rows()) throw shape_error("vector length mismatch");
    std::vector<mpq_class> out(m.cols(), mpq_class(0));
    for (int j = 0; j < m.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i)
            if (x[i] != 0) out[j] += x[i] * m.at(i, j).rational();
        out[j].canonicalize();
    }
    return out;
}

std::vector<long> apply_int_map(const IntMat& m, const std::vector<long>& x) {
    if (static_cast<int>(x.size()) != m.rows()) throw shape_error("vector length mismatch");
    std::vector<long> out(m.cols(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        mpz_class c = 0;
        for (int i = 0; i < m.rows(); ++i)
            if (x[i] != 0) c += x[i] * m.at(i, j);
        if (!c.fits_slong_p()) throw internal_error("image coordinate overflow");
        out[j] = c.get_si();
    }
    return out;
}

std::vector<mpq_class> to_q(const std::vector<long>& x) {
    std::vector<mpq_class> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    return r;
}

mpq_class fujiki_quartic(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                         const std::vector<mpq_class>& c, const std::vector<mpq_class>& d) {
    mpq_class total = pair(a, b) * pair(c, d) + pair(a, c) * pair(b, d) +
                      pair(a, d) * pair(b, c);
    total.canonicalize();
    return total;
}

QuarticModelReport quartic_model_check(const std::vector<long>& gamma_middle) {
    const Fixture& fx = fixture();
    if (static_cast<int>(gamma_middle.size()) != kMiddleRank)
        throw shape_error("expected middle-block coordinates");
    std::vector<long> gamma(kRank, 0);
    for (int i = 0; i < kMiddleRank; ++i) gamma[2 + i] = gamma_middle[i];

    QuarticModelReport rep;
    rep.gamma = gamma_middle;
    rep.gamma_dot_r = pair_int(gamma, fx.rvec);
    rep.gamma_dot_a0 = pair_int(gamma, fx.a0);

    lattice::RationalIsometry refl = lattice::reflection(fx.ambient, to_q(fx.u0));
    std::vector<mpq_class> x = apply_map(refl.m, to_q(gamma));
    for (auto& c : x) c = -c;

    rep.full_pairing = pair(x, to_q(fx.yvec));
    // Middle-block wedge component of the product against yvec.
    std::vector<mpq_class> xm = x, ym = to_q(fx.yvec);
    xm[0] = xm[1] = 0;
    ym[0] = ym[1] = 0;
    rep.wedge_component = wedge_integral(xm, ym);

    rep.full_matches = rep.full_pairing == mpq_class(2 * rep.gamma_dot_r);
    rep.wedge_matches = rep.wedge_component == mpq_class(-8 * rep.gamma_dot_r);
    mpq_class diff = rep.full_pairing - rep.wedge_component;
    diff.canonicalize();
    rep.mod5_matches = diff.get_den() == 1 && diff.get_num() % 5 == 0;
    return rep;
}

std::vector<std::vector<long>> enumerate_a0_perp_minus2(long bound, size_t max_count) {
    const Fixture& fx = fixture();
    auto local = lattice::enumerate_minus2(fx.a0_perp, bound, max_count);
    std::vector<std::vector<long>> out;
    out.reserve(local.size());
    for (const auto& c : local) {
        std::vector<long> g(kMiddleRank, 0);
        for (int i = 0; i < 21; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < kMiddleRank; ++j) {
                mpz_class e = fx.a0_perp_basis.at(i, j);
                g[j] += c[i] * e.get_si();
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

IntMat orthogonal_of(const std::vector<std::vector<long>>& constraints) {
    IntMat pairings(kRank, static_cast<int>(constraints.size()));
    for (int i = 0; i < kRank; ++i) {
        std::vector<long> ei(kRank, 0);
        ei[i] = 1;
        for (size_t t = 0; t < constraints.size(); ++t)
            pairings.at(i, static_cast<int>(t)) = pair_int(ei, constraints[t]);
    }
    return exactalg::integer_kernel(pairings);
}

}  // namespace

IntMat triple_orthogonal_basis() {
    const Fixture& fx = fixture();
    return orthogonal_of({fx.v, fx.w, fx.five_two_five});
}

IntMat middle_d_orthogonal_basis() {
    const Fixture& fx = fixture();
    // Vanishing pairing with the unit and eta forces a pure middle-block
    // vector, so the D-orthogonal of the middle block is the orthogonal of
    // {unit, eta, D} in the ambient lattice.
    return orthogonal_of({fx.unit, fx.eta, fx.dvec});
}

}  // namespace epwlab::mukai
