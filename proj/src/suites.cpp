#include "epwlab/suites.hpp"

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "epwlab/epw.hpp"
#include "epwlab/errors.hpp"
#include "epwlab/exterior.hpp"
#include "epwlab/json_io.hpp"
#include "epwlab/lattice.hpp"
#include "epwlab/matrix.hpp"
#include "epwlab/mukai.hpp"
#include "epwlab/sampler.hpp"

namespace epwlab::cli {

using exactalg::field_t;
using exactalg::kFieldQ;
using exactalg::Matrix;
using exactalg::Scalar;
using exactalg::SeededSampler;
using nlohmann::json;

namespace {

struct Recorder {
    std::vector<CheckRecord>* out;
    void add(const std::string& name, const std::string& claim, bool ok,
             json witness = json::object()) {
        out->push_back({name, claim, ok ? "pass" : "fail", std::move(witness)});
    }
};

std::vector<Scalar> to_scalars(field_t f, const std::vector<long>& v) {
    std::vector<Scalar> r;
    r.reserve(v.size());
    for (long x : v) r.push_back(Scalar::of_long(f, x));
    return r;
}

exterior::LagrangianSubspace seeded_graph(std::uint64_t seed, field_t field) {
    SeededSampler sampler(seed);
    Matrix s = exactalg::random_symmetric_matrix(sampler, 10, field);
    return exterior::graph_lagrangian(s);
}

// Fixed rational instance: the graph of S = B^T B for the 9 x 10 integer
// matrix B = [I_9 | (1..9)^T].  S is symmetric of rank 9, so the sextic of
// the graph is singular at exactly one frame point.
exterior::LagrangianSubspace rational_rank9_graph() {
    Matrix b(9, 10, kFieldQ);
    for (int i = 0; i < 9; ++i) {
        b.at(i, i) = Scalar::one(kFieldQ);
        b.at(i, 9) = Scalar::of_long(kFieldQ, i + 1);
    }
    return exterior::graph_lagrangian(b.transpose() * b);
}

// 5 x 6 kernel-row basis of the hyperplane { x : lambda . x = 0 }.
Matrix hyperplane_of(field_t f, const std::vector<Scalar>& lambda) {
    Matrix row(1, 6, f);
    for (int j = 0; j < 6; ++j) row.at(0, j) = lambda[j];
    return exactalg::rank_and_kernel(row).kernel;
}

// The covector cutting out the row space of a 5 x 6 rank-5 matrix.
std::vector<Scalar> covector_of(const Matrix& w) {
    Matrix k = exactalg::rank_and_kernel(w).kernel;
    return k.row(0);
}

std::vector<mpq_class> apply_iso(const lattice::RationalIsometry& iso,
                                 const std::vector<mpq_class>& x) {
    int n = iso.m.rows();
    std::vector<mpq_class> r(static_cast<size_t>(n), mpq_class(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            r[j] += x[i] * iso.m.at(i, j).rational();
    return r;
}

std::vector<mpq_class> q_vec(const std::vector<long>& x) {
    std::vector<mpq_class> r;
    r.reserve(x.size());
    for (long v : x) r.emplace_back(v);
    return r;
}

json q_str(const mpq_class& x) { return x.get_str(); }

// ------------------------------------------------------------------
// Discriminant-form and reflection-conjugation checks on the fixed
// rank-23 lattice (2) (+) core.
// ------------------------------------------------------------------
void lattice_checks(const SuiteConfig& cfg, Recorder& rec) {
    const lattice::Fixture& fx = lattice::fixture();
    const lattice::FiniteQuadForm& f = fx.disc_u_plus_core;

    {
        bool ok = f.orders == std::vector<long>{2, 2, 2} && f.group_order() == 8;
        rec.add("lattice/discriminant-group",
                "the discriminant group of the rank-23 lattice (2) + core is (Z/2)^3",
                ok, {{"orders", f.orders}});
    }

    {
        // Identify the generator carrying q = 1/2; the other two carry 3/2.
        std::multiset<mpq_class> qs(f.q_table.begin(), f.q_table.end());
        std::multiset<mpq_class> expected{mpq_class(1, 2), mpq_class(3, 2), mpq_class(3, 2)};
        bool ok = qs == expected;
        for (size_t i = 0; i < 3 && ok; ++i)
            for (size_t j = 0; j < i; ++j)
                if (f.b_table[i][j] != 0) ok = false;
        size_t xi = 0;
        while (xi < 3 && f.q_table[xi] != mpq_class(1, 2)) ++xi;
        if (xi == 3) ok = false;
        if (ok)
            for (long c0 = 0; c0 < 2 && ok; ++c0)
                for (long c1 = 0; c1 < 2 && ok; ++c1)
                    for (long c2 = 0; c2 < 2 && ok; ++c2) {
                        std::vector<long> cls{c0, c1, c2};
                        long x = cls[xi], ysum = 0;
                        for (size_t t = 0; t < 3; ++t)
                            if (t != xi) ysum += cls[t] * cls[t];
                        long rep = (((x * x - ysum) % 4) + 4) % 4;
                        mpq_class want(rep, 2);
                        want.canonicalize();
                        if (lattice::q_value(fx.u_plus_core, f, cls) != want) ok = false;
                    }
        rec.add("lattice/torsion-form-closed-form",
                "on every class the torsion form equals (x^2 - y1^2 - y2^2)/2 mod 2, "
                "with x on the norm-2 generator and y on the two norm-(-2) generators",
                ok,
                {{"q_values", {q_str(f.q_table[0]), q_str(f.q_table[1]), q_str(f.q_table[2])}}});
    }

    {
        auto iso = lattice::isotropic_elements(fx.u_plus_core, f);
        std::set<std::vector<long>> got(iso.begin(), iso.end());
        std::set<std::vector<long>> expect{fx.class_u_e1, fx.class_u_e2};
        bool ok = iso.size() == 2 && got == expect && fx.class_u_e1 != fx.class_u_e2;
        rec.add("lattice/isotropic-classes",
                "exactly two nonzero classes are isotropic: [(u+e1)/2] and [(u+e2)/2]",
                ok, {{"count", iso.size()}});
    }

    {
        bool swap_acts = lattice::epsilon_swaps(fx.swap_u_plus_core);
        bool id_fixes = !lattice::epsilon_swaps(lattice::identity_isometry(fx.u_plus_core));
        bool neg_fixes = !lattice::epsilon_swaps(lattice::negation_isometry(fx.u_plus_core));
        rec.add("lattice/epsilon-of-swap",
                "the e1<->e2 involution exchanges the two isotropic classes; "
                "the identity and -1 fix them",
                swap_acts && id_fixes && neg_fixes,
                {{"swap", swap_acts}, {"identity", !id_fixes}, {"negation", !neg_fixes}});
    }

    {
        lattice::Overlattice m1 =
            lattice::overlattice(fx.u_plus_core, f, {fx.class_u_e1});
        lattice::Overlattice m2 =
            lattice::overlattice(fx.u_plus_core, f, {fx.class_u_e2});
        bool ok = m1.index == 2 && m2.index == 2;
        ok = ok && abs(lattice::gram_det(m1.lattice)) == 2 &&
             abs(lattice::gram_det(m2.lattice)) == 2;
        // Both grams are even by construction of make_even_lattice; the swap
        // must carry each overlattice onto the other and not fix either.
        auto contains = [](const lattice::Overlattice& m, const std::vector<mpq_class>& y) {
            int n = static_cast<int>(m.basis.size());
            Matrix b(n, n, kFieldQ);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b.at(i, j) = Scalar::of_mpq(m.basis[i][j]);
            Matrix row(1, n, kFieldQ);
            for (int j = 0; j < n; ++j) row.at(0, j) = Scalar::of_mpq(y[j]);
            Matrix x = row * exactalg::inverse(b);
            for (int j = 0; j < n; ++j)
                if (x.at(0, j).rational().get_den() != 1) return false;
            return true;
        };
        auto maps_into = [&](const lattice::Overlattice& from, const lattice::Overlattice& to) {
            for (const auto& row : from.basis)
                if (!contains(to, apply_iso(fx.swap_u_plus_core, row))) return false;
            return true;
        };
        bool exchanged = maps_into(m1, m2) && maps_into(m2, m1) && !maps_into(m1, m1);
        rec.add("lattice/overlattices",
                "the two isotropic classes give even index-2 overlattices of determinant "
                "-2, exchanged by the e1<->e2 involution",
                ok && exchanged,
                {{"index", m1.index},
                 {"det_1", lattice::gram_det(m1.lattice).get_str()},
                 {"det_2", lattice::gram_det(m2.lattice).get_str()},
                 {"exchanged", exchanged}});
    }

    {
        bool ok = lattice::gram_det(fx.big) == 1 && lattice::gram_det(fx.tilde) == 2 &&
                  lattice::gram_det(fx.core) == 4 && lattice::gram_det(fx.u_plus_core) == 8;
        ok = ok && lattice::pair_int(fx.big, fx.z, fx.z) == 2 &&
             lattice::pair_int(fx.big, fx.u, fx.u) == 2 &&
             lattice::pair_int(fx.big, fx.z, fx.u) == 0 &&
             lattice::pair_int(fx.big, fx.zeta, fx.zeta) == -10 &&
             lattice::pair_int(fx.big, fx.e1, fx.e1) == -2 &&
             lattice::pair_int(fx.big, fx.e2, fx.e2) == -2 &&
             lattice::pair_int(fx.big, fx.e1, fx.e2) == 0;
        rec.add("lattice/fixture-grams",
                "pinned determinants 1/2/4/8 of the nested fixture lattices and the "
                "squares 2, 2, -10 of z, u, zeta",
                ok, {{"det_big", lattice::gram_det(fx.big).get_str()}});
    }

    {
        size_t want = static_cast<size_t>(std::max(cfg.samples, 100));
        std::vector<std::vector<long>> xs =
            lattice::enumerate_minus2(fx.core, cfg.bound, want);
        bool enough = xs.size() >= 100;
        bool formula_ok = true, implication_ok = true;
        long integral = 0, mod5_zero = 0, two_sided = 0;
        for (const auto& xi : xs) {
            lattice::ConjugateReflectionReport rep = lattice::conjugate_reflection_check(xi);
            formula_ok = formula_ok && rep.formula_matches;
            implication_ok = implication_ok && rep.implication_holds;
            if (rep.integral) ++integral;
            if (rep.xi_dot_zeta_mod5 == 0) ++mod5_zero;
            if (rep.integral == (rep.xi_dot_zeta_mod5 == 0)) ++two_sided;
        }
        rec.add("lattice/conjugated-reflection",
                "for every enumerated norm -2 vector the closed form for the conjugated "
                "reflection equals the matrix composition, and integrality forces the "
                "pairing with zeta to vanish mod 5",
                enough && formula_ok && implication_ok,
                {{"enumerated", xs.size()},
                 {"bound", cfg.bound},
                 {"integral", integral},
                 {"pairing_mod5_zero", mod5_zero},
                 {"equivalence_holds_on", two_sided}});
    }

    {
        // Norm -2 vectors orthogonal to both e1 and e2: conjugating by the
        // zeta-reflection turns them into plain reflections, so the composite
        // is integral and the zeta-pairing is 0.  Coordinates 2..3 are the
        // first hyperbolic block, 6 is the first root coordinate.
        std::vector<long> u_block(static_cast<size_t>(fx.core.rank()), 0);
        u_block[2] = 1;
        u_block[3] = -1;
        std::vector<long> root(static_cast<size_t>(fx.core.rank()), 0);
        root[6] = 1;
        lattice::ConjugateReflectionReport ru = lattice::conjugate_reflection_check(u_block);
        lattice::ConjugateReflectionReport rr = lattice::conjugate_reflection_check(root);
        lattice::ConjugateReflectionReport re = lattice::conjugate_reflection_check(fx.core_e1);
        bool ok = ru.integral && ru.xi_dot_zeta_mod5 == 0 && rr.integral &&
                  rr.xi_dot_zeta_mod5 == 0 && !re.integral && re.xi_dot_zeta_mod5 != 0 &&
                  ru.formula_matches && rr.formula_matches && re.formula_matches;
        rec.add("lattice/conjugated-reflection-integrality",
                "vectors orthogonal to e1 and e2 give integral composites with zeta-"
                "pairing 0 mod 5; e1 itself gives a non-integral composite with "
                "nonzero pairing",
                ok,
                {{"integral_pairings", {ru.xi_dot_zeta_mod5, rr.xi_dot_zeta_mod5}},
                 {"e1_pairing_mod5", re.xi_dot_zeta_mod5}});
    }

    {
        lattice::ConjugateReflectionReport rep =
            lattice::conjugate_reflection_check(fx.core_e1);
        std::vector<mpq_class> want(static_cast<size_t>(fx.core.rank()), mpq_class(0));
        want[0] = mpq_class(-7, 25);
        want[1] = mpq_class(-24, 25);
        rec.add("lattice/conjugated-reflection-pinned",
                "conjugating the reflection in e1 sends e1 to (-7/25) e1 - (24/25) e2",
                rep.e1_image == want,
                {{"e1_image", {q_str(rep.e1_image[0]), q_str(rep.e1_image[1])}}});
    }
}

// ------------------------------------------------------------------
// Checks on the two embeddings of the rank-24 total lattice and the
// degree-4 polarized model.
// ------------------------------------------------------------------
void mukai_checks(const SuiteConfig& cfg, Recorder& rec) {
    const mukai::Fixture& mf = mukai::fixture();
    const lattice::Fixture& lf = lattice::fixture();

    {
        bool ok = mukai::pair_int(mf.v, mf.v) == 2 && mukai::pair_int(mf.w, mf.w) == 2 &&
                  mukai::pair_int(mf.five_two_five, mf.five_two_five) == -10 &&
                  mukai::pair_int(mf.unit, mf.eta) == -1 &&
                  mukai::pair_int(mf.dvec, mf.dvec) == 10 &&
                  mukai::pair_int(mf.u0, mf.u0) == -2 &&
                  mukai::pair_int(mf.v0, mf.v0) == 2 && mukai::pair_int(mf.w0, mf.w0) == 2;
        rec.add("mukai/pinned-squares",
                "squares 2, 2, -10, 10 of v, w, 5+2D+5eta, D and -1 for <1, eta>",
                ok, json::object());
    }

    {
        auto int_row = [](const exactalg::IntMat& m, int i) {
            std::vector<long> r(static_cast<size_t>(m.cols()));
            for (int j = 0; j < m.cols(); ++j) r[static_cast<size_t>(j)] = m.at(i, j).get_si();
            return r;
        };
        auto preserves = [&](const exactalg::IntMat& emb) {
            for (int i = 0; i < 24; ++i)
                for (int j = 0; j <= i; ++j)
                    if (lattice::pair_int(lf.big, int_row(emb, i), int_row(emb, j)) !=
                        mf.ambient.gram.at(i, j))
                        return false;
            return true;
        };
        bool ok = preserves(mf.upsilon) && preserves(mf.theta);
        rec.add("mukai/embeddings-isometric",
                "both integral embeddings preserve all 24 x 24 basis pairings",
                ok, {{"pairings_checked", 2 * 24 * 25 / 2}});
    }

    {
        std::vector<long> minus_w_dual = mukai::dual_int(mf.w);
        for (long& c : minus_w_dual) c = -c;
        std::vector<long> minus_v_dual = mukai::dual_int(mf.v);
        for (long& c : minus_v_dual) c = -c;
        bool ok = mukai::apply_int_map(mf.upsilon, mf.v) == lf.z &&
                  mukai::apply_int_map(mf.theta, mf.w) == lf.z &&
                  mukai::apply_int_map(mf.upsilon, minus_w_dual) == lf.u &&
                  mukai::apply_int_map(mf.theta, minus_v_dual) == lf.u;
        rec.add("mukai/pinned-images",
                "the first embedding sends v to z and -dual(w) to u; the second sends "
                "w to z and -dual(v) to u",
                ok, json::object());
    }

    {
        std::vector<long> want(static_cast<size_t>(lf.big.rank()), 0);
        for (size_t i = 0; i < want.size(); ++i) want[i] = lf.e1[i] + 2 * lf.e2[i];
        bool ok = lf.zeta == want && lattice::pair_int(lf.big, lf.zeta, lf.zeta) == -10;
        rec.add("mukai/distinguished-vector", "zeta = e1 + 2 e2 and zeta^2 = -10", ok,
                json::object());
    }

    {
        // Row convention: x -> ((x * comparison) * upsilon) * swap equals x * theta.
        bool ok = true;
        for (int i = 0; i < 24 && ok; ++i) {
            std::vector<mpq_class> x(24, mpq_class(0));
            x[static_cast<size_t>(i)] = 1;
            std::vector<mpq_class> y = mukai::apply_map(mf.comparison, x);
            std::vector<mpq_class> z(24, mpq_class(0));
            for (int j = 0; j < 24; ++j)
                for (int k = 0; k < 24; ++k) z[static_cast<size_t>(j)] += y[static_cast<size_t>(k)] * mf.upsilon.at(k, j);
            std::vector<mpq_class> w = apply_iso(lf.swap_big, z);
            for (int j = 0; j < 24; ++j)
                if (w[static_cast<size_t>(j)] != mf.theta.at(i, j)) ok = false;
        }
        rec.add("mukai/factorization",
                "the second embedding factors as the comparison map, then the first "
                "embedding, then the z-orthogonal involution, on all basis vectors",
                ok, json::object());
    }

    {
        lattice::RationalIsometry r = lattice::reflection_int(mf.ambient, mf.u0);
        std::vector<mpq_class> img = apply_iso(r, q_vec(mf.v0));
        for (auto& c : img) c = -c;
        bool ok = img == q_vec(mf.w0);
        rec.add("mukai/quartic-model-reflection",
                "minus the reflection in the norm -2 vector u0 sends v0 to w0",
                ok, json::object());
    }

    {
        exactalg::IntMat a = mukai::triple_orthogonal_basis();
        exactalg::IntMat b = mukai::middle_d_orthogonal_basis();
        bool ok = a.rows() == 21 && a == b;
        rec.add("mukai/primitive-complements",
                "the orthogonal of {v, w, 5+2D+5eta} equals the D-orthogonal of the "
                "middle block, both saturated of rank 21",
                ok, {{"rank", a.rows()}});
    }

    {
        size_t want = static_cast<size_t>(std::max(cfg.samples, 50));
        std::vector<std::vector<long>> gs = mukai::enumerate_a0_perp_minus2(2, want);
        if (gs.size() < 50) gs = mukai::enumerate_a0_perp_minus2(3, want);
        bool ok = gs.size() >= 50;
        for (const auto& g : gs) {
            mukai::QuarticModelReport rep = mukai::quartic_model_check(g);
            ok = ok && rep.full_matches && rep.wedge_matches && rep.mod5_matches;
        }
        rec.add("mukai/quartic-model-pairings",
                "on norm -2 classes orthogonal to A0, the full pairing with y is "
                "2 (gamma . R), its wedge component is -8 (gamma . R), and the two "
                "agree mod 5",
                ok, {{"classes", gs.size()}});
    }

    {
        std::vector<mpq_class> a = mukai::to_q(mf.alpha), b = mukai::to_q(mf.beta);
        mpq_class ab = mukai::pair(a, b);
        bool ok = mukai::fujiki_quartic(a, a, b, b) == 2 * ab * ab;
        SeededSampler s(cfg.seed);
        for (int t = 0; t < 10 && ok; ++t) {
            std::vector<mpq_class> x(24);
            for (auto& c : x) c = s.range(-3, 3);
            mpq_class n = mukai::pair(x, x);
            ok = mukai::fujiki_quartic(x, x, x, x) == 3 * n * n;
        }
        rec.add("mukai/fujiki-values",
                "the three-pairing sum gives 2 (alpha . beta)^2 on the isotropic pair "
                "and 3 (x . x)^2 on fourth powers",
                ok, json::object());
    }
}

// ------------------------------------------------------------------
// Degeneracy-sextic oracle: pointwise corank vs vanishing over small
// prime fields.
// ------------------------------------------------------------------
void epw_oracle_checks(const SuiteConfig& cfg, Recorder& rec) {
    field_t p = (cfg.field > 0) ? cfg.field : 3;
    exactalg::require_valid_field(p);
    if (p == kFieldQ) throw precondition_error("oracle suite needs a finite field");

    auto points = epw::projective_points(p);
    for (int i = 0; i < 5; ++i) {
        exterior::LagrangianSubspace a = seeded_graph(cfg.seed + static_cast<std::uint64_t>(i), p);
        epw::SexticEquation s0 = epw::sextic_equation(a, 0);
        epw::SexticEquation s1 = epw::sextic_equation(a, 1);
        std::string tag = "-seed" + std::to_string(i);
        rec.add("epw-oracle/chart-agreement" + tag,
                "the normalized sextics from the first two charts coincide",
                s0.kind == epw::SexticKind::Polynomial && s0.poly == s1.poly,
                {{"terms", s0.poly.num_terms()}});

        bool agree = s0.kind == epw::SexticKind::Polynomial;
        long on_locus = 0;
        std::map<int, long> by_corank;
        for (const auto& pt : points) {
            int c = epw::corank_at_point(a, pt);
            ++by_corank[c];
            bool vanish = s0.poly.eval(to_scalars(p, pt)).is_zero();
            if (vanish) ++on_locus;
            if (vanish != (c >= 1)) agree = false;
        }
        json bc = json::object();
        for (const auto& [c, n] : by_corank) bc[std::to_string(c)] = n;
        rec.add("epw-oracle/census-oracle" + tag,
                "at every point of the projective space the sextic vanishes exactly "
                "when the fiber intersection is nonzero",
                agree,
                {{"points", points.size()}, {"on_locus", on_locus}, {"by_corank", bc}});
    }

    {
        exterior::LagrangianSubspace a = seeded_graph(cfg.seed, 5);
        epw::SexticEquation s = epw::sextic_equation(a, 0);
        bool agree = s.kind == epw::SexticKind::Polynomial;
        long on_locus = 0;
        auto pts5 = epw::projective_points(5);
        for (const auto& pt : pts5) {
            bool vanish = s.poly.eval(to_scalars(5, pt)).is_zero();
            if (vanish) ++on_locus;
            if (vanish != (epw::corank_at_point(a, pt) >= 1)) agree = false;
        }
        rec.add("epw-oracle/field5-census",
                "the oracle also agrees at all 3906 points over the field with five "
                "elements",
                agree && pts5.size() == 3906,
                {{"points", pts5.size()},
                 {"on_locus", on_locus},
                 // A smooth sextic fourfold over F_5 has on the order of
                 // p^4 + p^3 + p^2 + p + 1 = 781 points; recorded for context
                 // only, never asserted.
                 {"reference_count", 781}});
    }

    {
        std::vector<Scalar> e0(6, Scalar::zero(p));
        e0[0] = Scalar::one(p);
        exterior::LagrangianSubspace fib = exterior::fiber(e0);
        bool ok = epw::sextic_equation(fib, 0).kind == epw::SexticKind::IdenticallyZero &&
                  epw::sextic_equation(fib, 1).kind == epw::SexticKind::IdenticallyZero;
        rec.add("epw-oracle/fiber-degenerate",
                "a fiber Lagrangian meets every fiber, so its determinant vanishes "
                "identically in every chart",
                ok, json::object());
    }
}

// ------------------------------------------------------------------
// Duality: hyperplane membership against the annihilator's sextic,
// tangent hyperplanes of smooth points, biduality.
// ------------------------------------------------------------------
void epw_duality_checks(const SuiteConfig& cfg, Recorder& rec) {
    field_t p = (cfg.field > 0) ? cfg.field : 5;
    exactalg::require_valid_field(p);
    if (p == kFieldQ) throw precondition_error("duality suite needs a finite field for its census half");

    exterior::LagrangianSubspace a = seeded_graph(cfg.seed, p);
    exterior::LagrangianSubspace ann = exterior::annihilator(a);
    exterior::LagrangianSubspace aq = rational_rank9_graph();
    exterior::LagrangianSubspace annq = exterior::annihilator(aq);

    rec.add("epw-duality/annihilator-lagrangian",
            "annihilators are Lagrangian for the dual symplectic form, over the finite "
            "field and over the rationals",
            exterior::is_lagrangian_basis(ann.basis) &&
                ann.ambient == exterior::Ambient::Vdual &&
                exterior::is_lagrangian_basis(annq.basis) &&
                annq.ambient == exterior::Ambient::Vdual,
            json::object());

    epw::SexticEquation ds = epw::sextic_equation(ann, 0);
    epw::SexticEquation dsq = epw::sextic_equation(annq, 0);
    bool both_polys = ds.kind == epw::SexticKind::Polynomial &&
                      dsq.kind == epw::SexticKind::Polynomial;
    rec.add("epw-duality/dual-sextics-exist",
            "both annihilators have a nonzero normalized sextic", both_polys,
            {{"finite_terms", ds.poly.num_terms()}, {"rational_terms", dsq.poly.num_terms()}});
    if (!both_polys) return;

    {
        SeededSampler sampler(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
        int n = cfg.samples;
        bool agree = true;
        long member = 0;
        for (int t = 0; t < n; ++t) {
            std::vector<Scalar> lambda(6, Scalar::zero(p));
            bool nonzero = false;
            while (!nonzero)
                for (auto& c : lambda) {
                    c = sampler.field_element(p);
                    nonzero = nonzero || !c.is_zero();
                }
            Matrix w = hyperplane_of(p, lambda);
            bool via_wedge = epw::dual_membership(a, w);
            bool via_corank = epw::corank_at(ann, lambda) >= 1;
            bool via_sextic = ds.poly.eval(lambda).is_zero();
            if (via_wedge) ++member;
            if (via_wedge != via_corank || via_wedge != via_sextic) agree = false;
        }
        rec.add("epw-duality/hyperplane-agreement",
                "for random hyperplanes W, the triple wedge of W meets A exactly when "
                "the annihilator's sextic vanishes at [W]",
                agree && n >= 1,
                {{"samples", n}, {"member", member}, {"non_member", n - member}});
    }

    {
        SeededSampler sampler(cfg.seed ^ 0xBF58476D1CE4E5B9ULL);
        int n = cfg.samples;
        bool agree = true;
        long member = 0;
        for (int t = 0; t < n; ++t) {
            std::vector<Scalar> lambda(6, Scalar::zero(kFieldQ));
            bool nonzero = false;
            while (!nonzero)
                for (auto& c : lambda) {
                    c = Scalar::of_long(kFieldQ, sampler.range(-4, 4));
                    nonzero = nonzero || !c.is_zero();
                }
            Matrix w = hyperplane_of(kFieldQ, lambda);
            bool via_wedge = epw::dual_membership(aq, w);
            bool via_corank = epw::corank_at(annq, lambda) >= 1;
            bool via_sextic = dsq.poly.eval(lambda).is_zero();
            if (via_wedge) ++member;
            if (via_wedge != via_corank || via_wedge != via_sextic) agree = false;
        }
        rec.add("epw-duality/rational-hyperplane-agreement",
                "the same three-way agreement holds for the rational instance",
                agree && n >= 1,
                {{"samples", n}, {"member", member}, {"non_member", n - member}});
    }

    {
        long checked = 0;
        bool ok = true;
        for (const auto& pt : epw::projective_points(p)) {
            if (checked >= 50) break;
            if (epw::corank_at_point(a, pt) != 1) continue;
            ++checked;
            std::vector<Scalar> v = to_scalars(p, pt);
            Matrix wt = epw::tangent_hyperplane(a, v);
            Matrix alpha_rows = epw::intersection_with_fiber(a, v);
            exterior::KVector alpha{exterior::Ambient::V, 3, p, alpha_rows.row(0)};
            Matrix supp = exterior::support(alpha);
            std::vector<Scalar> lt = covector_of(wt);
            bool tangent_on_dual = ds.poly.eval(lt).is_zero() && epw::dual_membership(a, wt);
            if (!(supp == wt && tangent_on_dual)) ok = false;
        }
        rec.add("epw-duality/smooth-tangents",
                "at smooth points the support of the kernel trivector equals the "
                "tangent hyperplane, and that hyperplane lies on the dual sextic",
                ok && checked >= 50, {{"smooth_points", checked}});
    }

    {
        std::vector<Scalar> e0(6, Scalar::zero(kFieldQ));
        e0[0] = Scalar::one(kFieldQ);
        bool ok = epw::corank_at(aq, e0) == 1;
        if (ok) {
            Matrix wt = epw::tangent_hyperplane(aq, e0);
            Matrix alpha_rows = epw::intersection_with_fiber(aq, e0);
            exterior::KVector alpha{exterior::Ambient::V, 3, kFieldQ, alpha_rows.row(0)};
            ok = exterior::support(alpha) == wt && dsq.poly.eval(covector_of(wt)).is_zero() &&
                 epw::dual_membership(aq, wt);
        }
        rec.add("epw-duality/rational-smooth-tangent",
                "the rational instance is smooth at the first frame point with the "
                "same support and tangency behaviour",
                ok, json::object());
    }

    {
        exterior::LagrangianSubspace bidual = exterior::annihilator(ann);
        exterior::LagrangianSubspace bidualq = exterior::annihilator(annq);
        bool ok = bidual.basis == a.basis && bidualq.basis == aq.basis;
        if (ok) {
            ok = epw::sextic_equation(bidual, 0).poly == epw::sextic_equation(a, 0).poly &&
                 epw::sextic_equation(bidualq, 0).poly == epw::sextic_equation(aq, 0).poly;
        }
        rec.add("epw-duality/biduality",
                "the annihilator of the annihilator is the original subspace, with the "
                "same normalized sextic",
                ok, json::object());
    }
}

}  // namespace

bool SuiteReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status != "pass") return false;
    return true;
}

const std::vector<std::string>& out_of_scope_notes() {
    static const std::vector<std::string> notes{
        "degree 40 of the singular surface of a generic degeneracy sextic: "
        "recorded, not recomputed",
        "the triple point of the dual sextic for subspaces built from degree-2 "
        "polarized K3 surfaces: needs surface data outside this toolkit",
        "period-map statements: transcendental, outside exact finite verification",
    };
    return notes;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.seed = config.seed;
    report.out_of_scope = out_of_scope_notes();
    Recorder rec{&report.checks};

    if (name == "lattice") {
        report.field = kFieldQ;
        lattice_checks(config, rec);
    } else if (name == "mukai") {
        report.field = kFieldQ;
        mukai_checks(config, rec);
    } else if (name == "epw-oracle") {
        report.field = (config.field > 0) ? config.field : 3;
        epw_oracle_checks(config, rec);
    } else if (name == "epw-duality") {
        report.field = (config.field > 0) ? config.field : 5;
        epw_duality_checks(config, rec);
    } else if (name == "all") {
        report.field = kFieldQ;
        lattice_checks(config, rec);
        mukai_checks(config, rec);
        epw_oracle_checks(config, rec);
        epw_duality_checks(config, rec);
    } else {
        throw precondition_error("unknown suite: " + name);
    }

    auto end = std::chrono::steady_clock::now();
    report.duration_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return report;
}

json report_to_json(const SuiteReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"claim", c.claim},
                          {"status", c.status},
                          {"witness", c.witness}});
    return json{{"suite", report.suite},
                {"seed", report.seed},
                {"field", io::field_to_json(report.field)},
                {"out_of_scope", report.out_of_scope},
                {"checks", checks},
                {"duration_ms", report.duration_ms}};
}

SuiteReport report_from_json(const json& j) {
    try {
        SuiteReport r;
        r.suite = j.at("suite").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.field = io::field_from_json(j.at("field"));
        for (const auto& s : j.at("out_of_scope")) r.out_of_scope.push_back(s.get<std::string>());
        for (const auto& c : j.at("checks")) {
            CheckRecord rec{c.at("name").get<std::string>(), c.at("claim").get<std::string>(),
                            c.at("status").get<std::string>(), c.at("witness")};
            if (rec.status != "pass" && rec.status != "fail" && rec.status != "skipped")
                throw io_error("unknown check status: " + rec.status);
            r.checks.push_back(std::move(rec));
        }
        r.duration_ms = j.at("duration_ms").get<long>();
        return r;
    } catch (const json::exception& e) {
        throw io_error(std::string("malformed report: ") + e.what());
    }
}

}  // namespace epwlab::cli
