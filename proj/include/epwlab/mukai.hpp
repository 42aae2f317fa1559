#pragma once

#include <string>
#include <vector>

#include "epwlab/lattice.hpp"

// The rank-24 unimodular lattice of total cohomology type: a degree-0 unit,
// a degree-4 class eta, and a rank-22 middle block U^3 (+) (-E8)^2, with
// distinguished vectors, two integral embeddings into the rank-24 fixture
// lattice, and the rational comparison map connecting them.
namespace epwlab::mukai {

using exactalg::IntMat;
using exactalg::kFieldQ;
using exactalg::Matrix;
using exactalg::Scalar;
using lattice::EvenLattice;

inline constexpr int kRank = 24;
inline constexpr int kMiddleRank = 22;

// Ambient coordinates: 0 = unit, 1 = eta, 2 = alpha, 3 = beta,
// 4..5 and 6..7 hyperbolic pairs, 8..15 and 16..23 negated-E8 blocks.
// Middle (degree-2) coordinates drop the first two.
struct Fixture {
    EvenLattice ambient;  // <a,b> = a2.b2 - a0 b4 - a4 b0
    EvenLattice middle;   // rank 22: U^3 (+) (-E8)^2

    std::vector<long> unit, eta, alpha, beta;
    std::vector<long> dvec;            // alpha + 5 beta, square 10
    std::vector<long> v;               // 2 + D + 2 eta, square 2
    std::vector<long> w;               // 1 - eta, square 2
    std::vector<long> five_two_five;   // 5 + 2D + 5 eta, square -10

    // Integral maps into the rank-24 fixture lattice, row convention.
    IntMat upsilon;
    IntMat theta;
    // Rational self-map: gamma -> -dual(gamma) + (1/2) <dual(gamma), v+w> (v+w).
    Matrix comparison;

    // Degree-4 polarized model: A0 = f1 + 2 f2 and R = f2 + g1' - g2' in
    // the second and third hyperbolic pairs, with the norm -2 vector
    // u0 = 1 + (A0 - R) + eta and the pinned images around it.
    std::vector<long> a0, rvec;
    std::vector<long> u0;    // square -2
    std::vector<long> v0;    // 2 + (2A0 - R) + 2 eta, square 2
    std::vector<long> w0;    // 1 + A0 + eta, square 2
    std::vector<long> yvec;  // 5 + 2(2A0 - R) + 5 eta

    // Orthogonal of A0 inside the middle block: 21 rows in middle
    // coordinates with block Gram (-4) (+) U^2 (+) (-E8)^2.
    IntMat a0_perp_basis;
    EvenLattice a0_perp;
};

const Fixture& fixture();

mpq_class pair(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);
mpz_class pair_int(const std::vector<long>& a, const std::vector<long>& b);

// Involution fixing the unit and eta coefficients and negating the middle.
std::vector<mpq_class> dual(const std::vector<mpq_class>& a);
std::vector<long> dual_int(const std::vector<long>& a);

// a0 b4 + a2.b2 + a4 b0, the coefficient of the top class in a product;
// satisfies <a, b> = -wedge_integral(dual(a), b).
mpq_class wedge_integral(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

// Row-convention application helpers.
std::vector<mpq_class> apply_map(const Matrix& m, const std::vector<mpq_class>& x);
std::vector<long> apply_int_map(const IntMat& m, const std::vector<long>& x);
std::vector<mpq_class> to_q(const std::vector<long>& x);

// Sum of the three pairing products over the pairings of {a,b,c,d}:
// <a,b><c,d> + <a,c><b,d> + <a,d><b,c>.
mpq_class fujiki_quartic(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                         const std::vector<mpq_class>& c, const std::vector<mpq_class>& d);

// For a middle-block vector gamma (22 coordinates): reflect gamma in u0,
// negate, and pair with yvec = 5 + 2(2A0-R) + 5 eta.  The full pairing
// equals 2 (gamma . R) for every gamma; the middle-block wedge component
// equals 10 (gamma . A0) - 8 (gamma . R), hence exactly -8 (gamma . R) on
// the orthogonal of A0; the two always agree mod 5.
struct QuarticModelReport {
    std::vector<long> gamma;  // middle coordinates
    mpz_class gamma_dot_r, gamma_dot_a0;
    mpq_class full_pairing;
    mpq_class wedge_component;
    bool full_matches;   // full = 2 (gamma . R)
    bool wedge_matches;  // wedge = -8 (gamma . R)
    bool mod5_matches;   // full = wedge mod 5
};
QuarticModelReport quartic_model_check(const std::vector<long>& gamma_middle);

// Norm -2 vectors of the A0-orthogonal, returned in middle coordinates.
std::vector<std::vector<long>> enumerate_a0_perp_minus2(long bound, size_t max_count);

// Saturated integer bases (HNF rows, ambient coordinates) of the
// orthogonal of {v, w, 5+2D+5eta} and of the D-orthogonal inside the
// middle block.  Both are rank 21 and equal as row spaces.
IntMat triple_orthogonal_basis();
IntMat middle_d_orthogonal_basis();

}  // namespace epwlab::mukai
