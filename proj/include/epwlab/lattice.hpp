#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epwlab/matrix.hpp"
#include "epwlab/smith.hpp"

namespace epwlab::lattice {

using exactalg::field_t;
using exactalg::IntMat;
using exactalg::kFieldQ;
using exactalg::Matrix;
using exactalg::Scalar;

// Nondegenerate even lattice: symmetric integer Gram with even diagonal.
struct EvenLattice {
    IntMat gram;
    std::vector<std::string> labels;  // optional, one per basis vector
    int rank() const { return gram.rows(); }
};

EvenLattice make_even_lattice(IntMat gram, std::vector<std::string> labels = {});
EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b);
EvenLattice hyperbolic_plane();      // Gram [[0,1],[1,0]]
EvenLattice minus_e8();              // negated E8 Cartan Gram
EvenLattice rank_one(long even_norm);
mpz_class gram_det(const EvenLattice& l);

mpz_class pair_int(const EvenLattice& l, const std::vector<long>& a,
                   const std::vector<long>& b);
mpq_class pair_q(const EvenLattice& l, const std::vector<mpq_class>& a,
                 const std::vector<mpq_class>& b);

// Discriminant group with its torsion quadratic form.  Generators are dual
// vectors expressed rationally in the lattice basis; the value tables use
// the canonical representatives q in [0, 2) and b in [0, 1).
struct FiniteQuadForm {
    std::vector<long> orders;                        // invariant factors > 1
    std::vector<std::vector<mpq_class>> generators;  // rows in L (x) Q
    std::vector<mpq_class> q_table;                  // q(gen_i)
    std::vector<std::vector<mpq_class>> b_table;     // b(gen_i, gen_j)
    mpz_class group_order() const;
};

FiniteQuadForm discriminant_form(const EvenLattice& l);

// Coordinates (mod the invariant factors) of the class of a dual vector;
// integrality_error when y is not in the dual lattice.
std::vector<long> dual_class_coords(const EvenLattice& l, const FiniteQuadForm& f,
                                    const std::vector<mpq_class>& y);

std::vector<mpq_class> class_representative(const FiniteQuadForm& f,
                                            const std::vector<long>& cls);
mpq_class q_value(const EvenLattice& l, const FiniteQuadForm& f,
                  const std::vector<long>& cls);  // in [0, 2)
mpq_class b_value(const EvenLattice& l, const FiniteQuadForm& f,
                  const std::vector<long>& cls_a, const std::vector<long>& cls_b);

// All nonzero classes with q = 0, in lexicographic class-coordinate order.
std::vector<std::vector<long>> isotropic_elements(const EvenLattice& l,
                                                  const FiniteQuadForm& f);

struct Overlattice {
    EvenLattice lattice;                      // Gram in the enlarged basis
    std::vector<std::vector<mpq_class>> basis;  // rows in L (x) Q
    long index;                                // [M : L]
};

// Even overlattice attached to an isotropic subgroup of the discriminant
// group, given by generating classes; isotropy_error when the subgroup is
// not isotropic for both q and b.
Overlattice overlattice(const EvenLattice& l, const FiniteQuadForm& f,
                        const std::vector<std::vector<long>>& subgroup_classes);

// Isometry in the row convention: a vector x (row of coordinates) maps to
// x * m, so row i of m is the image of the i-th basis vector.
struct RationalIsometry {
    Matrix m;  // n x n over Q
    bool is_integral() const;
};

RationalIsometry make_isometry(const EvenLattice& l, Matrix m);
RationalIsometry identity_isometry(const EvenLattice& l);
RationalIsometry negation_isometry(const EvenLattice& l);
// first followed by second: x -> (x * first) * second.
RationalIsometry compose(const RationalIsometry& first, const RationalIsometry& second);

// r_gamma(x) = -x + (2 (x, gamma) / (gamma, gamma)) gamma: fixes gamma and
// negates its orthogonal complement.  degenerate_input_error when gamma has
// norm zero.  (The negative of this map is the usual mirror reflection.)
RationalIsometry reflection(const EvenLattice& l, const std::vector<mpq_class>& gamma);
RationalIsometry reflection_int(const EvenLattice& l, const std::vector<long>& gamma);

// ------------------------------------------------------------------
// Fixtures: one ambient rank-24 lattice U^4 (+) (-E8)^2 with distinguished
// primitive vectors, and the two sublattices cut out by them.
//
// Ambient basis order: f1 f2 g1 g2 h1 h2 k1 k2 | a1..a8 | b1..b8, the four
// hyperbolic planes followed by two copies of -E8.
// Distinguished vectors: z = f1+f2, e2 = f1-f2, u = g1+g2, e1 = g1-g2,
// zeta = e1 + 2 e2.
// ------------------------------------------------------------------
struct Fixture {
    EvenLattice big;  // rank 24

    std::vector<long> z, u, e1, e2, zeta;  // ambient coordinates

    IntMat tilde_basis;   // 23 x 24: basis of the orthogonal of z
    EvenLattice tilde;    // Gram (-2) (+) U^3 (+) (-E8)^2

    IntMat core_basis;    // 22 x 24: basis of the orthogonal of {z, u}
    EvenLattice core;     // Gram (-2)^2 (+) U^2 (+) (-E8)^2

    EvenLattice u_plus_core;  // rank 23: (2) (+) core, basis u then core

    // Distinguished vectors in core coordinates.
    std::vector<long> core_e1, core_e2, core_zeta;

    // The involution swapping e1 and e2: integral on core and on (2)+core,
    // rational (half-integer entries on the f/g block) on the ambient.
    RationalIsometry swap_core;           // 22 x 22, integral
    RationalIsometry swap_u_plus_core;    // 23 x 23, integral
    RationalIsometry swap_big;            // 24 x 24, rational

    // Discriminant data of (2) (+) core, with the two distinguished
    // isotropic classes [ (u+e1)/2 ] and [ (u+e2)/2 ].
    FiniteQuadForm disc_u_plus_core;
    std::vector<long> class_u_e1, class_u_e2;
};

const Fixture& fixture();

// Whether an integral isometry of (2) (+) core swaps the two distinguished
// isotropic classes (false: it fixes both).  internal_error if the images
// are not the two classes again.
bool epsilon_swaps(const RationalIsometry& iso);

// Report on the composite map r_zeta o r_xi o r_zeta on the core lattice
// for a norm -2 vector xi = a1 e1 + a2 e2 + nu.
struct ConjugateReflectionReport {
    std::vector<long> xi;
    long a1, a2;
    mpz_class xi_dot_zeta;
    long xi_dot_zeta_mod5;       // representative in [0, 5)
    bool integral;               // the composite is an integral isometry
    bool formula_matches;        // closed form for the image of e1
    bool implication_holds;      // integral => (xi, zeta) = 0 mod 5
    std::vector<mpq_class> e1_image;
};

ConjugateReflectionReport conjugate_reflection_check(const std::vector<long>& xi);

// Closed-form image of e1 under the composite, as a function of a1, a2, nu.
std::vector<mpq_class> conjugate_reflection_e1_formula(const std::vector<long>& xi);

// Box-bounded enumeration of vectors of a given even norm, in a fixed
// deterministic order (connected Gram components in index order, innermost
// coordinates ascending); stops after max_count hits.
std::vector<std::vector<long>> enumerate_norm_vectors(const EvenLattice& l, long target,
                                                      long bound, size_t max_count);
std::vector<std::vector<long>> enumerate_minus2(const EvenLattice& l, long bound,
                                                size_t max_count = static_cast<size_t>(-1));

}  // namespace epwlab::lattice
