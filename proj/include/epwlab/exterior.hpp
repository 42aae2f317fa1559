#pragma once

#include <array>
#include <vector>

#include "epwlab/matrix.hpp"

namespace epwlab::exterior {

using exactalg::field_t;
using exactalg::Matrix;
using exactalg::Scalar;

// The ambient vector space V is 6-dimensional throughout; its third
// exterior power (dimension 20) carries the symplectic form
// omega(a, b) = coefficient of e_0^...^e_5 in a^b.
inline constexpr int kDimV = 6;
inline constexpr int kDimWedge2 = 15;
inline constexpr int kDimWedge3 = 20;

// Strictly increasing index tuples in lexicographic order; these fix the
// coordinate bases of the exterior powers once and for all.
const std::vector<std::array<int, 2>>& pairs();
const std::vector<std::array<int, 3>>& triples();
int pair_index(int i, int j);
int triple_index(int i, int j, int k);

// Sign of sorting the concatenation of two disjoint increasing tuples.
int shuffle_sign(const std::vector<int>& left, const std::vector<int>& right);

enum class Ambient { V, Vdual };
Ambient flip(Ambient a);

// Homogeneous element of degree k in the exterior algebra of V (or of its
// dual).  Coordinates follow the tuple bases above.
struct KVector {
    Ambient ambient;
    int k;
    field_t field;
    std::vector<Scalar> c;

    static KVector zero(Ambient amb, int k, field_t field);
    static KVector basis(Ambient amb, field_t field, const std::vector<int>& indices);
    bool is_zero() const;
    KVector scaled(const Scalar& s) const;
    KVector operator+(const KVector& o) const;
    KVector operator-(const KVector& o) const;
    bool operator==(const KVector& o) const;
};

// Degree-1 vector from coordinates.
KVector vector1(Ambient amb, field_t field, const std::vector<Scalar>& coords);

KVector wedge(const KVector& a, const KVector& b);

// omega on two degree-3 elements of the same ambient.
Scalar symplectic_form(const KVector& a, const KVector& b);

// 20x20 integer Gram matrix of omega in the triple basis (entries 0, +-1).
const std::vector<std::array<int, kDimWedge3>>& omega_gram_int();
Matrix omega_gram(field_t field);

// A Lagrangian subspace of the 20-dimensional symplectic space, stored as a
// 10x20 basis matrix in canonical reduced row echelon form.
struct LagrangianSubspace {
    Ambient ambient;
    field_t field;
    Matrix basis;  // 10 x 20, RREF
};

// Validates rank 10 and total isotropy; canonicalizes the basis.
LagrangianSubspace make_lagrangian(Ambient amb, const Matrix& basis);

bool is_lagrangian_basis(const Matrix& basis);

// The symplectic frame used by graph constructions: frame_p(i) runs over
// the 10 triple basis vectors whose index set contains 0, frame_q(i) is the
// signed complementary triple with omega(p_i, q_j) = delta_ij.
KVector frame_p(field_t field, int i);
KVector frame_q(field_t field, int i);

// Lagrangian spanned by { p_i + sum_j s_ij q_j } for a symmetric 10x10 s.
LagrangianSubspace graph_lagrangian(const Matrix& s, Ambient amb = Ambient::V);

// The 10-dimensional subspace { v ^ w : w in V } for nonzero v, as a
// canonical Lagrangian.
LagrangianSubspace fiber(const std::vector<Scalar>& v, Ambient amb = Ambient::V);

// All 15 spanning rows v ^ e_i ^ e_j without canonicalization (fast paths).
Matrix fiber_spanning_rows(const std::vector<Scalar>& v, field_t field);

// { phi : phi(a) = 0 for all a in A }, a Lagrangian of the dual ambient.
LagrangianSubspace annihilator(const LagrangianSubspace& a);

// Contraction of a degree-k element by a degree-1 element of the opposite
// ambient.
KVector contraction(const KVector& phi, const KVector& alpha);

// Smallest subspace U with alpha contained in the third exterior power of
// U; returned as a canonical (RREF) basis-row matrix.  Degree-3 input only.
Matrix support(const KVector& alpha);

}  // namespace epwlab::exterior
