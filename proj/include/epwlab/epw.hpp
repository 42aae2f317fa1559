#pragma once

#include <map>
#include <utility>
#include <vector>

#include "epwlab/exterior.hpp"
#include "epwlab/multipoly.hpp"

namespace epwlab::epw {

using exactalg::field_t;
using exactalg::Matrix;
using exactalg::MultiPoly;
using exactalg::Scalar;
using exterior::LagrangianSubspace;

// dim(F_v ∩ A) where F_v is the fiber Lagrangian of the nonzero vector v.
// Computed as 20 minus the rank of the stacked spanning rows, so it is
// well defined on projective classes.
int corank_at(const LagrangianSubspace& a, const std::vector<Scalar>& v);

// Basis rows (RREF, corank many) of F_v ∩ A inside the 20-dimensional
// coordinate space.
Matrix intersection_with_fiber(const LagrangianSubspace& a, const std::vector<Scalar>& v);

// The degeneracy locus of a Lagrangian A is cut out, in the chart where
// the chart-th coordinate of v is nonzero, by a determinant of a 10x10
// matrix of linear forms; that determinant is divisible by the fourth
// power of the chart variable and the quotient is a degree-6 form
// independent of the chart (up to scale).  kind records the degenerate
// case where the determinant vanishes identically (it does for any fiber).
enum class SexticKind { Polynomial, IdenticallyZero };

struct SexticEquation {
    SexticKind kind;
    MultiPoly poly;  // monic degree-6 homogeneous form in 6 variables; zero iff kind is IdenticallyZero
    int chart;
};

// Row-major 10x10 entries of the chart matrix: entry (r, q) is a linear
// form in the 6 coordinates of v.  The columns are indexed by the pairs
// (i, j) avoiding the chart index, in pair order; the rows by the
// complement coordinates of A.
std::vector<MultiPoly> chart_matrix_entries(const LagrangianSubspace& a, int chart);

// Determinant of the chart matrix: homogeneous of degree 10 (or zero).
MultiPoly chart_degeneracy_determinant(const LagrangianSubspace& a, int chart);

// The monic sextic equation in the given chart, or IdenticallyZero.
SexticEquation sextic_equation(const LagrangianSubspace& a, int chart = 0);

// Whether the hyperplane W spanned by the rows of w (5x6, rank 5) is a
// degeneracy point of the annihilator of A on the dual side: the ten
// triple wedges of a basis of W span a Lagrangian that meets A.
bool dual_membership(const LagrangianSubspace& a, const Matrix& w);

// Tangent hyperplane of the sextic at a smooth point, as 5 RREF basis
// rows of the kernel of the gradient.  Throws not_on_hypersurface_error
// when the value is nonzero and not_smooth_error when the gradient
// vanishes at the point.
Matrix tangent_hyperplane(const SexticEquation& s, const std::vector<Scalar>& point);

// Same, starting from the subspace: validates corank 1 at the point
// (not_smooth_error otherwise) and works in the chart of the first
// nonzero coordinate.
Matrix tangent_hyperplane(const LagrangianSubspace& a, const std::vector<Scalar>& point);

// Multiplicity of the hypersurface f = 0 at a projective point on it: the
// lowest degree of f recentred at the point in the affine chart of its
// first nonzero coordinate.  Always >= 1; a point off the hypersurface
// raises not_on_hypersurface_error.
long multiplicity_at(const MultiPoly& f, const std::vector<Scalar>& point);

// Entrywise reduction of a rational Lagrangian mod p.  reduction_error
// when some denominator is divisible by p; the reduced basis is
// re-validated (rank collapse raises degenerate_input_error).
LagrangianSubspace reduce_mod_p(const LagrangianSubspace& a, long p);

// Canonical representatives of the points of P^5 over F_p: first nonzero
// coordinate equal to 1, enumerated with the leading position increasing
// and the free tail in lexicographic order.  (p^6 - 1) / (p - 1) points.
std::vector<std::vector<long>> projective_points(long p);

// corank_at for an F_p Lagrangian at a point given by long coordinates;
// single-word arithmetic throughout.
int corank_at_point(const LagrangianSubspace& a, const std::vector<long>& coords);

// Full corank census over the base field of a (must be finite).
struct CensusResult {
    long p = 0;
    long total = 0;
    std::map<int, long> by_corank;
    // every point of corank >= 2, with its corank
    std::vector<std::pair<std::vector<long>, int>> high_corank;
};

CensusResult corank_census(const LagrangianSubspace& a);

}  // namespace epwlab::epw
