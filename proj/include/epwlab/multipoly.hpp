#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epwlab/scalar.hpp"

namespace epwlab::exactalg {

// Monomial key packing for up to 7 variables: the most significant byte is
// the total degree, followed by the exponents of x0, x1, ... in decreasing
// significance.  Unsigned comparison of keys is then exactly descending
// graded lexicographic order, and key addition multiplies monomials (no
// byte overflows at the degrees this library handles; asserted in code).
inline constexpr int kMaxVars = 7;
inline constexpr int kMaxExp = 255;

std::uint64_t monomial_key(const std::vector<int>& exps);
std::vector<int> monomial_exponents(std::uint64_t key, int nvars);
int monomial_degree(std::uint64_t key);

// Sparse exact polynomial, terms kept in strictly descending graded-lex
// order with nonzero coefficients: the first term is the leading term.
class MultiPoly {
  public:
    MultiPoly(field_t field, int nvars);

    static MultiPoly zero(field_t field, int nvars) { return MultiPoly(field, nvars); }
    static MultiPoly constant(field_t field, int nvars, const Scalar& c);
    static MultiPoly monomial(field_t field, int nvars, const std::vector<int>& exps,
                              const Scalar& coeff);
    static MultiPoly variable(field_t field, int nvars, int var);

    field_t field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::vector<std::pair<std::uint64_t, Scalar>>& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int degree() const;
    // Smallest total degree of a term; degenerate_input_error on zero input.
    int lowest_degree() const;
    bool is_homogeneous(int d) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const Scalar& c) const;

    // Exact quotient; divisibility_error (carrying the remainder's canonical
    // text as witness) when the divisor does not divide exactly.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    // Quotient by x_var^k; divisibility_error when some term has a smaller
    // exponent of x_var.
    MultiPoly divide_by_variable_power(int var, int k) const;

    MultiPoly derivative(int var) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    // Value and gradient in one pass, accumulated term by term.  This is an
    // independent route from derivative(var).eval(point); tests compare the
    // two.
    struct ValueGradient {
        Scalar value;
        std::vector<Scalar> gradient;
    };
    ValueGradient eval_gradient(const std::vector<Scalar>& point) const;

    // Substitutes x_i -> point_i + y_i for all i except fixed_var, where
    // x_fixed_var -> point_fixed_var.  The result lives in the same variable
    // set (the fixed variable simply never appears).
    MultiPoly shifted(const std::vector<Scalar>& point, int fixed_var) const;

    // Leading coefficient made 1 (no-op on zero input).
    MultiPoly monic() const;
    Scalar leading_coefficient() const;  // degenerate_input_error on zero input

    std::string str(const std::vector<std::string>& var_names = {}) const;

    // Construction back door for algorithms that build term lists directly;
    // the list is sorted, merged and pruned here.
    static MultiPoly from_terms(field_t field, int nvars,
                                std::vector<std::pair<std::uint64_t, Scalar>> terms);

  private:
    field_t field_;
    int nvars_;
    std::vector<std::pair<std::uint64_t, Scalar>> terms_;
};

}  // namespace epwlab::exactalg
