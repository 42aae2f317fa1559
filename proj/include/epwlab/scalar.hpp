#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "epwlab/errors.hpp"

namespace epwlab::exactalg {

// Field tag: 0 denotes the rationals, any other value must be an odd prime
// p >= 3 and tags the field with p elements.
using field_t = long;

inline constexpr field_t kFieldQ = 0;

bool is_prime(long n);
bool is_valid_field(field_t f);
void require_valid_field(field_t f);

// An element of F_p, stored as the residue in [0, p).
struct FpElt {
    long p;
    long r;
};

// Exact scalar carrying its field context.  Arithmetic between scalars of
// different contexts throws context_error; there are no implicit coercions.
class Scalar {
  public:
    Scalar() : v_(mpq_class(0)) {}  // zero of Q

    static Scalar zero(field_t f);
    static Scalar one(field_t f);
    static Scalar of_long(field_t f, long value);
    static Scalar of_mpq(const mpq_class& q);  // field Q
    // Parses "a", "-a", or "a/b" for Q; a decimal residue for F_p.
    static Scalar parse(field_t f, const std::string& text);

    field_t field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // undefined_error on zero divisor
    Scalar inverse() const;                   // undefined_error on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text: "a/b" in lowest terms (b > 0, omitted when 1) for Q,
    // the residue in [0, p) for F_p.
    std::string str() const;

    // Access for fast paths; throws context_error when the field disagrees.
    const mpq_class& rational() const;
    long residue() const;

  private:
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(FpElt e) : v_(e) {}

    std::variant<mpq_class, FpElt> v_;
};

// Residue arithmetic helpers used by the int64 fast paths as well.
long mod_reduce(long value, long p);          // representative in [0, p)
long mod_mul(long a, long b, long p);
long mod_inverse(long a, long p);             // undefined_error on a == 0 mod p

}  // namespace epwlab::exactalg
