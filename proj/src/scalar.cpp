#include "epwlab/scalar.hpp"

#include <cstdlib>

namespace epwlab::exactalg {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_valid_field(field_t f) {
    return f == kFieldQ || (f >= 3 && is_prime(f));
}

void require_valid_field(field_t f) {
    if (!is_valid_field(f))
        throw io_error("field tag must be 0 (rationals) or an odd prime >= 3, got " +
                       std::to_string(f));
}

long mod_reduce(long value, long p) {
    long r = value % p;
    return r < 0 ? r + p : r;
}

long mod_mul(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long mod_inverse(long a, long p) {
    a = mod_reduce(a, p);
    if (a == 0) throw undefined_error("inverse of zero in F_" + std::to_string(p));
    // Extended Euclid; p prime, so gcd is 1.
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

Scalar Scalar::zero(field_t f) {
    require_valid_field(f);
    if (f == kFieldQ) return Scalar(mpq_class(0));
    return Scalar(FpElt{f, 0});
}

Scalar Scalar::one(field_t f) {
    require_valid_field(f);
    if (f == kFieldQ) return Scalar(mpq_class(1));
    return Scalar(FpElt{f, 1});
}

Scalar Scalar::of_long(field_t f, long value) {
    require_valid_field(f);
    if (f == kFieldQ) return Scalar(mpq_class(value));
    return Scalar(FpElt{f, mod_reduce(value, f)});
}

Scalar Scalar::of_mpq(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::parse(field_t f, const std::string& text) {
    require_valid_field(f);
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw io_error("cannot parse scalar literal '" + text + "'");
    }
    mpq_class q(raw);
    mpq_clear(raw);
    if (sgn(q.get_den()) == 0 || q.get_den() == 0)
        throw io_error("zero denominator in scalar literal '" + text + "'");
    q.canonicalize();
    if (f == kFieldQ) return Scalar(std::move(q));
    if (q.get_den() != 1)
        throw io_error("residue literal must be an integer, got '" + text + "'");
    mpz_class residue = q.get_num() % f;
    long r = residue.get_si();
    return Scalar(FpElt{f, mod_reduce(r, f)});
}

field_t Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return kFieldQ;
    return std::get<FpElt>(v_).p;
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<FpElt>(v_).r == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<FpElt>(v_).r == 1;
}

namespace {

void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw context_error("scalar field mismatch: " + std::to_string(a.field()) +
                            " vs " + std::to_string(b.field()));
}

}  // namespace

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& e = std::get<FpElt>(v_);
    return Scalar(FpElt{e.p, e.r == 0 ? 0 : e.p - e.r});
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q + std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpElt>(v_);
    const auto& b = std::get<FpElt>(o.v_);
    long s = a.r + b.r;
    if (s >= a.p) s -= a.p;
    return Scalar(FpElt{a.p, s});
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q - std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpElt>(v_);
    const auto& b = std::get<FpElt>(o.v_);
    long s = a.r - b.r;
    if (s < 0) s += a.p;
    return Scalar(FpElt{a.p, s});
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q * std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpElt>(v_);
    const auto& b = std::get<FpElt>(o.v_);
    return Scalar(FpElt{a.p, mod_mul(a.r, b.r, a.p)});
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        if (sgn(*q) == 0) throw undefined_error("inverse of zero rational");
        return Scalar(mpq_class(1 / *q));
    }
    const auto& e = std::get<FpElt>(v_);
    return Scalar(FpElt{e.p, mod_inverse(e.r, e.p)});
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return *q == std::get<mpq_class>(o.v_);
    return std::get<FpElt>(v_).r == std::get<FpElt>(o.v_).r;
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<FpElt>(v_).r);
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw context_error("rational() on an F_p scalar");
}

long Scalar::residue() const {
    if (const auto* e = std::get_if<FpElt>(&v_)) return e->r;
    throw context_error("residue() on a rational scalar");
}

}  // namespace epwlab::exactalg
