#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fpcarry {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using BigInt = mpz_class;

/// Operands that cannot be combined (modulus, arity or tape mismatch).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A value outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity that must hold by construction did not.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word-level modular helpers. Moduli up to 2^63 are accepted; products go
// through 128-bit intermediates.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
    if (((a | b) >> 16) == 0 && (m >> 32) == 0) {
        return static_cast<std::uint32_t>(a * b) % static_cast<std::uint32_t>(m);
    }
    if (((a | b) >> 32) == 0) return a * b % m;
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}
u64 add_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Deterministic trial division.
bool is_prime(u64 n);

/// A certified prime modulus, p < 2^61.
class Prime {
public:
    static constexpr u64 kMax = (u64{1} << 61) - 1;

    explicit Prime(u64 p);

    u64 value() const { return p_; }
    operator u64() const { return p_; }

    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }

private:
    u64 p_;
};

/// Element of F_p. The stored value is always the representative in [0, p-1].
class Fp {
public:
    Fp(u64 value, Prime p) : v_(value % p.value()), p_(p) {}

    static Fp zero(Prime p) { return Fp(0, p); }
    static Fp one(Prime p) { return Fp(1, p); }
    /// Reduces an arbitrary (possibly negative) integer.
    static Fp from_signed(std::int64_t v, Prime p);
    static Fp from_big(const BigInt& v, Prime p);

    u64 value() const { return v_; }
    /// The integer representative in [0, p-1].
    u64 lift() const { return v_; }
    Prime modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_.value() - v_, p_); }

    /// Throws DomainError for zero.
    Fp inverse() const;
    Fp pow(u64 e) const { return Fp(pow_mod(v_, e, p_.value()), p_); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

private:
    void check_same(const Fp& o) const;

    u64 v_;
    Prime p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

Fp fp_add(const Fp& a, const Fp& b);
Fp fp_mul(const Fp& a, const Fp& b);
Fp fp_neg(const Fp& a);
Fp fp_inv(const Fp& a);

/// Exact rational, always stored reduced with a positive denominator.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& v) : q_(v) {}
    Rat(const BigInt& num, const BigInt& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    const mpq_class& raw() const { return q_; }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }

    std::string to_string() const { return q_.get_str(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// num * den^{-1} in Z/mZ. Throws DomainError when gcd(den, m) != 1.
u64 rational_mod(const BigInt& num, const BigInt& den, u64 m);
u64 rational_mod(const Rat& a, u64 m);
Fp rational_mod(const Rat& a, Prime p);

/// Non-negative residue of an integer.
u64 big_mod(const BigInt& v, u64 m);

/// C(a, b) mod p through the base-p digits of a and b (Lucas).
Fp lucas_binom(const BigInt& a, const BigInt& b, Prime p);

/// Smallest positive generator of F_p^x. For p = 2 the group is trivial and 1
/// is returned.
Fp primitive_root(Prime p);

/// Multiplicative order of a nonzero element.
u64 multiplicative_order(const Fp& a);

}  // namespace fpcarry
