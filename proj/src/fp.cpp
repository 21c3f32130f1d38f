#include "fpcarry/fp.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fpcarry {

u64 add_mod(u64 a, u64 b, u64 m) {
    u128 s = static_cast<u128>(a % m) + (b % m);
    return static_cast<u64>(s % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(u64 a, u64 m) {
    if (m == 0) throw DomainError("inverse modulo zero");
    // Extended Euclid on signed 128-bit values.
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        if (m == 1) return 0;
        throw DomainError("value " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    __int128 v = old_s % static_cast<__int128>(m);
    if (v < 0) v += m;
    return static_cast<u64>(v);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (u64 f = 5; f <= n / f; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

Prime::Prime(u64 p) : p_(p) {
    if (p > kMax) throw DomainError("modulus " + std::to_string(p) + " exceeds 61 bits");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Fp Fp::from_signed(std::int64_t v, Prime p) {
    auto m = static_cast<std::int64_t>(p.value());
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return Fp(static_cast<u64>(r), p);
}

Fp Fp::from_big(const BigInt& v, Prime p) { return Fp(big_mod(v, p.value()), p); }

void Fp::check_same(const Fp& o) const {
    if (!(p_ == o.p_)) {
        throw StructuralError("modulus mismatch: " + std::to_string(p_.value()) + " vs " +
                              std::to_string(o.p_.value()));
    }
}

Fp& Fp::operator+=(const Fp& o) {
    check_same(o);
    v_ += o.v_;
    if (v_ >= p_.value()) v_ -= p_.value();
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    check_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_.value() - o.v_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    check_same(o);
    v_ = mul_mod(v_, o.v_, p_.value());
    return *this;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_.value()));
    return Fp(inv_mod(v_, p_.value()), p_);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

Fp fp_add(const Fp& a, const Fp& b) { return a + b; }
Fp fp_mul(const Fp& a, const Fp& b) { return a * b; }
Fp fp_neg(const Fp& a) { return -a; }
Fp fp_inv(const Fp& a) { return a.inverse(); }

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

u64 big_mod(const BigInt& v, u64 m) {
    BigInt mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
    u64 out = 0;
    if (r != 0) mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

u64 rational_mod(const BigInt& num, const BigInt& den, u64 m) {
    if (den == 0) throw DomainError("rational with zero denominator");
    u64 d = big_mod(den, m);
    BigInt g;
    BigInt mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), mm.get_mpz_t());
    if (g != 1) {
        throw DomainError("denominator " + den.get_str() + " is not coprime to " + std::to_string(m));
    }
    return mul_mod(big_mod(num, m), inv_mod(d, m), m);
}

u64 rational_mod(const Rat& a, u64 m) { return rational_mod(a.num(), a.den(), m); }

Fp rational_mod(const Rat& a, Prime p) { return Fp(rational_mod(a, p.value()), p); }

namespace {

// C(a, b) mod p for 0 <= a, b < p.
u64 small_binom(u64 a, u64 b, u64 p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    u64 num = 1, den = 1;
    for (u64 k = 0; k < b; ++k) {
        num = mul_mod(num, a - k, p);
        den = mul_mod(den, k + 1, p);
    }
    return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

Fp lucas_binom(const BigInt& a, const BigInt& b, Prime p) {
    if (a < 0 || b < 0) throw DomainError("lucas_binom requires non-negative arguments");
    BigInt x = a, y = b;
    BigInt pp;
    u64 pv = p.value();
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &pv);
    u64 acc = 1;
    while (y > 0) {
        BigInt qa, ra, qb, rb;
        mpz_fdiv_qr(qa.get_mpz_t(), ra.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
        mpz_fdiv_qr(qb.get_mpz_t(), rb.get_mpz_t(), y.get_mpz_t(), pp.get_mpz_t());
        acc = mul_mod(acc, small_binom(big_mod(ra, pv), big_mod(rb, pv), pv), pv);
        if (acc == 0) break;
        x = qa;
        y = qb;
    }
    return Fp(acc, p);
}

u64 multiplicative_order(const Fp& a) {
    if (a.is_zero()) throw DomainError("zero has no multiplicative order");
    const u64 p = a.modulus().value();
    u64 order = p - 1;
    u64 rest = p - 1;
    for (u64 q = 2; q <= rest / q; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        while (order % q == 0 && pow_mod(a.value(), order / q, p) == 1) order /= q;
    }
    if (rest > 1) {
        while (order % rest == 0 && pow_mod(a.value(), order / rest, p) == 1) order /= rest;
    }
    return order;
}

Fp primitive_root(Prime p) {
    if (p.value() == 2) return Fp(1, p);
    std::vector<u64> factors;
    u64 rest = p.value() - 1;
    for (u64 q = 2; q <= rest / q; ++q) {
        if (rest % q != 0) continue;
        factors.push_back(q);
        while (rest % q == 0) rest /= q;
    }
    if (rest > 1) factors.push_back(rest);
    for (u64 g = 2; g < p.value(); ++g) {
        bool generator = true;
        for (u64 q : factors) {
            if (pow_mod(g, (p.value() - 1) / q, p.value()) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return Fp(g, p);
    }
    throw InternalError("no primitive root found modulo " + std::to_string(p.value()));
}

}  // namespace fpcarry
