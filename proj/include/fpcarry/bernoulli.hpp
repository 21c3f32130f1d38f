#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "fpcarry/fp.hpp"

namespace fpcarry {

/// Exact Bernoulli numbers with B_1 = -1/2, grown on demand from
/// sum_{s=0}^{m} C(m+1, s) B_s = 0. Reads may run concurrently; extension
/// takes an exclusive lock.
class BernoulliCache {
public:
    BernoulliCache();

    Rat get(std::size_t index);

    /// Process-wide instance used by the free functions below.
    static BernoulliCache& global();

private:
    void extend_to(std::size_t index);

    std::shared_mutex mutex_;
    std::vector<Rat> values_;
};

Rat bernoulli(std::size_t index);

/// Coefficients of B_m(x) = sum_s C(m, s) B_{m-s} x^s, index = power of x.
std::vector<Rat> bernoulli_poly(std::size_t m);

/// Evaluates a rational-coefficient polynomial.
Rat eval_rat_poly(const std::vector<Rat>& coeffs, const Rat& x);

/// sum_{k=1}^{N} k^m via (B_{m+1}(N+1) - B_{m+1}) / (m+1). Throws
/// InternalError if the result is not an integer.
BigInt power_sum(std::size_t m, const BigInt& n);

/// prod { q prime : (q - 1) | index }, computed from primes alone.
BigInt staudt_clausen_denominator(std::size_t index);

/// Default cap on p for the exact-factorial Wilson quotient.
inline constexpr u64 kWilsonDefaultCap = 10000;

/// ((p-1)! + 1) / p mod p. Throws InternalError when p does not divide
/// (p-1)! + 1 and DomainError when p exceeds the cap.
u64 wilson_quotient(Prime p, u64 cap = kWilsonDefaultCap);

/// (B_{p-1} + 1/p - 1) reduced mod p, for odd p.
u64 wilson_from_bernoulli(Prime p);

/// (a^(p-1) - 1) / p mod p for a coprime to p.
u64 fermat_quotient(const BigInt& a, Prime p);

}  // namespace fpcarry
