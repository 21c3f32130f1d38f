#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpcarry/fp.hpp"
#include "fpcarry/mpoly.hpp"

namespace fpcarry {

/// Tuple (d_1, ..., d_n) with every d_j in [0, p-1].
using Composition = std::vector<std::uint32_t>;

/// Digit i of the integer sum of the lifted inputs.
Fp carry_oracle_add(std::span<const Fp> x, unsigned i);

/// p^i as an integer; throws DomainError if it does not fit in 64 bits.
u64 prime_power(Prime p, unsigned i);

/// True when p^i <= n (p - 1), i.e. phi_i is not identically zero.
bool carry_index_live(Prime p, std::size_t n, unsigned i);

/// All [p-1]-restricted compositions of target with n parts, in
/// lexicographic order.
std::vector<Composition> enumerate_compositions(u64 target, std::size_t n, Prime p);

/// Coefficient of X^target in (1 + X + ... + X^(p-1))^n, computed exactly.
BigInt restricted_composition_count(u64 target, std::size_t n, Prime p);

/// Minimal polynomial of the i-th base-p digit of x_1 + ... + x_n:
/// sum over compositions d of p^i of prod_j (1/d_j!) x_j (x_j - 1) ... (x_j - d_j + 1).
MPoly phi_poly(unsigned i, std::size_t n, Prime p);

/// The two-summand carry written as
/// sum_{d=1}^{p-1} (-1)^d (1/d) x1^(d falling) x2^(p-d falling).
/// For p = 2 this falls back to phi_poly(1, 2, 2).
MPoly phi1_two_poly(Prime p);

/// Carry out of x1 + x2 + g for a carry-in g in {0, 1}:
/// phi_1(x1, x2) + g (1 - (x1 + x2 + 1)^(p-1)). Variables are (x1, x2, g).
/// Values of g other than 0 and 1 are outside its contract.
MPoly phi_prime_poly(Prime p);

}  // namespace fpcarry
