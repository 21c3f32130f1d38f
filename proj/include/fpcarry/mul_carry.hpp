#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fpcarry/fp.hpp"
#include "fpcarry/mpoly.hpp"

namespace fpcarry {

/// The univariate auxiliary polynomial Psi(t) = sum_{i=1}^{p-2} beta_i t^i
/// with beta_i = (B_{p-1-i} / (p-1-i)) mod p, together with Psi(1).
struct PsiAux {
    Prime modulus;
    /// coeffs[i] = beta_i; coeffs[0] is always zero, size p-1.
    std::vector<Fp> coeffs;
    Fp psi_at_one;

    Fp evaluate(const Fp& t) const;
    /// Psi(1) - Psi(t), the normalized section difference.
    Fp psi_bar(const Fp& t) const { return psi_at_one - evaluate(t); }
    /// As an MPoly in one variable.
    MPoly as_poly() const;
};

/// Cached per p. Throws DomainError for p = 2.
const PsiAux& psi_aux(Prime p);

/// `c*t^e` terms in descending degree, every coefficient rendered in [0, p-1];
/// `0` when Psi vanishes.
std::string format_psi(const PsiAux& aux);

/// Minimal polynomial of the p^1 digit of x_1 * ... * x_n:
/// x_1...x_n (Psi(x_1...x_n) - sum_j Psi(x_j) + (n-1) Psi(1)).
MPoly psi1_poly(std::size_t n, Prime p);

/// Digit 1 of the exact integer product of the lifted inputs.
Fp carry_oracle_mul(std::span<const Fp> x);

/// metrics(psi1_poly(n, p)).monomial_count
std::size_t monomial_count_psi1(std::size_t n, Prime p);

/// The closed count (n+1)(p-1)/2 + 1, minus one when the constant term
/// (n-1) Psi(1) vanishes mod p (Wilson primes, and p dividing n-1). Assumes
/// every even-degree coefficient of Psi is nonzero, true for p < 37.
std::size_t predicted_monomial_count_psi1(std::size_t n, Prime p);

// Residues modulo p^2 are plain words; these helpers require p < 2^32.
u64 square_modulus(Prime p);

/// [x] = x^p mod p^2 for the lift x in [1, p-1]; the multiplicative section
/// of (Z/p^2)^x -> F_p^x.
u64 teichmuller_lift(const Fp& x);

/// ((x [x]^{-1} - 1) / p) mod p, the difference of the naive and the
/// multiplicative sections.
Fp section_alpha(const Fp& x);

}  // namespace fpcarry
