#include "fpcarry/mul_carry.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "fpcarry/bernoulli.hpp"

namespace fpcarry {

namespace {

PsiAux build_psi_aux(Prime p) {
    const u64 pv = p.value();
    PsiAux aux{p, std::vector<Fp>(pv - 1, Fp::zero(p)), Fp::zero(p)};
    for (u64 i = 1; i + 2 <= pv; ++i) {
        const u64 index = pv - 1 - i;
        const Rat b = bernoulli(index);
        // Indices up to p-2 have denominators coprime to p.
        if (big_mod(b.den(), pv) == 0) {
            throw InternalError("B_" + std::to_string(index) + " has a denominator divisible by " + std::to_string(pv));
        }
        aux.coeffs[i] = rational_mod(b / Rat(static_cast<long>(index)), p);
    }
    for (const auto& c : aux.coeffs) aux.psi_at_one += c;

    for (u64 i = 1; i + 4 <= pv; i += 2) {
        if (!aux.coeffs[i].is_zero()) throw InternalError("Psi has a nonzero odd coefficient below t^(p-2)");
    }
    if (!(aux.coeffs[pv - 2] == Fp((pv - 1) / 2, p))) throw InternalError("Psi leading coefficient is not (p-1)/2");
    return aux;
}

}  // namespace

Fp PsiAux::evaluate(const Fp& t) const {
    Fp acc = Fp::zero(modulus);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

MPoly PsiAux::as_poly() const {
    MPoly f(modulus, 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) f.add_term(ExpVec{static_cast<std::uint32_t>(i)}, coeffs[i]);
    return f;
}

const PsiAux& psi_aux(Prime p) {
    if (p.value() == 2) throw DomainError("Psi is defined for odd primes only");
    static std::shared_mutex mutex;
    static std::map<u64, std::unique_ptr<PsiAux>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(p.value());
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<PsiAux>(build_psi_aux(p));
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(p.value(), std::move(built));
    return *it->second;
}

std::string format_psi(const PsiAux& aux) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = aux.coeffs.size(); i-- > 1;) {
        if (aux.coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << aux.coeffs[i].value() << "*t^" << i;
    }
    if (first) os << '0';
    return os.str();
}

MPoly psi1_poly(std::size_t n, Prime p) {
    if (p.value() == 2) throw DomainError("psi1_poly is defined for odd primes only");
    if (n == 0) throw DomainError("psi1_poly needs at least one factor");
    if (n == 1) return MPoly(p, 1);

    const PsiAux& aux = psi_aux(p);
    const Fp n_minus_one = Fp(n - 1, p);

    // Inner factor Psi(x_1...x_n) - sum_j Psi(x_j) + (n-1) Psi(1).
    MPoly inner = MPoly::constant(p, n, n_minus_one * aux.psi_at_one);
    for (std::size_t i = 1; i < aux.coeffs.size(); ++i) {
        const Fp& beta = aux.coeffs[i];
        if (beta.is_zero()) continue;
        const auto power = static_cast<std::uint32_t>(i);
        inner.add_term(ExpVec(n, power), beta);
        for (std::size_t j = 0; j < n; ++j) {
            ExpVec e(n, 0);
            e[j] = power;
            inner.add_term(e, -beta);
        }
    }
    const MPoly product = MPoly::monomial(p, ExpVec(n, 1), Fp::one(p));
    const MPoly full = product * inner;
    // Exponents stay within p-1 (at most (p-2)+1), so this is a check.
    MPoly reduced = reduce(full);
    if (!(reduced == full)) throw InternalError("psi1_poly produced exponents above p-1");
    return reduced;
}

Fp carry_oracle_mul(std::span<const Fp> x) {
    if (x.empty()) throw StructuralError("carry_oracle_mul needs at least one input");
    const Prime p = x.front().modulus();
    BigInt prod = 1;
    for (const auto& v : x) {
        if (!(v.modulus() == p)) throw StructuralError("carry_oracle_mul modulus mismatch");
        prod *= static_cast<unsigned long>(v.lift());
    }
    prod /= static_cast<unsigned long>(p.value());
    return Fp::from_big(prod, p);
}

std::size_t monomial_count_psi1(std::size_t n, Prime p) { return metrics(psi1_poly(n, p)).monomial_count; }

std::size_t predicted_monomial_count_psi1(std::size_t n, Prime p) {
    const std::size_t base = (n + 1) * static_cast<std::size_t>(p.value() - 1) / 2;
    const Fp constant = Fp(n - 1, p) * psi_aux(p).psi_at_one;
    return constant.is_zero() ? base : base + 1;
}

u64 square_modulus(Prime p) {
    if (p.value() >= (u64{1} << 32)) throw DomainError("Z/p^2 helpers require p < 2^32");
    return p.value() * p.value();
}

u64 teichmuller_lift(const Fp& x) {
    if (x.is_zero()) throw DomainError("the Teichmuller lift is defined on nonzero elements");
    const u64 m = square_modulus(x.modulus());
    return pow_mod(x.lift(), x.modulus().value(), m);
}

Fp section_alpha(const Fp& x) {
    const u64 lifted = teichmuller_lift(x);
    const Prime p = x.modulus();
    const u64 m = square_modulus(p);
    const u64 ratio = mul_mod(x.lift(), inv_mod(lifted, m), m);
    // ratio is 1 mod p, so (ratio - 1) is divisible by p.
    const u64 diff = (ratio + m - 1) % m;
    if (diff % p.value() != 0) throw InternalError("section difference is not in 1 + pZ/p^2Z");
    return Fp(diff / p.value(), p);
}

}  // namespace fpcarry
