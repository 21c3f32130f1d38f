#include "fpcarry/bernoulli.hpp"

#include <mutex>
#include <string>

namespace fpcarry {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt to_big(u64 v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

BernoulliCache::BernoulliCache() : values_{Rat(1)} {}

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

Rat BernoulliCache::get(std::size_t index) {
    {
        std::shared_lock lock(mutex_);
        if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    extend_to(index);
    return values_[index];
}

void BernoulliCache::extend_to(std::size_t index) {
    while (values_.size() <= index) {
        const std::size_t m = values_.size();
        if (m > 1 && m % 2 == 1) {
            values_.emplace_back(0);
            continue;
        }
        Rat acc;
        for (std::size_t s = 0; s < m; ++s) {
            if (values_[s].is_zero()) continue;
            acc += Rat(binomial(m + 1, s)) * values_[s];
        }
        values_.push_back(-acc / Rat(static_cast<long>(m + 1)));
    }
}

Rat bernoulli(std::size_t index) { return BernoulliCache::global().get(index); }

std::vector<Rat> bernoulli_poly(std::size_t m) {
    std::vector<Rat> coeffs(m + 1);
    for (std::size_t s = 0; s <= m; ++s) coeffs[s] = Rat(binomial(m, s)) * bernoulli(m - s);
    return coeffs;
}

Rat eval_rat_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

BigInt power_sum(std::size_t m, const BigInt& n) {
    if (m < 1 || n < 1) throw DomainError("power_sum requires m >= 1 and N >= 1");
    const auto poly = bernoulli_poly(m + 1);
    Rat value = (eval_rat_poly(poly, Rat(BigInt(n + 1))) - bernoulli(m + 1)) / Rat(static_cast<long>(m + 1));
    if (!value.is_integer()) {
        throw InternalError("power sum for m=" + std::to_string(m) + " is not integral: " + value.to_string());
    }
    return value.num();
}

BigInt staudt_clausen_denominator(std::size_t index) {
    BigInt d = 1;
    for (std::size_t q = 2; q <= index + 1; ++q) {
        if (index % (q - 1) == 0 && is_prime(q)) d *= static_cast<unsigned long>(q);
    }
    return d;
}

u64 wilson_quotient(Prime p, u64 cap) {
    if (p.value() > cap) {
        throw DomainError("wilson_quotient: p=" + std::to_string(p.value()) + " exceeds the factorial cap " +
                          std::to_string(cap));
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), p.value() - 1);
    f += 1;
    const BigInt pp = to_big(p.value());
    if (!mpz_divisible_p(f.get_mpz_t(), pp.get_mpz_t())) {
        throw InternalError("(p-1)! + 1 is not divisible by " + std::to_string(p.value()));
    }
    f /= pp;
    return big_mod(f, p.value());
}

u64 wilson_from_bernoulli(Prime p) {
    const Rat combined = bernoulli(p.value() - 1) + Rat(BigInt(1), to_big(p.value())) - Rat(1);
    try {
        return rational_mod(combined, p.value());
    } catch (const DomainError&) {
        throw InternalError("B_{p-1} + 1/p - 1 has a denominator divisible by " + std::to_string(p.value()));
    }
}

u64 fermat_quotient(const BigInt& a, Prime p) {
    if (a < 1) throw DomainError("fermat_quotient requires a >= 1");
    const BigInt pp = to_big(p.value());
    if (mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t())) {
        throw DomainError("fermat_quotient: " + std::to_string(p.value()) + " divides " + a.get_str());
    }
    const BigInt p2 = pp * pp;
    BigInt r;
    const BigInt e = pp - 1;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p2.get_mpz_t());
    // a^(p-1) = 1 + q p (mod p^2) with r in [0, p^2).
    r -= 1;
    if (r < 0) r += p2;
    return big_mod(BigInt(r / pp), p.value());
}

}  // namespace fpcarry
