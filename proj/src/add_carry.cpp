#include "fpcarry/add_carry.hpp"

#include <algorithm>
#include <limits>

#include "fpcarry/interp.hpp"

namespace fpcarry {

u64 prime_power(Prime p, unsigned i) {
    u64 r = 1;
    for (unsigned k = 0; k < i; ++k) {
        if (r > std::numeric_limits<u64>::max() / p.value()) throw DomainError("p^i overflows 64 bits");
        r *= p.value();
    }
    return r;
}

bool carry_index_live(Prime p, std::size_t n, unsigned i) {
    const u128 bound = static_cast<u128>(n) * (p.value() - 1);
    u128 power = 1;
    for (unsigned k = 0; k < i; ++k) {
        power *= p.value();
        if (power > bound) return false;
    }
    return n > 0;
}

Fp carry_oracle_add(std::span<const Fp> x, unsigned i) {
    if (x.empty()) throw StructuralError("carry_oracle_add needs at least one input");
    const Prime p = x.front().modulus();
    BigInt sum = 0;
    for (const auto& v : x) {
        if (!(v.modulus() == p)) throw StructuralError("carry_oracle_add modulus mismatch");
        sum += static_cast<unsigned long>(v.lift());
    }
    const BigInt pp = static_cast<unsigned long>(p.value());
    for (unsigned k = 0; k < i && sum != 0; ++k) sum /= pp;
    return Fp::from_big(sum, p);
}

std::vector<Composition> enumerate_compositions(u64 target, std::size_t n, Prime p) {
    std::vector<Composition> out;
    const u64 cap = p.value() - 1;
    if (n == 0) {
        if (target == 0) out.emplace_back();
        return out;
    }
    if (static_cast<u128>(n) * cap < target) return out;

    Composition cur(n, 0);
    // remaining_cap[j]: the most that parts j..n-1 can absorb.
    std::vector<u64> remaining_cap(n + 1, 0);
    for (std::size_t j = n; j-- > 0;) remaining_cap[j] = remaining_cap[j + 1] + cap;

    auto recurse = [&](auto& self, std::size_t j, u64 rest) -> void {
        if (j + 1 == n) {
            cur[j] = static_cast<std::uint32_t>(rest);
            out.push_back(cur);
            return;
        }
        const u64 hi = std::min(cap, rest);
        const u64 lo = rest > remaining_cap[j + 1] ? rest - remaining_cap[j + 1] : 0;
        for (u64 d = lo; d <= hi; ++d) {
            cur[j] = static_cast<std::uint32_t>(d);
            self(self, j + 1, rest - d);
        }
    };
    recurse(recurse, 0, target);
    return out;
}

BigInt restricted_composition_count(u64 target, std::size_t n, Prime p) {
    // Multiply out (1 + X + ... + X^(p-1))^n, truncated at X^target.
    std::vector<BigInt> poly(target + 1, 0);
    poly[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<BigInt> next(target + 1, 0);
        for (u64 s = 0; s <= target; ++s) {
            if (poly[s] == 0) continue;
            for (u64 d = 0; d < p.value() && s + d <= target; ++d) next[s + d] += poly[s];
        }
        poly.swap(next);
    }
    return poly[target];
}

MPoly phi_poly(unsigned i, std::size_t n, Prime p) {
    MPoly out(p, n);
    if (i == 0) {
        for (std::size_t j = 0; j < n; ++j) out += MPoly::variable(p, n, j);
        return out;
    }
    if (!carry_index_live(p, n, i)) return out;

    const u64 pv = p.value();
    std::vector<std::vector<u64>> scaled_ff(pv);
    u64 fact = 1;
    for (u64 d = 0; d < pv; ++d) {
        if (d > 0) fact = mul_mod(fact, d, pv);
        // (1/d!) x (x-1) ... (x-d+1)
        scaled_ff[d] = falling_factorial_coeffs(static_cast<std::uint32_t>(d), p);
        const u64 inv = inv_mod(fact, pv);
        for (auto& c : scaled_ff[d]) c = mul_mod(c, inv, pv);
    }

    ExpVec e(n, 0);
    std::vector<std::uint32_t> pos(n, 0);
    for (const auto& d : enumerate_compositions(prime_power(p, i), n, p)) {
        // Expand prod_j scaled_ff[d_j](x_j); the constant term of each
        // factor is zero unless d_j = 0, so exponents start at 1.
        for (std::size_t j = 0; j < n; ++j) pos[j] = d[j] == 0 ? 0 : 1;
        while (true) {
            u64 c = 1;
            for (std::size_t j = 0; j < n && c != 0; ++j) c = mul_mod(c, scaled_ff[d[j]][pos[j]], pv);
            if (c != 0) {
                for (std::size_t j = 0; j < n; ++j) e[j] = pos[j];
                out.add_term(e, c);
            }
            std::size_t j = 0;
            while (j < n && pos[j] == d[j]) {
                pos[j] = d[j] == 0 ? 0 : 1;
                ++j;
            }
            if (j == n) break;
            ++pos[j];
        }
    }
    return out;
}

MPoly phi1_two_poly(Prime p) {
    const u64 pv = p.value();
    if (pv == 2) return phi_poly(1, 2, p);
    MPoly out(p, 2);
    for (u64 d = 1; d < pv; ++d) {
        // (-1)^d / d
        u64 coeff = inv_mod(d, pv);
        if (d % 2 == 1) coeff = (pv - coeff) % pv;
        auto f1 = falling_factorial_coeffs(static_cast<std::uint32_t>(d), p);
        auto f2 = falling_factorial_coeffs(static_cast<std::uint32_t>(pv - d), p);
        for (std::size_t a = 1; a < f1.size(); ++a) {
            if (f1[a] == 0) continue;
            for (std::size_t b = 1; b < f2.size(); ++b) {
                u64 c = mul_mod(coeff, mul_mod(f1[a], f2[b], pv), pv);
                out.add_term(ExpVec{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}, c);
            }
        }
    }
    return reduce(out);
}

MPoly phi_prime_poly(Prime p) {
    const MPoly carry = extend_variables(phi_poly(1, 2, p), 3);
    const MPoly one = MPoly::constant(p, 3, Fp::one(p));
    const MPoly sum_plus_one = MPoly::variable(p, 3, 0) + MPoly::variable(p, 3, 1) + one;
    const MPoly on_boundary = one - poly_pow(sum_plus_one, static_cast<unsigned>(p.value() - 1));
    return reduce(carry + MPoly::variable(p, 3, 2) * on_boundary);
}

}  // namespace fpcarry
