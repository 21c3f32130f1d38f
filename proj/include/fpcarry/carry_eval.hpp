#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fpcarry/add_carry.hpp"
#include "fpcarry/fp.hpp"
#include "fpcarry/tracked.hpp"

namespace fpcarry {

// Cached compiled carry polynomials. The returned references stay valid for
// the lifetime of the process.

/// phi_poly(k, arity, p)
const CompiledPoly& phi_compiled(Prime p, std::size_t arity, unsigned k);
/// psi1_poly(2, p)
const CompiledPoly& psi1_compiled(Prime p);
/// phi_prime_poly(p), variables (x1, x2, g)
const CompiledPoly& phi_prime_compiled(Prime p);

/// Largest k with n (p - 1) >= p^k; 0 when n (p - 1) < p.
unsigned top_carry_index(std::size_t n, Prime p);

/// Whether digits 1..top of an arity-n column are evaluated from the expanded
/// phi_poly. Wide columns, whose expanded carries are too large to build,
/// take the accumulation path of column_carries instead.
bool expanded_carries(Prime p, std::size_t arity, unsigned top);

/// Inverses 1, 1/2, ..., 1/(p-1) in F_p, cached.
const std::vector<Fp>& small_inverses(Prime p);

/// phi_1(x, y) in the binomial form sum_{d=1}^{p-1} C(x, d) C(y, p-d), where
/// C(x, d) is built by C(x, d) = C(x, d-1) (x - d + 1) / d.
template <FieldContext C>
typename C::value_type phi1_binomial(const C& ctx, const typename C::value_type& x, const typename C::value_type& y) {
    using V = typename C::value_type;
    const Prime p = ctx.modulus();
    const u64 pv = p.value();
    if (pv == 2) return x * y;
    const auto& inv = small_inverses(p);
    // bx[d] = C(x, d) for d in [1, p-1]
    std::vector<V> bx;
    std::vector<V> by;
    bx.reserve(pv);
    by.reserve(pv);
    bx.push_back(x);
    by.push_back(y);
    for (u64 d = 2; d < pv; ++d) {
        const Fp shift(pv - (d - 1), p);
        bx.push_back(ctx.constant(inv[d]) * (bx.back() * (x + ctx.constant(shift))));
        by.push_back(ctx.constant(inv[d]) * (by.back() * (y + ctx.constant(shift))));
    }
    V acc = bx[0] * by[pv - 2];
    for (u64 d = 2; d < pv; ++d) acc = acc + bx[d - 1] * by[pv - d - 1];
    return acc;
}

/// phi_1(args) .. phi_top(args), the digits 1..top of the integer sum of
/// args. Entry j-1 holds phi_j.
///
/// Narrow columns evaluate the cached phi_poly for each j. Wide columns add
/// the arguments one at a time into a base-p accumulator, each step
/// rippling two-input carries upward; the result is the same function.
template <FieldContext C>
std::vector<typename C::value_type> column_carries(const C& ctx, std::span<const typename C::value_type> args,
                                                   unsigned top) {
    using V = typename C::value_type;
    std::vector<V> out;
    if (top == 0) return out;
    const Prime p = ctx.modulus();
    out.reserve(top);
    if (expanded_carries(p, args.size(), top)) {
        for (unsigned k = 1; k <= top; ++k) out.push_back(eval_poly(ctx, phi_compiled(p, args.size(), k), args));
        return out;
    }
    // acc[k] is digit k of the running sum; empty slots are structurally zero.
    // The accumulator is wide enough for the largest possible column sum.
    const unsigned width = std::max(top, top_carry_index(args.size(), p));
    std::vector<std::optional<V>> acc(width + 1);
    for (const V& a : args) {
        V carry = a;
        for (unsigned k = 0; k <= width; ++k) {
            if (!acc[k]) {
                acc[k] = carry;
                break;
            }
            if (k == width) {
                acc[k] = *acc[k] + carry;
                break;
            }
            V next = phi1_binomial(ctx, *acc[k], carry);
            acc[k] = *acc[k] + carry;
            carry = next;
        }
    }
    for (unsigned k = 1; k <= top; ++k) out.push_back(acc[k] ? *acc[k] : ctx.constant(Fp::zero(p)));
    return out;
}

}  // namespace fpcarry
