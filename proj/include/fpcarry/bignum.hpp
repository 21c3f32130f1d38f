#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpcarry/carry_eval.hpp"
#include "fpcarry/fp.hpp"
#include "fpcarry/tracked.hpp"

namespace fpcarry {

/// Non-negative integer in base p, little-endian (digits()[i] is the
/// coefficient of p^i). Always canonical: no leading zero digits, and zero is
/// the empty vector.
class Digits {
public:
    explicit Digits(Prime p) : p_(p) {}
    Digits(Prime p, std::vector<Fp> little_endian);

    Prime modulus() const { return p_; }
    const std::vector<Fp>& digits() const { return d_; }
    std::size_t size() const { return d_.size(); }
    bool is_zero() const { return d_.empty(); }

    friend bool operator==(const Digits& a, const Digits& b) { return a.p_ == b.p_ && a.d_ == b.d_; }

private:
    Prime p_;
    std::vector<Fp> d_;
};

/// Throws DomainError for negative v.
Digits to_digits(const BigInt& v, Prime p);
BigInt from_digits(const Digits& d);

/// Big-endian digit string: one character 0-9a-z per digit (p <= 36), or
/// decimal digit values separated by ':' for any p.
Digits parse_radix_literal(const std::string& s, Prime p);
/// Character form when p <= 36, colon form otherwise; "0" for zero.
std::string format_radix_literal(const Digits& d);

/// Non-negative decimal integer; throws DomainError otherwise.
BigInt parse_decimal(const std::string& s);

/// Smallest d >= 0 with (n + d)(p - 1) < p^(d+1). Throws DomainError for n = 0.
unsigned lookahead_d(std::size_t n, Prime p);

struct BignumOptions {
    /// Reveal intermediate values and assert the column bounds the
    /// algorithms rely on. Never affects the circuit.
    bool check_invariants = false;
};

/// Pending carries gamma_(j,k) from column j into column k.
template <class V>
using CarryState = std::map<std::pair<std::size_t, std::size_t>, V>;

namespace detail {

template <FieldContext C>
u64 revealed_sum(const C& ctx, std::span<const typename C::value_type> xs) {
    u64 s = 0;
    for (const auto& x : xs) s += ctx.reveal(x).lift();
    return s;
}

template <class V>
void check_equal_lengths(const std::vector<std::vector<V>>& xs) {
    if (xs.empty()) throw DomainError("at least one operand is required");
    for (const auto& x : xs) {
        if (x.empty() || x.size() != xs.front().size()) {
            throw StructuralError("operands must be padded to a common nonzero length");
        }
    }
}

}  // namespace detail

// The *_fixed algorithms work on already padded operands and return every
// digit slot they allocate, leading zeros included.

/// Column addition of n addends with lookahead d; returns m+d+2 digits.
template <FieldContext C>
std::vector<typename C::value_type> add_many_fixed(const C& ctx,
                                                   const std::vector<std::vector<typename C::value_type>>& addends,
                                                   const BignumOptions& opts = {}) {
    using V = typename C::value_type;
    detail::check_equal_lengths(addends);
    const Prime p = ctx.modulus();
    const std::size_t n = addends.size();
    const std::size_t m = addends.front().size() - 1;
    const unsigned d = lookahead_d(n, p);
    const std::size_t last = m + d + 1;

    CarryState<V> gamma;
    std::vector<V> out;
    out.reserve(last + 1);
    std::vector<V> inputs;
    for (std::size_t i = 0; i <= last; ++i) {
        inputs.clear();
        if (i <= m) {
            for (const auto& a : addends) inputs.push_back(a[i]);
        }
        for (std::size_t t = d; t >= 1; --t) {
            if (i >= t) inputs.push_back(gamma.at({i - t, i}));
        }
        if (opts.check_invariants && detail::revealed_sum(ctx, std::span<const V>(inputs)) >= prime_power(p, d + 1)) {
            throw InternalError("column " + std::to_string(i) + " exceeds the lookahead window");
        }
        if (inputs.empty()) {
            out.push_back(ctx.constant(Fp::zero(p)));
        } else {
            out.push_back(eval_poly(ctx, phi_compiled(p, inputs.size(), 0), std::span<const V>(inputs)));
        }
        const std::size_t reach = std::min<std::size_t>(d, last - i);
        if (reach == 0) continue;
        if (inputs.empty()) {
            for (std::size_t k = 1; k <= reach; ++k) gamma.insert_or_assign({i, i + k}, ctx.constant(Fp::zero(p)));
            continue;
        }
        auto carries = column_carries(ctx, std::span<const V>(inputs), static_cast<unsigned>(reach));
        for (std::size_t k = 1; k <= reach; ++k) gamma.insert_or_assign({i, i + k}, carries[k - 1]);
    }
    return out;
}

/// Two-addend ripple addition with the carry-in form of phi_1; returns m+2
/// digits.
template <FieldContext C>
std::vector<typename C::value_type> add_two_fixed(const C& ctx, const std::vector<typename C::value_type>& a,
                                                  const std::vector<typename C::value_type>& b) {
    using V = typename C::value_type;
    detail::check_equal_lengths(std::vector<std::vector<V>>{a, b});
    const Prime p = ctx.modulus();
    const std::size_t m = a.size() - 1;
    std::vector<V> out;
    out.reserve(m + 2);
    out.push_back(a[0] + b[0]);
    V gamma = eval_poly(ctx, phi_compiled(p, 2, 1), std::span<const V>(std::vector<V>{a[0], b[0]}));
    for (std::size_t i = 1; i <= m; ++i) {
        out.push_back(a[i] + b[i] + gamma);
        const std::vector<V> args{a[i], b[i], gamma};
        gamma = eval_poly(ctx, phi_prime_compiled(p), std::span<const V>(args));
    }
    out.push_back(gamma);
    return out;
}

namespace detail {

template <FieldContext C>
typename C::value_type psi1(const C& ctx, const typename C::value_type& x, const typename C::value_type& y) {
    using V = typename C::value_type;
    const std::vector<V> args{x, y};
    return eval_poly(ctx, psi1_compiled(ctx.modulus()), std::span<const V>(args));
}

template <FieldContext C>
typename C::value_type phi1(const C& ctx, std::vector<typename C::value_type> args) {
    using V = typename C::value_type;
    return eval_poly(ctx, phi_compiled(ctx.modulus(), args.size(), 1), std::span<const V>(args));
}

template <FieldContext C>
void check_row_bound(const C& ctx, const typename C::value_type& a, const typename C::value_type& b,
                     const typename C::value_type& c, const typename C::value_type* g) {
    const u64 p = ctx.modulus().value();
    const u64 total = ctx.reveal(a).lift() * ctx.reveal(b).lift() + ctx.reveal(c).lift() + (g ? ctx.reveal(*g).lift() : 0);
    if (total > p * p - 1) throw InternalError("row update exceeds two digits");
}

inline void require_odd(Prime p) {
    if (p.value() == 2) {
        throw DomainError("multiplication needs an odd prime; for p = 2 the product carries are plain bit logic "
                          "(use shift-and-add)");
    }
}

}  // namespace detail

/// Row-by-row multiplication with psi_1 and phi_1 only. The first operand
/// needs at least two digits; returns m1+m2+2 digits.
template <FieldContext C>
std::vector<typename C::value_type> mul_schoolbook_fixed(const C& ctx, const std::vector<typename C::value_type>& a,
                                                         const std::vector<typename C::value_type>& b,
                                                         const BignumOptions& opts = {}) {
    using V = typename C::value_type;
    detail::require_odd(ctx.modulus());
    if (a.size() < 2 || b.empty()) throw StructuralError("schoolbook needs a first operand of at least two digits");
    const std::size_t m1 = a.size() - 1;
    const std::size_t m2 = b.size() - 1;
    std::vector<std::optional<V>> c(m1 + m2 + 2);

    c[0] = a[0] * b[0];
    V gamma = detail::psi1(ctx, a[0], b[0]);
    for (std::size_t i = 1; i <= m1; ++i) {
        const V u = a[i] * b[0];
        if (opts.check_invariants) detail::check_row_bound(ctx, a[i], b[0], gamma, static_cast<const V*>(nullptr));
        c[i] = u + gamma;
        gamma = detail::psi1(ctx, a[i], b[0]) + detail::phi1(ctx, {u, gamma});
    }
    c[m1 + 1] = gamma;

    for (std::size_t j = 1; j <= m2; ++j) {
        V u = a[0] * b[j];
        if (opts.check_invariants) detail::check_row_bound(ctx, a[0], b[j], *c[j], static_cast<const V*>(nullptr));
        gamma = detail::psi1(ctx, a[0], b[j]) + detail::phi1(ctx, {u, *c[j]});
        c[j] = u + *c[j];
        for (std::size_t i = 1; i + 1 <= m1; ++i) {
            u = a[i] * b[j];
            V& slot = *c[i + j];
            if (opts.check_invariants) detail::check_row_bound(ctx, a[i], b[j], slot, &gamma);
            const V next = detail::psi1(ctx, a[i], b[j]) + detail::phi1(ctx, {u, slot, gamma});
            slot = u + slot + gamma;
            gamma = next;
        }
        u = a[m1] * b[j];
        V& slot = *c[m1 + j];
        if (opts.check_invariants) detail::check_row_bound(ctx, a[m1], b[j], slot, &gamma);
        c[m1 + j + 1] = detail::psi1(ctx, a[m1], b[j]) + detail::phi1(ctx, {u, slot, gamma});
        slot = u + slot + gamma;
    }

    std::vector<V> out;
    out.reserve(c.size());
    for (auto& v : c) out.push_back(*v);
    return out;
}

/// Multiplication through partial-product lists A_k and column reduction;
/// returns the digits up to the first empty list.
template <FieldContext C>
std::vector<typename C::value_type> mul_listed_fixed(const C& ctx, const std::vector<typename C::value_type>& a,
                                                     const std::vector<typename C::value_type>& b) {
    using V = typename C::value_type;
    const Prime p = ctx.modulus();
    detail::require_odd(p);
    if (a.empty() || b.empty()) throw StructuralError("operands need at least one digit");
    std::vector<std::vector<V>> lists(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            lists[i + j].push_back(a[i] * b[j]);
            lists[i + j + 1].push_back(detail::psi1(ctx, a[i], b[j]));
        }
    }
    std::vector<V> out;
    for (std::size_t i = 0; i < lists.size() && !lists[i].empty(); ++i) {
        const std::vector<V> column = std::move(lists[i]);
        V sum = column.front();
        for (std::size_t k = 1; k < column.size(); ++k) sum = sum + column[k];
        out.push_back(sum);
        const unsigned top = top_carry_index(column.size(), p);
        if (top == 0) continue;
        auto carries = column_carries(ctx, std::span<const V>(column), top);
        if (lists.size() < i + top + 1) lists.resize(i + top + 1);
        for (unsigned j = 1; j <= top; ++j) lists[i + j].push_back(carries[j - 1]);
    }
    return out;
}

// Digits-level entry points. With a tape, every digit enters as a tracked
// input and the whole computation runs over TrackedValue.

Digits add_many(const std::vector<Digits>& addends, CostTape* tape = nullptr, const BignumOptions& opts = {});
Digits add_two(const Digits& a, const Digits& b, CostTape* tape = nullptr);
/// The first operand is padded to two digits.
Digits mul_schoolbook(const Digits& a, const Digits& b, CostTape* tape = nullptr, const BignumOptions& opts = {});
Digits mul_listed(const Digits& a, const Digits& b, CostTape* tape = nullptr);

}  // namespace fpcarry
