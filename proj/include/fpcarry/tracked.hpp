#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpcarry/fp.hpp"
#include "fpcarry/mpoly.hpp"

namespace fpcarry {

/// Operation counters for one logical computation. Not thread-safe; a tape
/// belongs to a single computation.
class CostTape {
public:
    explicit CostTape(Prime p) : p_(p) {}

    Prime modulus() const { return p_; }

    std::uint64_t adds = 0;
    /// Products of two non-constant operands.
    std::uint64_t muls = 0;
    /// Products with at least one constant operand.
    std::uint64_t const_muls = 0;
    std::uint32_t max_depth = 0;

    /// `adds=.. muls=.. const_muls=.. max_depth=..`, one key per line.
    std::string report_text() const;
    /// `{"adds": .., "muls": .., "const_muls": .., "max_depth": ..}`
    std::string report_json() const;

private:
    Prime p_;
};

/// An F_p value that can only be added, multiplied, or injected as a
/// constant. There is deliberately no subtraction, division, comparison or
/// access to the value besides reveal().
class TrackedValue {
public:
    friend TrackedValue tv_input(CostTape& tape, const Fp& v);
    friend TrackedValue tv_const(CostTape& tape, const Fp& v);
    friend TrackedValue operator+(const TrackedValue& a, const TrackedValue& b);
    friend TrackedValue operator*(const TrackedValue& a, const TrackedValue& b);
    /// Leaves the encrypted domain; not an operation of the circuit.
    friend Fp reveal(const TrackedValue& v);

    std::uint32_t depth() const { return depth_; }
    bool is_constant() const { return constant_; }
    const CostTape* tape() const { return tape_; }

private:
    TrackedValue(u64 v, std::uint32_t depth, bool constant, CostTape* tape)
        : v_(v), depth_(depth), constant_(constant), tape_(tape) {}

    u64 v_;
    std::uint32_t depth_;
    bool constant_;
    CostTape* tape_;
};

/// A fresh ciphertext input (depth 0).
TrackedValue tv_input(CostTape& tape, const Fp& v);
/// A public constant.
TrackedValue tv_const(CostTape& tape, const Fp& v);
TrackedValue tv_add(const TrackedValue& a, const TrackedValue& b);
TrackedValue tv_mul(const TrackedValue& a, const TrackedValue& b);
Fp reveal(const TrackedValue& v);

[[noreturn]] void throw_tape_mismatch();

inline TrackedValue operator+(const TrackedValue& a, const TrackedValue& b) {
    if (a.tape_ != b.tape_) throw_tape_mismatch();
    CostTape& tape = *a.tape_;
    ++tape.adds;
    const u64 p = tape.modulus().value();
    u64 s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return TrackedValue(s, std::max(a.depth_, b.depth_), a.constant_ && b.constant_, &tape);
}

inline TrackedValue operator*(const TrackedValue& a, const TrackedValue& b) {
    if (a.tape_ != b.tape_) throw_tape_mismatch();
    CostTape& tape = *a.tape_;
    const u64 v = mul_mod(a.v_, b.v_, tape.modulus().value());
    std::uint32_t depth = std::max(a.depth_, b.depth_);
    if (a.constant_ || b.constant_) {
        ++tape.const_muls;
    } else {
        ++tape.muls;
        ++depth;
        tape.max_depth = std::max(tape.max_depth, depth);
    }
    return TrackedValue(v, depth, a.constant_ && b.constant_, &tape);
}

/// Arithmetic backend for the generic algorithms: plain values or tracked
/// ones. reveal() is for invariant checks and output, never for computing.
template <class C>
concept FieldContext = requires(const C& ctx, const typename C::value_type& a, const Fp& c) {
    { ctx.modulus() } -> std::same_as<Prime>;
    { ctx.constant(c) } -> std::same_as<typename C::value_type>;
    { a + a } -> std::same_as<typename C::value_type>;
    { a * a } -> std::same_as<typename C::value_type>;
    { ctx.reveal(a) } -> std::same_as<Fp>;
};

struct PlainField {
    using value_type = Fp;
    Prime p;

    Prime modulus() const { return p; }
    Fp constant(const Fp& c) const { return c; }
    Fp reveal(const Fp& v) const { return v; }
};

struct TrackedField {
    using value_type = TrackedValue;
    CostTape* tape;

    Prime modulus() const { return tape->modulus(); }
    TrackedValue constant(const Fp& c) const { return tv_const(*tape, c); }
    Fp reveal(const TrackedValue& v) const { return fpcarry::reveal(v); }
};

static_assert(FieldContext<PlainField>);
static_assert(FieldContext<TrackedField>);

/// A polynomial flattened for repeated evaluation. Terms keep the canonical
/// order of the source MPoly.
struct CompiledPoly {
    struct Term {
        u64 coeff;
        std::uint32_t first;  // into factors
        std::uint32_t count;
    };
    Prime modulus;
    std::size_t nvars = 0;
    std::vector<std::uint32_t> max_exp;
    std::vector<Term> terms;
    /// (variable, exponent) pairs, exponent >= 1.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    /// Start of each variable's powers in the flat power table.
    std::vector<std::uint32_t> power_offset;
    std::size_t power_slots = 0;
    std::size_t widest_term = 0;

    static CompiledPoly compile(const MPoly& f);
};

/// Evaluates f with add/mul/constant only. Strategy: per-variable power
/// tables built by repeated multiplication, each monomial as a balanced
/// product of its variable powers, a constant multiply for non-unit
/// coefficients, then a left-to-right sum in canonical term order.
template <FieldContext C>
typename C::value_type eval_poly(const C& ctx, const CompiledPoly& f, std::span<const typename C::value_type> point) {
    using V = typename C::value_type;
    if (point.size() != f.nvars) {
        throw StructuralError("evaluation point has " + std::to_string(point.size()) +
                              " coordinates, polynomial has " + std::to_string(f.nvars) + " variables");
    }
    const Prime p = f.modulus;
    if (!(ctx.modulus() == p)) throw StructuralError("context modulus mismatch");
    if (f.terms.empty()) return ctx.constant(Fp::zero(p));

    // powers[power_offset[v] + k] = x_v^(k+1)
    std::vector<V> powers;
    powers.reserve(f.power_slots);
    for (std::size_t v = 0; v < f.nvars; ++v) {
        if (f.max_exp[v] == 0) continue;
        powers.push_back(point[v]);
        for (std::uint32_t k = 1; k < f.max_exp[v]; ++k) powers.push_back(powers.back() * point[v]);
    }

    std::vector<V> factors;
    factors.reserve(f.widest_term);
    std::vector<V> acc;
    acc.reserve(1);
    for (const auto& t : f.terms) {
        std::size_t n = 0;
        for (std::uint32_t k = 0; k < t.count; ++k) {
            const auto [v, e] = f.factors[t.first + k];
            const V& pw = powers[f.power_offset[v] + e - 1];
            if (n < factors.size()) {
                factors[n] = pw;
            } else {
                factors.push_back(pw);
            }
            ++n;
        }
        const Fp c(t.coeff, p);
        if (n == 0) {
            if (acc.empty()) {
                acc.push_back(ctx.constant(c));
            } else {
                acc.front() = acc.front() + ctx.constant(c);
            }
            continue;
        }
        while (n > 1) {
            std::size_t half = 0;
            for (std::size_t k = 0; k + 1 < n; k += 2) factors[half++] = factors[k] * factors[k + 1];
            if (n % 2 == 1) factors[half++] = factors[n - 1];
            n = half;
        }
        const V term = t.coeff == 1 ? factors.front() : ctx.constant(c) * factors.front();
        if (acc.empty()) {
            acc.push_back(term);
        } else {
            acc.front() = acc.front() + term;
        }
    }
    return acc.front();
}

template <FieldContext C>
typename C::value_type eval_poly(const C& ctx, const MPoly& f, std::span<const typename C::value_type> point) {
    return eval_poly(ctx, CompiledPoly::compile(f), point);
}

/// eval_poly over tracked values; the returned value carries its depth and
/// the tape holds the cost.
TrackedValue eval_tracked(const MPoly& f, std::span<const TrackedValue> point);

}  // namespace fpcarry
