#include "fpcarry/bignum.hpp"

#include <cctype>

namespace fpcarry {

namespace {

std::vector<Fp> strip(std::vector<Fp> d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

std::vector<Fp> padded(const Digits& d, std::size_t len) {
    std::vector<Fp> out = d.digits();
    out.resize(std::max(len, out.size()), Fp::zero(d.modulus()));
    return out;
}

void require_same_modulus(const Digits& a, const Digits& b) {
    if (!(a.modulus() == b.modulus())) throw StructuralError("operands use different moduli");
}

// Runs algo over plain values, or over tracked inputs recorded on tape.
template <class Algo>
Digits run(Prime p, CostTape* tape, const std::vector<std::vector<Fp>>& operands, Algo&& algo) {
    if (tape == nullptr) {
        return Digits(p, algo(PlainField{p}, operands));
    }
    if (!(tape->modulus() == p)) throw StructuralError("tape modulus differs from the operand modulus");
    std::vector<std::vector<TrackedValue>> tracked;
    tracked.reserve(operands.size());
    for (const auto& op : operands) {
        auto& row = tracked.emplace_back();
        row.reserve(op.size());
        for (const auto& x : op) row.push_back(tv_input(*tape, x));
    }
    const auto result = algo(TrackedField{tape}, tracked);
    std::vector<Fp> out;
    out.reserve(result.size());
    for (const auto& v : result) out.push_back(reveal(v));
    return Digits(p, std::move(out));
}

}  // namespace

Digits::Digits(Prime p, std::vector<Fp> little_endian) : p_(p), d_(strip(std::move(little_endian))) {
    for (const auto& x : d_) {
        if (!(x.modulus() == p)) throw StructuralError("digit modulus differs from the number modulus");
    }
}

Digits to_digits(const BigInt& v, Prime p) {
    if (v < 0) throw DomainError("negative integers have no base-p digits here");
    std::vector<Fp> out;
    BigInt rest = v;
    const unsigned long pv = static_cast<unsigned long>(p.value());
    while (rest != 0) {
        BigInt q;
        const unsigned long r = mpz_fdiv_q_ui(q.get_mpz_t(), rest.get_mpz_t(), pv);
        out.emplace_back(r, p);
        rest = q;
    }
    return Digits(p, std::move(out));
}

BigInt from_digits(const Digits& d) {
    BigInt acc = 0;
    const unsigned long pv = static_cast<unsigned long>(d.modulus().value());
    for (std::size_t i = d.size(); i-- > 0;) {
        acc *= pv;
        acc += static_cast<unsigned long>(d.digits()[i].value());
    }
    return acc;
}

Digits parse_radix_literal(const std::string& s, Prime p) {
    if (s.empty()) throw DomainError("empty radix literal");
    std::vector<u64> big_endian;
    if (s.find(':') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t end = s.find(':', start);
            const std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
            if (part.empty() || part.size() > 19) throw DomainError("bad digit '" + part + "' in radix literal");
            u64 v = 0;
            for (char ch : part) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    throw DomainError("bad digit '" + part + "' in radix literal");
                }
                v = v * 10 + static_cast<u64>(ch - '0');
            }
            big_endian.push_back(v);
            if (end == std::string::npos) break;
            start = end + 1;
        }
    } else {
        for (char ch : s) {
            const auto c = static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(ch)));
            if (std::isdigit(c)) {
                big_endian.push_back(c - '0');
            } else if (c >= 'a' && c <= 'z') {
                big_endian.push_back(10 + (c - 'a'));
            } else {
                throw DomainError(std::string("bad character '") + ch + "' in radix literal");
            }
        }
    }
    std::vector<Fp> digits;
    digits.reserve(big_endian.size());
    for (std::size_t i = big_endian.size(); i-- > 0;) {
        if (big_endian[i] >= p.value()) {
            throw DomainError("digit " + std::to_string(big_endian[i]) + " is not below p=" + std::to_string(p.value()));
        }
        digits.emplace_back(big_endian[i], p);
    }
    return Digits(p, std::move(digits));
}

std::string format_radix_literal(const Digits& d) {
    if (d.is_zero()) return "0";
    const bool chars = d.modulus().value() <= 36;
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        const u64 v = d.digits()[i].value();
        if (chars) {
            out.push_back(static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)));
        } else {
            if (i + 1 != d.size()) out.push_back(':');
            out += std::to_string(v);
        }
    }
    return out;
}

BigInt parse_decimal(const std::string& s) {
    if (s.empty()) throw DomainError("empty integer");
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("'" + s + "' is not a non-negative integer");
    }
    return BigInt(s, 10);
}

unsigned lookahead_d(std::size_t n, Prime p) {
    if (n == 0) throw DomainError("lookahead needs at least one addend");
    const unsigned long pm1 = static_cast<unsigned long>(p.value() - 1);
    BigInt power = static_cast<unsigned long>(p.value());
    for (unsigned d = 0;; ++d) {
        if (BigInt(static_cast<unsigned long>(n + d)) * pm1 < power) return d;
        power *= static_cast<unsigned long>(p.value());
    }
}

Digits add_many(const std::vector<Digits>& addends, CostTape* tape, const BignumOptions& opts) {
    if (addends.empty()) throw DomainError("add_many needs at least one addend");
    std::size_t len = 1;
    for (const auto& a : addends) {
        require_same_modulus(a, addends.front());
        len = std::max(len, a.size());
    }
    std::vector<std::vector<Fp>> ops;
    for (const auto& a : addends) ops.push_back(padded(a, len));
    return run(addends.front().modulus(), tape, ops,
               [&](const auto& ctx, const auto& xs) { return add_many_fixed(ctx, xs, opts); });
}

Digits add_two(const Digits& a, const Digits& b, CostTape* tape) {
    require_same_modulus(a, b);
    const std::size_t len = std::max<std::size_t>({1, a.size(), b.size()});
    return run(a.modulus(), tape, {padded(a, len), padded(b, len)},
               [](const auto& ctx, const auto& xs) { return add_two_fixed(ctx, xs[0], xs[1]); });
}

Digits mul_schoolbook(const Digits& a, const Digits& b, CostTape* tape, const BignumOptions& opts) {
    require_same_modulus(a, b);
    detail::require_odd(a.modulus());
    return run(a.modulus(), tape, {padded(a, 2), padded(b, 1)},
               [&](const auto& ctx, const auto& xs) { return mul_schoolbook_fixed(ctx, xs[0], xs[1], opts); });
}

Digits mul_listed(const Digits& a, const Digits& b, CostTape* tape) {
    require_same_modulus(a, b);
    detail::require_odd(a.modulus());
    return run(a.modulus(), tape, {padded(a, 1), padded(b, 1)},
               [](const auto& ctx, const auto& xs) { return mul_listed_fixed(ctx, xs[0], xs[1]); });
}

}  // namespace fpcarry
