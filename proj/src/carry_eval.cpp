#include "fpcarry/carry_eval.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "fpcarry/mul_carry.hpp"

namespace fpcarry {

namespace {

// Expanded carries are built only while the Gamma-basis support stays small.
constexpr u64 kExpandedSupportLimit = 256;

template <class Key, class Value>
class Memo {
public:
    template <class Build>
    const Value& get(const Key& key, Build&& build) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(build());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> map_;
};

// Coefficient of X^target in (1 + ... + X^(p-1))^n, saturating at limit + 1.
u64 capped_composition_count(u64 target, std::size_t n, u64 p, u64 limit) {
    std::vector<u64> ways(target + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 0; part < n; ++part) {
        std::vector<u64> next(target + 1, 0);
        for (u64 t = 0; t <= target; ++t) {
            if (ways[t] == 0) continue;
            for (u64 d = 0; d < p && t + d <= target; ++d) next[t + d] = std::min(limit + 1, next[t + d] + ways[t]);
        }
        ways.swap(next);
    }
    return ways[target];
}

}  // namespace

const CompiledPoly& phi_compiled(Prime p, std::size_t arity, unsigned k) {
    static Memo<std::tuple<u64, std::size_t, unsigned>, CompiledPoly> memo;
    return memo.get({p.value(), arity, k}, [&] { return CompiledPoly::compile(phi_poly(k, arity, p)); });
}

const CompiledPoly& psi1_compiled(Prime p) {
    static Memo<u64, CompiledPoly> memo;
    return memo.get(p.value(), [&] { return CompiledPoly::compile(psi1_poly(2, p)); });
}

const CompiledPoly& phi_prime_compiled(Prime p) {
    static Memo<u64, CompiledPoly> memo;
    return memo.get(p.value(), [&] { return CompiledPoly::compile(phi_prime_poly(p)); });
}

unsigned top_carry_index(std::size_t n, Prime p) {
    const BigInt budget = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(p.value() - 1);
    unsigned k = 0;
    BigInt power = p.value();
    while (power <= budget) {
        ++k;
        power *= static_cast<unsigned long>(p.value());
    }
    return k;
}

bool expanded_carries(Prime p, std::size_t arity, unsigned top) {
    static Memo<std::tuple<u64, std::size_t, unsigned>, bool> memo;
    return memo.get({p.value(), arity, top}, [&] {
        u64 support = 0;
        for (unsigned k = 1; k <= top && support <= kExpandedSupportLimit; ++k) {
            support += capped_composition_count(prime_power(p, k), arity, p.value(), kExpandedSupportLimit);
        }
        return support <= kExpandedSupportLimit;
    });
}

const std::vector<Fp>& small_inverses(Prime p) {
    static Memo<u64, std::vector<Fp>> memo;
    return memo.get(p.value(), [&] {
        std::vector<Fp> inv(p.value(), Fp::zero(p));
        for (u64 d = 1; d < p.value(); ++d) inv[d] = Fp(d, p).inverse();
        return inv;
    });
}

}  // namespace fpcarry
