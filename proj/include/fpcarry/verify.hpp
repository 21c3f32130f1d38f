#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpcarry/fp.hpp"

namespace fpcarry {

struct VerifyOptions {
    /// Largest prime exercised; 0 keeps each suite's own default.
    u64 p_max = 0;
    /// Largest Bernoulli index for the denominator checks.
    std::size_t l_max = 60;
    /// Random operand pairs per (p, algorithm) in the bignum suite.
    std::size_t bignum_pairs = 100;
    std::uint64_t seed = 20240601;
};

struct VerifyReport {
    explicit VerifyReport(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::uint64_t checks = 0;
    std::uint64_t failed = 0;
    /// The first few failures, one line each.
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
    void check(bool cond, const std::string& what);
    void merge(const VerifyReport& other);
};

/// add-carry, mul-carry, bernoulli, cocycle, appendix, bignum, all
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts = {});

/// Primes q with lo <= q <= hi.
std::vector<u64> primes_between(u64 lo, u64 hi);

}  // namespace fpcarry
