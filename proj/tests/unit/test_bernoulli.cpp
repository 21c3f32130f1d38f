#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fpcarry/bernoulli.hpp"

using namespace fpcarry;

namespace {

Rat frac(long n, long d) { return Rat(BigInt(n), BigInt(d)); }

// Akiyama-Tanigawa; it yields B_1 = +1/2, flipped here.
std::vector<Rat> akiyama_tanigawa(std::size_t count) {
    std::vector<Rat> out;
    std::vector<Rat> row(count);
    for (std::size_t m = 0; m < count; ++m) {
        row[m] = frac(1, static_cast<long>(m) + 1);
        for (std::size_t j = m; j >= 1; --j) row[j - 1] = Rat(static_cast<long>(j)) * (row[j - 1] - row[j]);
        out.push_back(row[0]);
    }
    if (count > 1) out[1] = -out[1];
    return out;
}

BigInt naive_power_sum(unsigned m, unsigned n) {
    BigInt s = 0;
    for (unsigned k = 1; k <= n; ++k) {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), k, m);
        s += t;
    }
    return s;
}

u64 exact_fermat_quotient(u64 a, u64 p) {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), a, p - 1);
    t -= 1;
    CHECK(mpz_divisible_ui_p(t.get_mpz_t(), p) != 0);
    t /= static_cast<unsigned long>(p);
    return big_mod(t, p);
}

}  // namespace

TEST_CASE("table values") {
    const std::map<std::size_t, Rat> table{
        {0, Rat(1)},           {1, frac(-1, 2)},  {2, frac(1, 6)},   {4, frac(-1, 30)},
        {6, frac(1, 42)},      {8, frac(-1, 30)}, {10, frac(5, 66)}, {12, frac(-691, 2730)},
        {14, frac(7, 6)},      {16, frac(-3617, 510)}};
    for (const auto& [l, b] : table) CHECK(bernoulli(l) == b);
    CHECK(bernoulli(7) == Rat(0));
    for (std::size_t l = 3; l <= 99; l += 2) CHECK(bernoulli(l).is_zero());
}

TEST_CASE("matches an independent recurrence") {
    const auto ref = akiyama_tanigawa(80);
    for (std::size_t l = 0; l < ref.size(); ++l) CHECK(bernoulli(l) == ref[l]);
}

TEST_CASE("von Staudt-Clausen denominators") {
    CHECK(staudt_clausen_denominator(2) == 6);
    CHECK(staudt_clausen_denominator(12) == 2730);
    for (std::size_t l = 2; l <= 60; l += 2) CHECK(bernoulli(l).den() == staudt_clausen_denominator(l));
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(0) == std::vector<Rat>{Rat(1)});
    CHECK(bernoulli_poly(1) == std::vector<Rat>{frac(-1, 2), Rat(1)});
    CHECK(bernoulli_poly(2) == std::vector<Rat>{frac(1, 6), Rat(-1), Rat(1)});
    for (std::size_t m = 0; m <= 12; ++m) {
        const auto c = bernoulli_poly(m);
        CHECK(c.size() == m + 1);
        CHECK(c.back() == Rat(1));
        // B_m(0) = B_m
        CHECK(eval_rat_poly(c, Rat(0)) == bernoulli(m));
    }
}

TEST_CASE("power sums") {
    CHECK(power_sum(1, 10) == 55);
    CHECK(power_sum(2, 4) == 30);
    for (unsigned n = 1; n <= 20; ++n) {
        const BigInt tri = BigInt(n) * (n + 1) / 2;
        CHECK(power_sum(3, n) == tri * tri);
    }
    for (unsigned m = 1; m <= 10; ++m) {
        for (unsigned n = 1; n <= 50; ++n) CHECK(power_sum(m, n) == naive_power_sum(m, n));
    }
}

TEST_CASE("Wilson quotients") {
    const std::map<u64, u64> table{{3, 1}, {5, 0}, {7, 5}, {11, 1}, {13, 0}, {17, 5}, {19, 2}, {23, 8}, {29, 18}, {31, 19}};
    for (const auto& [p, w] : table) {
        CHECK(wilson_quotient(Prime(p)) == w);
        CHECK(wilson_from_bernoulli(Prime(p)) == w);
    }
    CHECK(wilson_quotient(Prime(563)) == 0);
    CHECK_THROWS_AS(wilson_quotient(Prime(10007)), DomainError);
    CHECK(wilson_quotient(Prime(10007), 20000) < 10007);
}

TEST_CASE("Wilson quotient from Bernoulli numbers for p below 200") {
    for (u64 p = 3; p < 200; p += 2) {
        if (!is_prime(p)) continue;
        CHECK(wilson_from_bernoulli(Prime(p)) == wilson_quotient(Prime(p)));
    }
}

TEST_CASE("Fermat quotients") {
    CHECK(fermat_quotient(2, Prime(3)) == 1);
    CHECK(fermat_quotient(1, Prime(13)) == 0);
    CHECK_THROWS_AS(fermat_quotient(10, Prime(5)), DomainError);
    for (u64 p = 3; p < 100; p += 2) {
        if (!is_prime(p)) continue;
        u64 lerch = 0;
        for (u64 a = 1; a < p; ++a) {
            const u64 q = fermat_quotient(BigInt(static_cast<unsigned long>(a)), Prime(p));
            CHECK(q == exact_fermat_quotient(a, p));
            lerch = (lerch + q) % p;
        }
        CHECK(lerch == wilson_quotient(Prime(p)));
    }
}
