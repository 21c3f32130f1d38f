#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpcarry/bignum.hpp"
#include "fpcarry/carry_eval.hpp"

using namespace fpcarry;

namespace {

Digits lit(const std::string& s, u64 p) { return parse_radix_literal(s, Prime(p)); }

std::string show(const Digits& d) { return format_radix_literal(d); }

BigInt random_big(gmp_randclass& r, std::size_t max_digits, u64 p) {
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, max_digits);
    return r.get_z_range(bound);
}

}  // namespace

TEST_CASE("worked examples") {
    CHECK(show(add_many({lit("34", 5), lit("44", 5)})) == "133");
    CHECK(show(add_many({lit("22", 3), lit("22", 3), lit("22", 3)})) == "220");
    CHECK(show(add_two(lit("66", 7), lit("1", 7))) == "100");
    CHECK(show(mul_schoolbook(lit("43", 5), lit("2", 5))) == "141");
    CHECK(show(mul_schoolbook(lit("66", 7), lit("66", 7))) == "6501");
    CHECK(show(mul_listed(lit("66", 7), lit("66", 7))) == "6501");
    CHECK(show(mul_listed(lit("21", 3), lit("12", 3))) == "1022");
    CHECK(show(mul_schoolbook(lit("21", 3), lit("12", 3))) == "1022");
}

TEST_CASE("identities") {
    const Prime p(7);
    const Digits a = to_digits(123456789, p);
    const Digits zero(p);
    const Digits one = to_digits(1, p);
    CHECK(add_many({a}) == a);
    CHECK(add_two(a, zero) == a);
    CHECK(add_two(zero, zero).is_zero());
    CHECK(mul_schoolbook(a, zero).is_zero());
    CHECK(mul_schoolbook(zero, a).is_zero());
    CHECK(mul_listed(one, a) == a);
    CHECK(mul_schoolbook(one, a) == a);
}

TEST_CASE("lookahead window") {
    for (u64 pv : {2, 3, 5, 7, 11}) CHECK(lookahead_d(2, Prime(pv)) == 1);
    CHECK(lookahead_d(10, Prime(3)) == 2);
    CHECK(lookahead_d(1, Prime(5)) == 0);
    CHECK_THROWS_AS(lookahead_d(0, Prime(5)), DomainError);
    for (u64 pv : {2, 3, 5, 7}) {
        for (std::size_t n = 1; n <= 200; ++n) {
            const unsigned d = lookahead_d(n, Prime(pv));
            const BigInt lhs = BigInt(static_cast<unsigned long>(n + d)) * static_cast<unsigned long>(pv - 1);
            BigInt pow;
            mpz_ui_pow_ui(pow.get_mpz_t(), pv, d + 1);
            CHECK(lhs < pow);
            if (d > 0) {
                mpz_ui_pow_ui(pow.get_mpz_t(), pv, d);
                CHECK(lhs - static_cast<unsigned long>(pv - 1) >= pow);
            }
        }
    }
}

TEST_CASE("radix conversion") {
    CHECK(to_digits(0, Prime(5)).is_zero());
    const Digits d = to_digits(49, Prime(7));
    CHECK(d.digits() == std::vector<Fp>{Fp(0, Prime(7)), Fp(0, Prime(7)), Fp(1, Prime(7))});
    CHECK_THROWS_AS(to_digits(-1, Prime(7)), DomainError);
    CHECK(Digits(Prime(3), {Fp(1, Prime(3)), Fp(0, Prime(3))}).size() == 1);
    CHECK_THROWS_AS(Digits(Prime(3), {Fp(1, Prime(5))}), StructuralError);

    gmp_randclass r(gmp_randinit_default);
    r.seed(51);
    const u64 primes[] = {2, 3, 5, 7, 11, 13, 101, 65537};
    for (int s = 0; s < 10000; ++s) {
        const BigInt v = r.get_z_bits(256);
        const Prime p(primes[s % 8]);
        CHECK(from_digits(to_digits(v, p)) == v);
    }
}

TEST_CASE("radix literals") {
    CHECK(from_digits(lit("133", 5)) == 43);
    CHECK(from_digits(lit("1a", 11)) == 21);
    CHECK(from_digits(lit("1:10", 11)) == 21);
    CHECK(from_digits(lit("1:0:5", 37)) == 37 * 37 + 5);
    CHECK(show(lit("0005", 7)) == "5");
    CHECK(show(Digits(Prime(7))) == "0");
    CHECK(show(to_digits(37 * 37 + 5, Prime(37))) == "1:0:5");
    CHECK_THROWS_AS(lit("5", 5), DomainError);
    CHECK_THROWS_AS(lit("", 5), DomainError);
    CHECK_THROWS_AS(lit("1-2", 5), DomainError);
    CHECK_THROWS_AS(lit("1:40", 37), DomainError);
    CHECK(parse_decimal("00123") == 123);
    CHECK_THROWS_AS(parse_decimal("-4"), DomainError);
    CHECK_THROWS_AS(parse_decimal("12x"), DomainError);
}

TEST_CASE("domain and structure errors") {
    CHECK_THROWS_AS(mul_schoolbook(lit("1", 2), lit("1", 2)), DomainError);
    CHECK_THROWS_AS(mul_listed(lit("1", 2), lit("1", 2)), DomainError);
    CHECK_THROWS_AS(add_two(lit("1", 3), lit("1", 5)), StructuralError);
    CHECK_THROWS_AS(add_many({lit("1", 3), lit("1", 5)}), StructuralError);
    CHECK_THROWS_AS(add_many({}), DomainError);
    const PlainField f{Prime(5)};
    const std::vector<Fp> one_digit{Fp(3, Prime(5))};
    CHECK_THROWS_AS(mul_schoolbook_fixed(f, one_digit, one_digit), StructuralError);
}

TEST_CASE("fixed-width outputs keep every slot") {
    const PlainField f{Prime(7)};
    const std::vector<Fp> a{Fp(1, Prime(7)), Fp(0, Prime(7))};
    CHECK(add_two_fixed(f, a, a).size() == 3);
    CHECK(add_many_fixed(f, std::vector<std::vector<Fp>>{a, a}).size() == 4);
    CHECK(mul_schoolbook_fixed(f, a, a).size() == 4);
}

TEST_CASE("column carries match the integer digits of wide columns") {
    std::mt19937_64 rng(52);
    for (u64 pv : {3, 5, 7, 11, 13}) {
        const Prime p(pv);
        const PlainField f{p};
        for (std::size_t n : {2, 3, 5, 9, 17, 40, 130}) {
            const unsigned top = top_carry_index(n, p);
            for (int s = 0; s < 20; ++s) {
                std::vector<Fp> args;
                u64 sum = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    args.emplace_back(rng() % pv, p);
                    sum += args.back().value();
                }
                const auto carries = column_carries(f, std::span<const Fp>(args), top);
                REQUIRE(carries.size() == top);
                u64 rest = sum / pv;
                for (unsigned k = 1; k <= top; ++k) {
                    CHECK(carries[k - 1].value() == rest % pv);
                    rest /= pv;
                }
                CHECK(rest == 0);
            }
        }
        for (u64 x = 0; x < pv; ++x) {
            for (u64 y = 0; y < pv; ++y) {
                CHECK(phi1_binomial(f, Fp(x, p), Fp(y, p)).value() == (x + y) / pv);
            }
        }
    }
}

TEST_CASE("all algorithms agree with integer arithmetic") {
    gmp_randclass r(gmp_randinit_default);
    r.seed(53);
    for (u64 pv : {3, 5, 7, 11}) {
        const Prime p(pv);
        for (int s = 0; s < 150; ++s) {
            const std::size_t la = 1 + s % 32;
            const std::size_t lb = 1 + (s * 7) % 32;
            const BigInt x = random_big(r, la, pv);
            const BigInt y = random_big(r, lb, pv);
            const Digits a = to_digits(x, p);
            const Digits b = to_digits(y, p);
            CHECK(from_digits(add_many({a, b})) == x + y);
            CHECK(from_digits(add_two(a, b)) == x + y);
            CHECK(from_digits(mul_schoolbook(a, b)) == x * y);
            CHECK(from_digits(mul_listed(a, b)) == x * y);
            CHECK(add_two(a, b) == add_many({a, b}));
            CHECK(mul_listed(a, b) == mul_schoolbook(a, b));
        }
    }
}

TEST_CASE("many addends") {
    gmp_randclass r(gmp_randinit_default);
    r.seed(54);
    for (u64 pv : {2, 3, 5, 13}) {
        const Prime p(pv);
        for (std::size_t n : {1, 3, 10, 30}) {
            std::vector<Digits> xs;
            BigInt total = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const BigInt v = random_big(r, 12, pv);
                total += v;
                xs.push_back(to_digits(v, p));
            }
            BignumOptions opts;
            opts.check_invariants = true;
            CHECK(from_digits(add_many(xs, nullptr, opts)) == total);
        }
    }
}

TEST_CASE("tracked runs match plain runs and only add and multiply") {
    gmp_randclass r(gmp_randinit_default);
    r.seed(55);
    for (u64 pv : {3, 5, 7}) {
        const Prime p(pv);
        for (int s = 0; s < 10; ++s) {
            const Digits a = to_digits(random_big(r, 16, pv), p);
            const Digits b = to_digits(random_big(r, 16, pv), p);
            CostTape t1(p), t2(p), t3(p), t4(p);
            BignumOptions opts;
            opts.check_invariants = true;
            CHECK(add_many({a, b}, &t1, opts) == add_many({a, b}));
            CHECK(add_two(a, b, &t2) == add_two(a, b));
            CHECK(mul_schoolbook(a, b, &t3, opts) == mul_schoolbook(a, b));
            CHECK(mul_listed(a, b, &t4) == mul_listed(a, b));
            for (const CostTape* t : {&t1, &t2, &t3, &t4}) CHECK(t->adds + t->muls + t->const_muls > 0);
        }
    }
}

TEST_CASE("tracked cost of a small product is reproducible") {
    CostTape tape(Prime(7));
    const Digits c = mul_schoolbook(to_digits(48, Prime(7)), to_digits(48, Prime(7)), &tape);
    CHECK(from_digits(c) == 2304);
    CHECK(tape.adds == 157);
    CHECK(tape.muls == 268);
    CHECK(tape.const_muls == 132);
    CHECK(tape.max_depth == 18);
}
