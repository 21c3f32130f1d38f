#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpcarry/add_carry.hpp"
#include "fpcarry/interp.hpp"

using namespace fpcarry;

namespace {

// Digit i of the sum, read off by repeated division on machine words.
u64 digit_of_sum(const std::vector<u64>& xs, u64 p, unsigned i) {
    u64 s = 0;
    for (u64 x : xs) s += x;
    for (unsigned k = 0; k < i; ++k) s /= p;
    return s % p;
}

std::vector<Fp> point(Prime p, std::initializer_list<u64> vs) {
    std::vector<Fp> out;
    for (u64 v : vs) out.emplace_back(v, p);
    return out;
}

// Coefficient of X^target in (1 + ... + X^(p-1))^n by plain convolution.
u64 convolution_count(u64 target, std::size_t n, u64 p) {
    std::vector<u64> poly{1};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<u64> next(poly.size() + p - 1, 0);
        for (std::size_t a = 0; a < poly.size(); ++a) {
            for (u64 d = 0; d < p; ++d) next[a + d] += poly[a];
        }
        poly.swap(next);
    }
    return target < poly.size() ? poly[target] : 0;
}

}  // namespace

TEST_CASE("integer oracle examples") {
    CHECK(carry_oracle_add(point(Prime(5), {3, 4}), 1).value() == 1);
    CHECK(carry_oracle_add(point(Prime(2), {1, 1, 1}), 1).value() == 1);
    CHECK(carry_oracle_add(point(Prime(2), {1, 1, 1}), 0).value() == 1);
    CHECK(carry_oracle_add(point(Prime(3), {2, 2}), 2).value() == 0);
    CHECK(carry_oracle_add(point(Prime(7), {6, 6, 6}), 1).value() == 2);
}

TEST_CASE("restricted compositions") {
    const Prime p3(3);
    CHECK(enumerate_compositions(3, 2, p3) == std::vector<Composition>{{1, 2}, {2, 1}});
    CHECK(enumerate_compositions(0, 3, p3) == std::vector<Composition>{{0, 0, 0}});
    CHECK(enumerate_compositions(5, 2, p3).empty());
    CHECK(restricted_composition_count(3, 2, p3) == 2);
    for (u64 pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (u64 t = 0; t <= n * (pv - 1) + 1; ++t) {
                const auto comps = enumerate_compositions(t, n, p);
                CHECK(comps.size() == convolution_count(t, n, pv));
                CHECK(restricted_composition_count(t, n, p) == convolution_count(t, n, pv));
                CHECK(std::is_sorted(comps.begin(), comps.end()));
            }
        }
    }
}

TEST_CASE("carry index bounds") {
    CHECK(prime_power(Prime(3), 4) == 81);
    CHECK_THROWS_AS(prime_power(Prime(3), 41), DomainError);
    CHECK(carry_index_live(Prime(3), 2, 1));
    CHECK_FALSE(carry_index_live(Prime(3), 2, 2));
    CHECK(carry_index_live(Prime(2), 3, 1));
    CHECK_FALSE(carry_index_live(Prime(2), 3, 2));
}

TEST_CASE("closed forms") {
    const Prime p3(3);
    CHECK(to_string(phi_poly(1, 2, p3)) == "2*x1^2*x2 + 2*x1*x2^2 + 2*x1*x2");
    CHECK(to_string(phi_poly(0, 3, p3)) == "x1 + x2 + x3");
    CHECK(phi_poly(2, 2, p3).is_zero());
    CHECK(to_string(phi_poly(1, 2, Prime(2))) == "x1*x2");
    for (unsigned i = 0; i <= 2; ++i) {
        for (std::size_t n = 1; n <= 6; ++n) {
            CHECK(phi_poly(i, n, Prime(2)) == elementary_symmetric(std::size_t{1} << i, n, Prime(2)));
        }
    }
}

TEST_CASE("closed forms agree with the integer digits everywhere") {
    for (u64 pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (unsigned i = 0; carry_index_live(p, n, i) || i == 0; ++i) {
                const MPoly f = phi_poly(i, n, p);
                CHECK(f.is_reduced());
                CHECK(is_symmetric(f));
                CHECK(metrics(f).total_degree <= prime_power(p, i));
                const TruthTable t = tabulate(f);
                for (std::size_t k = 0; k < t.size(); ++k) {
                    std::vector<u64> xs;
                    for (const Fp& v : t.point_of(k)) xs.push_back(v.value());
                    CHECK(t.at(k).value() == digit_of_sum(xs, pv, i));
                }
                // the closed form is the interpolant of the oracle table
                const TruthTable oracle = tabulate(p, n, [i](std::span<const Fp> x) { return carry_oracle_add(x, i); });
                CHECK(interpolate(oracle) == f);
            }
        }
    }
}

TEST_CASE("Gamma-basis support of the addition carries") {
    for (u64 pv : {3, 5}) {
        const Prime p(pv);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (unsigned i = 1; carry_index_live(p, n, i); ++i) {
                const GammaCoeffs g = to_gamma_basis(phi_poly(i, n, p));
                const u64 target = prime_power(p, i);
                CHECK(g.size() == convolution_count(target, n, pv));
                for (const auto& [d, coeff] : g) {
                    u64 sum = 0;
                    Fp expected = Fp::one(p);
                    for (auto dj : d) {
                        sum += dj;
                        for (u64 f = 2; f <= dj; ++f) expected *= Fp(f, p);
                    }
                    CHECK(sum == target);
                    CHECK(coeff == expected.inverse().value());
                }
            }
        }
    }
}

TEST_CASE("two-summand carry") {
    for (u64 pv : {2, 3, 5, 7, 11}) {
        const Prime p(pv);
        CHECK(phi1_two_poly(p) == phi_poly(1, 2, p));
        CHECK(evaluate(phi1_two_poly(p), point(p, {pv - 1, 1})).value() == 1);
    }
}

TEST_CASE("carry with a carry-in") {
    const Prime p5(5);
    CHECK(evaluate(phi_prime_poly(p5), point(p5, {2, 2, 1})).value() == 1);
    CHECK(evaluate(phi_prime_poly(p5), point(p5, {2, 2, 0})).value() == 0);
    for (u64 pv : {3, 5, 7, 11}) {
        const Prime p(pv);
        const MPoly f = phi_prime_poly(p);
        CHECK(f.nvars() == 3);
        CHECK(f.is_reduced());
        for (u64 a = 0; a < pv; ++a) {
            for (u64 b = 0; b < pv; ++b) {
                for (u64 g = 0; g <= 1; ++g) {
                    CHECK(evaluate(f, point(p, {a, b, g})).value() == (a + b + g) / pv);
                }
            }
        }
    }
}
