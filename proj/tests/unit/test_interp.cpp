#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fpcarry/add_carry.hpp"
#include "fpcarry/interp.hpp"
#include "fpcarry/mul_carry.hpp"

using namespace fpcarry;

namespace {

MPoly random_reduced(std::mt19937_64& rng, Prime p, std::size_t n, int terms) {
    MPoly f(p, n);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(n);
        for (auto& v : e) v = static_cast<std::uint32_t>(rng() % p.value());
        f.add_term(e, rng() % p.value());
    }
    return f;
}

}  // namespace

TEST_CASE("indicator polynomials") {
    const Prime p2(2);
    const Fp a2[] = {Fp(1, p2)};
    CHECK(to_string(indicator_poly(a2)) == "x1");
    const Prime p3(3);
    const Fp a3[] = {Fp(0, p3)};
    CHECK(to_string(indicator_poly(a3)) == "2*x1^2 + 1");
    const Prime p5(5);
    const Fp a5[] = {Fp(2, p5), Fp(4, p5)};
    const MPoly ind = indicator_poly(a5);
    for (u64 u = 0; u < 5; ++u) {
        for (u64 v = 0; v < 5; ++v) {
            const Fp pt[] = {Fp(u, p5), Fp(v, p5)};
            CHECK(evaluate(ind, pt).value() == (u == 2 && v == 4 ? 1u : 0u));
        }
    }
}

TEST_CASE("table indexing") {
    const Prime p(3);
    TruthTable t(p, 2);
    CHECK(t.size() == 9);
    const Fp pt[] = {Fp(1, p), Fp(2, p)};
    CHECK(t.index_of(pt) == 5);
    CHECK(t.point_of(5) == std::vector<Fp>{Fp(1, p), Fp(2, p)});
    CHECK_THROWS_AS(TruthTable(p, 2, std::vector<u64>(8, 0)), StructuralError);
    CHECK_THROWS_AS(domain_size(Prime(13), 8), DomainError);
}

TEST_CASE("interpolation examples") {
    const Prime p2(2);
    const TruthTable and_table(p2, 2, {0, 0, 0, 1});
    CHECK(to_string(interpolate(and_table)) == "x1*x2");
    const TruthTable xor_table(p2, 2, {0, 1, 1, 0});
    CHECK(to_string(interpolate(xor_table)) == "x1 + x2");
    const Prime p3(3);
    const TruthTable carry = tabulate(p3, 2, [](std::span<const Fp> x) { return carry_oracle_mul(x); });
    CHECK(to_string(interpolate(carry)) == "x1^2*x2^2 + 2*x1^2*x2 + 2*x1*x2^2 + x1*x2");
    CHECK(interpolate(TruthTable(p3, 3)).is_zero());
    const TruthTable ones(p3, 1, {1, 1, 1});
    CHECK(to_string(interpolate(ones)) == "1");
}

TEST_CASE("interpolating a tabulated polynomial gives its reduction") {
    std::mt19937_64 rng(21);
    for (u64 pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (int s = 0; s < 20; ++s) {
            const std::size_t n = 1 + rng() % 3;
            MPoly f(p, n);
            for (int t = 0; t < 5; ++t) {
                ExpVec e(n);
                for (auto& v : e) v = static_cast<std::uint32_t>(rng() % (2 * pv + 1));
                f.add_term(e, rng() % pv);
            }
            CHECK(interpolate(tabulate(f)) == reduce(f));
        }
    }
}

TEST_CASE("tabulating an interpolation gives the table back") {
    std::mt19937_64 rng(22);
    for (u64 pv : {3, 5}) {
        const Prime p(pv);
        for (int s = 0; s < 10; ++s) {
            const std::size_t n = 1 + rng() % 3;
            std::vector<u64> values(domain_size(p, n));
            for (auto& v : values) v = rng() % pv;
            const TruthTable t(p, n, values);
            CHECK(tabulate(interpolate(t)) == t);
        }
    }
}

TEST_CASE("falling factorial basis") {
    const Prime p3(3);
    // x(x-1) = x^2 + 2x over F_3
    CHECK(falling_factorial_coeffs(2, p3) == std::vector<u64>{0, 2, 1});
    CHECK(falling_factorial_coeffs(0, p3) == std::vector<u64>{1});

    MPoly sq(p3, 1);
    sq.add_term({2}, 1);
    const GammaCoeffs g = to_gamma_basis(sq);
    CHECK(g == GammaCoeffs{{{2}, 1}, {{1}, 1}});

    const GammaCoeffs carry = to_gamma_basis(phi_poly(1, 2, p3));
    CHECK(carry == GammaCoeffs{{{1, 2}, 2}, {{2, 1}, 2}});
}

TEST_CASE("Gamma-basis round trip") {
    std::mt19937_64 rng(23);
    for (u64 pv : {2, 3, 5, 7}) {
        const Prime p(pv);
        for (int s = 0; s < 20; ++s) {
            const std::size_t n = 1 + rng() % 3;
            const MPoly f = random_reduced(rng, p, n, 6);
            CHECK(gamma_to_poly(to_gamma_basis(f), n, p) == f);
        }
    }
}

TEST_CASE("truth-table files") {
    const Prime p(3);
    const TruthTable t = tabulate(p, 2, [](std::span<const Fp> x) { return x[0] * x[1] + x[1]; });
    std::stringstream out;
    write_truth_table(out, t);
    CHECK(out.str().rfind("3 2\n0 0 -> 0\n0 1 -> 1\n", 0) == 0);
    std::istringstream in(out.str());
    CHECK(read_truth_table(in) == t);

    // any row order is accepted
    std::istringstream shuffled("2 1\n1 -> 1\n0 -> 0\n");
    CHECK(to_string(interpolate(read_truth_table(shuffled))) == "x1");

    auto fails = [](const std::string& text) {
        std::istringstream s(text);
        CHECK_THROWS_AS(read_truth_table(s), DomainError);
    };
    fails("");
    fails("4 1\n0 -> 0\n");
    fails("2 1\n0 -> 0\n");
    fails("2 1\n0 -> 0\n0 -> 1\n");
    fails("2 1\n0 -> 0\n2 -> 1\n");
    fails("2 1\n0 -> 0\n1 -> 5\n");
    fails("2 1\n0 0\n1 -> 1\n");
    fails("2 2\n0 -> 0\n1 -> 1\n");
}
