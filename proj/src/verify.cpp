#include "fpcarry/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fpcarry/add_carry.hpp"
#include "fpcarry/bernoulli.hpp"
#include "fpcarry/bignum.hpp"
#include "fpcarry/interp.hpp"
#include "fpcarry/mul_carry.hpp"

namespace fpcarry {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

u64 limit_or(const VerifyOptions& opts, u64 fallback) { return opts.p_max == 0 ? fallback : opts.p_max; }

std::string point_text(std::span<const Fp> x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i].value();
    os << ')';
    return os.str();
}

// Calls f on every point of (F_p)^n in index order.
template <class F>
void for_each_point(Prime p, std::size_t n, F&& f) {
    std::vector<Fp> x(n, Fp::zero(p));
    const std::size_t total = domain_size(p, n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t j = n; j-- > 0;) {
            x[j] = Fp(rest % p.value(), p);
            rest /= p.value();
        }
        f(std::span<const Fp>(x));
    }
}

VerifyReport add_carry_suite(const VerifyOptions& opts) {
    VerifyReport r{"add-carry"};
    for (u64 pv : primes_between(2, limit_or(opts, 7))) {
        const Prime p(pv);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (unsigned i = 0; carry_index_live(p, n, i) || i <= 1; ++i) {
                const MPoly f = phi_poly(i, n, p);
                const std::string tag = "phi_" + std::to_string(i) + " p=" + std::to_string(pv) + " n=" + std::to_string(n);
                r.check(f.is_reduced(), tag + " is reduced");
                if (carry_index_live(p, n, i)) r.check(metrics(f).total_degree <= prime_power(p, i), tag + " degree");
                for_each_point(p, n, [&](std::span<const Fp> x) {
                    r.check(evaluate(f, x) == carry_oracle_add(x, i), tag + " at " + point_text(x));
                });
                if (i == 0 || !carry_index_live(p, n, i) || pv > 5) continue;
                // Falling-factorial support and coefficients.
                const GammaCoeffs gamma = to_gamma_basis(f);
                r.check(BigInt(static_cast<unsigned long>(gamma.size())) ==
                            restricted_composition_count(prime_power(p, i), n, p),
                        tag + " support size");
                for (const auto& [d, c] : gamma) {
                    Rat expected(1);
                    for (auto dj : d) {
                        BigInt fact;
                        mpz_fac_ui(fact.get_mpz_t(), dj);
                        expected /= Rat(fact);
                    }
                    r.check(c == rational_mod(expected, pv), tag + " support coefficient");
                }
            }
        }
        r.check(phi1_two_poly(p) == phi_poly(1, 2, p), "two-summand form p=" + std::to_string(pv));
        const MPoly prime_form = phi_prime_poly(p);
        for_each_point(p, 2, [&](std::span<const Fp> x) {
            for (u64 g = 0; g <= 1; ++g) {
                const std::vector<Fp> args{x[0], x[1], Fp(g, p)};
                r.check(evaluate(prime_form, args) == carry_oracle_add(args, 1),
                        "carry-in form p=" + std::to_string(pv) + " at " + point_text(args));
            }
        });
    }
    return r;
}

VerifyReport mul_carry_suite(const VerifyOptions& opts) {
    VerifyReport r{"mul-carry"};
    const u64 top = limit_or(opts, 13);
    std::mt19937_64 rng(opts.seed);
    for (u64 pv : primes_between(3, top)) {
        const Prime p(pv);
        for (std::size_t n = 2; n <= 6; ++n) {
            const MPoly f = psi1_poly(n, p);
            const std::string tag = "psi_1 p=" + std::to_string(pv) + " n=" + std::to_string(n);
            if (n <= 4) {
                r.check(monomial_count_psi1(n, p) == predicted_monomial_count_psi1(n, p), tag + " monomial count");
            }
            if (n == 2 || (n == 3 && pv <= 7)) {
                for_each_point(p, n, [&](std::span<const Fp> x) {
                    r.check(evaluate(f, x) == carry_oracle_mul(x), tag + " at " + point_text(x));
                });
            } else if (pv <= 7) {
                std::vector<Fp> x(n, Fp::zero(p));
                for (int s = 0; s < 10000; ++s) {
                    for (auto& v : x) v = Fp(rng() % pv, p);
                    r.check(evaluate(f, x) == carry_oracle_mul(x), tag + " at " + point_text(x));
                }
            }
            if (n <= 3) r.check(is_symmetric(f), tag + " symmetric");
        }
    }
    for (u64 pv : primes_between(3, std::max<u64>(top, 199))) {
        const Prime p(pv);
        const PsiAux& aux = psi_aux(p);
        r.check(aux.psi_at_one.value() == wilson_quotient(p), "Psi(1) = w_p for p=" + std::to_string(pv));
    }
    return r;
}

std::vector<Rat> shift_poly(const std::vector<Rat>& coeffs, const Rat& c) {
    // coefficients of f(x + c)
    std::vector<Rat> out(coeffs.size());
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        Rat power(1);
        for (std::size_t k = 0; k <= s; ++k) {
            // binom(s, k) x^(s-k) c^k
            BigInt b;
            mpz_bin_uiui(b.get_mpz_t(), s, k);
            out[s - k] += coeffs[s] * Rat(b) * power;
            power *= c;
        }
    }
    return out;
}

VerifyReport bernoulli_suite(const VerifyOptions& opts) {
    VerifyReport r{"bernoulli"};
    r.check(bernoulli(1) == Rat(-1, 2), "B_1 = -1/2");
    for (std::size_t l = 3; l <= opts.l_max; l += 2) r.check(bernoulli(l).is_zero(), "B_" + std::to_string(l) + " = 0");
    for (std::size_t l = 2; l <= opts.l_max; l += 2) {
        r.check(bernoulli(l).den() == staudt_clausen_denominator(l), "denominator of B_" + std::to_string(l));
    }
    for (std::size_t m = 1; m <= 10; ++m) {
        BigInt naive = 0;
        for (unsigned long n = 1; n <= 50; ++n) {
            BigInt term;
            mpz_ui_pow_ui(term.get_mpz_t(), n, m);
            naive += term;
            r.check(power_sum(m, BigInt(n)) == naive, "power sum m=" + std::to_string(m) + " N=" + std::to_string(n));
        }
    }
    for (long m = 1; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto b = bernoulli_poly(n);
            std::vector<Rat> lhs(b.size());
            Rat mp(1);
            for (std::size_t s = 0; s < b.size(); ++s) {
                lhs[s] = b[s] * mp;
                mp *= Rat(m);
            }
            std::vector<Rat> rhs(b.size());
            for (long k = 0; k < m; ++k) {
                const auto shifted = shift_poly(b, Rat(BigInt(k), BigInt(m)));
                for (std::size_t s = 0; s < b.size(); ++s) rhs[s] += shifted[s];
            }
            // m^(n-1), with n = 0 giving 1/m
            const Rat scale = n == 0 ? Rat(BigInt(1), BigInt(m)) : [&] {
                Rat v(1);
                for (std::size_t e = 1; e < n; ++e) v *= Rat(m);
                return v;
            }();
            for (auto& c : rhs) c *= scale;
            r.check(lhs == rhs, "multiplication theorem m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
    for (u64 pv : primes_between(2, 199)) {
        const Prime p(pv);
        r.check(wilson_from_bernoulli(p) == wilson_quotient(p), "w_p via Bernoulli p=" + std::to_string(pv));
    }
    for (u64 pv : primes_between(3, 97)) {
        const Prime p(pv);
        u64 sum = 0;
        for (u64 a = 1; a < pv; ++a) sum = (sum + fermat_quotient(BigInt(static_cast<unsigned long>(a)), p)) % pv;
        r.check(sum == wilson_quotient(p), "sum of Fermat quotients p=" + std::to_string(pv));
    }
    return r;
}

VerifyReport cocycle_suite(const VerifyOptions& opts) {
    VerifyReport r{"cocycle"};
    for (u64 pv : primes_between(3, limit_or(opts, 13))) {
        const Prime p(pv);
        const MPoly psi = psi1_poly(2, p);
        const MPoly phi = phi_poly(1, 2, p);
        auto table_of = [&](const MPoly& f) {
            std::vector<Fp> t;
            for_each_point(p, 2, [&](std::span<const Fp> x) { t.push_back(evaluate(f, x)); });
            return t;
        };
        const auto psi_t = table_of(psi);
        const auto phi_t = table_of(phi);
        auto at = [&](const std::vector<Fp>& t, const Fp& x, const Fp& y) { return t[x.value() * pv + y.value()]; };
        const std::string tag = " p=" + std::to_string(pv);
        for (u64 a = 0; a < pv; ++a) {
            for (u64 b = 0; b < pv; ++b) {
                const Fp x(a, p), y(b, p);
                for (u64 c = 0; c < pv; ++c) {
                    const Fp z(c, p);
                    r.check(at(psi_t, x, y) * z + at(psi_t, x * y, z) == x * at(psi_t, y, z) + at(psi_t, x, y * z),
                            "cocycle" + tag);
                }
                // Over the integers (x+1) y = xy + y; when x = p-1 the lift of
                // x+1 wraps to 0, which removes y from the left side.
                const Fp wrap = a + 1 == pv ? y : Fp::zero(p);
                r.check(at(psi_t, x + Fp::one(p), y) + wrap == at(psi_t, x, y) + at(phi_t, x * y, y),
                        "mixed relation" + tag);
            }
        }
    }
    return r;
}

VerifyReport appendix_suite(const VerifyOptions& opts) {
    VerifyReport r{"appendix"};
    for (u64 pv : primes_between(3, limit_or(opts, 31))) {
        const Prime p(pv);
        const u64 m = square_modulus(p);
        const PsiAux& aux = psi_aux(p);
        const std::string tag = " p=" + std::to_string(pv);
        for (u64 a = 1; a < pv; ++a) {
            const Fp x(a, p);
            const u64 lx = teichmuller_lift(x);
            r.check(lx % pv == a, "lift reduces to x" + tag);
            r.check(pow_mod(lx, pv - 1, m) == 1, "lift has order dividing p-1" + tag);
            for (u64 b = 1; b < pv; ++b) {
                const Fp y(b, p);
                r.check(mul_mod(lx, teichmuller_lift(y), m) == teichmuller_lift(x * y), "lift is multiplicative" + tag);
            }
            r.check(section_alpha(x) == aux.psi_bar(x), "alpha = Psi(1) - Psi" + tag);
            const Fp q(fermat_quotient(BigInt(static_cast<unsigned long>(a)), p), p);
            r.check(aux.evaluate(x) - aux.psi_at_one == q, "Psi(x) - Psi(1) = q_p(x)" + tag);
            if (a + 1 < pv) {
                const Fp next(a + 1, p);
                const u64 diff = (teichmuller_lift(x) + 1 + m - teichmuller_lift(next)) % m;
                const bool divisible = diff % pv == 0;
                r.check(divisible, "lift difference divisible by p" + tag);
                if (divisible) {
                    r.check(next * aux.psi_bar(next) - x * aux.psi_bar(x) == Fp(diff / pv, p), "difference equation" + tag);
                }
            }
        }
    }
    return r;
}

VerifyReport bignum_suite(const VerifyOptions& opts) {
    VerifyReport r{"bignum"};
    std::mt19937_64 rng(opts.seed);
    for (u64 pv : primes_between(3, limit_or(opts, 13))) {
        const Prime p(pv);
        auto random_digits = [&] {
            const std::size_t len = 1 + rng() % 64;
            std::vector<Fp> d;
            for (std::size_t i = 0; i < len; ++i) d.emplace_back(rng() % pv, p);
            return Digits(p, std::move(d));
        };
        const std::string tag = " p=" + std::to_string(pv);
        for (std::size_t s = 0; s < opts.bignum_pairs; ++s) {
            const Digits a = random_digits();
            const Digits b = random_digits();
            const BigInt sum = from_digits(a) + from_digits(b);
            const BigInt prod = from_digits(a) * from_digits(b);
            CostTape tape(p);
            r.check(from_digits(add_many({a, b}, &tape)) == sum, "column addition" + tag);
            r.check(from_digits(add_two(a, b, &tape)) == sum, "ripple addition" + tag);
            r.check(from_digits(mul_schoolbook(a, b, &tape)) == prod, "schoolbook multiplication" + tag);
            r.check(from_digits(mul_listed(a, b, &tape)) == prod, "listed multiplication" + tag);
            if (s % 10 == 0) {
                const Digits c = random_digits();
                r.check(from_digits(add_many({a, b, c}, &tape)) == sum + from_digits(c), "three-way addition" + tag);
            }
        }
    }
    return r;
}

}  // namespace

void VerifyReport::check(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ++failed;
    if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

void VerifyReport::merge(const VerifyReport& other) {
    checks += other.checks;
    failed += other.failed;
    for (const auto& f : other.failures) {
        if (failures.size() < kMaxListedFailures) failures.push_back(other.suite + ": " + f);
    }
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"add-carry", "mul-carry", "bernoulli", "cocycle",
                                                "appendix",  "bignum",    "all"};
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "add-carry") return add_carry_suite(opts);
    if (name == "mul-carry") return mul_carry_suite(opts);
    if (name == "bernoulli") return bernoulli_suite(opts);
    if (name == "cocycle") return cocycle_suite(opts);
    if (name == "appendix") return appendix_suite(opts);
    if (name == "bignum") return bignum_suite(opts);
    if (name == "all") {
        VerifyReport all{"all"};
        for (const auto& s : suite_names()) {
            if (s != "all") all.merge(run_suite(s, opts));
        }
        return all;
    }
    throw DomainError("unknown suite '" + name + "'");
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q) {
        if (is_prime(q)) out.push_back(q);
    }
    return out;
}

}  // namespace fpcarry
