#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fpcarry/fp.hpp"

namespace fpcarry {

/// Exponent vector, one entry per variable x1..xn.
using ExpVec = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExpVec& e);

/// Graded lexicographic, descending: higher total degree first, then larger
/// exponent of x1, then x2, and so on. This is the canonical term order.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over F_p. Zero coefficients are never
/// stored. Arithmetic does not reduce exponents; call reduce() for the
/// minimal form.
class MPoly {
public:
    using TermMap = std::map<ExpVec, u64, GradedLexDesc>;

    MPoly(Prime p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static MPoly constant(Prime p, std::size_t nvars, const Fp& c);
    static MPoly variable(Prime p, std::size_t nvars, std::size_t index);
    static MPoly monomial(Prime p, const ExpVec& exps, const Fp& c);

    Prime modulus() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Fp coefficient(const ExpVec& e) const;
    /// Adds c * x^e to the polynomial.
    void add_term(const ExpVec& e, const Fp& c);
    void add_term(const ExpVec& e, u64 c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// True when every exponent is at most p-1.
    bool is_reduced() const;

private:
    void check_compatible(const MPoly& o) const;
    void check_arity(const ExpVec& e) const;

    Prime p_;
    std::size_t nvars_;
    TermMap terms_;
};

MPoly poly_add(const MPoly& f, const MPoly& g);
MPoly poly_mul(const MPoly& f, const MPoly& g);
MPoly poly_scale(const MPoly& f, const Fp& c);
MPoly poly_pow(const MPoly& f, unsigned e);

/// Replaces every x^e (e > 0) by x^(1 + (e-1) mod (p-1)): the fixpoint of
/// x^p -> x.
MPoly reduce(const MPoly& f);

/// Exact evaluation in F_p.
Fp evaluate(const MPoly& f, std::span<const Fp> point);

struct PolyMetrics {
    std::size_t monomial_count = 0;
    std::uint64_t total_degree = 0;
    std::uint32_t max_var_degree = 0;

    friend bool operator==(const PolyMetrics&, const PolyMetrics&) = default;
};

PolyMetrics metrics(const MPoly& f);

/// Sum of all products of k distinct variables among x1..xn; zero when k > n.
MPoly elementary_symmetric(std::size_t k, std::size_t n, Prime p);

/// Invariance under every adjacent transposition of variables.
bool is_symmetric(const MPoly& f);

/// Polynomial with variables i and j swapped.
MPoly swap_variables(const MPoly& f, std::size_t i, std::size_t j);

/// Embeds f into a ring with more variables; the new ones are appended.
MPoly extend_variables(const MPoly& f, std::size_t nvars);

/// Canonical text form: `c*x1^a*x2^b + ...`, unit coefficients and exponents
/// omitted, `0` for the zero polynomial.
std::string to_string(const MPoly& f);

}  // namespace fpcarry
