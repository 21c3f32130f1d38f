#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fpcarry/fp.hpp"
#include "fpcarry/mpoly.hpp"

namespace fpcarry {

/// Values of a function (F_p)^n -> F_p. Entry k holds f at the tuple whose
/// base-p encoding is k, x1 being the most significant digit.
class TruthTable {
public:
    TruthTable(Prime p, std::size_t nvars);
    TruthTable(Prime p, std::size_t nvars, std::vector<u64> values);

    Prime modulus() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return values_.size(); }

    Fp at(std::size_t index) const { return Fp(values_[index], p_); }
    Fp at(std::span<const Fp> point) const { return at(index_of(point)); }
    void set(std::size_t index, const Fp& v);

    std::size_t index_of(std::span<const Fp> point) const;
    std::vector<Fp> point_of(std::size_t index) const;

    const std::vector<u64>& values() const { return values_; }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    Prime p_;
    std::size_t nvars_;
    std::vector<u64> values_;
};

/// Number of points of (F_p)^n; throws DomainError past 2^26 entries.
std::size_t domain_size(Prime p, std::size_t nvars);

TruthTable tabulate(Prime p, std::size_t nvars, const std::function<Fp(std::span<const Fp>)>& f);
TruthTable tabulate(const MPoly& f);

/// prod_i (1 - (x_i - a_i)^(p-1)), reduced: 1 at a and 0 elsewhere.
MPoly indicator_poly(std::span<const Fp> a);

/// Minimal polynomial expression of a truth table, built as the sum of
/// indicator polynomials weighted by the table values. The sum is assembled
/// one axis at a time, which keeps the cost at n * p^(n+1).
MPoly interpolate(const TruthTable& t);

/// Coefficients in the falling-factorial basis
/// Gamma_d = prod_j x_j (x_j - 1) ... (x_j - d_j + 1); keys are exponent
/// tuples d with entries in [0, p-1], zero coefficients omitted.
using GammaCoeffs = std::map<ExpVec, u64>;

GammaCoeffs to_gamma_basis(const MPoly& f);
MPoly gamma_to_poly(const GammaCoeffs& coeffs, std::size_t nvars, Prime p);

/// Coefficients of x(x-1)...(x-d+1) in F_p, index = power of x
/// (signed Stirling numbers of the first kind reduced mod p).
std::vector<u64> falling_factorial_coeffs(std::uint32_t d, Prime p);

// Truth-table files: header `p n`, then p^n lines `x1 ... xn -> v` in any
// order, each tuple exactly once. Parse errors raise DomainError naming the
// offending line or tuple.
TruthTable read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const TruthTable& t);

}  // namespace fpcarry
