#include "fpcarry/interp.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fpcarry {

namespace {

std::string tuple_string(std::span<const u64> xs) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ')';
    return os.str();
}

}  // namespace

std::size_t domain_size(Prime p, std::size_t nvars) {
    constexpr std::size_t kLimit = std::size_t{1} << 26;
    std::size_t size = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (size > kLimit / p.value()) {
            throw DomainError("truth table for p=" + std::to_string(p.value()) + ", n=" + std::to_string(nvars) +
                              " is too large");
        }
        size *= p.value();
    }
    return size;
}

TruthTable::TruthTable(Prime p, std::size_t nvars) : p_(p), nvars_(nvars), values_(domain_size(p, nvars), 0) {}

TruthTable::TruthTable(Prime p, std::size_t nvars, std::vector<u64> values)
    : p_(p), nvars_(nvars), values_(std::move(values)) {
    if (values_.size() != domain_size(p, nvars)) throw StructuralError("truth table has the wrong length");
    for (auto& v : values_) v %= p.value();
}

void TruthTable::set(std::size_t index, const Fp& v) {
    if (!(v.modulus() == p_)) throw StructuralError("truth table value modulus mismatch");
    values_.at(index) = v.value();
}

std::size_t TruthTable::index_of(std::span<const Fp> point) const {
    if (point.size() != nvars_) throw StructuralError("point arity mismatch");
    std::size_t idx = 0;
    for (const auto& x : point) idx = idx * p_.value() + x.value();
    return idx;
}

std::vector<Fp> TruthTable::point_of(std::size_t index) const {
    std::vector<Fp> pt(nvars_, Fp::zero(p_));
    for (std::size_t v = nvars_; v-- > 0;) {
        pt[v] = Fp(index % p_.value(), p_);
        index /= p_.value();
    }
    return pt;
}

TruthTable tabulate(Prime p, std::size_t nvars, const std::function<Fp(std::span<const Fp>)>& f) {
    TruthTable t(p, nvars);
    for (std::size_t k = 0; k < t.size(); ++k) {
        auto pt = t.point_of(k);
        t.set(k, f(pt));
    }
    return t;
}

TruthTable tabulate(const MPoly& f) {
    return tabulate(f.modulus(), f.nvars(), [&](std::span<const Fp> x) { return evaluate(f, x); });
}

MPoly indicator_poly(std::span<const Fp> a) {
    if (a.empty()) throw StructuralError("indicator_poly needs at least one coordinate");
    const Prime p = a.front().modulus();
    const std::size_t n = a.size();
    MPoly acc = MPoly::constant(p, n, Fp::one(p));
    for (std::size_t i = 0; i < n; ++i) {
        MPoly shifted = MPoly::variable(p, n, i) - MPoly::constant(p, n, a[i]);
        MPoly factor = MPoly::constant(p, n, Fp::one(p)) - poly_pow(shifted, static_cast<unsigned>(p.value() - 1));
        acc = acc * factor;
    }
    return reduce(acc);
}

MPoly interpolate(const TruthTable& t) {
    const Prime p = t.modulus();
    const u64 pv = p.value();
    const std::size_t n = t.nvars();

    // weight[e][a]: coefficient of x^e in 1 - (x - a)^(p-1).
    std::vector<std::vector<u64>> weight(pv, std::vector<u64>(pv, 0));
    for (u64 a = 0; a < pv; ++a) {
        const u64 neg_a = a == 0 ? 0 : pv - a;
        for (u64 e = 0; e < pv; ++e) {
            u64 binom = lucas_binom(BigInt(static_cast<unsigned long>(pv - 1)), BigInt(static_cast<unsigned long>(e)), p).value();
            u64 term = mul_mod(binom, pow_mod(neg_a, pv - 1 - e, pv), pv);
            u64 w = (e == 0 ? 1 : 0) + pv - term;
            weight[e][a] = w % pv;
        }
    }

    std::vector<u64> cur = t.values();
    std::vector<u64> next(cur.size());
    std::size_t stride = 1;
    for (std::size_t axis = n; axis-- > 0;) {
        const std::size_t block = stride * pv;
        for (std::size_t base = 0; base < cur.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (u64 e = 0; e < pv; ++e) {
                    u128 acc = 0;
                    for (u64 a = 0; a < pv; ++a) {
                        acc += static_cast<u128>(weight[e][a]) * cur[base + a * stride + off];
                        if (acc >> 120) acc %= pv;
                    }
                    next[base + e * stride + off] = static_cast<u64>(acc % pv);
                }
            }
        }
        cur.swap(next);
        stride = block;
    }

    MPoly out(p, n);
    for (std::size_t k = 0; k < cur.size(); ++k) {
        if (cur[k] == 0) continue;
        ExpVec e(n);
        std::size_t idx = k;
        for (std::size_t v = n; v-- > 0;) {
            e[v] = static_cast<std::uint32_t>(idx % pv);
            idx /= pv;
        }
        out.add_term(e, cur[k]);
    }
    return out;
}

std::vector<u64> falling_factorial_coeffs(std::uint32_t d, Prime p) {
    const u64 pv = p.value();
    std::vector<u64> c{1};
    for (std::uint32_t k = 0; k < d; ++k) {
        // Multiply by (x - k).
        std::vector<u64> next(c.size() + 1, 0);
        const u64 neg_k = (pv - k % pv) % pv;
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = add_mod(next[i + 1], c[i], pv);
            next[i] = add_mod(next[i], mul_mod(c[i], neg_k, pv), pv);
        }
        c.swap(next);
    }
    return c;
}

GammaCoeffs to_gamma_basis(const MPoly& f) {
    if (!f.is_reduced()) throw StructuralError("to_gamma_basis expects a reduced polynomial");
    const Prime p = f.modulus();
    const u64 pv = p.value();
    const std::size_t n = f.nvars();
    const TruthTable values = tabulate(f);

    std::vector<u64> fact(pv, 1);
    for (u64 k = 1; k < pv; ++k) fact[k] = mul_mod(fact[k - 1], k, pv);

    // Points are visited in index order, which refines the componentwise
    // order: every d below d' has already been solved when d' is reached.
    GammaCoeffs gamma;
    for (std::size_t k = 0; k < values.size(); ++k) {
        auto point = values.point_of(k);
        ExpVec dprime(n);
        u64 pivot = 1;
        for (std::size_t j = 0; j < n; ++j) {
            dprime[j] = static_cast<std::uint32_t>(point[j].value());
            pivot = mul_mod(pivot, fact[dprime[j]], pv);
        }
        u64 residual = values.at(k).value();
        for (const auto& [d, g] : gamma) {
            u64 gamma_at = 1;
            for (std::size_t j = 0; j < n && gamma_at != 0; ++j) {
                if (d[j] > dprime[j]) {
                    gamma_at = 0;
                    break;
                }
                // Gamma_{d_j}(d'_j) = d'_j! / (d'_j - d_j)!
                gamma_at = mul_mod(gamma_at, mul_mod(fact[dprime[j]], inv_mod(fact[dprime[j] - d[j]], pv), pv), pv);
            }
            if (gamma_at == 0) continue;
            residual = add_mod(residual, pv - mul_mod(g, gamma_at, pv), pv);
        }
        if (residual != 0) gamma.emplace(dprime, mul_mod(residual, inv_mod(pivot, pv), pv));
    }
    return gamma;
}

MPoly gamma_to_poly(const GammaCoeffs& coeffs, std::size_t nvars, Prime p) {
    const u64 pv = p.value();
    std::vector<std::vector<u64>> ff(pv);
    for (u64 d = 0; d < pv; ++d) ff[d] = falling_factorial_coeffs(static_cast<std::uint32_t>(d), p);

    MPoly out(p, nvars);
    for (const auto& [d, g] : coeffs) {
        if (d.size() != nvars) throw StructuralError("gamma composition arity mismatch");
        for (auto x : d) {
            if (x >= pv) throw StructuralError("gamma composition entry " + std::to_string(x) + " exceeds p-1");
        }
        // Expand prod_j ff[d_j](x_j) term by term.
        ExpVec e(nvars, 0);
        std::vector<std::uint32_t> pos(nvars, 0);
        while (true) {
            u64 c = g % pv;
            for (std::size_t j = 0; j < nvars && c != 0; ++j) c = mul_mod(c, ff[d[j]][pos[j]], pv);
            if (c != 0) {
                for (std::size_t j = 0; j < nvars; ++j) e[j] = pos[j];
                out.add_term(e, c);
            }
            std::size_t j = 0;
            while (j < nvars && pos[j] == d[j]) pos[j++] = 0;
            if (j == nvars) break;
            ++pos[j];
        }
    }
    return out;
}

TruthTable read_truth_table(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            return true;
        }
        return false;
    };

    if (!next_content_line(line)) throw DomainError("truth table: missing header line `p n`");
    u64 pv = 0;
    std::size_t n = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> pv >> n) || (hs >> extra)) throw DomainError("truth table: malformed header `" + line + "`");
    }
    const Prime p(pv);
    TruthTable t(p, n);
    std::vector<bool> seen(t.size(), false);

    std::size_t count = 0;
    while (next_content_line(line)) {
        std::istringstream ls(line);
        std::vector<u64> xs(n);
        for (auto& x : xs) {
            if (!(ls >> x)) throw DomainError("truth table line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " inputs");
            if (x >= pv) throw DomainError("truth table line " + std::to_string(lineno) + ": input " + std::to_string(x) + " outside [0, p-1]");
        }
        std::string arrow, extra;
        u64 v = 0;
        if (!(ls >> arrow) || arrow != "->" || !(ls >> v) || (ls >> extra)) {
            throw DomainError("truth table line " + std::to_string(lineno) + ": expected `x1 ... xn -> v`");
        }
        if (v >= pv) throw DomainError("truth table line " + std::to_string(lineno) + ": value outside [0, p-1]");
        std::size_t idx = 0;
        for (auto x : xs) idx = idx * pv + x;
        if (seen[idx]) throw DomainError("truth table: duplicate tuple " + tuple_string(xs));
        seen[idx] = true;
        t.set(idx, Fp(v, p));
        ++count;
    }
    if (count != t.size()) {
        for (std::size_t k = 0; k < seen.size(); ++k) {
            if (seen[k]) continue;
            std::vector<u64> xs;
            for (const auto& x : t.point_of(k)) xs.push_back(x.value());
            throw DomainError("truth table: missing tuple " + tuple_string(xs));
        }
    }
    return t;
}

void write_truth_table(std::ostream& out, const TruthTable& t) {
    out << t.modulus().value() << ' ' << t.nvars() << '\n';
    for (std::size_t k = 0; k < t.size(); ++k) {
        auto pt = t.point_of(k);
        for (const auto& x : pt) out << x.value() << ' ';
        out << "-> " << t.at(k).value() << '\n';
    }
}

}  // namespace fpcarry
