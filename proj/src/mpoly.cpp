#include "fpcarry/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fpcarry {

std::uint64_t total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(Prime p, std::size_t nvars, const Fp& c) {
    MPoly f(p, nvars);
    f.add_term(ExpVec(nvars, 0), c);
    return f;
}

MPoly MPoly::variable(Prime p, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw StructuralError("variable index out of range");
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(p, e, Fp::one(p));
}

MPoly MPoly::monomial(Prime p, const ExpVec& exps, const Fp& c) {
    MPoly f(p, exps.size());
    f.add_term(exps, c);
    return f;
}

Fp MPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return Fp(it == terms_.end() ? 0 : it->second, p_);
}

void MPoly::check_arity(const ExpVec& e) const {
    if (e.size() != nvars_) {
        throw StructuralError("exponent vector of length " + std::to_string(e.size()) +
                              " in a polynomial with " + std::to_string(nvars_) + " variables");
    }
}

void MPoly::add_term(const ExpVec& e, const Fp& c) {
    if (!(c.modulus() == p_)) throw StructuralError("coefficient modulus mismatch");
    add_term(e, c.value());
}

void MPoly::add_term(const ExpVec& e, u64 c) {
    check_arity(e);
    c %= p_.value();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = add_mod(it->second, c, p_.value());
    if (it->second == 0) terms_.erase(it);
}

void MPoly::check_compatible(const MPoly& o) const {
    if (!(p_ == o.p_)) throw StructuralError("polynomial modulus mismatch");
    if (nvars_ != o.nvars_) throw StructuralError("polynomial variable count mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, p_.value() - c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.p_, a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, mul_mod(ca, cb, a.p_.value()));
        }
    }
    return out;
}

bool MPoly::is_reduced() const {
    for (const auto& [e, c] : terms_) {
        for (auto x : e) {
            if (x > p_.value() - 1) return false;
        }
    }
    return true;
}

MPoly poly_add(const MPoly& f, const MPoly& g) { return f + g; }
MPoly poly_mul(const MPoly& f, const MPoly& g) { return f * g; }

MPoly poly_scale(const MPoly& f, const Fp& c) {
    if (!(c.modulus() == f.modulus())) throw StructuralError("scalar modulus mismatch");
    MPoly out(f.modulus(), f.nvars());
    for (const auto& [e, v] : f.terms()) out.add_term(e, mul_mod(v, c.value(), f.modulus().value()));
    return out;
}

MPoly poly_pow(const MPoly& f, unsigned e) {
    MPoly acc = MPoly::constant(f.modulus(), f.nvars(), Fp::one(f.modulus()));
    for (unsigned k = 0; k < e; ++k) acc = acc * f;
    return acc;
}

MPoly reduce(const MPoly& f) {
    const u64 pm1 = f.modulus().value() - 1;
    MPoly out(f.modulus(), f.nvars());
    ExpVec r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) {
            r[v] = e[v] == 0 ? 0 : static_cast<std::uint32_t>(1 + (e[v] - 1) % pm1);
        }
        out.add_term(r, c);
    }
    return out;
}

Fp evaluate(const MPoly& f, std::span<const Fp> point) {
    if (point.size() != f.nvars()) {
        throw StructuralError("evaluation point has " + std::to_string(point.size()) +
                              " coordinates, polynomial has " + std::to_string(f.nvars()) +
                              " variables");
    }
    const Prime p = f.modulus();
    for (const auto& x : point) {
        if (!(x.modulus() == p)) throw StructuralError("evaluation point modulus mismatch");
    }
    u64 acc = 0;
    for (const auto& [e, c] : f.terms()) {
        u64 term = c;
        for (std::size_t v = 0; v < e.size() && term != 0; ++v) {
            if (e[v] != 0) term = mul_mod(term, pow_mod(point[v].value(), e[v], p.value()), p.value());
        }
        acc = add_mod(acc, term, p.value());
    }
    return Fp(acc, p);
}

PolyMetrics metrics(const MPoly& f) {
    PolyMetrics m;
    m.monomial_count = f.terms().size();
    for (const auto& [e, c] : f.terms()) {
        m.total_degree = std::max(m.total_degree, total_degree(e));
        for (auto x : e) m.max_var_degree = std::max(m.max_var_degree, x);
    }
    return m;
}

MPoly elementary_symmetric(std::size_t k, std::size_t n, Prime p) {
    MPoly out(p, n);
    if (k > n) return out;
    // Walk all k-subsets in lexicographic order.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        ExpVec e(n, 0);
        for (auto i : idx) e[i] = 1;
        out.add_term(e, 1);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

MPoly swap_variables(const MPoly& f, std::size_t i, std::size_t j) {
    if (i >= f.nvars() || j >= f.nvars()) throw StructuralError("variable index out of range");
    MPoly out(f.modulus(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        ExpVec s = e;
        std::swap(s[i], s[j]);
        out.add_term(s, c);
    }
    return out;
}

bool is_symmetric(const MPoly& f) {
    for (std::size_t i = 0; i + 1 < f.nvars(); ++i) {
        if (!(swap_variables(f, i, i + 1) == f)) return false;
    }
    return true;
}

MPoly extend_variables(const MPoly& f, std::size_t nvars) {
    if (nvars < f.nvars()) throw StructuralError("cannot drop variables");
    MPoly out(f.modulus(), nvars);
    for (const auto& [e, c] : f.terms()) {
        ExpVec x = e;
        x.resize(nvars, 0);
        out.add_term(x, c);
    }
    return out;
}

std::string to_string(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (c != 1 || constant) {
            os << c;
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << '*';
            os << 'x' << (v + 1);
            if (e[v] != 1) os << '^' << e[v];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace fpcarry
