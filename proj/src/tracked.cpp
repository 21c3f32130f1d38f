#include "fpcarry/tracked.hpp"

#include <sstream>

namespace fpcarry {

std::string CostTape::report_text() const {
    std::ostringstream os;
    os << "adds=" << adds << '\n'
       << "muls=" << muls << '\n'
       << "const_muls=" << const_muls << '\n'
       << "max_depth=" << max_depth << '\n';
    return os.str();
}

std::string CostTape::report_json() const {
    std::ostringstream os;
    os << "{\"adds\": " << adds << ", \"muls\": " << muls << ", \"const_muls\": " << const_muls
       << ", \"max_depth\": " << max_depth << '}';
    return os.str();
}

CompiledPoly CompiledPoly::compile(const MPoly& f) {
    CompiledPoly out{f.modulus(), f.nvars(), std::vector<std::uint32_t>(f.nvars(), 0), {}, {}, {}, 0, 0};
    out.terms.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) {
        Term t{c, static_cast<std::uint32_t>(out.factors.size()), 0};
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            out.factors.emplace_back(static_cast<std::uint32_t>(v), e[v]);
            out.max_exp[v] = std::max(out.max_exp[v], e[v]);
            ++t.count;
        }
        out.widest_term = std::max<std::size_t>(out.widest_term, t.count);
        out.terms.push_back(t);
    }
    out.power_offset.assign(f.nvars(), 0);
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        out.power_offset[v] = static_cast<std::uint32_t>(out.power_slots);
        out.power_slots += out.max_exp[v];
    }
    return out;
}

TrackedValue tv_input(CostTape& tape, const Fp& v) {
    if (!(v.modulus() == tape.modulus())) throw StructuralError("input modulus differs from the tape modulus");
    return TrackedValue(v.value(), 0, false, &tape);
}

TrackedValue tv_const(CostTape& tape, const Fp& v) {
    if (!(v.modulus() == tape.modulus())) throw StructuralError("constant modulus differs from the tape modulus");
    return TrackedValue(v.value(), 0, true, &tape);
}

void throw_tape_mismatch() { throw StructuralError("tracked operands belong to different tapes"); }

Fp reveal(const TrackedValue& v) { return Fp(v.v_, v.tape_->modulus()); }

TrackedValue tv_add(const TrackedValue& a, const TrackedValue& b) { return a + b; }
TrackedValue tv_mul(const TrackedValue& a, const TrackedValue& b) { return a * b; }

TrackedValue eval_tracked(const MPoly& f, std::span<const TrackedValue> point) {
    if (point.empty()) {
        throw StructuralError("eval_tracked needs at least one input to locate the tape");
    }
    return eval_poly(TrackedField{const_cast<CostTape*>(point.front().tape())}, f, point);
}

}  // namespace fpcarry
