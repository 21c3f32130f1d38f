// fpcarry: carry polynomials over F_p, interpolation, and p-ary big-integer
// arithmetic through carry evaluations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpcarry/add_carry.hpp"
#include "fpcarry/bignum.hpp"
#include "fpcarry/interp.hpp"
#include "fpcarry/mul_carry.hpp"
#include "fpcarry/tracked.hpp"
#include "fpcarry/verify.hpp"

using namespace fpcarry;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Flags {
    u64 p = 0;
    std::size_t n = 2;
    unsigned i = 1;
    std::string algo;
    bool track = false;
    bool as_json = false;
    bool radix_literal = false;
    bool dump_table = false;
    std::vector<std::string> operands;
    std::string table_file;
    std::string suite;
    u64 p_max = 0;
    std::size_t l_max = 60;
    std::size_t pairs = 100;
};

std::string metrics_line(const PolyMetrics& m) {
    return "monomials=" + std::to_string(m.monomial_count) + " total_degree=" + std::to_string(m.total_degree) +
           " max_var_degree=" + std::to_string(m.max_var_degree);
}

json metrics_json(const PolyMetrics& m) {
    return json{{"monomials", m.monomial_count}, {"total_degree", m.total_degree}, {"max_var_degree", m.max_var_degree}};
}

void emit_poly(const MPoly& f, const Flags& flags, json header) {
    const PolyMetrics m = metrics(f);
    if (flags.as_json) {
        header["polynomial"] = to_string(f);
        header["metrics"] = metrics_json(m);
        std::cout << header.dump() << '\n';
    } else {
        std::cout << to_string(f) << '\n' << metrics_line(m) << '\n';
    }
}

int cmd_carry_add(const Flags& f) {
    const Prime p(f.p);
    if (f.n == 0) throw DomainError("--n must be at least 1");
    if (f.dump_table) {
        const std::size_t idx = f.i;
        write_truth_table(std::cout, tabulate(p, f.n, [idx](std::span<const Fp> x) {
                              return carry_oracle_add(x, static_cast<unsigned>(idx));
                          }));
        return kExitOk;
    }
    emit_poly(phi_poly(f.i, f.n, p), f, json{{"p", f.p}, {"n", f.n}, {"i", f.i}});
    return kExitOk;
}

int cmd_carry_mul(const Flags& f) {
    const Prime p(f.p);
    if (p.value() == 2) throw DomainError("multiplication carries are defined here for odd primes only");
    if (f.n == 0) throw DomainError("--n must be at least 1");
    if (f.dump_table) {
        write_truth_table(std::cout, tabulate(p, f.n, [](std::span<const Fp> x) { return carry_oracle_mul(x); }));
        return kExitOk;
    }
    emit_poly(psi1_poly(f.n, p), f, json{{"p", f.p}, {"n", f.n}});
    return kExitOk;
}

int cmd_carry_psi(const Flags& f) {
    const Prime p(f.p);
    const PsiAux& aux = psi_aux(p);
    if (f.as_json) {
        std::cout << json{{"p", f.p}, {"psi", format_psi(aux)}, {"psi_at_one", aux.psi_at_one.value()}}.dump() << '\n';
    } else {
        std::cout << format_psi(aux) << '\n' << "Psi(1) = " << aux.psi_at_one.value() << '\n';
    }
    return kExitOk;
}

Digits read_operand(const std::string& s, Prime p, bool radix) {
    return radix ? parse_radix_literal(s, p) : to_digits(parse_decimal(s), p);
}

int cmd_bignum(const std::string& op, const Flags& f) {
    const Prime p(f.p);
    std::vector<Digits> xs;
    for (const auto& s : f.operands) xs.push_back(read_operand(s, p, f.radix_literal));
    std::string algo = f.algo;
    if (algo.empty()) algo = op == "add" ? "many" : "schoolbook";

    CostTape tape(p);
    CostTape* t = f.track ? &tape : nullptr;
    Digits result(p);
    if (op == "add") {
        if (algo == "many") {
            if (xs.empty()) throw DomainError("bignum add needs at least one operand");
            result = add_many(xs, t);
        } else if (algo == "two") {
            if (xs.size() != 2) throw DomainError("--algo two adds exactly two operands");
            result = add_two(xs[0], xs[1], t);
        } else {
            throw DomainError("--algo " + algo + " does not apply to addition (use many or two)");
        }
    } else {
        if (xs.size() != 2) throw DomainError("bignum mul multiplies exactly two operands");
        if (algo == "schoolbook") {
            result = mul_schoolbook(xs[0], xs[1], t);
        } else if (algo == "listed") {
            result = mul_listed(xs[0], xs[1], t);
        } else {
            throw DomainError("--algo " + algo + " does not apply to multiplication (use schoolbook or listed)");
        }
    }

    const std::string text = f.radix_literal ? format_radix_literal(result) : from_digits(result).get_str();
    if (f.as_json) {
        json out{{"p", f.p}, {"op", op}, {"algo", algo}, {"result", text}};
        if (f.track) out["cost"] = json::parse(tape.report_json());
        std::cout << out.dump() << '\n';
    } else {
        std::cout << text << '\n';
        if (f.track) std::cout << tape.report_text();
    }
    return kExitOk;
}

int cmd_interp(const Flags& f) {
    TruthTable table = [&] {
        if (f.table_file == "-") return read_truth_table(std::cin);
        std::ifstream in(f.table_file);
        if (!in) throw DomainError("cannot open " + f.table_file);
        return read_truth_table(in);
    }();
    emit_poly(interpolate(table), f, json{{"p", table.modulus().value()}, {"n", table.nvars()}});
    return kExitOk;
}

int cmd_verify(const Flags& f) {
    VerifyOptions opts;
    opts.p_max = f.p_max;
    opts.l_max = f.l_max;
    opts.bignum_pairs = f.pairs;
    const VerifyReport r = run_suite(f.suite, opts);
    if (f.as_json) {
        std::cout << json{{"suite", r.suite}, {"checks", r.checks}, {"failed", r.failed}, {"failures", r.failures}}.dump()
                  << '\n';
    } else {
        std::cout << r.suite << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.checks << " checks, " << r.failed
                  << " failed)\n";
        for (const auto& line : r.failures) std::cout << "  " << line << '\n';
    }
    return r.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Carry polynomials over prime fields and p-ary arithmetic built from them"};
    app.require_subcommand(1);
    Flags f;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", f.as_json, "Structured output"); };

    auto* carry = app.add_subcommand("carry", "Emit carry polynomials");
    carry->require_subcommand(1);
    auto* carry_add = carry->add_subcommand("add", "Digit i of x1 + ... + xn");
    carry_add->add_option("--p", f.p, "Prime modulus")->required();
    carry_add->add_option("--n", f.n, "Number of summands")->capture_default_str();
    carry_add->add_option("--i", f.i, "Digit index")->capture_default_str();
    carry_add->add_flag("--dump-table", f.dump_table, "Print the integer truth table instead");
    add_json(carry_add);
    auto* carry_mul = carry->add_subcommand("mul", "Digit 1 of x1 * ... * xn");
    carry_mul->add_option("--p", f.p, "Odd prime modulus")->required();
    carry_mul->add_option("--n", f.n, "Number of factors")->capture_default_str();
    carry_mul->add_flag("--dump-table", f.dump_table, "Print the integer truth table instead");
    add_json(carry_mul);
    auto* carry_psi = carry->add_subcommand("mul-psi", "The auxiliary polynomial Psi and Psi(1)");
    carry_psi->add_option("--p", f.p, "Odd prime modulus")->required();
    add_json(carry_psi);

    auto* bignum = app.add_subcommand("bignum", "p-ary integer arithmetic through carry polynomials");
    bignum->require_subcommand(1);
    std::vector<CLI::App*> bignum_cmds;
    for (const char* name : {"add", "mul"}) {
        auto* cmd = bignum->add_subcommand(name, std::string(name) == "add" ? "Sum of the operands" : "Product of two operands");
        cmd->add_option("--p", f.p, "Prime base")->required();
        cmd->add_option("--algo", f.algo, "many|two for add, schoolbook|listed for mul")
            ->check(CLI::IsMember({"schoolbook", "listed", "many", "two"}));
        cmd->add_flag("--track", f.track, "Run over tracked values and print the operation counts");
        cmd->add_flag("--radix-literal", f.radix_literal, "Operands and result as base-p digit strings");
        cmd->add_option("operands", f.operands, "Non-negative integers")->required();
        add_json(cmd);
        bignum_cmds.push_back(cmd);
    }

    auto* interp = app.add_subcommand("interp", "Minimal polynomial of a truth table");
    interp->add_option("file", f.table_file, "Truth-table file, - for stdin")->required();
    add_json(interp);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", f.suite, "add-carry|mul-carry|bernoulli|cocycle|appendix|bignum|all")->required();
    verify->add_option("--p-max", f.p_max, "Largest prime exercised");
    verify->add_option("--l-max", f.l_max, "Largest Bernoulli index")->capture_default_str();
    verify->add_option("--pairs", f.pairs, "Random operand pairs per configuration")->capture_default_str();
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (carry_add->parsed()) return cmd_carry_add(f);
        if (carry_mul->parsed()) return cmd_carry_mul(f);
        if (carry_psi->parsed()) return cmd_carry_psi(f);
        if (bignum_cmds[0]->parsed()) return cmd_bignum("add", f);
        if (bignum_cmds[1]->parsed()) return cmd_bignum("mul", f);
        if (interp->parsed()) return cmd_interp(f);
        if (verify->parsed()) return cmd_verify(f);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
