#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "twoway/codegen.hpp"
#include "twoway/comparison_tree.hpp"
#include "twoway/dp_solver.hpp"
#include "twoway/instance.hpp"
#include "twoway/oracle.hpp"
#include "twoway/structure_verifier.hpp"
#include "twoway/threeway.hpp"

namespace twoway::cli {

namespace {

/// Raised for bad flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string tree;
    std::string variant;
    std::string operators = "lt-eq";
    std::string mode = "exact";
    std::string out_tree;
    std::string format = "structured";
    std::string style = "c-like";
    int max_n = 12;
    int n = 0;
    std::uint64_t seed = 1;
};

template <typename T, typename Parse>
T parse_flag(const std::string& value, Parse parse) {
    try {
        return parse(value);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

Instance load_instance(const Options& o) {
    Instance inst = read_instance_file(o.input);
    if (!o.variant.empty()) {
        Variant v = parse_flag<Variant>(o.variant, [](const std::string& s) { return parse_variant(s); });
        inst = inst.as_variant(v);
    }
    return inst;
}

std::string milliseconds(std::chrono::nanoseconds d) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(d).count();
    return s.str();
}

void print_stats(const SolveStats& stats, std::ostream& out) {
    out << "subproblems " << stats.subproblems << "\n"
        << "inner_iterations " << stats.inner_iterations << "\n"
        << "wall_ms " << milliseconds(stats.wall_time) << "\n";
}

int cmd_solve(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    const auto ops = parse_flag<Operators>(o.operators, [](const std::string& s) { return parse_operators(s); });
    const auto mode = parse_flag<ArithmeticMode>(o.mode, [](const std::string& s) { return parse_arithmetic_mode(s); });
    const auto format = parse_flag<TreeFormat>(o.format, [](const std::string& s) { return parse_tree_format(s); });
    const SolveResult result = solve(inst, ops, mode);
    out << "optimal_cost " << result.optimal_cost << "\n";
    print_stats(result.stats, out);
    if (!o.out_tree.empty()) {
        std::ofstream file(o.out_tree);
        if (!file) throw InstanceError("cannot write tree file '" + o.out_tree + "'");
        file << serialize_tree(result.tree, inst, format);
    }
    return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    const auto mode = parse_flag<ArithmeticMode>(o.mode, [](const std::string& s) { return parse_arithmetic_mode(s); });
    const ComparisonTree tree = read_tree_file(o.tree, inst);
    const CostReport report = evaluate_cost(tree, inst, mode);
    out << "cost " << report.total_cost << "\n";
    for (const auto& leaf : report.leaf_depths)
        out << "leaf " << describe(leaf.label, inst) << " depth " << leaf.depth << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    const ComparisonTree tree = read_tree_file(o.tree, inst);
    const RankPermutation pi(inst);

    std::vector<std::pair<std::string, bool>> rows;
    const HandlesReport handled = handles(tree, inst);
    rows.emplace_back("handles", handled.ok());
    // The remaining checks assume the leaves name real keys and intervals.
    auto guarded = [&](auto check) {
        try {
            return static_cast<bool>(check());
        } catch (const std::exception&) {
            return false;
        }
    };
    rows.emplace_back("cost_duality", guarded([&] {
                          evaluate_cost(tree, inst);
                          return true;
                      }));
    rows.emplace_back("side_weight_monotone", guarded([&] { return check_side_weight_monotone(tree, inst).ok(); }));
    rows.emplace_back("mlk", guarded([&] { return check_mlk(tree, inst); }));
    rows.emplace_back("rmlk", guarded([&] { return check_rmlk(tree, inst, pi); }));

    bool all = true;
    out << std::left << std::setw(22) << "check" << "result\n";
    for (const auto& [name, ok] : rows) {
        out << std::left << std::setw(22) << name << (ok ? "pass" : "fail") << "\n";
        all = all && ok;
    }
    for (const auto& v : handled.violations) out << "  violation: " << v << "\n";
    out << "right_spine_equality_keys";
    for (int b : right_spine_equality_keys(tree, tree.root())) out << " " << format_rational(inst.key(b));
    out << "\n";
    return all ? kOk : kValidationFailure;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    OracleOptions opts;
    opts.max_n = o.max_n;
    opts.operators = parse_flag<Operators>(o.operators, [](const std::string& s) { return parse_operators(s); });
    out << "optimal_cost " << oracle(inst, opts) << "\n";
    return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    auto two_way = [&](Operators ops) -> std::string {
        try {
            return solve(inst, ops).optimal_cost.str();
        } catch (const InfeasibleError&) {
            return "infeasible";
        }
    };
    const std::string three_way =
        inst.variant() == Variant::Full ? solve_threeway(inst).cost.str() : std::string("n/a (successful variant)");
    out << std::left << std::setw(18) << "solver" << "optimal_cost\n";
    out << std::left << std::setw(18) << "two-way lt-eq" << two_way(Operators::LessAndEqual) << "\n";
    out << std::left << std::setw(18) << "two-way lt-only" << two_way(Operators::LessOnly) << "\n";
    out << std::left << std::setw(18) << "three-way" << three_way << "\n";
    return kOk;
}

int cmd_codegen(const Options& o, std::ostream& out) {
    const Instance inst = load_instance(o);
    const auto style = parse_flag<DispatchStyle>(o.style, [](const std::string& s) { return parse_dispatch_style(s); });
    const ComparisonTree tree = read_tree_file(o.tree, inst);
    out << emit_dispatch(tree, inst, style);
    return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    if (o.n < 0) throw UsageError("--n must be non-negative");
    const auto mode = parse_flag<ArithmeticMode>(o.mode, [](const std::string& s) { return parse_arithmetic_mode(s); });
    const Variant variant = o.variant.empty()
                                ? Variant::Full
                                : parse_flag<Variant>(o.variant, [](const std::string& s) { return parse_variant(s); });
    if (variant == Variant::Successful && o.n == 0) throw UsageError("successful-variant bench needs --n >= 1");

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> weight(0, 1000);
    std::vector<Rational> keys, beta, alpha;
    for (int b = 1; b <= o.n; ++b) {
        keys.emplace_back(b);
        beta.emplace_back(weight(rng), 1000);
    }
    if (variant == Variant::Full)
        for (int a = 0; a <= o.n; ++a) alpha.emplace_back(weight(rng), 1000);
    for (auto& w : beta) w.canonicalize();
    for (auto& w : alpha) w.canonicalize();
    const Instance inst(variant, std::move(keys), std::move(beta), std::move(alpha));

    const SolveResult result = solve(inst, Operators::LessAndEqual, mode);
    out << "n " << o.n << "\n";
    print_stats(result.stats, out);
    out << "optimal_cost " << result.optimal_cost << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal two-way-comparison search trees"};
    app.require_subcommand(1);
    Options o;

    auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal tree");
    solve_cmd->add_option("--input", o.input, "Instance file")->required();
    solve_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");
    solve_cmd->add_option("--operators", o.operators, "lt-eq|lt-only");
    solve_cmd->add_option("--mode", o.mode, "exact|float");
    solve_cmd->add_option("--out-tree", o.out_tree, "Write the tree here");
    solve_cmd->add_option("--format", o.format, "structured|dot");

    auto* eval_cmd = app.add_subcommand("eval", "Cost of a given tree");
    eval_cmd->add_option("--input", o.input, "Instance file")->required();
    eval_cmd->add_option("--tree", o.tree, "Tree file")->required();
    eval_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");
    eval_cmd->add_option("--mode", o.mode, "exact|float");

    auto* verify_cmd = app.add_subcommand("verify", "Structural checks on a given tree");
    verify_cmd->add_option("--input", o.input, "Instance file")->required();
    verify_cmd->add_option("--tree", o.tree, "Tree file")->required();
    verify_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum for small instances");
    oracle_cmd->add_option("--input", o.input, "Instance file")->required();
    oracle_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");
    oracle_cmd->add_option("--operators", o.operators, "lt-eq|lt-only");
    oracle_cmd->add_option("--max-n", o.max_n, "Refuse instances with more keys")->check(CLI::Range(0, kOracleHardLimit));

    auto* compare_cmd = app.add_subcommand("compare", "Two-way and three-way optima side by side");
    compare_cmd->add_option("--input", o.input, "Instance file")->required();
    compare_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");

    auto* codegen_cmd = app.add_subcommand("codegen", "Emit dispatch code for a tree");
    codegen_cmd->add_option("--input", o.input, "Instance file")->required();
    codegen_cmd->add_option("--tree", o.tree, "Tree file")->required();
    codegen_cmd->add_option("--style", o.style, "c-like|pseudocode");
    codegen_cmd->add_option("--variant", o.variant, "full|successful (overrides the file)");

    auto* bench_cmd = app.add_subcommand("bench", "Solve a random instance and report statistics");
    bench_cmd->add_option("--n", o.n, "Number of keys")->required();
    bench_cmd->add_option("--seed", o.seed, "Random seed")->required();
    bench_cmd->add_option("--mode", o.mode, "exact|float");
    bench_cmd->add_option("--variant", o.variant, "full|successful");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*solve_cmd) return cmd_solve(o, out);
        if (*eval_cmd) return cmd_eval(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*oracle_cmd) return cmd_oracle(o, out);
        if (*compare_cmd) return cmd_compare(o, out);
        if (*codegen_cmd) return cmd_codegen(o, out);
        if (*bench_cmd) return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kUsageError;
}

} // namespace twoway::cli
