#include "twoway/dp_solver.hpp"

#include <algorithm>

namespace twoway {

std::string_view to_string(Operators ops) {
    return ops == Operators::LessAndEqual ? "lt-eq" : "lt-only";
}

Operators parse_operators(std::string_view text) {
    if (text == "lt-eq") return Operators::LessAndEqual;
    if (text == "lt-only") return Operators::LessOnly;
    throw std::invalid_argument("unknown operator set '" + std::string(text) + "'");
}

namespace {

template <typename Num>
Num weight_of_set(const Instance& inst, const RankPermutation& pi, const ValidSet& s,
                  const std::vector<Num>& gap_prefix) {
    Num w = 0;
    if (inst.variant() == Variant::Full)
        w = gap_prefix[static_cast<std::size_t>(s.j)] - gap_prefix[static_cast<std::size_t>(s.i)];
    for (int b = std::max(s.i, 1); b < s.j; ++b)
        if (pi.rank_of(b) <= s.h) w += convert<Num>(inst.key_weight(b));
    return w;
}

template <typename Num>
std::vector<Num> gap_prefix_sums(const Instance& inst) {
    std::vector<Num> prefix(static_cast<std::size_t>(inst.size()) + 2, Num(0));
    for (int a = 0; a <= inst.size(); ++a)
        prefix[static_cast<std::size_t>(a) + 1] = prefix[static_cast<std::size_t>(a)] + convert<Num>(inst.gap_weight(a));
    return prefix;
}

/// Applies the recurrence to one cell, reading its dependencies from the
/// table. Shared by the fill and by the consistency check.
template <typename Num>
typename DPTable<Num>::Cell evaluate_cell(const DPTable<Num>& table, int i, int j, int h,
                                          const std::vector<Num>& gap_prefix, std::uint64_t& iterations) {
    using Cell = typename DPTable<Num>::Cell;
    const Instance& inst = table.instance();
    const RankPermutation& pi = table.permutation();
    const bool full = inst.variant() == Variant::Full;
    const ValidSet s{i, j, h};

    if (full) {
        if (j == i + 1 && !s.contains_key(pi, i)) return Cell{Num(0), Choice::IntervalLeaf, 0};
    } else {
        int count = 0;
        int only = 0;
        for (int b = std::max(i, 1); b < j && count < 2; ++b)
            if (pi.rank_of(b) <= h) {
                ++count;
                only = b;
            }
        if (count == 0) return Cell{std::nullopt, Choice::Infeasible, 0};
        if (count == 1) return Cell{Num(0), Choice::KeyLeaf, only};
    }

    if (h > 0) {
        const int top = pi.key_at(h);
        if (top < i || top >= j) return Cell{table.at(i, j, h - 1).cost, Choice::Defer, 0};
    }

    const Num w = weight_of_set(inst, pi, s, gap_prefix);
    Cell best;
    if (h > 0 && table.operators() == Operators::LessAndEqual) {
        if (const auto& rest = table.at(i, j, h - 1).cost) best = Cell{Num(w + *rest), Choice::Equality, 0};
    }
    for (int b = i + 1; b < j; ++b) {
        ++iterations;
        const auto& left = table.at(i, b, h).cost;
        if (!left) continue;
        const auto& right = table.at(b, j, h).cost;
        if (!right) continue;
        Num c = w + *left + *right;
        if (!best.cost || c < *best.cost) best = Cell{std::move(c), Choice::Split, b};
    }
    return best;
}

template <typename Num>
ComparisonTree build(const DPTable<Num>& table, int i, int j, int h) {
    const auto& cell = table.at(i, j, h);
    switch (cell.choice) {
    case Choice::Infeasible:
        throw InfeasibleError("no tree handles the requested query set with the allowed operators");
    case Choice::IntervalLeaf:
        return ComparisonTree::interval_leaf(i);
    case Choice::KeyLeaf:
        return ComparisonTree::key_leaf(cell.split);
    case Choice::Defer:
        return build(table, i, j, h - 1);
    case Choice::Equality:
        return ComparisonTree::equality_test(table.permutation().key_at(h), build(table, i, j, h - 1));
    case Choice::Split:
        return ComparisonTree::less(cell.split, build(table, i, cell.split, h), build(table, cell.split, j, h));
    }
    throw std::logic_error("unreachable");
}

template <typename Num>
SolveResult run_solver(const Instance& inst, Operators ops) {
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    DPTable<Num> table = fill_table<Num>(inst, ops, &result.stats);
    const int n = inst.size();
    const auto& root = table.at(0, n + 1, n);
    if (!root.cost) {
        if (inst.variant() == Variant::Full)
            throw InfeasibleError("'<' alone cannot separate a key from the interval above it; "
                                  "full-variant instances with keys need equality tests");
        throw InfeasibleError("no tree handles the instance with the allowed operators");
    }
    result.optimal_cost = to_weight(*root.cost);
    result.tree = build(table, 0, n + 1, n);
    result.stats.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace

Weight set_weight(const Instance& inst, const RankPermutation& pi, const ValidSet& s, ArithmeticMode mode) {
    if (s.i < 0 || s.j > inst.size() + 1 || s.i >= s.j || s.h < 0 || s.h > inst.size())
        throw std::out_of_range("invalid valid-set indices");
    if (mode == ArithmeticMode::Exact) return Weight(weight_of_set(inst, pi, s, gap_prefix_sums<Rational>(inst)));
    return Weight(weight_of_set(inst, pi, s, gap_prefix_sums<double>(inst)));
}

template <typename Num>
DPTable<Num> fill_table(const Instance& inst, Operators ops, SolveStats* stats) {
    DPTable<Num> table(inst, ops);
    const auto prefix = gap_prefix_sums<Num>(inst);
    const int n = inst.size();
    std::uint64_t cells = 0;
    std::uint64_t iterations = 0;
    for (int h = 0; h <= n; ++h) {
        for (int len = 1; len <= n + 1; ++len) {
            for (int i = 0; i + len <= n + 1; ++i) {
                const int j = i + len;
                table.at(i, j, h) = evaluate_cell(table, i, j, h, prefix, iterations);
                ++cells;
            }
        }
    }
    if (stats) {
        stats->subproblems = cells;
        stats->inner_iterations = iterations;
    }
    return table;
}

template <typename Num>
bool fill_order_check(const DPTable<Num>& table) {
    const auto prefix = gap_prefix_sums<Num>(table.instance());
    const int n = table.size();
    std::uint64_t ignored = 0;
    for (int h = 0; h <= n; ++h) {
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n + 1; ++j) {
                const auto expected = evaluate_cell(table, i, j, h, prefix, ignored);
                const auto& stored = table.at(i, j, h);
                if (expected.cost.has_value() != stored.cost.has_value()) return false;
                if (expected.cost && *expected.cost != *stored.cost) return false;
                if (expected.choice != stored.choice || expected.split != stored.split) return false;
            }
        }
    }
    return true;
}

template <typename Num>
ComparisonTree reconstruct(const DPTable<Num>& table, const ValidSet& s) {
    return build(table, s.i, s.j, s.h);
}

SolveResult solve_full(const Instance& inst, Operators ops, ArithmeticMode mode) {
    if (inst.variant() != Variant::Full) throw std::invalid_argument("solve_full needs a full-variant instance");
    return mode == ArithmeticMode::Exact ? run_solver<Rational>(inst, ops) : run_solver<double>(inst, ops);
}

SolveResult solve_successful(const Instance& inst, Operators ops, ArithmeticMode mode) {
    if (inst.variant() != Variant::Successful)
        throw std::invalid_argument("solve_successful needs a successful-variant instance");
    return mode == ArithmeticMode::Exact ? run_solver<Rational>(inst, ops) : run_solver<double>(inst, ops);
}

SolveResult solve(const Instance& inst, Operators ops, ArithmeticMode mode) {
    return inst.variant() == Variant::Full ? solve_full(inst, ops, mode) : solve_successful(inst, ops, mode);
}

template class DPTable<Rational>;
template class DPTable<double>;
template DPTable<Rational> fill_table<Rational>(const Instance&, Operators, SolveStats*);
template DPTable<double> fill_table<double>(const Instance&, Operators, SolveStats*);
template bool fill_order_check<Rational>(const DPTable<Rational>&);
template bool fill_order_check<double>(const DPTable<double>&);
template ComparisonTree reconstruct<Rational>(const DPTable<Rational>&, const ValidSet&);
template ComparisonTree reconstruct<double>(const DPTable<double>&, const ValidSet&);

} // namespace twoway
