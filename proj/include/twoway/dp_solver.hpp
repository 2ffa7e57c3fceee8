#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "twoway/comparison_tree.hpp"
#include "twoway/instance.hpp"
#include "twoway/query_set.hpp"
#include "twoway/weight.hpp"

namespace twoway {

/// Comparison operators a tree may use.
enum class Operators { LessAndEqual, LessOnly };

std::string_view to_string(Operators ops);
Operators parse_operators(std::string_view text); // "lt-eq" | "lt-only"

/// No tree over the requested operators handles the instance.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// W(S): interval weights a = i .. j-1 (full variant only) plus the weights
/// of the keys that S contains.
Weight set_weight(const Instance& inst, const RankPermutation& pi, const ValidSet& s,
                  ArithmeticMode mode = ArithmeticMode::Exact);

/// Root decision recorded for a table cell.
enum class Choice : std::uint8_t {
    Infeasible,
    IntervalLeaf, // case (a)
    KeyLeaf,      // successful variant, exactly one key left
    Defer,        // case (b): same set as (i, j, h - 1)
    Equality,     // case (c): "q = k_pi(h)", then (i, j, h - 1)
    Split,        // case (c): "q < k_b", then (i, b, h) and (b, j, h)
};

/// The optimal-cost table over all valid sets S(i, j, h), 0 <= i < j <= n+1,
/// 0 <= h <= n. Cells outside that range are never touched.
template <typename Num>
class DPTable {
public:
    struct Cell {
        std::optional<Num> cost; // empty = infeasible
        Choice choice = Choice::Infeasible;
        int split = 0;           // b for Choice::Split, key index for KeyLeaf
    };

    DPTable(const Instance& inst, Operators ops)
        : inst_(inst), pi_(inst), ops_(ops), n_(inst.size()),
          cells_(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 2) *
                 static_cast<std::size_t>(n_ + 1)) {}

    Cell& at(int i, int j, int h) { return cells_[index(i, j, h)]; }
    const Cell& at(int i, int j, int h) const { return cells_[index(i, j, h)]; }

    int size() const { return n_; }
    const Instance& instance() const { return inst_; }
    const RankPermutation& permutation() const { return pi_; }
    Operators operators() const { return ops_; }

private:
    std::size_t index(int i, int j, int h) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 2) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(h);
    }

    Instance inst_;
    RankPermutation pi_;
    Operators ops_;
    int n_;
    std::vector<Cell> cells_;
};

struct SolveStats {
    std::uint64_t subproblems = 0;       // table cells evaluated
    std::uint64_t inner_iterations = 0;  // split candidates examined
    std::chrono::nanoseconds wall_time{0};
};

/// Fills the whole table: h ascending, then interval length ascending.
template <typename Num>
DPTable<Num> fill_table(const Instance& inst, Operators ops, SolveStats* stats = nullptr);

/// Re-derives every cell from its neighbours and checks the stored cost and
/// choice against the recurrence. True when nothing is inconsistent.
template <typename Num>
bool fill_order_check(const DPTable<Num>& table);

/// Builds the optimal tree for cell (i, j, h) from the recorded choices.
/// Throws InfeasibleError if the cell is infeasible.
template <typename Num>
ComparisonTree reconstruct(const DPTable<Num>& table, const ValidSet& s);

struct SolveResult {
    Weight optimal_cost;
    ComparisonTree tree;
    SolveStats stats;
};

/// Optimal two-way-comparison tree for a full-variant instance. Every
/// equality test is to the largest-rank key of its cell. Throws
/// InfeasibleError for lt-only with n >= 1 (a key and the interval just
/// above it cannot be separated by "<" alone).
SolveResult solve_full(const Instance& inst, Operators ops = Operators::LessAndEqual,
                       ArithmeticMode mode = ArithmeticMode::Exact);

/// Same recurrence restricted to key queries: a single remaining key is a
/// leaf with no test, empty key sets are infeasible.
SolveResult solve_successful(const Instance& inst, Operators ops = Operators::LessAndEqual,
                             ArithmeticMode mode = ArithmeticMode::Exact);

/// Dispatches on inst.variant().
SolveResult solve(const Instance& inst, Operators ops = Operators::LessAndEqual,
                  ArithmeticMode mode = ArithmeticMode::Exact);

extern template class DPTable<Rational>;
extern template class DPTable<double>;

} // namespace twoway
