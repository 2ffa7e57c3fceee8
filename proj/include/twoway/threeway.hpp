#pragma once

#include <vector>

#include "twoway/instance.hpp"
#include "twoway/weight.hpp"

namespace twoway {

/// Classical search tree where one comparison answers <, = or >.
///
/// A comparison node on key k_r has three children: the left subtree, the
/// leaf for k_r and the right subtree. So a key whose node sits at depth d
/// has its leaf at depth d + 1, like every other leaf hanging off that node.
class ThreeWayTree {
public:
    using NodeId = int;

    struct Node {
        bool is_leaf = true;
        int index = 0; // key index (comparison) or interval index (leaf)
        NodeId left = -1;
        NodeId right = -1;
    };

    static ThreeWayTree interval_leaf(int a);
    static ThreeWayTree compare(int r, const ThreeWayTree& left, const ThreeWayTree& right);

    NodeId root() const { return root_; }
    const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    friend bool operator==(const ThreeWayTree&, const ThreeWayTree&) = default;

private:
    NodeId graft(const ThreeWayTree& other);

    std::vector<Node> nodes_;
    NodeId root_ = -1;
};

struct ThreeWayResult {
    Weight cost;
    ThreeWayTree tree;
};

/// Optimal three-way tree by the O(n^3) interval recurrence. Full-variant
/// instances only (std::invalid_argument otherwise).
ThreeWayResult solve_threeway(const Instance& inst, ArithmeticMode mode = ArithmeticMode::Exact);

/// Weighted leaf depth. Throws TreeError if the tree is not a valid search
/// tree over all n keys and n + 1 intervals.
Weight evaluate_threeway_cost(const ThreeWayTree& tree, const Instance& inst,
                              ArithmeticMode mode = ArithmeticMode::Exact);

} // namespace twoway
