#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoway/comparison_tree.hpp"
#include "twoway/instance.hpp"
#include "twoway/weight.hpp"

namespace twoway {

/// The set of queries reaching a node: intervals lo_gap .. hi_gap-1 and the
/// keys in [max(lo_gap, 1), hi_gap) that no equality test above has removed.
struct ReachingSet {
    int lo_gap = 0;
    int hi_gap = 1;
    std::vector<int> removed_keys; // ascending

    std::vector<int> keys() const;
    bool contains_key(int b) const;
};

struct NodeAnnotation {
    Weight side_weight;
    Weight subtree_weight;
    ReachingSet reaching;
};

/// Per-node annotation, indexed by ComparisonTree::NodeId.
///
/// Side-weight: 0 at a leaf, the tested key's weight at an equality node,
/// and the lighter child's subtree weight at a "<" node.
struct SideWeightAnnotation {
    std::vector<NodeAnnotation> nodes;

    const NodeAnnotation& at(ComparisonTree::NodeId id) const { return nodes.at(static_cast<std::size_t>(id)); }
};

SideWeightAnnotation annotate_side_weights(const ComparisonTree& tree, const Instance& inst,
                                           ArithmeticMode mode = ArithmeticMode::Exact);

struct EdgeViolation {
    ComparisonTree::NodeId parent = -1;
    ComparisonTree::NodeId child = -1;
};

struct MonotoneReport {
    std::optional<EdgeViolation> first_violation;

    bool ok() const { return !first_violation; }
    explicit operator bool() const { return ok(); }
};

/// Side-weights never increase from parent to child. Holds for every optimal
/// tree; other trees may or may not satisfy it.
MonotoneReport check_side_weight_monotone(const ComparisonTree& tree, const Instance& inst);

/// Every equality node tests a key of maximum weight among the keys reaching it.
bool check_mlk(const ComparisonTree& tree, const Instance& inst);

/// Every equality node tests the key of maximum rank among the keys reaching it.
bool check_rmlk(const ComparisonTree& tree, const Instance& inst, const RankPermutation& pi);

/// Keys tested by the run of equality nodes starting at `start` and following
/// "no" edges. Informational only.
std::vector<int> right_spine_equality_keys(const ComparisonTree& tree, ComparisonTree::NodeId start);

} // namespace twoway
