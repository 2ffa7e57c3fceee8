#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twoway/instance.hpp"
#include "twoway/query_set.hpp"
#include "twoway/weight.hpp"

namespace twoway {

class TreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LeafLabel {
    enum class Kind { Key, Interval };
    Kind kind = Kind::Interval;
    int index = 0; // key index (1-based) or interval index (0-based)

    static LeafLabel key(int b) { return {Kind::Key, b}; }
    static LeafLabel interval(int a) { return {Kind::Interval, a}; }
    bool is_key() const { return kind == Kind::Key; }

    friend auto operator<=>(const LeafLabel&, const LeafLabel&) = default;
};

/// "7" for a key leaf, "(5,7)" for an interval leaf.
std::string describe(const LeafLabel& label, const Instance& inst);

/// A search tree built from two-way comparisons "q < k_b" and "q = k_b".
///
/// Nodes live in a flat arena so the tree is an ordinary copyable value.
/// The "yes" outcome is always the left child and "no" the right child.
class ComparisonTree {
public:
    using NodeId = int;

    enum class Kind { Less, Equal, KeyLeaf, IntervalLeaf };

    struct Node {
        Kind kind = Kind::IntervalLeaf;
        int index = 0; // key index for Less/Equal/KeyLeaf, interval index for IntervalLeaf
        NodeId yes = -1;
        NodeId no = -1;

        bool is_leaf() const { return kind == Kind::KeyLeaf || kind == Kind::IntervalLeaf; }
        LeafLabel label() const {
            return kind == Kind::KeyLeaf ? LeafLabel::key(index) : LeafLabel::interval(index);
        }
    };

    static ComparisonTree key_leaf(int b);
    static ComparisonTree interval_leaf(int a);
    static ComparisonTree leaf(const LeafLabel& label);
    static ComparisonTree less(int b, const ComparisonTree& yes, const ComparisonTree& no);
    static ComparisonTree equal(int b, const ComparisonTree& yes, const ComparisonTree& no);
    /// "q = k_b" whose yes-branch is the leaf for k_b.
    static ComparisonTree equality_test(int b, const ComparisonTree& no) {
        return equal(b, key_leaf(b), no);
    }

    NodeId root() const { return root_; }
    const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int internal_count() const;
    int leaf_count() const { return node_count() - internal_count(); }
    /// Edge count of the longest root-to-leaf path.
    int height() const;

    /// Leaves in left-to-right order.
    std::vector<LeafLabel> leaves() const;

    /// The subtree rooted at `id`, as a standalone tree.
    ComparisonTree subtree(NodeId id) const;

    /// Returns a copy with the labels of two leaves exchanged.
    ComparisonTree with_swapped_leaves(const LeafLabel& a, const LeafLabel& b) const;

    /// Structural equality (independent of arena layout).
    friend bool operator==(const ComparisonTree& lhs, const ComparisonTree& rhs);

private:
    NodeId graft(const ComparisonTree& other);

    std::vector<Node> nodes_;
    NodeId root_ = -1;
};

/// Routes q from the root: "q < k" / "q = k", yes to the left.
LeafLabel identify(const ComparisonTree& tree, const Instance& inst, const Rational& q);

struct LeafDepth {
    LeafLabel label;
    int depth = 0;
};

struct CostReport {
    Weight total_cost;
    std::vector<LeafDepth> leaf_depths; // left-to-right leaf order
};

/// Expected search cost: sum over leaves of depth * weight. Also computes
/// the sum of subtree weights over internal nodes and throws std::logic_error
/// if the two disagree (exactly in exact mode, 1e-9 in float mode). Throws
/// TreeError for a leaf naming an out-of-range key or interval.
CostReport evaluate_cost(const ComparisonTree& tree, const Instance& inst,
                         ArithmeticMode mode = ArithmeticMode::Exact);

struct HandlesReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
};

/// Whether the tree's leaves are exactly the keys and intervals of `set`
/// and every key (and one interior point per interval) is routed to its own
/// leaf. Successful-variant instances check key queries only.
HandlesReport handles(const ComparisonTree& tree, const Instance& inst, const QuerySet& set);
HandlesReport handles(const ComparisonTree& tree, const Instance& inst);

enum class TreeFormat { Structured, Dot };
TreeFormat parse_tree_format(std::string_view text);

/// Structured form is JSON: internal nodes {"op": "lt"|"eq", "key": v,
/// "yes": ..., "no": ...}, leaves {"key": v} or {"interval": [lo, hi]} with
/// "-inf" / "+inf" for the unbounded ends. Keys are written by value.
std::string serialize_tree(const ComparisonTree& tree, const Instance& inst,
                           TreeFormat format = TreeFormat::Structured);

/// Inverse of the structured form; key values are looked up in `inst`.
ComparisonTree parse_tree(std::string_view text, const Instance& inst);
ComparisonTree read_tree_file(const std::string& path, const Instance& inst);

} // namespace twoway
