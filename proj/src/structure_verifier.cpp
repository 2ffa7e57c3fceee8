#include "twoway/structure_verifier.hpp"

#include <algorithm>
#include <functional>

namespace twoway {

std::vector<int> ReachingSet::keys() const {
    std::vector<int> out;
    for (int b = std::max(lo_gap, 1); b < hi_gap; ++b)
        if (!std::binary_search(removed_keys.begin(), removed_keys.end(), b)) out.push_back(b);
    return out;
}

bool ReachingSet::contains_key(int b) const {
    return b >= std::max(lo_gap, 1) && b < hi_gap && !std::binary_search(removed_keys.begin(), removed_keys.end(), b);
}

namespace {

using NodeId = ComparisonTree::NodeId;
using Kind = ComparisonTree::Kind;

/// Reaching sets top-down. A "<" test at k_b splits the range at b; an
/// equality test removes k_b on the "no" side and leaves only k_b on the
/// "yes" side.
std::vector<ReachingSet> reaching_sets(const ComparisonTree& tree, const Instance& inst) {
    std::vector<ReachingSet> out(static_cast<std::size_t>(tree.node_count()));
    std::function<void(NodeId, ReachingSet)> rec = [&](NodeId id, ReachingSet s) {
        const auto& n = tree.node(id);
        out[static_cast<std::size_t>(id)] = s;
        if (n.is_leaf()) return;
        if (!inst.valid_key(n.index)) throw TreeError("comparison references an unknown key");
        const int b = n.index;
        if (n.kind == Kind::Less) {
            ReachingSet yes = s;
            ReachingSet no = s;
            yes.hi_gap = std::clamp(b, s.lo_gap, s.hi_gap);
            no.lo_gap = std::clamp(b, s.lo_gap, s.hi_gap);
            std::erase_if(yes.removed_keys, [&](int k) { return k >= yes.hi_gap; });
            std::erase_if(no.removed_keys, [&](int k) { return k < no.lo_gap; });
            rec(n.yes, std::move(yes));
            rec(n.no, std::move(no));
        } else {
            // The yes side is the single key; model it as [b, b+1) without the interval.
            ReachingSet yes{b, b + 1, {}};
            ReachingSet no = s;
            if (s.contains_key(b)) {
                no.removed_keys.insert(std::lower_bound(no.removed_keys.begin(), no.removed_keys.end(), b), b);
            }
            rec(n.yes, std::move(yes));
            rec(n.no, std::move(no));
        }
    };
    rec(tree.root(), ReachingSet{0, inst.size() + 1, {}});
    return out;
}

Weight leaf_weight(const ComparisonTree::Node& n, const Instance& inst, ArithmeticMode mode) {
    Rational w = n.kind == Kind::KeyLeaf ? inst.key_weight(n.index)
               : inst.variant() == Variant::Full ? inst.gap_weight(n.index)
                                                 : Rational(0);
    return Weight(w).in_mode(mode);
}

} // namespace

SideWeightAnnotation annotate_side_weights(const ComparisonTree& tree, const Instance& inst, ArithmeticMode mode) {
    auto sets = reaching_sets(tree, inst);
    SideWeightAnnotation ann;
    ann.nodes.resize(static_cast<std::size_t>(tree.node_count()));
    std::function<Weight(NodeId)> rec = [&](NodeId id) -> Weight {
        const auto& n = tree.node(id);
        auto& out = ann.nodes[static_cast<std::size_t>(id)];
        out.reaching = sets[static_cast<std::size_t>(id)];
        if (n.is_leaf()) {
            if ((n.kind == Kind::KeyLeaf && !inst.valid_key(n.index)) ||
                (n.kind == Kind::IntervalLeaf && !inst.valid_gap(n.index)))
                throw TreeError("leaf references an out-of-range index");
            out.subtree_weight = leaf_weight(n, inst, mode);
            out.side_weight = Weight::zero(mode);
            return out.subtree_weight;
        }
        Weight yes = rec(n.yes);
        Weight no = rec(n.no);
        out.subtree_weight = yes + no;
        out.side_weight = n.kind == Kind::Equal ? Weight(inst.key_weight(n.index)).in_mode(mode) : std::min(yes, no);
        return out.subtree_weight;
    };
    rec(tree.root());
    return ann;
}

MonotoneReport check_side_weight_monotone(const ComparisonTree& tree, const Instance& inst) {
    const auto ann = annotate_side_weights(tree, inst);
    MonotoneReport report;
    std::function<void(NodeId)> rec = [&](NodeId id) {
        const auto& n = tree.node(id);
        if (n.is_leaf() || report.first_violation) return;
        for (NodeId child : {n.yes, n.no}) {
            if (ann.at(id).side_weight < ann.at(child).side_weight) {
                report.first_violation = EdgeViolation{id, child};
                return;
            }
        }
        rec(n.yes);
        rec(n.no);
    };
    rec(tree.root());
    return report;
}

bool check_mlk(const ComparisonTree& tree, const Instance& inst) {
    auto sets = reaching_sets(tree, inst);
    for (NodeId id = 0; id < tree.node_count(); ++id) {
        const auto& n = tree.node(id);
        if (n.kind != Kind::Equal) continue;
        const auto keys = sets[static_cast<std::size_t>(id)].keys();
        for (int b : keys)
            if (inst.key_weight(b) > inst.key_weight(n.index)) return false;
        if (std::find(keys.begin(), keys.end(), n.index) == keys.end()) return false;
    }
    return true;
}

bool check_rmlk(const ComparisonTree& tree, const Instance& inst, const RankPermutation& pi) {
    auto sets = reaching_sets(tree, inst);
    for (NodeId id = 0; id < tree.node_count(); ++id) {
        const auto& n = tree.node(id);
        if (n.kind != Kind::Equal) continue;
        const auto keys = sets[static_cast<std::size_t>(id)].keys();
        if (keys.empty()) return false;
        const int top = *std::max_element(keys.begin(), keys.end(),
                                          [&](int a, int b) { return pi.rank_of(a) < pi.rank_of(b); });
        if (top != n.index) return false;
    }
    return true;
}

std::vector<int> right_spine_equality_keys(const ComparisonTree& tree, ComparisonTree::NodeId start) {
    std::vector<int> keys;
    for (NodeId id = start; tree.node(id).kind == Kind::Equal; id = tree.node(id).no) keys.push_back(tree.node(id).index);
    return keys;
}

} // namespace twoway
