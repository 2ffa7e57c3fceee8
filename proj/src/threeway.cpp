#include "twoway/threeway.hpp"

#include <functional>
#include <optional>

#include "twoway/comparison_tree.hpp"

namespace twoway {

ThreeWayTree ThreeWayTree::interval_leaf(int a) {
    ThreeWayTree t;
    t.nodes_.push_back({true, a});
    t.root_ = 0;
    return t;
}

ThreeWayTree::NodeId ThreeWayTree::graft(const ThreeWayTree& other) {
    const int offset = node_count();
    for (Node n : other.nodes_) {
        if (n.left >= 0) n.left += offset;
        if (n.right >= 0) n.right += offset;
        nodes_.push_back(n);
    }
    return other.root_ + offset;
}

ThreeWayTree ThreeWayTree::compare(int r, const ThreeWayTree& left, const ThreeWayTree& right) {
    ThreeWayTree t;
    NodeId l = t.graft(left);
    NodeId rr = t.graft(right);
    t.nodes_.push_back({false, r, l, rr});
    t.root_ = t.node_count() - 1;
    return t;
}

namespace {

template <typename Num>
ThreeWayResult run_threeway(const Instance& inst) {
    const int n = inst.size();
    const auto idx = [n](int a, int b) { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(b); };
    // Range (a, b): intervals a .. b and keys a+1 .. b.
    std::vector<Num> cost(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), Num(0));
    std::vector<Num> weight(cost.size(), Num(0));
    std::vector<int> root(cost.size(), 0);

    for (int a = 0; a <= n; ++a) {
        weight[idx(a, a)] = convert<Num>(inst.gap_weight(a));
        for (int b = a + 1; b <= n; ++b)
            weight[idx(a, b)] = weight[idx(a, b - 1)] + convert<Num>(inst.key_weight(b)) + convert<Num>(inst.gap_weight(b));
    }

    for (int len = 1; len <= n; ++len) {
        for (int a = 0; a + len <= n; ++a) {
            const int b = a + len;
            std::optional<Num> best;
            int best_root = 0;
            for (int r = a + 1; r <= b; ++r) {
                Num c = cost[idx(a, r - 1)] + cost[idx(r, b)];
                if (!best || c < *best) {
                    best = c;
                    best_root = r;
                }
            }
            cost[idx(a, b)] = weight[idx(a, b)] + *best;
            root[idx(a, b)] = best_root;
        }
    }

    std::function<ThreeWayTree(int, int)> build = [&](int a, int b) {
        if (a == b) return ThreeWayTree::interval_leaf(a);
        const int r = root[idx(a, b)];
        return ThreeWayTree::compare(r, build(a, r - 1), build(r, b));
    };
    return {to_weight(cost[idx(0, n)]), build(0, n)};
}

template <typename Num>
Weight threeway_cost(const ThreeWayTree& tree, const Instance& inst) {
    Num total = 0;
    std::function<void(ThreeWayTree::NodeId, int, int, int)> rec = [&](ThreeWayTree::NodeId id, int depth, int a,
                                                                          int b) {
        const auto& node = tree.node(id);
        if (node.is_leaf) {
            if (a != b || node.index != a)
                throw TreeError("three-way leaf for interval " + std::to_string(node.index) +
                                " sits where range (" + std::to_string(a) + "," + std::to_string(b) + ") belongs");
            total += convert<Num>(inst.gap_weight(a)) * depth;
            return;
        }
        const int r = node.index;
        if (r <= a || r > b)
            throw TreeError("three-way comparison on key " + std::to_string(r) + " outside its range");
        total += convert<Num>(inst.key_weight(r)) * (depth + 1);
        rec(node.left, depth + 1, a, r - 1);
        rec(node.right, depth + 1, r, b);
    };
    rec(tree.root(), 0, 0, inst.size());
    return to_weight(total);
}

} // namespace

ThreeWayResult solve_threeway(const Instance& inst, ArithmeticMode mode) {
    if (inst.variant() != Variant::Full) throw std::invalid_argument("three-way baseline needs a full-variant instance");
    return mode == ArithmeticMode::Exact ? run_threeway<Rational>(inst) : run_threeway<double>(inst);
}

Weight evaluate_threeway_cost(const ThreeWayTree& tree, const Instance& inst, ArithmeticMode mode) {
    if (tree.node_count() == 0) throw TreeError("empty three-way tree");
    return mode == ArithmeticMode::Exact ? threeway_cost<Rational>(tree, inst) : threeway_cost<double>(tree, inst);
}

} // namespace twoway
