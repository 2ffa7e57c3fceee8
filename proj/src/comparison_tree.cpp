#include "twoway/comparison_tree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace twoway {

using nlohmann::json;

std::string describe(const LeafLabel& label, const Instance& inst) {
    if (label.is_key()) return format_rational(inst.key(label.index));
    return describe_gap(inst, label.index);
}

ComparisonTree ComparisonTree::key_leaf(int b) {
    ComparisonTree t;
    t.nodes_.push_back({Kind::KeyLeaf, b});
    t.root_ = 0;
    return t;
}

ComparisonTree ComparisonTree::interval_leaf(int a) {
    ComparisonTree t;
    t.nodes_.push_back({Kind::IntervalLeaf, a});
    t.root_ = 0;
    return t;
}

ComparisonTree ComparisonTree::leaf(const LeafLabel& label) {
    return label.is_key() ? key_leaf(label.index) : interval_leaf(label.index);
}

ComparisonTree::NodeId ComparisonTree::graft(const ComparisonTree& other) {
    const int offset = node_count();
    for (Node n : other.nodes_) {
        if (n.yes >= 0) n.yes += offset;
        if (n.no >= 0) n.no += offset;
        nodes_.push_back(n);
    }
    return other.root_ + offset;
}

namespace {

ComparisonTree::Kind comparison_kind(bool equality) {
    return equality ? ComparisonTree::Kind::Equal : ComparisonTree::Kind::Less;
}

} // namespace

ComparisonTree ComparisonTree::less(int b, const ComparisonTree& yes, const ComparisonTree& no) {
    ComparisonTree t;
    t.nodes_.reserve(static_cast<std::size_t>(yes.node_count() + no.node_count() + 1));
    NodeId y = t.graft(yes);
    NodeId n = t.graft(no);
    t.nodes_.push_back({comparison_kind(false), b, y, n});
    t.root_ = t.node_count() - 1;
    return t;
}

ComparisonTree ComparisonTree::equal(int b, const ComparisonTree& yes, const ComparisonTree& no) {
    ComparisonTree t = less(b, yes, no);
    t.nodes_.back().kind = Kind::Equal;
    return t;
}

int ComparisonTree::internal_count() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.is_leaf(); }));
}

int ComparisonTree::height() const {
    std::function<int(NodeId)> rec = [&](NodeId id) -> int {
        const Node& n = node(id);
        if (n.is_leaf()) return 0;
        return 1 + std::max(rec(n.yes), rec(n.no));
    };
    return rec(root_);
}

std::vector<LeafLabel> ComparisonTree::leaves() const {
    std::vector<LeafLabel> out;
    std::function<void(NodeId)> rec = [&](NodeId id) {
        const Node& n = node(id);
        if (n.is_leaf()) {
            out.push_back(n.label());
            return;
        }
        rec(n.yes);
        rec(n.no);
    };
    rec(root_);
    return out;
}

ComparisonTree ComparisonTree::subtree(NodeId id) const {
    const Node& n = node(id);
    if (n.is_leaf()) return leaf(n.label());
    ComparisonTree yes = subtree(n.yes);
    ComparisonTree no = subtree(n.no);
    return n.kind == Kind::Equal ? equal(n.index, yes, no) : less(n.index, yes, no);
}

ComparisonTree ComparisonTree::with_swapped_leaves(const LeafLabel& a, const LeafLabel& b) const {
    ComparisonTree t = *this;
    for (Node& n : t.nodes_) {
        if (!n.is_leaf()) continue;
        LeafLabel l = n.label();
        LeafLabel target = l == a ? b : l == b ? a : l;
        n.kind = target.is_key() ? Kind::KeyLeaf : Kind::IntervalLeaf;
        n.index = target.index;
    }
    return t;
}

bool operator==(const ComparisonTree& lhs, const ComparisonTree& rhs) {
    if (lhs.node_count() != rhs.node_count()) return false;
    if (lhs.root_ < 0 || rhs.root_ < 0) return lhs.root_ == rhs.root_;
    std::function<bool(ComparisonTree::NodeId, ComparisonTree::NodeId)> same =
        [&](ComparisonTree::NodeId a, ComparisonTree::NodeId b) {
            const auto& x = lhs.node(a);
            const auto& y = rhs.node(b);
            if (x.kind != y.kind || x.index != y.index) return false;
            if (x.is_leaf()) return true;
            return same(x.yes, y.yes) && same(x.no, y.no);
        };
    return same(lhs.root_, rhs.root_);
}

LeafLabel identify(const ComparisonTree& tree, const Instance& inst, const Rational& q) {
    ComparisonTree::NodeId id = tree.root();
    for (;;) {
        const auto& n = tree.node(id);
        if (n.is_leaf()) return n.label();
        bool outcome = n.kind == ComparisonTree::Kind::Less ? q < inst.key(n.index) : q == inst.key(n.index);
        id = outcome ? n.yes : n.no;
    }
}

namespace {

template <typename Num>
struct CostSums {
    Num by_depth = 0;
    Num by_internal = 0;
};

void check_leaf(const ComparisonTree::Node& n, const Instance& inst) {
    if (n.kind == ComparisonTree::Kind::KeyLeaf && !inst.valid_key(n.index))
        throw TreeError("leaf references key index " + std::to_string(n.index) + " out of range");
    if (n.kind == ComparisonTree::Kind::IntervalLeaf && !inst.valid_gap(n.index))
        throw TreeError("leaf references interval index " + std::to_string(n.index) + " out of range");
}

template <typename Num>
Num leaf_weight(const ComparisonTree::Node& n, const Instance& inst) {
    if (n.kind == ComparisonTree::Kind::KeyLeaf) return convert<Num>(inst.key_weight(n.index));
    return inst.variant() == Variant::Full ? convert<Num>(inst.gap_weight(n.index)) : Num(0);
}

template <typename Num>
CostReport evaluate(const ComparisonTree& tree, const Instance& inst) {
    CostSums<Num> sums;
    CostReport report;
    // Returns the subtree weight.
    std::function<Num(ComparisonTree::NodeId, int)> rec = [&](ComparisonTree::NodeId id, int depth) -> Num {
        const auto& n = tree.node(id);
        if (n.is_leaf()) {
            check_leaf(n, inst);
            Num w = leaf_weight<Num>(n, inst);
            sums.by_depth += w * depth;
            report.leaf_depths.push_back({n.label(), depth});
            return w;
        }
        if (!inst.valid_key(n.index))
            throw TreeError("comparison references key index " + std::to_string(n.index) + " out of range");
        Num w = rec(n.yes, depth + 1);
        w += rec(n.no, depth + 1);
        sums.by_internal += w;
        return w;
    };
    rec(tree.root(), 0);

    if constexpr (std::is_same_v<Num, Rational>) {
        if (sums.by_depth != sums.by_internal) throw std::logic_error("cost forms disagree");
    } else {
        if (std::fabs(sums.by_depth - sums.by_internal) > 1e-9) throw std::logic_error("cost forms disagree");
    }
    report.total_cost = to_weight(sums.by_depth);
    return report;
}

} // namespace

CostReport evaluate_cost(const ComparisonTree& tree, const Instance& inst, ArithmeticMode mode) {
    if (mode == ArithmeticMode::Exact) return evaluate<Rational>(tree, inst);
    return evaluate<double>(tree, inst);
}

HandlesReport handles(const ComparisonTree& tree, const Instance& inst, const QuerySet& set) {
    HandlesReport report;
    auto& v = report.violations;

    std::vector<LeafLabel> expected;
    for (int b : set.keys) expected.push_back(LeafLabel::key(b));
    for (int a : set.gaps) expected.push_back(LeafLabel::interval(a));
    std::sort(expected.begin(), expected.end());

    std::vector<LeafLabel> actual = tree.leaves();
    for (const auto& l : actual) {
        if ((l.is_key() && !inst.valid_key(l.index)) || (!l.is_key() && !inst.valid_gap(l.index))) {
            v.push_back("leaf with out-of-range index " + std::to_string(l.index));
            return report;
        }
    }
    for (int id = 0; id < tree.node_count(); ++id) {
        const auto& n = tree.node(id);
        if (!n.is_leaf() && !inst.valid_key(n.index)) {
            v.push_back("comparison with out-of-range key index " + std::to_string(n.index));
            return report;
        }
    }
    std::sort(actual.begin(), actual.end());

    std::vector<LeafLabel> missing;
    std::vector<LeafLabel> extra;
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    for (const auto& l : missing) v.push_back("missing leaf " + describe(l, inst));
    for (const auto& l : extra) v.push_back("unexpected or duplicate leaf " + describe(l, inst));

    for (int b : set.keys) {
        LeafLabel got = identify(tree, inst, inst.key(b));
        if (got != LeafLabel::key(b))
            v.push_back("query " + format_rational(inst.key(b)) + " reaches leaf " + describe(got, inst));
    }
    if (inst.variant() == Variant::Full) {
        for (int a : set.gaps) {
            Rational q = gap_representative(inst, a);
            LeafLabel got = identify(tree, inst, q);
            if (got != LeafLabel::interval(a))
                v.push_back("query " + format_rational(q) + " in " + describe_gap(inst, a) + " reaches leaf " +
                            describe(got, inst));
        }
    }
    return report;
}

HandlesReport handles(const ComparisonTree& tree, const Instance& inst) {
    return handles(tree, inst, QuerySet::whole(inst));
}

TreeFormat parse_tree_format(std::string_view text) {
    if (text == "structured") return TreeFormat::Structured;
    if (text == "dot") return TreeFormat::Dot;
    throw std::invalid_argument("unknown tree format '" + std::string(text) + "'");
}

namespace {

json key_json(const Rational& key) {
    if (key.get_den() == 1 && key.get_num().fits_slong_p()) return key.get_num().get_si();
    return format_rational(key);
}

json to_json(const ComparisonTree& tree, ComparisonTree::NodeId id, const Instance& inst) {
    const auto& n = tree.node(id);
    using Kind = ComparisonTree::Kind;
    switch (n.kind) {
    case Kind::KeyLeaf:
        return json{{"key", key_json(inst.key(n.index))}};
    case Kind::IntervalLeaf: {
        json lo = n.index == 0 ? json("-inf") : key_json(inst.key(n.index));
        json hi = n.index == inst.size() ? json("+inf") : key_json(inst.key(n.index + 1));
        return json{{"interval", json::array({lo, hi})}};
    }
    case Kind::Less:
    case Kind::Equal:
        return json{{"op", n.kind == Kind::Less ? "lt" : "eq"},
                    {"key", key_json(inst.key(n.index))},
                    {"yes", to_json(tree, n.yes, inst)},
                    {"no", to_json(tree, n.no, inst)}};
    }
    throw std::logic_error("unreachable");
}

std::string dot_label(const ComparisonTree::Node& n, const Instance& inst) {
    using Kind = ComparisonTree::Kind;
    switch (n.kind) {
    case Kind::Less: return "q<" + format_rational(inst.key(n.index));
    case Kind::Equal: return "q=" + format_rational(inst.key(n.index));
    default: return describe(n.label(), inst);
    }
}

std::string to_dot(const ComparisonTree& tree, const Instance& inst) {
    std::ostringstream out;
    out << "digraph tree {\n";
    std::function<void(ComparisonTree::NodeId)> rec = [&](ComparisonTree::NodeId id) {
        const auto& n = tree.node(id);
        out << "  n" << id << " [label=\"" << dot_label(n, inst) << "\"" << (n.is_leaf() ? ", shape=box" : "")
            << "];\n";
        if (n.is_leaf()) return;
        rec(n.yes);
        rec(n.no);
        out << "  n" << id << " -> n" << n.yes << " [label=\"yes\"];\n";
        out << "  n" << id << " -> n" << n.no << " [label=\"no\"];\n";
    };
    rec(tree.root());
    out << "}\n";
    return out.str();
}

Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number()) return parse_rational(v.dump());
    throw TreeError("expected a key value, got " + v.dump());
}

int key_index_of(const json& v, const Instance& inst) {
    Rational value;
    try {
        value = rational_from_json(v);
    } catch (const std::invalid_argument& e) {
        throw TreeError(e.what());
    }
    const auto& keys = inst.keys();
    auto it = std::lower_bound(keys.begin(), keys.end(), value);
    if (it == keys.end() || *it != value) throw TreeError("tree names unknown key " + v.dump());
    return static_cast<int>(it - keys.begin()) + 1;
}

ComparisonTree from_json(const json& j, const Instance& inst) {
    if (!j.is_object()) throw TreeError("tree node must be an object, got " + j.dump());
    if (j.contains("op")) {
        for (const auto& [name, _] : j.items())
            if (name != "op" && name != "key" && name != "yes" && name != "no")
                throw TreeError("internal node must have exactly two children 'yes' and 'no' (found '" + name + "')");
        if (!j.contains("key") || !j.contains("yes") || !j.contains("no"))
            throw TreeError("internal node needs 'key', 'yes' and 'no'");
        const auto& op = j["op"];
        if (!op.is_string() || (op != "lt" && op != "eq")) throw TreeError("op must be \"lt\" or \"eq\"");
        int b = key_index_of(j["key"], inst);
        ComparisonTree yes = from_json(j["yes"], inst);
        ComparisonTree no = from_json(j["no"], inst);
        return op == "lt" ? ComparisonTree::less(b, yes, no) : ComparisonTree::equal(b, yes, no);
    }
    if (j.size() != 1) throw TreeError("leaf must have exactly one field: " + j.dump());
    if (j.contains("key")) return ComparisonTree::key_leaf(key_index_of(j["key"], inst));
    if (j.contains("interval")) {
        const auto& iv = j["interval"];
        if (!iv.is_array() || iv.size() != 2) throw TreeError("interval must be [lo, hi]");
        int a = iv[0] == "-inf" ? 0 : key_index_of(iv[0], inst);
        int hi = iv[1] == "+inf" ? inst.size() + 1 : key_index_of(iv[1], inst);
        if (hi != a + 1) throw TreeError("interval " + iv.dump() + " does not span adjacent keys");
        return ComparisonTree::interval_leaf(a);
    }
    throw TreeError("unrecognised tree node " + j.dump());
}

} // namespace

std::string serialize_tree(const ComparisonTree& tree, const Instance& inst, TreeFormat format) {
    if (format == TreeFormat::Dot) return to_dot(tree, inst);
    return to_json(tree, tree.root(), inst).dump(2) + "\n";
}

ComparisonTree parse_tree(std::string_view text, const Instance& inst) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw TreeError(std::string("malformed tree document: ") + e.what());
    }
    return from_json(doc, inst);
}

ComparisonTree read_tree_file(const std::string& path, const Instance& inst) {
    std::ifstream in(path);
    if (!in) throw TreeError("cannot open tree file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str(), inst);
}

} // namespace twoway
