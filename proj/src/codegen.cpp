#include "twoway/codegen.hpp"

#include <sstream>

namespace twoway {

DispatchStyle parse_dispatch_style(std::string_view text) {
    if (text == "c-like") return DispatchStyle::CLike;
    if (text == "pseudocode") return DispatchStyle::Pseudocode;
    throw std::invalid_argument("unknown dispatch style '" + std::string(text) + "'");
}

namespace {

class Emitter {
public:
    Emitter(const ComparisonTree& tree, const Instance& inst, DispatchStyle style)
        : tree_(tree), inst_(inst), style_(style) {}

    std::string run() {
        emit(tree_.root(), 0);
        return out_.str();
    }

private:
    std::string literal(int b) const {
        const Rational& k = inst_.key(b);
        std::string text = format_rational(k);
        if (style_ == DispatchStyle::CLike && text.find('/') != std::string::npos)
            return "((double)" + k.get_num().get_str() + " / " + k.get_den().get_str() + ")";
        return text;
    }

    void line(int depth, const std::string& text) { out_ << std::string(static_cast<std::size_t>(depth) * 2, ' ') << text << '\n'; }

    void emit(ComparisonTree::NodeId id, int depth) {
        const auto& n = tree_.node(id);
        const bool c_like = style_ == DispatchStyle::CLike;
        if (n.is_leaf()) {
            if ((n.kind == ComparisonTree::Kind::KeyLeaf && !inst_.valid_key(n.index)) ||
                (n.kind == ComparisonTree::Kind::IntervalLeaf && !inst_.valid_gap(n.index)))
                throw TreeError("dispatch tree references an unknown key or interval");
            std::string label = n.kind == ComparisonTree::Kind::KeyLeaf ? literal(n.index)
                                                                        : "GAP_" + std::to_string(n.index);
            line(depth, "return " + label + (c_like ? ";" : ""));
            return;
        }
        if (!inst_.valid_key(n.index)) throw TreeError("dispatch tree compares against an unknown key");
        const std::string op = n.kind == ComparisonTree::Kind::Less ? " < " : " == ";
        const std::string test = "if (q" + op + literal(n.index) + ")";
        line(depth, c_like ? test + " {" : test + " then");
        emit(n.yes, depth + 1);
        line(depth, c_like ? "} else {" : "else");
        emit(n.no, depth + 1);
        line(depth, c_like ? "}" : "end");
    }

    const ComparisonTree& tree_;
    const Instance& inst_;
    DispatchStyle style_;
    std::ostringstream out_;
};

} // namespace

std::string emit_dispatch(const ComparisonTree& tree, const Instance& inst, DispatchStyle style) {
    return Emitter(tree, inst, style).run();
}

} // namespace twoway
