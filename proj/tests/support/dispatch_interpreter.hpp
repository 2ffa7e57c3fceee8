#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twoway/comparison_tree.hpp"
#include "twoway/weight.hpp"

namespace twoway::testing {

/// Reads back text produced by emit_dispatch (either style) and runs it on
/// a query. Deliberately knows nothing about ComparisonTree.
class DispatchProgram {
public:
    struct Gap {
        int index;
        friend bool operator==(const Gap&, const Gap&) = default;
    };
    using Outcome = std::variant<Rational, Gap>;

    explicit DispatchProgram(std::string_view text) {
        tokenize(text);
        root_ = statement();
        if (pos_ != tokens_.size()) fail("trailing tokens");
    }

    Outcome run(const Rational& q) const {
        const Stmt* s = root_.get();
        while (!s->is_return) {
            bool taken = s->less ? q < s->value : q == s->value;
            s = taken ? s->yes.get() : s->no.get();
        }
        return s->result;
    }

    int conditional_count() const { return conditionals_; }

private:
    struct Stmt {
        bool is_return = false;
        Outcome result;
        bool less = false;
        Rational value;
        std::unique_ptr<Stmt> yes, no;
    };

    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("dispatch parse error at token " + std::to_string(pos_) + ": " + why);
    }

    void tokenize(std::string_view text) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                           text[j] == '.' || (j == i && text[j] == '-')))
                    ++j;
                tokens_.emplace_back(text.substr(i, j - i));
                i = j;
            } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
                tokens_.emplace_back("==");
                i += 2;
            } else {
                tokens_.emplace_back(1, c);
                ++i;
            }
        }
    }

    const std::string& peek() const {
        static const std::string end = "<eof>";
        return pos_ < tokens_.size() ? tokens_[pos_] : end;
    }
    std::string take() {
        if (pos_ >= tokens_.size()) fail("unexpected end");
        return tokens_[pos_++];
    }
    void expect(const std::string& t) {
        if (take() != t) fail("expected '" + t + "'");
    }
    bool accept(const std::string& t) {
        if (peek() != t) return false;
        ++pos_;
        return true;
    }

    Rational number() {
        Rational v = parse_rational(take());
        if (accept("/")) v /= parse_rational(take());
        return v;
    }

    Rational value() {
        if (accept("(")) {
            expect("(");
            expect("double");
            expect(")");
            Rational v = number();
            expect(")");
            return v;
        }
        return number();
    }

    std::unique_ptr<Stmt> statement() {
        auto s = std::make_unique<Stmt>();
        if (accept("return")) {
            s->is_return = true;
            if (peek().rfind("GAP_", 0) == 0)
                s->result = Gap{std::stoi(take().substr(4))};
            else
                s->result = value();
            accept(";");
            return s;
        }
        expect("if");
        expect("(");
        expect("q");
        std::string op = take();
        if (op != "<" && op != "==") fail("unknown operator " + op);
        s->less = op == "<";
        s->value = value();
        expect(")");
        ++conditionals_;
        if (accept("{")) {
            s->yes = statement();
            expect("}");
            expect("else");
            expect("{");
            s->no = statement();
            expect("}");
        } else {
            expect("then");
            s->yes = statement();
            expect("else");
            s->no = statement();
            expect("end");
        }
        return s;
    }

    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    int conditionals_ = 0;
    std::unique_ptr<Stmt> root_;
};

/// What identify() says, in the interpreter's terms.
inline DispatchProgram::Outcome expected_outcome(const LeafLabel& label, const Instance& inst) {
    if (label.is_key()) return inst.key(label.index);
    return DispatchProgram::Gap{label.index};
}

} // namespace twoway::testing
