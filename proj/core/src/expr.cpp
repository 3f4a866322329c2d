#include "ffp/expr.hpp"

#include <cctype>
#include <vector>

namespace ffp {

struct Expr::Node {
    enum class Kind { Literal, VarX, VarY, Add, Sub, Mul, Div, Neg, Min, Sqrt };
    Kind kind;
    Scalar literal;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        auto n = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ExpressionError("trailing input in expression: " + std::string(text_));
        return n;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    static NodePtr make(Expr::Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
        auto n = std::make_shared<Expr::Node>();
        n->kind = k;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    NodePtr sum() {
        auto n = product();
        for (;;) {
            if (eat('+'))
                n = make(Expr::Node::Kind::Add, n, product());
            else if (eat('-'))
                n = make(Expr::Node::Kind::Sub, n, product());
            else
                return n;
        }
    }

    NodePtr product() {
        auto n = unary();
        for (;;) {
            if (eat('*'))
                n = make(Expr::Node::Kind::Mul, n, unary());
            else if (eat('/'))
                n = make(Expr::Node::Kind::Div, n, unary());
            else
                return n;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Expr::Node::Kind::Neg, unary());
        return atom();
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ExpressionError("unexpected end of expression");
        if (eat('(')) {
            auto n = sum();
            if (!eat(')')) throw ExpressionError("missing ')' in expression");
            return n;
        }
        if (eat_word("min")) {
            if (!eat('(')) throw ExpressionError("min requires '('");
            auto l = sum();
            if (!eat(',')) throw ExpressionError("min requires two arguments");
            auto r = sum();
            if (!eat(')')) throw ExpressionError("missing ')' after min");
            return make(Expr::Node::Kind::Min, l, r);
        }
        if (eat_word("sqrt")) {
            if (!eat('(')) throw ExpressionError("sqrt requires '('");
            auto a = sum();
            if (!eat(')')) throw ExpressionError("missing ')' after sqrt");
            return make(Expr::Node::Kind::Sqrt, a);
        }
        if (eat_word("inv_sqrt2")) {
            auto n = make(Expr::Node::Kind::Literal);
            const_cast<Expr::Node*>(n.get())->literal = Scalar::inv_sqrt2();
            return n;
        }
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return make(Expr::Node::Kind::VarX);
        }
        if (c == 'y') {
            ++pos_;
            return make(Expr::Node::Kind::VarY);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            auto n = make(Expr::Node::Kind::Literal);
            try {
                const_cast<Expr::Node*>(n.get())->literal =
                    Scalar::parse(text_.substr(start, pos_ - start));
            } catch (const ParseError& e) {
                throw ExpressionError(e.what());
            }
            return n;
        }
        throw ExpressionError("unexpected character '" + std::string(1, c) + "' in expression");
    }
};

Scalar eval_node(const Expr::Node& n, const Scalar& x, const Scalar* y) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
        case K::Literal: return n.literal;
        case K::VarX: return x;
        case K::VarY:
            if (!y) throw ExpressionError("expression uses y but no y was supplied");
            return *y;
        case K::Add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
        case K::Sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
        case K::Mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
        case K::Div: return eval_node(*n.lhs, x, y) / eval_node(*n.rhs, x, y);
        case K::Neg: return -eval_node(*n.lhs, x, y);
        case K::Min: return min(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
        case K::Sqrt: return eval_node(*n.lhs, x, y).sqrt_or_approx();
    }
    throw ExpressionError("corrupt expression node");
}

bool node_uses_y(const Expr::Node& n) {
    if (n.kind == Expr::Node::Kind::VarY) return true;
    if (n.lhs && node_uses_y(*n.lhs)) return true;
    if (n.rhs && node_uses_y(*n.rhs)) return true;
    return false;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
    Expr e;
    e.root_ = Parser(text).parse();
    e.text_ = std::string(text);
    return e;
}

Scalar Expr::eval(const Scalar& x) const { return eval_node(*root_, x, nullptr); }

Scalar Expr::eval(const Scalar& x, const Scalar& y) const { return eval_node(*root_, x, &y); }

bool Expr::uses_y() const { return node_uses_y(*root_); }

}  // namespace ffp
