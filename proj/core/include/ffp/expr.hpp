#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ffp/scalar.hpp"

namespace ffp {

/// A small arithmetic expression over the variables x and y: scalar literals,
/// + - * /, parentheses, min(e1,e2) and sqrt(e). Evaluation is exact whenever
/// the operands are exact (sqrt falls back to an approximate value when the
/// root leaves the tower).
class Expr {
public:
    static Expr parse(std::string_view text);

    Scalar eval(const Scalar& x) const;
    Scalar eval(const Scalar& x, const Scalar& y) const;

    const std::string& text() const { return text_; }
    bool uses_y() const;

private:
    struct Node;
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace ffp
