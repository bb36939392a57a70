#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "jet.hpp"

namespace nullfront {

enum class ExprKind { Number, Var, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class FuncId { Sin, Cos, Tan, Sinh, Cosh, Sqrt, Exp, Log, Abs };

struct ExprNode {
    ExprKind kind{};
    double number = 0.0;  // Number
    FuncId func{};        // Call
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

/**
 * Immutable expression in one variable `s`.
 *
 * Grammar, loosest to tightest binding: `+ -` < `* /` < unary `-` < `^`
 * (right-associative).  Identifiers are `s`, `pi` and the function names
 * sin cos tan sinh cosh sqrt exp log abs.  Whitespace is ignored.
 */
class Expr {
public:
    Expr() = default;

    /// Throws SyntaxError / UnknownIdentifier on malformed input.
    static Expr parse(std::string_view src);

    bool empty() const { return root_ == nullptr; }

    double eval(double s) const;
    /// Value and exact derivatives up to order 4 at s. Throws DomainError
    /// when the point is outside the real domain or the result overflows.
    Jet4 eval_jet(double s) const;

    /// Fully parenthesized form; parsing it back yields an identical tree.
    std::string to_string() const;

    bool same_structure(const Expr& other) const;

    /// True when the tree references the variable s.
    bool depends_on_var() const;

    Expr clone() const;

private:
    explicit Expr(std::unique_ptr<ExprNode> root) : root_(std::move(root)) {}
    std::unique_ptr<ExprNode> root_;
};

}  // namespace nullfront
