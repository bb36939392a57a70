#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "errors.hpp"

namespace nullfront {

namespace {

const std::map<std::string, FuncId, std::less<>> kFunctions = {
    {"sin", FuncId::Sin},   {"cos", FuncId::Cos}, {"tan", FuncId::Tan},
    {"sinh", FuncId::Sinh}, {"cosh", FuncId::Cosh}, {"sqrt", FuncId::Sqrt},
    {"exp", FuncId::Exp},   {"log", FuncId::Log}, {"abs", FuncId::Abs},
};

const char* func_name(FuncId f) {
    switch (f) {
        case FuncId::Sin: return "sin";
        case FuncId::Cos: return "cos";
        case FuncId::Tan: return "tan";
        case FuncId::Sinh: return "sinh";
        case FuncId::Cosh: return "cosh";
        case FuncId::Sqrt: return "sqrt";
        case FuncId::Exp: return "exp";
        case FuncId::Log: return "log";
        case FuncId::Abs: return "abs";
    }
    return "?";
}

using NodePtr = std::unique_ptr<ExprNode>;

NodePtr make_node(ExprKind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        if (src_.empty()) throw SyntaxError(0, "empty expression");
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size())
            throw SyntaxError(pos_, "unexpected trailing input, expected end of expression");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            if (accept('+')) {
                NodePtr n = make_node(ExprKind::Add);
                n->lhs = std::move(lhs);
                n->rhs = parse_product();
                lhs = std::move(n);
            } else if (accept('-')) {
                NodePtr n = make_node(ExprKind::Sub);
                n->lhs = std::move(lhs);
                n->rhs = parse_product();
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                NodePtr n = make_node(ExprKind::Mul);
                n->lhs = std::move(lhs);
                n->rhs = parse_unary();
                lhs = std::move(n);
            } else if (accept('/')) {
                NodePtr n = make_node(ExprKind::Div);
                n->lhs = std::move(lhs);
                n->rhs = parse_unary();
                lhs = std::move(n);
            } else {
                return lhs;
            }
        }
    }

    // Power binds tighter than unary minus: -s^2 is -(s^2).
    NodePtr parse_unary() {
        if (accept('-')) {
            NodePtr n = make_node(ExprKind::Neg);
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) {
            NodePtr n = make_node(ExprKind::Pow);
            n->lhs = std::move(base);
            n->rhs = parse_unary();  // right-associative, exponent may be signed
            return n;
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size())
            throw SyntaxError(pos_, "unexpected end of input, expected a value");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw SyntaxError(pos_, std::string("unexpected character '") + c +
                                    "', expected a number, name or '('");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t e = pos_ + 1;
            if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
            if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
                pos_ = e;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != src_.data() + pos_)
            throw SyntaxError(start, "malformed number literal");
        NodePtr n = make_node(ExprKind::Number);
        n->number = value;
        return n;
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "s") return make_node(ExprKind::Var);
        if (name == "pi") return make_node(ExprKind::Pi);
        const auto it = kFunctions.find(name);
        if (it == kFunctions.end()) throw UnknownIdentifier(start, std::string(name));
        if (!accept('(')) throw SyntaxError(pos_, std::string("expected '(' after '") +
                                                      std::string(name) + "'");
        NodePtr arg = parse_sum();
        if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
        NodePtr n = make_node(ExprKind::Call);
        n->func = it->second;
        n->lhs = std::move(arg);
        return n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

constexpr double kPi = 3.14159265358979323846;

// Scalar shims so one evaluator template covers double and Jet<4>.
inline double sh_var(double s, double) { return s; }
inline Jet4 sh_var(double s, const Jet4&) { return Jet4::variable(s); }
inline double sh_const(double v, double) { return v; }
inline Jet4 sh_const(double v, const Jet4&) { return Jet4::constant(v); }

inline double sh_call(FuncId f, double x) {
    switch (f) {
        case FuncId::Sin: return std::sin(x);
        case FuncId::Cos: return std::cos(x);
        case FuncId::Tan: return std::tan(x);
        case FuncId::Sinh: return std::sinh(x);
        case FuncId::Cosh: return std::cosh(x);
        case FuncId::Sqrt:
            if (x < 0.0) throw DomainError("sqrt of a negative value");
            return std::sqrt(x);
        case FuncId::Exp: return std::exp(x);
        case FuncId::Log:
            if (x <= 0.0) throw DomainError("log of a non-positive value");
            return std::log(x);
        case FuncId::Abs: return std::fabs(x);
    }
    return 0.0;
}

inline Jet4 sh_call(FuncId f, const Jet4& x) {
    switch (f) {
        case FuncId::Sin: return sin(x);
        case FuncId::Cos: return cos(x);
        case FuncId::Tan: return tan(x);
        case FuncId::Sinh: return sinh(x);
        case FuncId::Cosh: return cosh(x);
        case FuncId::Sqrt: return sqrt(x);
        case FuncId::Exp: return exp(x);
        case FuncId::Log: return log(x);
        case FuncId::Abs: return abs(x);
    }
    return Jet4{};
}

inline double sh_pow(double b, double e) {
    if (e == std::floor(e)) return std::pow(b, e);
    if (b <= 0.0) throw DomainError("power with non-integer exponent needs a positive base");
    return std::pow(b, e);
}
inline Jet4 sh_pow(const Jet4& b, double e) { return pow(b, e); }

template <typename T>
T sh_div(const T& a, const T& b) {
    return a / b;
}
template <>
double sh_div(const double& a, const double& b) {
    if (std::fabs(b) <= Jet4::kDivFloor) throw DomainError("division by zero");
    return a / b;
}

template <typename T>
T eval_node(const ExprNode& n, double s, const T& tag) {
    switch (n.kind) {
        case ExprKind::Number: return sh_const(n.number, tag);
        case ExprKind::Var: return sh_var(s, tag);
        case ExprKind::Pi: return sh_const(kPi, tag);
        case ExprKind::Neg: return -eval_node(*n.lhs, s, tag);
        case ExprKind::Add: return eval_node(*n.lhs, s, tag) + eval_node(*n.rhs, s, tag);
        case ExprKind::Sub: return eval_node(*n.lhs, s, tag) - eval_node(*n.rhs, s, tag);
        case ExprKind::Mul: return eval_node(*n.lhs, s, tag) * eval_node(*n.rhs, s, tag);
        case ExprKind::Div:
            return sh_div(eval_node(*n.lhs, s, tag), eval_node(*n.rhs, s, tag));
        case ExprKind::Pow: {
            // Constant exponents keep the integer fast path; a general
            // exponent goes through exp(e*log(b)) and requires base > 0.
            if (n.rhs->kind == ExprKind::Number) return sh_pow(eval_node(*n.lhs, s, tag), n.rhs->number);
            if (n.rhs->kind == ExprKind::Neg && n.rhs->lhs->kind == ExprKind::Number)
                return sh_pow(eval_node(*n.lhs, s, tag), -n.rhs->lhs->number);
            const T b = eval_node(*n.lhs, s, tag);
            const T e = eval_node(*n.rhs, s, tag);
            return sh_call(FuncId::Exp, sh_call(FuncId::Log, b) * e);
        }
        case ExprKind::Call: return sh_call(n.func, eval_node(*n.lhs, s, tag));
    }
    throw DomainError("corrupt expression tree");
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprKind::Number: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            return;
        }
        case ExprKind::Var: out += 's'; return;
        case ExprKind::Pi: out += "pi"; return;
        case ExprKind::Neg:
            out += "(-";
            print_node(*n.lhs, out);
            out += ')';
            return;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div:
        case ExprKind::Pow: {
            const char op = n.kind == ExprKind::Add   ? '+'
                            : n.kind == ExprKind::Sub ? '-'
                            : n.kind == ExprKind::Mul ? '*'
                            : n.kind == ExprKind::Div ? '/'
                                                      : '^';
            out += '(';
            print_node(*n.lhs, out);
            out += op;
            print_node(*n.rhs, out);
            out += ')';
            return;
        }
        case ExprKind::Call:
            out += func_name(n.func);
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
    }
}

bool same_node(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::Number: return a.number == b.number;
        case ExprKind::Var:
        case ExprKind::Pi: return true;
        case ExprKind::Neg: return same_node(*a.lhs, *b.lhs);
        case ExprKind::Call: return a.func == b.func && same_node(*a.lhs, *b.lhs);
        default: return same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
    }
}

bool node_has_var(const ExprNode& n) {
    if (n.kind == ExprKind::Var) return true;
    if (n.lhs && node_has_var(*n.lhs)) return true;
    return n.rhs && node_has_var(*n.rhs);
}

NodePtr clone_node(const ExprNode& n) {
    auto c = std::make_unique<ExprNode>();
    c->kind = n.kind;
    c->number = n.number;
    c->func = n.func;
    if (n.lhs) c->lhs = clone_node(*n.lhs);
    if (n.rhs) c->rhs = clone_node(*n.rhs);
    return c;
}

}  // namespace

Expr Expr::parse(std::string_view src) { return Expr(Parser(src).run()); }

double Expr::eval(double s) const {
    const double v = eval_node<double>(*root_, s, 0.0);
    if (!std::isfinite(v)) throw DomainError("expression evaluated to a non-finite value");
    return v;
}

Jet4 Expr::eval_jet(double s) const {
    const Jet4 j = eval_node<Jet4>(*root_, s, Jet4{});
    if (!j.all_finite()) throw DomainError("expression jet has a non-finite coefficient");
    return j;
}

std::string Expr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool Expr::same_structure(const Expr& other) const {
    if (!root_ || !other.root_) return root_ == other.root_;
    return same_node(*root_, *other.root_);
}

bool Expr::depends_on_var() const { return root_ && node_has_var(*root_); }

Expr Expr::clone() const { return root_ ? Expr(clone_node(*root_)) : Expr(); }

}  // namespace nullfront
