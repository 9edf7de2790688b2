#include "fcable/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace fcable {

namespace {

enum class Op {
    number, variable_x, variable_y, variable_t, constant_pi,
    negate, add, sub, mul, div, pow_op,
    fn_sin, fn_cos, fn_exp, fn_sqrt, fn_gamma, fn_pow,
};

bool is_binary_fn(Op op) { return op == Op::fn_pow; }
bool is_unary_fn(Op op) {
    return op == Op::fn_sin || op == Op::fn_cos || op == Op::fn_exp ||
           op == Op::fn_sqrt || op == Op::fn_gamma;
}

}  // namespace

namespace detail {

struct Node {
    Op op;
    double value = 0.0;  // for Op::number
    std::unique_ptr<Node> lhs, rhs;

    static std::unique_ptr<Node> make(Op op, std::unique_ptr<Node> l = nullptr,
                                      std::unique_ptr<Node> r = nullptr) {
        auto n = std::make_unique<Node>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }
    std::unique_ptr<Node> clone() const {
        auto n = std::make_unique<Node>();
        n->op = op;
        n->value = value;
        if (lhs) n->lhs = lhs->clone();
        if (rhs) n->rhs = rhs->clone();
        return n;
    }
};

}  // namespace detail

struct Expression::Impl {
    std::unique_ptr<detail::Node> root;
};

namespace {

using detail::Node;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<Node> run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::unique_ptr<Node> parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            if (eat('+')) lhs = Node::make(Op::add, std::move(lhs), parse_term());
            else if (eat('-')) lhs = Node::make(Op::sub, std::move(lhs), parse_term());
            else return lhs;
        }
    }

    std::unique_ptr<Node> parse_term() {
        auto lhs = parse_unary();
        for (;;) {
            if (eat('*')) lhs = Node::make(Op::mul, std::move(lhs), parse_unary());
            else if (eat('/')) lhs = Node::make(Op::div, std::move(lhs), parse_unary());
            else return lhs;
        }
    }

    // Unary minus binds looser than ^: -t^2 is -(t^2).
    std::unique_ptr<Node> parse_unary() {
        if (eat('-')) return Node::make(Op::negate, parse_unary());
        return parse_power();
    }

    std::unique_ptr<Node> parse_power() {
        auto base = parse_atom();
        if (eat('^'))  // right-associative
            return Node::make(Op::pow_op, std::move(base), parse_unary());
        return base;
    }

    std::unique_ptr<Node> parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected operand", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_identifier();
        throw ParseError("unexpected character", pos_);
    }

    std::unique_ptr<Node> parse_number() {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc())
            throw ParseError("malformed number", pos_);
        pos_ = ptr - text_.data();
        auto n = Node::make(Op::number);
        n->value = value;
        return n;
    }

    std::unique_ptr<Node> parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return Node::make(Op::variable_x);
        if (name == "y") return Node::make(Op::variable_y);
        if (name == "t") return Node::make(Op::variable_t);
        if (name == "pi") return Node::make(Op::constant_pi);

        Op fn;
        if (name == "sin") fn = Op::fn_sin;
        else if (name == "cos") fn = Op::fn_cos;
        else if (name == "exp") fn = Op::fn_exp;
        else if (name == "sqrt") fn = Op::fn_sqrt;
        else if (name == "gamma") fn = Op::fn_gamma;
        else if (name == "pow") fn = Op::fn_pow;
        else throw ParseError("unknown identifier '" + std::string(name) + "'", start);

        if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
        auto first = parse_expr();
        if (is_binary_fn(fn)) {
            if (!eat(',')) throw ParseError("expected ',' (function takes two arguments)", pos_);
            auto second = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return Node::make(fn, std::move(first), std::move(second));
        }
        if (eat(',')) throw ParseError("function takes one argument", pos_ - 1);
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        return Node::make(fn, std::move(first));
    }
};

double eval_node(const Node& n, double x, double y, double t) {
    switch (n.op) {
        case Op::number: return n.value;
        case Op::variable_x: return x;
        case Op::variable_y: return y;
        case Op::variable_t: return t;
        case Op::constant_pi: return std::numbers::pi;
        case Op::negate: return -eval_node(*n.lhs, x, y, t);
        case Op::add: return eval_node(*n.lhs, x, y, t) + eval_node(*n.rhs, x, y, t);
        case Op::sub: return eval_node(*n.lhs, x, y, t) - eval_node(*n.rhs, x, y, t);
        case Op::mul: return eval_node(*n.lhs, x, y, t) * eval_node(*n.rhs, x, y, t);
        case Op::div: return eval_node(*n.lhs, x, y, t) / eval_node(*n.rhs, x, y, t);
        case Op::pow_op:
        case Op::fn_pow:
            return std::pow(eval_node(*n.lhs, x, y, t), eval_node(*n.rhs, x, y, t));
        case Op::fn_sin: return std::sin(eval_node(*n.lhs, x, y, t));
        case Op::fn_cos: return std::cos(eval_node(*n.lhs, x, y, t));
        case Op::fn_exp: return std::exp(eval_node(*n.lhs, x, y, t));
        case Op::fn_sqrt: return std::sqrt(eval_node(*n.lhs, x, y, t));
        case Op::fn_gamma: return std::tgamma(eval_node(*n.lhs, x, y, t));
    }
    return 0.0;
}

std::string print_node(const Node& n) {
    auto fn1 = [&](const char* name) { return std::string(name) + "(" + print_node(*n.lhs) + ")"; };
    switch (n.op) {
        case Op::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            return buf;
        }
        case Op::variable_x: return "x";
        case Op::variable_y: return "y";
        case Op::variable_t: return "t";
        case Op::constant_pi: return "pi";
        case Op::negate: return "(-" + print_node(*n.lhs) + ")";
        case Op::add: return "(" + print_node(*n.lhs) + " + " + print_node(*n.rhs) + ")";
        case Op::sub: return "(" + print_node(*n.lhs) + " - " + print_node(*n.rhs) + ")";
        case Op::mul: return "(" + print_node(*n.lhs) + " * " + print_node(*n.rhs) + ")";
        case Op::div: return "(" + print_node(*n.lhs) + " / " + print_node(*n.rhs) + ")";
        case Op::pow_op: return "(" + print_node(*n.lhs) + " ^ " + print_node(*n.rhs) + ")";
        case Op::fn_pow:
            return "pow(" + print_node(*n.lhs) + ", " + print_node(*n.rhs) + ")";
        case Op::fn_sin: return fn1("sin");
        case Op::fn_cos: return fn1("cos");
        case Op::fn_exp: return fn1("exp");
        case Op::fn_sqrt: return fn1("sqrt");
        case Op::fn_gamma: return fn1("gamma");
    }
    return {};
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    auto impl = std::make_unique<Impl>();
    impl->root = Parser(text).run();
    return Expression(std::move(impl));
}

double Expression::eval(double x, double y, double t) const {
    return eval_node(*impl_->root, x, y, t);
}

std::string Expression::str() const { return print_node(*impl_->root); }

Expression::Expression(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::Expression(const Expression& o) : impl_(std::make_unique<Impl>()) {
    impl_->root = o.impl_->root->clone();
}
Expression& Expression::operator=(const Expression& o) {
    impl_->root = o.impl_->root->clone();
    return *this;
}
Expression::~Expression() = default;

}  // namespace fcable
