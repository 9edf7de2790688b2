#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fcable {

/// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};

/// Arithmetic expression over the variables {x, y, t}, the constant pi,
/// the operators + - * / ^ (with unary minus) and the functions
/// sin, cos, exp, pow, gamma, sqrt.
///
/// Precedence: ^ (right-associative) above * / above + -; unary minus
/// binds looser than ^, so -t^2 parses as -(t^2).
class Expression {
public:
    static Expression parse(std::string_view text);  // throws ParseError

    double eval(double x, double y, double t) const;
    std::string str() const;

    Expression(Expression&&) noexcept;
    Expression& operator=(Expression&&) noexcept;
    Expression(const Expression&);
    Expression& operator=(const Expression&);
    ~Expression();

    struct Impl;

private:
    explicit Expression(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

}  // namespace fcable
