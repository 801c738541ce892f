#pragma once

// A small expression language for tautological elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'g' | 'p' integer | 'q' integer | '(' expr ')'
//
// No implicit multiplication. '/' only divides by a nonzero rational
// constant, which is how "1/2*p1" and similar printed forms read back.

#include "tautcalc/taut_ring.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautcalc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message);
    /// Byte offset into the input where the problem was detected.
    std::size_t offset() const { return offset_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

struct Expression {
    enum class Kind { Number, Genus, Generator, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind = Kind::Number;
    std::size_t offset = 0;
    Rational number;                       // Number
    Generator generator{GenKind::P, 1};    // Generator
    int exponent = 0;                      // Pow
    std::vector<std::shared_ptr<const Expression>> children;
};

Expression parse(const std::string& text);

/// Prints with the minimal parentheses needed to re-parse to the same tree.
std::string print(const Expression& e);

/// Throws ParseError when a divisor is not a nonzero rational constant.
TautElement evaluate(const Expression& e);

/// parse + evaluate.
TautElement parse_element(const std::string& text);

}  // namespace tautcalc
