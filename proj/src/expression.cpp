#include "tautcalc/expression.hpp"

#include <cctype>

namespace tautcalc {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), offset_(offset), detail_(message)
{
}

namespace {

using Node = std::shared_ptr<const Expression>;

Node make_node(Expression e) { return std::make_shared<const Expression>(std::move(e)); }

Node binary(Expression::Kind kind, std::size_t offset, Node a, Node b)
{
    Expression e;
    e.kind = kind;
    e.offset = offset;
    e.children = {std::move(a), std::move(b)};
    return make_node(std::move(e));
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Node run()
    {
        skip();
        if (at_end()) throw ParseError(pos_, "empty expression");
        Node e = expr();
        skip();
        if (!at_end()) {
            if (peek() == ')') throw ParseError(pos_, "unbalanced ')'");
            throw ParseError(pos_, std::string("unexpected '") + peek() + "'");
        }
        return e;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // consumes a run of digits, possibly empty
    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Node expr()
    {
        Node lhs = term();
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            std::size_t at = pos_++;
            lhs = binary(c == '+' ? Expression::Kind::Add : Expression::Kind::Sub, at, lhs, term());
        }
    }

    Node term()
    {
        Node lhs = unary();
        for (;;) {
            skip();
            char c = peek();
            if (c != '*' && c != '/') {
                if (c == '(' || c == 'g' || c == 'p' || c == 'q' || std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(pos_, "implicit multiplication is not allowed; use '*'");
                return lhs;
            }
            std::size_t at = pos_++;
            lhs = binary(c == '*' ? Expression::Kind::Mul : Expression::Kind::Div, at, lhs, unary());
        }
    }

    Node unary()
    {
        skip();
        char c = peek();
        if (c == '-' || c == '+') {
            std::size_t at = pos_++;
            Node inner = unary();
            if (c == '+') return inner;
            Expression e;
            e.kind = Expression::Kind::Neg;
            e.offset = at;
            e.children = {inner};
            return make_node(std::move(e));
        }
        return power();
    }

    Node power()
    {
        Node base = atom();
        skip();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        skip();
        std::size_t start = pos_;
        if (peek() == '-') throw ParseError(pos_, "malformed exponent: exponents must be nonnegative integers");
        std::string d = digits();
        if (d.empty()) throw ParseError(start, "malformed exponent: expected a nonnegative integer");
        if (d.size() > 6) throw ParseError(start, "malformed exponent: too large");
        skip();
        if (peek() == '^') throw ParseError(pos_, "malformed exponent: chained '^' needs parentheses");
        Expression e;
        e.kind = Expression::Kind::Pow;
        e.offset = at;
        e.exponent = std::stoi(d);
        e.children = {base};
        return make_node(std::move(e));
    }

    Node atom()
    {
        skip();
        std::size_t start = pos_;
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Node inner = expr();
            skip();
            if (peek() != ')') throw ParseError(start, "unbalanced '('");
            ++pos_;
            return inner;
        }
        if (c == ')') throw ParseError(pos_, "unbalanced ')'");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expression e;
            e.kind = Expression::Kind::Number;
            e.offset = start;
            e.number = Rational(digits());
            return make_node(std::move(e));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
            std::string word = s_.substr(pos_, end - pos_);
            if (word == "g") {
                pos_ = end;
                Expression e;
                e.kind = Expression::Kind::Genus;
                e.offset = start;
                return make_node(std::move(e));
            }
            if ((word[0] == 'p' || word[0] == 'q') && word.size() > 1 &&
                word.find_first_not_of("0123456789", 1) == std::string::npos) {
                std::string idx = word.substr(1);
                if (idx.size() > 6) throw ParseError(start + 1, "generator index too large");
                int i = std::stoi(idx);
                if (i == 0 && word[0] == 'q') throw ParseError(start, "q0 is not a generator (it is the scalar g)");
                if (i == 0) throw ParseError(start, "p0 is not a generator");
                pos_ = end;
                Expression e;
                e.kind = Expression::Kind::Generator;
                e.offset = start;
                e.generator = Generator{word[0] == 'p' ? GenKind::P : GenKind::Q, i};
                return make_node(std::move(e));
            }
            throw ParseError(start, "unknown symbol '" + word + "'");
        }
        throw ParseError(start, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

int precedence(const Expression& e)
{
    switch (e.kind) {
    case Expression::Kind::Add:
    case Expression::Kind::Sub: return 1;
    case Expression::Kind::Mul:
    case Expression::Kind::Div: return 2;
    case Expression::Kind::Neg: return 3;
    case Expression::Kind::Pow: return 4;
    default: return 5;
    }
}

std::string wrap(const Expression& e, int min_prec)
{
    std::string s = print(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expression parse(const std::string& text) { return *Parser(text).run(); }

std::string print(const Expression& e)
{
    using K = Expression::Kind;
    switch (e.kind) {
    case K::Number: return to_string(e.number);
    case K::Genus: return "g";
    case K::Generator: return e.generator.name();
    case K::Neg: return "-" + wrap(*e.children[0], 3);
    case K::Pow: return wrap(*e.children[0], 5) + "^" + std::to_string(e.exponent);
    case K::Add: return wrap(*e.children[0], 1) + " + " + wrap(*e.children[1], 2);
    case K::Sub: return wrap(*e.children[0], 1) + " - " + wrap(*e.children[1], 2);
    case K::Mul: return wrap(*e.children[0], 2) + "*" + wrap(*e.children[1], 3);
    case K::Div: return wrap(*e.children[0], 2) + "/" + wrap(*e.children[1], 3);
    }
    return {};
}

TautElement evaluate(const Expression& e)
{
    using K = Expression::Kind;
    switch (e.kind) {
    case K::Number: return TautElement(Coefficient(e.number));
    case K::Genus: return TautElement(Coefficient::genus());
    case K::Generator: return TautElement(TautMonomial::of(e.generator));
    case K::Neg: return -evaluate(*e.children[0]);
    case K::Pow: return evaluate(*e.children[0]).pow(e.exponent);
    case K::Add: return evaluate(*e.children[0]) + evaluate(*e.children[1]);
    case K::Sub: return evaluate(*e.children[0]) - evaluate(*e.children[1]);
    case K::Mul: return evaluate(*e.children[0]) * evaluate(*e.children[1]);
    case K::Div: {
        TautElement d = evaluate(*e.children[1]);
        Coefficient c = d.coefficient(TautMonomial());
        bool constant = d.terms().size() == 1 && c.is_constant() && !c.is_zero();
        if (!constant) throw ParseError(e.children[1]->offset, "'/' needs a nonzero rational constant divisor");
        return Coefficient(Rational(1) / c.constant()) * evaluate(*e.children[0]);
    }
    }
    return {};
}

TautElement parse_element(const std::string& text) { return evaluate(parse(text)); }

}  // namespace tautcalc
