#include <nullag/hierarchy.hpp>
#include <nullag/text.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace nullag {

namespace {

struct Token {
    enum class Kind { Number, Ident, Jet, Op, End } kind;
    std::string text;  // operator char, identifier, digits
    unsigned primes = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            advance(1);
            continue;
        }
        Token tok{Token::Kind::Op, {}, 0, line, col};
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) {
                ++j;
            }
            tok.kind = Token::Kind::Number;
            tok.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) != 0 || src[j] == '_')) {
                ++j;
            }
            tok.kind = Token::Kind::Ident;
            tok.text = std::string(src.substr(i, j - i));
            advance(j - i);
            if (tok.text == "q") {
                tok.kind = Token::Kind::Jet;
                while (i < src.size() && src[i] == '\'') {
                    ++tok.primes;
                    advance(1);
                }
            } else if (i < src.size() && src[i] == '\'') {
                throw SyntaxError(Errc::SyntaxError, "primes are only allowed on q", line, col);
            }
        } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            tok.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError(Errc::SyntaxError, std::string("unexpected character '") + c + "'",
                              line, col);
        }
        out.push_back(std::move(tok));
    }
    out.push_back({Token::Kind::End, {}, 0, line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Tree parse_all() {
        Tree t = sum();
        if (peek().kind != Token::Kind::End) {
            fail("unexpected '" + peek().text + "'");
        }
        return t;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool is_op(const Token& t, char c) const {
        return t.kind == Token::Kind::Op && t.text.size() == 1 && t.text[0] == c;
    }
    [[noreturn]] void fail(const std::string& msg, Errc code = Errc::SyntaxError) const {
        throw SyntaxError(code, msg, peek().line, peek().column);
    }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg,
                              Errc code = Errc::SyntaxError) const {
        throw SyntaxError(code, msg, t.line, t.column);
    }
    void expect(char c) {
        if (!is_op(peek(), c)) {
            fail(std::string("expected '") + c + "'");
        }
        next();
    }

    Tree sum() {
        Tree lhs = product();
        while (is_op(peek(), '+') || is_op(peek(), '-')) {
            bool plus = next().text == "+";
            Tree rhs = product();
            lhs = Tree::binary(plus ? Tree::Op::Add : Tree::Op::Sub, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Tree product() {
        Tree lhs = unary();
        while (is_op(peek(), '*') || is_op(peek(), '/')) {
            bool mul = next().text == "*";
            Tree rhs = unary();
            lhs = Tree::binary(mul ? Tree::Op::Mul : Tree::Op::Div, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Tree unary() {
        if (is_op(peek(), '-')) {
            next();
            return Tree::neg(unary());
        }
        return power();
    }

    Tree power() {
        Tree base = primary();
        while (is_op(peek(), '^')) {
            next();
            base = Tree::pow(std::move(base), exponent());
        }
        return base;
    }

    long exponent() {
        const Token& at = peek();
        bool negative = false;
        if (is_op(peek(), '-')) {
            next();
            negative = true;
        }
        Expr value = normalize(primary());
        if (!value.is_constant() || !is_integer(value.constant_value())) {
            fail_at(at, "exponent must be an integer", Errc::UnsupportedExponent);
        }
        Integer z = value.constant_value().get_num();
        if (!z.fits_slong_p()) {
            fail_at(at, "exponent out of range", Errc::UnsupportedExponent);
        }
        long e = z.get_si();
        return negative ? -e : e;
    }

    int integer_argument() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) {
            fail("expected an integer argument");
        }
        next();
        Integer z(t.text);
        if (!z.fits_sint_p()) {
            fail_at(t, "integer argument out of range");
        }
        return static_cast<int>(z.get_si());
    }

    Tree call(const Token& name) {
        expect('(');
        if (name.text == "log") {
            Tree arg = sum();
            expect(')');
            return Tree::log(std::move(arg));
        }
        auto family = family_from_name(name.text);
        if (!family) {
            fail_at(name, "unknown function '" + name.text + "'");
        }
        HierarchyId id{*family, 0};
        if (*family == Family::Schippers || *family == Family::Krivonos) {
            id.order = integer_argument();
        }
        expect(')');
        try {
            return Tree::leaf(builtin(id));
        } catch (const Error& e) {
            fail_at(name, e.what(), e.code());
        }
    }

    Tree primary() {
        const Token t = next();
        switch (t.kind) {
            case Token::Kind::Number:
                return Tree::number(Rational(Integer(t.text)));
            case Token::Kind::Jet: {
                unsigned order = t.primes;
                // q^(k) with a literal non-negative integer names the k-th jet.
                if (t.primes == 0 && is_op(peek(), '^') && is_op(peek(1), '(') &&
                    peek(2).kind == Token::Kind::Number && is_op(peek(3), ')')) {
                    Integer z(peek(2).text);
                    if (!z.fits_uint_p()) {
                        fail_at(peek(2), "jet order out of range");
                    }
                    order = static_cast<unsigned>(z.get_ui());
                    pos_ += 4;
                }
                return Tree::atom(Atom::jet(order));
            }
            case Token::Kind::Ident:
                if (is_op(peek(), '(')) {
                    return call(t);
                }
                if (t.text == "t") {
                    return Tree::atom(Atom::time());
                }
                if (t.text == "log") {
                    fail_at(t, "log requires an argument");
                }
                return Tree::atom(Atom::param(t.text));
            case Token::Kind::Op:
                if (t.text == "(") {
                    Tree inner = sum();
                    expect(')');
                    return inner;
                }
                fail_at(t, "unexpected '" + t.text + "'");
            case Token::Kind::End:
                fail_at(t, "unexpected end of input");
        }
        fail_at(t, "unexpected token");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Tree parse(std::string_view source) {
    Parser p(tokenize(source));
    return p.parse_all();
}

Expr parse_expr(std::string_view source) {
    Tree tree = parse(source);
    return normalize(tree);
}

}  // namespace nullag
