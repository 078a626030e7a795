#include "riordan/expr.hpp"

#include <cctype>

namespace riordan {

namespace {

ExprPtr node(SeriesExpr::Kind kind, std::size_t pos) {
    auto e = std::make_unique<SeriesExpr>();
    e->kind = kind;
    e->pos = pos;
    return e;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input, '+', '-', '*', '/' or '^'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, expected,
                         "syntax error at offset " + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(what);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            std::size_t at = position_of_next();
            if (accept('+')) {
                auto n = node(SeriesExpr::Kind::Add, at);
                n->lhs = std::move(e);
                n->rhs = term();
                e = std::move(n);
            } else if (accept('-')) {
                auto n = node(SeriesExpr::Kind::Sub, at);
                n->lhs = std::move(e);
                n->rhs = term();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            std::size_t at = position_of_next();
            if (accept('*')) {
                auto n = node(SeriesExpr::Kind::Mul, at);
                n->lhs = std::move(e);
                n->rhs = factor();
                e = std::move(n);
            } else if (accept('/')) {
                auto n = node(SeriesExpr::Kind::Div, at);
                n->lhs = std::move(e);
                n->rhs = factor();
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr e = atom();
        if (peek('^')) {
            std::size_t at = pos_;
            ++pos_;
            auto n = node(SeriesExpr::Kind::Pow, at);
            const std::uint64_t v = parse_uint("a non-negative integer exponent");
            if (v > 4096) fail("an exponent <= 4096");
            n->exponent = static_cast<std::uint32_t>(v);
            n->lhs = std::move(e);
            return n;
        }
        return e;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("a number, 'x', '(', 'rev' or '-'");
        const std::size_t at = pos_;
        const char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            auto n = node(SeriesExpr::Kind::Neg, at);
            n->lhs = atom();
            return n;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational(at);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                word += s_[pos_++];
            if (word == "x") return node(SeriesExpr::Kind::X, at);
            if (word == "rev") {
                expect('(', "'(' after rev");
                auto n = node(SeriesExpr::Kind::Rev, at);
                n->lhs = expr();
                expect(')', "')'");
                return n;
            }
            pos_ = at;
            fail("a number, 'x', '(', 'rev' or '-'");
        }
        fail("a number, 'x', '(', 'rev' or '-'");
    }

    ExprPtr rational(std::size_t at) {
        const std::uint64_t num = parse_uint("a number");
        std::uint64_t den = 1;
        // A '/' directly followed by a digit is part of the literal; any
        // other '/' belongs to the enclosing term.
        std::size_t save = pos_;
        if (accept('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                den = parse_uint("a positive denominator");
                if (den == 0) {
                    pos_ = save + 1;
                    fail("a positive denominator");
                }
            } else {
                pos_ = save;
            }
        }
        auto n = node(SeriesExpr::Kind::Number, at);
        n->value = Rat(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        return n;
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail(what);
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) fail("a smaller integer literal");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::size_t position_of_next() {
        skip_ws();
        return pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int precedence(SeriesExpr::Kind k) {
    switch (k) {
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub: return 1;
    case SeriesExpr::Kind::Mul:
    case SeriesExpr::Kind::Div: return 2;
    case SeriesExpr::Kind::Neg: return 3;
    case SeriesExpr::Kind::Pow: return 4;
    default: return 5;
    }
}

void render_into(const SeriesExpr& e, std::string& out);

void render_child(const SeriesExpr& child, int min_prec, std::string& out) {
    const bool parens = precedence(child.kind) < min_prec;
    if (parens) out += '(';
    render_into(child, out);
    if (parens) out += ')';
}

void render_into(const SeriesExpr& e, std::string& out) {
    switch (e.kind) {
    case SeriesExpr::Kind::Number: out += e.value.str(); return;
    case SeriesExpr::Kind::X: out += 'x'; return;
    case SeriesExpr::Kind::Neg:
        out += '-';
        render_child(*e.lhs, precedence(SeriesExpr::Kind::Neg) + 1, out);
        return;
    case SeriesExpr::Kind::Add:
    case SeriesExpr::Kind::Sub:
        render_child(*e.lhs, 1, out);
        out += e.kind == SeriesExpr::Kind::Add ? " + " : " - ";
        render_child(*e.rhs, 2, out);
        return;
    case SeriesExpr::Kind::Mul:
    case SeriesExpr::Kind::Div:
        render_child(*e.lhs, 2, out);
        out += e.kind == SeriesExpr::Kind::Mul ? "*" : "/";
        render_child(*e.rhs, 3, out);
        return;
    case SeriesExpr::Kind::Pow:
        render_child(*e.lhs, 5, out);
        out += '^';
        out += std::to_string(e.exponent);
        return;
    case SeriesExpr::Kind::Rev:
        out += "rev(";
        render_into(*e.lhs, out);
        out += ')';
        return;
    }
}

/// Evaluation at a working order; operands of unequal orders (a division
/// happened below) are re-truncated to the smaller one before combining.
Series<Rat> eval_at(const SeriesExpr& e, int order);

Series<Rat> combine(const SeriesExpr& e, Series<Rat> a, Series<Rat> b) {
    const int m = std::min(a.order(), b.order());
    if (a.order() != m) a = truncated(a, m);
    if (b.order() != m) b = truncated(b, m);
    switch (e.kind) {
    case SeriesExpr::Kind::Add: return a + b;
    case SeriesExpr::Kind::Sub: return a - b;
    case SeriesExpr::Kind::Mul: return a * b;
    case SeriesExpr::Kind::Div: return divide(a, b);
    default: throw Error("internal: combine on a non-binary node");
    }
}

Series<Rat> eval_at(const SeriesExpr& e, int order) {
    try {
        switch (e.kind) {
        case SeriesExpr::Kind::Number: return Series<Rat>::constant(order, e.value);
        case SeriesExpr::Kind::X: return Series<Rat>::identity(order);
        case SeriesExpr::Kind::Neg: return -eval_at(*e.lhs, order);
        case SeriesExpr::Kind::Add:
        case SeriesExpr::Kind::Sub:
        case SeriesExpr::Kind::Mul:
        case SeriesExpr::Kind::Div:
            return combine(e, eval_at(*e.lhs, order), eval_at(*e.rhs, order));
        case SeriesExpr::Kind::Pow:
            return pow_trunc(eval_at(*e.lhs, order), static_cast<int>(e.exponent));
        case SeriesExpr::Kind::Rev: return revert(eval_at(*e.lhs, order));
        }
        throw Error("internal: unknown expression node");
    } catch (const MathDomainError& err) {
        if (std::string(err.what()).rfind("at offset", 0) == 0) throw;
        throw MathDomainError("at offset " + std::to_string(e.pos) + ": " + err.what());
    }
}

} // namespace

ExprPtr parse_series_expr(std::string_view text) { return Parser(text).parse(); }

std::string render_expr(const SeriesExpr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

bool expr_equal(const SeriesExpr& a, const SeriesExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case SeriesExpr::Kind::Number: return a.value == b.value;
    case SeriesExpr::Kind::X: return true;
    case SeriesExpr::Kind::Pow: return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
    case SeriesExpr::Kind::Neg:
    case SeriesExpr::Kind::Rev: return expr_equal(*a.lhs, *b.lhs);
    default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

Series<Rat> eval_expr(const SeriesExpr& e, int order) {
    if (order < 1) throw ValidationError("evaluation order must be >= 1");
    int working = order;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Series<Rat> s = eval_at(e, working);
        if (s.order() >= order) return truncated(s, order);
        working += order - s.order();
    }
    throw MathDomainError("expression loses too many orders to evaluate at order " +
                          std::to_string(order));
}

Series<Rat> eval_expr(std::string_view text, int order) {
    return eval_expr(*parse_series_expr(text), order);
}

} // namespace riordan
