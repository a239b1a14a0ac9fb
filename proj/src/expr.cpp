#include "comfix/expr.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>

namespace comfix {

ExprPtr Expr::number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::number;
    e->value = v;
    return e;
}

ExprPtr Expr::variable(std::size_t index) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::variable;
    e->var = index;
    return e;
}

ExprPtr Expr::neg(ExprPtr x) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::neg;
    e->a = std::move(x);
    return e;
}

ExprPtr Expr::binary(BinOp op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::binary;
    e->op = op;
    e->a = std::move(l);
    e->b = std::move(r);
    return e;
}

ExprPtr Expr::call(FuncId fn, ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::call;
    e->fn = fn;
    e->a = std::move(arg);
    return e;
}

namespace {

const std::map<std::string, FuncId, std::less<>> kFunctions = {
    {"sin", FuncId::sin}, {"cos", FuncId::cos},   {"tan", FuncId::tan}, {"exp", FuncId::exp},
    {"log", FuncId::log}, {"sqrt", FuncId::sqrt}, {"abs", FuncId::abs},
};

const char* func_name(FuncId f) {
    switch (f) {
        case FuncId::sin: return "sin";
        case FuncId::cos: return "cos";
        case FuncId::tan: return "tan";
        case FuncId::exp: return "exp";
        case FuncId::log: return "log";
        case FuncId::sqrt: return "sqrt";
        case FuncId::abs: return "abs";
    }
    return "?";
}

class Parser {
  public:
    Parser(std::string_view src, std::size_t dim) : src_(src), dim_(dim) {}

    MapExpr run() {
        MapExpr m;
        m.dim = dim_;
        m.components.push_back(parse_sum());
        while (peek() == ',') {
            ++pos_;
            m.components.push_back(parse_sum());
        }
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected input after expression", pos_);
        if (m.components.size() != dim_)
            throw ParseError("map has " + std::to_string(m.components.size()) +
                                 " component(s), expected " + std::to_string(dim_),
                             pos_);
        return m;
    }

  private:
    std::string_view src_;
    std::size_t dim_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return e;
            ++pos_;
            e = Expr::binary(c == '+' ? BinOp::add : BinOp::sub, e, parse_product());
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/') return e;
            ++pos_;
            e = Expr::binary(c == '*' ? BinOp::mul : BinOp::div, e, parse_unary());
        }
    }

    ExprPtr parse_unary() {
        if (peek() == '-') {
            ++pos_;
            ExprPtr inner = parse_unary();
            // fold a negated literal into the literal itself, so printed
            // negative numbers re-parse to the same node
            if (inner->kind == Expr::Kind::number) return Expr::number(-inner->value);
            return Expr::neg(std::move(inner));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            // right-associative; exponent may carry its own unary minus
            return Expr::binary(BinOp::pow, base, parse_unary());
        }
        return base;
    }

    ExprPtr parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw ParseError(pos_ < src_.size() ? std::string("unexpected character '") + c + "'"
                                            : "unexpected end of input",
                         pos_);
    }

    ExprPtr parse_number() {
        skip_ws();
        const std::size_t start = pos_;
        double v = 0;
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr == begin)
            throw ParseError("invalid number literal", start);
        pos_ += static_cast<std::size_t>(ptr - begin);
        return Expr::number(v);
    }

    ExprPtr parse_identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);

        if (auto it = kFunctions.find(name); it != kFunctions.end()) {
            if (peek() != '(') throw ParseError("expected '(' after function name", pos_);
            ++pos_;
            ExprPtr arg = parse_sum();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return Expr::call(it->second, std::move(arg));
        }

        if (name == "x" && dim_ == 1) return Expr::variable(0);
        if (name.size() >= 2 && name[0] == 'x') {
            std::size_t idx = 0;
            const char* b = name.data() + 1;
            auto [ptr, ec] = std::from_chars(b, name.data() + name.size(), idx);
            if (ec == std::errc{} && ptr == name.data() + name.size()) {
                if (idx == 0 || idx > dim_)
                    throw ParseError("variable " + std::string(name) + " exceeds dimension " +
                                         std::to_string(dim_),
                                     start);
                return Expr::variable(idx - 1);
            }
        }
        if (name == "e")
            throw ParseError("unknown identifier 'e' (no named constants; write exp(...))", start);
        if (name == "x")
            throw ParseError("bare 'x' is only valid in one dimension; use x1..x" +
                                 std::to_string(dim_),
                             start);
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
};

void print_expr(const ExprPtr& e, std::size_t dim, std::string& out) {
    switch (e->kind) {
        case Expr::Kind::number: {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e->value);
            (void)ec;
            if (e->value < 0 || (e->value == 0 && std::signbit(e->value))) {
                out += '(';
                out.append(buf, ptr);
                out += ')';
            } else {
                out.append(buf, ptr);
            }
            break;
        }
        case Expr::Kind::variable:
            if (dim == 1)
                out += 'x';
            else
                out += "x" + std::to_string(e->var + 1);
            break;
        case Expr::Kind::neg:
            out += "(-";
            print_expr(e->a, dim, out);
            out += ')';
            break;
        case Expr::Kind::binary: {
            static const char* sym[] = {"+", "-", "*", "/", "^"};
            out += '(';
            print_expr(e->a, dim, out);
            out += sym[static_cast<int>(e->op)];
            print_expr(e->b, dim, out);
            out += ')';
            break;
        }
        case Expr::Kind::call:
            out += func_name(e->fn);
            out += '(';
            print_expr(e->a, dim, out);
            out += ')';
            break;
    }
}

double eval_expr(const ExprPtr& e, const Point& x) {
    switch (e->kind) {
        case Expr::Kind::number: return e->value;
        case Expr::Kind::variable: return x[e->var];
        case Expr::Kind::neg: return -eval_expr(e->a, x);
        case Expr::Kind::binary: {
            const double l = eval_expr(e->a, x);
            const double r = eval_expr(e->b, x);
            switch (e->op) {
                case BinOp::add: return l + r;
                case BinOp::sub: return l - r;
                case BinOp::mul: return l * r;
                case BinOp::div:
                    if (r == 0) throw EvalError("division by zero", x.c);
                    return l / r;
                case BinOp::pow: return std::pow(l, r);
            }
            return 0;
        }
        case Expr::Kind::call: {
            const double a = eval_expr(e->a, x);
            switch (e->fn) {
                case FuncId::sin: return std::sin(a);
                case FuncId::cos: return std::cos(a);
                case FuncId::tan: return std::tan(a);
                case FuncId::exp: return std::exp(a);
                case FuncId::log:
                    if (a <= 0) throw EvalError("log of non-positive value", x.c);
                    return std::log(a);
                case FuncId::sqrt:
                    if (a < 0) throw EvalError("sqrt of negative value", x.c);
                    return std::sqrt(a);
                case FuncId::abs: return std::abs(a);
            }
            return 0;
        }
    }
    return 0;
}

bool bits_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

MapExpr parse_map(std::string_view src, std::size_t dim) {
    if (dim == 0) throw InputError("parse_map: dimension must be >= 1");
    std::size_t i = 0;
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    if (i == src.size()) throw ParseError("empty expression", 0);
    return Parser(src, dim).run();
}

std::string print_map(const MapExpr& m) {
    std::string out;
    for (std::size_t i = 0; i < m.components.size(); ++i) {
        if (i) out += ", ";
        print_expr(m.components[i], m.dim, out);
    }
    return out;
}

Point eval_map(const MapExpr& m, const Point& x) {
    if (x.dim() != m.dim)
        throw InputError("eval: point dimension " + std::to_string(x.dim()) +
                         " does not match map dimension " + std::to_string(m.dim));
    Point y;
    y.c.resize(m.components.size());
    for (std::size_t i = 0; i < m.components.size(); ++i) {
        const double v = eval_expr(m.components[i], x);
        if (!std::isfinite(v)) throw EvalError("non-finite result in component " + std::to_string(i + 1), x.c);
        y[i] = v;
    }
    return y;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::number: return bits_equal(a->value, b->value);
        case Expr::Kind::variable: return a->var == b->var;
        case Expr::Kind::neg: return structurally_equal(a->a, b->a);
        case Expr::Kind::binary:
            return a->op == b->op && structurally_equal(a->a, b->a) && structurally_equal(a->b, b->b);
        case Expr::Kind::call: return a->fn == b->fn && structurally_equal(a->a, b->a);
    }
    return false;
}

bool structurally_equal(const MapExpr& a, const MapExpr& b) {
    if (a.dim != b.dim || a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (!structurally_equal(a.components[i], b.components[i])) return false;
    return true;
}

}  // namespace comfix
