#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "comfix/errors.hpp"
#include "comfix/metric.hpp"

namespace comfix {

enum class BinOp { add, sub, mul, div, pow };
enum class FuncId { sin, cos, tan, exp, log, sqrt, abs };

/// Immutable expression node. Trees are shared; never mutated after parse.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, variable, neg, binary, call };

    Kind kind;
    double value = 0.0;    // number
    std::size_t var = 0;   // variable, 0-based axis index
    BinOp op = BinOp::add; // binary
    FuncId fn = FuncId::sin;
    ExprPtr a, b;          // children (neg/call use a only)

    static ExprPtr number(double v);
    static ExprPtr variable(std::size_t index);
    static ExprPtr neg(ExprPtr x);
    static ExprPtr binary(BinOp op, ExprPtr l, ExprPtr r);
    static ExprPtr call(FuncId fn, ExprPtr arg);
};

/// A d-dimensional self-map given as one coordinate expression per axis.
/// Variables are x1..xd; in one dimension `x` is an alias for x1.
struct MapExpr {
    std::size_t dim = 1;
    std::vector<ExprPtr> components;
};

/// Parses `src` as d comma-separated coordinate expressions.
///
/// Grammar (loosest to tightest): + -, * /, unary -, ^ (right-associative).
/// Functions: sin cos tan exp log sqrt abs. No named constants.
/// Throws ParseError with the byte offset of the problem.
MapExpr parse_map(std::string_view src, std::size_t dim);

/// Fully parenthesized canonical form; parse_map(print_map(m), m.dim) is
/// structurally equal to m.
std::string print_map(const MapExpr& m);

/// Evaluates at x. Throws EvalError (carrying x) on math domain errors or
/// non-finite results, InputError on dimension mismatch.
Point eval_map(const MapExpr& m, const Point& x);

/// Structural equality: same shape, bit-identical literals.
bool structurally_equal(const MapExpr& a, const MapExpr& b);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace comfix
