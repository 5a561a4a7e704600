#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "weil/element.hpp"

#include <nlohmann/json_fwd.hpp>

namespace weil {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind {
    Constant,
    Variable,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,  // integer exponent
    Exp,
    Log,
    Sin,
    Cos,
    Sqrt,
};

/// Immutable AST of a smooth scalar expression in chart coordinates
/// x1..xn. Factories fold constants but perform no other simplification.
class Expr {
  public:
    ExprKind kind;
    double value = 0.0;  // Constant
    int var = 0;         // Variable, 0-based
    int exponent = 0;    // Pow
    ExprPtr a, b;

    static ExprPtr constant(double v);
    static ExprPtr variable(int index);
    static ExprPtr add(ExprPtr l, ExprPtr r);
    static ExprPtr sub(ExprPtr l, ExprPtr r);
    static ExprPtr mul(ExprPtr l, ExprPtr r);
    static ExprPtr div(ExprPtr l, ExprPtr r);
    static ExprPtr neg(ExprPtr e);
    static ExprPtr pow(ExprPtr base, int exponent);
    static ExprPtr apply(ExprKind primitive, ExprPtr arg);
};

/// Parse an expression over chart variables x1..xn.
/// Precedence: ^ binds tighter than unary minus, which binds tighter than
/// * and /, which bind tighter than + and -. Binary operators associate
/// left. Throws std::invalid_argument with the offending position.
ExprPtr parse_expr(const std::string& text, int num_vars);

/// Standard real evaluation. Domain violations (division by zero, log or
/// sqrt outside their domain) throw std::domain_error.
double eval_real(const ExprPtr& e, std::span<const double> x);

/// Symbolic partial derivative with respect to variable index (0-based).
ExprPtr derive(const ExprPtr& e, int index);

/// Evaluate over a Weil algebra: the lift f^A applied to the near point
/// with coordinates xs. Field operations use algebra arithmetic; a
/// primitive g applied to c + eta is the finite Taylor sum
/// sum_j g^(j)(c)/j! * eta^j, exact because eta is nilpotent.
/// The augmentation of the result equals eval_real at the base point.
WeilElement eval_weil(const ExprPtr& e, const PresPtr& algebra, std::span<const WeilElement> xs);

/// Taylor coefficients [f(x0), f'(x0), f''(x0)/2, ...] of a single-variable
/// expression, computed by evaluating over R[X]/(X^{order+1}) at x0 + X.
std::vector<double> taylor_coeffs(const ExprPtr& e, double x0, int order);

/// Substitute args[i] for variable i throughout; used to compose maps
/// symbolically.
ExprPtr substitute(const ExprPtr& e, std::span<const ExprPtr> args);

/// Highest variable index used, plus one (0 for constant expressions).
int min_chart_dim(const ExprPtr& e);

std::string to_string(const ExprPtr& e);

/// Debug AST export: {"op": "...", "args": [...]} with "value" on
/// constants, "index" (1-based) on variables and "exponent" on powers.
nlohmann::json ast_json(const ExprPtr& e);

}  // namespace weil
