#include "weil/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weil {

namespace {

std::shared_ptr<Expr> node(ExprKind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

bool is_const(const ExprPtr& e, double v) { return e->kind == ExprKind::Constant && e->value == v; }

}  // namespace

ExprPtr Expr::constant(double v) {
    auto e = node(ExprKind::Constant);
    e->value = v;
    return e;
}

ExprPtr Expr::variable(int index) {
    auto e = node(ExprKind::Variable);
    e->var = index;
    return e;
}

ExprPtr Expr::add(ExprPtr l, ExprPtr r) {
    if (l->kind == ExprKind::Constant && r->kind == ExprKind::Constant) return constant(l->value + r->value);
    if (is_const(l, 0.0)) return r;
    if (is_const(r, 0.0)) return l;
    return node(ExprKind::Add, std::move(l), std::move(r));
}

ExprPtr Expr::sub(ExprPtr l, ExprPtr r) {
    if (l->kind == ExprKind::Constant && r->kind == ExprKind::Constant) return constant(l->value - r->value);
    if (is_const(r, 0.0)) return l;
    return node(ExprKind::Sub, std::move(l), std::move(r));
}

ExprPtr Expr::mul(ExprPtr l, ExprPtr r) {
    if (l->kind == ExprKind::Constant && r->kind == ExprKind::Constant) return constant(l->value * r->value);
    if (is_const(l, 0.0) || is_const(r, 0.0)) return constant(0.0);
    if (is_const(l, 1.0)) return r;
    if (is_const(r, 1.0)) return l;
    return node(ExprKind::Mul, std::move(l), std::move(r));
}

ExprPtr Expr::div(ExprPtr l, ExprPtr r) {
    if (is_const(r, 1.0)) return l;
    return node(ExprKind::Div, std::move(l), std::move(r));
}

ExprPtr Expr::neg(ExprPtr x) {
    if (x->kind == ExprKind::Constant) return constant(-x->value);
    return node(ExprKind::Neg, std::move(x));
}

ExprPtr Expr::pow(ExprPtr base, int exponent) {
    if (exponent == 1) return base;
    if (exponent == 0) return constant(1.0);
    if (base->kind == ExprKind::Constant && (exponent > 0 || base->value != 0.0))
        return constant(ipow_double(base->value, exponent));
    auto e = node(ExprKind::Pow, std::move(base));
    e->exponent = exponent;
    return e;
}

ExprPtr Expr::apply(ExprKind primitive, ExprPtr arg) { return node(primitive, std::move(arg)); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    int num_vars;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw std::invalid_argument("syntax error at position " + std::to_string(at + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ExprPtr expression() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+')) e = Expr::add(e, term());
            else if (eat('-')) e = Expr::sub(e, term());
            else return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*')) e = Expr::mul(e, unary());
            else if (eat('/')) e = Expr::div(e, unary());
            else return e;
        }
    }

    ExprPtr unary() {
        if (eat('-')) return Expr::neg(unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr e = atom();
        while (eat('^')) e = Expr::pow(e, exponent_literal());
        return e;
    }

    int exponent_literal() {
        skip_ws();
        std::size_t start = pos;
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer exponent", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("exponent too large", start);
            ++pos;
        }
        return static_cast<int>(negative ? -v : v);
    }

    ExprPtr atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ExprPtr e = expression();
            if (!eat(')')) fail("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    ExprPtr number() {
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail("invalid number", pos);
        pos += static_cast<std::size_t>(end - begin);
        return Expr::constant(v);
    }

    ExprPtr identifier() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (name.size() >= 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1]))) {
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i])))
                    fail("unknown identifier '" + name + "'", start);
            long idx = std::strtol(name.c_str() + 1, nullptr, 10);
            if (idx < 1 || idx > num_vars) fail("variable index out of range", start);
            return Expr::variable(static_cast<int>(idx - 1));
        }
        ExprKind primitive;
        if (name == "exp") primitive = ExprKind::Exp;
        else if (name == "log") primitive = ExprKind::Log;
        else if (name == "sin") primitive = ExprKind::Sin;
        else if (name == "cos") primitive = ExprKind::Cos;
        else if (name == "sqrt") primitive = ExprKind::Sqrt;
        else fail("unknown identifier '" + name + "'", start);
        if (!eat('(')) fail("expected '(' after '" + name + "'", pos);
        ExprPtr arg = expression();
        if (!eat(')')) fail("expected ')'", pos);
        return Expr::apply(primitive, arg);
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text, int num_vars) {
    Parser p{text, num_vars};
    ExprPtr e = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input", p.pos);
    return e;
}

// ---------------------------------------------------------------------------
// Real evaluation
// ---------------------------------------------------------------------------

double eval_real(const ExprPtr& e, std::span<const double> x) {
    switch (e->kind) {
        case ExprKind::Constant: return e->value;
        case ExprKind::Variable:
            if (e->var >= static_cast<int>(x.size())) throw std::invalid_argument("variable index out of range");
            return x[static_cast<std::size_t>(e->var)];
        case ExprKind::Add: return eval_real(e->a, x) + eval_real(e->b, x);
        case ExprKind::Sub: return eval_real(e->a, x) - eval_real(e->b, x);
        case ExprKind::Mul: return eval_real(e->a, x) * eval_real(e->b, x);
        case ExprKind::Div: {
            double num = eval_real(e->a, x);
            double den = eval_real(e->b, x);
            if (den == 0.0) throw std::domain_error("division by zero");
            return num / den;
        }
        case ExprKind::Neg: return -eval_real(e->a, x);
        case ExprKind::Pow: {
            double base = eval_real(e->a, x);
            if (e->exponent < 0 && base == 0.0) throw std::domain_error("division by zero");
            return ipow_double(base, e->exponent);
        }
        case ExprKind::Exp: return std::exp(eval_real(e->a, x));
        case ExprKind::Log: {
            double v = eval_real(e->a, x);
            if (v <= 0.0) throw std::domain_error("log of non-positive argument");
            return std::log(v);
        }
        case ExprKind::Sin: return std::sin(eval_real(e->a, x));
        case ExprKind::Cos: return std::cos(eval_real(e->a, x));
        case ExprKind::Sqrt: {
            double v = eval_real(e->a, x);
            if (v < 0.0) throw std::domain_error("sqrt of negative argument");
            return std::sqrt(v);
        }
    }
    throw std::logic_error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Symbolic differentiation
// ---------------------------------------------------------------------------

ExprPtr derive(const ExprPtr& e, int index) {
    switch (e->kind) {
        case ExprKind::Constant: return Expr::constant(0.0);
        case ExprKind::Variable: return Expr::constant(e->var == index ? 1.0 : 0.0);
        case ExprKind::Add: return Expr::add(derive(e->a, index), derive(e->b, index));
        case ExprKind::Sub: return Expr::sub(derive(e->a, index), derive(e->b, index));
        case ExprKind::Mul:
            return Expr::add(Expr::mul(derive(e->a, index), e->b), Expr::mul(e->a, derive(e->b, index)));
        case ExprKind::Div:
            // (u/v)' = (u'v - uv') / v^2
            return Expr::div(
                Expr::sub(Expr::mul(derive(e->a, index), e->b), Expr::mul(e->a, derive(e->b, index))),
                Expr::pow(e->b, 2));
        case ExprKind::Neg: return Expr::neg(derive(e->a, index));
        case ExprKind::Pow:
            // (u^n)' = n u^{n-1} u'
            return Expr::mul(Expr::mul(Expr::constant(e->exponent), Expr::pow(e->a, e->exponent - 1)),
                             derive(e->a, index));
        case ExprKind::Exp: return Expr::mul(Expr::apply(ExprKind::Exp, e->a), derive(e->a, index));
        case ExprKind::Log: return Expr::div(derive(e->a, index), e->a);
        case ExprKind::Sin: return Expr::mul(Expr::apply(ExprKind::Cos, e->a), derive(e->a, index));
        case ExprKind::Cos: return Expr::neg(Expr::mul(Expr::apply(ExprKind::Sin, e->a), derive(e->a, index)));
        case ExprKind::Sqrt:
            // (sqrt u)' = u' / (2 sqrt u)
            return Expr::div(derive(e->a, index),
                             Expr::mul(Expr::constant(2.0), Expr::apply(ExprKind::Sqrt, e->a)));
    }
    throw std::logic_error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Evaluation over a Weil algebra
// ---------------------------------------------------------------------------

namespace {

/// Taylor coefficients g^(j)(c)/j! for j = 0..h of a primitive at the base
/// value c. `lifted` selects the base-point flavor of domain messages.
std::vector<double> primitive_taylor(ExprKind k, double c, int h, bool lifted) {
    std::vector<double> out(static_cast<std::size_t>(h) + 1, 0.0);
    switch (k) {
        case ExprKind::Exp: {
            out[0] = std::exp(c);
            for (int j = 1; j <= h; ++j) out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] / j;
            break;
        }
        case ExprKind::Sin:
        case ExprKind::Cos: {
            const double s = std::sin(c), co = std::cos(c);
            const double sin_cycle[4] = {s, co, -s, -co};
            const double cos_cycle[4] = {co, -s, -co, s};
            const double* cycle = (k == ExprKind::Sin) ? sin_cycle : cos_cycle;
            double fact = 1.0;
            for (int j = 0; j <= h; ++j) {
                if (j > 0) fact *= j;
                out[static_cast<std::size_t>(j)] = cycle[j % 4] / fact;
            }
            break;
        }
        case ExprKind::Log: {
            if (c <= 0.0)
                throw std::domain_error(lifted ? "log of non-positive argument at base point"
                                               : "log of non-positive argument");
            out[0] = std::log(c);
            if (h >= 1) out[1] = 1.0 / c;
            // d^j log / j! = (-1)^{j-1} / (j c^j)
            for (int j = 2; j <= h; ++j)
                out[static_cast<std::size_t>(j)] = -out[static_cast<std::size_t>(j - 1)] * (j - 1) / (j * c);
            break;
        }
        case ExprKind::Sqrt: {
            if (lifted ? (c <= 0.0) : (c < 0.0))
                throw std::domain_error(lifted ? "sqrt of non-positive argument at base point"
                                               : "sqrt of negative argument");
            out[0] = std::sqrt(c);
            // out[j] = out[j-1] * (1/2 - (j-1)) / (j c)
            for (int j = 1; j <= h; ++j)
                out[static_cast<std::size_t>(j)] =
                    out[static_cast<std::size_t>(j - 1)] * (0.5 - (j - 1)) / (j * c);
            break;
        }
        default: throw std::logic_error("not a primitive");
    }
    return out;
}

WeilElement eval_weil_rec(const ExprPtr& e, const PresPtr& pres, std::span<const WeilElement> xs) {
    const bool scalar = pres->dim() == 1;
    switch (e->kind) {
        case ExprKind::Constant: return WeilElement::constant(pres, e->value);
        case ExprKind::Variable:
            if (e->var >= static_cast<int>(xs.size())) throw std::invalid_argument("variable index out of range");
            return xs[static_cast<std::size_t>(e->var)];
        case ExprKind::Add: return eval_weil_rec(e->a, pres, xs) + eval_weil_rec(e->b, pres, xs);
        case ExprKind::Sub: return eval_weil_rec(e->a, pres, xs) - eval_weil_rec(e->b, pres, xs);
        case ExprKind::Mul: return eval_weil_rec(e->a, pres, xs) * eval_weil_rec(e->b, pres, xs);
        case ExprKind::Div: {
            WeilElement num = eval_weil_rec(e->a, pres, xs);
            WeilElement den = eval_weil_rec(e->b, pres, xs);
            if (!den.is_invertible())
                throw std::domain_error("lift undefined: denominator not invertible at base point");
            if (scalar) return WeilElement(pres, {num.coeff(0) / den.coeff(0)});
            return num * den.invert();
        }
        case ExprKind::Neg: return -eval_weil_rec(e->a, pres, xs);
        case ExprKind::Pow: {
            WeilElement base = eval_weil_rec(e->a, pres, xs);
            if (e->exponent < 0 && !base.is_invertible())
                throw std::domain_error("lift undefined: denominator not invertible at base point");
            return base.pow(e->exponent);
        }
        case ExprKind::Exp:
        case ExprKind::Log:
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sqrt: {
            WeilElement arg = eval_weil_rec(e->a, pres, xs);
            const int h = pres->height();
            std::vector<double> g = primitive_taylor(e->kind, arg.augmentation(), h, h >= 1);
            // sum_j g[j] * eta^j with eta the nilpotent part of the argument
            WeilElement result = WeilElement::constant(pres, g[0]);
            if (h >= 1) {
                WeilElement eta = arg.nilpotent_part();
                WeilElement power = WeilElement::one(pres);
                for (int j = 1; j <= h; ++j) {
                    power = power * eta;
                    if (power.is_zero()) break;
                    result = result + power.scale(g[static_cast<std::size_t>(j)]);
                }
            }
            return result;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace

WeilElement eval_weil(const ExprPtr& e, const PresPtr& algebra, std::span<const WeilElement> xs) {
    for (const WeilElement& x : xs)
        if (!same_presentation(x.presentation(), algebra)) throw std::invalid_argument("presentation mismatch");
    return eval_weil_rec(e, algebra, xs);
}

std::vector<double> taylor_coeffs(const ExprPtr& e, double x0, int order) {
    if (min_chart_dim(e) > 1) throw std::invalid_argument("taylor_coeffs requires a single-variable expression");
    PresPtr jet = make_truncated(1, order);
    WeilElement x = WeilElement::constant(jet, x0) + WeilElement::variable(jet, 0);
    WeilElement value = eval_weil(e, jet, std::span<const WeilElement>(&x, 1));
    return std::vector<double>(value.coeffs().begin(), value.coeffs().end());
}

ExprPtr substitute(const ExprPtr& e, std::span<const ExprPtr> args) {
    switch (e->kind) {
        case ExprKind::Constant: return e;
        case ExprKind::Variable:
            if (e->var >= static_cast<int>(args.size())) throw std::invalid_argument("variable index out of range");
            return args[static_cast<std::size_t>(e->var)];
        case ExprKind::Add: return Expr::add(substitute(e->a, args), substitute(e->b, args));
        case ExprKind::Sub: return Expr::sub(substitute(e->a, args), substitute(e->b, args));
        case ExprKind::Mul: return Expr::mul(substitute(e->a, args), substitute(e->b, args));
        case ExprKind::Div: return Expr::div(substitute(e->a, args), substitute(e->b, args));
        case ExprKind::Neg: return Expr::neg(substitute(e->a, args));
        case ExprKind::Pow: return Expr::pow(substitute(e->a, args), e->exponent);
        default: return Expr::apply(e->kind, substitute(e->a, args));
    }
}

int min_chart_dim(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Constant: return 0;
        case ExprKind::Variable: return e->var + 1;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div: return std::max(min_chart_dim(e->a), min_chart_dim(e->b));
        default: return min_chart_dim(e->a);
    }
}

namespace {

const char* op_name(ExprKind k) {
    switch (k) {
        case ExprKind::Constant: return "const";
        case ExprKind::Variable: return "var";
        case ExprKind::Add: return "add";
        case ExprKind::Sub: return "sub";
        case ExprKind::Mul: return "mul";
        case ExprKind::Div: return "div";
        case ExprKind::Neg: return "neg";
        case ExprKind::Pow: return "pow";
        case ExprKind::Exp: return "exp";
        case ExprKind::Log: return "log";
        case ExprKind::Sin: return "sin";
        case ExprKind::Cos: return "cos";
        case ExprKind::Sqrt: return "sqrt";
    }
    return "?";
}

}  // namespace

std::string to_string(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Constant: {
            std::string s = nlohmann::json(e->value).dump();
            return s;
        }
        case ExprKind::Variable: return "x" + std::to_string(e->var + 1);
        case ExprKind::Add: return "(" + to_string(e->a) + " + " + to_string(e->b) + ")";
        case ExprKind::Sub: return "(" + to_string(e->a) + " - " + to_string(e->b) + ")";
        case ExprKind::Mul: return "(" + to_string(e->a) + " * " + to_string(e->b) + ")";
        case ExprKind::Div: return "(" + to_string(e->a) + " / " + to_string(e->b) + ")";
        case ExprKind::Neg: return "(-" + to_string(e->a) + ")";
        case ExprKind::Pow: return to_string(e->a) + "^" + std::to_string(e->exponent);
        default: return std::string(op_name(e->kind)) + "(" + to_string(e->a) + ")";
    }
}

nlohmann::json ast_json(const ExprPtr& e) {
    nlohmann::json j;
    j["op"] = op_name(e->kind);
    switch (e->kind) {
        case ExprKind::Constant: j["value"] = e->value; break;
        case ExprKind::Variable: j["index"] = e->var + 1; break;
        case ExprKind::Pow:
            j["exponent"] = e->exponent;
            j["args"] = nlohmann::json::array({ast_json(e->a)});
            break;
        default: {
            auto args = nlohmann::json::array();
            if (e->a) args.push_back(ast_json(e->a));
            if (e->b) args.push_back(ast_json(e->b));
            j["args"] = std::move(args);
        }
    }
    return j;
}

}  // namespace weil
