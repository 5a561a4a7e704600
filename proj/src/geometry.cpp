#include "weil/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weil {

VectorField parse_field(const std::vector<std::string>& component_texts) {
    VectorField f;
    f.chart_dim = static_cast<int>(component_texts.size());
    f.components.reserve(component_texts.size());
    for (const std::string& text : component_texts) f.components.push_back(parse_expr(text, f.chart_dim));
    return f;
}

std::vector<double> project(const NearPoint& xi) {
    std::vector<double> out;
    out.reserve(xi.coords.size());
    for (const WeilElement& c : xi.coords) out.push_back(c.augmentation());
    return out;
}

NearPoint include_point(const PresPtr& algebra, std::span<const double> x) {
    NearPoint xi{algebra, {}};
    xi.coords.reserve(x.size());
    for (double v : x) xi.coords.push_back(WeilElement::constant(algebra, v));
    return xi;
}

NearPoint lift_map(std::span<const ExprPtr> components, const NearPoint& xi) {
    NearPoint out{xi.algebra, {}};
    out.coords.reserve(components.size());
    for (const ExprPtr& c : components) out.coords.push_back(eval_weil(c, xi.algebra, xi.coords));
    return out;
}

NearPoint hom_pushforward(const AlgebraHom& phi, const NearPoint& xi) {
    if (!same_presentation(phi.source(), xi.algebra)) throw std::invalid_argument("presentation mismatch");
    NearPoint out{phi.target(), {}};
    out.coords.reserve(xi.coords.size());
    for (const WeilElement& c : xi.coords) out.coords.push_back(phi.apply(c));
    return out;
}

TangentVectorA prolong_field(const VectorField& theta, const NearPoint& xi) {
    if (theta.chart_dim != xi.dim()) throw std::invalid_argument("field dimension does not match near point");
    TangentVectorA out{xi, {}};
    out.components.reserve(theta.components.size());
    for (const ExprPtr& c : theta.components) out.components.push_back(eval_weil(c, xi.algebra, xi.coords));
    return out;
}

WeilElement field_apply(const TangentVectorA& X, const ExprPtr& f) {
    WeilElement acc = WeilElement::zero(X.foot.algebra);
    for (int i = 0; i < X.foot.dim(); ++i) {
        ExprPtr df = derive(f, i);
        acc = acc + X.components[static_cast<std::size_t>(i)] * eval_weil(df, X.foot.algebra, X.foot.coords);
    }
    return acc;
}

std::vector<double> sigma_decompose(const WeilElement& a) {
    return std::vector<double>(a.coeffs().begin(), a.coeffs().end());
}

WeilElement sigma_recompose(const PresPtr& algebra, std::span<const double> coeffs) {
    if (static_cast<int>(coeffs.size()) != algebra->dim())
        throw std::invalid_argument("length mismatch: expected " + std::to_string(algebra->dim()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    return WeilElement(algebra, std::vector<double>(coeffs.begin(), coeffs.end()));
}

std::vector<std::vector<double>> canonical_iso(const NearPoint& xi) {
    std::vector<std::vector<double>> rows;
    rows.reserve(xi.coords.size());
    for (const WeilElement& c : xi.coords) rows.push_back(sigma_decompose(c));
    return rows;
}

NearPoint canonical_iso_inverse(const PresPtr& algebra, const std::vector<std::vector<double>>& rows) {
    NearPoint xi{algebra, {}};
    xi.coords.reserve(rows.size());
    for (const auto& row : rows) xi.coords.push_back(sigma_recompose(algebra, row));
    return xi;
}

std::vector<WeilElement> frame_matrix(std::span<const VectorField> fields, const NearPoint& xi) {
    const int n = xi.dim();
    if (static_cast<int>(fields.size()) != n) throw std::invalid_argument("need n fields on an n-dimensional chart");
    std::vector<WeilElement> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                               WeilElement::zero(xi.algebra));
    for (int j = 0; j < n; ++j) {
        TangentVectorA col = prolong_field(fields[static_cast<std::size_t>(j)], xi);
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                col.components[static_cast<std::size_t>(i)];
    }
    return m;
}

namespace {

WeilElement det_cofactor_rec(const std::vector<WeilElement>& m, int n) {
    if (n == 1) return m[0];
    const PresPtr& pres = m[0].presentation();
    WeilElement acc = WeilElement::zero(pres);
    for (int j = 0; j < n; ++j) {
        std::vector<WeilElement> minor;
        minor.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != j) minor.push_back(m[static_cast<std::size_t>(r * n + c)]);
        WeilElement term = m[static_cast<std::size_t>(j)] * det_cofactor_rec(minor, n - 1);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// One step of Bird's division-free determinant iteration: mu(X) keeps the
/// strict upper triangle, zeroes the lower one and replaces the diagonal
/// entry i by minus the sum of the diagonal entries below it.
std::vector<WeilElement> bird_mu(const std::vector<WeilElement>& x, int n, const PresPtr& pres) {
    std::vector<WeilElement> out(x.size(), WeilElement::zero(pres));
    WeilElement tail = WeilElement::zero(pres);
    for (int i = n - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i * n + i)] = -tail;
        tail = tail + x[static_cast<std::size_t>(i * n + i)];
        for (int j = i + 1; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = x[static_cast<std::size_t>(i * n + j)];
    }
    return out;
}

std::vector<WeilElement> mat_mul(const std::vector<WeilElement>& a, const std::vector<WeilElement>& b, int n,
                                 const PresPtr& pres) {
    std::vector<WeilElement> out(a.size(), WeilElement::zero(pres));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            WeilElement acc = WeilElement::zero(pres);
            for (int k = 0; k < n; ++k)
                acc = acc + a[static_cast<std::size_t>(i * n + k)] * b[static_cast<std::size_t>(k * n + j)];
            out[static_cast<std::size_t>(i * n + j)] = acc;
        }
    return out;
}

WeilElement det_bird(const std::vector<WeilElement>& m, int n) {
    const PresPtr& pres = m[0].presentation();
    std::vector<WeilElement> x = m;
    for (int step = 1; step < n; ++step) x = mat_mul(bird_mu(x, n, pres), m, n, pres);
    return (n % 2 == 1) ? x[0] : -x[0];
}

/// Determinant of a real matrix by LU with partial pivoting.
double det_real(std::vector<double> m, int n) {
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m[static_cast<std::size_t>(r * n + col)]) >
                std::fabs(m[static_cast<std::size_t>(pivot * n + col)]))
                pivot = r;
        if (m[static_cast<std::size_t>(pivot * n + col)] == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<std::size_t>(col * n + c)], m[static_cast<std::size_t>(pivot * n + c)]);
            det = -det;
        }
        const double p = m[static_cast<std::size_t>(col * n + col)];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            const double factor = m[static_cast<std::size_t>(r * n + col)] / p;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r * n + c)] -= factor * m[static_cast<std::size_t>(col * n + c)];
        }
    }
    return det;
}

}  // namespace

WeilElement det_cofactor(std::span<const WeilElement> matrix, int n) {
    if (n <= 0 || static_cast<int>(matrix.size()) != n * n) throw std::invalid_argument("matrix must be n x n, n >= 1");
    return det_cofactor_rec(std::vector<WeilElement>(matrix.begin(), matrix.end()), n);
}

WeilElement det_over_algebra(std::span<const WeilElement> matrix, int n) {
    if (n <= 0 || static_cast<int>(matrix.size()) != n * n) throw std::invalid_argument("matrix must be n x n, n >= 1");
    std::vector<WeilElement> m(matrix.begin(), matrix.end());
    if (n <= 4) return det_cofactor_rec(m, n);
    return det_bird(m, n);
}

std::string to_string(FrameVerdict v) {
    switch (v) {
        case FrameVerdict::Pass: return "pass";
        case FrameVerdict::Fail: return "fail";
        case FrameVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

FrameTest frame_test(std::span<const VectorField> fields, const NearPoint& xi) {
    const int n = xi.dim();
    std::vector<WeilElement> m = frame_matrix(fields, xi);

    FrameTest t;
    t.aug_det = det_over_algebra(m, n).augmentation();

    std::vector<double> aug(m.size());
    double max_entry = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        aug[i] = m[i].augmentation();
        max_entry = std::max(max_entry, std::fabs(aug[i]));
    }
    t.real_det = det_real(aug, n);

    // Invertibility over A depends only on the augmented matrix; the
    // determinant scale is bounded by (max entry)^n, so thresholds are set
    // relative to that.
    const double scale = ipow_double(max_entry, n);
    t.threshold = 1e-9 * scale;
    const double floor = 1e-14 * scale;

    auto classify = [&](double d) {
        if (std::fabs(d) > t.threshold) return FrameVerdict::Pass;
        if (std::fabs(d) <= floor) return FrameVerdict::Fail;
        return FrameVerdict::Indeterminate;
    };
    FrameVerdict via_algebra = classify(t.aug_det);
    FrameVerdict via_real = classify(t.real_det);
    t.verdict = (via_algebra == via_real) ? via_algebra : FrameVerdict::Indeterminate;
    return t;
}

bool frame_is_basis(std::span<const VectorField> fields, const NearPoint& xi) {
    return frame_test(fields, xi).verdict == FrameVerdict::Pass;
}

}  // namespace weil
