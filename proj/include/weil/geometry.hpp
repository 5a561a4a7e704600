#pragma once

#include <span>
#include <string>
#include <vector>

#include "weil/expr.hpp"
#include "weil/hom.hpp"

namespace weil {

/// A near point of kind A on the chart R^n: the images of the chart
/// coordinates under the corresponding algebra homomorphism, i.e. an
/// element of A^n. The base point is the componentwise augmentation.
struct NearPoint {
    PresPtr algebra;
    std::vector<WeilElement> coords;

    int dim() const { return static_cast<int>(coords.size()); }
};

/// A vector field on the chart: n smooth component expressions.
struct VectorField {
    int chart_dim = 0;
    std::vector<ExprPtr> components;
};

VectorField parse_field(const std::vector<std::string>& component_texts);

/// A tangent vector to M^A at a near point, written in the prolonged
/// coordinate frame: n coefficients from A.
struct TangentVectorA {
    NearPoint foot;
    std::vector<WeilElement> components;
};

/// Componentwise augmentation: the projection M^A -> M.
std::vector<double> project(const NearPoint& xi);

/// The canonical inclusion M -> M^A, x -> (x_i * 1_A).
NearPoint include_point(const PresPtr& algebra, std::span<const double> x);

/// The lifted map h^A: evaluate each component of h over A at xi.
NearPoint lift_map(std::span<const ExprPtr> components, const NearPoint& xi);

/// The induced map phi_M: apply an algebra homomorphism to every
/// coordinate. With the augmentation hom this recovers project.
NearPoint hom_pushforward(const AlgebraHom& phi, const NearPoint& xi);

/// Prolongation theta^A evaluated at xi: component i is theta_i lifted
/// over A, the coordinates of theta^A|_xi in the prolonged frame.
TangentVectorA prolong_field(const VectorField& theta, const NearPoint& xi);

/// The derivation value X(f)(xi) = sum_i X_i * (df/dx_i)^A(xi).
WeilElement field_apply(const TangentVectorA& X, const ExprPtr& f);

/// Dual-basis coefficient extraction A -> R^dim and its inverse.
std::vector<double> sigma_decompose(const WeilElement& a);
WeilElement sigma_recompose(const PresPtr& algebra, std::span<const double> coeffs);

/// The canonical A-module isomorphism V^A = V (x) A at chart level:
/// row i holds the basis coefficients of coordinate i.
std::vector<std::vector<double>> canonical_iso(const NearPoint& xi);
NearPoint canonical_iso_inverse(const PresPtr& algebra, const std::vector<std::vector<double>>& rows);

/// Column j holds the components of fields[j] prolonged to xi; row-major
/// n x n matrix over A.
std::vector<WeilElement> frame_matrix(std::span<const VectorField> fields, const NearPoint& xi);

/// Determinant over the commutative ring A: cofactor expansion for
/// n <= 4, Bird's division-free iteration for larger n.
WeilElement det_over_algebra(std::span<const WeilElement> matrix, int n);

/// Cofactor expansion for any n; the cross-check partner of the
/// division-free route.
WeilElement det_cofactor(std::span<const WeilElement> matrix, int n);

enum class FrameVerdict { Pass, Fail, Indeterminate };

std::string to_string(FrameVerdict v);

/// Outcome of the pointwise frame test at one near point.
///
/// The frame is a basis of T_xi M^A iff the frame matrix is invertible
/// over A iff the augmentation of its determinant is nonzero iff the real
/// matrix of entrywise augmentations is invertible. Both determinant
/// routes are computed and cross-checked; disagreement (possible only at
/// the tolerance boundary) yields Indeterminate.
struct FrameTest {
    FrameVerdict verdict = FrameVerdict::Indeterminate;
    double aug_det = 0.0;       // augmentation of the determinant over A
    double real_det = 0.0;      // determinant of the augmented real matrix
    double threshold = 0.0;     // pass threshold, 1e-9 * scale
};

FrameTest frame_test(std::span<const VectorField> fields, const NearPoint& xi);

/// True iff the pointwise test passes cleanly.
bool frame_is_basis(std::span<const VectorField> fields, const NearPoint& xi);

}  // namespace weil
