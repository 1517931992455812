#pragma once

// Curvature of a real hypersurface M in a complex space form M_n(c), c ≠ 0,
// evaluated at one point from (φ, ξ, η, g), the shape operator A and c.

#include <functional>
#include <optional>

#include "hyperlab/tensor_core.hpp"

namespace hyperlab {

class CurvatureContext {
public:
    /// Throws StructuralError if A is not g-symmetric, c = 0, or shapes disagree.
    CurvatureContext(AlmostContactStructure acs, Matrix shape, double c);

    const AlmostContactStructure& acs() const { return acs_; }
    const TangentSpace& space() const { return acs_.space(); }
    const Matrix& shape() const { return shape_; }
    double c() const { return c_; }
    int dim() const { return acs_.dim(); }

    /// α = g(Aξ, ξ).
    double alpha() const;
    Vector shape_xi() const { return shape_ * acs_.xi(); }

private:
    AlmostContactStructure acs_;
    Matrix shape_;
    double c_;
};

/// Pointwise covariant derivative of the shape operator: (X, Y) ↦ (∇_X A)Y.
///
/// An optional scalar provider W ↦ W(α) may be attached; nabla_l takes the
/// derivative of α from it and treats α as constant otherwise.
class NablaAProvider {
public:
    using Fn = std::function<Vector(const Vector& x, const Vector& y)>;
    using ScalarFn = std::function<double(const Vector& w)>;

    explicit NablaAProvider(Fn fn) : fn_(std::move(fn)) {}

    Vector operator()(const Vector& x, const Vector& y) const { return fn_(x, y); }
    /// Matrix of Y ↦ (∇_X A)Y.
    Matrix along(const Vector& x) const;

    NablaAProvider with_alpha_derivative(ScalarFn fn) const;
    const std::optional<ScalarFn>& alpha_derivative() const { return alpha_derivative_; }

private:
    Fn fn_;
    std::optional<ScalarFn> alpha_derivative_;
};

/// Gauss equation:
///   R(X,Y)Z = (c/4)[g(Y,Z)X − g(X,Z)Y + g(φY,Z)φX − g(φX,Z)φY − 2g(φX,Y)φZ]
///             + g(AY,Z)AX − g(AX,Z)AY.
Vector gauss_curvature(const CurvatureContext& ctx, const Vector& x, const Vector& y, const Vector& z);

/// Jacobi structure operator l = R(·, ξ)ξ, column by column from the Gauss equation.
Matrix jacobi_operator(const CurvatureContext& ctx);

/// Closed form lX = (c/4)(X − η(X)ξ) + αAX − g(AX, ξ)Aξ.
Matrix jacobi_closed_form(const CurvatureContext& ctx);

/// Max-abs entry of the difference between the two routes to l.
double jacobi_route_discrepancy(const CurvatureContext& ctx);

/// (∇_X A)Y − (∇_Y A)X − (c/4)[η(X)φY − η(Y)φX − 2g(φX, Y)ξ].
Vector codazzi_residual(const CurvatureContext& ctx, const NablaAProvider& nabla_a, const Vector& x,
                        const Vector& y);

/// Matrix of X ↦ (∇_W l)X, the product-rule derivative of the closed form of l
/// with ∇_W ξ = φAW and (∇_W η)X = g(X, φAW). Throws UnsupportedOperationError
/// when no provider is given.
Matrix nabla_l(const CurvatureContext& ctx, const NablaAProvider* nabla_a, const Vector& w);
inline Matrix nabla_l(const CurvatureContext& ctx, const NablaAProvider& nabla_a, const Vector& w)
{
    return nabla_l(ctx, &nabla_a, w);
}

/// PQ − QP.
Matrix commutator(const Matrix& p, const Matrix& q);

}  // namespace hyperlab
