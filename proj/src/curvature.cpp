#include "hyperlab/curvature.hpp"

#include <cmath>

#include "hyperlab/errors.hpp"

namespace hyperlab {

CurvatureContext::CurvatureContext(AlmostContactStructure acs, Matrix shape, double c)
    : acs_(std::move(acs)), shape_(std::move(shape)), c_(c)
{
    acs_.space().require_matrix(shape_, "shape operator");
    if (c_ == 0.0 || !std::isfinite(c_)) {
        throw StructuralError("holomorphic sectional curvature c must be finite and nonzero");
    }
    const Matrix& g = acs_.space().gram();
    const Matrix skew = g * shape_ - shape_.transpose() * g;
    const double scale = 1.0 + (g * shape_).cwiseAbs().maxCoeff();
    if (skew.cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw StructuralError("shape operator is not symmetric with respect to g");
    }
}

double CurvatureContext::alpha() const
{
    return acs_.inner(shape_xi(), acs_.xi());
}

Matrix NablaAProvider::along(const Vector& x) const
{
    const auto m = x.size();
    Matrix out(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        out.col(j) = fn_(x, Vector::Unit(m, j));
    }
    return out;
}

NablaAProvider NablaAProvider::with_alpha_derivative(ScalarFn fn) const
{
    NablaAProvider copy = *this;
    copy.alpha_derivative_ = std::move(fn);
    return copy;
}

Vector gauss_curvature(const CurvatureContext& ctx, const Vector& x, const Vector& y, const Vector& z)
{
    const auto& acs = ctx.acs();
    const auto& space = ctx.space();
    space.require_vector(x, "X");
    space.require_vector(y, "Y");
    space.require_vector(z, "Z");

    const Matrix& phi = acs.phi();
    const Matrix& a = ctx.shape();
    const Vector phix = phi * x;
    const Vector phiy = phi * y;
    const Vector ax = a * x;
    const Vector ay = a * y;

    const Vector ambient = space.inner(y, z) * x - space.inner(x, z) * y + space.inner(phiy, z) * phix -
                           space.inner(phix, z) * phiy - 2.0 * space.inner(phix, y) * (phi * z);
    return (ctx.c() / 4.0) * ambient + space.inner(ay, z) * ax - space.inner(ax, z) * ay;
}

Matrix jacobi_operator(const CurvatureContext& ctx)
{
    const int m = ctx.dim();
    const Vector& xi = ctx.acs().xi();
    Matrix l(m, m);
    for (int j = 0; j < m; ++j) {
        l.col(j) = gauss_curvature(ctx, Vector::Unit(m, j), xi, xi);
    }
    return l;
}

Matrix jacobi_closed_form(const CurvatureContext& ctx)
{
    const auto& acs = ctx.acs();
    const int m = ctx.dim();
    const Matrix& a = ctx.shape();
    const Vector axi = ctx.shape_xi();
    // g(AX, ξ) = X^T (A^T G ξ)
    const Vector row = a.transpose() * (acs.space().gram() * acs.xi());
    return (ctx.c() / 4.0) * (Matrix::Identity(m, m) - acs.eta_xi()) + ctx.alpha() * a -
           axi * row.transpose();
}

double jacobi_route_discrepancy(const CurvatureContext& ctx)
{
    return (jacobi_operator(ctx) - jacobi_closed_form(ctx)).cwiseAbs().maxCoeff();
}

Vector codazzi_residual(const CurvatureContext& ctx, const NablaAProvider& nabla_a, const Vector& x,
                        const Vector& y)
{
    const auto& acs = ctx.acs();
    acs.space().require_vector(x, "X");
    acs.space().require_vector(y, "Y");
    const Vector phix = acs.phi() * x;
    const Vector phiy = acs.phi() * y;
    const Vector rhs =
        (ctx.c() / 4.0) * (acs.eta_of(x) * phiy - acs.eta_of(y) * phix - 2.0 * acs.inner(phix, y) * acs.xi());
    return nabla_a(x, y) - nabla_a(y, x) - rhs;
}

Matrix nabla_l(const CurvatureContext& ctx, const NablaAProvider* nabla_a, const Vector& w)
{
    if (nabla_a == nullptr) {
        throw UnsupportedOperationError("nabla_l needs a nabla-A provider; instance is pointwise-only");
    }
    const auto& acs = ctx.acs();
    const auto& space = ctx.space();
    space.require_vector(w, "W");

    const Matrix& a = ctx.shape();
    const Matrix& g = space.gram();
    const Vector& xi = acs.xi();
    const double alpha = ctx.alpha();

    const Vector dxi = acs.phi() * (a * w);  // ∇_W ξ
    const Matrix dshape = nabla_a->along(w);  // ∇_W A
    const double dalpha = nabla_a->alpha_derivative() ? (*nabla_a->alpha_derivative())(w) : 0.0;

    const Vector v = ctx.shape_xi();                 // Aξ
    const Vector dv = dshape * xi + a * dxi;         // ∇_W(Aξ)

    // (c/4)(I − η⊗ξ):  −(c/4)[(∇_W η)(X) ξ + η(X) ∇_W ξ]
    const Matrix ambient = -(ctx.c() / 4.0) * (xi * (g * dxi).transpose() + dxi * acs.eta().transpose());
    // αA
    const Matrix principal = dalpha * a + alpha * dshape;
    // X ↦ g(X, Aξ) Aξ
    const Matrix rank_one = v * (g * dv).transpose() + dv * (g * v).transpose();

    return ambient + principal - rank_one;
}

Matrix commutator(const Matrix& p, const Matrix& q)
{
    if (p.rows() != q.rows() || p.cols() != q.cols() || p.rows() != p.cols()) {
        throw StructuralError("commutator needs square operators of equal size");
    }
    return p * q - q * p;
}

}  // namespace hyperlab
