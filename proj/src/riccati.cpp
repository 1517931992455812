#include "hyperlab/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperlab/errors.hpp"

namespace hyperlab {

double riccati_shape_evolution(double kappa, double r, double r0, double lambda0, const RiccatiOptions& options)
{
    if (!(options.step > 0.0) || !std::isfinite(r) || !std::isfinite(r0) || !std::isfinite(lambda0)) {
        throw StructuralError("riccati: step must be positive and inputs finite");
    }
    const double span = r - r0;
    if (span == 0.0) {
        return lambda0;
    }
    const auto steps = static_cast<long>(std::ceil(std::abs(span) / options.step));
    const double h = span / static_cast<double>(steps);
    auto f = [kappa](double lambda) { return -(lambda * lambda + kappa); };

    double lambda = lambda0;
    for (long i = 0; i < steps; ++i) {
        const double k1 = f(lambda);
        const double k2 = f(lambda + 0.5 * h * k1);
        const double k3 = f(lambda + 0.5 * h * k2);
        const double k4 = f(lambda + h * k3);
        lambda += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(lambda) || std::abs(lambda) > options.blowup) {
            std::ostringstream os;
            os << "riccati solution blew up near r = " << r0 + h * static_cast<double>(i + 1)
               << " (focal radius) before reaching r = " << r;
            throw FocalPointError(os.str());
        }
    }
    return lambda;
}

JacobiState jacobi_field(double kappa, double length, JacobiState initial, double step)
{
    if (length == 0.0) {
        return initial;
    }
    const auto steps = static_cast<long>(std::ceil(std::abs(length) / step));
    const double h = length / static_cast<double>(steps);
    JacobiState s = initial;
    for (long i = 0; i < steps; ++i) {
        // (y, dy)' = (dy, −κ y)
        const double k1y = s.dy;
        const double k1d = -kappa * s.y;
        const double k2y = s.dy + 0.5 * h * k1d;
        const double k2d = -kappa * (s.y + 0.5 * h * k1y);
        const double k3y = s.dy + 0.5 * h * k2d;
        const double k3d = -kappa * (s.y + 0.5 * h * k2y);
        const double k4y = s.dy + h * k3d;
        const double k4d = -kappa * (s.y + h * k3y);
        s.y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        s.dy += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    }
    return s;
}

double evaluate_branch(const RiccatiBranch& branch, double r, const RiccatiOptions& options)
{
    switch (branch.kind) {
    case BranchKind::Horospheric: {
        if (branch.kappa >= 0.0) {
            throw StructuralError("horospheric branch needs negative radial curvature");
        }
        return riccati_shape_evolution(branch.kappa, r, branch.origin, std::sqrt(-branch.kappa), options);
    }
    case BranchKind::Tangent:
        return riccati_shape_evolution(branch.kappa, r, branch.origin, 0.0, options);
    case BranchKind::Focal: {
        const double distance = r - branch.origin;
        if (!(distance > 0.0)) {
            throw FocalPointError("focal branch evaluated at or before its focal radius");
        }
        const double leg = std::min(0.05, 0.5 * distance);
        const auto start = jacobi_field(branch.kappa, leg, {0.0, 1.0}, std::min(options.step, leg / 64.0));
        return riccati_shape_evolution(branch.kappa, r, branch.origin + leg, start.dy / start.y, options);
    }
    }
    return 0.0;
}

}  // namespace hyperlab
