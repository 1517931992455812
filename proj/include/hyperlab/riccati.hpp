#pragma once

// Radial ODE oracle for tube principal curvatures.
//
// Along a unit-speed normal geodesic the Jacobi equation Y'' + κY = 0 holds in
// each eigendirection of the ambient radial curvature (κ = c on the ξ-line,
// κ = c/4 on the rest). A principal curvature is λ = Y'/Y, which satisfies the
// Riccati equation λ' = −(λ² + κ). Both are integrated with classical fixed-step
// RK4; neither routine knows any closed-form solution.

namespace hyperlab {

struct RiccatiOptions {
    double step = 1e-5;
    double blowup = 1e6;
};

/// Integrates λ' = −(λ² + κ) from (r0, λ0) to r (either direction). Throws
/// FocalPointError once |λ| exceeds options.blowup before reaching r.
double riccati_shape_evolution(double kappa, double r, double r0, double lambda0,
                               const RiccatiOptions& options = {});

struct JacobiState {
    double y = 0.0;
    double dy = 0.0;
};

/// Integrates Y'' + κY = 0 from s = 0 to s = length.
JacobiState jacobi_field(double kappa, double length, JacobiState initial, double step = 1e-5);

/// How the Riccati solution is anchored.
enum class BranchKind {
    Focal,       // λ → +∞ at the origin: Y(origin) = 0, Y'(origin) = 1
    Tangent,     // λ(origin) = 0: Y(origin) = 1, Y'(origin) = 0
    Horospheric  // constant λ = √(−κ), κ < 0
};

struct RiccatiBranch {
    double kappa = 0.0;
    BranchKind kind = BranchKind::Focal;
    double origin = 0.0;
};

/// Value of the branch at radius r. Focal branches leave the singular origin
/// on a short Jacobi-field leg, then continue with the Riccati integrator.
double evaluate_branch(const RiccatiBranch& branch, double r, const RiccatiOptions& options = {});

}  // namespace hyperlab
