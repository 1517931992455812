#pragma once

// Scalar encodings of the local argument that rules out points where Aξ has a
// nonzero ker(η) component (β ≠ 0) under φl = lφ.
//
// Notation: U is the unit ker(η) direction of Aξ = αξ + βU, W_1 = ∇_ξ U,
// W_2 = ∇_U U, W_3 = ∇_{φU}U + (c/4α)ξ, κ_i = g(W_i, φU), and (Xf) is the
// derivative of the function f along X.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hyperlab/curvature.hpp"

namespace hyperlab {

/// |(φl − lφ)U| on the 3-dimensional context with α = 0 and Aξ = βU, built
/// and evaluated as operators (expected β²).
double lemma21_pointwise(double c, double beta);

/// Vector with components along ξ, U, φU plus the symbolic W-term that the
/// connection formula leaves undetermined ("" when none).
struct ConnectionEntry {
    double xi = 0.0;
    double u = 0.0;
    double phi_u = 0.0;
    std::string w_term;
};

enum class Direction { Xi, U, PhiU };

struct Lemma22Rows {
    double au_u = 0.0;        // AU = au_u·U + au_xi·ξ
    double au_xi = 0.0;
    double aphiu_phiu = 0.0;  // AφU = aphiu_phiu·φU
    /// (direction, field) ↦ ∇_direction field.
    std::map<std::pair<Direction, Direction>, ConnectionEntry> connection;
};

/// AU = (β²/α − c/4α)U + βξ, AφU = −(c/4α)φU and the nine connection rows of
/// ∇_X ξ, ∇_X U, ∇_X φU for X ∈ {ξ, U, φU}. Throws DomainError for α = 0.
Lemma22Rows lemma22_rows(double alpha, double beta, double c);

struct Kappas {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
};

/// κ₁ = −4α, κ₂ = −4β + (c/(4αβ))(c/(4α) − β²/α). Throws DomainError when
/// α or β vanishes.
Kappas lemma23_kappas(double alpha, double beta, double c);

/// Directional derivatives of a scalar along ξ, U, φU.
struct DirectionalDerivatives {
    double xi = 0.0;
    double u = 0.0;
    double phi_u = 0.0;
};

struct LocalJet {
    double alpha = 1.0;
    double beta = 1.0;
    double c = 4.0;
    double gamma = 0.0;   // g(lU, U)
    double lambda = 0.0;  // g(AU, W)
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;
    DirectionalDerivatives d_alpha;
    DirectionalDerivatives d_beta;
    double w1_norm_sq = 0.0;

    // Second derivatives φU(ξβ) and φU(Uα).
    double phiu_xi_beta = 0.0;
    double phiu_u_alpha = 0.0;

    // Optional extra scalars (φW₂α), (W₃α), (φW₁β).
    std::optional<double> phiw2_alpha;
    std::optional<double> w3_alpha;
    std::optional<double> phiw1_beta;

    /// Throws DomainError unless β > 0 and α ≠ 0.
    void validate() const;
};

/// Jet with κ₃ = 0, vanishing ξ/U-derivatives, κ₁, κ₂ from lemma23_kappas and
/// (φUα), (φUβ) back-solved so every residual row holds.
LocalJet consistent_jet(double alpha, double beta, double c);

struct JetResidualReport {
    std::map<std::string, double> residuals;
    double tolerance = 1e-12;
    bool pass = true;
};

/// Residual |LHS − RHS| per encoded relation. Rows:
///   "U-alpha=xi-beta"     (Uα) = (ξβ)
///   "U-beta"              (Uβ) = ξ(β²/α − c/4α)
///   "phiU-alpha"          (φUα) = 3βc/4α + αβ + κ₁β
///   "phiU-beta"           (φUβ) = (c/4α)(β²/α − c/4α) + β² + κ₁β²/α
///   "U-projection"        −2β(φUα) + 3β²c/2α + αβ² + αβκ₂ + α(φUβ) = 0
///   "gamma", "lambda"     both vanish on every class
///   "kappa1", "kappa2"    the closed forms of lemma23_kappas
///   "xi-alpha", "U-alpha", "xi-beta", "U-beta-kappa3"
///                         derivatives in terms of κ₃
///   "phiU-xi-beta", "phiU-U-alpha"
///                         second derivatives in terms of κ₃
///   "phiU-of-U-alpha=xi-beta"
///                         φU applied to (Uα) = (ξβ)
///   "phiW2-alpha", "W3-alpha", "phiW1-beta"
///                         only when the jet carries those scalars
JetResidualReport jet_residuals(const LocalJet& jet, double tolerance = 1e-12);

enum class CertificateVerdict {
    DiscriminantPositive,    // f(ω) has real roots: "positive for all ω, β" fails
    DiscriminantNonPositive
};

std::string_view to_string(CertificateVerdict v);

struct ContradictionCertificate {
    double factor = 0.0;               // c − 4α² − 2β²
    bool factor_branch = false;        // factor vanishes (κ₃ ≠ 0 allowed only here)
    double xi_derivative_sum = 0.0;    // 2α² + β², forced to 0 on the factor branch
    bool derivative_branch_rejected = false;
    double discriminant = 0.0;         // 3600c² − 3072cβ²
    double vertex_omega = 0.0;         // −60c / 128
    double vertex_value = 0.0;         // f at the vertex
    std::optional<double> w1_identity_residual;
    CertificateVerdict verdict = CertificateVerdict::DiscriminantNonPositive;
};

/// f(ω) = 64ω² + 60cω + 12cβ² with ω = α², together with the factor branch and
/// the optional |W₁|² identity
///   12(5α² + β²)c + 64α⁴ − 16α²(|W₁|² + 3β²) − 3c².
ContradictionCertificate contradiction_certificate(double c, double alpha, double beta,
                                                   std::optional<double> w1_norm_sq = std::nullopt,
                                                   double tolerance = 1e-12);

/// (2.25 right side) − (2.26 right side); equals −(β/α)(c − 4α² − 2β²)κ₃.
double kappa3_compatibility(const LocalJet& jet);

/// 5-dimensional context in the frame U = e₀, W = e₁, φU = e₂, φW = e₃, ξ = e₄
/// with Aξ = αξ + βU, AU = (γ/α − c/4α + β²/α)U + βξ + λW and
/// AφU = (γ/α − c/4α)φU + λφW. With γ = λ = 0 this is the shape that
/// lemma22_rows describes. Throws DomainError for α = 0.
CurvatureContext lemma22_context(double alpha, double beta, double c, double gamma = 0.0,
                                 double lambda = 0.0);

}  // namespace hyperlab
