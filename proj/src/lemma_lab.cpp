#include "hyperlab/lemma_lab.hpp"

#include <cmath>

#include "hyperlab/errors.hpp"

namespace hyperlab {

namespace {

void require_alpha(double alpha, const char* where)
{
    if (alpha == 0.0 || !std::isfinite(alpha)) {
        throw DomainError(std::string(where) + ": alpha must be nonzero");
    }
}

}  // namespace

double lemma21_pointwise(double c, double beta)
{
    auto acs = AlmostContactStructure::canonical(2);
    const Vector u = Vector::Unit(3, 0);
    const Vector xi = acs.xi();
    Matrix a = beta * (u * xi.transpose() + xi * u.transpose());
    const CurvatureContext ctx(std::move(acs), std::move(a), c);
    const Matrix l = jacobi_operator(ctx);
    const Matrix& phi = ctx.acs().phi();
    return ctx.space().norm(commutator(phi, l) * u);
}

Lemma22Rows lemma22_rows(double alpha, double beta, double c)
{
    require_alpha(alpha, "lemma22_rows");
    const double q = c / (4.0 * alpha);       // c/4α
    const double p = beta * beta / alpha - q;  // β²/α − c/4α

    Lemma22Rows out;
    out.au_u = p;
    out.au_xi = beta;
    out.aphiu_phiu = -q;

    using D = Direction;
    auto& t = out.connection;
    t[{D::Xi, D::Xi}] = {0.0, 0.0, beta, ""};
    t[{D::U, D::Xi}] = {0.0, 0.0, p, ""};
    t[{D::PhiU, D::Xi}] = {0.0, q, 0.0, ""};
    t[{D::Xi, D::U}] = {0.0, 0.0, 0.0, "W1"};
    t[{D::U, D::U}] = {0.0, 0.0, 0.0, "W2"};
    t[{D::PhiU, D::U}] = {-q, 0.0, 0.0, "W3"};
    t[{D::Xi, D::PhiU}] = {-beta, 0.0, 0.0, "phiW1"};
    t[{D::U, D::PhiU}] = {-p, 0.0, 0.0, "phiW2"};
    t[{D::PhiU, D::PhiU}] = {0.0, 0.0, 0.0, "phiW3"};
    return out;
}

Kappas lemma23_kappas(double alpha, double beta, double c)
{
    require_alpha(alpha, "lemma23_kappas");
    if (beta == 0.0 || !std::isfinite(beta)) {
        throw DomainError("lemma23_kappas: beta must be nonzero");
    }
    const double q = c / (4.0 * alpha);
    return {-4.0 * alpha, -4.0 * beta + (c / (4.0 * alpha * beta)) * (q - beta * beta / alpha)};
}

void LocalJet::validate() const
{
    if (!(beta > 0.0)) {
        throw DomainError("jet needs beta > 0");
    }
    require_alpha(alpha, "jet");
    if (c == 0.0) {
        throw DomainError("jet needs c != 0");
    }
}

LocalJet consistent_jet(double alpha, double beta, double c)
{
    const Kappas k = lemma23_kappas(alpha, beta, c);
    LocalJet jet;
    jet.alpha = alpha;
    jet.beta = beta;
    jet.c = c;
    jet.kappa1 = k.kappa1;
    jet.kappa2 = k.kappa2;
    jet.kappa3 = 0.0;
    const double q = c / (4.0 * alpha);
    jet.d_alpha.phi_u = 3.0 * beta * q + alpha * beta + k.kappa1 * beta;
    jet.d_beta.phi_u = q * (beta * beta / alpha - q) + beta * beta + k.kappa1 * beta * beta / alpha;
    jet.validate();
    return jet;
}

double kappa3_compatibility(const LocalJet& jet)
{
    const double a = jet.alpha;
    const double b = jet.beta;
    const double c = jet.c;
    const double rhs25 = b * jet.kappa3 * (3.0 * c / (4.0 * a) + b * b / a - 4.0 * a - 36.0 * a * b * b / c);
    const double rhs26 = b * jet.kappa3 * (7.0 * c / (4.0 * a) - 8.0 * a - 36.0 * a * b * b / c - b * b / a);
    return rhs25 - rhs26;
}

JetResidualReport jet_residuals(const LocalJet& jet, double tolerance)
{
    jet.validate();
    const double a = jet.alpha;
    const double b = jet.beta;
    const double c = jet.c;
    const double k1 = jet.kappa1;
    const double k2 = jet.kappa2;
    const double k3 = jet.kappa3;
    const auto& da = jet.d_alpha;
    const auto& db = jet.d_beta;
    const double q = c / (4.0 * a);

    JetResidualReport r;
    auto& row = r.residuals;

    row["gamma"] = std::abs(jet.gamma);
    row["lambda"] = std::abs(jet.lambda);
    row["U-alpha=xi-beta"] = std::abs(da.u - db.xi);
    // ξ(β²/α − c/4α) by the quotient rule.
    const double xi_of_p = 2.0 * b * db.xi / a - b * b * da.xi / (a * a) + c * da.xi / (4.0 * a * a);
    row["U-beta"] = std::abs(db.u - xi_of_p);
    row["phiU-alpha"] = std::abs(da.phi_u - (3.0 * b * q + a * b + k1 * b));
    row["phiU-beta"] = std::abs(db.phi_u - (q * (b * b / a - q) + b * b + k1 * b * b / a));
    row["U-projection"] = std::abs(-2.0 * b * da.phi_u + 3.0 * b * b * c / (2.0 * a) + a * b * b +
                                   a * b * k2 + a * db.phi_u);

    const Kappas expected = lemma23_kappas(a, b, c);
    row["kappa1"] = std::abs(k1 - expected.kappa1);
    row["kappa2"] = std::abs(k2 - expected.kappa2);

    row["xi-alpha"] = std::abs(da.xi - 4.0 * a * a * b * k3 / c);
    row["U-alpha"] = std::abs(da.u - 4.0 * a * b * b * k3 / c);
    row["xi-beta"] = std::abs(db.xi - 4.0 * a * b * b * k3 / c);
    row["U-beta-kappa3"] = std::abs(db.u - (b + 4.0 * b * b * b / c) * k3);

    row["phiU-xi-beta"] =
        std::abs(jet.phiu_xi_beta - b * k3 * (3.0 * c / (4.0 * a) + b * b / a - 4.0 * a - 36.0 * a * b * b / c));
    row["phiU-U-alpha"] =
        std::abs(jet.phiu_u_alpha - b * k3 * (7.0 * c / (4.0 * a) - 8.0 * a - 36.0 * a * b * b / c - b * b / a));
    row["phiU-of-U-alpha=xi-beta"] = std::abs(jet.phiu_u_alpha - jet.phiu_xi_beta);

    if (jet.phiw2_alpha) {
        row["phiW2-alpha"] = std::abs(*jet.phiw2_alpha - k3 * (16.0 * a * b * b * b / c + b * (b * b / a - q)));
    }
    if (jet.w3_alpha) {
        row["W3-alpha"] = std::abs(*jet.w3_alpha - 3.0 * b * (q - a) * k3);
    }
    if (jet.phiw1_beta) {
        row["phiW1-beta"] = std::abs(*jet.phiw1_beta - 4.0 * a * k3 * (b + 4.0 * b * b * b / c));
    }

    r.tolerance = tolerance;
    r.pass = true;
    for (const auto& [name, value] : row) {
        if (!(value <= tolerance)) {
            r.pass = false;
        }
    }
    return r;
}

std::string_view to_string(CertificateVerdict v)
{
    return v == CertificateVerdict::DiscriminantPositive ? "discriminant-positive"
                                                          : "discriminant-non-positive";
}

ContradictionCertificate contradiction_certificate(double c, double alpha, double beta,
                                                   std::optional<double> w1_norm_sq, double tolerance)
{
    if (c == 0.0) {
        throw DomainError("certificate needs c != 0");
    }
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;

    ContradictionCertificate out;
    out.factor = c - 4.0 * a2 - 2.0 * b2;
    out.factor_branch = std::abs(out.factor) <= tolerance * (1.0 + std::abs(c));
    out.xi_derivative_sum = 2.0 * a2 + b2;
    out.derivative_branch_rejected = out.xi_derivative_sum > 0.0;
    out.discriminant = 3600.0 * c * c - 3072.0 * c * b2;
    out.vertex_omega = -60.0 * c / 128.0;
    out.vertex_value = 64.0 * out.vertex_omega * out.vertex_omega + 60.0 * c * out.vertex_omega + 12.0 * c * b2;
    if (w1_norm_sq) {
        out.w1_identity_residual =
            12.0 * (5.0 * a2 + b2) * c + 64.0 * a2 * a2 - 16.0 * a2 * (*w1_norm_sq + 3.0 * b2) - 3.0 * c * c;
    }
    out.verdict = out.discriminant > 0.0 ? CertificateVerdict::DiscriminantPositive
                                         : CertificateVerdict::DiscriminantNonPositive;
    return out;
}

CurvatureContext lemma22_context(double alpha, double beta, double c, double gamma, double lambda)
{
    require_alpha(alpha, "lemma22_context");
    auto acs = AlmostContactStructure::canonical(3);
    constexpr int u = 0, w = 1, phiu = 2, phiw = 3, xi = 4;
    const double q = c / (4.0 * alpha);
    Matrix a = Matrix::Zero(5, 5);
    a(xi, xi) = alpha;
    a(u, xi) = a(xi, u) = beta;
    a(u, u) = gamma / alpha - q + beta * beta / alpha;
    a(u, w) = a(w, u) = lambda;
    a(phiu, phiu) = gamma / alpha - q;
    a(phiu, phiw) = a(phiw, phiu) = lambda;
    return CurvatureContext(std::move(acs), std::move(a), c);
}

}  // namespace hyperlab
