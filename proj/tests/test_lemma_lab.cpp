#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperlab/errors.hpp"
#include "hyperlab/hopf.hpp"
#include "hyperlab/lemma_lab.hpp"

using namespace hyperlab;

namespace {

constexpr int U = 0, W = 1, PHIU = 2, PHIW = 3, XI = 4;

/// Jet on the κ₃ branch, written straight from the derivative formulas.
LocalJet kappa3_jet(double alpha, double beta, double c, double kappa3)
{
    LocalJet j;
    j.alpha = alpha;
    j.beta = beta;
    j.c = c;
    j.kappa1 = -4.0 * alpha;
    j.kappa2 = -4.0 * beta + (c / (4.0 * alpha * beta)) * (c / (4.0 * alpha) - beta * beta / alpha);
    j.kappa3 = kappa3;
    j.d_alpha.xi = 4.0 * alpha * alpha * beta * kappa3 / c;
    j.d_alpha.u = 4.0 * alpha * beta * beta * kappa3 / c;
    j.d_beta.xi = j.d_alpha.u;
    j.d_beta.u = (beta + 4.0 * beta * beta * beta / c) * kappa3;
    j.d_alpha.phi_u = 3.0 * beta * c / (4.0 * alpha) + alpha * beta + j.kappa1 * beta;
    j.d_beta.phi_u = (c / (4.0 * alpha)) * (beta * beta / alpha - c / (4.0 * alpha)) + beta * beta +
                     j.kappa1 * beta * beta / alpha;
    j.phiu_xi_beta = beta * kappa3 *
                     (3.0 * c / (4.0 * alpha) + beta * beta / alpha - 4.0 * alpha - 36.0 * alpha * beta * beta / c);
    j.phiu_u_alpha = beta * kappa3 *
                     (7.0 * c / (4.0 * alpha) - 8.0 * alpha - 36.0 * alpha * beta * beta / c - beta * beta / alpha);
    return j;
}

}  // namespace

TEST_CASE("alpha = 0 commutator norm is beta squared")
{
    for (double c : {-8.0, -4.0, -1.0, 1.0, 4.0, 8.0}) {
        for (double beta : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
            CHECK(std::abs(lemma21_pointwise(c, beta) - beta * beta) < 1e-12);
        }
    }
    CHECK(lemma21_pointwise(4.0, 0.0) == 0.0);
}

TEST_CASE("shape rows and the model context")
{
    const double alpha = 1.3, beta = 0.7, c = 4.0;
    const auto rows = lemma22_rows(alpha, beta, c);
    CHECK(rows.au_u == doctest::Approx(beta * beta / alpha - c / (4.0 * alpha)));
    CHECK(rows.au_xi == beta);
    CHECK(rows.aphiu_phiu == doctest::Approx(-c / (4.0 * alpha)));

    const auto ctx = lemma22_context(alpha, beta, c);
    const Matrix& a = ctx.shape();
    CHECK(a(U, U) == doctest::Approx(rows.au_u));
    CHECK(a(XI, U) == doctest::Approx(rows.au_xi));
    CHECK(a(PHIU, PHIU) == doctest::Approx(rows.aphiu_phiu));
    CHECK((ctx.acs().phi() * Vector::Unit(5, U) - Vector::Unit(5, PHIU)).norm() == 0.0);
    CHECK((ctx.acs().phi() * Vector::Unit(5, W) - Vector::Unit(5, PHIW)).norm() == 0.0);

    // With γ = λ = 0 the operator relations lU = 0 and φl = lφ hold.
    const Matrix l = jacobi_operator(ctx);
    CHECK((l * Vector::Unit(5, U)).norm() < 1e-14);
    CHECK(check_phi_l_commute(ctx, Subspace::KerEta).pass);
    CHECK(check_l_a_commute(ctx, Subspace::SpanXi).pass);
}

TEST_CASE("connection rows match nabla xi and nabla phi on the model context")
{
    const double alpha = -0.8, beta = 1.1, c = -4.0;
    const auto rows = lemma22_rows(alpha, beta, c);
    const auto ctx = lemma22_context(alpha, beta, c);
    const auto& acs = ctx.acs();
    const auto vec = [](const ConnectionEntry& e) {
        return Vector(e.xi * Vector::Unit(5, XI) + e.u * Vector::Unit(5, U) + e.phi_u * Vector::Unit(5, PHIU));
    };
    const std::pair<Direction, int> dirs[] = {{Direction::Xi, XI}, {Direction::U, U}, {Direction::PhiU, PHIU}};
    for (const auto& [d, idx] : dirs) {
        const Vector x = Vector::Unit(5, idx);
        const auto& dxi = rows.connection.at({d, Direction::Xi});
        CHECK(dxi.w_term.empty());
        CHECK((nabla_xi(acs, ctx.shape(), x) - vec(dxi)).norm() < 1e-14);

        // ∇_X(φU) = (∇_Xφ)U + φ∇_XU; compare the parts outside the W-directions.
        const Vector known_u = vec(rows.connection.at({d, Direction::U}));
        const Vector dphiu = nabla_phi(acs, ctx.shape(), x, Vector::Unit(5, U)) + acs.phi() * known_u;
        CHECK((dphiu - vec(rows.connection.at({d, Direction::PhiU}))).norm() < 1e-14);
    }
    CHECK(rows.connection.at({Direction::PhiU, Direction::U}).w_term == "W3");
    CHECK_THROWS_AS(lemma22_rows(0.0, 1.0, 4.0), DomainError);
}

TEST_CASE("gamma and lambda break lA = Al on span xi")
{
    const double alpha = 1.5, beta = 0.5, c = 4.0;
    for (double gamma : {0.0, 0.3}) {
        for (double lambda : {0.0, 0.2}) {
            const auto ctx = lemma22_context(alpha, beta, c, gamma, lambda);
            const Matrix l = jacobi_operator(ctx);
            const Vector lu = l * Vector::Unit(5, U);
            CHECK((lu - gamma * Vector::Unit(5, U) - lambda * alpha * Vector::Unit(5, W)).norm() < 1e-14);
            const auto r = check_l_a_commute(ctx, Subspace::SpanXi);
            CHECK(r.residual == doctest::Approx(beta * std::hypot(gamma, alpha * lambda)).epsilon(1e-12));
            CHECK(r.pass == (gamma == 0.0 && lambda == 0.0));
        }
    }
}

TEST_CASE("kappa closed forms")
{
    const auto k = lemma23_kappas(2.0, 1.0, 4.0);
    CHECK(k.kappa1 == -8.0);
    CHECK(k.kappa2 == doctest::Approx(-4.0 + 0.5 * (0.5 - 0.5)));
    CHECK_THROWS_AS(lemma23_kappas(0.0, 1.0, 4.0), DomainError);
    CHECK_THROWS_AS(lemma23_kappas(1.0, 0.0, 4.0), DomainError);
}

TEST_CASE("consistent jets pass every row")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mag(0.5, 2.5);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = (sign(rng) ? 1.0 : -1.0) * mag(rng);
        const double beta = mag(rng);
        const double c = (sign(rng) ? 1.0 : -1.0) * 2.0 * mag(rng);
        const auto jet = consistent_jet(alpha, beta, c);
        const auto r = jet_residuals(jet);
        CHECK(r.pass);
        CHECK(r.residuals.size() == 16);
        CHECK(kappa3_compatibility(jet) == 0.0);
    }
}

TEST_CASE("each row detects its own perturbation")
{
    const auto base = consistent_jet(1.2, 0.8, 4.0);
    const auto fails = [](const LocalJet& j, const std::string& row) {
        const auto r = jet_residuals(j);
        return !r.pass && r.residuals.at(row) > 1e-6;
    };
    auto j = base;
    j.d_alpha.phi_u += 1e-3;
    CHECK(fails(j, "phiU-alpha"));
    CHECK(fails(j, "U-projection"));
    j = base;
    j.d_beta.phi_u += 1e-3;
    CHECK(fails(j, "phiU-beta"));
    j = base;
    j.kappa2 += 1e-3;
    CHECK(fails(j, "kappa2"));
    CHECK(fails(j, "U-projection"));
    j = base;
    j.gamma = 0.1;
    CHECK(fails(j, "gamma"));
    j = base;
    j.d_alpha.u = 0.1;
    CHECK(fails(j, "U-alpha=xi-beta"));
    j = base;
    j.phiw2_alpha = 0.5;
    CHECK(fails(j, "phiW2-alpha"));
}

TEST_CASE("kappa3 is only compatible on the factor branch")
{
    const double alpha = 0.9, beta = 0.6;
    const double on_branch = 4.0 * alpha * alpha + 2.0 * beta * beta;
    const auto on = kappa3_jet(alpha, beta, on_branch, 0.37);
    CHECK(jet_residuals(on).pass);
    CHECK(std::abs(kappa3_compatibility(on)) < 1e-12);

    for (double c : {1.0, 4.0, -4.0}) {
        const auto off = kappa3_jet(alpha, beta, c, 0.37);
        const auto r = jet_residuals(off);
        CHECK_FALSE(r.pass);
        CHECK(r.residuals.at("phiU-of-U-alpha=xi-beta") > 1e-6);
        CHECK(r.residuals.at("U-beta") < 1e-12);
        CHECK(kappa3_compatibility(off) ==
              doctest::Approx(-(beta / alpha) * (c - 4.0 * alpha * alpha - 2.0 * beta * beta) * 0.37));
    }
}

TEST_CASE("the projected identity holds for every alpha, beta, c once kappas are substituted")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng), c = (i % 2 ? -1.0 : 1.0) * u(rng);
        const auto k = lemma23_kappas(a, b, c);
        const double pa = 3.0 * b * c / (4.0 * a) + a * b + k.kappa1 * b;
        const double pb = (c / (4.0 * a)) * (b * b / a - c / (4.0 * a)) + b * b + k.kappa1 * b * b / a;
        const double lhs = -2.0 * b * pa + 3.0 * b * b * c / (2.0 * a) + a * b * b + a * b * k.kappa2 + a * pb;
        CHECK(std::abs(lhs) < 1e-12 * (1.0 + c * c / (a * a)));
    }
}

TEST_CASE("certificate arithmetic")
{
    const auto spot = contradiction_certificate(4.0, 0.5, 1.0);
    CHECK(spot.discriminant == 45312.0);
    CHECK(spot.verdict == CertificateVerdict::DiscriminantPositive);
    CHECK(spot.vertex_omega == doctest::Approx(-1.875));
    CHECK(spot.vertex_value == doctest::Approx(64.0 * 1.875 * 1.875 - 240.0 * 1.875 + 48.0));
    CHECK_FALSE(spot.factor_branch);
    CHECK(spot.derivative_branch_rejected);

    const auto branch = contradiction_certificate(4.0, std::sqrt(0.5), 1.0);
    CHECK(branch.factor_branch);

    const auto zero = contradiction_certificate(4.0, 0.0, 0.0);
    CHECK(zero.xi_derivative_sum == 0.0);
    CHECK_FALSE(zero.derivative_branch_rejected);

    // For c < 0 both terms of Δ are positive.
    for (double beta : {0.1, 1.0, 10.0}) {
        CHECK(contradiction_certificate(-4.0, 1.0, beta).discriminant > 0.0);
    }
    CHECK(contradiction_certificate(4.0, 1.0, 3.0).verdict == CertificateVerdict::DiscriminantNonPositive);

    const auto w1 = contradiction_certificate(4.0, 1.0, 1.0, 2.0);
    REQUIRE(w1.w1_identity_residual);
    CHECK(*w1.w1_identity_residual == doctest::Approx(12.0 * 6.0 * 4.0 + 64.0 - 16.0 * 5.0 - 48.0));
    CHECK_THROWS_AS(contradiction_certificate(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("jet validation")
{
    LocalJet j;
    j.beta = 0.0;
    CHECK_THROWS_AS(j.validate(), DomainError);
    j.beta = 1.0;
    j.alpha = 0.0;
    CHECK_THROWS_AS(jet_residuals(j), DomainError);
}
