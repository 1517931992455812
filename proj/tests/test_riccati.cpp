#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperlab/errors.hpp"
#include "hyperlab/riccati.hpp"

using namespace hyperlab;

namespace {

std::vector<double> grid(double lo, double hi, int points)
{
    std::vector<double> out;
    for (int i = 0; i < points; ++i) {
        out.push_back(lo + (hi - lo) * i / (points - 1));
    }
    return out;
}

}  // namespace

TEST_CASE("Riccati from a near-focal start reproduces cot and 2 cot 2r")
{
    const double pi = std::acos(-1.0);
    CHECK(riccati_shape_evolution(1.0, pi / 4.0, 0.01, 1.0 / std::tan(0.01)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(riccati_shape_evolution(4.0, pi / 8.0, 0.01, 2.0 / std::tan(0.02)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("focal branches on a grid")
{
    for (double r : grid(0.1, 1.4, 50)) {
        CHECK(std::abs(evaluate_branch({1.0, BranchKind::Focal, 0.0}, r) - 1.0 / std::tan(r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({4.0, BranchKind::Focal, 0.0}, r / 2.0) - 2.0 / std::tan(r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({-1.0, BranchKind::Focal, 0.0}, r) - 1.0 / std::tanh(r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({-4.0, BranchKind::Focal, 0.0}, r) - 2.0 / std::tanh(2.0 * r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({-1.0, BranchKind::Tangent, 0.0}, r) - std::tanh(r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({-4.0, BranchKind::Tangent, 0.0}, r) - 2.0 * std::tanh(2.0 * r)) < 1e-6);
        CHECK(std::abs(evaluate_branch({1.0, BranchKind::Tangent, 0.0}, r) + std::tan(r)) < 1e-6);
    }
}

TEST_CASE("horospheric branches are fixed points")
{
    for (double r : grid(0.1, 3.0, 10)) {
        CHECK(evaluate_branch({-1.0, BranchKind::Horospheric, 0.0}, r) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(evaluate_branch({-4.0, BranchKind::Horospheric, 0.0}, r) == doctest::Approx(2.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(evaluate_branch({1.0, BranchKind::Horospheric, 0.0}, 1.0), StructuralError);
}

TEST_CASE("integration runs backwards too")
{
    const double lambda = riccati_shape_evolution(1.0, 0.3, 1.0, 1.0 / std::tan(1.0));
    CHECK(lambda == doctest::Approx(1.0 / std::tan(0.3)).epsilon(1e-9));
}

TEST_CASE("blow-up past a focal point")
{
    CHECK_THROWS_AS(riccati_shape_evolution(1.0, 3.5, 0.5, 1.0 / std::tan(0.5)), FocalPointError);
    CHECK_THROWS_AS(evaluate_branch({1.0, BranchKind::Focal, 0.0}, 0.0), FocalPointError);
    CHECK_THROWS_AS(evaluate_branch({4.0, BranchKind::Focal, 0.0}, 2.0), FocalPointError);
    CHECK_THROWS_AS(riccati_shape_evolution(1.0, 1.0, 0.0, 0.0, {0.0, 1e6}), StructuralError);
}

TEST_CASE("Jacobi fields")
{
    for (double kappa : {4.0, 1.0, 0.0, -1.0, -4.0}) {
        const JacobiState s = jacobi_field(kappa, 0.9, {0.0, 1.0});
        double y = 0.9;
        double dy = 1.0;
        if (kappa > 0.0) {
            const double q = std::sqrt(kappa);
            y = std::sin(q * 0.9) / q;
            dy = std::cos(q * 0.9);
        } else if (kappa < 0.0) {
            const double q = std::sqrt(-kappa);
            y = std::sinh(q * 0.9) / q;
            dy = std::cosh(q * 0.9);
        }
        CHECK(s.y == doctest::Approx(y).epsilon(1e-12));
        CHECK(s.dy == doctest::Approx(dy).epsilon(1e-12));
    }
}
