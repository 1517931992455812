#pragma once

// Model hypersurfaces of CP^n and CH^n realized on one tangent space.
//
// Families: A0 (horosphere, CH only), A1 (geodesic sphere k = 0 or tube over a
// complex hyperplane k = n − 1), A2 (tube over a totally geodesic CP^k/CH^k,
// 1 ≤ k ≤ n − 2) and B (tube over the complex quadric in CP^n, over RH^n in
// CH^n; only used as a negative control). Closed forms are written for
// c = ±4 and rescaled by s = √|c|/2: a radius r reads as s·r and principal
// curvatures scale by s. The normal is oriented so that small geodesic spheres
// in CP^n have λ = cot r > 0; orientation = −1 negates A.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlab/curvature.hpp"
#include "hyperlab/riccati.hpp"

namespace hyperlab {

enum class Ambient { CP, CH };
enum class Family { A0, A1, A2, B };

std::string_view to_string(Ambient a);
std::string_view to_string(Family f);
std::optional<Ambient> parse_ambient(std::string_view text);
std::optional<Family> parse_family(std::string_view text);

struct ModelSpec {
    Ambient ambient = Ambient::CP;
    int n = 2;
    double c = 4.0;
    Family family = Family::A1;
    std::optional<double> radius;
    int k = 0;
    int orientation = 1;

    /// Throws StructuralError on any out-of-range parameter.
    void validate() const;
    /// √|c| / 2.
    double scale() const;
    std::string label() const;
};

/// Default c for an ambient: +4 for CP, −4 for CH.
double default_curvature(Ambient a);

struct SpectralRow {
    double value = 0.0;
    int multiplicity = 0;
    bool phi_invariant = true;
    RiccatiBranch branch;
    double oracle_value = 0.0;
};

struct SpectralTable {
    double alpha = 0.0;
    RiccatiBranch alpha_branch;
    double alpha_oracle = 0.0;
    std::vector<SpectralRow> rows;
    bool alpha_vanishes = false;    // η(Aξ) = 0 edge case
    double oracle_deviation = 0.0;  // max |closed form − oracle|

    int multiplicity_total() const;
};

inline constexpr double kOracleTolerance = 1e-6;

/// Closed-form table, checked row by row against the Riccati oracle; throws
/// OracleMismatchError beyond kOracleTolerance.
SpectralTable principal_curvatures(const ModelSpec& spec, const RiccatiOptions& options = {});

struct ModelInstance {
    ModelSpec spec;
    CurvatureContext ctx;
    SpectralTable spectral;
    PhiBasis basis;
    std::optional<NablaAProvider> nabla_a;  // absent for family B

    const NablaAProvider* provider() const { return nabla_a ? &*nabla_a : nullptr; }
};

/// Realizes the model in a random orthonormal frame drawn from `seed`; A is
/// diagonal on a φ-basis with the tabulated eigenvalues and Aξ = αξ.
ModelInstance instantiate(const ModelSpec& spec, std::uint64_t seed = 0);

/// (∇_X A)Y = −(c/4)(η(Y)φX + g(φX, Y)ξ), the covariant derivative of A on
/// type A hypersurfaces. When the context is not Hopf with Aφ = φA a warning
/// is appended: the provider still satisfies Codazzi but is not geometric.
NablaAProvider type_a_nabla_a(const CurvatureContext& ctx, std::vector<std::string>* warnings = nullptr);

/// A representative set of valid specs across ambients, families, n and radii.
std::vector<ModelSpec> standard_catalog();

}  // namespace hyperlab
