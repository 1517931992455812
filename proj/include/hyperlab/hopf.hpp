#pragma once

// Hypothesis predicates on a pointwise curvature context: the decomposition
// Aξ = αξ + βU, the commutation conditions φl = lφ and lA = Al, the condition
// ∇_ξ l = μξ, the four classes A–D built from them, and the chain of checks
// that turns φl = lφ on a Hopf hypersurface into Aφ = φA.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlab/curvature.hpp"

namespace hyperlab {

inline constexpr double kCheckTolerance = 1e-9;

enum class Subspace { KerEta, SpanXi, All };

std::string_view to_string(Subspace s);
std::optional<Subspace> parse_subspace(std::string_view text);

struct HopfDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<Vector> u;  // unit, in ker(η); absent iff hopf
    bool hopf = true;

    /// αξ + βU.
    Vector reconstruct(const AlmostContactStructure& acs) const;
};

/// β below 10⁻⁹·(1 + |A|_F) counts as zero.
double hopf_threshold(const CurvatureContext& ctx);

HopfDecomposition decompose_shape_xi(const CurvatureContext& ctx);

struct ConditionReport {
    std::string condition;
    Subspace subspace = Subspace::KerEta;
    double residual = 0.0;   // sup over unit X in the subspace
    double frobenius = 0.0;  // Frobenius norm of the restricted operator
    std::optional<double> mu;
    std::optional<double> mu_spread;
    double tolerance = kCheckTolerance;
    bool pass = true;
};

/// g-orthonormal basis of the subspace as columns. ker(η) uses a φ-basis that
/// starts from U whenever Aξ is not principal.
Matrix subspace_basis(const CurvatureContext& ctx, Subspace subspace);

ConditionReport check_phi_l_commute(const CurvatureContext& ctx, Subspace subspace,
                                    double tolerance = kCheckTolerance);

/// On span{ξ} this is lAξ = Alξ. `strict` also requires Aξ ∈ span{ξ}.
ConditionReport check_l_a_commute(const CurvatureContext& ctx, Subspace subspace,
                                  double tolerance = kCheckTolerance, bool strict = false);

/// (∇_ξ l)X = μξ on the subspace. μ̂_X = g((∇_ξ l)X, ξ) is evaluated on the
/// φ-basis vectors of the subspace; the report carries their mean and spread.
ConditionReport check_nabla_xi_l(const CurvatureContext& ctx, const NablaAProvider* nabla_a,
                                 Subspace subspace, double tolerance = kCheckTolerance);

enum class ClassLabel { A, B, C, D };
enum class Membership { Yes, No, Unknown };

std::string_view to_string(ClassLabel label);
std::string_view to_string(Membership m);

struct Classification {
    std::map<ClassLabel, Membership> status;
    std::vector<ConditionReport> evidence;

    std::set<ClassLabel> labels() const;
};

/// Class A: φl = lφ and lA = Al on ker(η); B: … on span{ξ};
/// C: φl = lφ and ∇_ξ l = μξ on ker(η); D: … on span{ξ}.
/// Without a provider C and D are Unknown unless φl = lφ already fails.
Classification classify(const CurvatureContext& ctx, const NablaAProvider* nabla_a = nullptr,
                        double tolerance = kCheckTolerance);

enum class Verdict {
    TypeACompatible,
    HypothesisFails,  // φl ≠ lφ
    Indeterminate,    // α = 0
    IdentityViolated  // φl = lφ, α ≠ 0, yet Aφ ≠ φA
};

std::string_view to_string(Verdict v);

struct TheoremResult {
    bool hopf = false;
    double alpha = 0.0;
    double commutator_a_phi_norm = 0.0;  // |Aφ − φA| on the whole tangent space
    double phi_l_norm = 0.0;             // |φl − lφ| on the whole tangent space
    double identity_residual = 0.0;      // max |(φl − lφ) − α(φA − Aφ)| entry
    double basis_route_norm = 0.0;       // max over V_i, φV_i of |(Aφ − φA)X| from the identity
    double xi_residual = 0.0;            // |(Aφ − φA)ξ|
    Verdict verdict = Verdict::Indeterminate;
};

/// Runs the Hopf ⇒ (φl = lφ ⇒ Aφ = φA) chain. Throws PreconditionError when ξ
/// is not principal.
TheoremResult theorem_pipeline(const CurvatureContext& ctx, double tolerance = kCheckTolerance);

}  // namespace hyperlab
