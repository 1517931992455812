#include "hyperlab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperlab/errors.hpp"
#include "hyperlab/random_structures.hpp"

namespace hyperlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Snap threshold for α at the π/4 zero of 2cot(2r) in CP^n.
constexpr double kAlphaZero = 1e-12;

struct Row {
    double value;
    int multiplicity;
    bool phi_invariant;
    RiccatiBranch branch;
};

}  // namespace

std::string_view to_string(Ambient a)
{
    return a == Ambient::CP ? "CP" : "CH";
}

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::A0:
        return "A0";
    case Family::A1:
        return "A1";
    case Family::A2:
        return "A2";
    case Family::B:
        return "B";
    }
    return "?";
}

std::optional<Ambient> parse_ambient(std::string_view text)
{
    if (text == "CP" || text == "cp") {
        return Ambient::CP;
    }
    if (text == "CH" || text == "ch") {
        return Ambient::CH;
    }
    return std::nullopt;
}

std::optional<Family> parse_family(std::string_view text)
{
    if (text == "A0" || text == "a0") {
        return Family::A0;
    }
    if (text == "A1" || text == "a1") {
        return Family::A1;
    }
    if (text == "A2" || text == "a2") {
        return Family::A2;
    }
    if (text == "B" || text == "b") {
        return Family::B;
    }
    return std::nullopt;
}

double default_curvature(Ambient a)
{
    return a == Ambient::CP ? 4.0 : -4.0;
}

double ModelSpec::scale() const
{
    return std::sqrt(std::abs(c)) / 2.0;
}

std::string ModelSpec::label() const
{
    std::ostringstream os;
    os << to_string(family) << " in " << to_string(ambient) << "^" << n << " (c=" << c;
    if (radius) {
        os << ", r=" << *radius;
    }
    if (family == Family::A1 || family == Family::A2) {
        os << ", k=" << k;
    }
    os << ")";
    return os.str();
}

void ModelSpec::validate() const
{
    auto fail = [this](const std::string& why) { throw StructuralError(label() + ": " + why); };
    if (n < 2) {
        fail("n must be at least 2");
    }
    if (!std::isfinite(c) || c == 0.0) {
        fail("c must be finite and nonzero");
    }
    if (ambient == Ambient::CP && c < 0.0) {
        fail("CP needs c > 0");
    }
    if (ambient == Ambient::CH && c > 0.0) {
        fail("CH needs c < 0");
    }
    if (orientation != 1 && orientation != -1) {
        fail("orientation must be +1 or -1");
    }
    if (family == Family::A0) {
        if (ambient != Ambient::CH) {
            fail("A0 (horosphere) exists only in CH");
        }
        if (radius) {
            fail("A0 has no radius");
        }
        if (k != 0) {
            fail("A0 takes no k");
        }
        return;
    }
    if (!radius) {
        fail("radius is required");
    }
    const double r = *radius * scale();
    if (!(r > 0.0) || !std::isfinite(r)) {
        fail("radius must be positive");
    }
    switch (family) {
    case Family::A1:
        if (k != 0 && k != n - 1) {
            fail("A1 needs k = 0 (geodesic sphere) or k = n - 1 (tube over a hyperplane)");
        }
        break;
    case Family::A2:
        if (k < 1 || k > n - 2) {
            fail("A2 needs 1 <= k <= n - 2");
        }
        break;
    case Family::B:
        if (k != 0) {
            fail("B takes no k");
        }
        break;
    case Family::A0:
        break;
    }
    if (ambient == Ambient::CP) {
        const double limit = family == Family::B ? kPi / 4.0 : kPi / 2.0;
        if (r >= limit) {
            fail(family == Family::B ? "CP type B needs 0 < r < pi/4 (normalized)"
                                     : "CP type A needs 0 < r < pi/2 (normalized)");
        }
    }
}

int SpectralTable::multiplicity_total() const
{
    int total = 0;
    for (const auto& row : rows) {
        total += row.multiplicity;
    }
    return total;
}

SpectralTable principal_curvatures(const ModelSpec& spec, const RiccatiOptions& options)
{
    spec.validate();
    const double s = spec.scale();
    const double holo = spec.c / 4.0;  // radial curvature on ker(η)
    const double reeb = spec.c;        // radial curvature on the ξ-line
    const int n = spec.n;
    const double r = spec.radius.value_or(0.0);
    const double t = r * s;  // normalized radius

    double alpha = 0.0;
    RiccatiBranch alpha_branch;
    std::vector<Row> rows;

    auto tube_rows = [&](double focal_value, double tangent_value) {
        const int focal_mult = 2 * (n - 1 - spec.k);
        const int tangent_mult = 2 * spec.k;
        if (focal_mult > 0) {
            rows.push_back({focal_value, focal_mult, true, {holo, BranchKind::Focal, 0.0}});
        }
        if (tangent_mult > 0) {
            rows.push_back({tangent_value, tangent_mult, true, {holo, BranchKind::Tangent, 0.0}});
        }
    };

    if (spec.ambient == Ambient::CP) {
        switch (spec.family) {
        case Family::A1:
        case Family::A2:
            alpha = 2.0 * s / std::tan(2.0 * t);
            alpha_branch = {reeb, BranchKind::Focal, 0.0};
            tube_rows(s / std::tan(t), -s * std::tan(t));
            break;
        case Family::B:
            alpha = 2.0 * s / std::tan(2.0 * t);
            alpha_branch = {reeb, BranchKind::Focal, 0.0};
            // cot(t − π/4) and −tan(t − π/4) = cot(t + π/4): focal branches
            // whose poles sit at −3π/4 and −π/4.
            rows.push_back({s / std::tan(t - kPi / 4.0), n - 1, false,
                            {holo, BranchKind::Focal, -3.0 * kPi / 4.0 / s}});
            rows.push_back({-s * std::tan(t - kPi / 4.0), n - 1, false,
                            {holo, BranchKind::Focal, -kPi / 4.0 / s}});
            break;
        case Family::A0:
            break;
        }
    } else {
        switch (spec.family) {
        case Family::A0:
            alpha = 2.0 * s;
            alpha_branch = {reeb, BranchKind::Horospheric, 0.0};
            rows.push_back({s, 2 * n - 2, true, {holo, BranchKind::Horospheric, 0.0}});
            break;
        case Family::A1:
        case Family::A2:
            alpha = 2.0 * s / std::tanh(2.0 * t);
            alpha_branch = {reeb, BranchKind::Focal, 0.0};
            tube_rows(s / std::tanh(t), s * std::tanh(t));
            break;
        case Family::B:
            alpha = 2.0 * s * std::tanh(2.0 * t);
            alpha_branch = {reeb, BranchKind::Tangent, 0.0};
            rows.push_back({s / std::tanh(t), n - 1, false, {holo, BranchKind::Focal, 0.0}});
            rows.push_back({s * std::tanh(t), n - 1, false, {holo, BranchKind::Tangent, 0.0}});
            break;
        }
    }

    SpectralTable table;
    if (std::abs(alpha) <= kAlphaZero * s) {
        alpha = 0.0;
        table.alpha_vanishes = true;
    }
    const double sign = static_cast<double>(spec.orientation);
    const double eval_at = spec.family == Family::A0 ? 1.0 : r;

    table.alpha = sign * alpha;
    table.alpha_branch = alpha_branch;
    table.alpha_oracle = sign * evaluate_branch(alpha_branch, eval_at, options);
    table.oracle_deviation = std::abs(table.alpha - table.alpha_oracle);
    for (const auto& row : rows) {
        SpectralRow out;
        out.value = sign * row.value;
        out.multiplicity = row.multiplicity;
        out.phi_invariant = row.phi_invariant;
        out.branch = row.branch;
        out.oracle_value = sign * evaluate_branch(row.branch, eval_at, options);
        table.oracle_deviation = std::max(table.oracle_deviation, std::abs(out.value - out.oracle_value));
        table.rows.push_back(out);
    }
    if (!(table.oracle_deviation <= kOracleTolerance)) {
        std::ostringstream os;
        os << spec.label() << ": closed-form spectrum deviates from the Riccati oracle by "
           << table.oracle_deviation;
        throw OracleMismatchError(os.str());
    }
    return table;
}

NablaAProvider type_a_nabla_a(const CurvatureContext& ctx, std::vector<std::string>* warnings)
{
    const auto& acs = ctx.acs();
    if (warnings != nullptr) {
        const Vector axi = ctx.shape_xi();
        const double tol = 1e-9 * (1.0 + ctx.shape().norm());
        const double beta = acs.space().norm(axi - ctx.alpha() * acs.xi());
        const double comm = (ctx.shape() * acs.phi() - acs.phi() * ctx.shape()).cwiseAbs().maxCoeff();
        if (beta > tol || comm > tol) {
            warnings->push_back("type-A nabla-A provider attached to a context with A phi != phi A or "
                                "A xi not principal; it satisfies Codazzi but is not geometric");
        }
    }
    const Matrix phi = acs.phi();
    const Vector xi = acs.xi();
    const Vector eta = acs.eta();
    const Matrix gram = acs.space().gram();
    const double quarter_c = ctx.c() / 4.0;
    return NablaAProvider([=](const Vector& x, const Vector& y) -> Vector {
        const Vector phix = phi * x;
        return -quarter_c * (eta.dot(y) * phix + phix.dot(gram * y) * xi);
    });
}

ModelInstance instantiate(const ModelSpec& spec, std::uint64_t seed)
{
    SpectralTable table = principal_curvatures(spec);
    const int n = spec.n;
    const int m = 2 * n - 1;

    StructureSampler sampler(seed);
    const TangentSpace space(m);
    auto acs = AlmostContactStructure::from_frame(space, sampler.orthogonal(m));
    PhiBasis basis = build_phi_basis(acs, {}, seed ^ 0x9e3779b97f4a7c15ULL);

    // Eigenvalue for each V_i and each φV_i.
    std::vector<double> on_v;
    std::vector<double> on_phi_v;
    if (spec.family == Family::B) {
        on_v.assign(static_cast<std::size_t>(n - 1), table.rows.at(0).value);
        on_phi_v.assign(static_cast<std::size_t>(n - 1), table.rows.at(1).value);
    } else {
        for (const auto& row : table.rows) {
            for (int i = 0; i < row.multiplicity / 2; ++i) {
                on_v.push_back(row.value);
                on_phi_v.push_back(row.value);
            }
        }
    }

    Matrix shape = table.alpha * basis.xi() * basis.xi().transpose();
    for (int i = 0; i < n - 1; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        shape += on_v[idx] * basis.v(i) * basis.v(i).transpose();
        shape += on_phi_v[idx] * basis.phi_v(i) * basis.phi_v(i).transpose();
    }
    shape = 0.5 * (shape + shape.transpose());

    CurvatureContext ctx(std::move(acs), std::move(shape), spec.c);
    std::optional<NablaAProvider> provider;
    if (spec.family != Family::B) {
        provider = type_a_nabla_a(ctx);
    }
    return ModelInstance{spec, std::move(ctx), std::move(table), std::move(basis), std::move(provider)};
}

std::vector<ModelSpec> standard_catalog()
{
    std::vector<ModelSpec> out;
    const std::vector<double> cp_radii{0.3, kPi / 4.0, 1.0471975511965976, 1.3};
    const std::vector<double> ch_radii{0.25, 0.7, 1.5};
    for (int n = 2; n <= 4; ++n) {
        for (double r : cp_radii) {
            out.push_back({Ambient::CP, n, 4.0, Family::A1, r, 0, 1});
            out.push_back({Ambient::CP, n, 4.0, Family::A1, r, n - 1, 1});
            for (int k = 1; k <= n - 2; ++k) {
                out.push_back({Ambient::CP, n, 4.0, Family::A2, r, k, 1});
            }
        }
        for (double r : {0.2, 0.5}) {
            out.push_back({Ambient::CP, n, 4.0, Family::B, r, 0, 1});
        }
        out.push_back({Ambient::CH, n, -4.0, Family::A0, std::nullopt, 0, 1});
        for (double r : ch_radii) {
            out.push_back({Ambient::CH, n, -4.0, Family::A1, r, 0, 1});
            out.push_back({Ambient::CH, n, -4.0, Family::A1, r, n - 1, 1});
            for (int k = 1; k <= n - 2; ++k) {
                out.push_back({Ambient::CH, n, -4.0, Family::A2, r, k, 1});
            }
            out.push_back({Ambient::CH, n, -4.0, Family::B, r, 0, 1});
        }
    }
    // Non-normalized curvature.
    out.push_back({Ambient::CP, 3, 1.0, Family::A1, 1.0, 0, 1});
    out.push_back({Ambient::CH, 3, -9.0, Family::A2, 0.4, 1, 1});
    out.push_back({Ambient::CH, 2, -1.0, Family::A0, std::nullopt, 0, 1});
    return out;
}

}  // namespace hyperlab
