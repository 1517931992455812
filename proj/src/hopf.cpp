#include "hyperlab/hopf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "hyperlab/errors.hpp"

namespace hyperlab {

std::string_view to_string(Subspace s)
{
    switch (s) {
    case Subspace::KerEta:
        return "ker-eta";
    case Subspace::SpanXi:
        return "span-xi";
    case Subspace::All:
        return "all";
    }
    return "?";
}

std::optional<Subspace> parse_subspace(std::string_view text)
{
    if (text == "ker-eta") {
        return Subspace::KerEta;
    }
    if (text == "span-xi") {
        return Subspace::SpanXi;
    }
    if (text == "all") {
        return Subspace::All;
    }
    return std::nullopt;
}

std::string_view to_string(ClassLabel label)
{
    static constexpr std::array<std::string_view, 4> names{"A", "B", "C", "D"};
    return names[static_cast<std::size_t>(label)];
}

std::string_view to_string(Membership m)
{
    switch (m) {
    case Membership::Yes:
        return "yes";
    case Membership::No:
        return "no";
    case Membership::Unknown:
        return "unknown";
    }
    return "?";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::TypeACompatible:
        return "type-A-compatible";
    case Verdict::HypothesisFails:
        return "hypothesis-phi-l-fails";
    case Verdict::Indeterminate:
        return "indeterminate";
    case Verdict::IdentityViolated:
        return "identity-violated";
    }
    return "?";
}

Vector HopfDecomposition::reconstruct(const AlmostContactStructure& acs) const
{
    Vector out = alpha * acs.xi();
    if (u) {
        out += beta * *u;
    }
    return out;
}

double hopf_threshold(const CurvatureContext& ctx)
{
    return 1e-9 * (1.0 + ctx.shape().norm());
}

HopfDecomposition decompose_shape_xi(const CurvatureContext& ctx)
{
    const auto& acs = ctx.acs();
    HopfDecomposition d;
    const Vector axi = ctx.shape_xi();
    d.alpha = acs.inner(axi, acs.xi());
    const Vector horizontal = axi - d.alpha * acs.xi();
    const double beta = acs.space().norm(horizontal);
    if (beta <= hopf_threshold(ctx)) {
        d.beta = 0.0;
        d.hopf = true;
    } else {
        d.beta = beta;
        d.u = horizontal / beta;
        d.hopf = false;
    }
    return d;
}

Matrix subspace_basis(const CurvatureContext& ctx, Subspace subspace)
{
    const auto& acs = ctx.acs();
    if (subspace == Subspace::SpanXi) {
        return acs.xi();
    }
    const auto d = decompose_shape_xi(ctx);
    std::vector<Vector> seeds;
    if (d.u) {
        seeds.push_back(*d.u);
    }
    const PhiBasis basis = build_phi_basis(acs, seeds, 0);
    return subspace == Subspace::KerEta ? basis.horizontal() : basis.matrix();
}

namespace {

ConditionReport restricted_report(const CurvatureContext& ctx, std::string name, Subspace subspace,
                                  const Matrix& op, double tolerance)
{
    const Matrix basis = subspace_basis(ctx, subspace);
    ConditionReport r;
    r.condition = std::move(name);
    r.subspace = subspace;
    r.residual = ctx.space().restricted_norm(op, basis);
    r.frobenius = ctx.space().restricted_frobenius(op, basis);
    r.tolerance = tolerance;
    r.pass = r.residual <= tolerance;
    return r;
}

}  // namespace

ConditionReport check_phi_l_commute(const CurvatureContext& ctx, Subspace subspace, double tolerance)
{
    if (subspace == Subspace::SpanXi) {
        throw StructuralError("phi-l commutation is checked on ker-eta or all");
    }
    const Matrix l = jacobi_operator(ctx);
    return restricted_report(ctx, "phi-l-commute", subspace, commutator(ctx.acs().phi(), l), tolerance);
}

ConditionReport check_l_a_commute(const CurvatureContext& ctx, Subspace subspace, double tolerance,
                                  bool strict)
{
    if (subspace == Subspace::All) {
        throw StructuralError("l-A commutation is checked on ker-eta or span-xi");
    }
    const Matrix l = jacobi_operator(ctx);
    auto report = restricted_report(ctx, "l-A-commute", subspace, commutator(l, ctx.shape()), tolerance);
    if (strict && subspace == Subspace::SpanXi) {
        const auto d = decompose_shape_xi(ctx);
        report.condition = "l-A-commute-strict";
        report.residual = std::max(report.residual, d.hopf ? 0.0 : d.beta);
        report.pass = report.residual <= tolerance;
    }
    return report;
}

ConditionReport check_nabla_xi_l(const CurvatureContext& ctx, const NablaAProvider* nabla_a,
                                 Subspace subspace, double tolerance)
{
    if (nabla_a == nullptr) {
        throw UnsupportedOperationError("check_nabla_xi_l needs a nabla-A provider");
    }
    if (subspace == Subspace::All) {
        throw StructuralError("nabla_xi l = mu xi is checked on ker-eta or span-xi");
    }
    const auto& acs = ctx.acs();
    const Matrix derivative = nabla_l(ctx, nabla_a, acs.xi());
    const Matrix basis = subspace_basis(ctx, subspace);

    std::vector<double> mus;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        mus.push_back(acs.inner(derivative * basis.col(j), acs.xi()));
    }
    // Component of (∇_ξ l)X orthogonal to ξ.
    const Matrix off_xi = acs.horizontal_projector() * derivative;

    ConditionReport r;
    r.condition = "nabla-xi-l";
    r.subspace = subspace;
    r.residual = ctx.space().restricted_norm(off_xi, basis);
    r.frobenius = ctx.space().restricted_frobenius(off_xi, basis);
    r.mu = std::accumulate(mus.begin(), mus.end(), 0.0) / static_cast<double>(mus.size());
    const auto [lo, hi] = std::minmax_element(mus.begin(), mus.end());
    r.mu_spread = *hi - *lo;
    r.tolerance = tolerance;
    r.pass = r.residual <= tolerance;
    return r;
}

std::set<ClassLabel> Classification::labels() const
{
    std::set<ClassLabel> out;
    for (const auto& [label, m] : status) {
        if (m == Membership::Yes) {
            out.insert(label);
        }
    }
    return out;
}

Classification classify(const CurvatureContext& ctx, const NablaAProvider* nabla_a, double tolerance)
{
    Classification out;
    const auto phi_l = check_phi_l_commute(ctx, Subspace::KerEta, tolerance);
    const auto la_ker = check_l_a_commute(ctx, Subspace::KerEta, tolerance);
    const auto la_xi = check_l_a_commute(ctx, Subspace::SpanXi, tolerance);
    out.evidence = {phi_l, la_ker, la_xi};

    auto both = [&](bool second) { return phi_l.pass && second ? Membership::Yes : Membership::No; };
    out.status[ClassLabel::A] = both(la_ker.pass);
    out.status[ClassLabel::B] = both(la_xi.pass);

    if (nabla_a == nullptr) {
        const auto m = phi_l.pass ? Membership::Unknown : Membership::No;
        out.status[ClassLabel::C] = m;
        out.status[ClassLabel::D] = m;
    } else {
        const auto mu_ker = check_nabla_xi_l(ctx, nabla_a, Subspace::KerEta, tolerance);
        const auto mu_xi = check_nabla_xi_l(ctx, nabla_a, Subspace::SpanXi, tolerance);
        out.evidence.push_back(mu_ker);
        out.evidence.push_back(mu_xi);
        out.status[ClassLabel::C] = both(mu_ker.pass);
        out.status[ClassLabel::D] = both(mu_xi.pass);
    }
    return out;
}

TheoremResult theorem_pipeline(const CurvatureContext& ctx, double tolerance)
{
    const auto d = decompose_shape_xi(ctx);
    if (!d.hopf) {
        throw PreconditionError("theorem pipeline needs a Hopf context (A xi = alpha xi); beta = " +
                                std::to_string(d.beta));
    }
    const auto& acs = ctx.acs();
    const Matrix& phi = acs.phi();
    const Matrix& a = ctx.shape();
    const Matrix l = jacobi_operator(ctx);
    const Matrix phi_l = commutator(phi, l);
    const Matrix a_phi = commutator(a, phi);  // Aφ − φA
    const Matrix frame = ctx.space().orthonormal_frame();

    TheoremResult r;
    r.hopf = true;
    r.alpha = d.alpha;
    r.phi_l_norm = ctx.space().restricted_norm(phi_l, frame);
    r.commutator_a_phi_norm = ctx.space().restricted_norm(a_phi, frame);
    r.identity_residual = (phi_l - d.alpha * commutator(phi, a)).cwiseAbs().maxCoeff();
    r.xi_residual = ctx.space().norm(a_phi * acs.xi());

    const bool alpha_vanishes = std::abs(d.alpha) <= tolerance * (1.0 + a.norm());
    const PhiBasis basis = build_phi_basis(acs, {}, 0);
    if (!alpha_vanishes) {
        // (Aφ − φA)X = −(φl − lφ)X / α on V_i and φV_i.
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
            const Vector x = basis[i];
            r.basis_route_norm = std::max(r.basis_route_norm, ctx.space().norm(phi_l * x) / std::abs(d.alpha));
        }
    }

    const bool commutes = r.phi_l_norm <= tolerance;
    if (!commutes) {
        r.verdict = Verdict::HypothesisFails;
    } else if (alpha_vanishes) {
        r.verdict = Verdict::Indeterminate;
    } else if (std::max(r.basis_route_norm, r.xi_residual) <= tolerance &&
               r.commutator_a_phi_norm <= tolerance) {
        r.verdict = Verdict::TypeACompatible;
    } else {
        r.verdict = Verdict::IdentityViolated;
    }
    return r;
}

}  // namespace hyperlab
