#include "hyperlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace hyperlab {

namespace {

std::string_view to_string(BranchKind kind)
{
    switch (kind) {
    case BranchKind::Focal:
        return "focal";
    case BranchKind::Tangent:
        return "tangent";
    case BranchKind::Horospheric:
        return "horospheric";
    }
    return "?";
}

Json to_json(const RiccatiBranch& b)
{
    return {{"kappa", b.kappa}, {"kind", to_string(b.kind)}, {"origin", b.origin}};
}

Json to_json(const DirectionalDerivatives& d)
{
    return {{"xi", d.xi}, {"U", d.u}, {"phiU", d.phi_u}};
}

void put_float(std::string& out, double x)
{
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
    // Keep the value a float on re-parse.
    if (std::strpbrk(buf, ".eE") == nullptr) {
        out += ".0";
    }
}

void emit(std::string& out, const Json& v, int indent, int depth)
{
    const auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (v.type()) {
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += Json(it.key()).dump();
            out += indent >= 0 ? ": " : ":";
            emit(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            newline(depth + 1);
            emit(out, v[i], indent, depth + 1);
        }
        newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float:
        put_float(out, v.get<double>());
        return;
    default:
        out += v.dump();
        return;
    }
}

}  // namespace

Json to_json(const Vector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

Json to_json(const Matrix& m)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out.push_back(to_json(Vector(m.row(i).transpose())));
    }
    return out;
}

Json to_json(const AlmostContactStructure& acs)
{
    return {{"dim", acs.dim()},
            {"gram", to_json(acs.space().gram())},
            {"phi", to_json(acs.phi())},
            {"xi", to_json(acs.xi())},
            {"eta", to_json(acs.eta())}};
}

Json to_json(const CurvatureContext& ctx)
{
    return {{"structure", to_json(ctx.acs())}, {"shape", to_json(ctx.shape())}, {"c", ctx.c()}};
}

Json to_json(const ModelSpec& spec)
{
    Json out = {{"ambient", to_string(spec.ambient)},
                {"n", spec.n},
                {"c", spec.c},
                {"family", to_string(spec.family)},
                {"k", spec.k},
                {"orientation", spec.orientation},
                {"label", spec.label()}};
    out["radius"] = spec.radius ? Json(*spec.radius) : Json(nullptr);
    return out;
}

Json to_json(const SpectralTable& table)
{
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        rows.push_back({{"value", r.value},
                        {"multiplicity", r.multiplicity},
                        {"phi_invariant", r.phi_invariant},
                        {"branch", to_json(r.branch)},
                        {"oracle_value", r.oracle_value}});
    }
    return {{"alpha", table.alpha},
            {"alpha_branch", to_json(table.alpha_branch)},
            {"alpha_oracle", table.alpha_oracle},
            {"alpha_vanishes", table.alpha_vanishes},
            {"oracle_deviation", table.oracle_deviation},
            {"rows", rows}};
}

Json to_json(const ConditionReport& report)
{
    Json out = {{"condition", report.condition},
                {"subspace", to_string(report.subspace)},
                {"residual", report.residual},
                {"frobenius", report.frobenius},
                {"tolerance", report.tolerance},
                {"pass", report.pass}};
    if (report.mu) {
        out["mu"] = *report.mu;
    }
    if (report.mu_spread) {
        out["mu_spread"] = *report.mu_spread;
    }
    return out;
}

Json to_json(const Classification& classification)
{
    Json status = Json::object();
    for (const auto& [label, m] : classification.status) {
        status[std::string(to_string(label))] = to_string(m);
    }
    Json evidence = Json::array();
    for (const auto& r : classification.evidence) {
        evidence.push_back(to_json(r));
    }
    return {{"status", status}, {"evidence", evidence}};
}

Json to_json(const TheoremResult& result)
{
    return {{"hopf", result.hopf},
            {"alpha", result.alpha},
            {"commutator_a_phi_norm", result.commutator_a_phi_norm},
            {"phi_l_norm", result.phi_l_norm},
            {"identity_residual", result.identity_residual},
            {"basis_route_norm", result.basis_route_norm},
            {"xi_residual", result.xi_residual},
            {"verdict", to_string(result.verdict)}};
}

Json to_json(const LocalJet& jet)
{
    Json out = {{"alpha", jet.alpha},
                {"beta", jet.beta},
                {"c", jet.c},
                {"gamma", jet.gamma},
                {"lambda", jet.lambda},
                {"kappa1", jet.kappa1},
                {"kappa2", jet.kappa2},
                {"kappa3", jet.kappa3},
                {"d_alpha", to_json(jet.d_alpha)},
                {"d_beta", to_json(jet.d_beta)},
                {"w1_norm_sq", jet.w1_norm_sq},
                {"phiu_xi_beta", jet.phiu_xi_beta},
                {"phiu_u_alpha", jet.phiu_u_alpha}};
    if (jet.phiw2_alpha) {
        out["phiw2_alpha"] = *jet.phiw2_alpha;
    }
    if (jet.w3_alpha) {
        out["w3_alpha"] = *jet.w3_alpha;
    }
    if (jet.phiw1_beta) {
        out["phiw1_beta"] = *jet.phiw1_beta;
    }
    return out;
}

Json to_json(const JetResidualReport& report)
{
    Json rows = Json::object();
    for (const auto& [name, value] : report.residuals) {
        rows[name] = value;
    }
    return {{"residuals", rows}, {"tolerance", report.tolerance}, {"pass", report.pass}};
}

Json to_json(const ContradictionCertificate& cert)
{
    Json out = {{"factor", cert.factor},
                {"factor_branch", cert.factor_branch},
                {"xi_derivative_sum", cert.xi_derivative_sum},
                {"derivative_branch_rejected", cert.derivative_branch_rejected},
                {"discriminant", cert.discriminant},
                {"vertex_omega", cert.vertex_omega},
                {"vertex_value", cert.vertex_value},
                {"verdict", to_string(cert.verdict)}};
    if (cert.w1_identity_residual) {
        out["w1_identity_residual"] = *cert.w1_identity_residual;
    }
    return out;
}

std::string dump_exact(const Json& value, int indent)
{
    std::string out;
    emit(out, value, indent, 0);
    return out;
}

}  // namespace hyperlab
