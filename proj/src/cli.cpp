#include "hyperlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "hyperlab/errors.hpp"
#include "hyperlab/hopf.hpp"
#include "hyperlab/random_structures.hpp"
#include "hyperlab/riccati.hpp"

namespace hyperlab {

namespace {

struct Task {
    std::string name;
    std::string subspace;
    std::function<CheckRow()> fn;
};

CheckRow run_task(const Task& task)
{
    try {
        CheckRow row = task.fn();
        row.name = task.name;
        row.subspace = task.subspace;
        return row;
    } catch (const std::exception& e) {
        CheckRow row;
        row.name = task.name;
        row.subspace = task.subspace;
        row.residual = std::numeric_limits<double>::infinity();
        row.pass = false;
        row.error = e.what();
        return row;
    }
}

/// Runs tasks on a few worker threads; result order matches task order.
std::vector<CheckRow> run_tasks(const std::vector<Task>& tasks)
{
    std::vector<CheckRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            rows[i] = run_task(tasks[i]);
        }
    };
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    const auto workers = std::min<std::size_t>(hw, tasks.size());
    std::vector<std::future<void>> pool;
    for (std::size_t i = 0; i < workers; ++i) {
        pool.push_back(std::async(std::launch::async, worker));
    }
    for (auto& f : pool) {
        f.get();
    }
    return rows;
}

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : text) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool selected(const std::vector<std::string>& checks, const std::string& name)
{
    return std::find(checks.begin(), checks.end(), "all") != checks.end() ||
           std::find(checks.begin(), checks.end(), name) != checks.end();
}

// ---------------------------------------------------------------- catalog

CheckReport run_catalog(const RunConfig& cfg)
{
    std::vector<ModelSpec> specs;
    for (const auto& spec : standard_catalog()) {
        if ((cfg.ambient && spec.ambient != *cfg.ambient) || (cfg.family && spec.family != *cfg.family) ||
            (cfg.n && spec.n != *cfg.n)) {
            continue;
        }
        specs.push_back(spec);
    }

    std::vector<Json> models(specs.size());
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        tasks.push_back({"spectral-oracle:" + specs[i].label(), "all", [&, i] {
                             const SpectralTable table = principal_curvatures(specs[i]);
                             models[i] = {{"spec", to_json(specs[i])}, {"spectral", to_json(table)}};
                             return make_row("", "", table.oracle_deviation, kOracleTolerance);
                         }});
    }

    CheckReport report;
    report.checks = run_tasks(tasks);
    report.payload = {{"models", Json(models)}};
    return report;
}

// ----------------------------------------------------------------- verify

CheckReport run_verify(const RunConfig& cfg)
{
    const ModelSpec spec = cfg.model();
    const ModelInstance inst = instantiate(spec, cfg.seed);
    const CurvatureContext& ctx = inst.ctx;
    const NablaAProvider* provider = inst.provider();
    const double tol = cfg.tolerance;
    const bool negative = spec.family == Family::B;
    const bool alpha_zero = inst.spectral.alpha_vanishes;

    std::vector<Task> tasks;
    const auto add = [&](const std::string& name, Subspace sub, std::function<CheckRow()> fn) {
        if (selected(cfg.checks, name)) {
            tasks.push_back({name, std::string(to_string(sub)), std::move(fn)});
        }
    };

    add("structure-axioms", Subspace::All,
        [&] { return make_row("", "", max_residual(validate_acs(ctx.acs())), tol); });
    add("jacobi-closed-form", Subspace::All, [&] { return make_row("", "", jacobi_route_discrepancy(ctx), tol); });
    add("spectral-oracle", Subspace::All,
        [&] { return make_row("", "", inst.spectral.oracle_deviation, kOracleTolerance); });

    const auto from_condition = [](const ConditionReport& r) {
        CheckRow row = make_row("", "", r.residual, r.tolerance);
        row.detail = to_json(r);
        return row;
    };
    add("phi-l-commute", Subspace::KerEta, [&] {
        CheckRow row = from_condition(check_phi_l_commute(ctx, Subspace::KerEta, tol));
        if (negative && !alpha_zero) {
            row.expected = false;
        }
        return row;
    });
    add("l-a-commute", Subspace::KerEta, [&] { return from_condition(check_l_a_commute(ctx, Subspace::KerEta, tol)); });
    add("l-a-commute", Subspace::SpanXi, [&] { return from_condition(check_l_a_commute(ctx, Subspace::SpanXi, tol)); });
    add("a-phi-commute", Subspace::All, [&] {
        CheckRow row = make_row("", "", ctx.space().restricted_norm(commutator(ctx.shape(), ctx.acs().phi()),
                                                                   Matrix::Identity(ctx.dim(), ctx.dim())),
                                tol * (1.0 + ctx.shape().norm()));
        if (negative) {
            row.expected = false;
        }
        return row;
    });
    add("hopf-identity", Subspace::All, [&] {
        const Matrix l = jacobi_operator(ctx);
        const Matrix& phi = ctx.acs().phi();
        const Matrix& a = ctx.shape();
        return make_row("", "", max_abs(commutator(phi, l) - ctx.alpha() * commutator(phi, a)), tol);
    });
    if (provider != nullptr) {
        add("nabla-xi-l", Subspace::KerEta,
            [&] { return from_condition(check_nabla_xi_l(ctx, provider, Subspace::KerEta, tol)); });
        add("nabla-xi-l-mu", Subspace::KerEta, [&] {
            const ConditionReport r = check_nabla_xi_l(ctx, provider, Subspace::KerEta, tol);
            return make_row("", "", std::abs(r.mu.value_or(0.0)), tol);
        });
        add("codazzi", Subspace::All, [&] {
            const Matrix e = inst.basis.matrix();
            double worst = 0.0;
            for (int i = 0; i < e.cols(); ++i) {
                for (int j = 0; j < e.cols(); ++j) {
                    worst = std::max(worst, ctx.space().norm(codazzi_residual(ctx, *provider, e.col(i), e.col(j))));
                }
            }
            return make_row("", "", worst, tol);
        });
    }

    CheckReport report;
    report.checks = run_tasks(tasks);

    Json payload = {{"spec", to_json(spec)}, {"spectral", to_json(inst.spectral)}};
    payload["classification"] = to_json(classify(ctx, provider, tol));
    try {
        payload["theorem"] = to_json(theorem_pipeline(ctx, tol));
    } catch (const PreconditionError& e) {
        payload["theorem"] = {{"error", e.what()}};
    }
    report.payload = payload;
    return report;
}

// ----------------------------------------------------------------- random

using Property = std::function<double(StructureSampler&, const RunConfig&)>;

double gauss_sweep(StructureSampler& s, const RunConfig& cfg,
                   const std::function<double(const CurvatureContext&, const Vector&, const Vector&, const Vector&,
                                              const Vector&)>& fn)
{
    const CurvatureContext ctx = s.context(cfg.dim, cfg.general_metric);
    const int m = ctx.dim();
    return fn(ctx, s.vector(m), s.vector(m), s.vector(m), s.vector(m));
}

const std::map<std::string, Property>& property_table()
{
    static const std::map<std::string, Property> table = {
        {"structure-axioms",
         [](StructureSampler& s, const RunConfig& cfg) {
             return max_residual(validate_acs(s.structure(cfg.dim, cfg.general_metric)));
         }},
        {"gauss-antisymmetry",
         [](StructureSampler& s, const RunConfig& cfg) {
             return gauss_sweep(s, cfg, [](const auto& ctx, const auto& x, const auto& y, const auto& z, const auto&) {
                 return (gauss_curvature(ctx, x, y, z) + gauss_curvature(ctx, y, x, z)).cwiseAbs().maxCoeff();
             });
         }},
        {"gauss-pair-symmetry",
         [](StructureSampler& s, const RunConfig& cfg) {
             return gauss_sweep(s, cfg, [](const auto& ctx, const auto& x, const auto& y, const auto& z, const auto& w) {
                 return std::abs(ctx.space().inner(gauss_curvature(ctx, x, y, z), w) -
                                 ctx.space().inner(gauss_curvature(ctx, z, w, x), y));
             });
         }},
        {"gauss-bianchi",
         [](StructureSampler& s, const RunConfig& cfg) {
             return gauss_sweep(s, cfg, [](const auto& ctx, const auto& x, const auto& y, const auto& z, const auto&) {
                 return (gauss_curvature(ctx, x, y, z) + gauss_curvature(ctx, y, z, x) + gauss_curvature(ctx, z, x, y))
                     .cwiseAbs()
                     .maxCoeff();
             });
         }},
        {"holomorphic-curvature",
         [](StructureSampler& s, const RunConfig& cfg) {
             auto acs = s.structure(cfg.dim, cfg.general_metric);
             const int m = acs.dim();
             const CurvatureContext ctx(std::move(acs), Matrix::Zero(m, m), 4.0);
             const auto& space = ctx.space();
             const Vector x = s.unit_horizontal(ctx.acs());
             const Vector phix = ctx.acs().phi() * x;
             Vector y = s.unit_horizontal(ctx.acs());
             y -= space.inner(y, x) * x + space.inner(y, phix) * phix;
             y /= space.norm(y);
             const double holo = space.inner(gauss_curvature(ctx, x, phix, phix), x);
             const double orth = space.inner(gauss_curvature(ctx, x, y, y), x);
             return std::max(std::abs(holo - 4.0), std::abs(orth - 1.0));
         }},
        {"jacobi-closed-form",
         [](StructureSampler& s, const RunConfig& cfg) {
             return jacobi_route_discrepancy(s.context(cfg.dim, cfg.general_metric));
         }},
        {"jacobi-self-adjoint",
         [](StructureSampler& s, const RunConfig& cfg) {
             const CurvatureContext ctx = s.context(cfg.dim, cfg.general_metric);
             const Matrix l = jacobi_operator(ctx);
             return max_abs(l - ctx.space().adjoint(l));
         }},
        {"jacobi-xi",
         [](StructureSampler& s, const RunConfig& cfg) {
             const CurvatureContext ctx = s.context(cfg.dim, cfg.general_metric);
             return (jacobi_operator(ctx) * ctx.acs().xi()).cwiseAbs().maxCoeff();
         }},
        {"hopf-commutator",
         [](StructureSampler& s, const RunConfig& cfg) {
             const CurvatureContext ctx = s.hopf_context(cfg.dim, cfg.general_metric);
             const Matrix l = jacobi_operator(ctx);
             const Matrix& phi = ctx.acs().phi();
             return max_abs(commutator(phi, l) - ctx.alpha() * commutator(phi, ctx.shape()));
         }},
        {"hopf-l-a",
         [](StructureSampler& s, const RunConfig& cfg) {
             const CurvatureContext ctx = s.hopf_context(cfg.dim, cfg.general_metric);
             return max_abs(commutator(jacobi_operator(ctx), ctx.shape()));
         }},
        {"lemma21",
         [](StructureSampler& s, const RunConfig&) {
             const double c = s.curvature_constant();
             const double beta = s.uniform(-3.0, 3.0);
             return std::abs(lemma21_pointwise(c, beta) - beta * beta);
         }},
        {"jet-consistency",
         [](StructureSampler& s, const RunConfig&) {
             const double alpha = (s.pick(0, 1) == 0 ? 1.0 : -1.0) * s.uniform(0.25, 3.0);
             const double beta = s.uniform(0.25, 3.0);
             const double c = s.curvature_constant();
             const JetResidualReport r = jet_residuals(consistent_jet(alpha, beta, c));
             double worst = 0.0;
             for (const auto& [name, value] : r.residuals) {
                 worst = std::max(worst, value);
             }
             return worst;
         }},
    };
    return table;
}

CheckReport run_random(const RunConfig& cfg)
{
    std::vector<std::string> names;
    if (cfg.property == "all") {
        for (const auto& [name, fn] : property_table()) {
            names.push_back(name);
        }
    } else {
        names.push_back(cfg.property);
    }

    std::vector<Task> tasks;
    for (const auto& name : names) {
        const Property& property = property_table().at(name);
        tasks.push_back({name, "all", [&cfg, &property, name] {
                             StructureSampler sampler(cfg.seed ^ fnv1a(name));
                             double worst = 0.0;
                             int worst_index = 0;
                             for (int i = 0; i < cfg.samples; ++i) {
                                 const double v = property(sampler, cfg);
                                 if (!(v <= worst)) {
                                     worst = v;
                                     worst_index = i;
                                 }
                             }
                             CheckRow row = make_row("", "", worst, cfg.tolerance);
                             row.detail = {{"samples", cfg.samples}, {"worst_sample", worst_index}};
                             return row;
                         }});
    }
    CheckReport report;
    report.checks = run_tasks(tasks);
    return report;
}

// ----------------------------------------------------------------- oracle

/// (C, S) with C'' = −κC, C(0) = 1, C'(0) = 0 and S'' = −κS, S(0) = 0, S'(0) = 1.
std::pair<double, double> cos_sin(double kappa, double s)
{
    if (kappa > 0.0) {
        const double q = std::sqrt(kappa);
        return {std::cos(q * s), std::sin(q * s) / q};
    }
    if (kappa < 0.0) {
        const double q = std::sqrt(-kappa);
        return {std::cosh(q * s), std::sinh(q * s) / q};
    }
    return {1.0, s};
}

CheckReport run_riccati(const RunConfig& cfg)
{
    const RiccatiOptions options{cfg.step, RiccatiOptions{}.blowup};
    double numeric = 0.0;
    double closed = 0.0;
    const auto [cs, ss] = cos_sin(cfg.kappa, cfg.r - cfg.r0);
    if (cfg.lambda0) {
        numeric = riccati_shape_evolution(cfg.kappa, cfg.r, cfg.r0, *cfg.lambda0, options);
        closed = (-cfg.kappa * ss + *cfg.lambda0 * cs) / (cs + *cfg.lambda0 * ss);
    } else {
        RiccatiBranch branch{cfg.kappa, BranchKind::Focal, cfg.r0};
        if (cfg.branch == "tangent") {
            branch.kind = BranchKind::Tangent;
            closed = -cfg.kappa * ss / cs;
        } else if (cfg.branch == "horospheric") {
            branch.kind = BranchKind::Horospheric;
            closed = std::sqrt(-cfg.kappa);
        } else {
            closed = cs / ss;
        }
        numeric = evaluate_branch(branch, cfg.r, options);
    }

    CheckReport report;
    report.checks.push_back(make_row("riccati-closed-form", "all", std::abs(numeric - closed), kOracleTolerance));
    report.payload = {{"value", numeric}, {"closed_form", closed}};
    return report;
}

// ------------------------------------------------------------------ lemma

CheckReport run_jet(const RunConfig& cfg)
{
    const LocalJet jet = cfg.jet ? *cfg.jet : consistent_jet(cfg.alpha, cfg.beta, cfg.c.value_or(4.0));
    const JetResidualReport r = jet_residuals(jet, cfg.tolerance);
    CheckReport report;
    for (const auto& [name, value] : r.residuals) {
        report.checks.push_back(make_row(name, "all", value, cfg.tolerance));
    }
    report.payload = {{"jet", to_json(jet)}, {"kappa3_compatibility", kappa3_compatibility(jet)}};
    return report;
}

CheckReport run_certificate(const RunConfig& cfg)
{
    const ContradictionCertificate cert =
        contradiction_certificate(cfg.c.value_or(4.0), cfg.alpha, cfg.beta, cfg.w1_norm_sq);
    CheckReport report;
    report.checks.push_back(make_row("factor", "all", std::abs(cert.factor), cfg.tolerance));
    CheckRow sum = make_row("xi-derivative-sum", "all", cert.xi_derivative_sum, cfg.tolerance);
    if (cert.derivative_branch_rejected) {
        sum.expected = false;
    }
    report.checks.push_back(sum);
    if (cert.w1_identity_residual) {
        report.checks.push_back(make_row("w1-identity", "all", std::abs(*cert.w1_identity_residual), cfg.tolerance));
    }
    report.payload = {{"certificate", to_json(cert)}};
    return report;
}

CheckReport run_lemma21(const RunConfig& cfg)
{
    const double value = lemma21_pointwise(cfg.c.value_or(4.0), cfg.beta);
    CheckReport report;
    report.checks.push_back(make_row("lemma21", "ker-eta", std::abs(value - cfg.beta * cfg.beta), cfg.tolerance));
    report.payload = {{"commutator_norm", value}, {"beta_squared", cfg.beta * cfg.beta}};
    return report;
}

// ----------------------------------------------------------------- config

using Tree = boost::property_tree::ptree;

template <typename T>
void take(const Tree& tree, const std::string& key, const std::set<std::string>& given, T& target)
{
    if (given.count(key) != 0) {
        return;
    }
    if (const auto v = tree.get_optional<T>(key)) {
        target = *v;
    } else if (tree.get_child_optional(key)) {
        throw StructuralError("config: bad value for '" + key + "'");
    }
}

template <typename T>
void take(const Tree& tree, const std::string& key, const std::set<std::string>& given, std::optional<T>& target)
{
    T value{};
    bool present = false;
    if (given.count(key) == 0 && tree.get_child_optional(key)) {
        take(tree, key, given, value);
        present = true;
    }
    if (present) {
        target = value;
    }
}

LocalJet jet_from_tree(const Tree& section)
{
    const std::set<std::string> none;
    LocalJet jet;
    take(section, "alpha", none, jet.alpha);
    take(section, "beta", none, jet.beta);
    take(section, "c", none, jet.c);
    take(section, "gamma", none, jet.gamma);
    take(section, "lambda", none, jet.lambda);
    take(section, "kappa1", none, jet.kappa1);
    take(section, "kappa2", none, jet.kappa2);
    take(section, "kappa3", none, jet.kappa3);
    take(section, "xi_alpha", none, jet.d_alpha.xi);
    take(section, "u_alpha", none, jet.d_alpha.u);
    take(section, "phiu_alpha", none, jet.d_alpha.phi_u);
    take(section, "xi_beta", none, jet.d_beta.xi);
    take(section, "u_beta", none, jet.d_beta.u);
    take(section, "phiu_beta", none, jet.d_beta.phi_u);
    take(section, "w1_norm_sq", none, jet.w1_norm_sq);
    take(section, "phiu_xi_beta", none, jet.phiu_xi_beta);
    take(section, "phiu_u_alpha", none, jet.phiu_u_alpha);
    take(section, "phiw2_alpha", none, jet.phiw2_alpha);
    take(section, "w3_alpha", none, jet.w3_alpha);
    take(section, "phiw1_beta", none, jet.phiw1_beta);
    if (jet.w1_norm_sq < 0.0) {
        throw StructuralError("config: w1_norm_sq must be nonnegative");
    }
    jet.validate();
    return jet;
}

struct TextOptions {
    std::string ambient;
    std::string family;
};

void apply_config_file(const std::string& path, const std::set<std::string>& given, RunConfig& cfg,
                       TextOptions& text)
{
    Tree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw StructuralError(std::string("config: ") + e.what());
    }
    take(tree, "ambient", given, text.ambient);
    take(tree, "family", given, text.family);
    take(tree, "n", given, cfg.n);
    take(tree, "c", given, cfg.c);
    take(tree, "radius", given, cfg.radius);
    take(tree, "k", given, cfg.k);
    take(tree, "orientation", given, cfg.orientation);
    take(tree, "tolerance", given, cfg.tolerance);
    take(tree, "samples", given, cfg.samples);
    take(tree, "seed", given, cfg.seed);
    take(tree, "dim", given, cfg.dim);
    take(tree, "property", given, cfg.property);
    take(tree, "alpha", given, cfg.alpha);
    take(tree, "beta", given, cfg.beta);
    if (const auto section = tree.get_child_optional("jet")) {
        cfg.jet = jet_from_tree(*section);
    }
}

}  // namespace

// ---------------------------------------------------------------- public

const std::vector<std::string>& random_properties()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : property_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

const std::vector<std::string>& verify_checks()
{
    static const std::vector<std::string> names = {
        "a-phi-commute",   "codazzi",      "hopf-identity",    "jacobi-closed-form", "l-a-commute",
        "nabla-xi-l",      "nabla-xi-l-mu", "phi-l-commute",   "spectral-oracle",    "structure-axioms"};
    return names;
}

void RunConfig::validate() const
{
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw StructuralError("tolerance must be positive");
    }
    if (samples <= 0) {
        throw StructuralError("samples must be positive");
    }
    if (format != "json" && format != "markdown") {
        throw StructuralError("format must be json or markdown");
    }
    if (command == "random") {
        if (dim < 3 || dim % 2 == 0) {
            throw StructuralError("dim must be odd and at least 3");
        }
        const auto& names = random_properties();
        if (property != "all" && std::find(names.begin(), names.end(), property) == names.end()) {
            throw StructuralError("unknown property '" + property + "'");
        }
    }
    if (command == "verify") {
        for (const auto& name : checks) {
            const auto& names = verify_checks();
            if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
                throw StructuralError("unknown check '" + name + "'");
            }
        }
        model().validate();
    }
    if (command == "oracle riccati") {
        if (branch != "focal" && branch != "tangent" && branch != "horospheric") {
            throw StructuralError("branch must be focal, tangent or horospheric");
        }
        if (branch == "horospheric" && !(kappa < 0.0)) {
            throw DomainError("horospheric branch needs kappa < 0");
        }
        if (!(step > 0.0)) {
            throw StructuralError("step must be positive");
        }
    }
    if (command == "lemma jet" && !jet) {
        lemma23_kappas(alpha, beta, c.value_or(4.0));
    }
}

ModelSpec RunConfig::model() const
{
    if (!ambient || !family) {
        throw StructuralError("verify needs --ambient and --family");
    }
    ModelSpec spec;
    spec.ambient = *ambient;
    spec.family = *family;
    spec.n = n.value_or(2);
    spec.c = c.value_or(default_curvature(*ambient));
    spec.radius = radius;
    spec.k = k;
    spec.orientation = orientation;
    return spec;
}

Json RunConfig::echo() const
{
    Json out = {{"command", command},
                {"tolerance", tolerance},
                {"samples", samples},
                {"seed", seed},
                {"format", format},
                {"deterministic", deterministic}};
    if (command == "verify" || command == "catalog") {
        if (ambient) {
            out["ambient"] = to_string(*ambient);
        }
        if (family) {
            out["family"] = to_string(*family);
        }
        if (n) {
            out["n"] = *n;
        }
    }
    if (command == "verify") {
        out["c"] = model().c;
        out["radius"] = radius ? Json(*radius) : Json(nullptr);
        out["k"] = k;
        out["orientation"] = orientation;
        out["checks"] = checks;
    }
    if (command == "random") {
        out["dim"] = dim;
        out["property"] = property;
        out["general_metric"] = general_metric;
    }
    if (command == "oracle riccati") {
        out["kappa"] = kappa;
        out["r"] = r;
        out["r0"] = r0;
        out["branch"] = lambda0 ? Json("initial-value") : Json(branch);
        if (lambda0) {
            out["lambda0"] = *lambda0;
        }
        out["step"] = step;
    }
    if (command.rfind("lemma", 0) == 0) {
        out["alpha"] = alpha;
        out["beta"] = beta;
        out["c"] = c.value_or(4.0);
        if (w1_norm_sq) {
            out["w1_norm_sq"] = *w1_norm_sq;
        }
        if (jet) {
            out["jet"] = to_json(*jet);
        }
    }
    return out;
}

CheckReport execute(const RunConfig& config)
{
    config.validate();
    CheckReport report;
    if (config.command == "catalog") {
        report = run_catalog(config);
    } else if (config.command == "verify") {
        report = run_verify(config);
    } else if (config.command == "random") {
        report = run_random(config);
    } else if (config.command == "oracle riccati") {
        try {
            report = run_riccati(config);
        } catch (const FocalPointError& e) {
            CheckRow row = make_row("riccati-closed-form", "all", std::numeric_limits<double>::infinity(),
                                    kOracleTolerance);
            row.error = e.what();
            report.checks.push_back(row);
        }
    } else if (config.command == "lemma jet") {
        report = run_jet(config);
    } else if (config.command == "lemma certificate") {
        report = run_certificate(config);
    } else if (config.command == "lemma lemma21") {
        report = run_lemma21(config);
    } else {
        throw StructuralError("unknown command '" + config.command + "'");
    }
    report.command = config.command;
    report.config = config.echo();
    report.sort();
    if (!config.deterministic) {
        report.timestamp = utc_timestamp();
    }
    return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    TextOptions text;
    std::optional<std::string> config_path;

    CLI::App app{"Pointwise checks for real hypersurfaces in complex space forms", "hyperlab"};
    app.set_version_flag("--version", std::string(kArtifactVersion));
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--tolerance", cfg.tolerance, "Residual tolerance (default 1e-9, or $HYPERLAB_TOL)");
    app.add_option("--samples", cfg.samples, "Samples per random property");
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--out", cfg.out, "Write the report to this file");
    app.add_flag("--deterministic", cfg.deterministic, "Omit the timestamp");
    app.add_option("--config", config_path, "INI file with option defaults");

    auto* catalog = app.add_subcommand("catalog", "List the standard model catalog with spectral tables");
    catalog->add_option("--ambient", text.ambient, "CP or CH");
    catalog->add_option("--family", text.family, "A0, A1, A2 or B");
    catalog->add_option("--n", cfg.n, "Complex dimension");

    auto* verify = app.add_subcommand("verify", "Run condition checks on one model instance");
    verify->add_option("--ambient", text.ambient, "CP or CH");
    verify->add_option("--family", text.family, "A0, A1, A2 or B");
    verify->add_option("--n", cfg.n, "Complex dimension");
    verify->add_option("--c", cfg.c, "Holomorphic sectional curvature");
    verify->add_option("--radius", cfg.radius, "Tube radius");
    verify->add_option("--k", cfg.k, "Dimension of the focal submanifold");
    verify->add_option("--orientation", cfg.orientation, "+1 or -1");
    verify->add_option("--checks", cfg.checks, "Comma-separated check names or 'all'")->delimiter(',');

    auto* random = app.add_subcommand("random", "Property sweeps over random pointwise structures");
    random->add_option("--dim", cfg.dim, "Odd real dimension");
    random->add_option("--property", cfg.property, "Property name or 'all'");
    random->add_flag("--general-metric", cfg.general_metric, "Use random SPD Gram matrices");

    auto* oracle = app.add_subcommand("oracle", "Numerical oracles");
    oracle->require_subcommand(1);
    auto* riccati = oracle->add_subcommand("riccati", "Integrate lambda' = -(lambda^2 + kappa)");
    riccati->add_option("--kappa", cfg.kappa, "Curvature kappa")->required();
    riccati->add_option("--r", cfg.r, "Evaluation point")->required();
    riccati->add_option("--r0", cfg.r0, "Branch origin or initial point");
    riccati->add_option("--lambda0", cfg.lambda0, "Initial value at r0");
    riccati->add_option("--branch", cfg.branch, "focal, tangent or horospheric");
    riccati->add_option("--step", cfg.step, "RK4 step");

    auto* lemma = app.add_subcommand("lemma", "Scalar encodings of the beta != 0 argument");
    lemma->require_subcommand(1);
    auto* jet = lemma->add_subcommand("jet", "Residual rows for a local jet");
    jet->add_option("--alpha", cfg.alpha);
    jet->add_option("--beta", cfg.beta);
    jet->add_option("--c", cfg.c);
    auto* certificate = lemma->add_subcommand("certificate", "Discriminant and branch certificate");
    certificate->add_option("--alpha", cfg.alpha);
    certificate->add_option("--beta", cfg.beta);
    certificate->add_option("--c", cfg.c);
    certificate->add_option("--w1-norm-sq", cfg.w1_norm_sq);
    auto* lemma21 = lemma->add_subcommand("lemma21", "Commutator norm with alpha = 0");
    lemma21->add_option("--beta", cfg.beta);
    lemma21->add_option("--c", cfg.c);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    std::set<std::string> given;
    const std::function<void(const CLI::App*)> collect = [&](const CLI::App* a) {
        for (const CLI::Option* opt : a->get_options()) {
            if (opt->count() > 0) {
                std::string name = opt->get_name(false, true);
                name.erase(0, name.find_first_not_of('-'));
                std::replace(name.begin(), name.end(), '-', '_');
                given.insert(name);
            }
        }
        for (const CLI::App* sub : a->get_subcommands()) {
            collect(sub);
        }
    };
    collect(&app);

    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        cfg.command += (cfg.command.empty() ? "" : " ") + sub->get_name();
    }

    try {
        if (given.count("tolerance") == 0) {
            if (const char* env = std::getenv("HYPERLAB_TOL"); env != nullptr && *env != '\0') {
                char* end = nullptr;
                cfg.tolerance = std::strtod(env, &end);
                if (end == env || *end != '\0') {
                    throw StructuralError(std::string("HYPERLAB_TOL is not a number: ") + env);
                }
            }
        }
        if (config_path) {
            apply_config_file(*config_path, given, cfg, text);
        }
        if (!text.ambient.empty()) {
            cfg.ambient = parse_ambient(text.ambient);
            if (!cfg.ambient) {
                throw StructuralError("unknown ambient '" + text.ambient + "'");
            }
        }
        if (!text.family.empty()) {
            cfg.family = parse_family(text.family);
            if (!cfg.family) {
                throw StructuralError("unknown family '" + text.family + "'");
            }
        }
        cfg.validate();
    } catch (const std::exception& e) {
        err << "hyperlab: " << e.what() << "\n";
        return kExitUsage;
    }

    CheckReport report;
    try {
        report = execute(cfg);
    } catch (const std::logic_error& e) {
        err << "hyperlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "hyperlab: " << e.what() << "\n";
        return kExitCheckFailure;
    }

    const std::string body = cfg.format == "markdown" ? render_markdown(report) : render_json(report);
    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary);
        if (!file) {
            err << "hyperlab: cannot write " << *cfg.out << "\n";
            return kExitUsage;
        }
        file << body;
    } else {
        out << body;
    }
    return report.all_as_expected() ? kExitPass : kExitCheckFailure;
}

}  // namespace hyperlab
