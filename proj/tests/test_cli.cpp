#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hyperlab/cli.hpp"

using namespace hyperlab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "hyperlab-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int shell(const std::string& command)
{
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify on a geodesic sphere passes")
{
    const auto r = call({"verify", "--ambient", "CP", "--n", "2", "--family", "A1", "--radius", "1.0471975512",
                         "--checks", "all", "--deterministic"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "hyperlab/1");
    CHECK_FALSE(j.contains("timestamp"));
    std::set<std::string> names;
    for (const auto& row : j["checks"]) {
        CHECK(row["pass"] == true);
        names.insert(row["name"].get<std::string>());
    }
    CHECK(names.count("phi-l-commute") == 1);
    CHECK(names.count("l-a-commute") == 1);
    CHECK(names.count("nabla-xi-l") == 1);
    CHECK(j["payload"]["theorem"]["verdict"] == "type-A-compatible");
}

TEST_CASE("rows are sorted by name and subspace")
{
    const auto r = call({"verify", "--ambient", "CH", "--n", "3", "--family", "A2", "--radius", "0.7", "--k", "1",
                         "--deterministic"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& row : j["checks"]) {
        keys.emplace_back(row["name"], row["subspace"]);
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(keys.size() == verify_checks().size() + 1);
}

TEST_CASE("type B negative controls are marked expected false")
{
    const auto r = call({"verify", "--ambient", "CP", "--n", "3", "--family", "B", "--radius", "0.5",
                         "--deterministic"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    bool saw = false;
    for (const auto& row : j["checks"]) {
        if (row["name"] == "phi-l-commute") {
            saw = true;
            CHECK(row["pass"] == false);
            CHECK(row["expected"] == false);
        }
    }
    CHECK(saw);
    CHECK(j["payload"]["theorem"]["verdict"] == "hypothesis-phi-l-fails");
}

TEST_CASE("oracle riccati")
{
    const auto r = call({"oracle", "riccati", "--kappa", "1", "--r", "0.7853981634", "--deterministic"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["payload"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

    const auto past = call({"oracle", "riccati", "--kappa", "1", "--r", "4", "--deterministic"});
    CHECK(past.code == kExitCheckFailure);
    CHECK(nlohmann::json::parse(past.out)["checks"][0].contains("error"));

    const auto tangent = call({"oracle", "riccati", "--kappa", "-4", "--r", "0.3", "--branch", "tangent"});
    CHECK(tangent.code == kExitPass);
    const auto ivp = call({"oracle", "riccati", "--kappa", "-1", "--r", "2", "--r0", "0.5", "--lambda0", "0.2"});
    CHECK(ivp.code == kExitPass);
    CHECK(call({"oracle", "riccati", "--kappa", "1", "--r", "1", "--branch", "horospheric"}).code == kExitUsage);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"verify", "--ambient", "CP"}).code == kExitUsage);
    CHECK(call({"verify", "--ambient", "CQ", "--family", "A1", "--radius", "1"}).code == kExitUsage);
    CHECK(call({"verify", "--ambient", "CP", "--family", "A0"}).code == kExitUsage);
    CHECK(call({"verify", "--ambient", "CP", "--family", "A1", "--radius", "1", "--checks", "nope"}).code ==
          kExitUsage);
    CHECK(call({"random", "--dim", "4"}).code == kExitUsage);
    CHECK(call({"random", "--property", "nope"}).code == kExitUsage);
    CHECK(call({"random", "--samples", "0"}).code == kExitUsage);
    CHECK(call({"random", "--tolerance", "-1"}).code == kExitUsage);
    CHECK(call({"random", "--format", "xml"}).code == kExitUsage);
    CHECK(call({"lemma", "jet", "--alpha", "0"}).code == kExitUsage);
    CHECK(call({"--help"}).code == kExitPass);
}

TEST_CASE("check failures exit with 1")
{
    CHECK(call({"random", "--samples", "5", "--tolerance", "1e-30", "--property", "gauss-bianchi"}).code ==
          kExitCheckFailure);
    CHECK(call({"lemma", "certificate", "--c", "4", "--alpha", "1", "--beta", "1"}).code == kExitCheckFailure);
    CHECK(call({"lemma", "certificate", "--c", "4", "--alpha", "0.7071067811865476", "--beta", "1"}).code ==
          kExitPass);
    CHECK(call({"lemma", "lemma21", "--c", "4", "--beta", "3"}).code == kExitPass);
}

TEST_CASE("deterministic output is byte-identical and timestamps appear otherwise")
{
    const std::vector<std::string> args{"random", "--dim", "5", "--samples", "10", "--seed", "42", "--property",
                                        "hopf-commutator", "--deterministic"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
    const auto other = call({"random", "--dim", "5", "--samples", "10", "--seed", "43", "--property",
                             "hopf-commutator", "--deterministic"});
    CHECK(other.out != a.out);
    const auto stamped = call({"random", "--dim", "5", "--samples", "10", "--property", "hopf-commutator"});
    CHECK(nlohmann::json::parse(stamped.out).contains("timestamp"));
}

TEST_CASE("floats round-trip exactly")
{
    const auto r = call({"verify", "--ambient", "CH", "--n", "2", "--family", "A1", "--radius", "0.3",
                         "--deterministic"});
    const auto j = nlohmann::json::parse(r.out);
    const double alpha = j["payload"]["spectral"]["alpha"].get<double>();
    CHECK(alpha == 2.0 / std::tanh(0.6));
    CHECK(r.out.find("\"c\": -4.0") != std::string::npos);
}

TEST_CASE("tolerance precedence: flag, config, environment, default")
{
    const auto tol = [](const Result& r) {
        return nlohmann::json::parse(r.out)["config"]["tolerance"].get<double>();
    };
    CHECK(tol(call({"lemma", "lemma21", "--deterministic"})) == kDefaultTolerance);
    ::setenv("HYPERLAB_TOL", "1e-6", 1);
    CHECK(tol(call({"lemma", "lemma21", "--deterministic"})) == 1e-6);
    CHECK(tol(call({"lemma", "lemma21", "--deterministic", "--tolerance", "1e-4"})) == 1e-4);
    const auto cfg = scratch("tol.ini");
    std::ofstream(cfg) << "tolerance = 1e-5\n";
    CHECK(tol(call({"lemma", "lemma21", "--deterministic", "--config", cfg.string()})) == 1e-5);
    ::setenv("HYPERLAB_TOL", "abc", 1);
    CHECK(call({"lemma", "lemma21"}).code == kExitUsage);
    ::unsetenv("HYPERLAB_TOL");
}

TEST_CASE("config files supply model fields and jets")
{
    const auto model = scratch("model.ini");
    std::ofstream(model) << "ambient = CH\nfamily = A2\nn = 3\nradius = 0.4\nk = 1\nc = -9\n";
    const auto r = call({"verify", "--config", model.string(), "--deterministic"});
    CHECK(r.code == kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["c"] == -9.0);
    CHECK(j["payload"]["spec"]["family"] == "A2");
    // Flags win over the file.
    const auto flagged = call({"verify", "--config", model.string(), "--n", "4", "--deterministic"});
    CHECK(nlohmann::json::parse(flagged.out)["payload"]["spec"]["n"] == 4);

    const auto jet = scratch("jet.ini");
    std::ofstream(jet) << "[jet]\nalpha = 1\nbeta = 1\nc = 4\nkappa1 = -4\nkappa2 = -4\n"
                       << "phiu_alpha = 0\nphiu_beta = -3\n";
    const auto jr = call({"lemma", "jet", "--config", jet.string(), "--deterministic"});
    CHECK(jr.code == kExitPass);
    std::ofstream(jet) << "[jet]\nalpha = 1\nbeta = 1\nc = 4\nkappa1 = -3\n";
    CHECK(call({"lemma", "jet", "--config", jet.string()}).code == kExitCheckFailure);
    std::ofstream(jet) << "[jet]\nalpha = one\n";
    CHECK(call({"lemma", "jet", "--config", jet.string()}).code == kExitUsage);
    CHECK(call({"lemma", "jet", "--config", scratch("missing.ini").string()}).code == kExitUsage);
}

TEST_CASE("markdown output and --out")
{
    const auto path = scratch("report.md");
    const auto r = call({"catalog", "--ambient", "CH", "--family", "A0", "--format", "markdown", "--out",
                         path.string(), "--deterministic"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.empty());
    const std::string text = slurp(path);
    CHECK(text.rfind("# hyperlab catalog", 0) == 0);
    CHECK(text.find("| spectral-oracle:") != std::string::npos);
}

TEST_CASE("the installed binary honours the exit-code contract")
{
    const std::string bin = HYPERLAB_BIN;
    const auto a = scratch("a.json");
    const auto b = scratch("b.json");
    const std::string common = " random --dim 5 --samples 10 --seed 42 --property hopf-commutator --deterministic";
    CHECK(shell(bin + common + " --out " + a.string()) == 0);
    CHECK(shell(bin + common + " --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    CHECK(shell(bin + " verify --ambient CP > /dev/null 2>&1") == 2);
    CHECK(shell(bin + " random --samples 3 --tolerance 1e-30 --property jacobi-xi > /dev/null") == 1);
}
