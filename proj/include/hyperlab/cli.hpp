#pragma once

// Command-line front end: argument parsing, dispatch and report output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/catalog.hpp"
#include "hyperlab/lemma_lab.hpp"
#include "hyperlab/report.hpp"

namespace hyperlab {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

inline constexpr double kDefaultTolerance = 1e-9;

struct RunConfig {
    /// "catalog", "verify", "random", "oracle riccati", "lemma jet",
    /// "lemma certificate" or "lemma lemma21".
    std::string command;

    // Model selection (catalog filters, verify).
    std::optional<Ambient> ambient;
    std::optional<Family> family;
    std::optional<int> n;
    std::optional<double> c;
    std::optional<double> radius;
    int k = 0;
    int orientation = 1;

    std::vector<std::string> checks{"all"};
    double tolerance = kDefaultTolerance;
    int samples = 1000;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::optional<std::string> out;
    bool deterministic = false;

    // random
    int dim = 5;
    std::string property = "all";
    bool general_metric = false;

    // oracle riccati
    double kappa = 1.0;
    double r = 1.0;
    double r0 = 0.0;
    std::optional<double> lambda0;
    std::string branch = "focal";
    double step = 1e-5;

    // lemma
    double alpha = 1.0;
    double beta = 1.0;
    std::optional<double> w1_norm_sq;
    std::optional<LocalJet> jet;

    /// Throws StructuralError on invalid values.
    void validate() const;
    /// Model spec for verify; c defaults to the ambient's standard value.
    ModelSpec model() const;
    Json echo() const;
};

/// Names accepted by `random --property`.
const std::vector<std::string>& random_properties();
/// Names accepted by `verify --checks`.
const std::vector<std::string>& verify_checks();

/// Runs the configured command; no I/O. Usage-level problems throw
/// StructuralError or DomainError.
CheckReport execute(const RunConfig& config);

/// Parses `args` (without the program name), runs, and writes the report to
/// `out` or the --out file. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlab
