#pragma once

// Check reports shared by every subcommand.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlab/serialize.hpp"

namespace hyperlab {

inline constexpr std::string_view kSchema = "hyperlab/1";
inline constexpr std::string_view kArtifactVersion = "0.3.0";

struct CheckRow {
    std::string name;
    std::string subspace = "all";
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// false marks a negative control that should fail.
    std::optional<bool> expected;
    std::optional<std::string> error;
    Json detail;  // null when there is nothing to add

    /// pass == expected (expected defaults to true).
    bool as_expected() const { return pass == expected.value_or(true); }
};

/// Row with pass set from residual <= tolerance.
CheckRow make_row(std::string name, std::string subspace, double residual, double tolerance);

struct CheckReport {
    std::string command;
    Json config = Json::object();
    std::vector<CheckRow> checks;
    Json payload;  // command-specific data, null when empty
    std::optional<std::string> timestamp;

    /// Orders rows by (name, subspace).
    void sort();
    bool all_as_expected() const;
};

Json to_json(const CheckRow& row);
Json to_json(const CheckReport& report);
std::string render_json(const CheckReport& report);
std::string render_markdown(const CheckReport& report);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace hyperlab
