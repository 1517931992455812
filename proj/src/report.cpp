#include "hyperlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace hyperlab {

CheckRow make_row(std::string name, std::string subspace, double residual, double tolerance)
{
    CheckRow row;
    row.name = std::move(name);
    row.subspace = std::move(subspace);
    row.residual = residual;
    row.tolerance = tolerance;
    row.pass = residual <= tolerance;
    return row;
}

void CheckReport::sort()
{
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRow& a, const CheckRow& b) {
        return a.name != b.name ? a.name < b.name : a.subspace < b.subspace;
    });
}

bool CheckReport::all_as_expected() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRow& r) { return r.as_expected(); });
}

Json to_json(const CheckRow& row)
{
    Json out = {{"name", row.name},
                {"subspace", row.subspace},
                {"residual", row.residual},
                {"tolerance", row.tolerance},
                {"pass", row.pass}};
    if (row.expected) {
        out["expected"] = *row.expected;
    }
    if (row.error) {
        out["error"] = *row.error;
    }
    if (!row.detail.is_null()) {
        out["detail"] = row.detail;
    }
    return out;
}

Json to_json(const CheckReport& report)
{
    Json checks = Json::array();
    for (const auto& row : report.checks) {
        checks.push_back(to_json(row));
    }
    Json out = {{"schema", kSchema},
                {"version", kArtifactVersion},
                {"command", report.command},
                {"config", report.config},
                {"checks", checks},
                {"ok", report.all_as_expected()}};
    if (!report.payload.is_null()) {
        out["payload"] = report.payload;
    }
    if (report.timestamp) {
        out["timestamp"] = *report.timestamp;
    }
    return out;
}

std::string render_json(const CheckReport& report)
{
    return dump_exact(to_json(report)) + "\n";
}

namespace {

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

std::string render_markdown(const CheckReport& report)
{
    std::ostringstream os;
    os << "# hyperlab " << report.command << "\n\n";
    os << "schema `" << kSchema << "`, version " << kArtifactVersion;
    if (report.timestamp) {
        os << ", " << *report.timestamp;
    }
    os << "\n\n";
    os << "| check | subspace | residual | tolerance | pass | expected |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& row : report.checks) {
        os << "| " << row.name << " | " << row.subspace << " | " << sci(row.residual) << " | "
           << sci(row.tolerance) << " | " << (row.pass ? "yes" : "no") << " | "
           << (row.expected.value_or(true) ? "pass" : "fail") << " |\n";
    }
    const auto bad = std::count_if(report.checks.begin(), report.checks.end(),
                                   [](const CheckRow& r) { return !r.as_expected(); });
    os << "\n" << report.checks.size() << " checks, " << bad << " unexpected\n";
    if (!report.payload.is_null()) {
        os << "\n```json\n" << dump_exact(report.payload) << "\n```\n";
    }
    return os.str();
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hyperlab
