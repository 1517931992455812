#pragma once

// JSON views of the library types and an emitter that prints every float with
// 17 significant digits.

#include <string>

#include <json.hpp>

#include "hyperlab/catalog.hpp"
#include "hyperlab/hopf.hpp"
#include "hyperlab/lemma_lab.hpp"

namespace hyperlab {

using Json = nlohmann::json;

Json to_json(const Vector& v);
/// Row-major array of rows.
Json to_json(const Matrix& m);
Json to_json(const AlmostContactStructure& acs);
Json to_json(const CurvatureContext& ctx);
Json to_json(const ModelSpec& spec);
Json to_json(const SpectralTable& table);
Json to_json(const ConditionReport& report);
Json to_json(const Classification& classification);
Json to_json(const TheoremResult& result);
Json to_json(const LocalJet& jet);
Json to_json(const JetResidualReport& report);
Json to_json(const ContradictionCertificate& cert);

/// Keys sorted, floats as %.17g, non-finite floats as null. indent < 0 gives
/// a single line.
std::string dump_exact(const Json& value, int indent = 2);

}  // namespace hyperlab
