#pragma once

#include "fsing/deformation.hpp"
#include "fsing/fixtures.hpp"
#include "fsing/oracle_check.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace fsing {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Seed for randomized suites: FSING_SEED when set to an integer, else 1.
std::uint64_t session_seed();

Json input_json(const RingInput& in);
Json verdict_json(const Verdict& v);
Json certificate_json(const DeformationCertificate& c);

/// With `index`, only that cohomological index is reported alongside the ring-level summary.
Json classification_json(const RingInput& in, const ClassificationReport& r, std::optional<int> index = {});
Json deformation_json(const RingInput& in, const DeformationCertificate& c);
Json fixture_json(const FixtureRun& run);
Json oracle_json(const RingInput& in, const OracleComparison& c);

/// Stable serialization: two-space indent and a trailing newline.
std::string dump(const Json& j);

std::string classification_text(const ClassificationReport& r, std::optional<int> index = {});
std::string deformation_text(const DeformationCertificate& c);
std::string fixture_text(const FixtureRun& run);
std::string oracle_text(const OracleComparison& c);

}  // namespace fsing
