#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sbsurf/registry.hpp"

namespace sbsurf {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "sbsurf 1.0.0";

Json to_json(const VerificationReport& r);
Json to_json(const TheoremReport& r);

// {tool_version, config, results, summary{pass, fail, skipped}}; summary
// counts rows carrying a "pass" flag. Serialization is key-ordered and
// timestamp-free so identical configs give byte-identical output.
Json make_report(const Json& config, const Json& results);
std::string dump_report(const Json& report);

}  // namespace sbsurf
