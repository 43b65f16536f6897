#pragma once

#include <string>

#include "json.hpp"
#include "plbranch/verdict.hpp"

namespace plbranch {

using Json = nlohmann::ordered_json;

/// One flat document per instance. Keys are emitted in a fixed order;
/// absent quantities are null; non-finite dimensions are tagged objects
/// {"status": ..., "reason": ...}.
Json to_json(const BranchReport& r);
/// Inverse of to_json. Throws nlohmann::json::exception on malformed input.
BranchReport report_from_json(const Json& j);

Json to_json(const SweepResult& s, std::uint64_t lo, std::uint64_t hi);

/// "key = value" lines using the JSON key names.
std::string render_text(const BranchReport& r);
std::string render_text(const SweepResult& s);

}  // namespace plbranch
