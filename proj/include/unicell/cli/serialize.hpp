#pragma once

#include "unicell/enumerate.hpp"
#include "unicell/verdict.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace unicell::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// [{"<name0>": k0, ..., "count": "<decimal>"}, ...] in key order.
Json table_to_json(const CountTable& table, const std::vector<std::string>& key_names);
CountTable table_from_json(const Json& rows, const std::vector<std::string>& key_names);
std::string table_to_csv(const CountTable& table, const std::vector<std::string>& key_names);

Json verdict_to_json(const Verdict& v);

// Two-space indented, keys sorted, trailing newline.
std::string dump(const Json& j);

}  // namespace unicell::cli
