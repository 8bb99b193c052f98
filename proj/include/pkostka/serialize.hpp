#pragma once

// JSON forms of the library's results, plus atomic file writes.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pkostka/character.hpp"
#include "pkostka/engine.hpp"
#include "pkostka/indecomposability.hpp"
#include "pkostka/oracle.hpp"

namespace pkostka {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// [{"partition": [...], "mult": n}, ...] in descending lexicographic order.
Json to_json(const CharacterVector& v);
/// [{"rule", "from": [lambda, mu], "to": [[lambda', mu'], ...], "value"}, ...]
Json trace_to_json(const std::vector<ReductionStep>& trace);
/// {"multiplicity", "kind", "trace": [rule names]}; `steps` adds the full records.
Json to_json(const PKostkaResult& result, bool steps = false);
/// {"indecomposable", "rule", "witness"}
Json to_json(const IndecomposabilityVerdict& v);
/// {"lambda": [...], "summands": [{"mu", "dim", "mult"}, ...]}
Json row_to_json(const DecompositionRecord& record);
/// {"version", "p", "r", "lambda", "summands"}
Json to_json(const DecompositionRecord& record);
/// {"version", "p", "r", "rows": [...]}
Json to_json(const LabelTable& table);
LabelTable label_table_from_json(const Json& j);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace pkostka
