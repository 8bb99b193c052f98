#include "pkostka/serialize.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

namespace pkostka {

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const CharacterVector& v) {
  Json out = Json::array();
  for (const auto& [mu, mult] : v.sorted()) out.push_back({{"partition", to_json(mu)}, {"mult", mult}});
  return out;
}

Json trace_to_json(const std::vector<ReductionStep>& trace) {
  Json out = Json::array();
  for (const auto& step : trace) {
    Json to = Json::array();
    for (const auto& [l, m] : step.to) to.push_back({to_json(l), to_json(m)});
    out.push_back({{"rule", step.rule},
                   {"from", {to_json(step.lambda), to_json(step.mu)}},
                   {"to", to},
                   {"value", step.value ? Json(*step.value) : Json(nullptr)}});
  }
  return out;
}

Json to_json(const PKostkaResult& result, bool steps) {
  Json out;
  out["multiplicity"] = result.value ? Json(*result.value) : Json(nullptr);
  out["kind"] = to_string(result.kind);
  out["trace"] = result.rules();
  if (steps) out["steps"] = trace_to_json(result.trace);
  return out;
}

Json to_json(const IndecomposabilityVerdict& v) {
  return {{"indecomposable", v.indecomposable}, {"rule", v.rule}, {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json row_to_json(const DecompositionRecord& record) {
  Json summands = Json::array();
  for (const auto& s : record.summands)
    summands.push_back({{"mu", to_json(s.label)}, {"dim", s.dimension}, {"mult", s.multiplicity}});
  return {{"lambda", to_json(record.lambda)}, {"summands", summands}};
}

Json to_json(const DecompositionRecord& record) {
  Json out{{"version", kFormatVersion}, {"p", record.p}, {"r", record.r}};
  const Json row = row_to_json(record);
  out["lambda"] = row["lambda"];
  out["summands"] = row["summands"];
  return out;
}

Json to_json(const LabelTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) rows.push_back(row_to_json(row));
  return {{"version", kFormatVersion}, {"p", table.p}, {"r", table.r}, {"rows", rows}};
}

LabelTable label_table_from_json(const Json& j) {
  if (j.at("version").get<int>() != kFormatVersion) throw std::invalid_argument("label table: unsupported version");
  LabelTable out;
  out.p = j.at("p").get<int>();
  out.r = j.at("r").get<int>();
  for (const auto& row : j.at("rows")) {
    DecompositionRecord rec;
    rec.p = out.p;
    rec.r = out.r;
    rec.lambda = partition_from_json(row.at("lambda"));
    for (const auto& s : row.at("summands"))
      rec.summands.push_back({partition_from_json(s.at("mu")), s.at("dim").get<std::size_t>(), s.at("mult").get<int>()});
    out.rows.push_back(std::move(rec));
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace pkostka
