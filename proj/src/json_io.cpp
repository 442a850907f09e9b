#include "fairdiv/json_io.hpp"

#include <istream>

namespace fairdiv {

namespace {

Rational entry_from_json(const nlohmann::json& cell) {
  if (cell.is_string()) return parse_rational(cell.get<std::string>());
  if (cell.is_number_integer()) return Rational(cell.get<long long>());
  throw ParseError("matrix entries must be fraction strings or integers");
}

nlohmann::json read_json(std::istream& in) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Instance instance_from_json(const nlohmann::json& doc, bool normalize) {
  if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("instance file needs a \"kind\" of \"goods\" or \"chores\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  Instance inst;
  if (kind == "goods") {
    inst.kind = Kind::Goods;
  } else if (kind == "chores") {
    inst.kind = Kind::Chores;
  } else {
    throw ParseError("unknown kind '" + kind + "'");
  }
  if (!doc.contains("values") || !doc["values"].is_array() || doc["values"].empty()) {
    throw ParseError("instance file needs a non-empty \"values\" array of rows");
  }
  for (const auto& row : doc["values"]) {
    if (!row.is_array() || row.empty()) {
      throw ParseError("each row of \"values\" must be a non-empty array");
    }
    std::vector<Rational> parsed;
    parsed.reserve(row.size());
    for (const auto& cell : row) parsed.push_back(entry_from_json(cell));
    inst.values.push_back(std::move(parsed));
  }
  inst.n = static_cast<int>(inst.values.size());
  inst.m = static_cast<int>(inst.values.front().size());
  if (normalize) return normalized(std::move(inst));
  check_instance(inst);
  return inst;
}

Instance parse_instance(std::istream& in, bool normalize) {
  return instance_from_json(read_json(in), normalize);
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : inst.values) {
    nlohmann::json out_row = nlohmann::json::array();
    for (const auto& v : row) out_row.push_back(format_rational(v));
    rows.push_back(std::move(out_row));
  }
  return nlohmann::json{{"kind", kind_name(inst.kind)}, {"values", std::move(rows)}};
}

Allocation allocation_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("bundles") || !doc["bundles"].is_array()) {
    throw ParseError("allocation file needs a \"bundles\" array");
  }
  Allocation alloc;
  for (const auto& entry : doc["bundles"]) {
    if (!entry.is_object() || !entry.contains("lo") || !entry.contains("hi") ||
        !entry["lo"].is_number_integer() || !entry["hi"].is_number_integer()) {
      throw ParseError("each bundle must be {\"lo\":int,\"hi\":int}");
    }
    alloc.bundles.push_back(Block{entry["lo"].get<int>(), entry["hi"].get<int>()});
  }
  return alloc;
}

Allocation parse_allocation(std::istream& in) {
  return allocation_from_json(read_json(in));
}

nlohmann::json allocation_to_json(const Allocation& alloc) {
  nlohmann::json bundles = nlohmann::json::array();
  for (const Block& b : alloc.bundles) {
    bundles.push_back(nlohmann::json{{"lo", b.lo}, {"hi", b.hi}});
  }
  return nlohmann::json{{"bundles", std::move(bundles)}};
}

}  // namespace fairdiv
