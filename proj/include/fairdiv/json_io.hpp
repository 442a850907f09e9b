#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Instance file schema: {"kind":"goods"|"chores", "values":[["p/q",...],...]}
// with entries given as fraction strings or plain integers. Row count = n,
// column count = m. With normalize set, rows are rescaled to sum to +-1;
// sign violations are rejected either way.
Instance instance_from_json(const nlohmann::json& doc, bool normalize = false);
Instance parse_instance(std::istream& in, bool normalize = false);

nlohmann::json instance_to_json(const Instance& inst);

// Allocation file schema: {"bundles":[{"lo":int,"hi":int},...]}, 1-based
// half-open ranges.
Allocation allocation_from_json(const nlohmann::json& doc);
Allocation parse_allocation(std::istream& in);

nlohmann::json allocation_to_json(const Allocation& alloc);

}  // namespace fairdiv
