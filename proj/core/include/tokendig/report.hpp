#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tokendig/digraph.hpp"

namespace tokendig {

/// All reports use ordered_json so key order (and thus serialized bytes)
/// is deterministic for a fixed command line and seed.
using json = nlohmann::ordered_json;

/// Outcome of one mechanical check. `detail` holds the first violation
/// (human-readable, with the offending arc/node/coloring) and is empty on pass.
struct CheckResult {
  bool pass = true;
  std::string detail;
};

inline CheckResult check_ok() { return {}; }
inline CheckResult check_fail(std::string detail) { return {false, std::move(detail)}; }

/// Keeps the first failure; later passes never erase it.
CheckResult& operator&=(CheckResult& acc, const CheckResult& next);

std::string format_members(std::uint64_t mask);
std::string format_arc(const Arc& a);

json to_json(const CheckResult& r);
json to_json(const Digraph& d);
json to_json(const Graph& g);

}  // namespace tokendig
