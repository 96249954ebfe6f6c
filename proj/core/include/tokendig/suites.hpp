#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tokendig/report.hpp"

namespace tokendig {

struct SuiteOptions {
  int n_max = 6;
  int samples = 500;
  std::uint64_t seed = 12345;
  std::optional<int> k;  // restrict every suite to a single k when set
  bool slow = false;     // include the minutes-scale parts
};

struct SuiteReport {
  std::string id;
  bool pass = false;
  json report;
};

// Suite ids in canonical order: properties, condensation, lemma2,
// unilateral, girth, long-cycle, eulerian, hamiltonian-cn, odd-cycle,
// reduction, clique, dichromatic, conjecture, k8c5.
const std::vector<std::string>& suite_ids();

// Runs one verification suite deterministically for the given options.
// Throws std::invalid_argument on an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteOptions& options);

}  // namespace tokendig
