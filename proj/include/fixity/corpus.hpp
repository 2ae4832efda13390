#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fixity/catalog.hpp"
#include "fixity/verify.hpp"

namespace fixity {

struct CorpusFilter {
  std::string name_substring;  // empty matches everything
  std::string tag;             // require this tag when non-empty
  std::size_t max_degree = 0;  // 0 = unbounded
  std::uint64_t max_order = 0; // 0 = unbounded (uses the stated order)
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Limits limits;
  // Sylow-coset actions are built explicitly when both the index and the
  // group order stay below these bounds; otherwise the verdict runs through
  // the class-intersection route on the original representation.
  std::size_t max_built_coset_degree = 4000;
  std::uint64_t max_built_coset_order = 100'000;
  double soft_time_budget = 60.0;   // seconds per entry, checked between actions
};

struct CorpusSummary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
  std::vector<VerificationReport> reports;  // sorted by (name, action)
};

// Runs every requested action derivation of every matching entry. Action
// derivations come from entry tags: "natural" verifies the bundled action,
// "sylow2" the action on Sylow 2-subgroup cosets; entries without action
// tags default to natural. A "pa:<delta>:<copies>" tag additionally checks
// that coordinate-shuffling elements fix at most degree/delta points.
// Failures are isolated per entry; timed-out or resource-bounded entries
// are reported truncated, never dropped.
CorpusSummary run_corpus(const std::vector<CatalogEntry>& entries,
                         const CorpusFilter& filter, const CorpusOptions& opt,
                         std::ostream* progress);

}  // namespace fixity
