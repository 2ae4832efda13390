#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixity/fixity.hpp"
#include "fixity/report.hpp"

namespace fixity {

struct VerifyOptions {
  std::uint64_t seed = 1;
  Limits limits;
  bool build_reduction_tree = true;
};

// Full verification of one action: hypothesis checks, per-class profile,
// the bound verdict, and (when the hypotheses hold) a replay of the
// inductive reduction. Resource bounds produce truncated SKIP reports.
VerificationReport verify(const PermGroup& action, const std::string& name,
                          const std::string& action_desc,
                          const VerifyOptions& opt = {});

// Verdict for the action of g on the cosets of h computed through class
// intersections (|x^G ∩ H| / |x^G|) instead of constructing the action;
// requires the action to be faithful. Meant for large-index Sylow coset
// actions.
VerificationReport verify_cosets_by_formula(const PermGroup& g,
                                            const ConjugacyClasses& cls,
                                            const PermGroup& h,
                                            const std::string& name,
                                            const VerifyOptions& opt = {});

struct DescentLevel {
  std::size_t level = 0;        // walk depth; 0 = maximal systems
  std::string fingerprint;      // block system on the original points
  std::size_t block_count = 0;
  Ratio max_fpr;                // over non-identity elements of the group
  bool surviving = false;       // strictly above the threshold
  bool point_action = false;    // the singleton system, i.e. the action itself
};

struct DescentResult {
  Ratio threshold;
  std::vector<DescentLevel> levels;
  std::size_t surviving_point_actions = 0;
};

// Top-down walk of the block-system lattice: coarse quotients are computed
// first and a quotient whose maximum non-identity ratio is at most the
// threshold certifies everything below it (block ratios dominate point
// ratios), so that branch is pruned. Survival is strict: a quotient
// achieving the threshold exactly is certified, not flagged.
DescentResult descent(const PermGroup& action, Point omega, Ratio threshold,
                      const VerifyOptions& opt = {});

}  // namespace fixity
