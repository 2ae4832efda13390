#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixity/rational.hpp"

namespace fixity {

inline constexpr const char* kToolVersion = "1.0.0";

struct HypothesisChecks {
  bool transitive = false;
  bool stab_2group = false;
  bool o2_trivial = false;
};

// One step of the inductive replay. Every node names the reduction rule it
// instantiates in self-contained terms.
struct ReductionNode {
  enum class Kind { SYLOW_BLOCKS, INTRANSITIVE_MINIMAL_NORMAL, QUASIPRIMITIVE };
  Kind kind = Kind::QUASIPRIMITIVE;
  std::string rule;
  std::size_t degree = 0;
  std::size_t block_count = 0;
  std::size_t block_size = 0;
  std::string ons_tag;          // quasiprimitive leaves
  int socle_factor_count = 0;
  std::string socle_order;
  std::vector<std::string> notes;
  std::vector<std::unique_ptr<ReductionNode>> children;
};

struct ProfileRow {
  std::uint64_t element_order = 0;
  std::uint64_t class_size = 0;
  std::uint64_t fix_count = 0;
  Ratio fpr;
};

struct VerificationReport {
  std::string name;
  std::string action;
  std::size_t degree = 0;
  std::string order;  // decimal string
  std::uint64_t seed = 0;
  HypothesisChecks hypotheses;
  std::vector<ProfileRow> profile;
  std::uint64_t mindeg = 0;
  std::uint64_t fixity = 0;
  Ratio max_fpr;
  std::size_t argmax_class = 0;
  std::unique_ptr<ReductionNode> tree;
  enum class Verdict { PASS, FAIL, SKIP } verdict = Verdict::SKIP;
  std::string skip_reason;
  std::optional<std::size_t> witness_class;
  bool truncated = false;
  std::string truncation_reason;
  double seconds = 0.0;
};

const char* to_string(VerificationReport::Verdict v);

nlohmann::json to_json(const Ratio& r);
nlohmann::json to_json(const ReductionNode& node);
nlohmann::json to_json(const VerificationReport& report, bool with_timings);

// Top-level report file: {tool_version, seed, entries:[...]}.
nlohmann::json report_set_json(const std::vector<VerificationReport>& reports,
                               std::uint64_t seed, bool with_timings);

// Flat rows: group, action, class, order, fix, fpr.
std::string report_set_csv(const std::vector<VerificationReport>& reports);

// Human-readable one-report rendering for the CLI.
std::string render_text(const VerificationReport& report);

}  // namespace fixity
