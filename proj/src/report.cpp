#include "fixity/report.hpp"

#include <sstream>

namespace fixity {

const char* to_string(VerificationReport::Verdict v) {
  switch (v) {
    case VerificationReport::Verdict::PASS: return "PASS";
    case VerificationReport::Verdict::FAIL: return "FAIL";
    default: return "SKIP";
  }
}

namespace {

const char* kind_name(ReductionNode::Kind k) {
  switch (k) {
    case ReductionNode::Kind::SYLOW_BLOCKS: return "SYLOW_BLOCKS";
    case ReductionNode::Kind::INTRANSITIVE_MINIMAL_NORMAL:
      return "INTRANSITIVE_MINIMAL_NORMAL";
    default: return "QUASIPRIMITIVE";
  }
}

}  // namespace

nlohmann::json to_json(const Ratio& r) {
  return {{"num", r.num()}, {"den", r.den()}};
}

nlohmann::json to_json(const ReductionNode& node) {
  nlohmann::json j;
  j["step"] = kind_name(node.kind);
  j["rule"] = node.rule;
  j["degree"] = node.degree;
  if (node.block_count > 0) {
    j["block_count"] = node.block_count;
    j["block_size"] = node.block_size;
  }
  if (node.kind == ReductionNode::Kind::QUASIPRIMITIVE && !node.ons_tag.empty()) {
    j["ons_type"] = node.ons_tag;
    if (node.socle_factor_count > 0) {
      j["socle_factor_count"] = node.socle_factor_count;
      j["socle_order"] = node.socle_order;
    }
  }
  if (!node.notes.empty()) j["notes"] = node.notes;
  if (!node.children.empty()) {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : node.children) kids.push_back(to_json(*c));
    j["children"] = std::move(kids);
  }
  return j;
}

nlohmann::json to_json(const VerificationReport& r, bool with_timings) {
  nlohmann::json j;
  j["name"] = r.name;
  j["action"] = r.action;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["seed"] = r.seed;
  j["hypotheses"] = {{"transitive", r.hypotheses.transitive},
                     {"stabiliser_2group", r.hypotheses.stab_2group},
                     {"o2_trivial", r.hypotheses.o2_trivial}};
  j["verdict"] = to_string(r.verdict);
  if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
  if (r.witness_class) j["witness_class"] = *r.witness_class;
  j["mindeg"] = r.mindeg;
  j["fixity"] = r.fixity;
  j["max_fpr"] = to_json(r.max_fpr);
  j["argmax_class"] = r.argmax_class;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.profile)
    rows.push_back({{"order", row.element_order},
                    {"size", row.class_size},
                    {"fix", row.fix_count},
                    {"fpr", to_json(row.fpr)}});
  j["classes"] = std::move(rows);
  if (r.tree) j["reduction_tree"] = to_json(*r.tree);
  j["truncated"] = r.truncated;
  if (r.truncated) j["truncation_reason"] = r.truncation_reason;
  if (with_timings) j["seconds"] = r.seconds;
  return j;
}

nlohmann::json report_set_json(const std::vector<VerificationReport>& reports,
                               std::uint64_t seed, bool with_timings) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = seed;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& r : reports) entries.push_back(to_json(r, with_timings));
  j["entries"] = std::move(entries);
  return j;
}

std::string report_set_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "group,action,class,order,fix,fpr\n";
  for (const auto& r : reports)
    for (std::size_t i = 0; i < r.profile.size(); ++i)
      os << r.name << ',' << r.action << ',' << i << ','
         << r.profile[i].element_order << ',' << r.profile[i].fix_count << ','
         << r.profile[i].fpr.to_string() << '\n';
  return os.str();
}

namespace {

void render_tree(const ReductionNode& node, int indent, std::ostream& os) {
  os << std::string(std::size_t(indent) * 2, ' ') << "- " << kind_name(node.kind)
     << " (degree " << node.degree;
  if (node.block_count > 0)
    os << ", " << node.block_count << " blocks of " << node.block_size;
  if (!node.ons_tag.empty()) os << ", type " << node.ons_tag;
  os << ")\n";
  os << std::string(std::size_t(indent) * 2 + 2, ' ') << node.rule << "\n";
  for (const auto& note : node.notes)
    os << std::string(std::size_t(indent) * 2 + 2, ' ') << "note: " << note
       << "\n";
  for (const auto& c : node.children) render_tree(*c, indent + 1, os);
}

}  // namespace

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.name << " [" << r.action << "] degree " << r.degree << " order "
     << r.order << "\n";
  os << "  hypotheses: transitive=" << (r.hypotheses.transitive ? "yes" : "no")
     << " stabiliser-2-group=" << (r.hypotheses.stab_2group ? "yes" : "no")
     << " trivial-2-core=" << (r.hypotheses.o2_trivial ? "yes" : "no") << "\n";
  os << "  mindeg " << r.mindeg << ", fixity " << r.fixity << ", max fpr "
     << r.max_fpr.to_string() << "\n";
  os << "  verdict: " << to_string(r.verdict);
  if (!r.skip_reason.empty()) os << " (" << r.skip_reason << ")";
  os << "\n";
  if (r.truncated) os << "  TRUNCATED: " << r.truncation_reason << "\n";
  if (r.tree) render_tree(*r.tree, 1, os);
  return os.str();
}

}  // namespace fixity
