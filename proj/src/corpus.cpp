#include "fixity/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "fixity/actions.hpp"
#include "fixity/error.hpp"
#include "fixity/structure.hpp"
#include "fixity/subgroups.hpp"

namespace fixity {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool matches(const CatalogEntry& e, const CorpusFilter& f) {
  if (!f.name_substring.empty() &&
      e.name.find(f.name_substring) == std::string::npos)
    return false;
  if (!f.tag.empty() && !e.has_tag(f.tag)) return false;
  if (f.max_degree > 0 && e.degree > f.max_degree) return false;
  if (f.max_order > 0 && e.expected_order && *e.expected_order > f.max_order)
    return false;
  return true;
}

VerificationReport error_report(const std::string& name,
                                const std::string& action,
                                const std::string& why) {
  VerificationReport rep;
  rep.name = name;
  rep.action = action;
  rep.verdict = VerificationReport::Verdict::SKIP;
  rep.truncated = true;
  rep.truncation_reason = why;
  rep.skip_reason = why;
  return rep;
}

// "pa:<delta>:<copies>": coordinate-shuffling elements of a product action
// fix at most degree/delta points. Checked on class representatives (the
// top component is constant on conjugacy classes up to relabeling).
void check_product_action_tag(const CatalogEntry& entry, const PermGroup& g,
                              VerificationReport& rep, const Limits& lim) {
  for (const std::string& tag : entry.tags) {
    if (tag.rfind("pa:", 0) != 0) continue;
    auto mid = tag.find(':', 3);
    if (mid == std::string::npos)
      throw InputError("bad pa tag '" + tag + "' on entry " + entry.name);
    ProductAction pa;
    pa.group = g;
    pa.base_degree = std::stoul(tag.substr(3, mid - 3));
    pa.copies = unsigned(std::stoul(tag.substr(mid + 1)));
    const std::size_t bound = g.degree() / pa.base_degree;
    ConjugacyClasses cc = ConjugacyClasses::compute(g, lim);
    bool ok = true;
    for (std::size_t i = 1; i < cc.count(); ++i) {
      const Perm& rep_perm = cc.at(i).rep;
      if (pa.top_component(rep_perm).is_identity()) continue;
      if (rep_perm.fix_count() > bound) ok = false;
    }
    if (ok) {
      if (rep.tree)
        rep.tree->notes.push_back("product-action top bound verified");
    } else {
      rep.verdict = VerificationReport::Verdict::FAIL;
      rep.skip_reason = "product-action top bound violated";
    }
  }
}

std::vector<VerificationReport> run_entry(const CatalogEntry& entry,
                                          const CorpusOptions& opt) {
  std::vector<VerificationReport> out;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  VerifyOptions vopt;
  vopt.seed = opt.seed ^ fnv1a(entry.name);
  vopt.limits = opt.limits;

  PermGroup g = PermGroup::trivial(1);
  try {
    g = realize(entry);
  } catch (const std::exception& e) {
    out.push_back(error_report(entry.name, "load", e.what()));
    return out;
  }

  bool want_natural = entry.has_tag("natural") ||
                      (!entry.has_tag("sylow2") && !entry.has_tag("sylow2_formula"));
  bool want_sylow = entry.has_tag("sylow2") || entry.has_tag("sylow2_formula");

  if (want_natural) {
    try {
      out.push_back(verify(g, entry.name, "natural", vopt));
      check_product_action_tag(entry, g, out.back(), opt.limits);
    } catch (const std::exception& e) {
      out.push_back(error_report(entry.name, "natural", e.what()));
    }
  }

  if (want_sylow) {
    if (elapsed() > opt.soft_time_budget) {
      out.push_back(
          error_report(entry.name, "sylow2-cosets", "soft time budget exceeded"));
      return out;
    }
    try {
      PermGroup p = sylow2(g, vopt.seed, opt.limits);
      if (p.same_group_as(g)) {
        out.push_back(error_report(entry.name, "sylow2-cosets",
                                   "group is a 2-group; coset space is a point"));
      } else {
        const std::uint64_t index = g.order_u64() / p.order_u64();
        if (!entry.has_tag("sylow2_formula") &&
            index <= opt.max_built_coset_degree &&
            g.order_u64() <= opt.max_built_coset_order) {
          CosetAction act = coset_action(g, p, opt.max_built_coset_degree,
                                         opt.limits);
          out.push_back(
              verify(act.image, entry.name, "sylow2-cosets", vopt));
        } else {
          ConjugacyClasses cc = ConjugacyClasses::compute(g, opt.limits);
          out.push_back(
              verify_cosets_by_formula(g, cc, p, entry.name, vopt));
        }
      }
    } catch (const std::exception& e) {
      out.push_back(error_report(entry.name, "sylow2-cosets", e.what()));
    }
  }
  return out;
}

}  // namespace

CorpusSummary run_corpus(const std::vector<CatalogEntry>& entries,
                         const CorpusFilter& filter, const CorpusOptions& opt,
                         std::ostream* progress) {
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : entries)
    if (matches(e, filter)) selected.push_back(&e);
  std::sort(selected.begin(), selected.end(),
            [](const CatalogEntry* a, const CatalogEntry* b) {
              return a->name < b->name;
            });

  CorpusSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      std::vector<VerificationReport> reports = run_entry(*selected[i], opt);
      std::lock_guard<std::mutex> lock(mu);
      for (auto& r : reports) {
        if (progress)
          *progress << to_string(r.verdict) << "  " << r.name << " [" << r.action
                    << "]"
                    << (r.truncated ? "  (truncated: " + r.truncation_reason + ")"
                                    : "")
                    << "\n";
        summary.reports.push_back(std::move(r));
      }
    }
  };

  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(summary.reports.begin(), summary.reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return std::tie(a.name, a.action) < std::tie(b.name, b.action);
            });
  for (const auto& r : summary.reports) {
    switch (r.verdict) {
      case VerificationReport::Verdict::PASS: ++summary.pass; break;
      case VerificationReport::Verdict::FAIL: ++summary.fail; break;
      default: ++summary.skip; break;
    }
  }
  return summary;
}

}  // namespace fixity
