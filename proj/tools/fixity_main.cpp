// Command-line front end: verify one action, run the bundled corpus, walk
// the block-system descent, or print a minimal-degree profile.
//
// Exit codes: 0 clean, 1 a FAIL verdict was produced, 2 usage or parse
// error, 3 resource bound hit.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fixity/actions.hpp"
#include "fixity/catalog.hpp"
#include "fixity/corpus.hpp"
#include "fixity/cycles.hpp"
#include "fixity/error.hpp"
#include "fixity/structure.hpp"
#include "fixity/subgroups.hpp"
#include "fixity/verify.hpp"

namespace {

using namespace fixity;

struct GroupSpec {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
};

GroupSpec resolve_group(const std::string& spec, const std::string& catalog) {
  if (std::filesystem::exists(catalog)) {
    for (const CatalogEntry& e : load_catalog_file(catalog))
      if (e.name == spec) return {e.name, realize(e)};
  }
  if (std::filesystem::exists(spec)) {
    auto entries = load_catalog_file(spec);
    if (entries.size() != 1)
      throw InputError("group file '" + spec + "' must hold exactly one record");
    return {entries[0].name, realize(entries[0])};
  }
  throw InputError("group '" + spec + "' not found in catalog '" + catalog +
                   "' and is not a file");
}

// "natural", "sylow2", or "cosets:<gen>;<gen>;..."
PermGroup derive_action(const PermGroup& g, const std::string& action,
                        std::uint64_t seed, std::string& desc) {
  if (action == "natural") {
    desc = "natural";
    return g;
  }
  if (action == "sylow2") {
    desc = "sylow2-cosets";
    PermGroup p = sylow2(g, seed);
    if (p.same_group_as(g))
      throw InputError("the group is a 2-group; its Sylow coset space is a point");
    return coset_action(g, p).image;
  }
  if (action.rfind("cosets:", 0) == 0) {
    desc = "cosets";
    std::vector<Perm> gens;
    std::string rest = action.substr(7);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t sep = rest.find(';', pos);
      if (sep == std::string::npos) sep = rest.size();
      gens.push_back(parse_cycles(rest.substr(pos, sep - pos), g.degree()));
      pos = sep + 1;
    }
    if (gens.empty()) throw InputError("cosets: needs at least one generator");
    PermGroup h = PermGroup::generated_by(gens);
    if (!g.contains_group(h))
      throw InputError("cosets: the listed subgroup is not inside the group");
    return coset_action(g, h).image;
  }
  throw InputError("unknown action '" + action +
                   "' (expected natural, sylow2 or cosets:<gens>)");
}

void write_json_report(const std::vector<VerificationReport>& reports,
                       std::uint64_t seed, bool timings,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write report file '" + path + "'");
  out << report_set_json(reports, seed, timings).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-degree verification toolkit for permutation groups"};
  app.require_subcommand(1);

  std::string catalog = "data/corpus.cat";
  std::uint64_t seed = 1;
  bool timings = false;
  app.add_option("--catalog", catalog, "catalog file with bundled groups");
  app.add_option("--seed", seed, "seed for all randomized subroutines");
  app.add_flag("--timings", timings, "include wall-clock times in JSON output");

  auto* cmd_verify = app.add_subcommand(
      "verify", "verify the minimal-degree bound for one action");
  std::string v_group, v_action = "natural", v_report;
  cmd_verify->add_option("--group", v_group, "catalog name or record file")
      ->required();
  cmd_verify->add_option("--action", v_action,
                         "natural | sylow2 | cosets:<gen>;<gen>...");
  cmd_verify->add_option("--report", v_report, "write a JSON report here");

  auto* cmd_corpus =
      app.add_subcommand("corpus", "verify every matching catalog entry");
  std::vector<std::string> c_filters;
  unsigned c_jobs = 1;
  std::string c_csv, c_report;
  cmd_corpus->add_option("--filter", c_filters,
                         "name=<substr> | tag=<tag> | maxdegree=<n> | maxorder=<n>");
  cmd_corpus->add_option("--jobs", c_jobs, "parallel workers");
  cmd_corpus->add_option("--csv", c_csv, "write the flat class table here");
  cmd_corpus->add_option("--report", c_report, "write a JSON report here");

  auto* cmd_descent = app.add_subcommand(
      "descent", "walk the block-system lattice with threshold pruning");
  std::string d_group, d_threshold = "1/3", d_action = "natural";
  cmd_descent->add_option("--group", d_group, "catalog name or record file")
      ->required();
  cmd_descent->add_option("--threshold", d_threshold, "pruning ratio p/q");
  cmd_descent->add_option("--action", d_action,
                          "natural | sylow2 | cosets:<gen>;<gen>...");

  auto* cmd_mindeg = app.add_subcommand(
      "mindeg", "minimal degree and class profile of one action");
  std::string m_group, m_action = "natural";
  cmd_mindeg->add_option("--group", m_group, "catalog name or record file")
      ->required();
  cmd_mindeg->add_option("--action", m_action,
                         "natural | sylow2 | cosets:<gen>;<gen>...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_verify) {
      GroupSpec gs = resolve_group(v_group, catalog);
      VerifyOptions opt;
      opt.seed = seed;
      VerificationReport rep;
      if (v_action == "sylow2" && gs.group.order().fits_u64() &&
          gs.group.order_u64() > 100'000) {
        // large groups: class-intersection route, no explicit coset action
        PermGroup p = sylow2(gs.group, seed);
        ConjugacyClasses cc = ConjugacyClasses::compute(gs.group, opt.limits);
        rep = verify_cosets_by_formula(gs.group, cc, p, gs.name, opt);
      } else {
        std::string desc;
        PermGroup action = derive_action(gs.group, v_action, seed, desc);
        rep = verify(action, gs.name, desc, opt);
      }
      std::cout << render_text(rep);
      if (!v_report.empty()) {
        std::vector<VerificationReport> reports;
        reports.push_back(std::move(rep));
        write_json_report(reports, seed, timings, v_report);
        return reports[0].verdict == VerificationReport::Verdict::FAIL ? 1 : 0;
      }
      return rep.verdict == VerificationReport::Verdict::FAIL ? 1 : 0;
    }

    if (*cmd_corpus) {
      CorpusFilter filter;
      for (const std::string& f : c_filters) {
        auto eq = f.find('=');
        if (eq == std::string::npos)
          throw InputError("bad filter '" + f + "' (expected key=value)");
        std::string key = f.substr(0, eq), value = f.substr(eq + 1);
        if (key == "name") filter.name_substring = value;
        else if (key == "tag") filter.tag = value;
        else if (key == "maxdegree") filter.max_degree = std::stoul(value);
        else if (key == "maxorder") filter.max_order = std::stoull(value);
        else throw InputError("unknown filter key '" + key + "'");
      }
      CorpusOptions opt;
      opt.seed = seed;
      opt.jobs = c_jobs;
      auto entries = load_catalog_file(catalog);
      CorpusSummary summary = run_corpus(entries, filter, opt, &std::cout);
      std::cout << "PASS " << summary.pass << "  FAIL " << summary.fail
                << "  SKIP " << summary.skip << "\n";
      if (!c_report.empty())
        write_json_report(summary.reports, seed, timings, c_report);
      if (!c_csv.empty()) {
        std::ofstream out(c_csv);
        if (!out) throw InputError("cannot write csv file '" + c_csv + "'");
        out << report_set_csv(summary.reports);
      }
      return summary.fail > 0 ? 1 : 0;
    }

    if (*cmd_descent) {
      GroupSpec gs = resolve_group(d_group, catalog);
      std::string desc;
      PermGroup action = derive_action(gs.group, d_action, seed, desc);
      VerifyOptions opt;
      opt.seed = seed;
      DescentResult res = descent(action, 0, Ratio::parse(d_threshold), opt);
      for (const auto& lv : res.levels)
        std::cout << "level " << lv.level << "  blocks " << lv.block_count
                  << "  max fpr " << lv.max_fpr.to_string() << "  "
                  << (lv.surviving ? "SURVIVES" : "pruned")
                  << (lv.point_action ? "  [point action]" : "") << "\n";
      std::cout << "surviving point actions: " << res.surviving_point_actions
                << "\n";
      return 0;
    }

    if (*cmd_mindeg) {
      GroupSpec gs = resolve_group(m_group, catalog);
      std::string desc;
      PermGroup action = derive_action(gs.group, m_action, seed, desc);
      FixityProfile profile = fixity_profile(action);
      std::cout << gs.name << " [" << desc << "] degree " << profile.degree
                << "\n";
      std::cout << "mindeg " << profile.mindeg << "  fixity " << profile.fixity
                << "  max fpr " << profile.max_fpr.to_string() << "\n";
      for (const auto& row : profile.rows)
        std::cout << "  order " << row.cls.element_order << "  size "
                  << row.cls.size << "  fix " << row.fix_count << "  fpr "
                  << row.fpr.to_string() << "\n";
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
