// Acceptance suite: one line per criterion, PASS/FAIL, with the exact
// expected values and time budgets pinned in code. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixity/actions.hpp"
#include "fixity/catalog.hpp"
#include "fixity/character.hpp"
#include "fixity/classes.hpp"
#include "fixity/corpus.hpp"
#include "fixity/fixity.hpp"
#include "fixity/structure.hpp"
#include "fixity/subgroups.hpp"
#include "fixity/verify.hpp"

using namespace fixity;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
};

void run_criterion(const Criterion& c, const std::function<std::string()>& body) {
  auto t0 = Clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (problem.empty() && secs > c.budget_seconds)
    problem = "time budget exceeded (" + std::to_string(secs) + "s of " +
              std::to_string(c.budget_seconds) + "s)";
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << '[' << (c.id < 10 ? " " : "") << c.id << "] "
       << (problem.empty() ? "PASS" : "FAIL") << "  " << c.label << "  ("
       << secs << "s";
  if (!problem.empty()) line << "; " << problem;
  line << ")";
  std::cout << line.str() << std::endl;
  if (!problem.empty()) ++failures;
}

std::vector<CatalogEntry> g_entries;

PermGroup group_named(const std::string& name) {
  for (const auto& e : g_entries)
    if (e.name == name) return realize(e);
  throw Error("catalog entry '" + name + "' missing");
}

const CatalogEntry& entry_named(const std::string& name) {
  for (const auto& e : g_entries)
    if (e.name == name) return e;
  throw Error("catalog entry '" + name + "' missing");
}

// Independent transvection oracle: boolean row reduction over all strictly
// upper triangular matrices, counting fixed-space hyperplanes.
std::uint64_t brute_transvections(unsigned n) {
  const unsigned cells = n * (n - 1) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
    std::vector<std::uint32_t> rows(n, 0);
    unsigned bit = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j, ++bit)
        if (mask & (std::uint64_t(1) << bit)) rows[i] |= (1u << j);
    unsigned rank = 0;
    for (unsigned col = 0; col < n; ++col) {
      unsigned pivot = n;
      for (unsigned r = rank; r < n; ++r)
        if (rows[r] & (1u << col)) {
          pivot = r;
          break;
        }
      if (pivot == n) continue;
      std::swap(rows[rank], rows[pivot]);
      for (unsigned r = 0; r < n; ++r)
        if (r != rank && (rows[r] & (1u << col))) rows[r] ^= rows[rank];
      ++rank;
    }
    if (rank == 1) ++count;
  }
  return count;
}

std::string check_max_fpr(const PermGroup& g, const Ratio& expected) {
  auto profile = fixity_profile(g);
  if (profile.max_fpr != expected)
    return "max fpr " + profile.max_fpr.to_string() + ", expected " +
           expected.to_string();
  return "";
}

}  // namespace

int main() {
  g_entries = load_catalog_file(std::string(FIXITY_DATA_DIR) + "/corpus.cat");
  const std::uint64_t seed = 1;

  // built by criterion 1, reused by criterion 2
  PermGroup m22_2 = PermGroup::trivial(1);
  std::unique_ptr<ConjugacyClasses> m22_classes;

  run_criterion({1, "Aut(M22) degree 22: maximum fixed point ratio is 4/11", 60},
                [&]() -> std::string {
    m22_2 = group_named("m22_2");
    if (!(m22_2.order() == 887040ull)) return "order validation failed";
    m22_classes =
        std::make_unique<ConjugacyClasses>(ConjugacyClasses::compute(m22_2));
    auto profile = fixity_profile(m22_2, *m22_classes);
    if (profile.max_fpr != Ratio(4, 11))
      return "max fpr " + profile.max_fpr.to_string();
    if (profile.degree != 22) return "degree mismatch";
    return "";
  });

  run_criterion({2, "Aut(M22) on Sylow 2-subgroup cosets: ratios at most 3/55, "
                    "Sylow plus 25 seeded random 2-subgroups", 600},
                [&]() -> std::string {
    if (!m22_classes) return "criterion 1 did not provide class data";
    PermGroup sylow = sylow2(m22_2, seed);
    if (!(sylow.order() == 256ull)) return "sylow order mismatch";
    const Ratio bound(3, 55);
    auto max_ratio = [&](const PermGroup& h) {
      auto hist = class_histogram(*m22_classes, h);
      Ratio best(0, 1);
      for (std::size_t i = 1; i < m22_classes->count(); ++i) {
        Ratio r(static_cast<std::int64_t>(hist[i]),
                static_cast<std::int64_t>(m22_classes->at(i).size));
        if (best < r) best = r;
      }
      return best;
    };
    Ratio syl = max_ratio(sylow);
    if (bound < syl) return "sylow cosets reach " + syl.to_string();
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 25; ++trial) {
      Perm a = sylow.random_element(rng);
      Perm b = sylow.random_element(rng);
      Perm w = m22_2.random_element(rng);
      PermGroup q = PermGroup::generated_by(
          {a.conjugated_by(w), b.conjugated_by(w)});
      if (q.is_trivial()) {
        --trial;
        continue;
      }
      Ratio r = max_ratio(q);
      if (bound < r)
        return "random 2-subgroup " + std::to_string(trial) + " reaches " +
               r.to_string();
    }
    return "";
  });

  run_criterion({3, "PGammaL(2,8) on the 9 projective points: maximum ratio 1/3",
                 5},
                [&]() -> std::string {
    return check_max_fpr(group_named("pgammal2_8"), Ratio(1, 3));
  });

  run_criterion({4, "PSU(3,3) primitive on 36 points (order 6048): maximum "
                    "ratio 1/3", 60},
                [&]() -> std::string {
    PermGroup g = group_named("psu3_3_d36");
    if (!(g.order() == 6048ull)) return "order validation failed";
    if (g.degree() != 36) return "degree mismatch";
    if (!is_primitive(g)) return "action is not primitive";
    return check_max_fpr(g, Ratio(1, 3));
  });

  run_criterion({5, "Alt(n), Sym(n) for n in 5..8 on Sylow 2-subgroup cosets: "
                    "all ratios at most 1/3 and the bound verdict is PASS",
                 300},
                [&]() -> std::string {
    for (unsigned n = 5; n <= 8; ++n) {
      for (std::string base : {"alt", "sym"}) {
        PermGroup g = group_named(base + std::to_string(n));
        PermGroup p = sylow2(g, seed);
        CosetAction act = coset_action(g, p);
        VerificationReport rep =
            verify(act.image, base + std::to_string(n), "sylow2-cosets");
        if (rep.verdict != VerificationReport::Verdict::PASS)
          return base + std::to_string(n) + ": verdict " +
                 std::string(to_string(rep.verdict)) + " " + rep.skip_reason;
        if (Ratio(1, 3) < rep.max_fpr)
          return base + std::to_string(n) + ": max fpr " +
                 rep.max_fpr.to_string();
        if (3 * rep.mindeg < 2 * rep.degree)
          return base + std::to_string(n) + ": bound arithmetic violated";
      }
    }
    return "";
  });

  run_criterion({6, "transvection counts match the unitriangular oracle "
                    "(n <= 6) and the recursion (n <= 12)", 10},
                [&]() -> std::string {
    if (transvection_count(2) != 1) return "base value";
    for (unsigned n = 2; n <= 6; ++n)
      if (transvection_count(n) != brute_transvections(n))
        return "oracle mismatch at n=" + std::to_string(n);
    std::uint64_t rec = 1;
    for (unsigned n = 3; n <= 12; ++n) {
      rec = 2 * rec + (1ull << (n - 1)) - 1;
      if (transvection_count(n) != rec)
        return "recursion mismatch at n=" + std::to_string(n);
    }
    return "";
  });

  run_criterion({7, "class-intersection ratios equal direct coset-action "
                    "ratios on 200+ seeded (G, H, class) triples", 300},
                [&]() -> std::string {
    std::mt19937_64 rng(seed);
    std::size_t triples = 0;
    for (const std::string name :
         {"alt5", "sym5", "alt6", "sym6", "psl2_7", "psl2_8", "psl2_9",
          "psl2_11", "m11", "pgl2_7"}) {
      PermGroup g = group_named(name);
      ConjugacyClasses cc = ConjugacyClasses::compute(g);
      PermGroup sylow = sylow2(g, seed);
      std::vector<PermGroup> subgroups{sylow};
      for (int extra = 0; extra < 3; ++extra) {
        Perm a = sylow.random_element(rng);
        Perm b = sylow.random_element(rng);
        PermGroup q = PermGroup::generated_by(
            {a.conjugated_by(g.random_element(rng)), b});
        if (!g.contains_group(q)) continue;
        subgroups.push_back(std::move(q));
      }
      for (const PermGroup& h : subgroups) {
        if (!h.order().fits_u64() || h.is_trivial()) continue;
        std::uint64_t index = g.order_u64() / h.order_u64();
        if (index > 2000) continue;
        CosetAction act = coset_action(g, h, 2000);
        for (std::size_t i = 0; i < cc.count(); ++i) {
          Ratio formula = fpr_coset_formula(cc, h, cc.at(i).rep);
          Ratio direct = fpr_direct(act.image, act.act(cc.at(i).rep));
          if (formula != direct)
            return name + " class " + std::to_string(i) + ": " +
                   formula.to_string() + " vs " + direct.to_string();
          ++triples;
        }
      }
    }
    if (triples < 200)
      return "only " + std::to_string(triples) + " triples exercised";
    return "";
  });

  run_criterion({8, "block-ratio monotonicity holds on every invariant "
                    "partition of every corpus action of degree <= 500", 300},
                [&]() -> std::string {
    std::size_t actions = 0, systems = 0;
    auto check_action = [&](const PermGroup& act,
                            const std::string& label) -> std::string {
      if (act.degree() > 500 || !is_transitive(act)) return "";
      ++actions;
      ConjugacyClasses cc = ConjugacyClasses::compute(act);
      for (const BlockSystem& sys : all_block_systems(act)) {
        ++systems;
        for (const auto& row : check_block_monotonicity(act, cc, sys))
          if (!row.ok)
            return label + ": violation at class " +
                   std::to_string(row.class_index);
      }
      return "";
    };
    for (const auto& e : g_entries) {
      PermGroup g = realize(e);
      std::string bad = check_action(g, e.name);
      if (!bad.empty()) return bad;
      if (e.has_tag("sylow2")) {
        PermGroup p = sylow2(g, seed);
        if (p.same_group_as(g)) continue;
        std::uint64_t index = g.order_u64() / p.order_u64();
        if (index > 500) continue;
        bad = check_action(coset_action(g, p).image, e.name + "/sylow2");
        if (!bad.empty()) return bad;
      }
    }
    if (actions < 20 || systems < 10) return "coverage too small";
    return "";
  });

  run_criterion({9, "full corpus: every hypothesis-satisfying action passes "
                    "the bound, zero FAIL verdicts", 900},
                [&]() -> std::string {
    CorpusOptions opt;
    opt.seed = seed;
    CorpusSummary summary = run_corpus(g_entries, CorpusFilter{}, opt, nullptr);
    if (summary.fail != 0) {
      for (const auto& r : summary.reports)
        if (r.verdict == VerificationReport::Verdict::FAIL)
          return r.name + " [" + r.action + "] FAILED";
    }
    // the named instances must genuinely PASS, not slip through as SKIP
    std::set<std::string> must_pass;
    for (const std::string q : {"5", "7", "8", "9", "11", "13"})
      must_pass.insert("psl2_" + q + "|sylow2-cosets");
    must_pass.insert("m11|sylow2-cosets");
    must_pass.insert("psl2_27|sylow2-cosets");
    must_pass.insert("m22_2|sylow2-cosets (class-intersection route)");
    for (const std::string h : {"hol_f5_c4", "hol_f7_c2", "hol_f9_sd16",
                                "hol_f9_c4"})
      must_pass.insert(h + "|natural");
    must_pass.insert("wr_s3_2_pa|natural");
    must_pass.insert("wr_a5c15_2_pa|natural");
    std::size_t passed = 0;
    for (const auto& r : summary.reports) {
      std::string key = r.name + "|" + r.action;
      if (must_pass.count(key)) {
        if (r.verdict != VerificationReport::Verdict::PASS)
          return key + " expected PASS, got " + to_string(r.verdict) +
                 (r.skip_reason.empty() ? "" : " (" + r.skip_reason + ")");
        ++passed;
      }
    }
    if (passed != must_pass.size())
      return "only " + std::to_string(passed) + " of " +
             std::to_string(must_pass.size()) + " named instances seen";
    return "";
  });

  run_criterion({10, "character engine: involution counts match brute force "
                     "(order <= 10^4) and permutation characters decompose "
                     "integrally with orbit-count trivial multiplicity", 600},
                [&]() -> std::string {
    std::size_t groups_checked = 0;
    for (const auto& e : g_entries) {
      PermGroup g = realize(e);
      if (!g.order().fits_u64() || g.order_u64() > 100'000) continue;
      ConjugacyClasses cc = ConjugacyClasses::compute(g);
      CharacterTable t = character_table(g, cc);
      auto pc = permutation_character(t, cc);
      if (pc.multiplicities[0] != orbits(g).size())
        return e.name + ": trivial multiplicity is not the orbit count";
      if (g.order_u64() <= 10'000) {
        auto ind = fs_indicators(t, cc);
        std::uint64_t brute = 0;
        g.for_each_element([&](const Perm& x) {
          if (x.then(x).is_identity()) ++brute;
          return true;
        });
        if (involution_count(t, ind) != brute)
          return e.name + ": involution count mismatch";
        ++groups_checked;
      }
    }
    if (groups_checked < 20) return "coverage too small";
    return "";
  });

  run_criterion({11, "affine ratio identity on all holomorph instances; "
                     "product-action top bound on instances of degree <= 2000",
                 120},
                [&]() -> std::string {
    // ratios equal reciprocals of translation-centralizer indexes
    for (const auto& e : g_entries) {
      if (!e.has_tag("ha")) continue;
      PermGroup g = realize(e);
      PermGroup v = socle(g);
      if (!is_abelian(v) || !is_transitive(v))
        return e.name + ": socle is not regular abelian";
      std::vector<Perm> translations = v.elements(10'000);
      ConjugacyClasses cc = ConjugacyClasses::compute(g);
      for (std::size_t i = 1; i < cc.count(); ++i) {
        const Perm& rep = cc.at(i).rep;
        if (rep.fix_count() == 0) continue;
        std::uint64_t commuting = 0;
        for (const Perm& t : translations)
          if (t.then(rep) == rep.then(t)) ++commuting;
        if (fpr_direct(g, rep) !=
            Ratio(std::int64_t(commuting), std::int64_t(translations.size())))
          return e.name + ": affine identity fails at class " +
                 std::to_string(i);
      }
    }
    // coordinate-shuffling elements fix at most degree/|delta| tuples
    for (const auto& e : g_entries) {
      std::string pa_tag;
      for (const auto& t : e.tags)
        if (t.rfind("pa:", 0) == 0) pa_tag = t;
      if (pa_tag.empty()) continue;
      PermGroup g = realize(e);
      if (g.degree() > 2000) continue;
      auto mid = pa_tag.find(':', 3);
      ProductAction pa;
      pa.group = g;
      pa.base_degree = std::stoul(pa_tag.substr(3, mid - 3));
      pa.copies = unsigned(std::stoul(pa_tag.substr(mid + 1)));
      const std::uint64_t bound = g.degree() / pa.base_degree;
      bool checked_any = false;
      std::string bad;
      g.for_each_element([&](const Perm& w) {
        if (w.is_identity()) return true;
        if (pa.top_component(w).is_identity()) return true;
        checked_any = true;
        if (w.fix_count() > bound) {
          bad = e.name + ": top-moving element fixes " +
                std::to_string(w.fix_count());
          return false;
        }
        return true;
      });
      if (!bad.empty()) return bad;
      if (!checked_any) return e.name + ": no top-moving elements seen";
    }
    return "";
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << std::endl;
  return failures;
}
