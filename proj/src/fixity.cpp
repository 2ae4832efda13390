#include "fixity/fixity.hpp"

#include <algorithm>

#include "fixity/error.hpp"
#include "fixity/subgroups.hpp"

namespace fixity {

Ratio fpr_direct(const PermGroup& action, const Perm& g) {
  if (!action.contains(g))
    throw InputError("fpr_direct: element not in the acting group");
  return Ratio(std::int64_t(g.fix_count()), std::int64_t(action.degree()));
}

FixityProfile fixity_profile(const PermGroup& action,
                             const ConjugacyClasses& classes) {
  FixityProfile out;
  out.degree = action.degree();
  out.rows.reserve(classes.count());
  for (std::size_t i = 0; i < classes.count(); ++i) {
    FixityProfile::Row row;
    row.cls = classes.at(i);
    row.fix_count = row.cls.rep.fix_count();
    row.fpr = Ratio(std::int64_t(row.fix_count), std::int64_t(out.degree));
    out.rows.push_back(std::move(row));
  }

  // first row attaining the maximum wins ties under the canonical order
  out.fixity = 0;
  out.argmax_class = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (out.rows[i].fix_count > out.fixity) {
      out.fixity = out.rows[i].fix_count;
      out.argmax_class = i;
    }

  out.mindeg = out.degree - out.fixity;
  out.max_fpr = Ratio(std::int64_t(out.fixity), std::int64_t(out.degree));

  // The minimum support is always attained at a prime-order class: powers
  // only gain fixed points.
  if (out.rows.size() > 1) {
    auto is_prime = [](std::uint64_t n) {
      if (n < 2) return false;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
      return true;
    };
    std::uint64_t best_prime_fix = 0;
    for (std::size_t i = 1; i < out.rows.size(); ++i)
      if (is_prime(out.rows[i].cls.element_order))
        best_prime_fix = std::max(best_prime_fix, out.rows[i].fix_count);
    if (best_prime_fix != out.fixity)
      throw InternalError("fixity is not attained at a prime-order class");
  }
  return out;
}

FixityProfile fixity_profile(const PermGroup& action, const Limits& lim) {
  return fixity_profile(action, ConjugacyClasses::compute(action, lim));
}

std::vector<std::uint64_t> class_histogram(const ConjugacyClasses& g_classes,
                                           const PermGroup& h,
                                           const Limits& lim) {
  if (!h.order().fits_u64() || h.order_u64() > lim.max_enumeration)
    throw ResourceError("class_histogram: subgroup too large to enumerate");
  std::vector<std::uint64_t> hist(g_classes.count(), 0);
  h.for_each_element([&](const Perm& x) {
    ++hist[g_classes.class_of(x)];
    return true;
  });
  return hist;
}

Ratio fpr_coset_formula(const ConjugacyClasses& g_classes, const PermGroup& h,
                        const Perm& x, const Limits& lim) {
  auto hist = class_histogram(g_classes, h, lim);
  std::size_t cls = g_classes.class_of(x);
  return Ratio(std::int64_t(hist[cls]),
               std::int64_t(g_classes.at(cls).size));
}

std::vector<MonotonicityRow> check_block_monotonicity(
    const PermGroup& action, const ConjugacyClasses& classes,
    const BlockSystem& sys) {
  if (!is_invariant(action, sys))
    throw InputError("check_block_monotonicity: partition not invariant");
  std::vector<MonotonicityRow> out;
  for (std::size_t i = 0; i < classes.count(); ++i) {
    const Perm& rep = classes.at(i).rep;
    MonotonicityRow row;
    row.class_index = i;
    row.fpr_points =
        Ratio(std::int64_t(rep.fix_count()), std::int64_t(action.degree()));
    row.fpr_blocks = Ratio(std::int64_t(block_image(rep, sys).fix_count()),
                           std::int64_t(sys.block_count()));
    row.ok = row.fpr_points <= row.fpr_blocks;
    out.push_back(row);
  }
  return out;
}

FixDecomposition fix_decomposition(const BlockSystem& sys, const Perm& g) {
  if (sys.degree() != g.degree())
    throw InputError("fix_decomposition: degree mismatch");
  FixDecomposition out;
  for (std::uint32_t b = 0; b < sys.block_count(); ++b) {
    const auto& block = sys.blocks[b];
    bool invariant = true;
    std::uint64_t fixed_here = 0;
    for (Point x : block) {
      if (sys.block_of[g[x]] != b) {
        invariant = false;
        break;
      }
      if (g[x] == x) ++fixed_here;
    }
    if (!invariant) continue;
    if (fixed_here == block.size())
      out.fixed_pointwise.push_back(b);
    else
      out.moved_within.push_back(b);
    out.total += fixed_here;
  }
  if (out.total != g.fix_count())
    throw InternalError("fix_decomposition: blockwise fixed points disagree");
  return out;
}

std::uint64_t transvection_count(unsigned n) {
  if (n < 2) throw InputError("transvection_count: n must be at least 2");
  if (n > 60) throw ResourceError("transvection_count: 64-bit overflow");
  std::uint64_t closed = std::uint64_t(n - 2) * (std::uint64_t(1) << (n - 1)) + 1;
  std::uint64_t rec = 1;  // T(2)
  for (unsigned k = 3; k <= n; ++k)
    rec = 2 * rec + (std::uint64_t(1) << (k - 1)) - 1;
  if (rec != closed)
    throw InternalError("transvection_count: recursion disagrees");
  return closed;
}

TheoremVerdict theorem_bound_from_profile(const FixityProfile& profile,
                                          bool transitive, bool stab_2group,
                                          bool o2_trivial) {
  TheoremVerdict v;
  v.degree = profile.degree;
  v.mindeg = profile.mindeg;
  std::vector<std::string> violated;
  if (!transitive) violated.push_back("action is not transitive");
  if (transitive && !stab_2group)
    violated.push_back("point stabilizer is not a 2-group");
  if (transitive && !o2_trivial)
    violated.push_back("largest normal 2-subgroup is non-trivial");
  if (!violated.empty()) {
    v.kind = TheoremVerdict::Kind::SKIP;
    for (std::size_t i = 0; i < violated.size(); ++i)
      v.skip_reason += (i ? "; " : "") + violated[i];
    return v;
  }
  if (3 * v.mindeg >= 2 * v.degree) {
    v.kind = TheoremVerdict::Kind::PASS;
  } else {
    v.kind = TheoremVerdict::Kind::FAIL;
    v.witness_class = profile.argmax_class;
  }
  return v;
}

TheoremVerdict theorem_bound_check(const PermGroup& action, std::uint64_t seed,
                                   const Limits& lim) {
  bool transitive = is_transitive(action);
  bool stab_2group = false;
  bool o2_trivial = false;
  if (transitive && action.order().fits_u64()) {
    std::uint64_t stab_order = action.order_u64() / action.degree();
    stab_2group = (stab_order & (stab_order - 1)) == 0;
    // odd degree with a 2-group stabilizer makes every point stabilizer a
    // Sylow 2-subgroup, pushing the 2-core into the trivial kernel
    if (stab_2group && action.degree() % 2 == 1)
      o2_trivial = true;
    else
      o2_trivial = o2(action, seed, lim).is_trivial();
  }

  if (!transitive || !stab_2group || !o2_trivial) {
    FixityProfile empty;
    empty.degree = action.degree();
    return theorem_bound_from_profile(empty, transitive, stab_2group,
                                      o2_trivial);
  }
  return theorem_bound_from_profile(fixity_profile(action, lim), true, true,
                                    true);
}

}  // namespace fixity
