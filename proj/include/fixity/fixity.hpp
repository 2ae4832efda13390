#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixity/classes.hpp"
#include "fixity/rational.hpp"
#include "fixity/structure.hpp"

namespace fixity {

// |Fix(g)| / degree, exact.
Ratio fpr_direct(const PermGroup& action, const Perm& g);

// Per-class fixed-point data of an action. Fixity is the maximum fixed-point
// count over non-identity classes (zero for the trivial group), and
// mindeg = degree - fixity is attained at a class of prime element order.
struct FixityProfile {
  struct Row {
    ClassData cls;
    std::uint64_t fix_count = 0;
    Ratio fpr;
  };
  std::vector<Row> rows;  // canonical class order, identity first
  std::uint64_t degree = 0;
  std::uint64_t fixity = 0;
  std::uint64_t mindeg = 0;
  Ratio max_fpr;           // fixity / degree
  std::size_t argmax_class = 0;  // first row attaining the fixity
};

FixityProfile fixity_profile(const PermGroup& action,
                             const ConjugacyClasses& classes);
FixityProfile fixity_profile(const PermGroup& action, const Limits& lim = {});

// Element count of h per conjugacy class of the ambient group.
std::vector<std::uint64_t> class_histogram(const ConjugacyClasses& g_classes,
                                           const PermGroup& h,
                                           const Limits& lim = {});

// |x^G ∩ H| / |x^G|: the fixed-point ratio of x in the action of G on the
// right cosets of H, computed by classifying the elements of H instead of
// building the coset action.
Ratio fpr_coset_formula(const ConjugacyClasses& g_classes, const PermGroup& h,
                        const Perm& x, const Limits& lim = {});

// Per class: fpr on points never exceeds fpr on the blocks of an invariant
// partition.
struct MonotonicityRow {
  std::size_t class_index = 0;
  Ratio fpr_points;
  Ratio fpr_blocks;
  bool ok = false;
};
std::vector<MonotonicityRow> check_block_monotonicity(
    const PermGroup& action, const ConjugacyClasses& classes,
    const BlockSystem& sys);

// Splits the blocks g fixes setwise into those it moves within (some point
// moves) and those it fixes pointwise; the per-block fixed points add up to
// the full fixed-point count.
struct FixDecomposition {
  std::vector<std::uint32_t> moved_within;      // invariant, acted on
  std::vector<std::uint32_t> fixed_pointwise;   // frozen blocks
  std::uint64_t total = 0;                      // == |Fix(g)|
};
FixDecomposition fix_decomposition(const BlockSystem& sys, const Perm& g);

// Number of transvections among the n-by-n upper unitriangular matrices
// over the 2-element field: (n-2)*2^(n-1) + 1, cross-checked against the
// recursion T(n) = 2 T(n-1) + 2^(n-1) - 1 with T(2) = 1.
std::uint64_t transvection_count(unsigned n);

// Verdict of the minimal-degree bound 3*mindeg >= 2*degree for a transitive
// action whose point stabilizer is a 2-group and whose largest normal
// 2-subgroup is trivial. Violated hypotheses yield SKIP, never FAIL.
struct TheoremVerdict {
  enum class Kind { PASS, FAIL, SKIP } kind = Kind::SKIP;
  std::string skip_reason;
  std::optional<std::size_t> witness_class;  // on FAIL: the offending class
  std::uint64_t mindeg = 0;
  std::uint64_t degree = 0;
};

TheoremVerdict theorem_bound_check(const PermGroup& action, std::uint64_t seed,
                                   const Limits& lim = {});

// The bound check on an already computed profile plus hypothesis bits.
TheoremVerdict theorem_bound_from_profile(const FixityProfile& profile,
                                          bool transitive, bool stab_2group,
                                          bool o2_trivial);

}  // namespace fixity
