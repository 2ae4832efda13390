#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fixity/classes.hpp"

namespace fixity {

// Complex irreducible character table. Values are carried twice: as exact
// residues modulo a working prime p = 1 (mod exp(G)) with p > 2*sqrt(|G|),
// and as complex doubles lifted through root-of-unity multiplicities. The
// integer data (degrees, indicator sums, multiplicity congruences) is exact;
// the numeric side is validated against the orthogonality relations to an
// absolute tolerance of 1e-6.
struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> element_orders;
  std::vector<std::size_t> inverse_class;           // class of rep^-1
  std::vector<unsigned> degrees;                    // chi(1), trivial first
  std::vector<std::vector<std::uint64_t>> values_modp;  // [irr][class]
  std::vector<std::vector<std::complex<double>>> values;

  std::size_t class_count() const { return class_sizes.size(); }
  std::size_t irr_count() const { return degrees.size(); }
};

CharacterTable character_table(const PermGroup& g,
                               const ConjugacyClasses& cls,
                               const Limits& lim = {});

// Frobenius-Schur indicators in {-1, 0, +1}, computed exactly mod p from
// the squaring map on classes.
std::vector<int> fs_indicators(const CharacterTable& t,
                               const ConjugacyClasses& cls);

// Number of solutions of x^2 = 1: sum of degrees of orthogonal-type
// characters minus sum over symplectic-type ones.
std::uint64_t involution_count(const CharacterTable& t,
                               const std::vector<int>& indicators);

// Decomposition of the permutation character pi(g) = |Fix(g)| of the very
// action the table was computed from.
struct PermCharacter {
  std::vector<std::uint64_t> fix_counts;      // per class
  std::vector<std::uint64_t> multiplicities;  // <pi, chi_i>, all >= 0
};
PermCharacter permutation_character(const CharacterTable& t,
                                    const ConjugacyClasses& cls);

// max over non-linear irreducibles of (1 + |chi(g)|) / (1 + chi(1));
// 1.0 by convention when every irreducible is linear.
double ls_fpr_bound(const CharacterTable& t, std::size_t class_index);

// Diff-friendly text dump (classes header plus one row per irreducible).
std::string export_table(const CharacterTable& t);

}  // namespace fixity
