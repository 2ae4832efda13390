#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fixity/perm_group.hpp"

namespace fixity {

struct ClassData {
  Perm rep = Perm(1);                // lexicographically smallest member
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
};

// Conjugacy classes of a group, found by walking the element enumeration and
// expanding each unseen element's conjugation orbit under the generators.
// Class order is canonical and shared across modules: identity first, then
// ascending element order, then ascending class size, then smallest
// representative. The lazy per-class element cache behind class_of is not
// synchronized: confine each instance to one thread.
class ConjugacyClasses {
 public:
  static ConjugacyClasses compute(const PermGroup& g, const Limits& lim = {});

  const PermGroup& group() const { return *group_; }
  std::size_t count() const { return classes_.size(); }
  const ClassData& at(std::size_t i) const { return classes_.at(i); }
  const std::vector<ClassData>& all() const { return classes_; }

  // Index of the class containing p (p must be a member of the group).
  // Classes with a unique (element order, cycle type) signature are resolved
  // without any element storage; ambiguous signatures expand the candidate
  // classes once and cache their element keys.
  std::size_t class_of(const Perm& p) const;

  // Class of rep(i)^e.
  std::size_t power_class(std::size_t i, std::uint64_t e) const;
  // Class of rep(i)^-1.
  std::size_t inverse_class(std::size_t i) const;

  // Releases cached per-class element sets.
  void drop_element_cache() const;

 private:
  std::shared_ptr<const PermGroup> group_;
  std::vector<ClassData> classes_;
  // (element order, cycle type) -> class indices with that signature
  std::map<std::pair<std::uint64_t, std::vector<std::uint32_t>>,
           std::vector<std::size_t>>
      signature_;
  mutable std::unordered_map<std::size_t,
                             std::unique_ptr<std::unordered_set<std::string>>>
      element_cache_;
  mutable std::vector<std::int32_t> power_cache_init_;

  const std::unordered_set<std::string>& class_elements(std::size_t i) const;
};

// Searches for w with a^w = b; returns nothing when a and b are not
// conjugate in g. Runs a cycle-type rejection first, then walks the
// conjugation orbit of a with witnesses.
std::optional<Perm> conjugating_element(const PermGroup& g, const Perm& a,
                                        const Perm& b, const Limits& lim = {});

// Centralizer of p in g via orbit-stabilizer on the conjugation orbit.
PermGroup centralizer(const PermGroup& g, const Perm& p, const Limits& lim = {});

}  // namespace fixity
