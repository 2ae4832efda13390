#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fixity/count.hpp"
#include "fixity/perm.hpp"

namespace fixity {

// Enumeration bounds for the operations that materialize elements or walk
// conjugation orbits. Construction and membership have no bound; anything
// that would enumerate beyond these limits raises ResourceError instead.
struct Limits {
  std::uint64_t max_operation_order = 10'000'000;  // classes, normalizers, ...
  std::uint64_t max_enumeration = 2'000'000;       // elements materialized
  std::size_t max_degree = 10'000;
};

// A permutation group given by generators, backed by a base and strong
// generating set. Immutable once built; order and membership queries are
// exact. Base points are chosen deterministically (first moved point per
// level) so chains and everything derived from them are reproducible.
class PermGroup {
 public:
  // Trivial group on one point.
  PermGroup();

  static PermGroup trivial(std::size_t degree);

  static PermGroup generated_by(std::vector<Perm> gens);

  // Same, but stabilizer-chain base points start with `base_hint` (points
  // fixed by the whole group are skipped). Used for point stabilizers and
  // action kernels.
  static PermGroup generated_by(std::vector<Perm> gens,
                                const std::vector<Point>& base_hint);

  std::size_t degree() const { return degree_; }

  // The generators the group was built from (identity dropped). Never empty
  // representation-wise: a trivial group simply has no generators.
  const std::vector<Perm>& generators() const { return gens_; }

  // Full strong generating set (includes the originals).
  std::vector<Perm> strong_generators() const;

  const Count128& order() const { return order_; }
  std::uint64_t order_u64() const { return order_.as_u64(); }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& p) const;
  bool contains_group(const PermGroup& h) const;
  bool same_group_as(const PermGroup& other) const;

  // Uniformly random element (independent uniform transversal picks).
  Perm random_element(std::mt19937_64& rng) const;

  // Deterministic enumeration of all elements; fn returning false stops the
  // walk. Caller is responsible for checking order() against its budget.
  void for_each_element(const std::function<bool(const Perm&)>& fn) const;

  std::vector<Perm> elements(std::uint64_t limit) const;

  struct Level {
    Point base = 0;
    std::vector<Perm> gens;              // strong gens first moving this base
    std::vector<std::int32_t> where;     // point -> orbit index, -1 if absent
    std::vector<Point> orbit;            // orbit[0] == base
    std::vector<Perm> transversal;       // transversal[i]: base -> orbit[i]
  };

  const std::vector<Level>& levels() const { return levels_; }

  // Sifts p through the chain; returns the deepest level reached and the
  // residue. p is a member iff the residue is the identity.
  std::pair<std::size_t, Perm> sift(const Perm& p) const;
  std::pair<std::size_t, Perm> sift_from(std::size_t start, const Perm& p) const;

  PermGroup point_stabilizer(Point w) const;

  // Elements fixing every listed point.
  PermGroup pointwise_stabilizer(const std::vector<Point>& pts) const;

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  Count128 order_;

  void build(const std::vector<Point>& base_hint);
  void recompute_orbit(std::size_t i);
  std::vector<Perm> level_generating_set(std::size_t i) const;
};

}  // namespace fixity
