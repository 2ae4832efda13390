#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixity/perm_group.hpp"

namespace fixity {

// Right-coset action of g on the cosets of h, built from canonical coset
// representatives derived from h's stabilizer chain. Point 0 is the coset
// of h itself.
struct CosetAction {
  PermGroup image;              // permutation group on the cosets
  PermGroup kernel;             // core of h in g
  std::vector<Perm> coset_reps; // canonical representative per point
  PermGroup stabilizer;         // the defining subgroup h

  // Permutation induced on cosets by an arbitrary element of g.
  Perm act(const Perm& g) const;

  Perm canonical_rep(const Perm& g) const;

 private:
  friend CosetAction coset_action(const PermGroup&, const PermGroup&,
                                  std::size_t, const Limits&);
  std::unordered_map<std::string, Point> index_;
};

CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                         std::size_t max_degree = 10'000,
                         const Limits& lim = {});

// t wr Sym(k) permuting k disjoint copies of t's domain.
PermGroup wreath_imprimitive(const PermGroup& t, unsigned k);

// t wr Sym(l) on l-tuples of t's domain: coordinatewise action composed
// with coordinate shuffles. Tuple (d_0, ..., d_{l-1}) is encoded as the
// big-endian mixed-radix index sum(d_i * degree^(l-1-i)).
struct ProductAction {
  PermGroup group;
  std::size_t base_degree = 0;
  unsigned copies = 0;

  std::vector<Point> decode(Point index) const;
  Point encode(const std::vector<Point>& tuple) const;

  // Coordinate shuffle performed by an element of the wreath product,
  // recovered from how it moves the coordinate partitions.
  Perm top_component(const Perm& w) const;

  // For elements with trivial top component: the permutation induced on
  // each coordinate.
  std::vector<Perm> bottom_components(const Perm& w) const;
};

ProductAction wreath_product_action(const PermGroup& t, unsigned copies,
                                    std::size_t max_degree = 10'000);

// V : Q acting on the p^d vectors of V, V by translation and Q linearly.
// Q is supplied as permutations of the packed vector domain (index =
// sum v_i p^i) and is checked to be linear and a 2-group.
struct HolomorphAction {
  PermGroup group;
  unsigned p = 0;
  unsigned d = 0;
  PermGroup translations;  // the socle V

  Point vector_add(Point a, Point b) const;
};

HolomorphAction holomorph_affine(unsigned p, unsigned d,
                                 const std::vector<Perm>& q_gens);

enum class MobiusFlavor { PSL, PGL, PGammaL };

// Projective-line action on q+1 points; point i < q is the field element i,
// point q is infinity. Orders are validated against the closed formulas.
PermGroup mobius_action(unsigned q, MobiusFlavor flavor);

}  // namespace fixity
