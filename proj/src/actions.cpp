#include "fixity/actions.hpp"

#include <algorithm>
#include <numeric>

#include "fixity/error.hpp"
#include "fixity/gf.hpp"
#include "fixity/subgroups.hpp"

namespace fixity {

Perm CosetAction::canonical_rep(const Perm& g) const {
  // Per chain level of the stabilizer, exactly one transversal element
  // minimizes the image of the base point over the coset; composing those
  // picks yields a representative independent of g's own representative.
  Perm r = g;
  for (const auto& lv : stabilizer.levels()) {
    Point best_pt = 0;
    Point best_val = UINT32_MAX;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point v = r[lv.orbit[i]];
      if (v < best_val) {
        best_val = v;
        best_pt = Point(i);
      }
    }
    r = lv.transversal[best_pt].then(r);
  }
  return r;
}

Perm CosetAction::act(const Perm& g) const {
  std::vector<Point> img(coset_reps.size());
  for (std::size_t i = 0; i < coset_reps.size(); ++i) {
    auto it = index_.find(canonical_rep(coset_reps[i].then(g)).key());
    if (it == index_.end())
      throw InputError("coset action: element does not permute the cosets");
    img[i] = it->second;
  }
  return Perm(std::move(img));
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                         std::size_t max_degree, const Limits& lim) {
  if (g.degree() != h.degree())
    throw InputError("coset_action: degree mismatch");
  if (!g.contains_group(h))
    throw InputError("coset_action: h is not a subgroup of g");
  if (!g.order().fits_u64() || !h.order().fits_u64())
    throw ResourceError("coset_action: orders exceed 64-bit range");
  if (g.order_u64() % h.order_u64() != 0)
    throw InternalError("coset_action: index is not integral");
  const std::uint64_t index = g.order_u64() / h.order_u64();
  if (index > max_degree)
    throw ResourceError("coset_action: index " + std::to_string(index) +
                        " exceeds degree bound " + std::to_string(max_degree));

  CosetAction out;
  out.stabilizer = h;

  // breadth-first closure of right multiplication on canonical reps
  out.coset_reps.push_back(out.canonical_rep(Perm(g.degree())));
  out.index_.emplace(out.coset_reps[0].key(), 0);
  for (std::size_t head = 0; head < out.coset_reps.size(); ++head) {
    for (const Perm& s : g.generators()) {
      Perm rep = out.canonical_rep(out.coset_reps[head].then(s));
      std::string k = rep.key();
      if (!out.index_.count(k)) {
        out.index_.emplace(std::move(k), Point(out.coset_reps.size()));
        out.coset_reps.push_back(std::move(rep));
      }
    }
  }
  if (out.coset_reps.size() != index)
    throw InternalError("coset_action: enumerated " +
                        std::to_string(out.coset_reps.size()) +
                        " cosets, expected " + std::to_string(index));

  std::vector<Perm> image_gens;
  if (index == 1) {
    out.image = PermGroup::trivial(1);
  } else {
    for (const Perm& s : g.generators()) image_gens.push_back(out.act(s));
    out.image = PermGroup::generated_by(image_gens);
  }

  for (const Perm& s : h.generators())
    if (out.act(s)[0] != 0)
      throw InternalError("coset_action: base point stabilizer mismatch");

  out.kernel = core(g, h, lim);
  if (out.kernel.order().fits_u64() && out.image.order().fits_u64() &&
      out.kernel.order_u64() * out.image.order_u64() != g.order_u64())
    throw InternalError("coset_action: orders do not multiply");
  return out;
}

PermGroup wreath_imprimitive(const PermGroup& t, unsigned k) {
  if (k < 2) throw InputError("wreath_imprimitive: need at least two copies");
  const std::size_t d = t.degree();
  const std::size_t n = d * k;
  std::vector<Perm> gens;
  for (const Perm& a : t.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point(0));
    for (Point x = 0; x < d; ++x) img[x] = a[x];
    gens.emplace_back(std::move(img));
  }
  {
    std::vector<Point> swap01(n);
    std::iota(swap01.begin(), swap01.end(), Point(0));
    for (Point x = 0; x < d; ++x) {
      swap01[x] = Point(x + d);
      swap01[x + d] = x;
    }
    gens.emplace_back(std::move(swap01));
  }
  if (k > 2) {
    std::vector<Point> rot(n);
    for (Point x = 0; x < n; ++x) rot[x] = Point((x + d) % n);
    gens.emplace_back(std::move(rot));
  }
  PermGroup w = PermGroup::generated_by(std::move(gens));

  Count128 expect = Count128::one();
  for (unsigned i = 0; i < k; ++i) expect.mul(t.order_u64());
  for (unsigned i = 2; i <= k; ++i) expect.mul(i);
  if (!(w.order() == expect))
    throw InternalError("wreath_imprimitive: order mismatch");
  return w;
}

std::vector<Point> ProductAction::decode(Point index) const {
  std::vector<Point> tuple(copies);
  for (unsigned i = copies; i-- > 0;) {
    tuple[i] = Point(index % base_degree);
    index = Point(index / base_degree);
  }
  return tuple;
}

Point ProductAction::encode(const std::vector<Point>& tuple) const {
  Point idx = 0;
  for (unsigned i = 0; i < copies; ++i)
    idx = Point(idx * base_degree + tuple[i]);
  return idx;
}

Perm ProductAction::top_component(const Perm& w) const {
  // Two tuples differing only in coordinate i map to tuples differing only
  // in coordinate sigma(i).
  std::vector<Point> sigma(copies, UINT32_MAX);
  std::vector<Point> zero(copies, 0);
  Point base_img = w[encode(zero)];
  for (unsigned i = 0; i < copies; ++i) {
    std::vector<Point> probe = zero;
    probe[i] = 1;
    Point probe_img = w[encode(probe)];
    auto a = decode(base_img);
    auto b = decode(probe_img);
    unsigned differ = copies;
    for (unsigned j = 0; j < copies; ++j)
      if (a[j] != b[j]) {
        if (differ != copies)
          throw InternalError("product action: element breaks coordinates");
        differ = j;
      }
    if (differ == copies)
      throw InternalError("product action: probe tuple collapsed");
    sigma[i] = differ;
  }
  return Perm(std::move(sigma));
}

std::vector<Perm> ProductAction::bottom_components(const Perm& w) const {
  if (!top_component(w).is_identity())
    throw InputError("bottom_components: top component is non-trivial");
  std::vector<Perm> out;
  for (unsigned i = 0; i < copies; ++i) {
    std::vector<Point> comp(base_degree);
    for (Point v = 0; v < base_degree; ++v) {
      std::vector<Point> probe(copies, 0);
      probe[i] = v;
      comp[v] = decode(w[encode(probe)])[i];
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

ProductAction wreath_product_action(const PermGroup& t, unsigned copies,
                                    std::size_t max_degree) {
  if (copies < 2)
    throw InputError("wreath_product_action: need at least two coordinates");
  if (t.degree() < 2)
    throw InputError("wreath_product_action: base domain needs two points");
  const std::size_t d = t.degree();
  std::uint64_t degree = 1;
  for (unsigned i = 0; i < copies; ++i) {
    degree *= d;
    if (degree > max_degree)
      throw ResourceError("wreath_product_action: degree exceeds bound");
  }

  ProductAction pa;
  pa.base_degree = d;
  pa.copies = copies;

  auto tuple_perm = [&](auto&& map_tuple) {
    std::vector<Point> img(degree);
    for (Point idx = 0; idx < degree; ++idx) {
      std::vector<Point> tup = pa.decode(idx);
      img[idx] = pa.encode(map_tuple(tup));
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (const Perm& a : t.generators())
    gens.push_back(tuple_perm([&](std::vector<Point> tup) {
      tup[0] = a[tup[0]];
      return tup;
    }));
  gens.push_back(tuple_perm([&](std::vector<Point> tup) {
    std::swap(tup[0], tup[1]);
    return tup;
  }));
  if (copies > 2)
    gens.push_back(tuple_perm([&](std::vector<Point> tup) {
      std::rotate(tup.begin(), tup.begin() + 1, tup.end());
      return tup;
    }));

  pa.group = PermGroup::generated_by(std::move(gens));

  Count128 expect = Count128::one();
  for (unsigned i = 0; i < copies; ++i) expect.mul(t.order_u64());
  for (unsigned i = 2; i <= copies; ++i) expect.mul(i);
  if (!(pa.group.order() == expect))
    throw InternalError("wreath_product_action: order mismatch");
  return pa;
}

Point HolomorphAction::vector_add(Point a, Point b) const {
  Point out = 0, mult = 1;
  for (unsigned i = 0; i < d; ++i) {
    out += ((a % p) + (b % p)) % p * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return out;
}

HolomorphAction holomorph_affine(unsigned p, unsigned d,
                                 const std::vector<Perm>& q_gens) {
  if (p == 2)
    throw InputError("holomorph_affine: the characteristic must be odd");
  bool prime = p >= 2;
  for (unsigned t = 2; t * t <= p; ++t)
    if (p % t == 0) prime = false;
  if (!prime) throw InputError("holomorph_affine: p is not prime");
  if (d == 0) throw InputError("holomorph_affine: dimension must be positive");

  std::uint64_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    n *= p;
    if (n > 100'000)
      throw ResourceError("holomorph_affine: vector space too large");
  }

  HolomorphAction hol;
  hol.p = p;
  hol.d = d;

  for (const Perm& g : q_gens) {
    if (g.degree() != n)
      throw InputError("holomorph_affine: generator degree mismatch");
    if (g[0] != 0)
      throw InputError("holomorph_affine: linear part must fix the origin");
    for (Point u = 0; u < n; ++u)
      for (Point v = u; v < n; ++v)
        if (g[hol.vector_add(u, v)] != hol.vector_add(g[u], g[v]))
          throw InputError("holomorph_affine: generator is not additive");
  }

  std::vector<Perm> trans;
  Point basis = 1;
  for (unsigned i = 0; i < d; ++i, basis *= p) {
    std::vector<Point> img(n);
    for (Point v = 0; v < n; ++v) img[v] = hol.vector_add(v, basis);
    trans.emplace_back(std::move(img));
  }
  hol.translations = PermGroup::generated_by(trans);
  if (hol.translations.order_u64() != n)
    throw InternalError("holomorph_affine: translations are not regular");

  std::vector<Perm> gens = trans;
  for (const Perm& g : q_gens)
    if (!g.is_identity()) gens.push_back(g);
  if (gens.size() > trans.size()) {
    PermGroup q = PermGroup::generated_by(
        std::vector<Perm>(gens.begin() + trans.size(), gens.end()));
    if (!is_2_group(q))
      throw InputError("holomorph_affine: the point stabilizer is not a 2-group");
  }
  hol.group = PermGroup::generated_by(std::move(gens));
  return hol;
}

PermGroup mobius_action(unsigned q, MobiusFlavor flavor) {
  switch (q) {
    case 4: case 5: case 7: case 8: case 9: case 11: case 13: case 16:
      break;
    default:
      throw InputError("mobius_action: unsupported field size " +
                       std::to_string(q));
  }
  SmallField f(q);
  const Point inf = q;  // projective point [1:0]
  const std::size_t n = q + 1;

  // z -> (az + b) / (cz + d) on the projective line
  auto moebius = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> img(n, UINT32_MAX);
    img[inf] = (c == 0) ? inf : f.div(a, c);
    for (unsigned z = 0; z < q; ++z) {
      unsigned den = f.add(f.mul(c, z), d);
      unsigned num = f.add(f.mul(a, z), b);
      img[z] = (den == 0) ? inf : f.div(num, den);
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  // unipotent translations z -> z + b over an additive basis
  for (unsigned i = 0, b = 1; i < f.extension_degree();
       ++i, b *= f.characteristic())
    gens.push_back(moebius(1, b, 0, 1));
  // torus z -> g^2 z (a square scale lies in PSL)
  unsigned g2 = f.mul(f.generator(), f.generator());
  gens.push_back(moebius(g2, 0, 0, 1));
  // Weyl inversion z -> -1/z
  gens.push_back(moebius(0, f.neg(1), 1, 0));

  if (flavor == MobiusFlavor::PGL || flavor == MobiusFlavor::PGammaL)
    gens.push_back(moebius(f.generator(), 0, 0, 1));
  if (flavor == MobiusFlavor::PGammaL) {
    std::vector<Point> frob(n);
    frob[inf] = inf;
    for (unsigned z = 0; z < q; ++z) frob[z] = f.frobenius(z);
    gens.emplace_back(std::move(frob));
  }

  PermGroup group = PermGroup::generated_by(std::move(gens));

  std::uint64_t base = std::uint64_t(q) * (std::uint64_t(q) * q - 1);
  std::uint64_t expect = 0;
  switch (flavor) {
    case MobiusFlavor::PSL: expect = base / std::gcd(2u, q - 1); break;
    case MobiusFlavor::PGL: expect = base; break;
    case MobiusFlavor::PGammaL: expect = base * f.extension_degree(); break;
  }
  if (!(group.order() == expect))
    throw InternalError("mobius_action: order mismatch, got " +
                        group.order().to_string() + ", expected " +
                        std::to_string(expect));
  return group;
}

}  // namespace fixity
