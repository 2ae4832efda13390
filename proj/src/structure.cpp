#include "fixity/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "fixity/error.hpp"
#include "fixity/subgroups.hpp"

namespace fixity {

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const Perm& s : g.generators()) {
        Point q = s[orb[head]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

BlockSystem BlockSystem::from_block_of(const std::vector<std::uint32_t>& raw) {
  BlockSystem s;
  s.block_of.assign(raw.size(), UINT32_MAX);
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (Point x = 0; x < raw.size(); ++x) {
    auto [it, fresh] = renumber.try_emplace(raw[x], renumber.size());
    s.block_of[x] = it->second;
    if (fresh) s.blocks.emplace_back();
    s.blocks[it->second].push_back(x);
  }
  // renumbering by first occurrence keeps blocks sorted by min point already
  return s;
}

BlockSystem BlockSystem::singletons(std::size_t degree) {
  std::vector<std::uint32_t> raw(degree);
  std::iota(raw.begin(), raw.end(), 0);
  return from_block_of(raw);
}

std::string BlockSystem::fingerprint() const {
  std::string out;
  out.reserve(block_of.size() * 2);
  for (std::uint32_t b : block_of) {
    out.push_back(char(b & 0xff));
    out.push_back(char((b >> 8) & 0xff));
  }
  return out;
}

bool is_invariant(const PermGroup& g, const BlockSystem& s) {
  if (s.degree() != g.degree()) return false;
  for (const auto& b : s.blocks)
    if (b.size() != s.block_size()) return false;
  for (const Perm& p : g.generators())
    for (const auto& b : s.blocks) {
      std::uint32_t target = s.block_of[p[b[0]]];
      for (Point x : b)
        if (s.block_of[p[x]] != target) return false;
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Point(0));
  }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

void require_transitive(const PermGroup& g, const char* op) {
  if (!is_transitive(g))
    throw InputError(std::string(op) + ": group is not transitive");
}

// True when every block of fine lies inside one block of coarse.
bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  for (const auto& b : fine.blocks) {
    std::uint32_t target = coarse.block_of[b[0]];
    for (Point x : b)
      if (coarse.block_of[x] != target) return false;
  }
  return true;
}

}  // namespace

BlockSystem finest_block_system_with_pair(const PermGroup& g, Point a,
                                          Point b) {
  UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> agenda;
  uf.unite(a, b);
  agenda.emplace_back(a, b);
  while (!agenda.empty()) {
    auto [x, y] = agenda.back();
    agenda.pop_back();
    for (const Perm& s : g.generators()) {
      Point u = s[x], v = s[y];
      if (uf.unite(u, v)) agenda.emplace_back(u, v);
    }
  }
  std::vector<std::uint32_t> raw(g.degree());
  for (Point x = 0; x < g.degree(); ++x) raw[x] = uf.find(x);
  return BlockSystem::from_block_of(raw);
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  require_transitive(g, "minimal_block_systems");
  std::map<std::string, BlockSystem> candidates;
  for (Point d = 1; d < g.degree(); ++d) {
    BlockSystem s = finest_block_system_with_pair(g, 0, d);
    if (s.is_one_block()) continue;  // pair generates the coarse partition
    candidates.try_emplace(s.fingerprint(), std::move(s));
  }
  std::vector<BlockSystem> out;
  for (const auto& [fp, s] : candidates) {
    bool minimal = true;
    for (const auto& [fp2, t] : candidates)
      if (fp2 != fp && refines(t, s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

bool is_primitive(const PermGroup& g) {
  return is_transitive(g) && minimal_block_systems(g).empty();
}

Perm block_image(const Perm& p, const BlockSystem& s) {
  std::vector<Point> img(s.block_count());
  for (std::size_t b = 0; b < s.block_count(); ++b)
    img[b] = s.block_of[p[s.blocks[b][0]]];
  return Perm(std::move(img));
}

QuotientAction quotient_action(const PermGroup& g, const BlockSystem& s) {
  if (!is_invariant(g, s))
    throw InputError("quotient_action: partition is not invariant");
  const std::size_t n = g.degree();
  const std::size_t m = s.block_count();

  std::vector<Perm> image_gens;
  for (const Perm& p : g.generators()) image_gens.push_back(block_image(p, s));
  PermGroup image = image_gens.empty() ? PermGroup::trivial(m)
                                       : PermGroup::generated_by(image_gens);
  if (image.degree() != m) throw InternalError("quotient image degree");

  // Kernel: extend the action to the blocks as extra points and stabilize
  // those pointwise.
  std::vector<Perm> ext_gens;
  for (const Perm& p : g.generators()) {
    std::vector<Point> img(n + m);
    for (Point x = 0; x < n; ++x) img[x] = p[x];
    Perm bi = block_image(p, s);
    for (std::size_t b = 0; b < m; ++b) img[n + b] = Point(n + bi[Point(b)]);
    ext_gens.emplace_back(std::move(img));
  }
  PermGroup kernel(PermGroup::trivial(n));
  if (!ext_gens.empty()) {
    std::vector<Point> block_points(m);
    std::iota(block_points.begin(), block_points.end(), Point(n));
    PermGroup ext = PermGroup::generated_by(ext_gens);
    PermGroup stab = ext.pointwise_stabilizer(block_points);
    std::vector<Perm> kg;
    for (const Perm& p : stab.generators()) {
      std::vector<Point> img(p.images().begin(), p.images().begin() + n);
      kg.emplace_back(std::move(img));
    }
    if (!kg.empty()) kernel = PermGroup::generated_by(kg);
  }

  if (g.order().fits_u64() && kernel.order().fits_u64() &&
      image.order().fits_u64()) {
    if (g.order_u64() != kernel.order_u64() * image.order_u64())
      throw InternalError("quotient_action: orders do not multiply");
  }
  return {std::move(image), std::move(kernel)};
}

std::vector<BlockSystem> maximal_block_systems(const PermGroup& g) {
  require_transitive(g, "maximal_block_systems");
  std::map<std::string, BlockSystem> out;
  for (const BlockSystem& fine : minimal_block_systems(g)) {
    QuotientAction q = quotient_action(g, fine);
    std::vector<BlockSystem> coarser = maximal_block_systems(q.image);
    if (coarser.empty()) {
      out.try_emplace(fine.fingerprint(), fine);
      continue;
    }
    for (const BlockSystem& top : coarser) {
      std::vector<std::uint32_t> raw(g.degree());
      for (Point x = 0; x < g.degree(); ++x)
        raw[x] = top.block_of[fine.block_of[x]];
      BlockSystem pulled = BlockSystem::from_block_of(raw);
      out.try_emplace(pulled.fingerprint(), std::move(pulled));
    }
  }
  std::vector<BlockSystem> result;
  for (auto& [fp, s] : out) result.push_back(std::move(s));
  return result;
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  require_transitive(g, "all_block_systems");
  std::map<std::string, BlockSystem> out;
  for (const BlockSystem& fine : minimal_block_systems(g)) {
    out.try_emplace(fine.fingerprint(), fine);
    QuotientAction q = quotient_action(g, fine);
    for (const BlockSystem& up : all_block_systems(q.image)) {
      std::vector<std::uint32_t> raw(g.degree());
      for (Point x = 0; x < g.degree(); ++x)
        raw[x] = up.block_of[fine.block_of[x]];
      BlockSystem pulled = BlockSystem::from_block_of(raw);
      out.try_emplace(pulled.fingerprint(), std::move(pulled));
    }
  }
  std::vector<BlockSystem> result;
  for (auto& [fp, s] : out) result.push_back(std::move(s));
  return result;
}

BlockSystem block_closure(const PermGroup& g, std::vector<Point> block) {
  std::sort(block.begin(), block.end());
  std::map<std::vector<Point>, std::uint32_t> index;
  std::vector<std::vector<Point>> blocks{block};
  index.emplace(std::move(block), 0);
  for (std::size_t head = 0; head < blocks.size(); ++head) {
    std::vector<Point> cur = blocks[head];  // copy: blocks may reallocate
    for (const Perm& s : g.generators()) {
      std::vector<Point> img;
      img.reserve(cur.size());
      for (Point x : cur) img.push_back(s[x]);
      std::sort(img.begin(), img.end());
      if (index.try_emplace(img, std::uint32_t(blocks.size())).second)
        blocks.push_back(std::move(img));
    }
  }
  std::vector<std::uint32_t> raw(g.degree(), UINT32_MAX);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point x : blocks[b]) {
      if (raw[x] != UINT32_MAX)
        throw InputError("block_closure: block images overlap");
      raw[x] = std::uint32_t(b);
    }
  for (Point x = 0; x < g.degree(); ++x)
    if (raw[x] == UINT32_MAX)
      throw InputError("block_closure: block images do not cover the domain");
  return BlockSystem::from_block_of(raw);
}

namespace {

// Powers away the odd part of the element's order; identity when p has odd
// order.
Perm two_element_of(const Perm& p) {
  std::uint64_t ord = p.order();
  std::uint64_t odd = ord;
  while (odd % 2 == 0) odd /= 2;
  return p.power(std::int64_t(odd));
}

void require_order_bound(const PermGroup& g, const Limits& lim,
                         const char* op) {
  if (!g.order().fits_u64() || g.order_u64() > lim.max_operation_order)
    throw ResourceError(std::string(op) + ": group order " +
                        g.order().to_string() + " exceeds bound " +
                        std::to_string(lim.max_operation_order));
}

}  // namespace

PermGroup sylow2_containing(const PermGroup& g, const PermGroup& start,
                            std::uint64_t seed, const Limits& lim) {
  require_order_bound(g, lim, "sylow2");
  if (!is_2_group(start))
    throw InputError("sylow2_containing: start is not a 2-group");
  if (!g.contains_group(start))
    throw InputError("sylow2_containing: start is not a subgroup");

  const std::uint64_t target = two_part(g.order_u64());
  PermGroup p = start;
  std::mt19937_64 rng(seed);

  while (p.order_u64() < target) {
    // Every element of the normalizer that powers to a 2-element outside p
    // extends p to a strictly larger 2-group (p is normal in the span).
    PermGroup norm = p.is_trivial() ? g : normalizer(g, p, lim);
    bool grown = false;
    auto try_extend = [&](const Perm& z) {
      if (grown || z.is_identity()) return;
      Perm y = two_element_of(z);
      if (y.is_identity() || p.contains(y)) return;
      PermGroup bigger = adjoin(p, y);
      if (!is_2_group(bigger))
        throw InternalError("sylow2: ascent left the 2-groups");
      p = std::move(bigger);
      grown = true;
    };
    for (const Perm& z : norm.generators()) try_extend(z);
    for (int attempt = 0; attempt < 2000 && !grown; ++attempt)
      try_extend(norm.random_element(rng));
    if (!grown) {
      // deterministic sweep; the theory guarantees a witness exists
      norm.for_each_element([&](const Perm& z) {
        try_extend(z);
        return !grown;
      });
    }
    if (!grown) throw InternalError("sylow2: ascent stalled");
  }

  if (p.order_u64() != target)
    throw InternalError("sylow2: order does not match the 2-part");
  return p;
}

PermGroup sylow2(const PermGroup& g, std::uint64_t seed, const Limits& lim) {
  return sylow2_containing(g, PermGroup::trivial(g.degree()), seed, lim);
}

PermGroup o2(const PermGroup& g, std::uint64_t seed, const Limits& lim) {
  if (g.is_trivial()) return PermGroup::trivial(g.degree());
  PermGroup p = sylow2(g, seed, lim);
  if (p.is_trivial()) return p;
  return core(g, p, lim);
}

BlockSystem sylow2_overgroup_blocks(const PermGroup& g, Point omega,
                                    std::uint64_t seed, const Limits& lim) {
  require_transitive(g, "sylow2_overgroup_blocks");
  PermGroup stab = g.point_stabilizer(omega);
  if (!is_2_group(stab))
    throw InputError("sylow2_overgroup_blocks: point stabilizer is not a 2-group");
  PermGroup q = sylow2_containing(g, stab, seed, lim);
  // B = omega^Q
  std::vector<Point> block{omega};
  std::vector<bool> seen(g.degree(), false);
  seen[omega] = true;
  for (std::size_t head = 0; head < block.size(); ++head)
    for (const Perm& s : q.generators()) {
      Point y = s[block[head]];
      if (!seen[y]) {
        seen[y] = true;
        block.push_back(y);
      }
    }
  BlockSystem sys = block_closure(g, std::move(block));
  if (!is_invariant(g, sys))
    throw InternalError("sylow2_overgroup_blocks: closure is not invariant");
  return sys;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                const Limits& lim) {
  if (g.is_trivial())
    throw InputError("minimal_normal_subgroups: trivial group");
  require_order_bound(g, lim, "minimal_normal_subgroups");

  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };

  ConjugacyClasses cc = ConjugacyClasses::compute(g, lim);
  std::vector<PermGroup> candidates;
  auto known = [&](const PermGroup& n) {
    for (const PermGroup& c : candidates)
      if (c.order() == n.order() && c.contains_group(n)) return true;
    return false;
  };
  for (std::size_t i = 1; i < cc.count(); ++i) {
    if (!is_prime(cc.at(i).element_order)) continue;
    PermGroup n = normal_closure(g, {cc.at(i).rep});
    if (!known(n)) candidates.push_back(std::move(n));
  }

  std::vector<PermGroup> out;
  for (const PermGroup& n : candidates) {
    bool minimal = true;
    for (const PermGroup& m : candidates) {
      if (&m == &n) continue;
      if (m.order().raw() < n.order().raw() && n.contains_group(m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

PermGroup socle(const PermGroup& g, const Limits& lim) {
  if (g.is_trivial()) return g;
  std::vector<Perm> gens;
  for (const PermGroup& n : minimal_normal_subgroups(g, lim))
    for (const Perm& p : n.generators()) gens.push_back(p);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return PermGroup::generated_by(std::move(gens));
}

bool is_quasiprimitive(const PermGroup& g, const Limits& lim) {
  require_transitive(g, "is_quasiprimitive");
  if (g.is_trivial()) return true;  // degree 1
  for (const PermGroup& n : minimal_normal_subgroups(g, lim))
    if (orbits(n).size() != 1) return false;
  return true;
}

namespace {

bool is_nonabelian_simple(const PermGroup& g, const Limits& lim) {
  if (is_abelian(g) || g.is_trivial()) return false;
  auto mins = minimal_normal_subgroups(g, lim);
  return mins.size() == 1 && mins[0].same_group_as(g);
}

}  // namespace

OnsType ons_type(const PermGroup& g, const Limits& lim) {
  if (!is_quasiprimitive(g, lim))
    throw InputError("ons_type: group is not quasiprimitive");
  OnsType out;
  PermGroup s = socle(g, lim);
  out.socle_order = s.order();
  if (is_abelian(s)) {
    out.tag = OnsType::Tag::HA;
    out.socle_factor_count = 1;
    return out;
  }
  std::vector<PermGroup> factors = minimal_normal_subgroups(s, lim);
  out.socle_factor_count = int(factors.size());
  if (factors.size() == 1) {
    out.tag = factors[0].same_group_as(s) ? OnsType::Tag::AS
                                          : OnsType::Tag::OTHER;
    return out;
  }
  // T^l shape: every factor non-abelian simple of one common order, and the
  // factor orders multiply up to the socle order.
  Count128 product = Count128::one();
  bool ok = true;
  for (const PermGroup& f : factors) {
    if (!f.order().fits_u64() || !is_nonabelian_simple(f, lim)) {
      ok = false;
      break;
    }
    if (f.order().raw() != factors[0].order().raw()) ok = false;
    product.mul(f.order_u64());
  }
  if (ok && product == s.order())
    out.tag = OnsType::Tag::PA;
  else
    out.tag = OnsType::Tag::OTHER;
  return out;
}

const char* to_string(OnsType::Tag tag) {
  switch (tag) {
    case OnsType::Tag::HA: return "HA";
    case OnsType::Tag::AS: return "AS";
    case OnsType::Tag::PA: return "PA";
    default: return "OTHER";
  }
}

}  // namespace fixity
