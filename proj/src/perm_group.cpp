#include "fixity/perm_group.hpp"

#include <algorithm>

#include "fixity/error.hpp"

namespace fixity {

PermGroup::PermGroup() : degree_(1), order_(1) {}

PermGroup PermGroup::trivial(std::size_t degree) {
  if (degree == 0) throw InputError("degree must be at least 1");
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::generated_by(std::vector<Perm> gens) {
  return generated_by(std::move(gens), {});
}

PermGroup PermGroup::generated_by(std::vector<Perm> gens,
                                  const std::vector<Point>& base_hint) {
  if (gens.empty()) throw InputError("generated_by needs at least one permutation");
  PermGroup g;
  g.degree_ = gens[0].degree();
  for (const Perm& p : gens) {
    if (p.degree() != g.degree_)
      throw InputError("generators have mixed degrees");
    if (!p.is_identity()) g.gens_.push_back(p);
  }
  g.build(base_hint);
  return g;
}

namespace {

Point first_moved(const Perm& p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p[x] != x) return x;
  throw InternalError("first_moved on identity");
}

// Index of the first base point moved by g (== base.size() if g fixes all).
std::size_t tag_of(const Perm& g, const std::vector<Point>& base) {
  for (std::size_t t = 0; t < base.size(); ++t)
    if (g[base[t]] != base[t]) return t;
  return base.size();
}

}  // namespace

std::vector<Perm> PermGroup::level_generating_set(std::size_t i) const {
  // Strong generators fixing base[0..i-1] are exactly those stored at
  // levels >= i (a generator is filed under the first base point it moves).
  std::vector<Perm> out;
  for (std::size_t j = i; j < levels_.size(); ++j)
    for (const Perm& g : levels_[j].gens) out.push_back(g);
  return out;
}

void PermGroup::recompute_orbit(std::size_t i) {
  Level& lv = levels_[i];
  lv.where.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.transversal.push_back(Perm(degree_));
  lv.where[lv.base] = 0;
  std::vector<Perm> gens = level_generating_set(i);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point p = lv.orbit[head];
    for (const Perm& s : gens) {
      Point q = s[p];
      if (lv.where[q] < 0) {
        lv.where[q] = std::int32_t(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[head].then(s));
      }
    }
  }
}

void PermGroup::build(const std::vector<Point>& base_hint) {
  order_ = Count128::one();
  if (gens_.empty()) return;

  std::vector<Point> base;
  auto moved_by_some_gen = [&](Point p) {
    for (const Perm& g : gens_)
      if (g[p] != p) return true;
    return false;
  };
  for (Point p : base_hint) {
    if (p >= degree_) throw InputError("base hint point out of range");
    if (moved_by_some_gen(p) &&
        std::find(base.begin(), base.end(), p) == base.end())
      base.push_back(p);
  }
  for (const Perm& g : gens_)
    while (tag_of(g, base) == base.size()) base.push_back(first_moved(g));

  levels_.clear();
  for (Point b : base) {
    Level lv;
    lv.base = b;
    levels_.push_back(std::move(lv));
  }
  for (const Perm& g : gens_) levels_[tag_of(g, base)].gens.push_back(g);

  // Deterministic Schreier-Sims. Invariant while running: all levels deeper
  // than i have their Schreier generators sifting to the identity.
  for (std::size_t i = 0; i < levels_.size(); ++i) recompute_orbit(i);
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t lvl = i - 1;
    recompute_orbit(lvl);
    Level& lv = levels_[lvl];
    std::vector<Perm> gens = level_generating_set(lvl);
    bool clean = true;
    for (std::size_t oi = 0; oi < lv.orbit.size() && clean; ++oi) {
      for (const Perm& s : gens) {
        Point q = s[lv.orbit[oi]];
        Perm schreier =
            lv.transversal[oi].then(s).then(lv.transversal[lv.where[q]].inverse());
        if (schreier.is_identity()) continue;
        auto [depth, residue] = sift_from(lvl + 1, schreier);
        if (residue.is_identity()) continue;
        // New strong generator; extend the base if it fixes all of it.
        while (tag_of(residue, base) == base.size()) {
          base.push_back(first_moved(residue));
          Level nl;
          nl.base = base.back();
          levels_.push_back(std::move(nl));
          recompute_orbit(levels_.size() - 1);
        }
        std::size_t t = tag_of(residue, base);
        levels_[t].gens.push_back(residue);
        i = t + 1;  // revisit from the level that changed
        clean = false;
        break;
      }
    }
    if (clean) i = lvl;
  }

  for (std::size_t l = 0; l < levels_.size(); ++l) recompute_orbit(l);
  for (const Level& lv : levels_) order_.mul(lv.orbit.size());

  for (const Perm& g : gens_)
    if (!contains(g))
      throw InternalError("stabilizer chain failed self-verification");
}

std::pair<std::size_t, Perm> PermGroup::sift(const Perm& p) const {
  return sift_from(0, p);
}

std::pair<std::size_t, Perm> PermGroup::sift_from(std::size_t start,
                                                  const Perm& p) const {
  Perm g = p;
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point q = g[lv.base];
    if (q == lv.base) continue;
    if (lv.where[q] < 0) return {i, std::move(g)};
    g = g.then(lv.transversal[lv.where[q]].inverse());
  }
  return {levels_.size(), std::move(g)};
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw InputError("degree mismatch in membership");
  return sift(p).second.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return degree_ == other.degree_ && order_ == other.order_ &&
         contains_group(other) && other.contains_group(*this);
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const Level& lv : levels_)
    for (const Perm& g : lv.gens) out.push_back(g);
  if (out.empty()) out.push_back(Perm(degree_));
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  // Elements factor uniquely as u_k * ... * u_1 over the levels, so one
  // uniform transversal pick per level samples uniformly over the group.
  Perm acc(degree_);
  for (const Level& lv : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
    acc = lv.transversal[pick(rng)].then(acc);
  }
  return acc;
}

void PermGroup::for_each_element(
    const std::function<bool(const Perm&)>& fn) const {
  // Every element factors uniquely as u_k * ... * u_1 over the levels
  // (deepest applied first), mirroring sift.
  std::function<bool(std::size_t, const Perm&)> rec =
      [&](std::size_t i, const Perm& acc) -> bool {
    if (i == levels_.size()) return fn(acc);
    for (const Perm& u : levels_[i].transversal)
      if (!rec(i + 1, u.then(acc))) return false;
    return true;
  };
  rec(0, Perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const {
  if (!order_.fits_u64() || order_u64() > limit)
    throw ResourceError("element enumeration: group order " +
                        order_.to_string() + " exceeds limit " +
                        std::to_string(limit));
  std::vector<Perm> out;
  out.reserve(order_u64());
  for_each_element([&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PermGroup PermGroup::point_stabilizer(Point w) const {
  return pointwise_stabilizer({w});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<Point>& pts) const {
  if (gens_.empty()) return trivial(degree_);
  PermGroup rebased = generated_by(gens_, pts);
  std::vector<Perm> stab_gens;
  for (const Level& lv : rebased.levels_) {
    bool prefix_level =
        std::find(pts.begin(), pts.end(), lv.base) != pts.end();
    if (!prefix_level)
      for (const Perm& g : lv.gens) stab_gens.push_back(g);
  }
  // Levels for the listed points come first by construction, so the strong
  // generators of all later levels fix every listed point.
  if (stab_gens.empty()) return trivial(degree_);
  return generated_by(std::move(stab_gens));
}

}  // namespace fixity
