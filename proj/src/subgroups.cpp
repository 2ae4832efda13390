#include "fixity/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "fixity/error.hpp"

namespace fixity {

PermGroup adjoin(const PermGroup& g, const Perm& extra) {
  if (extra.is_identity() || g.contains(extra)) return g;
  std::vector<Perm> gens = g.generators();
  gens.push_back(extra);
  return PermGroup::generated_by(std::move(gens));
}

namespace {

// Sorted element keys of h, the canonical label of a subgroup in the
// conjugation action.
std::vector<std::string> element_keys(const std::vector<Perm>& elems) {
  std::vector<std::string> keys;
  keys.reserve(elems.size());
  for (const Perm& p : elems) keys.push_back(p.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string concat_keys(const std::vector<std::string>& keys) {
  std::string out;
  std::size_t total = 0;
  for (const auto& k : keys) total += k.size();
  out.reserve(total);
  for (const auto& k : keys) out += k;
  return out;
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Limits& lim) {
  if (g.degree() != h.degree())
    throw InputError("normalizer: degree mismatch");
  if (!g.contains_group(h))
    throw InputError("normalizer: h is not a subgroup of g");
  if (!g.order().fits_u64() || g.order_u64() > lim.max_operation_order)
    throw ResourceError("normalizer: group order exceeds bound");

  const std::vector<Perm> h_elems = h.elements(lim.max_enumeration);

  auto subgroup_key = [&](const Perm& w) {
    std::vector<Perm> conj;
    conj.reserve(h_elems.size());
    for (const Perm& x : h_elems) conj.push_back(x.conjugated_by(w));
    return concat_keys(element_keys(conj));
  };

  std::unordered_map<std::string, Perm> witness;  // subgroup key -> w, h^w
  std::deque<Perm> queue;                          // witnesses to process
  witness.emplace(subgroup_key(Perm(g.degree())), Perm(g.degree()));
  queue.push_back(Perm(g.degree()));

  PermGroup norm = h;
  auto grow = [&](const Perm& c) { norm = adjoin(norm, c); };

  while (!queue.empty()) {
    Perm u = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : g.generators()) {
      Perm w = u.then(s);
      std::string k = subgroup_key(w);
      auto it = witness.find(k);
      if (it == witness.end()) {
        if ((witness.size() + 1) * h_elems.size() > 16 * lim.max_enumeration)
          throw ResourceError("normalizer: conjugate orbit exceeds bound");
        witness.emplace(std::move(k), w);
        queue.push_back(std::move(w));
      } else {
        grow(w.then(it->second.inverse()));
      }
    }
  }

  if (g.order_u64() != witness.size() * norm.order_u64())
    throw InternalError("normalizer: orbit-stabilizer mismatch");
  return norm;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       const Limits& lim) {
  if (a.degree() != b.degree())
    throw InputError("intersection: degree mismatch");
  const bool a_smaller = a.order().raw() <= b.order().raw();
  const PermGroup& small = a_smaller ? a : b;
  const PermGroup& large = a_smaller ? b : a;
  if (!small.order().fits_u64() || small.order_u64() > lim.max_enumeration)
    throw ResourceError("intersection: smaller group order " +
                        small.order().to_string() + " exceeds bound");
  PermGroup result = PermGroup::trivial(a.degree());
  small.for_each_element([&](const Perm& p) {
    if (large.contains(p)) result = adjoin(result, p);
    return true;
  });
  return result;
}

PermGroup core(const PermGroup& g, const PermGroup& h, const Limits& lim) {
  if (!g.contains_group(h)) throw InputError("core: h is not a subgroup of g");
  PermGroup c = h;
  while (true) {
    const Perm* bad_gen = nullptr;
    for (const Perm& s : g.generators()) {
      for (const Perm& x : c.generators()) {
        if (!c.contains(x.conjugated_by(s))) {
          bad_gen = &s;
          break;
        }
      }
      if (bad_gen) break;
    }
    if (!bad_gen) return c;  // normal in g, and maximal such inside h
    std::vector<Perm> conj_gens;
    for (const Perm& x : c.generators())
      conj_gens.push_back(x.conjugated_by(*bad_gen));
    PermGroup cg = conj_gens.empty() ? PermGroup::trivial(g.degree())
                                     : PermGroup::generated_by(conj_gens);
    c = intersection(c, cg, lim);
    if (c.is_trivial()) return c;
  }
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  PermGroup n = PermGroup::trivial(g.degree());
  for (const Perm& s : seeds) n = adjoin(n, s);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Perm> current = n.generators();
    for (const Perm& x : current) {
      for (const Perm& s : g.generators()) {
        Perm c = x.conjugated_by(s);
        if (!n.contains(c)) {
          n = adjoin(n, c);
          changed = true;
        }
      }
    }
  }
  return n;
}

bool is_normal_in(const PermGroup& g, const PermGroup& h) {
  for (const Perm& s : g.generators())
    for (const Perm& x : h.generators())
      if (!h.contains(x.conjugated_by(s))) return false;
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].then(gens[j]) != gens[j].then(gens[i])) return false;
  return true;
}

bool is_2_group(const PermGroup& g) {
  if (!g.order().fits_u64()) return false;
  std::uint64_t n = g.order_u64();
  while (n % 2 == 0) n /= 2;
  return n == 1;
}

std::uint64_t two_part(std::uint64_t n) {
  std::uint64_t t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

}  // namespace fixity
