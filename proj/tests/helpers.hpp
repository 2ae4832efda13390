#pragma once

// Shared test utilities: independent brute-force oracles that never touch
// the stabilizer-chain code paths they are used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixity/cycles.hpp"
#include "fixity/perm.hpp"

namespace oracle {

using fixity::Perm;
using fixity::Point;

inline Perm cyc(const std::string& text, std::size_t degree) {
  return fixity::parse_cycles(text, degree);
}

// Closure of a generating set by breadth-first multiplication.
inline std::vector<Perm> brute_elements(const std::vector<Perm>& gens) {
  std::set<std::vector<Point>> seen;
  std::vector<Perm> out;
  std::vector<Perm> queue;
  Perm id(gens.at(0).degree());
  seen.insert(id.images());
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm nxt = cur.then(g);
      if (seen.insert(nxt.images()).second) {
        out.push_back(nxt);
        queue.push_back(nxt);
      }
    }
  }
  return out;
}

// Conjugacy classes by brute-force orbit of the conjugation action over a
// fully enumerated group.
inline std::vector<std::vector<Perm>> brute_classes(
    const std::vector<Perm>& elements) {
  std::map<std::vector<Point>, bool> used;
  for (const Perm& p : elements) used[p.images()] = false;
  std::vector<std::vector<Perm>> classes;
  for (const Perm& p : elements) {
    if (used[p.images()]) continue;
    std::vector<Perm> cls;
    for (const Perm& q : elements) {
      Perm c = p.conjugated_by(q);
      if (!used[c.images()]) {
        used[c.images()] = true;
        cls.push_back(c);
      }
    }
    classes.push_back(cls);
  }
  return classes;
}

inline std::vector<Perm> brute_centralizer(const std::vector<Perm>& elements,
                                           const Perm& p) {
  std::vector<Perm> out;
  for (const Perm& g : elements)
    if (g.then(p) == p.then(g)) out.push_back(g);
  return out;
}

// All subgroups that are unions of conjugacy classes and closed under
// multiplication, i.e. all normal subgroups. Exact: a normal subgroup is a
// union of classes, so it is found as the closure of the classes it holds.
inline std::vector<std::vector<Perm>> brute_normal_subgroups(
    const std::vector<Perm>& elements) {
  auto classes = brute_classes(elements);
  std::size_t k = classes.size();
  std::set<std::set<std::vector<Point>>> found;
  std::vector<std::vector<Perm>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i))
        for (const Perm& p : classes[i]) gens.push_back(p);
    if (gens.empty()) gens.push_back(Perm(elements[0].degree()));
    auto sub = brute_elements(gens);
    // closure of class unions is automatically normal
    std::set<std::vector<Point>> keyset;
    for (const Perm& p : sub) keyset.insert(p.images());
    if (found.insert(keyset).second) out.push_back(sub);
  }
  return out;
}

// All set partitions of {0..n-1} with equal part sizes that every generator
// permutes blockwise. Returns each as a block_of map.
inline std::vector<std::vector<int>> brute_block_systems(
    const std::vector<Perm>& gens, std::size_t n) {
  std::vector<std::vector<int>> result;
  std::vector<int> assign(n, 0);
  // restricted growth strings enumerate set partitions exactly once
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxb) {
    if (i == n) {
      int blocks = maxb + 1;
      std::vector<std::vector<Point>> parts(blocks);
      for (Point x = 0; x < n; ++x) parts[assign[x]].push_back(x);
      std::size_t sz = parts[0].size();
      for (auto& p : parts)
        if (p.size() != sz) return;
      for (const Perm& g : gens) {
        for (const auto& part : parts) {
          std::set<Point> img;
          for (Point x : part) img.insert(g[x]);
          bool is_block = false;
          for (const auto& other : parts) {
            std::set<Point> o(other.begin(), other.end());
            if (o == img) {
              is_block = true;
              break;
            }
          }
          if (!is_block) return;
        }
      }
      result.push_back(assign);
      return;
    }
    for (int b = 0; b <= maxb + 1 && b < int(n); ++b) {
      assign[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  assign[0] = 0;
  rec(1, 0);
  return result;
}

}  // namespace oracle
