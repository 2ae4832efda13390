#include "fixity/classes.hpp"

#include <algorithm>
#include <deque>

#include "fixity/error.hpp"

namespace fixity {

namespace {

void check_class_bound(const PermGroup& g, const Limits& lim) {
  if (!g.order().fits_u64() || g.order_u64() > lim.max_operation_order)
    throw ResourceError("conjugacy classes: group order " +
                        g.order().to_string() + " exceeds bound " +
                        std::to_string(lim.max_operation_order));
}

}  // namespace

ConjugacyClasses ConjugacyClasses::compute(const PermGroup& g,
                                           const Limits& lim) {
  check_class_bound(g, lim);
  ConjugacyClasses out;
  out.group_ = std::make_shared<PermGroup>(g);

  const std::vector<Perm> gens = g.generators();
  std::unordered_set<std::string> covered;
  covered.reserve(g.order_u64() * 2);
  std::uint64_t covered_count = 0;

  auto expand_class = [&](const Perm& seed) {
    ClassData cd{seed, 0, 0, seed.order()};
    std::vector<Perm> queue;
    covered.insert(seed.key());
    queue.push_back(seed);
    while (!queue.empty()) {
      Perm cur = std::move(queue.back());
      queue.pop_back();
      ++cd.size;
      if (cur < cd.rep) cd.rep = cur;
      for (const Perm& s : gens) {
        Perm img = cur.conjugated_by(s);
        std::string k = img.key();
        if (covered.insert(std::move(k)).second) queue.push_back(std::move(img));
      }
    }
    covered_count += cd.size;
    out.classes_.push_back(std::move(cd));
  };

  g.for_each_element([&](const Perm& p) {
    if (!covered.count(p.key())) expand_class(p);
    return covered_count < g.order_u64();
  });

  if (covered_count != g.order_u64())
    throw InternalError("class expansion did not cover the group");

  const std::uint64_t n = g.order_u64();
  for (ClassData& cd : out.classes_) {
    if (n % cd.size != 0)
      throw InternalError("class size does not divide the group order");
    cd.centralizer_order = n / cd.size;
  }

  std::sort(out.classes_.begin(), out.classes_.end(),
            [](const ClassData& a, const ClassData& b) {
              if (a.element_order != b.element_order)
                return a.element_order < b.element_order;
              if (a.size != b.size) return a.size < b.size;
              return a.rep < b.rep;
            });

  for (std::size_t i = 0; i < out.classes_.size(); ++i)
    out.signature_[{out.classes_[i].element_order,
                    out.classes_[i].rep.cycle_type()}]
        .push_back(i);
  return out;
}

const std::unordered_set<std::string>& ConjugacyClasses::class_elements(
    std::size_t i) const {
  auto it = element_cache_.find(i);
  if (it != element_cache_.end()) return *it->second;
  auto set = std::make_unique<std::unordered_set<std::string>>();
  set->reserve(classes_[i].size * 2);
  const std::vector<Perm>& gens = group_->generators();
  std::vector<Perm> queue;
  set->insert(classes_[i].rep.key());
  queue.push_back(classes_[i].rep);
  while (!queue.empty()) {
    Perm cur = std::move(queue.back());
    queue.pop_back();
    for (const Perm& s : gens) {
      Perm img = cur.conjugated_by(s);
      std::string k = img.key();
      if (set->insert(std::move(k)).second) queue.push_back(std::move(img));
    }
  }
  if (set->size() != classes_[i].size)
    throw InternalError("class re-expansion size mismatch");
  auto& slot = element_cache_[i];
  slot = std::move(set);
  return *slot;
}

std::size_t ConjugacyClasses::class_of(const Perm& p) const {
  if (!group_->contains(p)) throw InputError("class_of: element not in group");
  auto it = signature_.find({p.order(), p.cycle_type()});
  if (it == signature_.end())
    throw InternalError("class_of: no class with matching signature");
  if (it->second.size() == 1) return it->second[0];
  std::string k = p.key();
  for (std::size_t idx : it->second)
    if (class_elements(idx).count(k)) return idx;
  throw InternalError("class_of: signature candidates exhausted");
}

std::size_t ConjugacyClasses::power_class(std::size_t i, std::uint64_t e) const {
  return class_of(classes_.at(i).rep.power(std::int64_t(
      e % std::max<std::uint64_t>(1, classes_[i].element_order))));
}

std::size_t ConjugacyClasses::inverse_class(std::size_t i) const {
  return class_of(classes_.at(i).rep.inverse());
}

void ConjugacyClasses::drop_element_cache() const { element_cache_.clear(); }

std::optional<Perm> conjugating_element(const PermGroup& g, const Perm& a,
                                        const Perm& b, const Limits& lim) {
  if (!g.contains(a) || !g.contains(b))
    throw InputError("conjugating_element: element not in group");
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  if (a == b) return Perm(g.degree());

  // Walk the conjugation orbit of a carrying witnesses.
  std::unordered_map<std::string, Perm> witness;
  std::deque<Perm> queue;  // orbit elements, witness looked up by key
  witness.emplace(a.key(), Perm(g.degree()));
  queue.push_back(a);
  const std::string target = b.key();
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    Perm w = witness.at(cur.key());
    for (const Perm& s : g.generators()) {
      Perm img = cur.conjugated_by(s);
      std::string k = img.key();
      if (witness.count(k)) continue;
      Perm w2 = w.then(s);
      if (k == target) return w2;
      witness.emplace(std::move(k), std::move(w2));
      queue.push_back(std::move(img));
      if (witness.size() > lim.max_operation_order)
        throw ResourceError("conjugating_element: orbit exceeds bound");
    }
  }
  return std::nullopt;
}

PermGroup centralizer(const PermGroup& g, const Perm& p, const Limits& lim) {
  if (!g.contains(p)) throw InputError("centralizer: element not in group");
  check_class_bound(g, lim);

  std::unordered_map<std::string, Perm> witness;  // orbit key -> u, p^u = elem
  std::deque<Perm> queue;
  witness.emplace(p.key(), Perm(g.degree()));
  queue.push_back(p);

  PermGroup cent = PermGroup::trivial(g.degree());
  auto grow = [&](const Perm& c) {
    if (cent.contains(c)) return;
    std::vector<Perm> gens = cent.generators();
    gens.push_back(c);
    cent = PermGroup::generated_by(std::move(gens));
  };

  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    Perm u = witness.at(cur.key());
    for (const Perm& s : g.generators()) {
      Perm img = cur.conjugated_by(s);
      std::string k = img.key();
      auto it = witness.find(k);
      if (it == witness.end()) {
        witness.emplace(std::move(k), u.then(s));
        queue.push_back(std::move(img));
      } else {
        grow(u.then(s).then(it->second.inverse()));
      }
    }
  }

  if (!g.order().fits_u64() ||
      g.order_u64() != witness.size() * cent.order_u64())
    throw InternalError("centralizer: orbit-stabilizer mismatch");
  return cent;
}

}  // namespace fixity
