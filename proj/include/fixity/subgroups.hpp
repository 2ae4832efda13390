#pragma once

#include <vector>

#include "fixity/perm_group.hpp"

namespace fixity {

// g extended by one element (no-op when already a member).
PermGroup adjoin(const PermGroup& g, const Perm& extra);

// N_g(h). h must be a subgroup of g. Walks the conjugation orbit of h with
// witnesses; the Schreier elements of the orbit stabilizer generate the
// normalizer, which is verified against |g| = |orbit| * |N|.
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Limits& lim = {});

// a ∩ b. The smaller group is enumerated and filtered through the other's
// membership test.
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       const Limits& lim = {});

// Largest normal subgroup of g inside h: iterated intersection with
// conjugates, stopping as soon as the current candidate is normal.
PermGroup core(const PermGroup& g, const PermGroup& h, const Limits& lim = {});

// Smallest normal subgroup of g containing the seeds.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

bool is_normal_in(const PermGroup& g, const PermGroup& h);

// True when every generator pair commutes.
bool is_abelian(const PermGroup& g);

// Order is a power of two (trivial groups count as 2-groups).
bool is_2_group(const PermGroup& g);

// Largest power of two dividing the order.
std::uint64_t two_part(std::uint64_t n);

}  // namespace fixity
