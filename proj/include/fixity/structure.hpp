#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixity/classes.hpp"
#include "fixity/perm_group.hpp"

namespace fixity {

std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

// An invariant partition of the domain into equal-size blocks. Blocks are
// kept in canonical order (sorted by smallest member), so fingerprints are
// stable across construction paths.
struct BlockSystem {
  std::vector<std::uint32_t> block_of;      // point -> block index
  std::vector<std::vector<Point>> blocks;   // each sorted; sorted by min point

  std::size_t degree() const { return block_of.size(); }
  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks[0].size(); }
  bool is_singletons() const { return block_count() == degree(); }
  bool is_one_block() const { return block_count() == 1; }
  bool is_proper() const { return !is_singletons() && !is_one_block(); }

  // Canonical byte string; equal iff the partitions are equal.
  std::string fingerprint() const;

  static BlockSystem from_block_of(const std::vector<std::uint32_t>& raw);
  static BlockSystem singletons(std::size_t degree);
};

// Partition validity plus blockwise invariance under every generator.
bool is_invariant(const PermGroup& g, const BlockSystem& s);

// Finest invariant partition in which a and b share a block (union-find
// congruence closure over generator images).
BlockSystem finest_block_system_with_pair(const PermGroup& g, Point a, Point b);

// All minimal (finest) proper invariant partitions; empty iff primitive.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

// All maximal proper invariant partitions, found by quotienting through
// minimal systems and pulling back. Each corresponds to a maximal subgroup
// sandwiched between a point stabilizer and the group.
std::vector<BlockSystem> maximal_block_systems(const PermGroup& g);

// The full proper part of the block-system lattice (desk-scale sizes only).
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

bool is_primitive(const PermGroup& g);

// Permutation induced on block indices.
Perm block_image(const Perm& p, const BlockSystem& s);

struct QuotientAction {
  PermGroup image;   // action on block indices
  PermGroup kernel;  // elements fixing every block setwise
};

// Action on the blocks of an invariant partition; |g| = |kernel| * |image|.
QuotientAction quotient_action(const PermGroup& g, const BlockSystem& s);

// Orbit of one block under the group; must tile the domain exactly.
BlockSystem block_closure(const PermGroup& g, std::vector<Point> block);

// Sylow 2-subgroup by normalizer ascent: repeatedly adjoin a 2-element of
// the normalizer of the current 2-subgroup. The result is always verified
// against the 2-part of the order. `start` may seed the ascent with a
// 2-subgroup that the result must contain.
PermGroup sylow2(const PermGroup& g, std::uint64_t seed, const Limits& lim = {});
PermGroup sylow2_containing(const PermGroup& g, const PermGroup& start,
                            std::uint64_t seed, const Limits& lim = {});

// Largest normal 2-subgroup: core of a Sylow 2-subgroup.
PermGroup o2(const PermGroup& g, std::uint64_t seed, const Limits& lim = {});

// Blocks ω^Q for Q a Sylow 2-subgroup containing the (2-group) stabilizer
// of ω; singletons exactly when the stabilizer is already Sylow.
BlockSystem sylow2_overgroup_blocks(const PermGroup& g, Point omega,
                                    std::uint64_t seed, const Limits& lim = {});

// All minimal normal subgroups, as minimized normal closures of prime-order
// class representatives.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                const Limits& lim = {});

PermGroup socle(const PermGroup& g, const Limits& lim = {});

// Every minimal normal subgroup is transitive.
bool is_quasiprimitive(const PermGroup& g, const Limits& lim = {});

// Quasiprimitive type by socle shape: abelian socle (HA), simple socle
// (AS), a power of a non-abelian simple group (PA), anything else OTHER.
struct OnsType {
  enum class Tag { HA, AS, PA, OTHER };
  Tag tag = Tag::OTHER;
  int socle_factor_count = 0;
  Count128 socle_order;
};

OnsType ons_type(const PermGroup& g, const Limits& lim = {});
const char* to_string(OnsType::Tag tag);

}  // namespace fixity
