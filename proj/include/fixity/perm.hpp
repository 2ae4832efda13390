#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixity/error.hpp"

namespace fixity {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1}, stored as its image table.
//
// Composition is left-to-right everywhere in this library: (a * b) means
// "apply a, then b", so x^(a*b) = (x^a)^b. All higher modules inherit this
// convention; external text is 1-based (see cycles.hpp).
class Perm {
 public:
  // Identity on `degree` points.
  explicit Perm(std::size_t degree);

  // Takes ownership of an image table; validates it is a bijection.
  explicit Perm(std::vector<Point> images);

  std::size_t degree() const { return img_.size(); }

  Point operator[](Point x) const { return img_[x]; }

  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;

  // x -> other(this(x)).
  Perm then(const Perm& other) const;

  Perm inverse() const;

  // this^w = w^{-1} * this * w.
  Perm conjugated_by(const Perm& w) const;

  Perm power(std::int64_t e) const;

  // Order as a permutation (lcm of cycle lengths); throws ResourceError on
  // 64-bit overflow, which cannot happen below degree ~100.
  std::uint64_t order() const;

  // Cycle lengths including fixed points, sorted descending.
  std::vector<std::uint32_t> cycle_type() const;

  std::vector<Point> fixed_points() const;
  std::vector<Point> support() const;
  std::size_t fix_count() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // Compact byte key for hashing (bit-packed image table).
  std::string key() const;

 private:
  std::vector<Point> img_;
};

Perm operator*(const Perm& a, const Perm& b);

// Number of bits needed per point at a given degree.
unsigned point_bits(std::size_t degree);

// Packs an image table into `bits`-wide little-endian bitfields.
std::string pack_images(const std::vector<Point>& img, unsigned bits);

}  // namespace fixity
