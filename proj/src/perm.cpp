#include "fixity/perm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fixity {

Perm::Perm(std::size_t degree) : img_(degree) {
  if (degree == 0) throw InputError("permutation degree must be at least 1");
  std::iota(img_.begin(), img_.end(), Point(0));
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  if (img_.empty()) throw InputError("permutation degree must be at least 1");
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw InputError("image table is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (Point x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::then(const Perm& other) const {
  if (other.degree() != degree())
    throw InputError("degree mismatch in composition");
  std::vector<Point> r(degree());
  for (Point x = 0; x < degree(); ++x) r[x] = other.img_[img_[x]];
  return Perm(std::move(r));
}

Perm operator*(const Perm& a, const Perm& b) { return a.then(b); }

Perm Perm::inverse() const {
  std::vector<Point> r(degree());
  for (Point x = 0; x < degree(); ++x) r[img_[x]] = x;
  return Perm(std::move(r));
}

Perm Perm::conjugated_by(const Perm& w) const {
  if (w.degree() != degree())
    throw InputError("degree mismatch in conjugation");
  // (w^{-1} * this * w)(x) = w(this(w^{-1}(x))), built without forming w^{-1}.
  std::vector<Point> r(degree());
  for (Point x = 0; x < degree(); ++x) r[w.img_[x]] = w.img_[img_[x]];
  return Perm(std::move(r));
}

Perm Perm::power(std::int64_t e) const {
  Perm base = e >= 0 ? *this : inverse();
  std::uint64_t k = e >= 0 ? std::uint64_t(e) : std::uint64_t(-e);
  Perm acc(degree());
  while (k > 0) {
    if (k & 1) acc = acc.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (std::uint32_t len : cycle_type()) {
    std::uint64_t g = std::gcd(ord, std::uint64_t(len));
    std::uint64_t q = ord / g;
    if (len != 0 && q > ~std::uint64_t(0) / len)
      throw ResourceError("element order exceeds 64-bit range");
    ord = q * len;
  }
  return ord;
}

std::vector<std::uint32_t> Perm::cycle_type() const {
  std::vector<bool> done(degree(), false);
  std::vector<std::uint32_t> type;
  for (Point x = 0; x < degree(); ++x) {
    if (done[x]) continue;
    std::uint32_t len = 0;
    Point y = x;
    do {
      done[y] = true;
      y = img_[y];
      ++len;
    } while (y != x);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<Point> Perm::fixed_points() const {
  std::vector<Point> fix;
  for (Point x = 0; x < degree(); ++x)
    if (img_[x] == x) fix.push_back(x);
  return fix;
}

std::vector<Point> Perm::support() const {
  std::vector<Point> sup;
  for (Point x = 0; x < degree(); ++x)
    if (img_[x] != x) sup.push_back(x);
  return sup;
}

std::size_t Perm::fix_count() const {
  std::size_t c = 0;
  for (Point x = 0; x < degree(); ++x)
    if (img_[x] == x) ++c;
  return c;
}

unsigned point_bits(std::size_t degree) {
  unsigned b = std::bit_width(std::uint64_t(degree - 1));
  return b == 0 ? 1 : b;
}

std::string pack_images(const std::vector<Point>& img, unsigned bits) {
  std::string out((img.size() * bits + 7) / 8, '\0');
  std::size_t pos = 0;
  for (Point v : img) {
    for (unsigned i = 0; i < bits; ++i, ++pos) {
      if (v & (1u << i)) out[pos >> 3] |= char(1 << (pos & 7));
    }
  }
  return out;
}

std::string Perm::key() const { return pack_images(img_, point_bits(degree())); }

}  // namespace fixity
