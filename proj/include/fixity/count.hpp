#pragma once

#include <cstdint>
#include <string>

#include "fixity/error.hpp"

namespace fixity {

// Saturating 128-bit unsigned counter for group orders. Orders in the
// bundled corpus stay far below 2^64; the saturation flag keeps products of
// transversal sizes honest for arbitrary user input instead of silently
// wrapping.
class Count128 {
 public:
  Count128() : v_(1), saturated_(false) {}
  explicit Count128(std::uint64_t v) : v_(v), saturated_(false) {}

  static Count128 one() { return Count128(1); }

  void mul(std::uint64_t m) {
    if (saturated_) return;
    if (m != 0 && v_ > kMax / m) {
      saturated_ = true;
      v_ = kMax;
    } else {
      v_ *= m;
    }
  }

  bool saturated() const { return saturated_; }

  bool fits_u64() const {
    return !saturated_ && v_ <= ~std::uint64_t(0);
  }

  std::uint64_t as_u64() const {
    if (!fits_u64()) throw ResourceError("group order exceeds 64-bit range");
    return static_cast<std::uint64_t>(v_);
  }

  unsigned __int128 raw() const { return v_; }

  bool operator==(const Count128& o) const {
    return v_ == o.v_ && saturated_ == o.saturated_;
  }
  bool operator==(std::uint64_t o) const { return !saturated_ && v_ == o; }

  std::string to_string() const {
    if (saturated_) return "overflow";
    unsigned __int128 x = v_;
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
      s.push_back(char('0' + int(x % 10)));
      x /= 10;
    }
    return std::string(s.rbegin(), s.rend());
  }

 private:
  static constexpr unsigned __int128 kMax = ~(unsigned __int128)0;
  unsigned __int128 v_;
  bool saturated_;
};

}  // namespace fixity
