#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fixity/error.hpp"

namespace fixity {

// Exact rational number. Fixed-point ratios and the theorem thresholds are
// all rationals with small numerators and denominators; floating point is
// never used for a verdict.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}

  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InputError("ratio with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Ratio zero() { return Ratio(0, 1); }
  static Ratio one() { return Ratio(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Ratio& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Ratio& o) const { return !(*this == o); }
  bool operator<(const Ratio& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Ratio& o) const {
    return (__int128)num_ * o.den_ <= (__int128)o.num_ * den_;
  }
  bool operator>(const Ratio& o) const { return o < *this; }
  bool operator>=(const Ratio& o) const { return o <= *this; }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const { return double(num_) / double(den_); }

  // Parses "p/q" or a bare integer "p".
  static Ratio parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Ratio(std::stoll(text), 1);
      return Ratio(std::stoll(text.substr(0, slash)),
                   std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw InputError("cannot parse ratio '" + text + "'");
    }
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace fixity
