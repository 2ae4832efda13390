#include "fixity/gf.hpp"

namespace fixity {

namespace {

struct FieldSpec {
  unsigned q, p, e;
  // monic primitive polynomial x^e + c[e-1] x^(e-1) + ... + c[0], packed as
  // base-p digits of the lower coefficients
  std::vector<unsigned> poly;
};

FieldSpec spec_for(unsigned q) {
  switch (q) {
    case 2: return {2, 2, 1, {}};
    case 3: return {3, 3, 1, {}};
    case 5: return {5, 5, 1, {}};
    case 7: return {7, 7, 1, {}};
    case 11: return {11, 11, 1, {}};
    case 13: return {13, 13, 1, {}};
    case 4: return {4, 2, 2, {1, 1}};        // x^2 + x + 1
    case 8: return {8, 2, 3, {1, 1, 0}};     // x^3 + x + 1
    case 9: return {9, 3, 2, {2, 2}};        // x^2 + 2x + 2
    case 16: return {16, 2, 4, {1, 1, 0, 0}};  // x^4 + x + 1
    default:
      throw InputError("unsupported field size " + std::to_string(q));
  }
}

unsigned digit(unsigned x, unsigned p, unsigned i) {
  for (unsigned k = 0; k < i; ++k) x /= p;
  return x % p;
}

}  // namespace

SmallField::SmallField(unsigned q) {
  FieldSpec s = spec_for(q);
  q_ = s.q;
  p_ = s.p;
  e_ = s.e;

  auto add_packed = [&](unsigned a, unsigned b) {
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += ((digit(a, p_, i) + digit(b, p_, i)) % p_) * mult;
      mult *= p_;
    }
    return out;
  };
  auto scale_packed = [&](unsigned a, unsigned c) {
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += ((digit(a, p_, i) * c) % p_) * mult;
      mult *= p_;
    }
    return out;
  };
  // multiply by the root of the defining polynomial: shift digits and reduce
  auto mul_alpha = [&](unsigned a) {
    unsigned top = digit(a, p_, e_ - 1);
    unsigned shifted = (a - top * [&] {
                          unsigned m = 1;
                          for (unsigned i = 0; i + 1 < e_; ++i) m *= p_;
                          return m;
                        }()) *
                       p_;
    if (top == 0) return shifted;
    unsigned corr = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
      corr += ((p_ - s.poly[i] % p_) % p_ * top % p_) * mult;
      mult *= p_;
    }
    return add_packed(shifted, corr);
  };
  (void)scale_packed;

  if (e_ == 1) {
    // prime field: find the least primitive root (1 for the 2-element field)
    gen_ = 1;
    for (unsigned g = 2; g < q_; ++g) {
      unsigned x = 1;
      unsigned count = 0;
      do {
        x = x * g % q_;
        ++count;
      } while (x != 1);
      if (count == q_ - 1) {
        gen_ = g;
        break;
      }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      log_[x] = int(i);
      x = x * gen_ % q_;
    }
  } else {
    gen_ = p_;  // the packed encoding of the root itself
    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      if (log_[x] >= 0)
        throw InternalError("field polynomial is not primitive");
      exp_[i] = x;
      log_[x] = int(i);
      x = mul_alpha(x);
    }
    if (x != 1) throw InternalError("field generator order mismatch");
  }
}

unsigned SmallField::add(unsigned a, unsigned b) const {
  if (e_ == 1) return (a + b) % q_;
  unsigned out = 0, mult = 1, x = a, y = b;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return out;
}

unsigned SmallField::neg(unsigned a) const {
  if (e_ == 1) return (q_ - a) % q_;
  unsigned out = 0, mult = 1, x = a;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * mult;
    mult *= p_;
    x /= p_;
  }
  return out;
}

unsigned SmallField::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(unsigned(log_[a]) + unsigned(log_[b])) % (q_ - 1)];
}

unsigned SmallField::inv(unsigned a) const {
  if (a == 0) throw InputError("field inverse of zero");
  return exp_[(q_ - 1 - unsigned(log_[a])) % (q_ - 1)];
}

unsigned SmallField::pow(unsigned a, std::int64_t e) const {
  if (a == 0) {
    if (e <= 0) throw InputError("0 to a non-positive power");
    return 0;
  }
  std::int64_t m = std::int64_t(q_) - 1;
  std::int64_t idx = (std::int64_t(log_[a]) * (e % m)) % m;
  if (idx < 0) idx += m;
  return exp_[unsigned(idx)];
}

bool SmallField::is_square(unsigned a) const {
  if (a == 0) return true;
  return (q_ % 2 == 0) || unsigned(log_[a]) % 2 == 0;
}

}  // namespace fixity
