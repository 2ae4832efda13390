#pragma once

#include <cstdint>
#include <vector>

#include "fixity/error.hpp"

namespace fixity {

// Arithmetic for the small finite fields bundled with the toolkit
// (q in {2,3,4,5,7,8,9,11,13,16}). Extension fields are represented by
// packed base-p coefficient vectors with log/antilog tables generated from
// hardcoded primitive polynomials; primitivity is re-verified on
// construction.
class SmallField {
 public:
  explicit SmallField(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return e_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }
  unsigned pow(unsigned a, std::int64_t e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  // A fixed primitive element.
  unsigned generator() const { return gen_; }

  bool is_square(unsigned a) const;

 private:
  unsigned q_, p_, e_, gen_;
  std::vector<unsigned> exp_;  // exp_[i] = gen^i, length q-1
  std::vector<int> log_;       // log_[x] for x != 0
};

}  // namespace fixity
