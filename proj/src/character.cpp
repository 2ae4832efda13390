#include "fixity/character.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fixity/error.hpp"

namespace fixity {

namespace {

constexpr double kTol = 1e-6;

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^31

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p = 1 (mod m) with p*p > 4*order and p > bound
u64 working_prime(u64 m, u64 order) {
  for (u64 p = m + 1;; p += m) {
    if (p * p <= 4 * order) continue;
    if (is_prime_u64(p)) return p;
    if (p > (u64(1) << 40)) throw InternalError("no working prime found");
  }
}

u64 primitive_root(u64 p) {
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row major

Vec mat_apply(const Mat& a, const Vec& v, u64 p) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      acc = (acc + mulmod(a[i][j], v[j], p)) % p;
    out[i] = acc;
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b, u64 p) {
  std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      u64 v = a[i][l];
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = (c[i][j] + mulmod(v, b[l][j], p)) % p;
    }
  return c;
}

// monic characteristic polynomial coefficients c[0..n], c[n]=1, by the
// trace recursion (valid since p exceeds the matrix dimension)
Vec char_poly(const Mat& a, u64 p) {
  std::size_t n = a.size();
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  Vec coeff(n + 1, 0);
  coeff[n] = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    m = mat_mul(a, m, p);
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = (tr + m[i][i]) % p;
    u64 cj = mulmod(p - tr % p, invmod(j % p, p), p);
    coeff[n - j] = cj;
    for (std::size_t i = 0; i < n; ++i) m[i][i] = (m[i][i] + cj) % p;
  }
  return coeff;
}

std::vector<u64> poly_roots(const Vec& coeff, u64 p) {
  std::vector<u64> roots;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = coeff.size(); i-- > 0;)
      acc = (mulmod(acc, x, p) + coeff[i]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// basis of the null space of a (rows x cols), vectors of length cols
std::vector<Vec> null_space(Mat a, u64 p) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    u64 inv = invmod(a[r][c], p);
    for (std::size_t j = 0; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = (a[i][j] + mulmod(p - f, a[r][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// coordinates of w in the span of basis (as columns); throws if outside
Vec solve_in_span(const std::vector<Vec>& basis, const Vec& w, u64 p) {
  std::size_t k = w.size(), dim = basis.size();
  Mat aug(k, Vec(dim + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = basis[j][i];
    aug[i][dim] = w[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < dim && r < k; ++c) {
    std::size_t piv = k;
    for (std::size_t i = r; i < k; ++i)
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == k) continue;
    std::swap(aug[r], aug[piv]);
    u64 inv = invmod(aug[r][c], p);
    for (std::size_t j = 0; j <= dim; ++j) aug[r][j] = mulmod(aug[r][j], inv, p);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      u64 f = aug[i][c];
      for (std::size_t j = 0; j <= dim; ++j)
        aug[i][j] = (aug[i][j] + mulmod(p - f, aug[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < k; ++i)
    if (aug[i][dim] != 0)
      throw InternalError("character table: subspace is not invariant");
  Vec coords(dim, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = aug[i][dim];
  return coords;
}

}  // namespace

CharacterTable character_table(const PermGroup& g, const ConjugacyClasses& cls,
                               const Limits& lim) {
  if (!g.order().fits_u64() || g.order_u64() > lim.max_operation_order ||
      g.order_u64() > lim.max_enumeration)
    throw ResourceError("character_table: group order " +
                        g.order().to_string() + " exceeds bound");
  const u64 order = g.order_u64();
  const std::size_t k = cls.count();

  CharacterTable t;
  t.group_order = order;
  for (std::size_t i = 0; i < k; ++i) {
    t.class_sizes.push_back(cls.at(i).size);
    t.element_orders.push_back(cls.at(i).element_order);
  }
  for (std::size_t i = 0; i < k; ++i)
    t.inverse_class.push_back(cls.inverse_class(i));

  u64 exponent = 1;
  for (std::size_t i = 0; i < k; ++i)
    exponent = std::lcm(exponent, t.element_orders[i]);
  const u64 p = working_prime(exponent, order);
  t.prime = p;

  // full element -> class map, built by expanding each class once
  std::unordered_map<std::string, std::uint32_t> class_map;
  class_map.reserve(order * 2);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Perm> queue{cls.at(i).rep};
    class_map.emplace(cls.at(i).rep.key(), i);
    while (!queue.empty()) {
      Perm cur = std::move(queue.back());
      queue.pop_back();
      for (const Perm& s : g.generators()) {
        Perm img = cur.conjugated_by(s);
        if (class_map.emplace(img.key(), i).second) queue.push_back(std::move(img));
      }
    }
  }
  if (class_map.size() != order)
    throw InternalError("character_table: class map does not cover the group");

  // class multiplication coefficients: m[i][j][l] counts pairs in
  // C_i x C_j multiplying to the representative of C_l
  std::vector<Mat> m(k, Mat(k, Vec(k, 0)));
  g.for_each_element([&](const Perm& x) {
    std::uint32_t i = class_map.at(x.key());
    Perm xinv = x.inverse();
    for (std::size_t l = 0; l < k; ++l) {
      Perm y = xinv.then(cls.at(l).rep);
      std::uint32_t j = class_map.at(y.key());
      ++m[i][j][l];
    }
    return true;
  });
  class_map.clear();
  for (auto& mi : m)
    for (auto& row : mi)
      for (auto& v : row) v %= p;

  // split the coordinate space into common eigenvectors of all class
  // matrices; each one-dimensional piece is a central character
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t mi = 1; mi < k; ++mi) {
    bool all_split = true;
    for (const auto& sp : spaces)
      if (sp.size() > 1) all_split = false;
    if (all_split) break;
    std::vector<std::vector<Vec>> next;
    for (auto& sp : spaces) {
      if (sp.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      const std::size_t dim = sp.size();
      Mat b(dim, Vec(dim, 0));
      for (std::size_t j = 0; j < dim; ++j) {
        Vec w = mat_apply(m[mi], sp[j], p);
        Vec coords = solve_in_span(sp, w, p);
        for (std::size_t i = 0; i < dim; ++i) b[i][j] = coords[i];
      }
      for (u64 root : poly_roots(char_poly(b, p), p)) {
        Mat shifted = b;
        for (std::size_t i = 0; i < dim; ++i)
          shifted[i][i] = (shifted[i][i] + p - root) % p;
        std::vector<Vec> sub;
        for (const Vec& coords : null_space(shifted, p)) {
          Vec global(k, 0);
          for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < k; ++i)
              global[i] = (global[i] + mulmod(coords[j], sp[j][i], p)) % p;
          sub.push_back(std::move(global));
        }
        if (!sub.empty()) next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k)
    throw InternalError("character_table: eigenspace splitting incomplete");

  // central characters, normalized at the identity class
  std::vector<Vec> omegas;
  for (const auto& sp : spaces) {
    Vec v = sp[0];
    if (v[0] == 0)
      throw InternalError("character_table: eigenvector vanishes at identity");
    u64 inv = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    omegas.push_back(std::move(v));
  }

  // degrees from the orthogonality relation, then the value matrix mod p
  struct Irr {
    unsigned degree;
    Vec modp;
  };
  std::vector<Irr> irrs;
  u64 degree_square_sum = 0;
  for (const Vec& w : omegas) {
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      u64 term = mulmod(w[i], w[t.inverse_class[i]], p);
      s = (s + mulmod(term, invmod(t.class_sizes[i] % p, p), p)) % p;
    }
    u64 d2 = mulmod(order % p, invmod(s, p), p);
    u64 d = 0;
    for (u64 r = 1; r <= p / 2; ++r)
      if (mulmod(r, r, p) == d2) {
        d = r;
        break;
      }
    if (d == 0)
      throw InternalError("character_table: degree is not a quadratic residue");
    degree_square_sum += d * d;
    Irr irr;
    irr.degree = unsigned(d);
    irr.modp.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      irr.modp[i] =
          mulmod(mulmod(w[i], d % p, p), invmod(t.class_sizes[i] % p, p), p);
    irrs.push_back(std::move(irr));
  }
  if (degree_square_sum != order)
    throw InternalError("character_table: degrees do not sum to the order");

  std::sort(irrs.begin(), irrs.end(), [](const Irr& a, const Irr& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.modp < b.modp;
  });
  if (irrs[0].degree != 1 ||
      std::count(irrs[0].modp.begin(), irrs[0].modp.end(), 1) != int(k))
    throw InternalError("character_table: trivial character missing");

  // lift to complex values through root-of-unity multiplicities
  const u64 r0 = primitive_root(p);
  const double pi2 = 8.0 * std::atan(1.0);
  std::vector<std::vector<std::size_t>> power_classes(k);
  for (std::size_t i = 0; i < k; ++i) {
    u64 o = t.element_orders[i];
    power_classes[i].resize(o);
    for (u64 e = 0; e < o; ++e) power_classes[i][e] = cls.power_class(i, e);
  }

  for (const Irr& irr : irrs) {
    t.degrees.push_back(irr.degree);
    t.values_modp.push_back(irr.modp);
    std::vector<std::complex<double>> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      const u64 o = t.element_orders[i];
      const u64 z = powmod(r0, (p - 1) / o, p);
      const u64 zinv = invmod(z, p);
      std::complex<double> val = 0.0;
      u64 msum = 0;
      for (u64 l = 0; l < o; ++l) {
        u64 acc = 0;
        for (u64 e = 0; e < o; ++e)
          acc = (acc +
                 mulmod(irr.modp[power_classes[i][e]], powmod(zinv, l * e, p),
                        p)) %
                p;
        u64 mult = mulmod(acc, invmod(o % p, p), p);
        if (mult > irr.degree)
          throw InternalError("character_table: bad root multiplicity");
        msum += mult;
        val += double(mult) *
               std::exp(std::complex<double>(0.0, pi2 * double(l) / double(o)));
      }
      if (msum != irr.degree)
        throw InternalError("character_table: multiplicities do not sum to degree");
      row[i] = val;
    }
    t.values.push_back(std::move(row));
  }

  // orthogonality validation on the numeric side
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      std::complex<double> ip = 0.0;
      for (std::size_t i = 0; i < k; ++i)
        ip += double(t.class_sizes[i]) * t.values[a][i] *
              std::conj(t.values[b][i]);
      ip /= double(order);
      double expect = (a == b) ? 1.0 : 0.0;
      if (std::abs(ip - expect) > kTol)
        throw InternalError("character_table: row orthogonality failed");
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::complex<double> ip = 0.0;
      for (std::size_t a = 0; a < k; ++a)
        ip += t.values[a][i] * std::conj(t.values[a][j]);
      double expect = (i == j) ? double(order) / double(t.class_sizes[i]) : 0.0;
      if (std::abs(ip - expect) > kTol * double(order))
        throw InternalError("character_table: column orthogonality failed");
    }

  return t;
}

std::vector<int> fs_indicators(const CharacterTable& t,
                               const ConjugacyClasses& cls) {
  const u64 p = t.prime;
  std::vector<std::size_t> sq(t.class_count());
  for (std::size_t i = 0; i < t.class_count(); ++i)
    sq[i] = cls.power_class(i, 2);
  std::vector<int> out;
  for (std::size_t a = 0; a < t.irr_count(); ++a) {
    u64 s = 0;
    for (std::size_t i = 0; i < t.class_count(); ++i)
      s = (s + mulmod(t.class_sizes[i] % p, t.values_modp[a][sq[i]], p)) % p;
    s = mulmod(s, invmod(t.group_order % p, p), p);
    if (s == 0)
      out.push_back(0);
    else if (s == 1)
      out.push_back(1);
    else if (s == p - 1)
      out.push_back(-1);
    else
      throw InternalError("fs_indicators: indicator is not in {-1,0,1}");
  }
  if (out[0] != 1)
    throw InternalError("fs_indicators: trivial character must have +1");
  return out;
}

std::uint64_t involution_count(const CharacterTable& t,
                               const std::vector<int>& indicators) {
  std::int64_t total = 0;
  for (std::size_t a = 0; a < t.irr_count(); ++a)
    total += std::int64_t(indicators[a]) * std::int64_t(t.degrees[a]);
  if (total < 1) throw InternalError("involution_count: non-positive count");
  return std::uint64_t(total);
}

PermCharacter permutation_character(const CharacterTable& t,
                                    const ConjugacyClasses& cls) {
  const u64 p = t.prime;
  PermCharacter pc;
  for (std::size_t i = 0; i < t.class_count(); ++i)
    pc.fix_counts.push_back(cls.at(i).rep.fix_count());

  std::uint64_t weighted = 0;
  for (std::size_t a = 0; a < t.irr_count(); ++a) {
    std::complex<double> ip = 0.0;
    u64 ip_modp = 0;
    for (std::size_t i = 0; i < t.class_count(); ++i) {
      ip += double(t.class_sizes[i]) * double(pc.fix_counts[i]) *
            std::conj(t.values[a][i]);
      u64 term = mulmod(t.class_sizes[i] % p, pc.fix_counts[i] % p, p);
      ip_modp =
          (ip_modp + mulmod(term, t.values_modp[a][t.inverse_class[i]], p)) % p;
    }
    ip /= double(t.group_order);
    ip_modp = mulmod(ip_modp, invmod(t.group_order % p, p), p);
    double re = ip.real();
    long long rounded = std::llround(re);
    if (std::abs(ip.imag()) > kTol || std::abs(re - double(rounded)) > kTol ||
        rounded < 0)
      throw InternalError("permutation_character: non-integral multiplicity");
    if (u64(rounded) % p != ip_modp)
      throw InternalError("permutation_character: modular cross-check failed");
    pc.multiplicities.push_back(u64(rounded));
    weighted += u64(rounded) * t.degrees[a];
  }
  if (weighted != pc.fix_counts[0])
    throw InternalError("permutation_character: degrees do not add up");
  return pc;
}

double ls_fpr_bound(const CharacterTable& t, std::size_t class_index) {
  double best = -1.0;
  for (std::size_t a = 0; a < t.irr_count(); ++a) {
    if (t.degrees[a] == 1) continue;
    double v = (1.0 + std::abs(t.values[a][class_index])) /
               (1.0 + double(t.degrees[a]));
    best = std::max(best, v);
  }
  return best < 0 ? 1.0 : best;
}

std::string export_table(const CharacterTable& t) {
  std::ostringstream os;
  os << "order " << t.group_order << " classes " << t.class_count() << "\n";
  os << "sizes";
  for (u64 s : t.class_sizes) os << ' ' << s;
  os << "\norders";
  for (u64 o : t.element_orders) os << ' ' << o;
  os << "\n";
  os.setf(std::ios::fixed);
  os.precision(3);
  for (std::size_t a = 0; a < t.irr_count(); ++a) {
    os << "chi" << a << " deg " << t.degrees[a] << " :";
    for (std::size_t i = 0; i < t.class_count(); ++i) {
      const auto& v = t.values[a][i];
      long long re = std::llround(v.real());
      if (std::abs(v.imag()) < kTol && std::abs(v.real() - double(re)) < kTol)
        os << ' ' << re;
      else if (std::abs(v.imag()) < kTol)
        os << ' ' << v.real();
      else
        os << ' ' << v.real() << (v.imag() >= 0 ? "+" : "") << v.imag() << 'i';
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace fixity
