#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixity/actions.hpp"
#include "fixity/fixity.hpp"
#include "fixity/subgroups.hpp"
#include "helpers.hpp"

using fixity::ConjugacyClasses;
using fixity::Perm;
using fixity::PermGroup;
using fixity::Point;
using fixity::Ratio;
using oracle::cyc;

namespace {

PermGroup sym(unsigned n) {
  std::vector<Point> c(n), t(n);
  for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n, t[i] = i;
  std::swap(t[0], t[1]);
  return PermGroup::generated_by({Perm(std::move(c)), Perm(std::move(t))});
}

// Independent oracle: count n-by-n upper unitriangular matrices over the
// 2-element field whose fixed space is a hyperplane, i.e. rank(M - I) = 1,
// by boolean row reduction. Strict upper-triangular entries enumerated as a
// bitmask.
std::uint64_t brute_transvections(unsigned n) {
  const unsigned cells = n * (n - 1) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
    // rows of M - I: only the strict upper part is populated
    std::vector<std::uint32_t> rows(n, 0);
    unsigned bit = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j, ++bit)
        if (mask & (std::uint64_t(1) << bit)) rows[i] |= (1u << j);
    // boolean row reduction
    unsigned rank = 0;
    for (unsigned col = 0; col < n; ++col) {
      unsigned pivot = n;
      for (unsigned r = rank; r < n; ++r)
        if (rows[r] & (1u << col)) {
          pivot = r;
          break;
        }
      if (pivot == n) continue;
      std::swap(rows[rank], rows[pivot]);
      for (unsigned r = 0; r < n; ++r)
        if (r != rank && (rows[r] & (1u << col))) rows[r] ^= rows[rank];
      ++rank;
    }
    if (rank == 1) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("fpr_direct") {
  auto s3 = sym(3);
  CHECK(fixity::fpr_direct(s3, Perm(3)) == Ratio(1, 1));
  CHECK(fixity::fpr_direct(s3, cyc("(1,2)", 3)) == Ratio(1, 3));

  auto v = PermGroup::generated_by({cyc("(1,2)(3,4)", 4)});
  CHECK(fixity::fpr_direct(v, cyc("(1,2)(3,4)", 4)) == Ratio(0, 1));

  CHECK_THROWS_AS(fixity::fpr_direct(v, cyc("(1,2)", 4)), fixity::InputError);
}

TEST_CASE("fixity_profile: basic shapes") {
  auto c5 = PermGroup::generated_by({cyc("(1,2,3,4,5)", 5)});
  auto p1 = fixity::fixity_profile(c5);
  CHECK(p1.mindeg == 5);  // semiregular
  CHECK(p1.fixity == 0);
  CHECK(p1.max_fpr == Ratio(0, 1));

  auto p2 = fixity::fixity_profile(sym(3));
  CHECK(p2.mindeg == 2);
  CHECK(p2.fixity == 1);
  CHECK(p2.max_fpr == Ratio(1, 3));
  CHECK(p2.rows[p2.argmax_class].cls.element_order == 2);

  // trivial group: fixity over an empty set of classes
  auto p3 = fixity::fixity_profile(PermGroup::trivial(4));
  CHECK(p3.mindeg == 4);
  CHECK(p3.fixity == 0);
}

TEST_CASE("fixity_profile: PSL(2,7) on Sylow-2 cosets has mindeg >= 14") {
  auto g = fixity::mobius_action(7, fixity::MobiusFlavor::PSL);
  REQUIRE(g.order() == 168);
  auto p = fixity::sylow2(g, 1);
  REQUIRE(p.order() == 8);
  auto act = fixity::coset_action(g, p);
  REQUIRE(act.image.degree() == 21);
  auto profile = fixity::fixity_profile(act.image);
  CHECK(profile.mindeg >= 14);

  // exhaustive check over all elements, not just class representatives
  std::uint64_t best = act.image.degree();
  act.image.for_each_element([&](const Perm& x) {
    if (!x.is_identity()) best = std::min<std::uint64_t>(best, x.support().size());
    return true;
  });
  CHECK(best == profile.mindeg);
}

TEST_CASE("fpr_coset_formula: worked examples") {
  auto s4 = sym(4);
  auto cc = ConjugacyClasses::compute(s4);

  // identity: ratio 1
  auto h = PermGroup::generated_by({cyc("(1,2)", 4)});
  CHECK(fixity::fpr_coset_formula(cc, h, Perm(4)) == Ratio(1, 1));

  // order coprime to |H|: empty intersection
  CHECK(fixity::fpr_coset_formula(cc, h, cyc("(1,2,3)", 4)) == Ratio(0, 1));

  // |x^G ∩ H| / |x^G| = 1/6 for a transposition against H = <(1,2)>
  CHECK(fixity::fpr_coset_formula(cc, h, cyc("(1,2)", 4)) == Ratio(1, 6));

  // equals the direct ratio on the degree-12 coset action
  auto act = fixity::coset_action(s4, h);
  REQUIRE(act.image.degree() == 12);
  CHECK(fixity::fpr_direct(act.image, act.act(cyc("(1,2)", 4))) ==
        Ratio(1, 6));
}

TEST_CASE("fpr_coset_formula equals fpr_direct across classes and subgroups") {
  std::vector<std::pair<PermGroup, PermGroup>> cases;
  auto s4 = sym(4);
  auto s5 = sym(5);
  cases.push_back({s4, PermGroup::generated_by({cyc("(1,2)", 4)})});
  cases.push_back({s4, fixity::sylow2(s4, 1)});
  cases.push_back({s5, fixity::sylow2(s5, 1)});
  cases.push_back({s5, PermGroup::generated_by({cyc("(1,2,3)", 5)})});
  auto a5 = PermGroup::generated_by({cyc("(1,2,3,4,5)", 5), cyc("(3,4,5)", 5)});
  cases.push_back({a5, fixity::sylow2(a5, 1)});

  for (const auto& [g, h] : cases) {
    auto cc = ConjugacyClasses::compute(g);
    auto act = fixity::coset_action(g, h);
    for (std::size_t i = 0; i < cc.count(); ++i) {
      const Perm& rep = cc.at(i).rep;
      CHECK(fixity::fpr_coset_formula(cc, h, rep) ==
            fixity::fpr_direct(act.image, act.act(rep)));
    }
  }
}

TEST_CASE("block monotonicity") {
  auto w = PermGroup::generated_by(
      {cyc("(1,2,3)", 6), cyc("(1,2)", 6), cyc("(1,4)(2,5)(3,6)", 6)});
  auto cc = ConjugacyClasses::compute(w);

  auto singles = fixity::BlockSystem::singletons(6);
  for (const auto& row : fixity::check_block_monotonicity(w, cc, singles)) {
    CHECK(row.ok);
    CHECK(row.fpr_points == row.fpr_blocks);
  }

  auto one = fixity::BlockSystem::from_block_of(std::vector<std::uint32_t>(6, 0));
  for (const auto& row : fixity::check_block_monotonicity(w, cc, one)) {
    CHECK(row.ok);
    CHECK(row.fpr_blocks == Ratio(1, 1));
  }

  auto halves = fixity::BlockSystem::from_block_of({0, 0, 0, 1, 1, 1});
  bool strict = false;
  for (const auto& row : fixity::check_block_monotonicity(w, cc, halves)) {
    CHECK(row.ok);
    if (row.fpr_points < row.fpr_blocks) strict = true;
  }
  CHECK(strict);
}

TEST_CASE("fix decomposition") {
  auto sys = fixity::BlockSystem::from_block_of({0, 0, 0, 1, 1, 1});

  auto d1 = fixity::fix_decomposition(sys, Perm(6));
  CHECK(d1.fixed_pointwise.size() == 2);
  CHECK(d1.total == 6);

  // moves both blocks: nothing is invariant
  auto d2 = fixity::fix_decomposition(sys, cyc("(1,4)(2,5)(3,6)", 6));
  CHECK(d2.moved_within.empty());
  CHECK(d2.fixed_pointwise.empty());
  CHECK(d2.total == 0);

  // acts inside the first block, freezes the second
  auto d3 = fixity::fix_decomposition(sys, cyc("(1,2)", 6));
  CHECK(d3.moved_within == std::vector<std::uint32_t>{0});
  CHECK(d3.fixed_pointwise == std::vector<std::uint32_t>{1});
  CHECK(d3.total == 4);

  // random elements of an imprimitive group: totals always match
  auto w = PermGroup::generated_by(
      {cyc("(1,2,3)", 6), cyc("(1,2)", 6), cyc("(1,4)(2,5)(3,6)", 6)});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Perm x = w.random_element(rng);
    auto d = fixity::fix_decomposition(sys, x);
    CHECK(d.total == x.fix_count());
  }
}

TEST_CASE("transvection counts") {
  CHECK(fixity::transvection_count(2) == 1);
  CHECK(fixity::transvection_count(3) == 5);
  CHECK(fixity::transvection_count(6) == 129);
  for (unsigned n = 2; n <= 6; ++n)
    CHECK(fixity::transvection_count(n) == brute_transvections(n));
  for (unsigned n = 2; n <= 12; ++n)
    CHECK(fixity::transvection_count(n) ==
          std::uint64_t(n - 2) * (1ull << (n - 1)) + 1);
  CHECK_THROWS_AS(fixity::transvection_count(1), fixity::InputError);
}

TEST_CASE("theorem bound check") {
  auto c5 = PermGroup::generated_by({cyc("(1,2,3,4,5)", 5)});
  auto v1 = fixity::theorem_bound_check(c5, 1);
  CHECK(v1.kind == fixity::TheoremVerdict::Kind::PASS);
  CHECK(v1.mindeg == 5);

  // Alt(4) natural: the Klein subgroup is a non-trivial normal 2-subgroup
  auto a4 = PermGroup::generated_by({cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
  auto v2 = fixity::theorem_bound_check(a4, 1);
  CHECK(v2.kind == fixity::TheoremVerdict::Kind::SKIP);
  CHECK(v2.skip_reason.find("2-subgroup") != std::string::npos);

  // Sym(5) on Sylow-2 cosets
  auto s5 = sym(5);
  auto act = fixity::coset_action(s5, fixity::sylow2(s5, 1));
  auto v3 = fixity::theorem_bound_check(act.image, 1);
  CHECK(v3.kind == fixity::TheoremVerdict::Kind::PASS);
  CHECK(3 * v3.mindeg >= 2 * v3.degree);

  // intransitive input
  auto v4 = fixity::theorem_bound_check(
      PermGroup::generated_by({cyc("(1,2,3)", 5)}), 1);
  CHECK(v4.kind == fixity::TheoremVerdict::Kind::SKIP);

  // natural Sym(4): stabilizer Sym(3) is not a 2-group
  auto v5 = fixity::theorem_bound_check(sym(4), 1);
  CHECK(v5.kind == fixity::TheoremVerdict::Kind::SKIP);
  CHECK(v5.skip_reason.find("stabilizer") != std::string::npos);
}

TEST_CASE("holomorph fixed-point index property") {
  // fpr(g) = 1 / [V : C_V(g)] for non-identity classes with fixed points,
  // with the centralizer computed by commutation against the translations.
  std::vector<fixity::HolomorphAction> cases;
  cases.push_back(fixity::holomorph_affine(5, 1, {cyc("(2,5)(3,4)", 5)}));
  cases.push_back(fixity::holomorph_affine(5, 1, {cyc("(2,3,5,4)", 5)}));
  for (const auto& hol : cases) {
    auto cc = ConjugacyClasses::compute(hol.group);
    auto translations = hol.translations.elements(10'000);
    for (std::size_t i = 1; i < cc.count(); ++i) {
      const Perm& g = cc.at(i).rep;
      if (g.fix_count() == 0) continue;
      std::uint64_t commuting = 0;
      for (const Perm& t : translations)
        if (t.then(g) == g.then(t)) ++commuting;
      std::uint64_t v_order = hol.translations.order_u64();
      CHECK(fixity::fpr_direct(hol.group, g) ==
            Ratio(std::int64_t(commuting), std::int64_t(v_order)));
    }
  }
}

TEST_CASE("product action top-component bound") {
  // elements that shuffle coordinates fix at most degree/|Δ| tuples
  auto s3 = sym(3);
  auto pa = fixity::wreath_product_action(s3, 2);
  std::uint64_t bound = pa.group.degree() / pa.base_degree;
  pa.group.for_each_element([&](const Perm& w) {
    if (!pa.top_component(w).is_identity()) CHECK(w.fix_count() <= bound);
    return true;
  });
}
