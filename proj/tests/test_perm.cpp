#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixity/cycles.hpp"
#include "fixity/perm.hpp"
#include "helpers.hpp"

using fixity::Perm;
using fixity::Point;
using oracle::cyc;

namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> d(0, i - 1);
    std::swap(img[i - 1], img[d(rng)]);
  }
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("perm: composition is left-to-right") {
  // (1,2,3) then (1,2) pointwise: 0->1->0, 1->2->2, 2->0->1
  Perm a = cyc("(1,2,3)", 3);
  Perm b = cyc("(1,2)", 3);
  Perm c = a.then(b);
  CHECK(c.images() == std::vector<Point>{0, 2, 1});

  Perm id(5);
  Perm p = cyc("(1,4)(2,3,5)", 5);
  CHECK(id.then(p) == p);
  CHECK(p.then(id) == p);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.inverse().then(p).is_identity());
}

TEST_CASE("perm: composition requires equal degrees") {
  CHECK_THROWS_AS(Perm(3).then(Perm(4)), fixity::InputError);
}

TEST_CASE("perm: image table validation") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), fixity::InputError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3, 1}), fixity::InputError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{}), fixity::InputError);
}

TEST_CASE("perm: fixed points and support partition the domain") {
  Perm id(7);
  CHECK(id.fixed_points().size() == 7);
  CHECK(id.support().empty());

  Perm t = cyc("(1,2)", 5);
  CHECK(t.fix_count() == 3);

  Perm p = cyc("(1,2,3)(4,5)", 6);
  CHECK(p.support().size() == 5);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Perm r = random_perm(11, rng);
    CHECK(r.fixed_points().size() + r.support().size() == 11);
  }
}

TEST_CASE("perm: cycle type") {
  Perm p = cyc("(1,2,3)(4,5)", 6);
  CHECK(p.cycle_type() == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(Perm(9).cycle_type() == std::vector<std::uint32_t>(9, 1));
  CHECK(cyc("(1,2,3,4,5,6,7)", 7).cycle_type() ==
        std::vector<std::uint32_t>{7});
  CHECK(cyc("(1,2,3)(4,5)", 6).order() == 6);
}

TEST_CASE("perm: cycle type is a conjugation invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(9, rng);
    Perm q = random_perm(9, rng);
    CHECK(p.conjugated_by(q).cycle_type() == p.cycle_type());
  }
}

TEST_CASE("perm: conjugation matches w^-1 p w") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Perm p = random_perm(8, rng);
    Perm w = random_perm(8, rng);
    CHECK(p.conjugated_by(w) == w.inverse().then(p).then(w));
  }
}

TEST_CASE("cycles: parse examples") {
  CHECK(cyc("(1,2,3)(4,5)", 5).images() == std::vector<Point>{1, 2, 0, 4, 3});
  CHECK(cyc("()", 4).is_identity());
  CHECK(cyc("", 4).is_identity());
  CHECK(cyc(" ( 1 , 2 ) ", 3).images() == std::vector<Point>{1, 0, 2});
  CHECK(cyc("(1 2 3)", 3).images() == std::vector<Point>{1, 2, 0});
}

TEST_CASE("cycles: parse errors") {
  CHECK_THROWS_AS(cyc("(1,2)(2,3)", 4), fixity::ParseError);
  CHECK_THROWS_AS(cyc("(1,2", 4), fixity::ParseError);
  CHECK_THROWS_AS(cyc("(1,5)", 4), fixity::ParseError);
  CHECK_THROWS_AS(cyc("(0,1)", 4), fixity::ParseError);
  CHECK_THROWS_AS(cyc("1,2", 4), fixity::ParseError);
  CHECK_THROWS_AS(cyc("(1,)", 4), fixity::ParseError);
}

TEST_CASE("cycles: print/parse round trip on random permutations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + (rng() % 12);
    Perm p = random_perm(n, rng);
    CHECK(fixity::parse_cycles(fixity::print_cycles(p), n) == p);
  }
  CHECK(fixity::print_cycles(Perm(6)) == "()");
}

TEST_CASE("perm: packed keys are injective") {
  std::mt19937_64 rng(23);
  std::set<std::string> keys;
  std::set<std::vector<Point>> perms;
  for (int trial = 0; trial < 300; ++trial) {
    Perm p = random_perm(23, rng);
    keys.insert(p.key());
    perms.insert(p.images());
  }
  CHECK(keys.size() == perms.size());
}

TEST_CASE("perm: power") {
  Perm p = cyc("(1,2,3,4,5)", 5);
  CHECK(p.power(5).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.power(7) == p.then(p));
  CHECK(p.power(0).is_identity());
}
