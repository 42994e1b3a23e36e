//
// wrc - right ideals and right congruences of semigroups
//
// Elements, Cayley tables, backends and element classification.
//

#include <cstddef>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "wrc/backends.hpp"
#include "wrc/cayley_table.hpp"
#include "wrc/classify.hpp"
#include "wrc/constructions.hpp"
#include "wrc/random.hpp"
#include "wrc/semigroup.hpp"

using namespace wrc;

namespace {

  std::set<std::string> names(Semigroup const& s, std::vector<Element> const& xs) {
    std::set<std::string> out;
    for (auto const& x : xs) {
      out.insert(s.format(x));
    }
    return out;
  }

  bool associative(Semigroup const& s, std::vector<Element> const& xs) {
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        for (auto const& z : xs) {
          if (s.multiply(s.multiply(x, y), z) != s.multiply(x, s.multiply(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("free monoid product is concatenation", "[core]") {
  auto f = free_monoid("abc");
  CHECK(f->format(f->multiply(f->parse("ab"), f->parse("c"))) == "abc");
  CHECK(f->multiply(f->parse("1"), f->parse("ab")) == f->parse("ab"));
  CHECK(f->grade(f->parse("abca")) == 4);
}

TEST_CASE("Rees quotient product falls into the zero", "[core]") {
  auto f = free_monoid("ab");
  auto q = rees_quotient(
      f, generated_ideal(f, {f->parse("aa"), f->parse("ab"), f->parse("ba"),
                             f->parse("bb")}));
  auto ab = q->multiply(q->parse("a"), q->parse("b"));
  CHECK(ab == *q->zero());
  CHECK(q->format(ab) == "0");
}

TEST_CASE("semigroup free product merges matching boundary blocks", "[core]") {
  auto s = make_table(tables::cyclic_group(3), "C3");
  auto f = semigroup_free_product({s, free_semigroup("t")});
  auto x = f->parse("g1*t2*g1");
  auto y = f->parse("g1*t2");
  CHECK(f->format(f->multiply(x, y)) == "g1*t2*g21*t2");
  auto u = f->parse("g1*t2");
  auto v = f->parse("t2*g1");
  CHECK(f->format(f->multiply(u, v)) == "g1*tt2*g1");
}

TEST_CASE("monoid free product canonical forms", "[core]") {
  auto sl = make_table(tables::chain_semilattice(2), "sl");
  auto f  = monoid_free_product({sl, sl});
  SECTION("factor identities are elided and blocks remerged") {
    auto raw = Element::blocks({0, 1, 0}, {Element::index(1), Element::index(0),
                                           Element::index(1)});
    CHECK(f->format(f->canonical(raw)) == "z1");
  }
  SECTION("reduced elements are fixed") {
    auto x = f->parse("z1*z2*z1");
    CHECK(f->canonical(x) == x);
  }
  SECTION("(z1*z2)(z2) = z1*z2") {
    CHECK(f->format(f->multiply(f->parse("z1*z2"), f->parse("z2"))) == "z1*z2");
  }
  SECTION("(z1*z2)(z2*z1) = z1*z2*z1") {
    CHECK(f->format(f->multiply(f->parse("z1*z2"), f->parse("z2*z1")))
          == "z1*z2*z1");
  }
  SECTION("z times the identity") {
    CHECK(f->multiply(f->parse("z1"), f->parse("1")) == f->parse("z1"));
  }
  SECTION("the free product of trivial monoids is trivial") {
    auto one = make_table(tables::cyclic_group(1), "1");
    auto g   = monoid_free_product({one, one, one});
    CHECK(g->enumerate(4).size() == 1);
  }
}

TEST_CASE("canonical is idempotent and compatible with products", "[core]") {
  auto g  = make_table(tables::cyclic_group(2), "C2");
  auto sl = make_table(tables::chain_semilattice(2), "sl");
  auto f  = monoid_free_product({sl, g});
  auto xs = f->enumerate(3);
  for (auto const& x : xs) {
    REQUIRE(f->canonical(f->canonical(x)) == f->canonical(x));
    for (auto const& y : xs) {
      REQUIRE(f->canonical(f->multiply(x, y))
              == f->canonical(f->multiply(f->canonical(x), f->canonical(y))));
    }
  }
}

TEST_CASE("enumeration counts", "[core]") {
  CHECK(names(*free_monoid("ab"), free_monoid("ab")->enumerate(2))
        == std::set<std::string>{"1", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(free_semigroup("ab")->enumerate(2).size() == 6);
  CHECK(make_table(tables::cyclic_group(5))->enumerate(7).size() == 5);
  CHECK(free_commutative_monoid(2)->enumerate(2).size() == 6);
  CHECK(free_commutative_semigroup(2)->enumerate(2).size() == 5);
  auto e = free_monoid("ab")->enumerate(3);
  CHECK(std::set<Element>(e.begin(), e.end()).size() == e.size());
}

TEST_CASE("associativity of the backends", "[core]") {
  CHECK(associative(*free_monoid("ab"), free_monoid("ab")->enumerate(3)));
  CHECK(associative(*free_commutative_monoid(2), free_commutative_monoid(2)->enumerate(3)));
  CHECK(associative(*null_semigroup(3), null_semigroup(3)->elements()));
  CHECK(associative(*left_zero_semigroup(3), left_zero_semigroup(3)->elements()));
  auto sfp = semigroup_free_product({left_zero_semigroup(2), null_semigroup(2)});
  CHECK(associative(*sfp, sfp->enumerate(3)));
  CHECK(identity_zero_laws_hold(*null_semigroup(3), 0));
}

TEST_CASE("identity and zero laws", "[core]") {
  auto m = make_table(tables::flat_null_monoid(3));
  REQUIRE(m->identity());
  REQUIRE(m->zero());
  for (auto const& x : m->elements()) {
    CHECK(m->multiply(*m->identity(), x) == x);
    CHECK(m->multiply(x, *m->identity()) == x);
    CHECK(m->multiply(*m->zero(), x) == *m->zero());
    CHECK(m->multiply(x, *m->zero()) == *m->zero());
  }
  CHECK_FALSE(left_zero_semigroup(2)->identity());
}

TEST_CASE("Cayley table text format", "[core]") {
  SECTION("round trip") {
    auto               t = tables::flat_null_monoid(4);
    std::ostringstream os;
    write_table(os, t);
    auto u = read_table(os.str());
    CHECK(u.size() == 4);
    CHECK(u.names() == t.names());
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(u.product(i, j) == t.product(i, j));
      }
    }
  }
  SECTION("comments are skipped") {
    auto t = read_table("# two elements\n2\nx y\n# rows\nx x\nx y\n");
    CHECK(t.size() == 2);
    CHECK(t.product(1, 1) == 1);
  }
  SECTION("a non-associative table is rejected with the failing triple") {
    // xy = y, yx = x, xx = y, yy = x is not associative.
    REQUIRE_THROWS_AS(read_table("2\nx y\ny y\nx x\n"), Error);
    try {
      read_table("2\nx y\ny y\nx x\n");
    } catch (Error const& e) {
      CHECK(std::string(e.what()).find("not associative") != std::string::npos);
    }
  }
  SECTION("malformed input") {
    CHECK_THROWS_AS(read_table(""), Error);
    CHECK_THROWS_AS(read_table("2\nx x\nx x\nx x\n"), Error);
    CHECK_THROWS_AS(read_table("2\nx y\nx z\nx x\n"), Error);
    CHECK_THROWS_AS(read_table("2\nx y\nx x\n"), Error);
  }
}

TEST_CASE("classify_element", "[core]") {
  SECTION("free monoid words are left cancellative") {
    auto f = free_monoid("ab");
    auto c = classify_element(*f, f->parse("ab"), 4);
    CHECK(c.left_cancellative == Tri::yes);
  }
  SECTION("null semigroup: aS = {a^2}") {
    auto n = null_semigroup(2);
    auto c = classify_element(*n, n->parse("a1"), 0);
    CHECK(c.singleton_right_ideal == Tri::yes);
    CHECK(c.right_factorisable == Tri::no);
    CHECK(c.left_cancellative == Tri::no);
  }
  SECTION("left zero semigroup: right factorisable, self partner") {
    auto l = left_zero_semigroup(3);
    auto a = l->parse("l2");
    auto c = classify_element(*l, a, 0);
    CHECK(c.right_factorisable == Tri::yes);
    REQUIRE(c.regular_partner);
    CHECK(l->multiply(l->multiply(a, *c.regular_partner), a) == a);
  }
}

TEST_CASE("classify_element agrees with the definitions", "[core][property]") {
  std::mt19937 rng(11);
  for (int k = 0; k < 60; ++k) {
    auto t  = random_semigroup(rng, 6);
    auto s  = make_table(t);
    auto xs = s->elements();
    for (auto const& a : xs) {
      auto c = classify_element(*s, a, 0);
      bool lc = true;
      bool rf = false;
      bool partner = false;
      std::set<Element> as;
      for (auto const& x : xs) {
        as.insert(s->multiply(a, x));
        rf      = rf || s->multiply(a, x) == a;
        partner = partner || s->multiply(s->multiply(a, x), a) == a;
        for (auto const& y : xs) {
          if (x != y && s->multiply(a, x) == s->multiply(a, y)) {
            lc = false;
          }
        }
      }
      bool single = as.size() == 1 && *as.begin() == s->multiply(a, a);
      REQUIRE(c.left_cancellative == tri(lc));
      REQUIRE(c.right_factorisable == tri(rf));
      REQUIRE(c.singleton_right_ideal == tri(single));
      REQUIRE(c.regular_partner.has_value() == partner);
    }
  }
}

TEST_CASE("right_ideal_generators", "[core]") {
  SECTION("monoid: U = {1}") {
    auto m = make_table(tables::flat_null_monoid(4));
    auto u = right_ideal_generators(*m, 0);
    REQUIRE(u.found);
    CHECK(u.generators == std::vector<Element>{*m->identity()});
  }
  SECTION("left zero of order n: all n elements") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto l = left_zero_semigroup(n);
      CHECK(right_ideal_generators(*l, 0).generators.size() == n);
    }
  }
  SECTION("free commutative semigroup of rank 2: the two letters") {
    auto f = free_commutative_semigroup(2);
    auto u = right_ideal_generators(*f, 4);
    REQUIRE(u.found);
    CHECK(names(*f, u.generators) == names(*f, {f->parse("[1,0]"), f->parse("[0,1]")}));
  }
  SECTION("U is minimal and generates on random semigroups") {
    std::mt19937 rng(12);
    for (int k = 0; k < 40; ++k) {
      auto s  = make_table(random_semigroup(rng, 6));
      auto us = right_ideal_generators(*s, 0).generators;
      auto reach = [&](std::vector<Element> const& gens) {
        std::set<Element> out;
        for (auto const& g : gens) {
          out.insert(g);
          for (auto const& x : s->elements()) {
            out.insert(s->multiply(g, x));
          }
        }
        return out.size();
      };
      REQUIRE(reach(us) == s->elements().size());
      for (std::size_t i = 0; i < us.size(); ++i) {
        auto fewer = us;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        REQUIRE(reach(fewer) < s->elements().size());
      }
    }
  }
}

TEST_CASE("has_pairwise_right_identities", "[core]") {
  CHECK(has_pairwise_right_identities(*make_table(tables::cyclic_group(3))));
  CHECK_FALSE(has_pairwise_right_identities(*null_semigroup(2)));
  CHECK(has_pairwise_right_identities(*left_zero_semigroup(2)));
}
