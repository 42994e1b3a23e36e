//
// wrc - right ideals and right congruences of semigroups
//
// Adjoining identities and zeros, direct products, Rees quotients, free
// products, subsemigroups and retractions.
//

#include <cstddef>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "wrc/backends.hpp"
#include "wrc/cayley_table.hpp"
#include "wrc/constructions.hpp"
#include "wrc/random.hpp"
#include "wrc/semigroup.hpp"

using namespace wrc;

namespace {

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

  Element nat_pair(std::int64_t x, std::int64_t y) {
    return Element::pair(Element::vec({x}), Element::vec({y}));
  }

}  // namespace

TEST_CASE("adjoin_identity", "[constructions]") {
  SECTION("a monoid is returned unchanged") {
    auto m = make_table(tables::flat_null_monoid(3));
    CHECK(adjoin_identity(m) == m);
  }
  SECTION("the free semigroup becomes the free monoid") {
    auto f1 = adjoin_identity(free_semigroup("ab"));
    REQUIRE(f1->identity());
    CHECK(f1->enumerate(3).size() == free_monoid("ab")->enumerate(3).size());
  }
  SECTION("a new identity on a semigroup without one") {
    auto l  = left_zero_semigroup(2);
    auto l1 = adjoin_identity(l);
    REQUIRE(l1->identity());
    CHECK(l1->elements().size() == 3);
    CHECK(associative(*l1, l1->elements()));
  }
  SECTION("forcing a new identity on a monoid") {
    auto m  = make_table(tables::cyclic_group(2));
    auto m1 = adjoin_new_identity(m);
    CHECK(m1->elements().size() == 3);
    CHECK(*m1->identity() != *m->identity());
  }
}

TEST_CASE("adjoin_zero", "[constructions]") {
  auto l  = left_zero_semigroup(2);
  auto l0 = adjoin_zero(l);
  REQUIRE(l0->zero());
  auto xs = l0->elements();
  CHECK(xs.size() == 3);
  for (auto const& x : xs) {
    CHECK(l0->multiply(*l0->zero(), x) == *l0->zero());
    CHECK(l0->multiply(x, *l0->zero()) == *l0->zero());
  }
  CHECK(associative(*l0, xs));
  auto n = null_semigroup(2);
  CHECK(adjoin_zero(n) == n);
}

TEST_CASE("direct_product", "[constructions]") {
  SECTION("componentwise products") {
    auto s = make_table(tables::cyclic_group(2));
    auto t = make_table(tables::cyclic_group(3));
    auto p = direct_product(s, t);
    auto xs = p->elements();
    CHECK(xs.size() == 6);
    CHECK(associative(*p, xs));
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        auto xy = p->multiply(x, y);
        CHECK(xy.parts[0] == s->multiply(x.parts[0], y.parts[0]));
        CHECK(xy.parts[1] == t->multiply(x.parts[1], y.parts[1]));
      }
    }
  }
  SECTION("enumeration is the cartesian product of the factors") {
    auto s = make_table(tables::chain_semilattice(3));
    auto t = left_zero_semigroup(2);
    auto p = direct_product(s, t);
    std::set<Element> got;
    for (auto const& x : p->enumerate(4)) {
      got.insert(x);
    }
    std::set<Element> want;
    for (auto const& a : s->elements()) {
      for (auto const& b : t->elements()) {
        want.insert(Element::pair(a, b));
      }
    }
    CHECK(got == want);
  }
  SECTION("N x N: (1,2) + (2,1) = (3,3)") {
    auto n = free_commutative_semigroup(1);
    auto p = direct_product(n, n);
    CHECK(p->multiply(nat_pair(1, 2), nat_pair(2, 1)) == nat_pair(3, 3));
  }
}

TEST_CASE("rees_quotient", "[constructions]") {
  SECTION("free semigroup modulo words of length >= 2 is null") {
    auto f  = free_semigroup("abc");
    auto q  = rees_quotient(
        f, generated_ideal(f, {f->parse("aa"), f->parse("ab"), f->parse("ac"),
                                f->parse("ba"), f->parse("bb"), f->parse("bc"),
                                f->parse("ca"), f->parse("cb"), f->parse("cc")}));
    auto xs = q->enumerate(3);
    CHECK(xs.size() == 4);
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        CHECK(q->multiply(x, y) == *q->zero());
      }
    }
  }
  SECTION("I = S leaves the trivial semigroup") {
    auto s = make_table(tables::cyclic_group(3));
    auto q = rees_quotient(s, ideal_from_elements(*s, s->elements()));
    CHECK(q->elements().size() == 1);
  }
  SECTION("order |S \\ I| + 1 and associativity on random ideals") {
    std::mt19937 rng(21);
    for (int k = 0; k < 40; ++k) {
      auto s  = make_table(random_monoid(rng, 6));
      auto xs = s->elements();
      // The two-sided ideal generated by a random element.
      auto g  = xs[static_cast<std::size_t>(k) % xs.size()];
      std::set<Element> ideal;
      for (auto const& x : xs) {
        for (auto const& y : xs) {
          ideal.insert(s->multiply(s->multiply(x, g), y));
        }
      }
      auto q = rees_quotient(s, ideal_from_elements(*s, {ideal.begin(), ideal.end()}));
      REQUIRE(q->elements().size() == xs.size() - ideal.size() + 1);
      REQUIRE(associative(*q, q->elements()));
    }
  }
  SECTION("a non-ideal is rejected") {
    auto s = make_table(tables::chain_semilattice(3));
    // {z1} is not an ideal: z1 z2 = z2.
    CHECK_THROWS_AS(rees_quotient(s, ideal_from_elements(*s, {s->parse("z1")})), Error);
  }
}

TEST_CASE("free products", "[constructions]") {
  SECTION("distinct factors concatenate") {
    auto f = semigroup_free_product({free_semigroup("s"), free_semigroup("t")});
    CHECK(f->format(f->multiply(f->parse("s1"), f->parse("t2"))) == "s1*t2");
  }
  SECTION("the monoid variant requires identities") {
    CHECK_THROWS_AS(monoid_free_product({free_semigroup("a")}), Error);
    CHECK_NOTHROW(monoid_free_product({free_monoid("a")}));
  }
  SECTION("repeated factors are tagged by position") {
    auto sl = make_table(tables::chain_semilattice(2));
    auto f  = monoid_free_product({sl, sl});
    CHECK(f->parse("z1") != f->parse("z2"));
    CHECK(f->parse("z@1") == f->parse("z1"));
  }
  SECTION("associativity to block-grade 3") {
    auto f = monoid_free_product({make_table(tables::chain_semilattice(2)),
                                  make_table(tables::cyclic_group(2))});
    CHECK(associative(*f, f->enumerate(3)));
  }
}

TEST_CASE("subsemigroup flags", "[constructions]") {
  SECTION("N x N inside N0 x N0") {
    auto n0 = free_commutative_monoid(1);
    auto p  = direct_product(n0, n0);
    auto t  = subsemigroup(
        p,
        [](Element const& x) {
          return x.parts[0].data[0] > 0 && x.parts[1].data[0] > 0;
        },
        "N x N", 4);
    CHECK(t->complement_is_ideal().value == Tri::no);
    CHECK(t->large().value == Tri::no);
  }
  SECTION("the units of a monoid whose non-units form an ideal") {
    auto m   = make_table(tables::flat_null_monoid(4));
    auto one = *m->identity();
    auto units = subsemigroup(m, [one](Element const& x) { return x == one; }, "{1}");
    CHECK(units->complement_is_ideal().value == Tri::yes);
    CHECK(units->large().value == Tri::yes);
    auto rest = subsemigroup(m, [one](Element const& x) { return x != one; }, "S \\ {1}");
    CHECK(rest->complement_is_ideal().value == Tri::no);
    REQUIRE(rest->complement_witness());
  }
  SECTION("the free semigroup is large in the free monoid") {
    auto f = free_monoid("ab");
    auto t = subsemigroup(
        f, [](Element const& x) { return !x.data.empty(); }, "F", 4);
    CHECK(t->large().value == Tri::yes);
    CHECK(t->complement_is_ideal().value == Tri::no);
  }
  SECTION("a predicate that is not closed is rejected") {
    auto g = make_table(tables::cyclic_group(3));
    auto one = *g->identity();
    CHECK_THROWS_AS(
        subsemigroup(g, [one](Element const& x) { return x != one; }, "C3 \\ {1}"),
        Error);
  }
}

TEST_CASE("retractions", "[constructions]") {
  SECTION("the identity map") {
    auto s = make_table(tables::chain_semilattice(3));
    CHECK_NOTHROW(retraction(s, s, [](Element const& x) { return x; }));
  }
  SECTION("a map that is not a homomorphism is rejected") {
    auto s = make_table(tables::cyclic_group(2));
    auto t = make_table(tables::chain_semilattice(2));
    auto p = direct_product(s, t);
    // (x, y) -> (x, 1) composed with a swap of the group coordinate.
    auto e = *s->identity();
    auto g = s->parse("g");
    CHECK_THROWS_AS(homomorphism(p, p,
                                 [&](Element const& x) {
                                   return Element::pair(x.parts[0] == e ? g : e,
                                                        *t->identity());
                                 }),
                    Error);
  }
  SECTION("a non-fixing map is not a retraction") {
    auto s = make_table(tables::chain_semilattice(3));
    auto z = s->parse("z2");
    CHECK_THROWS_AS(retraction(s, s, [z](Element const&) { return z; }), Error);
  }
  SECTION("factor retractions of a monoid free product") {
    auto f = std::dynamic_pointer_cast<FreeProduct const>(monoid_free_product(
        {make_table(tables::chain_semilattice(2)), make_table(tables::cyclic_group(2))}));
    for (std::size_t i = 0; i < 2; ++i) {
      auto [t, phi] = factor_retraction(f, i, 3);
      for (auto const& x : t->elements()) {
        CHECK(phi(x) == x);
      }
    }
  }
}
