//
// wrc - right ideals and right congruences of semigroups
//
// Membership, intersections of principal right ideals and RIH reports.
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
#include "wrc/right_ideals.hpp"

#include "oracles.hpp"

using namespace wrc;

namespace {

  Element nat_pair(std::int64_t x, std::int64_t y) {
    return Element::pair(Element::vec({x}), Element::vec({y}));
  }

  SemigroupPtr nat_squared() {
    auto n = free_commutative_semigroup(1);
    return direct_product(n, n);
  }

  // x in aS^1 by exhaustive search on a finite semigroup.
  bool in_ideal(Semigroup const& s, Element const& a, Element const& x) {
    if (a == x) {
      return true;
    }
    for (auto const& c : s.elements()) {
      if (s.multiply(a, c) == x) {
        return true;
      }
    }
    return false;
  }

  std::set<Element> generated_set(Semigroup const& s, std::vector<Element> const& gens) {
    std::set<Element> out;
    for (auto const& x : s.elements()) {
      for (auto const& g : gens) {
        if (in_ideal(s, g, x)) {
          out.insert(x);
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("ideal_membership", "[right-ideals]") {
  auto       f = free_monoid("abc");
  RightIdeal ab{f, {f->parse("ab")}, Exactness::full()};
  CHECK(ideal_membership(ab, f->parse("abc"), 6) == Tri::yes);
  CHECK(ideal_membership(ab, f->parse("ba"), 6) == Tri::no);
  auto       nn = nat_squared();
  RightIdeal i33{nn, {nat_pair(3, 3)}, Exactness::full()};
  CHECK(ideal_membership(i33, nat_pair(3, 4), 8) == Tri::no);
  CHECK(ideal_membership(i33, nat_pair(4, 4), 8) == Tri::yes);
  CHECK(ideal_membership(i33, nat_pair(3, 3), 8) == Tri::yes);
}

TEST_CASE("intersect_principal closed forms", "[right-ideals]") {
  SECTION("free monoid prefix rule") {
    auto f = free_monoid("abc");
    auto r = intersect_principal(f, f->parse("ab"), f->parse("abc"), 6);
    CHECK(r.exactness.exact);
    REQUIRE(r.generators.size() == 1);
    CHECK(f->format(r.generators[0]) == "abc");
    auto e = intersect_principal(f, f->parse("ab"), f->parse("ba"), 6);
    CHECK(e.exactness.exact);
    CHECK(e.empty());
  }
  SECTION("free commutative monoid: componentwise max") {
    auto f = free_commutative_monoid(2);
    auto r = intersect_principal(f, f->parse("[1,0]"), f->parse("[0,1]"), 6);
    CHECK(r.exactness.exact);
    REQUIRE(r.generators.size() == 1);
    CHECK(r.generators[0] == f->parse("[1,1]"));
    auto s = intersect_principal(f, f->parse("[2,1]"), f->parse("[1,3]"), 6);
    REQUIRE(s.generators.size() == 1);
    CHECK(s.generators[0] == f->parse("[2,3]"));
  }
  SECTION("N x N: (1,2) and (2,1) give {x, y >= 3}, not principal") {
    auto nn = nat_squared();
    auto r  = intersect_principal(nn, nat_pair(1, 2), nat_pair(2, 1), 8);
    CHECK_FALSE(r.exactness.exact);
    CHECK(r.generators.size() >= 2);
    for (auto const& g : r.generators) {
      CHECK(g.parts[0].data[0] >= 3);
      CHECK(g.parts[1].data[0] >= 3);
    }
  }
}

TEST_CASE("irreducible elements as growth evidence", "[right-ideals]") {
  auto nn     = nat_squared();
  auto member = [](Element const& x) {
    return x.parts[0].data[0] >= 3 && x.parts[1].data[0] >= 3;
  };
  for (std::int64_t b = 4; b <= 8; ++b) {
    std::vector<Element> box;
    for (std::int64_t x = 1; x <= b; ++x) {
      for (std::int64_t y = 1; y <= b; ++y) {
        box.push_back(nat_pair(x, y));
      }
    }
    auto ev = ideal_generation_evidence(*nn, member, box, "box", 2 * static_cast<std::size_t>(b));
    CHECK(ev.irreducibles.size() == static_cast<std::size_t>(2 * (b - 2) - 1));
  }
  SECTION("a principal ideal has one irreducible") {
    auto f  = free_monoid("ab");
    auto a  = f->parse("a");
    auto ev = ideal_generation_evidence(
        *f, [&](Element const& x) { return oracle::word_prefix(a, x); }, f->enumerate(4),
        "window", 4);
    CHECK(ev.irreducibles == std::vector<Element>{a});
  }
}

TEST_CASE("intersections on finite semigroups are exact", "[right-ideals][property]") {
  std::mt19937 rng(31);
  for (int k = 0; k < 40; ++k) {
    auto s  = make_table(random_semigroup(rng, 6));
    auto xs = s->elements();
    for (auto const& a : xs) {
      for (auto const& b : xs) {
        auto r = intersect_principal(s, a, b, 0);
        REQUIRE(r.exactness.exact);
        std::set<Element> want;
        for (auto const& x : xs) {
          if (in_ideal(*s, a, x) && in_ideal(*s, b, x)) {
            want.insert(x);
          }
        }
        REQUIRE(generated_set(*s, r.generators) == want);
        auto bf = brute_force_intersection(*s, a, b, 0);
        REQUIRE(std::set<Element>(bf.begin(), bf.end()) == want);
        // Symmetry and the R-comparable case.
        auto r2 = intersect_principal(s, b, a, 0);
        REQUIRE(generated_set(*s, r2.generators) == want);
        if (in_ideal(*s, a, b)) {
          REQUIRE(r.generators.size() == 1);
          REQUIRE(generated_set(*s, r.generators) == generated_set(*s, {b}));
        }
      }
    }
  }
}

TEST_CASE("free closed forms agree with brute force", "[right-ideals][property]") {
  auto f     = free_monoid("ab");
  auto words = f->enumerate(7);
  auto gens  = f->enumerate(3);
  for (auto const& a : gens) {
    for (auto const& b : gens) {
      auto r = intersect_principal(f, a, b, 7);
      for (auto const& w : words) {
        bool want = oracle::word_prefix(a, w) && oracle::word_prefix(b, w);
        bool got  = false;
        for (auto const& g : r.generators) {
          got = got || oracle::word_prefix(g, w);
        }
        REQUIRE(want == got);
      }
    }
  }
}

TEST_CASE("check_rih", "[right-ideals]") {
  SECTION("finite monoids are RIH with exact witnesses") {
    std::mt19937 rng(32);
    for (int k = 0; k < 20; ++k) {
      auto s = make_table(random_monoid(rng, 6));
      auto r = check_rih(s, 6);
      REQUIRE(r.verdict == Tri::yes);
      REQUIRE(r.exactness.exact);
      for (auto const& p : r.pairs) {
        std::set<Element> want;
        for (auto const& x : s->elements()) {
          if (in_ideal(*s, p.a, x) && in_ideal(*s, p.b, x)) {
            want.insert(x);
          }
        }
        REQUIRE(generated_set(*s, p.generators) == want);
      }
    }
  }
  SECTION("the free monoid of rank 2 by the prefix rule") {
    auto f = free_monoid("ab");
    auto r = check_rih(f, 4);
    CHECK(r.verdict == Tri::yes);
    CHECK(r.exactness.exact);
  }
  SECTION("N x N is reported with growing generating sets") {
    auto r = check_rih(nat_squared(), 6);
    CHECK(r.verdict != Tri::yes);
    bool growing = false;
    for (auto const& p : r.pairs) {
      growing = growing || p.growing;
    }
    CHECK(growing);
  }
}
