//
// wrc - right ideals and right congruences of semigroups
//
// Contexts, sequences and witnesses for monoid free products.
//

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "wrc/backends.hpp"
#include "wrc/cayley_table.hpp"
#include "wrc/constructions.hpp"
#include "wrc/mfp.hpp"
#include "wrc/random.hpp"

#include "oracles.hpp"

using namespace wrc;

namespace {

  std::shared_ptr<FreeProduct const> mfp(std::vector<SemigroupPtr> const& fs) {
    return std::dynamic_pointer_cast<FreeProduct const>(monoid_free_product(fs));
  }

  SemigroupPtr sl() {
    return make_table(tables::chain_semilattice(2), "sl");
  }

  SemigroupPtr c2() {
    return make_table(tables::cyclic_group(2), "C2");
  }

  // Every pair of the window related by x is joined by a chain over X.
  bool window_generated(MfpContext const& ctx, PairSet<Element> const& gens,
                        std::size_t grade) {
    auto const& f  = *ctx.f;
    auto const& x  = ctx.x;
    auto        xs = f.enumerate(grade);
    for (auto const& [p, q] : gens.generators()) {
      if (f.multiply(x, p) != f.multiply(x, q)) {
        return false;
      }
    }
    std::map<Element, std::vector<Element>> classes;
    for (auto const& a : xs) {
      classes[f.multiply(x, a)].push_back(a);
    }
    auto set = oracle::pair_set(gens);
    for (auto const& [key, cls] : classes) {
      for (auto const& a : cls) {
        for (auto const& b : cls) {
          XSequence<Element> seq;
          try {
            seq = mfp_sequence(ctx, a, b);
          } catch (Error const&) {
            return false;
          }
          if (!oracle::chain_holds(seq, set, [&f](Element const& u, Element const& v) {
                return f.multiply(u, v);
              })) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("make_mfp_context", "[mfp]") {
  auto f = mfp({sl(), c2()});
  SECTION("levels read x from the right") {
    auto ctx = make_mfp_context(f, f->parse("z1*g2"));
    REQUIRE(ctx.length() == 2);
    CHECK(ctx.level(1).factor == 1);
    CHECK(ctx.level(2).factor == 0);
    REQUIRE(ctx.level(1).t);
    CHECK(*ctx.level(1).t == f->factor(1)->parse("g"));
    CHECK_FALSE(ctx.level(2).t);
    REQUIRE(ctx.n_index);
    CHECK(*ctx.n_index == 2);
    REQUIRE(ctx.prefixes.size() == 2);
    CHECK(ctx.prefixes[0] == *f->identity());
    CHECK(ctx.prefixes[1] == f->parse("g2"));
  }
  SECTION("X is X_N shifted by the prefix") {
    auto ctx = make_mfp_context(f, f->parse("z1*g2"));
    auto x   = mfp_generators(ctx);
    CHECK(x.contains(f->parse("g2"), f->parse("g2*z1")));
    for (auto const& [p, q] : x.generators()) {
      CHECK(f->multiply(ctx.x, p) == f->multiply(ctx.x, q));
    }
  }
  SECTION("a right invertible x has no N and X is empty") {
    auto ctx = make_mfp_context(f, f->parse("g2"));
    CHECK_FALSE(ctx.n_index);
    CHECK(mfp_generators(ctx).empty());
  }
  SECTION("a t_i that is not a right inverse is rejected") {
    std::map<std::size_t, Element> t{{1, *f->factor(1)->identity()}};
    CHECK_THROWS_AS(make_mfp_context(f, f->parse("z1*g2"), t), Error);
  }
  SECTION("an X_i that does not generate r(x_i) is rejected") {
    std::map<std::size_t, PairSet<Element>> x{{2, PairSet<Element>{}}};
    CHECK_THROWS_AS(make_mfp_context(f, f->parse("z1*g2"), {}, x), Error);
  }
  SECTION("a user supplied X_i is kept") {
    auto s = f->factor(0);
    PairSet<Element> xi{{*s->identity(), s->parse("z")}};
    auto ctx = make_mfp_context(f, f->parse("z1*g2"), {}, {{2, xi}});
    CHECK(ctx.level(2).generators.generators() == xi.generators());
  }
  SECTION("infinite factors and semigroup free products are rejected") {
    CHECK_THROWS_AS(make_mfp_context(mfp({free_monoid("a"), c2()}),
                                     mfp({free_monoid("a"), c2()})->parse("a1")),
                    Error);
    auto g = std::dynamic_pointer_cast<FreeProduct const>(
        semigroup_free_product({left_zero_semigroup(2), null_semigroup(2)}));
    CHECK_THROWS_AS(make_mfp_context(g, g->parse("l11")), Error);
  }
}

TEST_CASE("mfp_sequence", "[mfp]") {
  auto f   = mfp({sl(), sl()});
  auto ctx = make_mfp_context(f, f->parse("z1"));
  auto x   = mfp_generators(ctx);
  SECTION("a = b gives the empty sequence") {
    auto seq = mfp_sequence(ctx, f->parse("z2"), f->parse("z2"));
    CHECK(seq.length() == 0);
  }
  SECTION("a pair outside r_F(x) is rejected") {
    CHECK_THROWS_AS(mfp_sequence(ctx, f->parse("z2"), f->parse("z2*z1")), Error);
  }
  SECTION("(z2, z1*z2) is certified") {
    auto seq = mfp_sequence(ctx, f->parse("z2"), f->parse("z1*z2"));
    CHECK(verify_xsequence(*f, x, seq).ok);
    CHECK(oracle::chain_holds(*f, x, seq));
  }
}

TEST_CASE("mfp_trace case numbers", "[mfp]") {
  // Right inverses in finite monoids are unique, so two distinct type (a)
  // elements never meet and case 1 does not occur.
  auto flz = make_table(tables::flat_left_zero_monoid(3), "flz");
  auto f   = mfp({flz, c2()});
  auto ctx = make_mfp_context(f, f->parse("g2*f11"));
  std::set<int> seen;
  auto          xs = f->enumerate(3);
  for (auto const& a : xs) {
    for (auto const& b : xs) {
      if (a == b || f->multiply(ctx.x, a) != f->multiply(ctx.x, b)) {
        continue;
      }
      auto t = mfp_trace(ctx, a, b);
      REQUIRE(t.case_number == (t.a.type_b == t.b.type_b ? (t.a.type_b ? 2 : 1) : 3));
      seen.insert(t.case_number);
      REQUIRE(verify_xsequence(*f, mfp_generators(ctx), mfp_sequence(ctx, a, b)).ok);
    }
  }
  CHECK(seen == std::set<int>{2, 3});
}

TEST_CASE("mfp_witness", "[mfp]") {
  SECTION("semilattice with a group") {
    auto f = mfp({sl(), c2()});
    for (auto const& x : f->enumerate(2)) {
      auto ctx = make_mfp_context(f, x);
      auto r   = mfp_witness(ctx, 3);
      REQUIRE(r.applicable);
      REQUIRE(r.verified);
      CHECK(r.theorem == "monoid-free-product");
      CHECK_FALSE(r.exactness.exact);
      REQUIRE(window_generated(ctx, r.generators, 3));
    }
  }
  SECTION("every letter right invertible: empty witness, no certificates") {
    auto f = mfp({c2(), c2()});
    auto r = mfp_witness(make_mfp_context(f, f->parse("g1*g2")), 3);
    REQUIRE(r.verified);
    CHECK(r.generators.empty());
    CHECK(r.certificates.empty());
  }
  SECTION("random monoid pairs") {
    std::mt19937 rng(61);
    for (int k = 0; k < 12; ++k) {
      auto f = mfp({make_table(random_monoid(rng, 4)), make_table(random_monoid(rng, 3))});
      for (auto const& x : f->enumerate(2)) {
        auto ctx = make_mfp_context(f, x);
        auto r   = mfp_witness(ctx, 2);
        REQUIRE(r.verified);
        for (auto const& seq : r.certificates) {
          REQUIRE(oracle::chain_holds(*f, r.generators, seq));
        }
        REQUIRE(window_generated(ctx, r.generators, 2));
      }
    }
  }
}
