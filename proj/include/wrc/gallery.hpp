//
// wrc - right ideals and right congruences of semigroups
//
// Executable counterexamples.  Each fixture is built at a rank n >= 1 with
// symbolic multiplication, and carries claims checked on the elements of
// grade <= bound.  Statements about infinitely generated objects are
// represented by counts (irreducible generators, minimal generating sets)
// that must grow strictly with n.
//

#ifndef WRC_GALLERY_HPP_
#define WRC_GALLERY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "backends.hpp"
#include "classify.hpp"
#include "congruence.hpp"
#include "constructions.hpp"
#include "element.hpp"
#include "fre.hpp"
#include "right_ideals.hpp"
#include "semigroup.hpp"
#include "text.hpp"
#include "witnesses.hpp"
#include "wrc.hpp"

namespace wrc {

  ////////////////////////////////////////////////////////////////////////
  // Symbolic semigroups
  ////////////////////////////////////////////////////////////////////////

  // A semigroup given by its laws as functions.
  class Symbolic : public Semigroup {
   public:
    struct Laws {
      std::string                                            name;
      std::function<bool(Element const&)>                    contains;
      std::function<Element(Element const&, Element const&)> multiply;
      std::function<std::size_t(Element const&)>             grade;
      // Every element of grade <= bound, in a fixed order.
      std::function<std::vector<Element>(std::size_t)> enumerate;
      std::function<std::string(Element const&)>       format;
      std::optional<std::size_t>                       order;
      std::optional<Element>                           identity;
      std::optional<Element>                           zero;
    };

    explicit Symbolic(Laws laws) : _laws(std::move(laws)) {}

    std::string describe() const override {
      return _laws.name;
    }
    bool contains(Element const& x) const override {
      return _laws.contains(x);
    }
    Element multiply(Element const& x, Element const& y) const override {
      return _laws.multiply(x, y);
    }
    std::optional<std::size_t> order() const override {
      return _laws.order;
    }
    std::optional<Element> identity() const override {
      return _laws.identity;
    }
    std::optional<Element> zero() const override {
      return _laws.zero;
    }
    std::size_t grade(Element const& x) const override {
      return _laws.grade(x);
    }
    std::vector<Element> enumerate(std::size_t bound) const override {
      auto it = _cache.find(bound);
      if (it == _cache.end()) {
        it = _cache.emplace(bound, _laws.enumerate(bound)).first;
      }
      return it->second;
    }
    std::string format(Element const& x) const override {
      return _laws.format(x);
    }
    Element parse(std::string_view text) const override {
      auto t = text::trim(text);
      for (std::size_t g = 0; g <= 12; ++g) {
        for (auto const& x : enumerate(g)) {
          if (format(x) == t) {
            return x;
          }
        }
        if (is_finite() && g > *order()) {
          break;
        }
      }
      throw Error("'" + std::string(t) + "' is not an element of " + describe()
                  + " (searched to grade 12)");
    }

   private:
    Laws                                                   _laws;
    mutable std::map<std::size_t, std::vector<Element>>    _cache;
  };

  // An infinite left zero semigroup {l0, l1, ...}, element li of grade i.
  class InfiniteLeftZero : public Semigroup {
   public:
    std::string describe() const override {
      return "left_zero(inf)";
    }
    bool contains(Element const& x) const override {
      return x.kind == Kind::index && x.data.size() == 1 && x.data[0] >= 0;
    }
    Element multiply(Element const& x, Element const&) const override {
      return x;
    }
    std::optional<std::size_t> order() const override {
      return std::nullopt;
    }
    std::size_t grade(Element const& x) const override {
      return x.idx();
    }
    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      for (std::size_t i = 0; i <= bound; ++i) {
        out.push_back(Element::index(i));
      }
      return out;
    }
    std::string format(Element const& x) const override {
      return "l" + std::to_string(x.idx());
    }
    Element parse(std::string_view text) const override {
      auto t = text::trim(text);
      if (t.size() < 2 || t[0] != 'l') {
        throw Error("expected l<k>, found '" + std::string(t) + "'");
      }
      return Element::index(static_cast<std::size_t>(text::parse_int(t.substr(1))));
    }
    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      if (p != u) {
        return std::vector<Element>{};
      }
      return std::nullopt;
    }
    Tri left_cancellative(Element const&) const override {
      return Tri::no;
    }
    Tri right_factorisable(Element const&) const override {
      return Tri::yes;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Fixtures and claims
  ////////////////////////////////////////////////////////////////////////

  struct ClaimResult {
    bool        passed = false;
    std::string evidence;
    // Growth claims: the count that must increase strictly with n.
    std::optional<std::size_t> metric;
    Exactness                  exactness;
  };

  struct Claim {
    std::string                  name;
    std::string                  anchor;
    // The finite surrogate the claim is checked through, if any.
    std::string                  surrogate;
    bool                         growth = false;
    std::function<ClaimResult()> check;
  };

  struct Fixture {
    std::string                         name;
    std::size_t                         n     = 1;
    std::size_t                         bound = 5;
    std::map<std::string, SemigroupPtr> handles;
    std::vector<Claim>                  claims;
  };

  namespace gallery_detail {

    enum Sort : std::int64_t { f = 0, fbar, zero, a, b, one, g, e, at };

    inline Element sorted(Sort s, std::vector<std::int64_t> v = {}) {
      return Element::tagged(s, std::move(v));
    }

    inline Sort sort_of(Element const& x) {
      return static_cast<Sort>(x.sort());
    }

    inline std::vector<std::int64_t> payload(Element const& x) {
      return {x.data.begin() + 1, x.data.end()};
    }

    inline std::vector<std::int64_t> add(std::vector<std::int64_t> x,
                                         std::vector<std::int64_t> const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += y[i];
      }
      return x;
    }

    inline std::vector<std::int64_t> lcm(std::vector<std::int64_t> x,
                                         std::vector<std::int64_t> const& y) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::max(x[i], y[i]);
      }
      return x;
    }

    inline std::size_t degree(std::vector<std::int64_t> const& v) {
      std::size_t d = 0;
      for (auto e : v) {
        d += static_cast<std::size_t>(e);
      }
      return d;
    }

    // Exponent vectors of rank n with degree in [lo, hi].
    inline std::vector<std::vector<std::int64_t>>
    vectors(std::size_t n, std::size_t lo, std::size_t hi) {
      std::vector<std::vector<std::int64_t>> out;
      for (auto const& x : free_commutative_monoid(n)->enumerate(hi)) {
        if (degree(x.data) >= lo) {
          out.push_back(x.data);
        }
      }
      return out;
    }

    inline std::string vec_name(std::vector<std::int64_t> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return out + "]";
    }

    inline std::vector<Element> window(Semigroup const& s, std::size_t bound) {
      return s.is_finite() ? s.elements() : s.enumerate(bound);
    }

    // gS^1 restricted to the window w.
    inline std::set<Element> principal(Semigroup const& s, Element const& g,
                                       std::vector<Element> const& w) {
      std::set<Element> in(w.begin(), w.end());
      std::set<Element> out;
      if (in.count(g) != 0) {
        out.insert(g);
      }
      for (auto const& c : w) {
        auto p = s.multiply(g, c);
        if (in.count(p) != 0) {
          out.insert(p);
        }
      }
      return out;
    }

    inline std::set<Element> generated(Semigroup const& s,
                                       std::vector<Element> const& gens,
                                       std::vector<Element> const& w) {
      std::set<Element> out;
      for (auto const& g : gens) {
        auto p = principal(s, g, w);
        out.insert(p.begin(), p.end());
      }
      return out;
    }

    inline std::set<Element> meet(std::set<Element> const& x,
                                  std::set<Element> const& y) {
      std::set<Element> out;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::inserter(out, out.begin()));
      return out;
    }

    // Members not in mS^1 for another member m (within the window).
    inline std::vector<Element> irreducibles(Semigroup const&            s,
                                             std::set<Element> const&    members,
                                             std::vector<Element> const& w) {
      std::vector<Element> out;
      std::map<Element, std::set<Element>> ideals;
      for (auto const& m : members) {
        ideals.emplace(m, principal(s, m, w));
      }
      for (auto const& u : members) {
        bool reducible = false;
        for (auto const& v : members) {
          if (v != u && ideals[v].count(u) != 0 && ideals[u].count(v) == 0) {
            reducible = true;
            break;
          }
        }
        if (!reducible) {
          out.push_back(u);
        }
      }
      return out;
    }

    inline ClaimResult result(bool ok, std::string evidence,
                              Exactness ex = Exactness::full()) {
      return {ok, std::move(evidence), std::nullopt, ex};
    }

    inline ClaimResult growth(std::size_t count, bool ok, std::string evidence,
                              Exactness ex) {
      return {ok, std::move(evidence), count, ex};
    }

    inline Claim associativity_claim(SemigroupPtr const& s, std::size_t bound) {
      return {"laws of " + s->describe() + " are associative", "semigroup laws",
              "", false, [s, bound]() {
                auto bad = associativity_failure(*s, bound);
                bool ok  = !bad && identity_zero_laws_hold(*s, bound);
                return result(ok,
                              bad ? "fails on (" + s->format((*bad)[0]) + ", "
                                        + s->format((*bad)[1]) + ", "
                                        + s->format((*bad)[2]) + ")"
                                  : "checked to grade " + std::to_string(bound),
                              s->is_finite() ? Exactness::full()
                                             : Exactness::up_to(bound));
              }};
    }

    // Every pair of the window in the same class of r_S(a) is joined by an
    // X-sequence to the first member of its class.
    inline ClaimResult bounded_generation(SemigroupPtr const& s, Element const& a,
                                          PairSet<Element> const& x,
                                          std::size_t bound, std::size_t depth) {
      for (auto const& [p, q] : x.generators()) {
        if (!in_annihilator(*s, a, p, q)) {
          return result(false, "(" + s->format(p) + ", " + s->format(q)
                                   + ") is not in r(" + s->format(a) + ")");
        }
      }
      std::map<Element, Element> rep;
      std::size_t                certs = 0;
      SearchLimits               lim{depth, bound, 20000};
      for (auto const& u : window(*s, bound)) {
        auto key = s->multiply(a, u);
        auto it  = rep.find(key);
        if (it == rep.end()) {
          rep.emplace(key, u);
          continue;
        }
        auto res = find_xsequence(*s, x, it->second, u, lim);
        if (!res.sequence || !verify_xsequence(*s, x, *res.sequence)) {
          return result(false, "no sequence from " + s->format(it->second)
                                   + " to " + s->format(u));
        }
        ++certs;
      }
      return result(true, std::to_string(certs) + " certificates, "
                              + std::to_string(rep.size()) + " classes",
                    Exactness::up_to(bound));
    }

    ////////////////////////////////////////////////////////////////////////
    // rih:lsse
    ////////////////////////////////////////////////////////////////////////

    // T = F u F-bar u {0} for F free commutative of rank n, S = T u {a, b},
    // M = {1, g} u S.  The products aa, ab, ba, bb are taken to be 0.
    inline Element lsse_mul(Element const& x, Element const& y) {
      auto sx = sort_of(x);
      auto sy = sort_of(y);
      if (sx == one) {
        return y;
      }
      if (sy == one) {
        return x;
      }
      if (sx == g || sy == g) {
        if (sx == g && sy == g) {
          return sorted(one);
        }
        auto const& other = sx == g ? y : x;
        switch (sort_of(other)) {
          case a: return sorted(b);
          case b: return sorted(a);
          default: return other;
        }
      }
      if (sx == zero || sy == zero) {
        return sorted(zero);
      }
      bool xl = sx == a || sx == b;
      bool yl = sy == a || sy == b;
      if (xl || yl) {
        if (xl && sy == f) {
          return sorted(fbar, payload(y));
        }
        if (yl && sx == f) {
          return sorted(fbar, payload(x));
        }
        return sorted(zero);
      }
      if (sx == fbar && sy == fbar) {
        return sorted(zero);
      }
      auto v = add(payload(x), payload(y));
      return sorted(sx == f && sy == f ? f : fbar, std::move(v));
    }

    inline std::string lsse_format(Element const& x) {
      switch (sort_of(x)) {
        case f: return vec_name(payload(x));
        case fbar: return "~" + vec_name(payload(x));
        case zero: return "0";
        case a: return "a";
        case b: return "b";
        case one: return "1";
        case g: return "g";
        default: return "?";
      }
    }

    inline SemigroupPtr lsse_part(std::size_t n, int level) {
      static char const* names[] = {"T", "S", "M"};
      Symbolic::Laws laws;
      laws.name     = std::string("rih_lsse_") + names[level] + "(" + std::to_string(n) + ")";
      laws.contains = [n, level](Element const& x) {
        if (x.kind != Kind::tagged) {
          return false;
        }
        switch (sort_of(x)) {
          case f:
          case fbar: return x.data.size() == n + 1 && degree(payload(x)) > 0;
          case zero: return true;
          case a:
          case b: return level >= 1;
          case one:
          case g: return level >= 2;
          default: return false;
        }
      };
      laws.multiply = lsse_mul;
      laws.grade    = [](Element const& x) {
        auto s = sort_of(x);
        return s == f || s == fbar ? degree(payload(x)) : std::size_t(0);
      };
      laws.enumerate = [n, level](std::size_t bound) {
        std::vector<Element> out;
        if (level >= 2) {
          out.push_back(sorted(one));
          out.push_back(sorted(g));
        }
        if (level >= 1) {
          out.push_back(sorted(a));
          out.push_back(sorted(b));
        }
        out.push_back(sorted(zero));
        for (auto const& v : vectors(n, 1, bound)) {
          out.push_back(sorted(f, v));
        }
        for (auto const& v : vectors(n, 1, bound)) {
          out.push_back(sorted(fbar, v));
        }
        return out;
      };
      laws.format = lsse_format;
      laws.zero   = sorted(zero);
      if (level >= 2) {
        laws.identity = sorted(one);
      }
      return std::make_shared<Symbolic>(std::move(laws));
    }

    // For R-incomparable u, v of F (grade <= 2) and l = lcm(u, v): within
    // the window, uS^1 n vS^1 is generated by l (with l-bar added when S has
    // no identity, since l-bar = uw-bar needs w in F), and u-bar S^1 n
    // v-bar S^1 = u S^1 n v-bar S^1 = l-bar S^1.
    inline ClaimResult lsse_closed_forms(SemigroupPtr const& s, std::size_t n,
                                         std::size_t bound) {
      auto        w     = window(*s, bound);
      auto        small = vectors(n, 1, 2);
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i + 1; j < small.size(); ++j) {
          auto u  = sorted(f, small[i]);
          auto v  = sorted(f, small[j]);
          auto pu = principal(*s, u, w);
          auto pv = principal(*s, v, w);
          if (pu.count(v) != 0 || pv.count(u) != 0) {
            continue;
          }
          auto l  = small[i];
          l       = lcm(l, small[j]);
          auto lf = sorted(f, l);
          auto lb = sorted(fbar, l);
          auto expect = s->is_monoid() ? principal(*s, lf, w)
                                       : generated(*s, {lf, lb}, w);
          if (meet(pu, pv) != expect) {
            return result(false, "uS^1 n vS^1 for u = " + s->format(u)
                                     + ", v = " + s->format(v));
          }
          auto ub = sorted(fbar, small[i]);
          auto vb = sorted(fbar, small[j]);
          auto lhs1 = meet(principal(*s, ub, w), principal(*s, vb, w));
          auto lhs2 = meet(pu, principal(*s, vb, w));
          if (lhs1 != principal(*s, lb, w) || lhs2 != lhs1) {
            return result(false, "bar intersections for u = " + s->format(u)
                                     + ", v = " + s->format(v));
          }
          ++pairs;
        }
      }
      return result(pairs > 0 || n == 1,
                    std::to_string(pairs) + " incomparable pairs checked",
                    Exactness::up_to(bound));
    }

    // Which form of the bar part of uS^1 holds: {uw-bar : w in F} or
    // {uw-bar : w in F^1}.  Returns 1 or 2, 0 if neither.
    inline int lsse_bar_form(SemigroupPtr const& s, std::size_t n,
                             std::size_t bound) {
      auto w = window(*s, bound);
      auto u = std::vector<std::int64_t>(n, 0);
      u[0]   = 1;
      std::set<Element> bar_part;
      for (auto const& x : principal(*s, sorted(f, u), w)) {
        if (sort_of(x) == fbar) {
          bar_part.insert(x);
        }
      }
      std::set<Element> with_f;
      std::set<Element> with_f1{sorted(fbar, u)};
      for (auto const& v : vectors(n, 1, bound)) {
        auto uv = add(u, v);
        if (degree(uv) <= bound) {
          with_f.insert(sorted(fbar, uv));
          with_f1.insert(sorted(fbar, uv));
        }
      }
      return bar_part == with_f ? 1 : bar_part == with_f1 ? 2 : 0;
    }

    inline Fixture rih_lsse(std::size_t n, std::size_t bound) {
      Fixture fx{"rih:lsse", n, bound, {}, {}};
      auto    T = lsse_part(n, 0);
      auto    S = lsse_part(n, 1);
      auto    M = lsse_part(n, 2);
      fx.handles = {{"T", T}, {"S", S}, {"M", M}};
      auto small = std::min<std::size_t>(bound, 3);
      fx.claims.push_back(associativity_claim(M, small));
      fx.claims.push_back({"T is RIH: intersections generated by lcm(u, v) and its bar",
                           "rih-lsse-T", "", false,
                           [=] { return lsse_closed_forms(T, n, bound); }});
      fx.claims.push_back({"M is RIH: intersections generated by lcm(u, v)",
                           "rih-lsse-M", "", false,
                           [=] { return lsse_closed_forms(M, n, bound); }});
      fx.claims.push_back(
          {"bar part of uT^1 ranges over w in F, of uM over w in F^1",
           "rih-lsse-displays", "", false, [=] {
             int t = lsse_bar_form(T, n, bound);
             int m = lsse_bar_form(M, n, bound);
             return result(t == 1 && m == 2,
                           "T form " + std::to_string(t) + ", M form "
                               + std::to_string(m),
                           Exactness::up_to(bound));
           }});
      fx.claims.push_back(
          {"S is a small extension of T and large in M", "rih-lsse-large", "",
           false, [=] {
             auto ws = window(*S, 0);
             auto wm = window(*M, 0);
             std::size_t extra_s = 0;
             std::size_t extra_m = 0;
             for (auto const& x : ws) {
               extra_s += T->contains(x) ? 0 : 1;
             }
             for (auto const& x : wm) {
               extra_m += S->contains(x) ? 0 : 1;
             }
             return result(extra_s == 2 && extra_m == 2,
                           "|S \\ T| = " + std::to_string(extra_s)
                               + ", |M \\ S| = " + std::to_string(extra_m));
           }});
      fx.claims.push_back(
          {"aS^1 n bS^1 = F-bar u {0}", "rih-lsse-S", "", false, [=] {
             auto w   = window(*S, bound);
             auto lhs = meet(principal(*S, sorted(a), w), principal(*S, sorted(b), w));
             std::set<Element> rhs{sorted(zero)};
             for (auto const& x : w) {
               if (sort_of(x) == fbar) {
                 rhs.insert(x);
               }
             }
             return result(lhs == rhs, std::to_string(lhs.size()) + " elements",
                           Exactness::up_to(bound));
           }});
      fx.claims.push_back(
          {"irreducible generators of aS^1 n bS^1 include every x_i-bar",
           "rih-lsse-S", "irreducible elements of F-bar u {0} of grade <= bound",
           true, [=] {
             auto w   = window(*S, bound);
             auto lhs = meet(principal(*S, sorted(a), w), principal(*S, sorted(b), w));
             auto irr = irreducibles(*S, lhs, w);
             bool has_all = true;
             for (std::size_t i = 0; i < n; ++i) {
               std::vector<std::int64_t> v(n, 0);
               v[i] = 1;
               has_all = has_all
                         && std::find(irr.begin(), irr.end(), sorted(fbar, v))
                                != irr.end();
             }
             return growth(irr.size(), has_all && irr.size() >= n,
                           std::to_string(irr.size()) + " irreducibles "
                               + format_elements(*S, irr),
                           Exactness::up_to(bound));
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // Howson,ideal
    ////////////////////////////////////////////////////////////////////////

    inline Fixture howson_ideal(std::size_t n, std::size_t bound) {
      Fixture fx{"Howson,ideal", n, bound, {}, {}};
      auto    n0 = free_commutative_monoid(2);
      auto    nn = std::make_shared<Subsemigroup>(
          n0, [](Element const& x) { return x.data[0] >= 1 && x.data[1] >= 1; },
          "NxN", 4);
      fx.handles = {{"N0xN0", n0}, {"NxN", nn}};
      std::size_t box = 3 + n;
      fx.claims.push_back({"N0 x N0 is RIH (componentwise max)", "howson-ideal",
                           "", false, [=] {
                             auto r = check_rih(n0, 3);
                             return result(r.verdict == Tri::yes, r.note,
                                           r.exactness);
                           }});
      auto members = [=]() {
        std::set<Element> out;
        for (std::int64_t x = 1; x <= static_cast<std::int64_t>(box); ++x) {
          for (std::int64_t y = 1; y <= static_cast<std::int64_t>(box); ++y) {
            auto e = Element::vec({x, y});
            if (in_principal_right_ideal(*nn, Element::vec({1, 2}), e, 2 * box) == Tri::yes
                && in_principal_right_ideal(*nn, Element::vec({2, 1}), e, 2 * box)
                       == Tri::yes) {
              out.insert(e);
            }
          }
        }
        return out;
      };
      fx.claims.push_back(
          {"(1,2)S^1 n (2,1)S^1 = {(x,y) : x, y >= 3} in NxN", "howson-ideal",
           "", false, [=] {
             auto m  = members();
             bool ok = true;
             for (std::int64_t x = 1; x <= static_cast<std::int64_t>(box); ++x) {
               for (std::int64_t y = 1; y <= static_cast<std::int64_t>(box); ++y) {
                 ok = ok && (m.count(Element::vec({x, y})) != 0) == (x >= 3 && y >= 3);
               }
             }
             return result(ok, "box [1," + std::to_string(box) + "]^2",
                           Exactness::up_to(box));
           }});
      fx.claims.push_back(
          {"irreducible generators of the intersection", "howson-ideal",
           "irreducible elements in the box [3, 3 + n]^2", true, [=] {
             auto m = members();
             std::size_t irr = 0;
             for (auto const& u : m) {
               bool red = false;
               for (auto const& v : m) {
                 if (v != u && in_principal_right_ideal(*nn, v, u, 2 * box) == Tri::yes) {
                   red = true;
                   break;
                 }
               }
               irr += red ? 0 : 1;
             }
             std::size_t expect = 2 * (box - 2) - 1;
             return growth(irr, irr == expect,
                           std::to_string(irr) + " irreducibles, 2(B - 2) - 1 = "
                               + std::to_string(expect),
                           Exactness::up_to(box));
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // Ideal and Rees quotient RIH, S not
    ////////////////////////////////////////////////////////////////////////

    // S = F u {a_t : t in T} u {0} for T = NxN.  NxN is not finitely
    // generated, so F has the letters x_k -> (1, k), y_k -> (k, 1) for
    // k <= n + 2, which reach every point of T in the box [1, 3 + n]^2 that
    // NxN does.  In that box a_(1,2)S^1 n a_(2,1)S^1 is examined.
    inline Fixture ideal_rees(std::size_t n, std::size_t bound) {
      Fixture fx{"ideal-rees", n, bound, {}, {}};
      auto    letters = static_cast<std::int64_t>(2 * (n + 2));
      auto    step    = [](std::int64_t l) -> std::pair<std::int64_t, std::int64_t> {
        auto k = l / 2 + 1;
        return l % 2 == 0 ? std::make_pair(std::int64_t(1), k)
                          : std::make_pair(k, std::int64_t(1));
      };
      Symbolic::Laws laws;
      laws.name     = "ideal_rees(" + std::to_string(n) + ")";
      laws.contains = [letters](Element const& x) {
        if (x.kind == Kind::word) {
          return !x.data.empty()
                 && std::all_of(x.data.begin(), x.data.end(), [letters](std::int64_t l) {
                      return l >= 0 && l < letters;
                    });
        }
        return x.kind == Kind::tagged
               && (sort_of(x) == zero
                   || (sort_of(x) == at && x.data.size() == 3 && x.data[1] >= 1
                       && x.data[2] >= 1));
      };
      laws.multiply = [step](Element const& x, Element const& y) {
        if (x.kind == Kind::word && y.kind == Kind::word) {
          auto d = x.data;
          d.insert(d.end(), y.data.begin(), y.data.end());
          return Element::word(std::move(d));
        }
        if (x.kind == Kind::tagged && sort_of(x) == at && y.kind == Kind::word) {
          auto t = payload(x);
          for (auto l : y.data) {
            t[0] += step(l).first;
            t[1] += step(l).second;
          }
          return sorted(at, std::move(t));
        }
        return sorted(zero);
      };
      laws.grade = [](Element const& x) -> std::size_t {
        if (x.kind == Kind::word) {
          return x.data.size();
        }
        if (sort_of(x) == at) {
          return static_cast<std::size_t>(x.data[1] + x.data[2] - 2);
        }
        return 0;
      };
      laws.enumerate = [letters](std::size_t bound) {
        std::vector<Element> out{sorted(zero)};
        std::vector<std::vector<std::int64_t>> layer{{}};
        for (std::size_t len = 1; len <= bound; ++len) {
          std::vector<std::vector<std::int64_t>> next;
          for (auto const& w : layer) {
            for (std::int64_t l = 0; l < letters; ++l) {
              auto v = w;
              v.push_back(l);
              out.push_back(Element::word(v));
              next.push_back(std::move(v));
            }
          }
          layer = std::move(next);
        }
        for (std::int64_t s = 2; s <= static_cast<std::int64_t>(bound) + 2; ++s) {
          for (std::int64_t x = 1; x < s; ++x) {
            out.push_back(sorted(at, {x, s - x}));
          }
        }
        return out;
      };
      laws.format = [](Element const& x) -> std::string {
        if (x.kind == Kind::word) {
          std::string out;
          for (auto l : x.data) {
            out += (l % 2 == 0 ? "x" : "y") + std::to_string(l / 2 + 1);
          }
          return out;
        }
        if (sort_of(x) == at) {
          return "a(" + std::to_string(x.data[1]) + "," + std::to_string(x.data[2]) + ")";
        }
        return "0";
      };
      laws.zero  = sorted(zero);
      auto S     = std::make_shared<Symbolic>(std::move(laws));
      fx.handles = {{"S", S}};
      auto small = std::min<std::size_t>(bound, 2);
      auto in_i  = [](Element const& x) { return x.kind == Kind::tagged; };
      fx.claims.push_back(associativity_claim(S, small));
      fx.claims.push_back(
          {"I = {a_t} u {0} is an ideal and a null semigroup", "ideal-rees", "",
           false, [=] {
             auto w = window(*S, small);
             for (auto const& x : w) {
               for (auto const& y : w) {
                 auto p = S->multiply(x, y);
                 if ((in_i(x) || in_i(y)) && !in_i(p)) {
                   return result(false, "product leaves I");
                 }
                 if (in_i(x) && in_i(y) && sort_of(p) != zero) {
                   return result(false, "I is not null");
                 }
               }
             }
             return result(true, "checked to grade " + std::to_string(small),
                           Exactness::up_to(small));
           }});
      fx.claims.push_back(
          {"S/I is F with a zero adjoined (words never enter I)", "ideal-rees",
           "", false, [=] {
             auto w = window(*S, small);
             for (auto const& x : w) {
               for (auto const& y : w) {
                 if (x.kind == Kind::word && y.kind == Kind::word
                     && in_i(S->multiply(x, y))) {
                   return result(false, "a product of words lies in I");
                 }
               }
             }
             return result(true, "free semigroup with zero: RIH by the prefix rule",
                           Exactness::up_to(small));
           }});
      std::size_t box = 3 + n;
      fx.claims.push_back(
          {"irreducible generators of a_(1,2)S^1 n a_(2,1)S^1", "ideal-rees",
           "irreducible elements a_t with t in the box [1, 3 + n]^2", true, [=] {
             auto in_box = [box](Element const& x) {
               return sort_of(x) == at && x.data[1] <= static_cast<std::int64_t>(box)
                      && x.data[2] <= static_cast<std::int64_t>(box);
             };
             // a_t S^1 inside the box, by right multiplication with letters.
             auto reach = [&](Element const& g) {
               std::set<Element>    out{g};
               std::vector<Element> todo{g};
               while (!todo.empty()) {
                 auto x = todo.back();
                 todo.pop_back();
                 for (std::int64_t l = 0; l < letters; ++l) {
                   auto p = S->multiply(x, Element::word({l}));
                   if (in_box(p) && out.insert(p).second) {
                     todo.push_back(p);
                   }
                 }
               }
               return out;
             };
             auto m = meet(reach(sorted(at, {1, 2})), reach(sorted(at, {2, 1})));
             std::map<Element, std::set<Element>> ideals;
             for (auto const& u : m) {
               ideals.emplace(u, reach(u));
             }
             std::vector<Element> gens;
             bool                 shape = true;
             for (auto const& u : m) {
               shape = shape && u.data[1] >= 3 && u.data[2] >= 3;
               bool red = false;
               for (auto const& v : m) {
                 red = red || (v != u && ideals[v].count(u) != 0);
               }
               if (!red) {
                 gens.push_back(u);
               }
             }
             std::size_t expect = 2 * (box - 2) - 1;
             return growth(gens.size(),
                           shape && m.size() == (box - 2) * (box - 2)
                               && gens.size() == expect,
                           std::to_string(gens.size()) + " irreducibles "
                               + format_elements(*S, gens),
                           Exactness::up_to(box));
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // fre:rq and wrc:rq
    ////////////////////////////////////////////////////////////////////////

    inline std::string alphabet(std::size_t n) {
      std::string out;
      for (std::size_t i = 0; i < n; ++i) {
        out += static_cast<char>('a' + i);
      }
      return out;
    }

    inline SemigroupPtr null_quotient(std::size_t n) {
      auto f = free_semigroup(alphabet(n));
      std::vector<Element> twos;
      for (auto const& x : f->enumerate(2)) {
        if (f->grade(x) == 2) {
          twos.push_back(x);
        }
      }
      return rees_quotient(f, generated_ideal(f, twos), 3);
    }

    inline Fixture fre_rq(std::size_t n, std::size_t bound) {
      Fixture fx{"fre:rq", n, bound, {}, {}};
      auto    f = free_semigroup(alphabet(n));
      auto    q = null_quotient(n);
      fx.handles = {{"F", f}, {"F/I", q}};
      fx.claims.push_back(
          {"F is FRE (left cancellative)", "fre-rq", "", false, [=] {
             auto r = check_fre(*f, 3);
             return result(r.verdict == Tri::yes, "closed form", r.exactness);
           }});
      fx.claims.push_back(
          {"F/I is a null semigroup of order n + 1", "fre-rq", "", false, [=] {
             bool ok = q->order() == n + 1;
             for (auto const& x : q->elements()) {
               for (auto const& y : q->elements()) {
                 ok = ok && q->multiply(x, y).kind == Kind::zero;
               }
             }
             return result(ok, "order " + std::to_string(*q->order()));
           }});
      fx.claims.push_back(
          {"minimal generating set of r(a) for a letter a", "fre-rq",
           "size of a minimal generating set of r(a) = nabla on n + 1 elements",
           true, [=] {
             auto tab = tabulate(*q);
             auto a   = q->parse("a");
             auto x   = extract_generators(tab.table, annihilator(tab.table, tab.of(a)));
             return growth(x.size(), x.size() == n,
                           std::to_string(x.size()) + " pairs", Exactness::full());
           }});
      return fx;
    }

    inline Fixture wrc_rq(std::size_t n, std::size_t bound) {
      Fixture fx{"wrc:rq", n, bound, {}, {}};
      auto    fm = free_monoid(alphabet(n));
      auto    q  = null_quotient(n);
      auto    q1 = adjoin_identity(q);
      fx.handles = {{"F", fm}, {"F/I", q}, {"(F/I)^1", q1}};
      fx.claims.push_back(
          {"the free monoid is RIH and FRE", "wrc-rq", "", false, [=] {
             auto r = check_wrc(fm, 3);
             return result(r.conditions[3] == Tri::yes && r.conditions[4] == Tri::yes,
                           "conditions (4), (5) by closed forms", r.exactness);
           }});
      fx.claims.push_back({"F/I is RIH", "wrc-rq", "", false, [=] {
                             auto r = check_rih(q, 0);
                             return result(r.verdict == Tri::yes, "exhaustive");
                           }});
      fx.claims.push_back(
          {"content of r(a) in (F/I)^1 needs every letter as a generator",
           "wrc-rq", "minimal generators of C(r(a))(F/I)^1", true, [=] {
             auto tab = tabulate(*q1);
             auto a   = q1->parse("a");
             auto x   = to_elements(
                 tab, extract_generators(tab.table, annihilator(tab.table, tab.of(a))));
             Exactness ex;
             auto gens = detail::minimal_generators(*q1, content(x), 0, ex);
             return growth(gens.size(), gens.size() == n,
                           format_elements(*q1, gens), Exactness::full());
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // s1notsR
    ////////////////////////////////////////////////////////////////////////

    inline Fixture s1nots_r(std::size_t n, std::size_t bound) {
      Fixture fx{"s1notsR", n, bound, {}, {}};
      auto    s  = left_zero_semigroup(n);
      auto    s1 = adjoin_identity(s);
      fx.handles = {{"S", s}, {"S^1", s1}};
      fx.claims.push_back(
          {"S^1 is FRE: r(a) = <(ba, 1)> for every a", "s1-not-s", "", false, [=] {
             std::size_t ok = 0;
             for (auto const& a : s1->elements()) {
               auto r = regular_witness(s1, a, a, {*s1->identity()});
               ok += r.applicable && r.verified ? 1 : 0;
             }
             return result(ok == s1->elements().size(),
                           std::to_string(ok) + " witnesses verified");
           }});
      fx.claims.push_back(
          {"minimal U with S = US^1 is all of S", "s1-not-s",
           "size of a minimal U with S = US^1", true, [=] {
             auto u = right_ideal_generators(*s, 0);
             return growth(u.generators.size(), u.generators.size() == n,
                           format_elements(*s, u.generators), Exactness::full());
           }});
      fx.claims.push_back(
          {"r_S(a) = nabla needs n - 1 pairs", "s1-not-s",
           "size of a minimal generating set of r_S(a)", false, [=] {
             auto r = check_fre(*s, 0);
             auto k = r.entries.front().generators.size();
             return result(k + 1 == n, std::to_string(k) + " pairs");
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // fre:lsse, ISIR, wrc:lsse
    ////////////////////////////////////////////////////////////////////////

    // T = {a} u F^0 for F free commutative monoid of rank n, S = T u {e}.
    // ue = eu = 0 is read for u in F^0 \ {1}, since 1 is the identity.
    inline Element fl_mul(Element const& x, Element const& y) {
      auto is_one = [](Element const& z) {
        return sort_of(z) == f && degree(payload(z)) == 0;
      };
      if (is_one(x)) {
        return y;
      }
      if (is_one(y)) {
        return x;
      }
      auto sx = sort_of(x);
      auto sy = sort_of(y);
      if (sx == zero || sy == zero) {
        return sorted(zero);
      }
      if (sx == f && sy == f) {
        return sorted(f, add(payload(x), payload(y)));
      }
      if (sx == e && sy == e) {
        return sorted(e);
      }
      if ((sx == e && sy == a) || (sx == a && sy == e)) {
        return sorted(a);
      }
      return sorted(zero);
    }

    inline SemigroupPtr fl_part(std::size_t n, bool with_e) {
      Symbolic::Laws laws;
      laws.name     = std::string(with_e ? "fre_lsse_S(" : "fre_lsse_T(")
                  + std::to_string(n) + ")";
      laws.contains = [n, with_e](Element const& x) {
        if (x.kind != Kind::tagged) {
          return false;
        }
        switch (sort_of(x)) {
          case f: return x.data.size() == n + 1;
          case a:
          case zero: return true;
          case e: return with_e;
          default: return false;
        }
      };
      laws.multiply = fl_mul;
      laws.grade    = [](Element const& x) {
        return sort_of(x) == f ? degree(payload(x)) : std::size_t(0);
      };
      laws.enumerate = [n, with_e](std::size_t bound) {
        std::vector<Element> out{sorted(f, std::vector<std::int64_t>(n, 0))};
        if (with_e) {
          out.push_back(sorted(e));
        }
        out.push_back(sorted(a));
        out.push_back(sorted(zero));
        for (auto const& v : vectors(n, 1, bound)) {
          out.push_back(sorted(f, v));
        }
        return out;
      };
      laws.format = [](Element const& x) -> std::string {
        switch (sort_of(x)) {
          case f: return degree(payload(x)) == 0 ? "1" : vec_name(payload(x));
          case a: return "a";
          case e: return "e";
          default: return "0";
        }
      };
      laws.identity = sorted(f, std::vector<std::int64_t>(n, 0));
      laws.zero     = sorted(zero);
      return std::make_shared<Symbolic>(std::move(laws));
    }

    // C(r_T(a))T^1 = T \ {1} in the window, and its irreducible generators.
    inline ClaimResult fl_t_growth(SemigroupPtr const& T, std::size_t n,
                                   std::size_t bound) {
      auto              w   = window(*T, bound);
      auto              one = *T->identity();
      auto              a   = sorted(gallery_detail::a);
      std::set<Element> cont;
      for (auto const& [p, q] : annihilator_pairs(*T, a, bound)) {
        cont.insert(p);
        cont.insert(q);
      }
      std::set<Element> rest;
      for (auto const& x : w) {
        if (x != one) {
          rest.insert(x);
        }
      }
      auto ideal = generated(*T, {cont.begin(), cont.end()}, w);
      auto irr   = irreducibles(*T, rest, w);
      bool ok    = cont == rest && ideal == rest && irr.size() == n + 1;
      return growth(irr.size(), ok,
                    "C(r_T(a))T^1 = T \\ {1} in the window; irreducibles "
                        + format_elements(*T, irr),
                    Exactness::up_to(bound));
    }

    inline std::vector<Claim> fl_s_fre_claims(SemigroupPtr const& S, std::size_t n,
                                              std::size_t bound) {
      std::vector<Claim> out;
      auto one  = *S->identity();
      auto ee   = sorted(e);
      auto aa   = sorted(a);
      auto z    = sorted(zero);
      auto xone = std::vector<std::int64_t>(n, 0);
      xone[0]   = 1;
      auto x1   = sorted(f, xone);
      out.push_back(
          {"r_S(a) = {1,e}^2 u (S \\ {1,e})^2", "fre-lsse-display", "", false, [=] {
             for (auto const& s : window(*S, bound)) {
               for (auto const& t : window(*S, bound)) {
                 bool in   = in_annihilator(*S, aa, s, t);
                 bool low  = s == one || s == ee;
                 bool low2 = t == one || t == ee;
                 if (in != (low == low2)) {
                   return result(false, "differs at (" + S->format(s) + ", "
                                            + S->format(t) + ")");
                 }
               }
             }
             return result(true, "all pairs of grade <= " + std::to_string(bound),
                           Exactness::up_to(bound));
           }});
      out.push_back({"r_S(a) = <(1,e), (a,0)>", "fre-lsse-generators", "", false,
                     [=] {
                       PairSet<Element> x;
                       x.insert(one, ee);
                       x.insert(aa, z);
                       return bounded_generation(S, aa, x, bound, 3);
                     }});
      out.push_back(
          {"r_S(u) = Delta u {e,a,0}^2 for u in F \\ {1}, generated by "
           "(e,0), (a,0)",
           "fre-lsse-u", "", false, [=] {
             std::set<Element> low{ee, aa, z};
             for (auto const& u : window(*S, 2)) {
               if (sort_of(u) != f || u == one) {
                 continue;
               }
               for (auto const& s : window(*S, bound)) {
                 for (auto const& t : window(*S, bound)) {
                   bool in = in_annihilator(*S, u, s, t);
                   if (in != (s == t || (low.count(s) != 0 && low.count(t) != 0))) {
                     return result(false, "display fails for u = " + S->format(u));
                   }
                 }
               }
             }
             PairSet<Element> x;
             x.insert(ee, z);
             x.insert(aa, z);
             return bounded_generation(S, x1, x, bound, 3);
           }});
      out.push_back({"r_S(e) = <(e,1)> (e regular)", "fre-lsse-e", "", false, [=] {
                       auto r = regular_witness(S, ee, ee, {one}, bound);
                       return result(r.applicable && r.verified,
                                     std::to_string(r.certificates.size())
                                         + " certificates",
                                     r.exactness);
                     }});
      out.push_back({"r_S(0) = <(0,1)> (0 regular)", "fre-lsse-0", "", false, [=] {
                       auto r = regular_witness(S, z, z, {one}, bound);
                       return result(r.applicable && r.verified,
                                     std::to_string(r.certificates.size())
                                         + " certificates",
                                     r.exactness);
                     }});
      return out;
    }

    inline Fixture fre_lsse(std::size_t n, std::size_t bound) {
      Fixture fx{"fre:lsse", n, bound, {}, {}};
      auto    T = fl_part(n, false);
      auto    S = fl_part(n, true);
      fx.handles = {{"T", T}, {"S", S}};
      fx.claims.push_back(associativity_claim(S, std::min<std::size_t>(bound, 3)));
      fx.claims.push_back(
          {"T is a small extension of F and large in S", "fre-lsse-large", "",
           false, [=] {
             std::size_t outside_f = 0;
             std::size_t outside_t = 0;
             for (auto const& x : window(*S, bound)) {
               outside_f += sort_of(x) == f ? 0 : 1;
               outside_t += T->contains(x) ? 0 : 1;
             }
             return result(outside_f == 3 && outside_t == 1,
                           "|T \\ F| = 2, |S \\ T| = 1");
           }});
      for (auto& c : fl_s_fre_claims(S, n, bound)) {
        fx.claims.push_back(std::move(c));
      }
      fx.claims.push_back({"T is not FRE: the content ideal needs a, x_1, ..., x_n",
                           "fre-lsse-T",
                           "irreducible generators of C(r_T(a))T^1 of grade <= bound",
                           true, [=] { return fl_t_growth(T, n, bound); }});
      return fx;
    }

    inline Fixture isir(std::size_t n, std::size_t bound) {
      Fixture fx{"ISIR", n, bound, {}, {}};
      auto    T  = fl_part(n, false);
      auto    aa = sorted(a);
      auto    z  = sorted(zero);
      Ideal   ideal{[](Element const& x) {
                    return x.kind == Kind::tagged
                           && (sort_of(x) == a || sort_of(x) == zero);
                  },
                  "{a, 0}", {aa, z}};
      auto q = rees_quotient(T, ideal, std::min<std::size_t>(bound, 3));
      fx.handles = {{"T", T}, {"T/I", q}};
      fx.claims.push_back(
          {"I = {a, 0} is an ideal of T and FRE", "isir-ideal", "", false, [=] {
             auto i = std::make_shared<Subsemigroup>(
                 T, ideal.contains, "{a, 0}", std::min<std::size_t>(bound, 3), 2);
             bool null = true;
             for (auto const& x : i->elements()) {
               for (auto const& y : i->elements()) {
                 null = null && T->multiply(x, y) == z;
               }
             }
             auto r = check_fre(*i, 0);
             return result(null && r.verdict == Tri::yes,
                           "null semigroup of order 2, FRE exactly");
           }});
      fx.claims.push_back(
          {"T/I is F with a zero adjoined and FRE", "isir-quotient", "", false, [=] {
             auto one = *T->identity();
             for (auto const& u : window(*q, bound)) {
               if (u.kind == Kind::zero) {
                 auto r = regular_witness(q, u, u, {one}, bound);
                 if (!r.applicable || !r.verified) {
                   return result(false, "r(0) witness failed");
                 }
               } else if (!annihilator_pairs(*q, u, bound).empty()) {
                 return result(false, q->format(u) + " is not left cancellative");
               }
             }
             return result(true, "r(0) = <(0,1)>, other elements left cancellative",
                           Exactness::up_to(bound));
           }});
      fx.claims.push_back({"T is not FRE", "isir-T",
                           "irreducible generators of C(r_T(a))T^1 of grade <= bound",
                           true, [=] { return fl_t_growth(T, n, bound); }});
      return fx;
    }

    inline Fixture wrc_lsse(std::size_t n, std::size_t bound) {
      Fixture fx{"wrc:lsse", n, bound, {}, {}};
      auto    T = fl_part(n, false);
      auto    S = fl_part(n, true);
      fx.handles = {{"T", T}, {"S", S}};
      fx.claims.push_back({"T is not WRC (not FRE)", "wrc-lsse-T",
                           "irreducible generators of C(r_T(a))T^1 of grade <= bound",
                           true, [=] { return fl_t_growth(T, n, bound); }});
      for (auto& c : fl_s_fre_claims(S, n, bound)) {
        c.name = "S is FRE: " + c.name;
        fx.claims.push_back(std::move(c));
      }
      fx.claims.push_back(
          {"S is RIH: uS n vS = lcm(u, v)S; 0S, aS, eS finite", "wrc-lsse-S", "",
           false, [=] {
             auto w     = window(*S, bound);
             auto small = vectors(n, 1, 2);
             for (auto const& u : small) {
               for (auto const& v : small) {
                 auto pu = principal(*S, sorted(f, u), w);
                 auto pv = principal(*S, sorted(f, v), w);
                 if (meet(pu, pv) != principal(*S, sorted(f, lcm(u, v)), w)) {
                   return result(false, "intersection for " + vec_name(u) + ", "
                                            + vec_name(v));
                 }
               }
             }
             auto big = window(*S, bound + 1);
             for (auto const& x : {sorted(zero), sorted(a), sorted(e)}) {
               if (principal(*S, x, w) != principal(*S, x, big)) {
                 return result(false, S->format(x) + "S grows with the window");
               }
             }
             return result(true, "checked to grade " + std::to_string(bound),
                           Exactness::up_to(bound));
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // fre:sgrpdp
    ////////////////////////////////////////////////////////////////////////

    inline Fixture fre_sgrpdp(std::size_t n, std::size_t bound) {
      Fixture fx{"fre:sgrpdp", n, bound, {}, {}};
      auto    s = null_semigroup(2);
      auto    t = make_table(tables::cyclic_group(n), "cyclic(" + std::to_string(n) + ")");
      auto    p = direct_product(s, t);
      fx.handles = {{"S", s}, {"T", t}, {"SxT", p}};
      fx.claims.push_back(
          {"content ideal of r((a, x)) needs every (a, t)", "fre-sgrpdp",
           "minimal generators of C(r((a, x)))(S x T)^1 for the group T of order n",
           true, [=] {
             auto tab = tabulate(*p);
             auto ax  = Element::pair(s->parse("a1"), t->parse("1"));
             auto x   = to_elements(
                 tab, extract_generators(tab.table, annihilator(tab.table, tab.of(ax))));
             Exactness ex;
             auto gens = detail::minimal_generators(*p, content(x), 0, ex);
             bool all  = gens.size() == n;
             for (auto const& g : gens) {
               all = all && g.parts[0] == s->parse("a1");
             }
             return growth(gens.size(), all, format_elements(*p, gens),
                           Exactness::full());
           }});
      return fx;
    }

    ////////////////////////////////////////////////////////////////////////
    // cex:sfp
    ////////////////////////////////////////////////////////////////////////

    inline Fixture cex_sfp(std::size_t n, std::size_t bound) {
      Fixture fx{"cex:sfp", n, bound, {}, {}};
      auto    triv = left_zero_semigroup(1);
      auto    inf  = std::make_shared<InfiniteLeftZero>();
      auto    fi   = std::dynamic_pointer_cast<FreeProduct const>(
          semigroup_free_product({triv, inf}));
      auto fin = std::dynamic_pointer_cast<FreeProduct const>(
          semigroup_free_product({triv, left_zero_semigroup(n)}));
      fx.handles = {{"S*T", fi}, {"S*T_n", fin}};
      auto e = triv->elements().front();
      fx.claims.push_back(
          {"theorem hypotheses fail for the trivial semigroup * infinite left zero",
           "cex-sfp", "", false, [=] {
             auto r = sfp_witness(fi, fi->embed(0, e), PairSet<Element>{},
                                  {3, 3, 20000});
             bool ok = !r.applicable && r.hypotheses.size() == 2
                       && !r.hypotheses[0].holds && !r.hypotheses[1].holds;
             return result(ok, r.hypotheses.size() == 2 ? r.hypotheses[1].detail : "",
                           Exactness::up_to(3));
           }});
      fx.claims.push_back(
          {"finite surrogate: Y needs a pair (e * u, u) for every u in U",
           "cex-sfp", "nontrivial pairs of Y for left_zero(n)", true, [=] {
             auto r = sfp_witness(fin, fin->embed(0, e), std::nullopt, {3, 3, 20000});
             auto k = r.generators.nontrivial_size();
             return growth(k, r.applicable && r.verified && k == n,
                           std::to_string(k) + " pairs, "
                               + std::to_string(r.certificates.size())
                               + " certificates",
                           r.exactness);
           }});
      return fx;
    }

  }  // namespace gallery_detail

  inline std::vector<std::string> fixture_names() {
    return {"rih:lsse", "Howson,ideal", "ideal-rees", "fre:rq",   "s1notsR",
            "fre:lsse", "ISIR",         "fre:sgrpdp", "cex:sfp", "wrc:rq",
            "wrc:lsse"};
  }

  inline Fixture build_fixture(std::string const& name, std::size_t n,
                               std::size_t bound = 5) {
    if (n == 0) {
      throw Error("gallery: the rank n must be at least 1");
    }
    namespace g = gallery_detail;
    if (name == "rih:lsse") {
      return g::rih_lsse(n, bound);
    } else if (name == "Howson,ideal") {
      return g::howson_ideal(n, bound);
    } else if (name == "ideal-rees") {
      return g::ideal_rees(n, bound);
    } else if (name == "fre:rq") {
      return g::fre_rq(n, bound);
    } else if (name == "s1notsR") {
      return g::s1nots_r(n, bound);
    } else if (name == "fre:lsse") {
      return g::fre_lsse(n, bound);
    } else if (name == "ISIR") {
      return g::isir(n, bound);
    } else if (name == "fre:sgrpdp") {
      return g::fre_sgrpdp(n, bound);
    } else if (name == "cex:sfp") {
      return g::cex_sfp(n, bound);
    } else if (name == "wrc:rq") {
      return g::wrc_rq(n, bound);
    } else if (name == "wrc:lsse") {
      return g::wrc_lsse(n, bound);
    }
    throw Error("gallery: unknown fixture '" + name + "'");
  }

  struct ClaimRecord {
    std::string fixture;
    std::size_t n = 0;
    std::string claim;
    std::string anchor;
    std::string surrogate;
    ClaimResult result;
  };

  struct GalleryReport {
    std::vector<ClaimRecord> records;
    // One record per growth claim: the metrics over the tested ranks.
    std::vector<ClaimRecord> growth;

    bool passed() const {
      auto ok = [](ClaimRecord const& r) { return r.result.passed; };
      return std::all_of(records.begin(), records.end(), ok)
             && std::all_of(growth.begin(), growth.end(), ok);
    }
  };

  inline GalleryReport run_gallery(std::vector<std::string> const& names,
                                   std::vector<std::size_t> const& ns,
                                   std::size_t                     bound = 5) {
    GalleryReport out;
    for (auto const& name : names) {
      std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> metrics;
      std::map<std::string, std::string> anchors;
      for (auto n : ns) {
        auto fx = build_fixture(name, n, bound);
        for (auto const& c : fx.claims) {
          ClaimRecord rec{name, n, c.name, c.anchor, c.surrogate, {}};
          try {
            rec.result = c.check();
          } catch (std::exception const& ex) {
            rec.result = {false, std::string("error: ") + ex.what(), std::nullopt,
                          Exactness::full()};
          }
          if (c.growth && rec.result.metric) {
            metrics[c.name].emplace_back(n, *rec.result.metric);
            anchors[c.name] = c.anchor;
          }
          out.records.push_back(std::move(rec));
        }
      }
      for (auto const& [claim, values] : metrics) {
        bool        strict = true;
        std::string seq;
        for (std::size_t i = 0; i < values.size(); ++i) {
          seq += (i == 0 ? "" : ", ") + std::to_string(values[i].second);
          if (i > 0 && values[i].first > values[i - 1].first) {
            strict = strict && values[i].second > values[i - 1].second;
          }
        }
        ClaimRecord rec{name, 0, "growth: " + claim, anchors[claim], "", {}};
        rec.result = {strict, "counts " + seq, std::nullopt, Exactness::full()};
        out.growth.push_back(std::move(rec));
      }
    }
    return out;
  }

}  // namespace wrc

#endif  // WRC_GALLERY_HPP_
