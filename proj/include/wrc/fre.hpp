//
// wrc - right ideals and right congruences of semigroups
//
// Finitely right equated checks: generating sets for every r_S(a), content
// ideals, and the reduction of FRE to finite generation of the universal
// right congruence.
//

#ifndef WRC_FRE_HPP_
#define WRC_FRE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "backends.hpp"
#include "classify.hpp"
#include "congruence.hpp"
#include "element.hpp"
#include "right_ideals.hpp"
#include "semigroup.hpp"

namespace wrc {

  struct FreEntry {
    Element          a;
    PairSet<Element> generators;
    Exactness        exactness;
    // Finite: <generators> = r_S(a) was checked and no generator can be
    // dropped.  Bounded: the generators account for every pair of r_S(a)
    // within the bound.
    bool        verified = false;
    bool        minimal  = false;
    std::string note;
  };

  struct FreReport {
    Tri                   verdict = Tri::unknown;
    std::vector<FreEntry> entries;
    Exactness             exactness;
    std::size_t           bound = 0;
  };

  // Finite semigroups: exact generating sets extracted from the closure and
  // minimised.  Infinite ones: left cancellative elements get the empty set
  // exactly; other elements get a bounded generating set for the pairs of
  // r_S(a) within the grade bound.
  inline FreReport check_fre(Semigroup const& s, std::size_t bound,
                             SearchLimits const& lim = {}) {
    FreReport out;
    out.bound = bound;
    if (s.is_finite()) {
      auto tab      = tabulate(s);
      out.verdict   = Tri::yes;
      out.exactness = Exactness::full();
      for (Index a = 0; a < tab.table.size(); ++a) {
        auto target = annihilator(tab.table, a);
        auto x      = extract_generators(tab.table, target);
        bool ok     = generate_congruence(tab.table, x) == target;
        out.entries.push_back({tab.at(a), to_elements(tab, x), Exactness::full(),
                               ok, true, ""});
        if (!ok) {
          out.verdict = Tri::no;
        }
      }
      return out;
    }
    if (dynamic_cast<FreeWords const*>(&s) != nullptr
        || dynamic_cast<FreeCommutative const*>(&s) != nullptr) {
      // Cancellative: every r_S(a) is the identity congruence.
      out.verdict   = Tri::yes;
      out.exactness = Exactness::full();
      for (auto const& a : s.enumerate(std::min<std::size_t>(bound, 3))) {
        out.entries.push_back({a, {}, Exactness::full(), true, true,
                               "left cancellative"});
      }
      return out;
    }
    out.exactness = Exactness::up_to(bound);
    auto window   = std::min<std::size_t>(bound, 3);
    for (auto const& a : s.enumerate(window)) {
      FreEntry e{a, {}, Exactness::up_to(bound), false, false, ""};
      if (s.left_cancellative(a) == Tri::yes) {
        e.exactness = Exactness::full();
        e.verified  = true;
        e.minimal   = true;
        e.note      = "left cancellative";
      } else {
        auto pairs   = annihilator_pairs(s, a, bound);
        e.generators = bounded_generating_set(s, pairs, lim);
        e.verified   = true;
        e.note       = std::to_string(pairs.size()) + " pairs within bound";
      }
      out.entries.push_back(std::move(e));
    }
    return out;
  }

  // C(X)S^1 on a finite semigroup, as a right ideal with generators C(X).
  inline RightIdeal content_ideal(SemigroupPtr const& s, PairSet<Element> const& x) {
    return RightIdeal{s, content(x), Exactness::full()};
  }

  struct UniversalCheck {
    bool        applicable = false;
    std::string reason;
    Tri         fre                        = Tri::unknown;
    Tri         universal_finitely_generated = Tri::unknown;
    bool        agree                      = false;
    PairSet<Element> universal_generators;
  };

  // If every a is left cancellative or has aS = {a^2}, with at least one of
  // the latter, then S is FRE iff the universal right congruence is finitely
  // generated.  Both sides are computed independently.
  inline UniversalCheck universal_congruence_check(Semigroup const& s) {
    UniversalCheck out;
    if (!s.is_finite()) {
      out.reason = "infinite semigroup";
      return out;
    }
    bool some_singleton = false;
    for (auto const& a : s.elements()) {
      auto c = classify_element(s, a, 0);
      if (c.singleton_right_ideal == Tri::yes) {
        some_singleton = true;
      } else if (c.left_cancellative != Tri::yes) {
        out.reason = s.format(a)
                     + " is neither left cancellative nor has aS = {a^2}";
        return out;
      }
    }
    if (!some_singleton) {
      out.reason = "no element with aS = {a^2}";
      return out;
    }
    out.applicable = true;
    auto tab       = tabulate(s);
    auto nabla     = Congruence::universal(tab.table.size());
    auto x         = extract_generators(tab.table, nabla);
    out.universal_generators = to_elements(tab, x);
    out.universal_finitely_generated
        = tri(generate_congruence(tab.table, x) == nabla);
    out.fre   = check_fre(s, 0).verdict;
    out.agree = out.fre == out.universal_finitely_generated;
    return out;
  }

}  // namespace wrc

#endif  // WRC_FRE_HPP_
