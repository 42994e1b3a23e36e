//
// wrc - right ideals and right congruences of semigroups
//
// Weak right coherence: the five equivalent conditions computed separately,
// and the passage of FRE witnesses between S and S^1.
//
// On a finite semigroup conditions (1)-(3) are computed directly: every
// right ideal I with minimal generating set X is presented as the quotient
// of the free act X x S^1 by the kernel of (x, s) -> xs, and the kernel is
// given a finite generating set that is checked by closure.
//

#ifndef WRC_WRC_HPP_
#define WRC_WRC_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "constructions.hpp"
#include "element.hpp"
#include "fre.hpp"
#include "right_ideals.hpp"
#include "semigroup.hpp"
#include "union_find.hpp"
#include "witnesses.hpp"

namespace wrc {

  ////////////////////////////////////////////////////////////////////////
  // Presentations of right ideals as acts
  ////////////////////////////////////////////////////////////////////////

  struct ActPresentation {
    std::vector<Element> ideal;
    std::vector<Element> generators;
    // Relations ((x, s), (y, t)) meaning xs = yt, with s, t in S^1.
    std::vector<std::pair<ElementPair, ElementPair>> relations;
    std::size_t kernel_pairs = 0;
    bool        verified     = false;
  };

  namespace detail {

    // Points (i, s) of X x M for M = S^1 tabulated, acted on by M.
    class ActClosure {
     public:
      ActClosure(CayleyTable const& t, std::size_t gens)
          : _t(&t), _forest(gens * t.size()) {}

      std::size_t point(std::size_t i, Index s) const {
        return i * _t->size() + s;
      }

      bool add(std::size_t u, std::size_t v) {
        if (_forest.same(u, v)) {
          return false;
        }
        std::vector<std::pair<std::size_t, std::size_t>> work{{u, v}};
        auto const n = _t->size();
        while (!work.empty()) {
          auto [p, q] = work.back();
          work.pop_back();
          if (!_forest.unite(p, q, 0)) {
            continue;
          }
          for (Index s = 0; s < n; ++s) {
            work.emplace_back(point(p / n, _t->product(p % n, s)),
                              point(q / n, _t->product(q % n, s)));
          }
        }
        return true;
      }

      bool same(std::size_t u, std::size_t v) const {
        return _forest.same(u, v);
      }

     private:
      CayleyTable const* _t;
      ProofForest<int>   _forest;
    };

  }  // namespace detail

  // The right ideals of the finite monoid m, each with a minimal
  // generating set, in a deterministic order.
  inline std::vector<std::vector<Index>> right_ideal_generating_sets(
      CayleyTable const& t) {
    std::size_t                           n = t.size();
    std::set<std::vector<Index>>          seen;
    std::vector<std::vector<Index>>       out;
    std::vector<std::vector<bool>>        principal(n, std::vector<bool>(n));
    for (Index a = 0; a < n; ++a) {
      principal[a][a] = true;
      for (Index s = 0; s < n; ++s) {
        principal[a][t.product(a, s)] = true;
      }
    }
    // Right ideals are unions of principal ones; minimal generators are
    // antichains of pairwise R-incomparable representatives.
    std::vector<Index> reps;
    for (Index a = 0; a < n; ++a) {
      bool dup = false;
      for (auto r : reps) {
        if (principal[r] == principal[a]) {
          dup = true;
          break;
        }
      }
      if (!dup) {
        reps.push_back(a);
      }
    }
    if (reps.size() > 20) {
      throw Error("right ideals: too many principal right ideals");
    }
    for (std::size_t mask = 1; mask < (std::size_t(1) << reps.size()); ++mask) {
      std::vector<Index> gens;
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (mask & (std::size_t(1) << k)) {
          gens.push_back(reps[k]);
        }
      }
      bool antichain = true;
      for (auto a : gens) {
        for (auto b : gens) {
          if (a != b && principal[b][a]) {
            antichain = false;
          }
        }
      }
      if (antichain && seen.insert(gens).second) {
        out.push_back(gens);
      }
    }
    return out;
  }

  // The presentation of the right ideal generated by gens in the finite
  // monoid tabulated by tab.
  inline ActPresentation present_right_ideal(Tabulation const&         tab,
                                             std::vector<Index> const& gens) {
    auto const&         t = tab.table;
    std::size_t         n = t.size();
    ActPresentation     out;
    detail::ActClosure  closure(t, gens.size());
    std::set<Index>     ideal;
    std::vector<std::pair<std::size_t, std::size_t>> kernel;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.generators.push_back(tab.at(gens[i]));
      for (Index s = 0; s < n; ++s) {
        ideal.insert(t.product(gens[i], s));
      }
    }
    for (auto e : ideal) {
      out.ideal.push_back(tab.at(e));
    }
    std::size_t pts = gens.size() * n;
    for (std::size_t u = 0; u < pts; ++u) {
      for (std::size_t v = u + 1; v < pts; ++v) {
        if (t.product(gens[u / n], u % n) == t.product(gens[v / n], v % n)) {
          kernel.emplace_back(u, v);
        }
      }
    }
    out.kernel_pairs = kernel.size();
    for (auto const& [u, v] : kernel) {
      if (closure.add(u, v)) {
        out.relations.emplace_back(
            ElementPair{tab.at(gens[u / n]), tab.at(u % n)},
            ElementPair{tab.at(gens[v / n]), tab.at(v % n)});
      }
    }
    // Check: the closure of the relations is exactly the kernel.
    detail::ActClosure check(t, gens.size());
    for (auto const& [x, y] : out.relations) {
      std::size_t i = 0;
      std::size_t j = 0;
      while (tab.at(gens[i]) != x.first) {
        ++i;
      }
      while (tab.at(gens[j]) != y.first) {
        ++j;
      }
      check.add(check.point(i, tab.of(x.second)), check.point(j, tab.of(y.second)));
    }
    out.verified = true;
    for (std::size_t u = 0; u < pts && out.verified; ++u) {
      for (std::size_t v = u + 1; v < pts; ++v) {
        bool in_kernel
            = t.product(gens[u / n], u % n) == t.product(gens[v / n], v % n);
        if (in_kernel != check.same(u, v)) {
          out.verified = false;
          break;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The five conditions
  ////////////////////////////////////////////////////////////////////////

  struct WrcReport {
    // (1) S WRC, (2) S^1 WRC, (3) f.g. right ideals of S finitely presented
    // as S^1-acts, (4) S^1 RIH and FRE, (5) S RIH and S^1 FRE.
    Tri                      conditions[5] = {Tri::unknown, Tri::unknown,
                                              Tri::unknown, Tri::unknown,
                                              Tri::unknown};
    Exactness                exactness;
    std::size_t              ideals_presented = 0;
    std::vector<std::string> notes;

    bool all_yes() const {
      for (auto c : conditions) {
        if (c != Tri::yes) {
          return false;
        }
      }
      return true;
    }

    bool coherent() const {
      for (auto c : conditions) {
        if (c != conditions[0]) {
          return false;
        }
      }
      return true;
    }
  };

  inline WrcReport check_wrc(SemigroupPtr const& s, std::size_t bound = 6) {
    WrcReport out;
    auto      s1 = adjoin_identity(s);
    auto      rih_s  = check_rih(s, bound);
    auto      rih_s1 = check_rih(s1, bound);
    auto      fre_s1 = check_fre(*s1, bound);
    out.exactness    = rih_s.exactness;
    out.exactness &= rih_s1.exactness;
    out.exactness &= fre_s1.exactness;
    auto both = [](Tri x, Tri y) {
      if (x == Tri::no || y == Tri::no) {
        return Tri::no;
      }
      return x == Tri::yes && y == Tri::yes ? Tri::yes : Tri::unknown;
    };
    out.conditions[3] = both(rih_s1.verdict, fre_s1.verdict);
    out.conditions[4] = both(rih_s.verdict, fre_s1.verdict);
    if (!s->is_finite()) {
      out.notes.push_back("conditions (1)-(3) are computed on finite "
                          "semigroups only");
      return out;
    }
    auto tab       = tabulate(*s1);
    auto ideal_gen = right_ideal_generating_sets(tab.table);
    bool all_s1    = true;
    bool all_s     = true;
    for (auto const& gens : ideal_gen) {
      auto p = present_right_ideal(tab, gens);
      ++out.ideals_presented;
      if (!p.verified) {
        all_s1 = false;
        out.notes.push_back("presentation check failed for the ideal generated by "
                            + format_elements(*s1, p.generators));
      }
      bool inside_s = true;
      for (auto const& e : p.ideal) {
        inside_s = inside_s && s->contains(e);
      }
      if (inside_s && !p.verified) {
        all_s = false;
      }
    }
    out.conditions[1] = tri(all_s1);
    out.conditions[0] = out.conditions[1];
    out.conditions[2] = tri(all_s);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // S versus S^1
  ////////////////////////////////////////////////////////////////////////

  struct Derivation {
    Element       a;
    WitnessReport up;
    std::optional<WitnessReport> down;
  };

  struct DerivationReport {
    bool                    ok = true;
    std::vector<Derivation> elements;
    std::vector<std::string> notes;
  };

  // For each a in the finite semigroup s: a generating set of r_S(a) gives
  // one of r_{S'}(a) for S' = s with a new identity (small extension), and
  // when s is a monoid the retraction S' -> S (1' -> 1) carries it back.
  inline DerivationReport derive_s_and_s1(SemigroupPtr const& s) {
    DerivationReport out;
    if (!s->is_finite()) {
      throw Error("S versus S^1: " + s->describe() + " is infinite (unsupported)");
    }
    auto big  = adjoin_new_identity(s);
    auto in_s = [](Element const& e) { return e.kind != Kind::one; };
    auto fre  = check_fre(*s, 0);
    std::optional<Morphism> back;
    if (auto one = s->identity()) {
      auto e = *one;
      back   = retraction(big, s, [e](Element const& x) {
        return x.kind == Kind::one ? e : x;
      });
    } else {
      out.notes.push_back("no identity: the return direction needs a "
                          "retraction and is skipped");
    }
    for (auto const& entry : fre.entries) {
      Derivation d{entry.a, small_extension_witness(big, in_s, entry.a,
                                                    entry.generators),
                   std::nullopt};
      bool ok = d.up.applicable && d.up.verified;
      if (back && ok) {
        d.down = image_witness(*back, entry.a, d.up.generators);
        ok     = d.down->applicable && d.down->verified;
      }
      out.ok = out.ok && ok;
      out.elements.push_back(std::move(d));
    }
    return out;
  }

}  // namespace wrc

#endif  // WRC_WRC_HPP_
