//
// wrc - right ideals and right congruences of semigroups
//
// Right congruences.  On finite semigroups everything is computed on the
// Cayley table: the generated congruence comes from a worklist closure over
// a proof forest, so every identified pair has an X-sequence certificate.
// On infinite semigroups membership is decided by bounded search.
//

#ifndef WRC_CONGRUENCE_HPP_
#define WRC_CONGRUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cayley_table.hpp"
#include "element.hpp"
#include "semigroup.hpp"
#include "union_find.hpp"
#include "xsequence.hpp"

namespace wrc {

  using Index      = std::size_t;
  using IndexPairs = PairSet<Index>;

  ////////////////////////////////////////////////////////////////////////
  // Congruence: an equivalence on {0, ..., n - 1} as normalised labels
  ////////////////////////////////////////////////////////////////////////

  class Congruence {
   public:
    Congruence() = default;

    explicit Congruence(std::vector<std::size_t> const& labels)
        : _labels(labels.size()) {
      std::unordered_map<std::size_t, std::size_t> renumber;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = renumber.emplace(labels[i], renumber.size()).first;
        _labels[i] = it->second;
      }
      _classes = renumber.size();
    }

    static Congruence identity(std::size_t n) {
      std::vector<std::size_t> l(n);
      for (std::size_t i = 0; i < n; ++i) {
        l[i] = i;
      }
      return Congruence(l);
    }

    static Congruence universal(std::size_t n) {
      return Congruence(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes;
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }

    bool contains(Index a, Index b) const {
      return _labels.at(a) == _labels.at(b);
    }

    bool is_identity() const noexcept {
      return _classes == _labels.size();
    }

    bool is_universal() const noexcept {
      return _classes <= 1;
    }

    // All (a, b) with a < b in the same class.
    std::vector<std::pair<Index, Index>> nontrivial_pairs() const {
      std::vector<std::pair<Index, Index>> out;
      for (Index a = 0; a < size(); ++a) {
        for (Index b = a + 1; b < size(); ++b) {
          if (_labels[a] == _labels[b]) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    // (a, b) in the relation implies (as, bs) in the relation.
    bool is_right_compatible(CayleyTable const& t) const {
      for (auto const& [a, b] : nontrivial_pairs()) {
        for (Index s = 0; s < t.size(); ++s) {
          if (!contains(t.product(a, s), t.product(b, s))) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(Congruence const& that) const {
      return _labels == that._labels;
    }

   private:
    std::vector<std::size_t> _labels;
    std::size_t              _classes = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Closure with provenance
  ////////////////////////////////////////////////////////////////////////

  // The right congruence generated by the pairs added so far.  Each merge
  // of u and v is stored with a step (p, q, c) such that u = pc, v = qc and
  // (p, q) is a generator, so the forest path between two related elements
  // is an X-sequence.
  class CongruenceClosure {
   public:
    explicit CongruenceClosure(CayleyTable const& t)
        : _table(&t), _forest(t.size()) {}

    CayleyTable const& table() const noexcept {
      return *_table;
    }

    // Adds (p, q) as a generator and closes.  Returns false if (p, q) was
    // already related (nothing changes, and it is not recorded).
    bool add(Index p, Index q) {
      if (_forest.same(p, q)) {
        return false;
      }
      _generators.insert(p, q);
      auto const&                                         t = *_table;
      std::deque<std::tuple<Index, Index, XStep<Index>>> work;
      work.emplace_back(p, q, XStep<Index>{p, q, std::nullopt});
      while (!work.empty()) {
        auto [u, v, step] = std::move(work.front());
        work.pop_front();
        if (!_forest.unite(u, v, step)) {
          continue;
        }
        for (Index s = 0; s < t.size(); ++s) {
          Index c = step.c ? t.product(*step.c, s) : s;
          work.emplace_back(t.product(u, s), t.product(v, s),
                            XStep<Index>{step.p, step.q, c});
        }
      }
      return true;
    }

    void add_all(IndexPairs const& x) {
      for (auto const& [p, q] : x.generators()) {
        add(p, q);
      }
    }

    bool contains(Index a, Index b) const {
      return _forest.same(a, b);
    }

    Congruence congruence() const {
      return Congruence(_forest.classes());
    }

    std::size_t number_of_classes() const noexcept {
      return _forest.number_of_classes();
    }

    // The generators that actually caused a merge.
    IndexPairs const& generators() const noexcept {
      return _generators;
    }

    std::optional<XSequence<Index>> certificate(Index a, Index b) const {
      auto hops = _forest.path(a, b);
      if (!hops) {
        return std::nullopt;
      }
      XSequence<Index> seq{a, b, {}};
      for (auto const& h : *hops) {
        auto const& l = *h.label;
        if (h.forward) {
          seq.steps.push_back(l);
        } else {
          seq.steps.push_back({l.q, l.p, l.c});
        }
      }
      return seq;
    }

   private:
    CayleyTable const*       _table;
    ProofForest<XStep<Index>> _forest;
    IndexPairs               _generators;
  };

  inline Congruence generate_congruence(CayleyTable const& t,
                                        IndexPairs const&  x) {
    CongruenceClosure c(t);
    c.add_all(x);
    return c.congruence();
  }

  // The same relation by brute force: start from the diagonal and X, and
  // repeatedly close under right multiplication, symmetry and transitivity
  // on the full relation matrix until nothing changes.
  inline Congruence naive_closure(CayleyTable const& t, IndexPairs const& x) {
    std::size_t const              n = t.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (Index i = 0; i < n; ++i) {
      r[i][i] = true;
    }
    for (auto const& [p, q] : x.ordered()) {
      r[p][q] = true;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          if (!r[a][b]) {
            continue;
          }
          for (Index s = 0; s < n; ++s) {
            auto as = t.product(a, s);
            auto bs = t.product(b, s);
            if (!r[as][bs]) {
              r[as][bs] = changed = true;
            }
          }
          if (!r[b][a]) {
            r[b][a] = changed = true;
          }
        }
      }
      for (Index k = 0; k < n; ++k) {
        for (Index a = 0; a < n; ++a) {
          if (!r[a][k]) {
            continue;
          }
          for (Index b = 0; b < n; ++b) {
            if (r[k][b] && !r[a][b]) {
              r[a][b] = changed = true;
            }
          }
        }
      }
    }
    std::vector<std::size_t> labels(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b <= a; ++b) {
        if (r[a][b]) {
          labels[a] = b;
          break;
        }
      }
    }
    return Congruence(labels);
  }

  // r_S(a) as the kernel of s -> as.
  inline Congruence annihilator(CayleyTable const& t, Index a) {
    std::vector<std::size_t> labels(t.size());
    for (Index s = 0; s < t.size(); ++s) {
      labels[s] = t.product(a, s);
    }
    return Congruence(labels);
  }

  inline bool congruence_equal(CayleyTable const& t, IndexPairs const& x,
                               IndexPairs const& y) {
    return generate_congruence(t, x) == generate_congruence(t, y);
  }

  inline Verdict verify_xsequence(CayleyTable const& t, IndexPairs const& x,
                                  XSequence<Index> const& seq) {
    return verify_xsequence<Index>(
        [&t](Index a, std::optional<Index> const& c) -> Index {
          return c ? t.product(a, *c) : a;
        },
        x, seq);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate search on finite semigroups
  ////////////////////////////////////////////////////////////////////////

  // Shortest X-sequences from source to every element reachable within
  // depth steps, by breadth-first search over u = pc -> v = qc.
  class XSequenceSearch {
   public:
    XSequenceSearch(CayleyTable const& t, IndexPairs const& x, Index source,
                    std::size_t depth)
        : _source(source), _via(t.size()), _dist(t.size(), npos) {
      std::size_t const n = t.size();
      // quotients[p][u] = all c in S with pc = u.
      std::map<Index, std::vector<std::vector<Index>>> quotients;
      for (auto const& [p, q] : x.ordered()) {
        if (quotients.count(p) == 0) {
          std::vector<std::vector<Index>> qs(n);
          for (Index c = 0; c < n; ++c) {
            qs[t.product(p, c)].push_back(c);
          }
          quotients.emplace(p, std::move(qs));
        }
      }
      std::queue<Index> frontier;
      _dist[source] = 0;
      frontier.push(source);
      while (!frontier.empty()) {
        auto u = frontier.front();
        frontier.pop();
        if (_dist[u] >= depth) {
          continue;
        }
        auto visit = [&](Index v, XStep<Index> step) {
          if (_dist[v] == npos) {
            _dist[v] = _dist[u] + 1;
            _via[v]  = {u, std::move(step)};
            frontier.push(v);
          }
        };
        for (auto const& [p, q] : x.ordered()) {
          if (p == u) {
            visit(q, {p, q, std::nullopt});
          }
          for (auto c : quotients[p][u]) {
            visit(t.product(q, c), {p, q, c});
          }
        }
      }
    }

    bool reached(Index b) const {
      return _dist.at(b) != npos;
    }

    std::optional<XSequence<Index>> to(Index b) const {
      if (!reached(b)) {
        return std::nullopt;
      }
      std::vector<XStep<Index>> rev;
      for (Index v = b; v != _source; v = _via[v].first) {
        rev.push_back(_via[v].second);
      }
      return XSequence<Index>{_source, b, {rev.rbegin(), rev.rend()}};
    }

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Index                                            _source;
    std::vector<std::pair<Index, XStep<Index>>>      _via;
    std::vector<std::size_t>                         _dist;
  };

  inline std::optional<XSequence<Index>> find_xsequence(CayleyTable const& t,
                                                        IndexPairs const&  x,
                                                        Index a, Index b,
                                                        std::size_t depth) {
    return XSequenceSearch(t, x, a, depth).to(b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Content and generating sets
  ////////////////////////////////////////////////////////////////////////

  // C(X): entries of non-diagonal pairs, sorted.
  inline std::vector<Index> content(IndexPairs const& x) {
    std::set<Index> c;
    for (auto const& [p, q] : x.generators()) {
      if (p != q) {
        c.insert(p);
        c.insert(q);
      }
    }
    return {c.begin(), c.end()};
  }

  inline std::vector<Index> content(Congruence const& rho) {
    std::set<Index> c;
    for (auto const& [a, b] : rho.nontrivial_pairs()) {
      c.insert(a);
      c.insert(b);
    }
    return {c.begin(), c.end()};
  }

  // XS^1 as a sorted list.
  inline std::vector<Index> right_ideal_closure(CayleyTable const&        t,
                                                std::vector<Index> const& gens) {
    std::vector<bool> in(t.size(), false);
    for (auto g : gens) {
      in[g] = true;
      for (Index s = 0; s < t.size(); ++s) {
        in[t.product(g, s)] = true;
      }
    }
    std::vector<Index> out;
    for (Index i = 0; i < t.size(); ++i) {
      if (in[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Drops generators, in insertion order, whenever the rest still generate
  // the same congruence.  The result is minimal under inclusion.
  inline IndexPairs minimize_generators(CayleyTable const& t,
                                        IndexPairs const&  x) {
    auto                               target = generate_congruence(t, x);
    std::vector<std::pair<Index, Index>> keep;
    for (auto const& [p, q] : x.generators()) {
      if (p != q) {
        keep.emplace_back(p, q);
      }
    }
    for (std::size_t i = 0; i < keep.size();) {
      IndexPairs rest;
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if (j != i) {
          rest.insert(keep[j].first, keep[j].second);
        }
      }
      if (generate_congruence(t, rest) == target) {
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    IndexPairs out;
    for (auto const& [p, q] : keep) {
      out.insert(p, q);
    }
    return out;
  }

  // A minimal generating set of rho: pairs of rho are offered to the closure
  // in order and kept when they merge something new; the survivors are then
  // minimised greedily.
  inline IndexPairs extract_generators(CayleyTable const& t,
                                       Congruence const&  rho) {
    CongruenceClosure c(t);
    for (auto const& [a, b] : rho.nontrivial_pairs()) {
      c.add(a, b);
    }
    return minimize_generators(t, c.generators());
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite semigroups given as handles
  ////////////////////////////////////////////////////////////////////////

  inline IndexPairs to_indices(Tabulation const& tab, PairSet<Element> const& x) {
    return map_pairs<Element, Index>(
        x, [&tab](Element const& e) { return tab.of(e); });
  }

  inline PairSet<Element> to_elements(Tabulation const& tab, IndexPairs const& x) {
    return map_pairs<Index, Element>(
        x, [&tab](Index i) { return tab.at(i); });
  }

  inline XSequence<Element> to_elements(Tabulation const&       tab,
                                        XSequence<Index> const& seq) {
    return map_xsequence<Index, Element>(
        seq, [&tab](Index i) { return tab.at(i); });
  }

  inline XSequence<Index> to_indices(Tabulation const&         tab,
                                     XSequence<Element> const& seq) {
    return map_xsequence<Element, Index>(
        seq, [&tab](Element const& e) { return tab.of(e); });
  }

  inline PairSet<Element> pairs_of(Tabulation const& tab, Congruence const& rho) {
    PairSet<Element> out;
    for (auto const& [a, b] : rho.nontrivial_pairs()) {
      out.insert(tab.at(a), tab.at(b));
    }
    return out;
  }

  // Does <X> = <Y> on the finite semigroup s?
  inline bool congruence_equal(Semigroup const& s, PairSet<Element> const& x,
                               PairSet<Element> const& y) {
    auto tab = tabulate(s);
    return congruence_equal(tab.table, to_indices(tab, x), to_indices(tab, y));
  }

  // Does <X> = r_S(a) on the finite semigroup s?
  inline bool generates_annihilator(Semigroup const& s, PairSet<Element> const& x,
                                    Element const& a) {
    auto tab = tabulate(s);
    return generate_congruence(tab.table, to_indices(tab, x))
           == annihilator(tab.table, tab.of(a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Search on arbitrary semigroups
  ////////////////////////////////////////////////////////////////////////

  struct SearchLimits {
    std::size_t depth     = 12;
    std::size_t bound     = 6;
    std::size_t max_nodes = 100000;
  };

  struct SearchResult {
    std::optional<XSequence<Element>> sequence;
    // True when the search saw every element reachable from the source
    // (right quotients were exact and no limit was hit), so that a missing
    // sequence certifies non-membership.
    bool exhausted = false;
  };

  // Breadth-first search for a shortest X-sequence from a to b, factoring
  // u = pc with the backend's right quotients (bounded search where the
  // backend has none).
  inline SearchResult find_xsequence(Semigroup const& s, PairSet<Element> const& x,
                                     Element const& a, Element const& b,
                                     SearchLimits const& lim = {}) {
    SearchResult out;
    if (a == b) {
      out.sequence = XSequence<Element>{a, b, {}};
      return out;
    }
    std::map<Element, std::pair<Element, XStep<Element>>> via;
    std::map<Element, std::size_t>                        dist;
    std::queue<Element>                                   frontier;
    dist.emplace(a, 0);
    frontier.push(a);
    bool exact = true;
    while (!frontier.empty()) {
      auto u = frontier.front();
      frontier.pop();
      auto du = dist[u];
      if (du >= lim.depth) {
        exact = false;
        continue;
      }
      auto visit = [&](Element const& v, XStep<Element> step) {
        if (dist.count(v) == 0) {
          if (dist.size() >= lim.max_nodes) {
            exact = false;
            return;
          }
          dist.emplace(v, du + 1);
          via.emplace(v, std::make_pair(u, std::move(step)));
          frontier.push(v);
        }
      };
      for (auto const& [p, q] : x.ordered()) {
        if (p == u) {
          visit(q, {p, q, std::nullopt});
        }
        auto qs = right_quotients(s, p, u, lim.bound);
        if (!qs.exactness.exact) {
          exact = false;
        }
        for (auto const& c : qs.values) {
          visit(s.multiply(q, c), {p, q, c});
        }
      }
      if (dist.count(b) != 0) {
        break;
      }
    }
    if (dist.count(b) != 0) {
      std::vector<XStep<Element>> rev;
      for (Element v = b; v != a;) {
        auto const& [prev, step] = via.at(v);
        rev.push_back(step);
        v = prev;
      }
      out.sequence = XSequence<Element>{a, b, {rev.rbegin(), rev.rend()}};
    }
    out.exhausted = exact && frontier.empty();
    return out;
  }

  // Is (s, t) in r_S(a)?
  inline bool in_annihilator(Semigroup const& s, Element const& a,
                             Element const& x, Element const& y) {
    return s.multiply(a, x) == s.multiply(a, y);
  }

  // The pairs (x, y), x < y in enumeration order, of r_S(a) among elements
  // of grade <= bound.
  inline std::vector<ElementPair> annihilator_pairs(Semigroup const& s,
                                                    Element const&   a,
                                                    std::size_t      bound) {
    auto                     xs = s.is_finite() ? s.elements() : s.enumerate(bound);
    std::vector<ElementPair> out;
    std::vector<Element>     ax;
    for (auto const& x : xs) {
      ax.push_back(s.multiply(a, x));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (ax[i] == ax[j]) {
          out.emplace_back(xs[i], xs[j]);
        }
      }
    }
    return out;
  }

  // A generating set for the pairs given, relative to bounded search:
  // a pair is kept when no X-sequence within the limits connects it using
  // the pairs kept so far.
  inline PairSet<Element>
  bounded_generating_set(Semigroup const& s, std::vector<ElementPair> const& pairs,
                         SearchLimits const& lim) {
    PairSet<Element> x;
    for (auto const& [p, q] : pairs) {
      if (!find_xsequence(s, x, p, q, lim).sequence) {
        x.insert(p, q);
      }
    }
    return x;
  }

  // C(X) for element pairs, in first-occurrence order.
  inline std::vector<Element> content(PairSet<Element> const& x) {
    std::vector<Element> out;
    std::set<Element>    seen;
    for (auto const& [p, q] : x.generators()) {
      if (p == q) {
        continue;
      }
      for (auto const& e : {p, q}) {
        if (seen.insert(e).second) {
          out.push_back(e);
        }
      }
    }
    return out;
  }

}  // namespace wrc

#endif  // WRC_CONGRUENCE_HPP_
