//
// wrc - right ideals and right congruences of semigroups
//
// Test-side oracles, written without the library's algorithms: right
// congruences as connected components of the one-step relation, kernels of
// left translations, X-sequence checks by direct multiplication, and
// membership rules for free monoids and free commutative monoids.
//

#ifndef WRC_TESTS_ORACLES_HPP_
#define WRC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wrc/cayley_table.hpp"
#include "wrc/element.hpp"
#include "wrc/semigroup.hpp"
#include "wrc/xsequence.hpp"

namespace oracle {

  using wrc::CayleyTable;
  using wrc::Element;
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

  // Class labels (smallest member of each class) for a partition given by
  // union of edges.
  inline std::vector<std::size_t> components(std::size_t n, Pairs const& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (auto const& [p, q] : edges) {
      auto rp = root(p);
      auto rq = root(q);
      if (rp != rq) {
        parent[std::max(rp, rq)] = std::min(rp, rq);
      }
    }
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = root(i);
    }
    return out;
  }

  // <X> on a finite semigroup: u ~ v iff a chain of elementary steps
  // pc -> qc, (p, q) in X u X^-1, c in S^1, joins them.
  inline std::vector<std::size_t> right_congruence(CayleyTable const& t,
                                                   Pairs const&       x) {
    Pairs edges;
    for (auto const& [p, q] : x) {
      edges.emplace_back(p, q);
      for (std::size_t c = 0; c < t.size(); ++c) {
        edges.emplace_back(t.product(p, c), t.product(q, c));
      }
    }
    return components(t.size(), edges);
  }

  // r_S(a): s ~ t iff as = at.
  inline std::vector<std::size_t> kernel(CayleyTable const& t, std::size_t a) {
    Pairs edges;
    for (std::size_t s = 0; s < t.size(); ++s) {
      for (std::size_t u = s + 1; u < t.size(); ++u) {
        if (t.product(a, s) == t.product(a, u)) {
          edges.emplace_back(s, u);
        }
      }
    }
    return components(t.size(), edges);
  }

  inline Pairs related_pairs(std::vector<std::size_t> const& labels) {
    Pairs out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        if (labels[i] == labels[j]) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  // A chain a = p1 c1, q_i c_i = p_{i+1} c_{i+1}, q_n c_n = b with every
  // (p_i, q_i) in X or its reverse.
  template <typename T, typename Mul>
  bool chain_holds(wrc::XSequence<T> const&               seq,
                   std::set<std::pair<T, T>> const&        x,
                   Mul&&                                   mul) {
    auto act = [&](T const& p, std::optional<T> const& c) {
      return c ? mul(p, *c) : p;
    };
    if (seq.steps.empty()) {
      return seq.source == seq.target;
    }
    T cur = seq.source;
    for (auto const& st : seq.steps) {
      if (x.count({st.p, st.q}) == 0 && x.count({st.q, st.p}) == 0) {
        return false;
      }
      if (act(st.p, st.c) != cur) {
        return false;
      }
      cur = act(st.q, st.c);
    }
    return cur == seq.target;
  }

  inline std::set<std::pair<Element, Element>>
  pair_set(wrc::PairSet<Element> const& x) {
    std::set<std::pair<Element, Element>> out;
    for (auto const& [p, q] : x.generators()) {
      out.emplace(p, q);
    }
    return out;
  }

  inline bool chain_holds(wrc::Semigroup const&              s,
                          wrc::PairSet<Element> const&       x,
                          wrc::XSequence<Element> const&     seq) {
    return chain_holds(seq, pair_set(x), [&s](Element const& a, Element const& b) {
      return s.multiply(a, b);
    });
  }

  // Letters of a free monoid element (the identity is the empty word).
  inline std::vector<std::int64_t> letters(Element const& w) {
    return w.kind == wrc::Kind::word ? w.data : std::vector<std::int64_t>{};
  }

  // x in a F^1 for the free monoid: a is a prefix of x.
  inline bool word_prefix(Element const& a, Element const& x) {
    auto la = letters(a);
    auto lx = letters(x);
    return la.size() <= lx.size() && std::equal(la.begin(), la.end(), lx.begin());
  }

  inline std::vector<std::int64_t> exponents(Element const& v, std::size_t rank) {
    return v.kind == wrc::Kind::vec ? v.data : std::vector<std::int64_t>(rank, 0);
  }

  // x in a F^1 for the free commutative monoid: componentwise a <= x.
  inline bool vec_divides(Element const& a, Element const& x, std::size_t rank) {
    auto ea = exponents(a, rank);
    auto ex = exponents(x, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      if (ea[i] > ex[i]) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // WRC_TESTS_ORACLES_HPP_
