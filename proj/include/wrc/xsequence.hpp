//
// wrc - right ideals and right congruences of semigroups
//
// Symmetric pair sets and X-sequences.  An X-sequence from a to b is a list
// of steps (p_i, q_i, c_i) with (p_i, q_i) in X and c_i in S^1 such that
//
//   a = p_1 c_1,  q_1 c_1 = p_2 c_2,  ...,  q_n c_n = b.
//
// The empty sequence certifies a = b.  The factor c_i = 1 is represented by
// an empty optional.  Everything here is generic in the element type so that
// the same code serves Cayley-table indices and Element values.
//

#ifndef WRC_XSEQUENCE_HPP_
#define WRC_XSEQUENCE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "element.hpp"
#include "semigroup.hpp"
#include "text.hpp"

namespace wrc {

  ////////////////////////////////////////////////////////////////////////
  // PairSet
  ////////////////////////////////////////////////////////////////////////

  // A set of pairs closed under swapping.  generators() lists each
  // unordered pair once, in insertion order and orientation.
  template <typename T>
  class PairSet {
   public:
    PairSet() = default;
    PairSet(std::initializer_list<std::pair<T, T>> pairs) {
      for (auto const& [p, q] : pairs) {
        insert(p, q);
      }
    }

    bool insert(T const& p, T const& q) {
      if (!_all.insert({p, q}).second) {
        return false;
      }
      _all.insert({q, p});
      _generators.emplace_back(p, q);
      return true;
    }

    void insert_all(PairSet const& other) {
      for (auto const& [p, q] : other.generators()) {
        insert(p, q);
      }
    }

    bool contains(T const& p, T const& q) const {
      return _all.count({p, q}) > 0;
    }

    std::vector<std::pair<T, T>> const& generators() const noexcept {
      return _generators;
    }

    // Every ordered pair, i.e. both orientations of each generator.
    std::set<std::pair<T, T>> const& ordered() const noexcept {
      return _all;
    }

    std::size_t size() const noexcept {
      return _generators.size();
    }

    bool empty() const noexcept {
      return _generators.empty();
    }

    // Pairs with distinct entries.
    std::size_t nontrivial_size() const {
      std::size_t k = 0;
      for (auto const& [p, q] : _generators) {
        k += p == q ? 0 : 1;
      }
      return k;
    }

    bool operator==(PairSet const& that) const {
      return _all == that._all;
    }

   private:
    std::set<std::pair<T, T>>    _all;
    std::vector<std::pair<T, T>> _generators;
  };

  ////////////////////////////////////////////////////////////////////////
  // XSequence
  ////////////////////////////////////////////////////////////////////////

  template <typename T>
  struct XStep {
    T                p;
    T                q;
    std::optional<T> c;

    bool operator==(XStep const&) const = default;
  };

  template <typename T>
  struct XSequence {
    T                     source;
    T                     target;
    std::vector<XStep<T>> steps;

    std::size_t length() const noexcept {
      return steps.size();
    }

    // The same chain read from target to source.
    XSequence reversed() const {
      XSequence out{target, source, {}};
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        out.steps.push_back({it->q, it->p, it->c});
      }
      return out;
    }

    // Concatenation; requires this->target == next.source.
    XSequence& append(XSequence const& next) {
      steps.insert(steps.end(), next.steps.begin(), next.steps.end());
      target = next.target;
      return *this;
    }
  };

  // The outcome of checking a sequence.  failing_step is 1-based; 0 means
  // the empty sequence was given for a != b.
  struct Verdict {
    bool        ok           = true;
    std::size_t failing_step = 0;
    std::string reason;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // mul(x, c) must return x c, with an empty c meaning x.
  template <typename T, typename Mul>
    requires std::is_invocable_v<Mul&, T const&, std::optional<T> const&>
  Verdict verify_xsequence(Mul&& mul, PairSet<T> const& x,
                           XSequence<T> const& seq) {
    if (seq.steps.empty()) {
      if (seq.source == seq.target) {
        return {};
      }
      return {false, 0, "empty sequence between distinct elements"};
    }
    auto const& steps = seq.steps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto const& s = steps[i];
      if (!x.contains(s.p, s.q)) {
        return {false, i + 1, "pair is not in the generating set"};
      }
      T lhs = i == 0 ? seq.source : mul(steps[i - 1].q, steps[i - 1].c);
      if (!(lhs == mul(s.p, s.c))) {
        return {false, i + 1,
                i == 0 ? "source differs from p c"
                       : "q c of the previous step differs from p c"};
      }
    }
    if (!(mul(steps.back().q, steps.back().c) == seq.target)) {
      return {false, steps.size(), "q c of the last step differs from target"};
    }
    return {};
  }

  inline Verdict verify_xsequence(Semigroup const& s, PairSet<Element> const& x,
                                  XSequence<Element> const& seq) {
    return verify_xsequence<Element>(
        [&s](Element const& a, std::optional<Element> const& c) {
          return act(s, a, c);
        },
        x, seq);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  // Applies f to every entry; f(1) is taken to be 1.
  template <typename T, typename U, typename F>
  XSequence<U> map_xsequence(XSequence<T> const& seq, F&& f) {
    XSequence<U> out{f(seq.source), f(seq.target), {}};
    for (auto const& st : seq.steps) {
      std::optional<U> c;
      if (st.c) {
        c = f(*st.c);
      }
      out.steps.push_back({f(st.p), f(st.q), std::move(c)});
    }
    return out;
  }

  template <typename T, typename U, typename F>
  PairSet<U> map_pairs(PairSet<T> const& x, F&& f) {
    PairSet<U> out;
    for (auto const& [p, q] : x.generators()) {
      out.insert(f(p), f(q));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  // a | p1 q1 c1 | ... | pn qn cn | b, elements in the semigroup's
  // notation and "1" for the adjoined identity.  Element notations must not
  // contain spaces or '|'.
  inline std::string format_xsequence(Semigroup const&          s,
                                      XSequence<Element> const& seq) {
    std::string out = s.format(seq.source);
    for (auto const& st : seq.steps) {
      out += " | " + s.format(st.p) + " " + s.format(st.q) + " "
             + (st.c ? s.format(*st.c) : std::string("1"));
    }
    return out + " | " + s.format(seq.target);
  }

  inline std::vector<std::string_view> split_ws(std::string_view t) {
    std::vector<std::string_view> out;
    std::size_t                   i = 0;
    while (i < t.size()) {
      while (i < t.size() && (t[i] == ' ' || t[i] == '\t')) {
        ++i;
      }
      std::size_t j = i;
      while (j < t.size() && t[j] != ' ' && t[j] != '\t') {
        ++j;
      }
      if (j > i) {
        out.push_back(t.substr(i, j - i));
      }
      i = j;
    }
    return out;
  }

  // Inverse of format_xsequence.  A factor "1" is read as the adjoined
  // identity, unless the semigroup has an identity of its own written "1",
  // in which case both readings give the same products.
  inline XSequence<Element> parse_xsequence(Semigroup const& s,
                                             std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t                   start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '|') {
        fields.push_back(text::trim(line.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (fields.size() < 2) {
      throw Error("certificate: expected 'a | p q c | ... | b'");
    }
    XSequence<Element> seq{s.parse(fields.front()), s.parse(fields.back()), {}};
    for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
      auto toks = split_ws(fields[i]);
      if (toks.size() != 3) {
        throw Error("certificate: step " + std::to_string(i)
                    + " must have the form 'p q c'");
      }
      std::optional<Element> c;
      if (toks[2] != "1") {
        c = s.parse(toks[2]);
      } else if (s.identity()) {
        try {
          c = s.parse(toks[2]);
        } catch (Error const&) {
        }
      }
      seq.steps.push_back({s.parse(toks[0]), s.parse(toks[1]), std::move(c)});
    }
    return seq;
  }

}  // namespace wrc

#endif  // WRC_XSEQUENCE_HPP_
