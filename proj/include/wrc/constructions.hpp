//
// wrc - right ideals and right congruences of semigroups
//
// Builders for the standard constructions: adjoining an identity or a zero,
// direct products, Rees quotients, semigroup and monoid free products,
// subsemigroups given by a predicate, and validated homomorphisms and
// retractions.
//

#ifndef WRC_CONSTRUCTIONS_HPP_
#define WRC_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "backends.hpp"
#include "element.hpp"
#include "semigroup.hpp"
#include "text.hpp"

namespace wrc {

  inline constexpr std::size_t default_validation_grade = 6;

  namespace detail {

    // Minimal U with S = US^1 for a finite semigroup: start from all of S
    // and drop u whenever u lies in (U \ {u})S^1.
    inline std::vector<Element> finite_right_ideal_basis(Semigroup const& s) {
      auto t  = tabulate(s);
      auto n  = t.table.size();
      std::vector<bool> keep(n, true);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n && keep[u]; ++v) {
          if (v == u || !keep[v]) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (t.table.product(v, c) == u) {
              keep[u] = false;
              break;
            }
          }
        }
      }
      std::vector<Element> out;
      for (std::size_t u = 0; u < n; ++u) {
        if (keep[u]) {
          out.push_back(t.elements[u]);
        }
      }
      return out;
    }

    inline Tri combine_and(Tri a, Tri b) {
      if (a == Tri::no || b == Tri::no) {
        return Tri::no;
      }
      if (a == Tri::yes && b == Tri::yes) {
        return Tri::yes;
      }
      return Tri::unknown;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // S^1
  ////////////////////////////////////////////////////////////////////////

  class AdjoinIdentity : public Semigroup {
   public:
    // With force, a fresh identity is adjoined even to a monoid.
    explicit AdjoinIdentity(SemigroupPtr s, bool force = false)
        : _s(std::move(s)), _name(_s->identity() ? "1'" : "1") {
      if (!force && _s->identity()) {
        throw Error("adjoin1: " + _s->describe() + " already has an identity");
      }
    }

    SemigroupPtr const& base() const noexcept {
      return _s;
    }

    std::string describe() const override {
      return "adjoin1(" + _s->describe() + ")";
    }

    bool contains(Element const& x) const override {
      return x.kind == Kind::one || _s->contains(x);
    }

    Element multiply(Element const& x, Element const& y) const override {
      if (x.kind == Kind::one) {
        return y;
      }
      if (y.kind == Kind::one) {
        return x;
      }
      return _s->multiply(x, y);
    }

    Element canonical(Element const& x) const override {
      return x.kind == Kind::one ? x : _s->canonical(x);
    }

    std::optional<std::size_t> order() const override {
      if (auto n = _s->order()) {
        return *n + 1;
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      return Element::one();
    }

    std::optional<Element> zero() const override {
      return _s->zero();
    }

    std::size_t grade(Element const& x) const override {
      return x.kind == Kind::one ? 0 : _s->grade(x);
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out{Element::one()};
      auto                 rest = _s->enumerate(bound);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }

    std::string format(Element const& x) const override {
      return x.kind == Kind::one ? _name : _s->format(x);
    }

    Element parse(std::string_view t) const override {
      if (text::trim(t) == _name) {
        return Element::one();
      }
      return _s->canonical(_s->parse(t));
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      if (p.kind == Kind::one) {
        return std::vector<Element>{u};
      }
      std::vector<Element> out;
      if (p == u) {
        out.push_back(Element::one());
      }
      if (u.kind == Kind::one) {
        return out;
      }
      auto q = _s->right_quotients(p, u);
      if (!q) {
        return std::nullopt;
      }
      out.insert(out.end(), q->begin(), q->end());
      return out;
    }

    Tri left_cancellative(Element const& x) const override {
      return x.kind == Kind::one ? Tri::yes : _s->left_cancellative(x);
    }

    Tri right_factorisable(Element const&) const override {
      return Tri::yes;
    }

    std::optional<std::vector<Element>> right_ideal_basis() const override {
      return std::vector<Element>{Element::one()};
    }

   private:
    SemigroupPtr _s;
    std::string  _name;
  };

  ////////////////////////////////////////////////////////////////////////
  // S^0
  ////////////////////////////////////////////////////////////////////////

  class AdjoinZero : public Semigroup {
   public:
    // With force, a fresh zero is adjoined even when S has one.
    explicit AdjoinZero(SemigroupPtr s, bool force = false)
        : _s(std::move(s)), _name(_s->zero() ? "0'" : "0") {
      if (!force && _s->zero()) {
        throw Error("adjoin0: " + _s->describe() + " already has a zero");
      }
    }

    SemigroupPtr const& base() const noexcept {
      return _s;
    }

    std::string describe() const override {
      return "adjoin0(" + _s->describe() + ")";
    }

    bool contains(Element const& x) const override {
      return x.kind == Kind::zero || _s->contains(x);
    }

    Element multiply(Element const& x, Element const& y) const override {
      if (x.kind == Kind::zero || y.kind == Kind::zero) {
        return Element::zero();
      }
      return _s->multiply(x, y);
    }

    Element canonical(Element const& x) const override {
      return x.kind == Kind::zero ? x : _s->canonical(x);
    }

    std::optional<std::size_t> order() const override {
      if (auto n = _s->order()) {
        return *n + 1;
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      return _s->identity();
    }

    std::optional<Element> zero() const override {
      return Element::zero();
    }

    std::size_t grade(Element const& x) const override {
      return x.kind == Kind::zero ? 0 : _s->grade(x);
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      auto out = _s->enumerate(bound);
      out.push_back(Element::zero());
      return out;
    }

    std::string format(Element const& x) const override {
      return x.kind == Kind::zero ? _name : _s->format(x);
    }

    Element parse(std::string_view t) const override {
      if (text::trim(t) == _name) {
        return Element::zero();
      }
      return _s->canonical(_s->parse(t));
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      if (p.kind == Kind::zero) {
        if (u.kind != Kind::zero) {
          return std::vector<Element>{};
        }
        if (!is_finite()) {
          return std::nullopt;
        }
        return elements();
      }
      if (u.kind == Kind::zero) {
        return std::vector<Element>{Element::zero()};
      }
      return _s->right_quotients(p, u);
    }

    Tri left_cancellative(Element const& x) const override {
      // 0 = x0 = xy would be needed for a failure, impossible for x in S.
      return x.kind == Kind::zero ? tri(false) : _s->left_cancellative(x);
    }

    Tri right_factorisable(Element const& x) const override {
      return x.kind == Kind::zero ? Tri::yes : _s->right_factorisable(x);
    }

   private:
    SemigroupPtr _s;
    std::string  _name;
  };

  ////////////////////////////////////////////////////////////////////////
  // S x T
  ////////////////////////////////////////////////////////////////////////

  class DirectProduct : public Semigroup {
   public:
    DirectProduct(SemigroupPtr s, SemigroupPtr t)
        : _s(std::move(s)), _t(std::move(t)) {}

    SemigroupPtr const& first() const noexcept {
      return _s;
    }
    SemigroupPtr const& second() const noexcept {
      return _t;
    }

    std::string describe() const override {
      return "product(" + _s->describe() + ", " + _t->describe() + ")";
    }

    bool contains(Element const& x) const override {
      return x.kind == Kind::pair && x.parts.size() == 2
             && _s->contains(x.parts[0]) && _t->contains(x.parts[1]);
    }

    Element multiply(Element const& x, Element const& y) const override {
      return Element::pair(_s->multiply(x.parts[0], y.parts[0]),
                           _t->multiply(x.parts[1], y.parts[1]));
    }

    Element canonical(Element const& x) const override {
      return Element::pair(_s->canonical(x.parts.at(0)),
                           _t->canonical(x.parts.at(1)));
    }

    std::optional<std::size_t> order() const override {
      auto m = _s->order();
      auto n = _t->order();
      if (m && n) {
        return *m * *n;
      }
      if ((m && *m == 0) || (n && *n == 0)) {
        return 0;
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      auto e = _s->identity();
      auto f = _t->identity();
      if (e && f) {
        return Element::pair(*e, *f);
      }
      return std::nullopt;
    }

    std::optional<Element> zero() const override {
      auto e = _s->zero();
      auto f = _t->zero();
      if (e && f) {
        return Element::pair(*e, *f);
      }
      return std::nullopt;
    }

    // The larger of the component grades, so that enumeration to grade g is
    // exactly the cartesian product of the factor enumerations.
    std::size_t grade(Element const& x) const override {
      return std::max(_s->grade(x.parts[0]), _t->grade(x.parts[1]));
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      auto                 xs = _s->enumerate(bound);
      auto                 ys = _t->enumerate(bound);
      for (auto const& x : xs) {
        for (auto const& y : ys) {
          out.push_back(Element::pair(x, y));
        }
      }
      return out;
    }

    std::string format(Element const& x) const override {
      return "(" + _s->format(x.parts[0]) + "," + _t->format(x.parts[1])
             + ")";
    }

    Element parse(std::string_view t) const override {
      t = text::trim(t);
      if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
        throw Error("expected a pair (x,y), found '" + std::string(t) + "'");
      }
      auto parts = text::split_top(t.substr(1, t.size() - 2), ',');
      if (parts.size() != 2) {
        throw Error("expected a pair (x,y), found '" + std::string(t) + "'");
      }
      return Element::pair(_s->canonical(_s->parse(parts[0])),
                           _t->canonical(_t->parse(parts[1])));
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      auto a = _s->right_quotients(p.parts[0], u.parts[0]);
      auto b = _t->right_quotients(p.parts[1], u.parts[1]);
      if (!a || !b) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& x : *a) {
        for (auto const& y : *b) {
          out.push_back(Element::pair(x, y));
        }
      }
      return out;
    }

    Tri left_cancellative(Element const& x) const override {
      return detail::combine_and(_s->left_cancellative(x.parts[0]),
                                 _t->left_cancellative(x.parts[1]));
    }

    Tri right_factorisable(Element const& x) const override {
      return detail::combine_and(_s->right_factorisable(x.parts[0]),
                                 _t->right_factorisable(x.parts[1]));
    }

    std::optional<std::vector<Element>> right_ideal_basis() const override {
      if (auto e = identity()) {
        return std::vector<Element>{*e};
      }
      return std::nullopt;
    }

   private:
    SemigroupPtr _s;
    SemigroupPtr _t;
  };

  ////////////////////////////////////////////////////////////////////////
  // Ideals and Rees quotients
  ////////////////////////////////////////////////////////////////////////

  // A two-sided ideal of a semigroup given by a membership predicate.
  struct Ideal {
    std::function<bool(Element const&)> contains;
    std::string                         description;
    std::vector<Element>                generators;
  };

  // The ideal consisting of the listed elements.
  inline Ideal ideal_from_elements(Semigroup const&     s,
                                   std::vector<Element> elems) {
    auto set = std::make_shared<std::unordered_set<Element, ElementHash>>(
        elems.begin(), elems.end());
    std::vector<std::string> names;
    for (auto const& e : elems) {
      names.push_back(s.format(e));
    }
    return Ideal{[set](Element const& x) { return set->count(x) > 0; },
                 "{" + text::join(names, ", ") + "}", std::move(elems)};
  }

  // The two-sided ideal S^1 X S^1 generated by gens.  Exhaustive on finite
  // semigroups, closed form on free backends.
  inline Ideal generated_ideal(SemigroupPtr const& s, std::vector<Element> gens) {
    std::vector<std::string> names;
    for (auto const& g : gens) {
      names.push_back(s->format(g));
    }
    std::string desc = "gen(" + text::join(names, ", ") + ")";
    if (s->is_finite()) {
      auto all = s->elements();
      std::unordered_set<Element, ElementHash> ideal(gens.begin(), gens.end());
      std::vector<Element> frontier(gens.begin(), gens.end());
      while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (auto const& y : all) {
          for (auto const& z : {s->multiply(x, y), s->multiply(y, x)}) {
            if (ideal.insert(z).second) {
              frontier.push_back(z);
            }
          }
        }
      }
      auto set = std::make_shared<std::unordered_set<Element, ElementHash>>(
          std::move(ideal));
      return Ideal{[set](Element const& x) { return set->count(x) > 0; },
                   desc, std::move(gens)};
    }
    if (dynamic_cast<FreeWords const*>(s.get()) != nullptr) {
      return Ideal{[gens](Element const& x) {
                     for (auto const& g : gens) {
                       if (std::search(x.data.begin(), x.data.end(),
                                       g.data.begin(), g.data.end())
                           != x.data.end()) {
                         return true;
                       }
                     }
                     return false;
                   },
                   desc, gens};
    }
    if (dynamic_cast<FreeCommutative const*>(s.get()) != nullptr) {
      return Ideal{[gens](Element const& x) {
                     for (auto const& g : gens) {
                       bool ge = true;
                       for (std::size_t i = 0; i < g.data.size() && ge; ++i) {
                         ge = x.data[i] >= g.data[i];
                       }
                       if (ge) {
                         return true;
                       }
                     }
                     return false;
                   },
                   desc, gens};
    }
    throw Error("gen(...): generated ideals of " + s->describe()
                + " are not supported");
  }

  // Checks sI, Is in I for s in S and i in I: exhaustively on finite S,
  // for s, i of grade <= bound otherwise.  Returns a failing (s, i) pair.
  inline std::optional<ElementPair> ideal_failure(Semigroup const& s,
                                                  Ideal const&     ideal,
                                                  std::size_t      bound) {
    auto xs = s.is_finite() ? s.elements() : s.enumerate(bound);
    for (auto const& i : xs) {
      if (!ideal.contains(i)) {
        continue;
      }
      for (auto const& x : xs) {
        if (!ideal.contains(s.multiply(x, i))
            || !ideal.contains(s.multiply(i, x))) {
          return ElementPair{x, i};
        }
      }
    }
    return std::nullopt;
  }

  class ReesQuotient : public Semigroup {
   public:
    ReesQuotient(SemigroupPtr s, Ideal ideal,
                 std::size_t validation_grade = default_validation_grade)
        : _s(std::move(s)), _ideal(std::move(ideal)) {
      for (auto const& g : _ideal.generators) {
        if (!_ideal.contains(g)) {
          throw Error("rees: generator " + _s->format(g)
                      + " is not in the ideal");
        }
      }
      if (auto bad = ideal_failure(*_s, _ideal, validation_grade)) {
        throw Error("rees: " + _ideal.description + " is not an ideal of "
                    + _s->describe() + ": witness (" + _s->format(bad->first)
                    + ", " + _s->format(bad->second) + ")");
      }
      if (auto n = _s->order()) {
        std::size_t k = 0;
        for (auto const& x : _s->elements()) {
          k += _ideal.contains(x) ? 0 : 1;
        }
        _order = k + 1;
      } else if (_s->grade_prefix_closed()) {
        // If every element of some grade g + 1 is in the ideal, so is every
        // element of larger grade, and the quotient is finite.
        for (std::size_t g = 0; g <= validation_grade; ++g) {
          bool all = true;
          for (auto const& x : _s->enumerate(g + 1)) {
            if (_s->grade(x) == g + 1 && !_ideal.contains(x)) {
              all = false;
              break;
            }
          }
          if (all) {
            std::size_t k = 0;
            for (auto const& x : _s->enumerate(g)) {
              k += _ideal.contains(x) ? 0 : 1;
            }
            _order = k + 1;
            break;
          }
        }
      }
    }

    SemigroupPtr const& base() const noexcept {
      return _s;
    }
    Ideal const& ideal() const noexcept {
      return _ideal;
    }

    std::string describe() const override {
      return "rees(" + _s->describe() + ", " + _ideal.description + ")";
    }

    bool contains(Element const& x) const override {
      return x.kind == Kind::zero || (_s->contains(x) && !_ideal.contains(x));
    }

    Element multiply(Element const& x, Element const& y) const override {
      if (x.kind == Kind::zero || y.kind == Kind::zero) {
        return Element::zero();
      }
      auto p = _s->multiply(x, y);
      return _ideal.contains(p) ? Element::zero() : p;
    }

    Element canonical(Element const& x) const override {
      return x.kind == Kind::zero ? x : _s->canonical(x);
    }

    // The image of an element of S under the quotient map.
    Element project(Element const& x) const {
      return x.kind == Kind::zero || _ideal.contains(x) ? Element::zero() : x;
    }

    std::optional<std::size_t> order() const override {
      return _order;
    }

    std::optional<Element> identity() const override {
      auto e = _s->identity();
      if (!e) {
        return std::nullopt;
      }
      return project(*e);
    }

    std::optional<Element> zero() const override {
      return Element::zero();
    }

    std::size_t grade(Element const& x) const override {
      return x.kind == Kind::zero ? 0 : _s->grade(x);
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      for (auto const& x : _s->enumerate(bound)) {
        if (!_ideal.contains(x)) {
          out.push_back(x);
        }
      }
      out.push_back(Element::zero());
      return out;
    }

    std::string format(Element const& x) const override {
      return x.kind == Kind::zero ? "0" : _s->format(x);
    }

    Element parse(std::string_view t) const override {
      if (text::trim(t) == "0") {
        return Element::zero();
      }
      auto x = _s->canonical(_s->parse(t));
      if (_ideal.contains(x)) {
        throw Error("'" + std::string(t) + "' lies in the ideal; write 0");
      }
      return x;
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      if (u.kind == Kind::zero) {
        if (!is_finite()) {
          return std::nullopt;
        }
        std::vector<Element> out;
        for (auto const& c : elements()) {
          if (multiply(p, c).kind == Kind::zero) {
            out.push_back(c);
          }
        }
        return out;
      }
      if (p.kind == Kind::zero) {
        return std::vector<Element>{};
      }
      auto q = _s->right_quotients(p, u);
      if (!q) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& c : *q) {
        if (!_ideal.contains(c)) {
          out.push_back(c);
        }
      }
      return out;
    }

   private:
    SemigroupPtr               _s;
    Ideal                      _ideal;
    std::optional<std::size_t> _order;
  };

  ////////////////////////////////////////////////////////////////////////
  // Free products
  ////////////////////////////////////////////////////////////////////////

  // Elements are reduced block sequences: adjacent blocks come from distinct
  // factors (tagged by position), and in the monoid variant no block is a
  // factor identity; the empty sequence is the identity.
  class FreeProduct : public Semigroup {
   public:
    FreeProduct(std::vector<SemigroupPtr> factors, bool monoid)
        : _factors(std::move(factors)), _monoid(monoid) {
      if (_factors.empty()) {
        throw Error("free product: at least one factor is required");
      }
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        auto e = _factors[i]->identity();
        if (_monoid && !e) {
          throw Error("mfp: factor " + std::to_string(i + 1) + " ("
                      + _factors[i]->describe() + ") lacks an identity");
        }
        _identities.push_back(e);
      }
    }

    bool monoid() const noexcept {
      return _monoid;
    }
    std::size_t num_factors() const noexcept {
      return _factors.size();
    }
    SemigroupPtr const& factor(std::size_t i) const {
      return _factors.at(i);
    }
    Element const& factor_identity(std::size_t i) const {
      return _identities.at(i).value();
    }

    std::string describe() const override {
      std::string out = _monoid ? "mfp(" : "sfp(";
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        out += (i == 0 ? "" : ", ") + _factors[i]->describe();
      }
      return out + ")";
    }

    // The one-block element x of factor i (the identity of the monoid free
    // product when x is the factor identity).
    Element embed(std::size_t i, Element const& x) const {
      return canonical(Element::blocks({static_cast<std::int64_t>(i)}, {x}));
    }

    bool contains(Element const& x) const override {
      if (x.kind != Kind::blocks || x.data.size() != x.parts.size()) {
        return false;
      }
      if (x.parts.empty()) {
        return _monoid;
      }
      for (std::size_t k = 0; k < x.parts.size(); ++k) {
        auto t = x.data[k];
        if (t < 0 || static_cast<std::size_t>(t) >= _factors.size()) {
          return false;
        }
        auto const& f = *_factors[static_cast<std::size_t>(t)];
        if (!f.contains(x.parts[k])) {
          return false;
        }
        if (_monoid && x.parts[k] == *_identities[static_cast<std::size_t>(t)]) {
          return false;
        }
        if (k > 0 && x.data[k - 1] == t) {
          return false;
        }
      }
      return true;
    }

    Element multiply(Element const& x, Element const& y) const override {
      Element z(Kind::blocks, x.data, x.parts);
      z.data.insert(z.data.end(), y.data.begin(), y.data.end());
      z.parts.insert(z.parts.end(), y.parts.begin(), y.parts.end());
      return canonical(z);
    }

    Element canonical(Element const& x) const override {
      if (x.kind != Kind::blocks || x.data.size() != x.parts.size()) {
        throw Error("free product: not a block sequence");
      }
      std::vector<std::int64_t> tags;
      std::vector<Element>      elems;
      for (std::size_t k = 0; k < x.parts.size(); ++k) {
        auto    t = x.data[k];
        auto    i = static_cast<std::size_t>(t);
        Element e = _factors.at(i)->canonical(x.parts[k]);
        if (_monoid && e == *_identities[i]) {
          continue;
        }
        if (!tags.empty() && tags.back() == t) {
          e = _factors[i]->multiply(elems.back(), e);
          tags.pop_back();
          elems.pop_back();
          if (_monoid && e == *_identities[i]) {
            continue;
          }
        }
        tags.push_back(t);
        elems.push_back(std::move(e));
      }
      return Element::blocks(std::move(tags), std::move(elems));
    }

    std::optional<std::size_t> order() const override {
      if (!_monoid) {
        if (_factors.size() == 1) {
          return _factors[0]->order();
        }
        return std::nullopt;
      }
      std::optional<std::size_t> nontrivial;
      std::size_t                count = 0;
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        auto n = _factors[i]->order();
        if (!n || *n > 1) {
          ++count;
          nontrivial = i;
        }
      }
      if (count == 0) {
        return 1;
      }
      if (count == 1) {
        return _factors[*nontrivial]->order();
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      if (_monoid) {
        return Element::blocks({}, {});
      }
      if (_factors.size() == 1 && _identities[0]) {
        return embed(0, *_identities[0]);
      }
      return std::nullopt;
    }

    std::optional<Element> zero() const override {
      if (_factors.size() == 1) {
        if (auto z = _factors[0]->zero()) {
          return embed(0, *z);
        }
      }
      return std::nullopt;
    }

    // Number of blocks plus the largest grade of a block.
    std::size_t grade(Element const& x) const override {
      std::size_t inner = 0;
      for (std::size_t k = 0; k < x.parts.size(); ++k) {
        inner = std::max(inner, _factors[static_cast<std::size_t>(x.data[k])]
                                    ->grade(x.parts[k]));
      }
      return x.parts.size() + inner;
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      if (_monoid) {
        out.push_back(Element::blocks({}, {}));
      }
      for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<std::vector<Element>> pools;
        for (std::size_t i = 0; i < _factors.size(); ++i) {
          std::vector<Element> pool;
          for (auto const& e : _factors[i]->enumerate(bound - len)) {
            if (!(_monoid && e == *_identities[i])) {
              pool.push_back(e);
            }
          }
          pools.push_back(std::move(pool));
        }
        std::vector<std::int64_t> tags;
        std::vector<Element>      elems;
        extend(len, pools, tags, elems, out);
      }
      return out;
    }

    std::string format(Element const& x) const override {
      if (x.parts.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t k = 0; k < x.parts.size(); ++k) {
        if (k != 0) {
          out += "*";
        }
        out += format_block(static_cast<std::size_t>(x.data[k]), x.parts[k]);
      }
      return out;
    }

    // Blocks are written "x<k>" or "x@<k>" with k the 1-based factor index.
    Element parse(std::string_view t) const override {
      t = text::trim(t);
      if (t == "1" && _monoid) {
        return Element::blocks({}, {});
      }
      std::vector<std::int64_t> tags;
      std::vector<Element>      elems;
      for (auto tok : text::split_top(t, '*')) {
        auto [i, e] = parse_block(text::trim(tok));
        tags.push_back(static_cast<std::int64_t>(i));
        elems.push_back(std::move(e));
      }
      auto x = canonical(Element::blocks(std::move(tags), std::move(elems)));
      if (!contains(x)) {
        throw Error("'" + std::string(t) + "' is not an element of "
                    + describe());
      }
      return x;
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override;

    Tri right_factorisable(Element const& x) const override {
      if (_monoid) {
        return Tri::yes;
      }
      // x = xs forces s to be absorbed by the last block.
      auto i = static_cast<std::size_t>(x.data.back());
      auto q = _factors[i]->right_quotients(x.parts.back(), x.parts.back());
      if (!q) {
        return _factors[i]->right_factorisable(x.parts.back());
      }
      return tri(!q->empty());
    }

    std::optional<std::vector<Element>> right_ideal_basis() const override {
      if (_monoid) {
        return std::vector<Element>{Element::blocks({}, {})};
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        std::optional<std::vector<Element>> basis
            = _factors[i]->right_ideal_basis();
        if (!basis && _factors[i]->is_finite()) {
          basis = detail::finite_right_ideal_basis(*_factors[i]);
        }
        if (!basis) {
          return std::nullopt;
        }
        for (auto const& u : *basis) {
          out.push_back(embed(i, u));
        }
      }
      return out;
    }

   private:
    void extend(std::size_t len, std::vector<std::vector<Element>> const& pools,
                std::vector<std::int64_t>& tags, std::vector<Element>& elems,
                std::vector<Element>& out) const {
      if (tags.size() == len) {
        out.push_back(Element::blocks(tags, elems));
        return;
      }
      for (std::size_t i = 0; i < pools.size(); ++i) {
        if (!tags.empty() && tags.back() == static_cast<std::int64_t>(i)) {
          continue;
        }
        for (auto const& e : pools[i]) {
          tags.push_back(static_cast<std::int64_t>(i));
          elems.push_back(e);
          extend(len, pools, tags, elems, out);
          tags.pop_back();
          elems.pop_back();
        }
      }
    }

    std::vector<std::pair<std::size_t, Element>>
    block_candidates(std::string_view tok) const {
      std::vector<std::pair<std::size_t, Element>> found;
      auto try_one = [&](std::string_view name, std::string_view num) {
        if (num.empty() || name.empty()) {
          return;
        }
        std::int64_t k = 0;
        try {
          k = text::parse_int(num);
        } catch (Error const&) {
          return;
        }
        if (k < 1 || static_cast<std::size_t>(k) > _factors.size()) {
          return;
        }
        auto i = static_cast<std::size_t>(k - 1);
        try {
          auto e = _factors[i]->canonical(_factors[i]->parse(name));
          found.emplace_back(i, std::move(e));
        } catch (Error const&) {
        }
      };
      auto at = tok.rfind('@');
      if (at != std::string_view::npos) {
        try_one(tok.substr(0, at), tok.substr(at + 1));
        return found;
      }
      std::size_t d = tok.size();
      while (d > 0 && tok[d - 1] >= '0' && tok[d - 1] <= '9') {
        --d;
      }
      for (std::size_t cut = d; cut < tok.size(); ++cut) {
        if (tok[cut] == '0') {
          continue;
        }
        try_one(tok.substr(0, cut), tok.substr(cut));
      }
      return found;
    }

    std::pair<std::size_t, Element> parse_block(std::string_view tok) const {
      auto found = block_candidates(tok);
      if (found.empty()) {
        throw Error("cannot read block '" + std::string(tok) + "' of "
                    + describe() + " (write x@k for element x of factor k)");
      }
      if (found.size() > 1) {
        throw Error("ambiguous block '" + std::string(tok)
                    + "' (write x@k for element x of factor k)");
      }
      return found.front();
    }

    std::string format_block(std::size_t i, Element const& e) const {
      auto name  = _factors[i]->format(e);
      auto short_form = name + std::to_string(i + 1);
      auto found = block_candidates(short_form);
      if (found.size() == 1 && found[0].first == i && found[0].second == e) {
        return short_form;
      }
      return name + "@" + std::to_string(i + 1);
    }

    std::vector<SemigroupPtr>           _factors;
    bool                                _monoid;
    std::vector<std::optional<Element>> _identities;
  };

  // All reduced c with pc = u.  Cancellation in the monoid variant lets the
  // first j blocks of c be right inverses of the last j blocks of p; after
  // that, either u continues p's remaining prefix verbatim, or the last
  // remaining block of p is multiplied by one more block y of its factor.
  inline std::optional<std::vector<Element>>
  FreeProduct::right_quotients(Element const& p, Element const& u) const {
    std::size_t const k = p.parts.size();
    std::set<Element> found;

    auto consider = [&](std::vector<std::int64_t> tags,
                        std::vector<Element>      elems) {
      auto c = canonical(Element::blocks(std::move(tags), std::move(elems)));
      if (!_monoid && c.parts.empty()) {
        return;
      }
      if (multiply(p, c) == u) {
        found.insert(std::move(c));
      }
    };

    auto prefix_matches = [&](std::size_t len) {
      if (u.parts.size() < len) {
        return false;
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (u.data[i] != p.data[i] || !(u.parts[i] == p.parts[i])) {
          return false;
        }
      }
      return true;
    };

    // inverses[i] = right inverses of block k - 1 - i of p.
    std::vector<std::vector<Element>> inverses;
    std::size_t const                 max_cancel = _monoid ? k : 0;
    for (std::size_t i = 0; i < max_cancel; ++i) {
      auto f  = static_cast<std::size_t>(p.data[k - 1 - i]);
      auto ri = _factors[f]->right_quotients(p.parts[k - 1 - i],
                                             *_identities[f]);
      if (!ri) {
        return std::nullopt;
      }
      inverses.push_back(std::move(*ri));
    }

    // Enumerate choices of j cancelled blocks recursively.
    std::vector<std::int64_t> ctags;
    std::vector<Element>      celems;
    bool                      unsupported = false;

    std::function<void(std::size_t)> go = [&](std::size_t j) {
      std::size_t const rest = k - j;
      // Option A: u = p[0 .. rest) * r.
      if (prefix_matches(rest)) {
        auto tags  = ctags;
        auto elems = celems;
        tags.insert(tags.end(), u.data.begin() + rest, u.data.end());
        elems.insert(elems.end(), u.parts.begin() + rest, u.parts.end());
        consider(std::move(tags), std::move(elems));
      }
      // Option B: u = p[0 .. rest - 1) * (p[rest - 1] y) * r.
      if (rest >= 1 && prefix_matches(rest - 1) && u.parts.size() >= rest
          && u.data[rest - 1] == p.data[rest - 1]) {
        auto f = static_cast<std::size_t>(p.data[rest - 1]);
        auto ys
            = _factors[f]->right_quotients(p.parts[rest - 1], u.parts[rest - 1]);
        if (!ys) {
          unsupported = true;
          return;
        }
        for (auto const& y : *ys) {
          auto tags  = ctags;
          auto elems = celems;
          tags.push_back(static_cast<std::int64_t>(f));
          elems.push_back(y);
          tags.insert(tags.end(), u.data.begin() + rest, u.data.end());
          elems.insert(elems.end(), u.parts.begin() + rest, u.parts.end());
          consider(std::move(tags), std::move(elems));
        }
      }
      if (j < max_cancel) {
        auto f = p.data[k - 1 - j];
        for (auto const& r : inverses[j]) {
          ctags.push_back(f);
          celems.push_back(r);
          go(j + 1);
          ctags.pop_back();
          celems.pop_back();
        }
      }
    };
    go(0);
    if (unsupported) {
      return std::nullopt;
    }
    return std::vector<Element>(found.begin(), found.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups
  ////////////////////////////////////////////////////////////////////////

  struct Flag {
    Tri       value = Tri::unknown;
    Exactness exactness;
  };

  class Subsemigroup : public Semigroup {
   public:
    Subsemigroup(SemigroupPtr s, std::function<bool(Element const&)> pred,
                 std::string                description,
                 std::size_t                validation_grade
                 = default_validation_grade,
                 std::optional<std::size_t> known_order = std::nullopt)
        : _s(std::move(s)),
          _pred(std::move(pred)),
          _description(std::move(description)) {
      bool finite = _s->is_finite();
      auto xs     = finite ? _s->elements() : _s->enumerate(validation_grade);
      for (auto const& x : xs) {
        if (!_pred(x)) {
          continue;
        }
        for (auto const& y : xs) {
          if (_pred(y) && !_pred(_s->multiply(x, y))) {
            throw Error("subsemigroup: " + _description
                        + " is not closed: " + _s->format(x) + " * "
                        + _s->format(y) + " = "
                        + _s->format(_s->multiply(x, y)));
          }
        }
      }
      auto bounded = finite ? Exactness::full()
                            : Exactness::up_to(validation_grade);
      // Is S \ T an ideal?  A failure is a witness and hence exact.
      _complement_is_ideal = {Tri::yes, bounded};
      for (auto const& i : xs) {
        if (_pred(i)) {
          continue;
        }
        for (auto const& x : xs) {
          if (_pred(_s->multiply(x, i)) || _pred(_s->multiply(i, x))) {
            _complement_is_ideal = {Tri::no, Exactness::full()};
            _complement_witness  = ElementPair{x, i};
            break;
          }
        }
        if (_complement_is_ideal.value == Tri::no) {
          break;
        }
      }
      if (finite) {
        std::size_t k = 0;
        for (auto const& x : xs) {
          k += _pred(x) ? 1 : 0;
        }
        _order = k;
        _large = {Tri::yes, Exactness::full()};
      } else {
        _order = known_order;
        auto count = [&](std::size_t g) {
          std::size_t k = 0;
          for (auto const& x : _s->enumerate(g)) {
            k += _pred(x) ? 0 : 1;
          }
          return k;
        };
        bool stable = count(validation_grade) == count(validation_grade + 1);
        _large      = {tri(stable), bounded};
      }
    }

    SemigroupPtr const& ambient() const noexcept {
      return _s;
    }
    bool member(Element const& x) const {
      return _s->contains(x) && _pred(x);
    }
    Flag complement_is_ideal() const noexcept {
      return _complement_is_ideal;
    }
    std::optional<ElementPair> const& complement_witness() const noexcept {
      return _complement_witness;
    }
    Flag large() const noexcept {
      return _large;
    }

    std::string describe() const override {
      return _description;
    }

    bool contains(Element const& x) const override {
      return member(x);
    }

    Element multiply(Element const& x, Element const& y) const override {
      return _s->multiply(x, y);
    }

    Element canonical(Element const& x) const override {
      return _s->canonical(x);
    }

    std::optional<std::size_t> order() const override {
      return _order;
    }

    std::optional<Element> identity() const override {
      auto e = _s->identity();
      if (e && _pred(*e)) {
        return e;
      }
      if (_order) {
        auto t = tabulate(*this);
        if (auto i = t.table.identity()) {
          return t.elements[*i];
        }
      }
      return std::nullopt;
    }

    std::optional<Element> zero() const override {
      auto z = _s->zero();
      if (z && _pred(*z)) {
        return z;
      }
      if (_order) {
        auto t = tabulate(*this);
        if (auto i = t.table.zero()) {
          return t.elements[*i];
        }
      }
      return std::nullopt;
    }

    std::size_t grade(Element const& x) const override {
      return _s->grade(x);
    }

    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      for (auto const& x : _s->enumerate(bound)) {
        if (_pred(x)) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::string format(Element const& x) const override {
      return _s->format(x);
    }

    Element parse(std::string_view t) const override {
      auto x = _s->canonical(_s->parse(t));
      if (!_pred(x)) {
        throw Error("'" + std::string(t) + "' is not in " + _description);
      }
      return x;
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      auto q = _s->right_quotients(p, u);
      if (!q) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& c : *q) {
        if (_pred(c)) {
          out.push_back(c);
        }
      }
      return out;
    }

   private:
    SemigroupPtr                        _s;
    std::function<bool(Element const&)> _pred;
    std::string                         _description;
    std::optional<std::size_t>          _order;
    Flag                                _complement_is_ideal;
    std::optional<ElementPair>          _complement_witness;
    Flag                                _large;
  };

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and retractions
  ////////////////////////////////////////////////////////////////////////

  struct Morphism {
    SemigroupPtr                           source;
    SemigroupPtr                           target;
    std::function<Element(Element const&)> apply;
    Exactness                              validated;

    Element operator()(Element const& x) const {
      return apply(x);
    }
  };

  // Checks (xy)f = (xf)(yf) and xf in the target, exhaustively on finite
  // sources and to grade bound otherwise.  Throws with a witness.
  inline Morphism homomorphism(SemigroupPtr source, SemigroupPtr target,
                               std::function<Element(Element const&)> f,
                               std::size_t bound = default_validation_grade) {
    auto xs = source->is_finite() ? source->elements()
                                  : source->enumerate(bound);
    for (auto const& x : xs) {
      if (!target->contains(f(x))) {
        throw Error("homomorphism: image of " + source->format(x)
                    + " is not in " + target->describe());
      }
      for (auto const& y : xs) {
        if (f(source->multiply(x, y)) != target->multiply(f(x), f(y))) {
          throw Error("homomorphism: fails on (" + source->format(x) + ", "
                      + source->format(y) + ")");
        }
      }
    }
    auto ex = source->is_finite() ? Exactness::full() : Exactness::up_to(bound);
    return Morphism{std::move(source), std::move(target), std::move(f), ex};
  }

  // A homomorphism from S onto a subsemigroup T of S fixing T pointwise.
  inline Morphism retraction(SemigroupPtr source, SemigroupPtr target,
                             std::function<Element(Element const&)> f,
                             std::size_t bound = default_validation_grade) {
    auto m  = homomorphism(source, target, std::move(f), bound);
    auto ts = target->is_finite() ? target->elements() : target->enumerate(bound);
    for (auto const& t : ts) {
      if (!source->contains(t)) {
        throw Error("retraction: " + target->describe()
                    + " is not a subsemigroup of " + source->describe());
      }
      if (m(t) != t) {
        throw Error("retraction: " + target->format(t) + " is not fixed");
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factories
  ////////////////////////////////////////////////////////////////////////

  // S^1; returns S itself when S is already a monoid, and the free monoid
  // (resp. free commutative monoid) for free semigroups.
  inline SemigroupPtr adjoin_identity(SemigroupPtr s) {
    if (s->identity()) {
      return s;
    }
    if (auto w = dynamic_cast<FreeWords const*>(s.get())) {
      return free_monoid(w->alphabet());
    }
    if (auto c = dynamic_cast<FreeCommutative const*>(s.get())) {
      return free_commutative_monoid(c->rank());
    }
    return std::make_shared<AdjoinIdentity>(std::move(s));
  }

  // S with a new identity adjoined, whether or not S is a monoid.
  inline std::shared_ptr<AdjoinIdentity const>
  adjoin_new_identity(SemigroupPtr s) {
    return std::make_shared<AdjoinIdentity>(std::move(s), true);
  }

  inline SemigroupPtr adjoin_zero(SemigroupPtr s) {
    if (s->zero()) {
      return s;
    }
    return std::make_shared<AdjoinZero>(std::move(s));
  }

  // S with a new zero adjoined, whether or not S has one.
  inline std::shared_ptr<AdjoinZero const> adjoin_new_zero(SemigroupPtr s) {
    return std::make_shared<AdjoinZero>(std::move(s), true);
  }

  inline SemigroupPtr direct_product(SemigroupPtr s, SemigroupPtr t) {
    return std::make_shared<DirectProduct>(std::move(s), std::move(t));
  }

  inline SemigroupPtr rees_quotient(SemigroupPtr s, Ideal ideal,
                                    std::size_t validation_grade
                                    = default_validation_grade) {
    return std::make_shared<ReesQuotient>(std::move(s), std::move(ideal),
                                          validation_grade);
  }

  inline SemigroupPtr semigroup_free_product(std::vector<SemigroupPtr> fs) {
    return std::make_shared<FreeProduct>(std::move(fs), false);
  }

  inline SemigroupPtr monoid_free_product(std::vector<SemigroupPtr> fs) {
    return std::make_shared<FreeProduct>(std::move(fs), true);
  }

  inline std::shared_ptr<Subsemigroup const>
  subsemigroup(SemigroupPtr s, std::function<bool(Element const&)> pred,
               std::string description,
               std::size_t validation_grade = default_validation_grade,
               std::optional<std::size_t> known_order = std::nullopt) {
    return std::make_shared<Subsemigroup>(std::move(s), std::move(pred),
                                          std::move(description),
                                          validation_grade, known_order);
  }

  // The factor M_i inside a monoid free product F, as a subsemigroup, and
  // the retraction F -> M_i sending every other factor to 1.
  inline std::pair<std::shared_ptr<Subsemigroup const>, Morphism>
  factor_retraction(std::shared_ptr<FreeProduct const> const& f, std::size_t i,
                    std::size_t bound = default_validation_grade) {
    if (!f->monoid()) {
      throw Error("factor retraction requires a monoid free product");
    }
    auto tag = static_cast<std::int64_t>(i);
    auto t   = subsemigroup(
        f,
        [tag](Element const& x) {
          return x.parts.size() <= 1
                 && (x.parts.empty() || x.data[0] == tag);
        },
        "factor " + std::to_string(i + 1) + " of " + f->describe(), bound,
        f->factor(i)->order());
    auto phi = [f, i, tag](Element const& x) {
      Element acc = f->factor_identity(i);
      for (std::size_t k = 0; k < x.parts.size(); ++k) {
        if (x.data[k] == tag) {
          acc = f->factor(i)->multiply(acc, x.parts[k]);
        }
      }
      return f->embed(i, acc);
    };
    return {t, retraction(f, t, phi, bound)};
  }

}  // namespace wrc

#endif  // WRC_CONSTRUCTIONS_HPP_
