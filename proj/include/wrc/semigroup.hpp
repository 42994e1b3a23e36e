//
// wrc - right ideals and right congruences of semigroups
//
// The interface every backend and construction implements, together with the
// small set of generic operations (product, canonical forms, graded
// enumeration, tabulation) that the rest of the library is written against.
//

#ifndef WRC_SEMIGROUP_HPP_
#define WRC_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cayley_table.hpp"
#include "element.hpp"

namespace wrc {

  class Semigroup {
   public:
    virtual ~Semigroup() = default;

    // A construction-language description, e.g. "adjoin1(left_zero(3))".
    virtual std::string describe() const = 0;

    virtual bool    contains(Element const& x) const                   = 0;
    virtual Element multiply(Element const& x, Element const& y) const = 0;

    // Reduce a possibly unreduced representation; identity on backends
    // whose representations are always canonical.
    virtual Element canonical(Element const& x) const {
      return x;
    }

    // nullopt means infinite.
    virtual std::optional<std::size_t> order() const = 0;

    virtual std::optional<Element> identity() const {
      return std::nullopt;
    }
    virtual std::optional<Element> zero() const {
      return std::nullopt;
    }

    virtual std::size_t grade(Element const& x) const = 0;

    // Every element of grade <= bound exactly once, in a fixed order.
    virtual std::vector<Element> enumerate(std::size_t bound) const = 0;

    virtual std::string format(Element const& x) const = 0;
    virtual Element     parse(std::string_view text) const = 0;

    // All c in S (not S^1) with pc = u, when the backend can list them.
    // The default lists them exhaustively on finite semigroups.
    virtual std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const {
      if (!is_finite()) {
        return std::nullopt;
      }
      std::vector<Element> out;
      for (auto const& c : elements()) {
        if (multiply(p, c) == u) {
          out.push_back(c);
        }
      }
      return out;
    }

    // Closed-form answers used by infinite backends; "unknown" means the
    // caller must fall back to search.
    virtual Tri left_cancellative(Element const&) const {
      return Tri::unknown;
    }
    virtual Tri right_factorisable(Element const&) const {
      return Tri::unknown;
    }

    // Minimal finite U with S = US^1 when known in closed form.
    virtual std::optional<std::vector<Element>> right_ideal_basis() const {
      return std::nullopt;
    }

    // True when every element of grade > g has a left factor of grade
    // exactly g (free backends).  Lets ideals with all grade-g elements be
    // recognised as co-finite.
    virtual bool grade_prefix_closed() const {
      return false;
    }

    bool is_finite() const {
      return order().has_value();
    }

    bool is_monoid() const {
      return identity().has_value();
    }

    virtual std::vector<Element> elements() const {
      auto n = order();
      if (!n) {
        throw Error(describe() + ": cannot list the elements of an infinite "
                    + "semigroup");
      }
      std::vector<Element> out;
      for (std::size_t g = 0;; ++g) {
        out = enumerate(g);
        if (out.size() >= *n) {
          return out;
        }
        if (g > 64 + *n) {
          throw Error(describe() + ": enumeration did not reach the order");
        }
      }
    }
  };

  using SemigroupPtr = std::shared_ptr<Semigroup const>;

  ////////////////////////////////////////////////////////////////////////
  // Generic operations
  ////////////////////////////////////////////////////////////////////////

  inline Element product(Semigroup const& s, Element const& x,
                         Element const& y) {
    if (!s.contains(x) || !s.contains(y)) {
      throw Error("product: operand does not belong to " + s.describe());
    }
    return s.multiply(x, y);
  }

  // x * c where c == nullopt stands for the adjoined identity of S^1.
  inline Element act(Semigroup const& s, Element const& x,
                     std::optional<Element> const& c) {
    return c ? s.multiply(x, *c) : x;
  }

  inline Element canonical(Semigroup const& s, Element const& x) {
    return s.canonical(x);
  }

  inline std::vector<Element> enumerate(Semigroup const& s,
                                        std::size_t      bound) {
    return s.enumerate(bound);
  }

  inline std::string format_elements(Semigroup const&            s,
                                     std::vector<Element> const& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i == 0 ? "" : ", ") + s.format(xs[i]);
    }
    return out + "}";
  }

  // First triple of enumerated elements (all elements of a finite
  // semigroup) violating associativity.
  inline std::optional<std::array<Element, 3>>
  associativity_failure(Semigroup const& s, std::size_t bound) {
    auto xs = s.is_finite() ? s.elements() : s.enumerate(bound);
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        auto xy = s.multiply(x, y);
        for (auto const& z : xs) {
          if (s.multiply(xy, z) != s.multiply(x, s.multiply(y, z))) {
            return std::array<Element, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  // Checks the identity and zero laws on all tested elements.
  inline bool identity_zero_laws_hold(Semigroup const& s, std::size_t bound) {
    auto xs = s.is_finite() ? s.elements() : s.enumerate(bound);
    auto e  = s.identity();
    auto z  = s.zero();
    for (auto const& x : xs) {
      if (e && (s.multiply(*e, x) != x || s.multiply(x, *e) != x)) {
        return false;
      }
      if (z && (s.multiply(*z, x) != *z || s.multiply(x, *z) != *z)) {
        return false;
      }
    }
    return true;
  }

  // The right quotient set {c in S : pc = u}, from the backend hook when
  // available, otherwise by search over elements of grade <= bound.
  struct Quotients {
    std::vector<Element> values;
    Exactness            exactness;
  };

  inline Quotients right_quotients(Semigroup const& s, Element const& p,
                                   Element const& u, std::size_t bound) {
    if (auto q = s.right_quotients(p, u)) {
      return {std::move(*q), Exactness::full()};
    }
    Quotients out{{}, Exactness::up_to(bound)};
    for (auto const& c : s.enumerate(bound)) {
      if (s.multiply(p, c) == u) {
        out.values.push_back(c);
      }
    }
    return out;
  }

  // Is u in pS^1?
  inline Tri in_principal_right_ideal(Semigroup const& s, Element const& p,
                                      Element const& u, std::size_t bound) {
    if (p == u) {
      return Tri::yes;
    }
    auto q = right_quotients(s, p, u, bound);
    if (!q.values.empty()) {
      return Tri::yes;
    }
    return q.exactness.exact ? Tri::no : Tri::unknown;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tabulation
  ////////////////////////////////////////////////////////////////////////

  // A finite semigroup handle converted to a Cayley table, with the maps
  // between table indices and elements.
  struct Tabulation {
    CayleyTable                                           table;
    std::vector<Element>                                  elements;
    std::unordered_map<Element, std::size_t, ElementHash> index;

    std::size_t of(Element const& x) const {
      auto it = index.find(x);
      if (it == index.end()) {
        throw Error("element is not in the tabulated semigroup");
      }
      return it->second;
    }

    Element const& at(std::size_t i) const {
      return elements.at(i);
    }
  };

  inline Tabulation tabulate(Semigroup const& s) {
    Tabulation t;
    t.elements = s.elements();
    std::size_t n = t.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      t.index.emplace(t.elements[i], i);
    }
    if (t.index.size() != n) {
      throw Error(s.describe() + ": enumeration repeated an element");
    }
    std::vector<CayleyTable::index_type> tab(n * n);
    std::vector<std::string>             names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(s.format(t.elements[i]));
      for (std::size_t j = 0; j < n; ++j) {
        tab[i * n + j] = static_cast<CayleyTable::index_type>(
            t.of(s.multiply(t.elements[i], t.elements[j])));
      }
    }
    t.table = CayleyTable(n, std::move(tab), std::move(names));
    return t;
  }

}  // namespace wrc

#endif  // WRC_SEMIGROUP_HPP_
