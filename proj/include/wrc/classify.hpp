//
// wrc - right ideals and right congruences of semigroups
//
// Per-element classification (left cancellative, aS = {a^2}, right
// factorisable, regular), minimal right ideal generators U with S = US^1,
// and pairwise right identities.
//

#ifndef WRC_CLASSIFY_HPP_
#define WRC_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "constructions.hpp"
#include "element.hpp"
#include "semigroup.hpp"

namespace wrc {

  struct Classification {
    Tri                    left_cancellative     = Tri::unknown;
    Tri                    singleton_right_ideal = Tri::unknown;
    Tri                    right_factorisable    = Tri::unknown;
    std::optional<Element> regular_partner;
    Exactness              exactness;
  };

  inline Classification classify_element(Semigroup const& s, Element const& a,
                                         std::size_t bound) {
    Classification out;
    bool const     finite = s.is_finite();
    auto           xs     = finite ? s.elements() : s.enumerate(bound);
    out.exactness = finite ? Exactness::full() : Exactness::up_to(bound);

    std::vector<Element> ax;
    ax.reserve(xs.size());
    for (auto const& x : xs) {
      ax.push_back(s.multiply(a, x));
    }

    bool collision = false;
    for (std::size_t i = 0; i < xs.size() && !collision; ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (ax[i] == ax[j]) {
          collision = true;
          break;
        }
      }
    }
    if (collision) {
      out.left_cancellative = Tri::no;
    } else if (finite) {
      out.left_cancellative = Tri::yes;
    } else {
      out.left_cancellative = s.left_cancellative(a);
    }

    auto a2        = s.multiply(a, a);
    bool all_equal = true;
    for (auto const& y : ax) {
      if (y != a2) {
        all_equal = false;
        break;
      }
    }
    out.singleton_right_ideal = !all_equal ? Tri::no
                                : finite   ? Tri::yes
                                           : Tri::unknown;

    bool factorisable = false;
    for (auto const& y : ax) {
      if (y == a) {
        factorisable = true;
        break;
      }
    }
    if (factorisable) {
      out.right_factorisable = Tri::yes;
    } else if (finite) {
      out.right_factorisable = Tri::no;
    } else {
      out.right_factorisable = s.right_factorisable(a);
    }

    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (s.multiply(ax[i], a) == a) {
        out.regular_partner = xs[i];
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Right ideal generators of S
  ////////////////////////////////////////////////////////////////////////

  struct RightIdealBasis {
    bool                 found = false;
    std::vector<Element> generators;
    Exactness            exactness;
    // On failure: the number of irreducible elements seen at each grade up
    // to the bound, as evidence of growth.
    std::vector<std::size_t> growth;
  };

  // Minimal U with S = US^1.  Exact on finite semigroups and on backends
  // with a closed form; otherwise the irreducible elements within the bound
  // are reported as growth evidence.
  inline RightIdealBasis right_ideal_generators(Semigroup const& s,
                                                std::size_t      bound) {
    RightIdealBasis out;
    if (s.is_finite()) {
      out.found      = true;
      out.generators = detail::finite_right_ideal_basis(s);
      out.exactness  = Exactness::full();
      return out;
    }
    if (auto b = s.right_ideal_basis()) {
      out.found      = true;
      out.generators = *b;
      out.exactness  = Exactness::full();
      return out;
    }
    out.exactness = Exactness::up_to(bound);
    auto xs       = s.enumerate(bound);
    for (std::size_t g = 0; g <= bound; ++g) {
      std::size_t k = 0;
      for (auto const& u : xs) {
        if (s.grade(u) > g) {
          continue;
        }
        bool reducible = false;
        for (auto const& v : xs) {
          if (v == u || s.grade(v) > g) {
            continue;
          }
          if (in_principal_right_ideal(s, v, u, bound) == Tri::yes) {
            reducible = true;
            break;
          }
        }
        if (!reducible) {
          ++k;
          if (g == bound) {
            out.generators.push_back(u);
          }
        }
      }
      out.growth.push_back(k);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pairwise right identities
  ////////////////////////////////////////////////////////////////////////

  // For each pair a, b some s with as = a and bs = b.  Finite only.
  inline bool has_pairwise_right_identities(Semigroup const& s) {
    if (!s.is_finite()) {
      throw Error("pairwise right identities: " + s.describe()
                  + " is infinite (unsupported)");
    }
    auto        t = tabulate(s);
    std::size_t n = t.table.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        bool ok = false;
        for (std::size_t c = 0; c < n && !ok; ++c) {
          ok = t.table.product(a, c) == a && t.table.product(b, c) == b;
        }
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  // Some s in S with as = a and bs = b, or nullopt.
  inline std::optional<Element> common_right_identity(Semigroup const& s,
                                                      Element const&   a,
                                                      Element const&   b) {
    for (auto const& c : s.elements()) {
      if (s.multiply(a, c) == a && s.multiply(b, c) == b) {
        return c;
      }
    }
    return std::nullopt;
  }

}  // namespace wrc

#endif  // WRC_CLASSIFY_HPP_
