//
// wrc - right ideals and right congruences of semigroups
//
// Seeded random finite semigroups and monoids: subsemigroups of full
// transformation monoids generated by random maps, and their duals.
//

#ifndef WRC_RANDOM_HPP_
#define WRC_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cayley_table.hpp"
#include "element.hpp"

namespace wrc {

  namespace detail {

    using Transformation = std::vector<std::uint8_t>;

    // x then y, acting on the right.
    inline Transformation compose(Transformation const& x, Transformation const& y) {
      Transformation out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = y[x[i]];
      }
      return out;
    }

    // The semigroup generated by gens, or nothing once it exceeds cap.
    inline std::optional<CayleyTable> transformation_closure(
        std::vector<Transformation> const& gens, std::size_t cap) {
      std::map<Transformation, std::size_t> index;
      std::vector<Transformation>           elems;
      auto add = [&](Transformation const& t) {
        if (index.emplace(t, elems.size()).second) {
          elems.push_back(t);
        }
      };
      for (auto const& g : gens) {
        add(g);
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto const& g : gens) {
          add(compose(elems[i], g));
          if (elems.size() > cap) {
            return std::nullopt;
          }
        }
      }
      std::size_t                          n = elems.size();
      std::vector<CayleyTable::index_type> t(n * n);
      std::vector<std::string>             names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<CayleyTable::index_type>(
              index.at(compose(elems[i], elems[j])));
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    inline CayleyTable renamed_monoid(CayleyTable const& t) {
      auto e = t.identity();
      if (!e) {
        return t;
      }
      std::vector<std::string> names;
      std::vector<CayleyTable::index_type> tab(t.size() * t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        names.push_back(i == *e ? std::string("1") : t.name(i));
        for (std::size_t j = 0; j < t.size(); ++j) {
          tab[i * t.size() + j] = t.product(i, j);
        }
      }
      return CayleyTable(t.size(), std::move(tab), std::move(names));
    }

  }  // namespace detail

  // A random semigroup of order between 1 and max_order, generated by one to
  // three random transformations of at most four points; half of the time
  // the dual is returned.
  inline CayleyTable random_semigroup(std::mt19937& rng, std::size_t max_order) {
    if (max_order == 0) {
      throw Error("random semigroup: the order bound must be positive");
    }
    std::uniform_int_distribution<int> points(1, 4);
    std::uniform_int_distribution<int> ngens(1, 3);
    std::bernoulli_distribution        dual(0.5);
    while (true) {
      auto                                m = static_cast<std::size_t>(points(rng));
      std::uniform_int_distribution<int>  image(0, static_cast<int>(m) - 1);
      std::vector<detail::Transformation> gens(static_cast<std::size_t>(ngens(rng)),
                                               detail::Transformation(m));
      for (auto& g : gens) {
        for (auto& x : g) {
          x = static_cast<std::uint8_t>(image(rng));
        }
      }
      if (auto t = detail::transformation_closure(gens, max_order)) {
        return dual(rng) ? t->transpose() : *t;
      }
    }
  }

  // A random monoid of order at most max_order: a random semigroup that is
  // a monoid, or has an identity adjoined when there is room.  The identity
  // is named 1.
  inline CayleyTable random_monoid(std::mt19937& rng, std::size_t max_order) {
    if (max_order == 0) {
      throw Error("random monoid: the order bound must be positive");
    }
    while (true) {
      auto t = random_semigroup(rng, max_order);
      if (t.identity()) {
        return detail::renamed_monoid(t);
      }
      if (t.size() < max_order) {
        return detail::renamed_monoid(tables::adjoin_identity(t));
      }
    }
  }

}  // namespace wrc

#endif  // WRC_RANDOM_HPP_
