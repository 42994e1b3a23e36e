//
// wrc - right ideals and right congruences of semigroups
//
// Elements of every backend share one value type.  The payload layout depends
// on the kind:
//
//   index   data = {i}                 element i of a Cayley table
//   word    data = letters             free (monoid|semigroup) word
//   vec     data = exponents           free commutative element
//   blocks  data = factor tags,        free product element, one part per
//           parts = block elements     block; empty = identity of a monoid
//                                      free product
//   one                                adjoined identity
//   zero                               adjoined zero (also the Rees zero)
//   pair    parts = {x, y}             direct product element
//   tagged  data = {sort, payload...}  symbolic fixture element
//

#ifndef WRC_ELEMENT_HPP_
#define WRC_ELEMENT_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrc {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class Tri : std::uint8_t { no, yes, unknown };

  inline char const* to_string(Tri t) noexcept {
    switch (t) {
      case Tri::yes: return "yes";
      case Tri::no: return "no";
      default: return "unknown";
    }
  }

  inline Tri tri(bool b) noexcept {
    return b ? Tri::yes : Tri::no;
  }

  // Whether a result was established over the whole object or only up to a
  // grade bound.  Bounded results always carry the bound that produced them.
  struct Exactness {
    bool        exact = true;
    std::size_t bound = 0;

    static Exactness full() {
      return {true, 0};
    }
    static Exactness up_to(std::size_t g) {
      return {false, g};
    }
    std::string str() const {
      return exact ? "exact" : "bounded(" + std::to_string(bound) + ")";
    }
    Exactness& operator&=(Exactness const& other) {
      if (!other.exact) {
        bound = exact ? other.bound : std::max(bound, other.bound);
        exact = false;
      }
      return *this;
    }
  };

  enum class Kind : std::uint8_t {
    index,
    word,
    vec,
    blocks,
    one,
    zero,
    pair,
    tagged
  };

  class Element {
   public:
    Kind                      kind = Kind::index;
    std::vector<std::int64_t> data;
    std::vector<Element>      parts;

    Element() = default;
    Element(Kind k, std::vector<std::int64_t> d, std::vector<Element> p = {})
        : kind(k), data(std::move(d)), parts(std::move(p)) {}

    static Element index(std::size_t i) {
      return Element(Kind::index, {static_cast<std::int64_t>(i)});
    }
    static Element word(std::vector<std::int64_t> letters) {
      return Element(Kind::word, std::move(letters));
    }
    static Element vec(std::vector<std::int64_t> exps) {
      return Element(Kind::vec, std::move(exps));
    }
    static Element one() {
      return Element(Kind::one, {});
    }
    static Element zero() {
      return Element(Kind::zero, {});
    }
    static Element pair(Element x, Element y) {
      return Element(Kind::pair, {}, {std::move(x), std::move(y)});
    }
    static Element blocks(std::vector<std::int64_t> tags,
                          std::vector<Element>      elems) {
      return Element(Kind::blocks, std::move(tags), std::move(elems));
    }
    static Element tagged(std::int64_t              sort,
                          std::vector<std::int64_t> payload = {}) {
      payload.insert(payload.begin(), sort);
      return Element(Kind::tagged, std::move(payload));
    }

    std::size_t idx() const {
      return static_cast<std::size_t>(data.at(0));
    }
    std::int64_t sort() const {
      return data.at(0);
    }
    std::size_t num_blocks() const {
      return parts.size();
    }

    bool operator==(Element const&) const = default;
    std::strong_ordering operator<=>(Element const& other) const {
      if (auto c = kind <=> other.kind; c != 0) {
        return c;
      }
      if (auto c = data <=> other.data; c != 0) {
        return c;
      }
      std::size_t n = std::min(parts.size(), other.parts.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = parts[i] <=> other.parts[i]; c != 0) {
          return c;
        }
      }
      return parts.size() <=> other.parts.size();
    }
  };

  struct ElementHash {
    std::size_t operator()(Element const& x) const noexcept {
      std::size_t h = static_cast<std::size_t>(x.kind) * 0x9e3779b97f4a7c15ULL;
      for (auto v : x.data) {
        h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      for (auto const& p : x.parts) {
        h ^= (*this)(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  using ElementPair = std::pair<Element, Element>;

}  // namespace wrc

#endif  // WRC_ELEMENT_HPP_
