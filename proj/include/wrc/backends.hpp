//
// wrc - right ideals and right congruences of semigroups
//
// Concrete semigroup backends: Cayley tables, free (monoids|semigroups) on a
// finite alphabet, and free commutative (monoids|semigroups) of finite rank.
//

#ifndef WRC_BACKENDS_HPP_
#define WRC_BACKENDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley_table.hpp"
#include "element.hpp"
#include "semigroup.hpp"
#include "text.hpp"

namespace wrc {

  ////////////////////////////////////////////////////////////////////////
  // TableSemigroup
  ////////////////////////////////////////////////////////////////////////

  class TableSemigroup : public Semigroup {
   public:
    explicit TableSemigroup(CayleyTable table, std::string description = "")
        : _table(std::move(table)),
          _description(std::move(description)),
          _identity(_table.identity()),
          _zero(_table.zero()) {
      if (_description.empty()) {
        _description = "table(<" + std::to_string(_table.size()) + ">)";
      }
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }

    std::string describe() const override {
      return _description;
    }

    bool contains(Element const& x) const override {
      return x.kind == Kind::index && x.data.size() == 1 && x.data[0] >= 0
             && x.idx() < _table.size();
    }

    Element multiply(Element const& x, Element const& y) const override {
      return Element::index(_table.product(x.idx(), y.idx()));
    }

    std::optional<std::size_t> order() const override {
      return _table.size();
    }

    std::optional<Element> identity() const override {
      if (_identity) {
        return Element::index(*_identity);
      }
      return std::nullopt;
    }

    std::optional<Element> zero() const override {
      if (_zero) {
        return Element::index(*_zero);
      }
      return std::nullopt;
    }

    std::size_t grade(Element const&) const override {
      return 0;
    }

    std::vector<Element> enumerate(std::size_t) const override {
      std::vector<Element> out;
      for (std::size_t i = 0; i < _table.size(); ++i) {
        out.push_back(Element::index(i));
      }
      return out;
    }

    std::vector<Element> elements() const override {
      return enumerate(0);
    }

    std::string format(Element const& x) const override {
      return _table.name(x.idx());
    }

    Element parse(std::string_view text) const override {
      auto name = std::string(text::trim(text));
      if (auto i = _table.find(name)) {
        return Element::index(*i);
      }
      throw Error("unknown element '" + name + "' of " + _description);
    }

   private:
    CayleyTable                _table;
    std::string                _description;
    std::optional<std::size_t> _identity;
    std::optional<std::size_t> _zero;
  };

  ////////////////////////////////////////////////////////////////////////
  // FreeWords: free monoid or free semigroup on a finite alphabet
  ////////////////////////////////////////////////////////////////////////

  class FreeWords : public Semigroup {
   public:
    FreeWords(std::string alphabet, bool monoid)
        : _alphabet(std::move(alphabet)), _monoid(monoid) {
      if (_alphabet.empty() && !_monoid) {
        throw Error("free semigroup: the alphabet must be non-empty");
      }
      for (std::size_t i = 0; i < _alphabet.size(); ++i) {
        char c = _alphabet[i];
        if (_alphabet.find(c, i + 1) != std::string::npos) {
          throw Error("free words: repeated letter in alphabet");
        }
        if (c == '1' || c == '*' || c == '@' || c == '(' || c == ')'
            || c == ',' || c == '[' || c == ']' || c == '|' || c == ' '
            || c == '"') {
          throw Error(std::string("free words: reserved character '") + c
                      + "' in alphabet");
        }
      }
    }

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }
    bool monoid() const noexcept {
      return _monoid;
    }
    std::size_t rank() const noexcept {
      return _alphabet.size();
    }

    std::string describe() const override {
      return std::string(_monoid ? "free_monoid" : "free_sgp") + "(\""
             + _alphabet + "\")";
    }

    bool contains(Element const& x) const override {
      if (x.kind != Kind::word || (!_monoid && x.data.empty())) {
        return false;
      }
      for (auto l : x.data) {
        if (l < 0 || static_cast<std::size_t>(l) >= _alphabet.size()) {
          return false;
        }
      }
      return true;
    }

    Element multiply(Element const& x, Element const& y) const override {
      auto w = x.data;
      w.insert(w.end(), y.data.begin(), y.data.end());
      return Element::word(std::move(w));
    }

    std::optional<std::size_t> order() const override {
      if (_alphabet.empty()) {
        return 1;
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      if (_monoid) {
        return Element::word({});
      }
      return std::nullopt;
    }

    std::size_t grade(Element const& x) const override {
      return x.data.size();
    }

    // Shortlex order.
    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      std::vector<Element> layer{Element::word({})};
      if (_monoid) {
        out.push_back(layer.front());
      }
      for (std::size_t len = 1; len <= bound && !_alphabet.empty(); ++len) {
        std::vector<Element> next;
        for (auto const& w : layer) {
          for (std::size_t c = 0; c < _alphabet.size(); ++c) {
            auto d = w.data;
            d.push_back(static_cast<std::int64_t>(c));
            next.push_back(Element::word(std::move(d)));
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }

    std::string format(Element const& x) const override {
      if (x.data.empty()) {
        return "1";
      }
      std::string out;
      for (auto l : x.data) {
        out += _alphabet.at(static_cast<std::size_t>(l));
      }
      return out;
    }

    Element parse(std::string_view s) const override {
      s = text::unquote(s);
      std::vector<std::int64_t> w;
      if (s != "1" && !s.empty()) {
        for (char c : s) {
          auto pos = _alphabet.find(c);
          if (pos == std::string::npos) {
            throw Error(std::string("letter '") + c + "' is not in "
                        + describe());
          }
          w.push_back(static_cast<std::int64_t>(pos));
        }
      }
      auto x = Element::word(std::move(w));
      if (!contains(x)) {
        throw Error("the empty word is not in " + describe());
      }
      return x;
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      std::vector<Element> out;
      if (p.data.size() <= u.data.size()
          && std::equal(p.data.begin(), p.data.end(), u.data.begin())) {
        std::vector<std::int64_t> rest(u.data.begin() + p.data.size(),
                                       u.data.end());
        if (!rest.empty() || _monoid) {
          out.push_back(Element::word(std::move(rest)));
        }
      }
      return out;
    }

    Tri left_cancellative(Element const&) const override {
      return Tri::yes;
    }

    Tri right_factorisable(Element const&) const override {
      return tri(_monoid);
    }

    std::optional<std::vector<Element>> right_ideal_basis() const override {
      if (_monoid) {
        return std::vector<Element>{Element::word({})};
      }
      std::vector<Element> out;
      for (std::size_t c = 0; c < _alphabet.size(); ++c) {
        out.push_back(Element::word({static_cast<std::int64_t>(c)}));
      }
      return out;
    }

    bool grade_prefix_closed() const override {
      return true;
    }

   private:
    std::string _alphabet;
    bool        _monoid;
  };

  ////////////////////////////////////////////////////////////////////////
  // FreeCommutative: N_0^rank (monoid) or N_0^rank \ {0} (semigroup)
  ////////////////////////////////////////////////////////////////////////

  class FreeCommutative : public Semigroup {
   public:
    FreeCommutative(std::size_t rank, bool monoid)
        : _rank(rank), _monoid(monoid) {
      if (rank == 0 && !monoid) {
        throw Error("free commutative semigroup: rank must be positive");
      }
    }

    std::size_t rank() const noexcept {
      return _rank;
    }
    bool monoid() const noexcept {
      return _monoid;
    }

    std::string describe() const override {
      return std::string(_monoid ? "free_comm" : "free_comm_sgp") + "("
             + std::to_string(_rank) + ")";
    }

    bool contains(Element const& x) const override {
      if (x.kind != Kind::vec || x.data.size() != _rank) {
        return false;
      }
      std::int64_t sum = 0;
      for (auto e : x.data) {
        if (e < 0) {
          return false;
        }
        sum += e;
      }
      return _monoid || sum > 0;
    }

    Element multiply(Element const& x, Element const& y) const override {
      auto v = x.data;
      for (std::size_t i = 0; i < _rank; ++i) {
        v[i] += y.data[i];
      }
      return Element::vec(std::move(v));
    }

    std::optional<std::size_t> order() const override {
      if (_rank == 0) {
        return 1;
      }
      return std::nullopt;
    }

    std::optional<Element> identity() const override {
      if (_monoid) {
        return Element::vec(std::vector<std::int64_t>(_rank, 0));
      }
      return std::nullopt;
    }

    std::size_t grade(Element const& x) const override {
      std::size_t g = 0;
      for (auto e : x.data) {
        g += static_cast<std::size_t>(e);
      }
      return g;
    }

    // By total degree, then lexicographically decreasing exponents.
    std::vector<Element> enumerate(std::size_t bound) const override {
      std::vector<Element> out;
      for (std::size_t d = _monoid ? 0 : 1; d <= bound; ++d) {
        std::vector<std::int64_t> v(_rank, 0);
        emit(v, 0, static_cast<std::int64_t>(d), out);
        if (_rank == 0) {
          break;
        }
      }
      return out;
    }

    std::string format(Element const& x) const override {
      std::string out = "[";
      for (std::size_t i = 0; i < x.data.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(x.data[i]);
      }
      return out + "]";
    }

    Element parse(std::string_view s) const override {
      s = text::trim(s);
      if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw Error("expected an exponent vector like [1,0], found '"
                    + std::string(s) + "'");
      }
      std::vector<std::int64_t> v;
      auto inner = text::trim(s.substr(1, s.size() - 2));
      if (!inner.empty()) {
        for (auto part : text::split_top(inner, ',')) {
          v.push_back(text::parse_int(part));
        }
      }
      auto x = Element::vec(std::move(v));
      if (!contains(x)) {
        throw Error("'" + std::string(s) + "' is not an element of "
                    + describe());
      }
      return x;
    }

    std::optional<std::vector<Element>>
    right_quotients(Element const& p, Element const& u) const override {
      std::vector<std::int64_t> d(_rank);
      bool                      nonzero = false;
      for (std::size_t i = 0; i < _rank; ++i) {
        d[i] = u.data[i] - p.data[i];
        if (d[i] < 0) {
          return std::vector<Element>{};
        }
        nonzero = nonzero || d[i] > 0;
      }
      if (!nonzero && !_monoid) {
        return std::vector<Element>{};
      }
      return std::vector<Element>{Element::vec(std::move(d))};
    }

    Tri left_cancellative(Element const&) const override {
      return Tri::yes;
    }

    Tri right_factorisable(Element const&) const override {
      return tri(_monoid);
    }

    std::optional<std::vector<Element>> right_ideal_basis() const override {
      if (_monoid) {
        return std::vector<Element>{*identity()};
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < _rank; ++i) {
        std::vector<std::int64_t> v(_rank, 0);
        v[i] = 1;
        out.push_back(Element::vec(std::move(v)));
      }
      return out;
    }

    bool grade_prefix_closed() const override {
      return true;
    }

   private:
    void emit(std::vector<std::int64_t>& v, std::size_t i, std::int64_t left,
              std::vector<Element>& out) const {
      if (_rank == 0) {
        out.push_back(Element::vec({}));
        return;
      }
      if (i + 1 == _rank) {
        v[i] = left;
        out.push_back(Element::vec(v));
        return;
      }
      for (std::int64_t e = left; e >= 0; --e) {
        v[i] = e;
        emit(v, i + 1, left - e, out);
      }
      v[i] = 0;
    }

    std::size_t _rank;
    bool        _monoid;
  };

  ////////////////////////////////////////////////////////////////////////
  // Factories
  ////////////////////////////////////////////////////////////////////////

  inline SemigroupPtr make_table(CayleyTable t, std::string description = "") {
    return std::make_shared<TableSemigroup>(std::move(t),
                                            std::move(description));
  }

  inline SemigroupPtr free_monoid(std::string alphabet) {
    return std::make_shared<FreeWords>(std::move(alphabet), true);
  }

  inline SemigroupPtr free_semigroup(std::string alphabet) {
    return std::make_shared<FreeWords>(std::move(alphabet), false);
  }

  inline SemigroupPtr free_commutative_monoid(std::size_t rank) {
    return std::make_shared<FreeCommutative>(rank, true);
  }

  inline SemigroupPtr free_commutative_semigroup(std::size_t rank) {
    return std::make_shared<FreeCommutative>(rank, false);
  }

  inline SemigroupPtr null_semigroup(std::size_t n) {
    return make_table(tables::null(n), "null(" + std::to_string(n) + ")");
  }

  inline SemigroupPtr left_zero_semigroup(std::size_t n) {
    return make_table(tables::left_zero(n),
                      "left_zero(" + std::to_string(n) + ")");
  }

}  // namespace wrc

#endif  // WRC_BACKENDS_HPP_
