//
// wrc - right ideals and right congruences of semigroups
//
// A finite semigroup given by its multiplication table.  Every exhaustive
// algorithm in the library runs on this representation, with elements as
// indices 0, ..., n - 1.
//

#ifndef WRC_CAYLEY_TABLE_HPP_
#define WRC_CAYLEY_TABLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "element.hpp"

namespace wrc {

  class CayleyTable {
   public:
    using index_type = std::uint32_t;

    CayleyTable() = default;

    CayleyTable(std::size_t n, std::vector<index_type> table,
                std::vector<std::string> names = {})
        : _n(n), _table(std::move(table)), _names(std::move(names)) {
      if (_table.size() != n * n) {
        throw Error("table has " + std::to_string(_table.size())
                    + " entries, expected " + std::to_string(n * n));
      }
      for (auto v : _table) {
        if (v >= n) {
          throw Error("table entry " + std::to_string(v) + " out of range");
        }
      }
      if (_names.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          _names.push_back("e" + std::to_string(i));
        }
      }
      if (_names.size() != n) {
        throw Error("expected " + std::to_string(n) + " element names");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!_index.emplace(_names[i], i).second) {
          throw Error("duplicate element name '" + _names[i] + "'");
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    index_type product(std::size_t i, std::size_t j) const {
      return _table[i * _n + j];
    }

    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<std::size_t> find(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<std::size_t> identity() const {
      for (std::size_t e = 0; e < _n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < _n && ok; ++x) {
          ok = product(e, x) == x && product(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    std::optional<std::size_t> zero() const {
      for (std::size_t z = 0; z < _n; ++z) {
        bool ok = true;
        for (std::size_t x = 0; x < _n && ok; ++x) {
          ok = product(z, x) == z && product(x, z) == z;
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }

    // First triple (x, y, z) in lexicographic order with (xy)z != x(yz).
    std::optional<std::array<std::size_t, 3>> non_associative_triple() const {
      for (std::size_t x = 0; x < _n; ++x) {
        for (std::size_t y = 0; y < _n; ++y) {
          auto xy = product(x, y);
          for (std::size_t z = 0; z < _n; ++z) {
            if (product(xy, z) != product(x, product(y, z))) {
              return std::array<std::size_t, 3>{x, y, z};
            }
          }
        }
      }
      return std::nullopt;
    }

    bool is_associative() const {
      return !non_associative_triple().has_value();
    }

    // The table with rows and columns swapped, i.e. the dual semigroup.
    CayleyTable transpose() const {
      std::vector<index_type> t(_n * _n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          t[i * _n + j] = product(j, i);
        }
      }
      return CayleyTable(_n, std::move(t), _names);
    }

    bool operator==(CayleyTable const& that) const {
      return _n == that._n && _table == that._table;
    }

   private:
    std::size_t                                  _n = 0;
    std::vector<index_type>                      _table;
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // Text format: first the order n, then n element names, then n rows of n
  // names where row i, column j holds the product of element i by element j.
  // Tokens are whitespace separated; lines beginning with '#' are ignored.
  inline CayleyTable read_table(std::istream& in) {
    std::string              tok;
    std::vector<std::string> toks;
    std::string              line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == '#') {
        continue;
      }
      std::istringstream ls(line);
      while (ls >> tok) {
        toks.push_back(tok);
      }
    }
    if (toks.empty()) {
      throw Error("table: empty input");
    }
    std::size_t n = 0;
    try {
      std::size_t pos = 0;
      n               = std::stoul(toks[0], &pos);
      if (pos != toks[0].size()) {
        throw Error("");
      }
    } catch (...) {
      throw Error("table: expected the order on line 1, found '" + toks[0]
                  + "'");
    }
    if (n == 0) {
      throw Error("table: the order must be positive");
    }
    if (toks.size() != 1 + n + n * n) {
      throw Error("table: expected " + std::to_string(1 + n + n * n)
                  + " tokens, found " + std::to_string(toks.size()));
    }
    std::vector<std::string> names(toks.begin() + 1, toks.begin() + 1 + n);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(names[i], i).second) {
        throw Error("table: duplicate element name '" + names[i] + "'");
      }
    }
    std::vector<CayleyTable::index_type> table(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      auto const& t  = toks[1 + n + k];
      auto        it = index.find(t);
      if (it == index.end()) {
        throw Error("table: unknown element '" + t + "' in row "
                    + std::to_string(k / n + 1));
      }
      table[k] = static_cast<CayleyTable::index_type>(it->second);
    }
    CayleyTable result(n, std::move(table), std::move(names));
    if (auto bad = result.non_associative_triple()) {
      auto [x, y, z] = *bad;
      throw Error("table: not associative, (" + result.name(x) + " "
                  + result.name(y) + ") " + result.name(z) + " != "
                  + result.name(x) + " (" + result.name(y) + " "
                  + result.name(z) + ")");
    }
    return result;
  }

  inline CayleyTable read_table(std::string const& text) {
    std::istringstream in(text);
    return read_table(in);
  }

  inline void write_table(std::ostream& out, CayleyTable const& t) {
    out << t.size() << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << (i == 0 ? "" : " ") << t.name(i);
    }
    out << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        out << (j == 0 ? "" : " ") << t.name(t.product(i, j));
      }
      out << '\n';
    }
  }

  // Builders for small standard families.
  namespace tables {

    // Null semigroup of order n: every product is the zero "0".
    inline CayleyTable null(std::size_t n) {
      if (n == 0) {
        throw Error("null semigroup: order must be positive");
      }
      std::vector<std::string> names;
      for (std::size_t i = 1; i < n; ++i) {
        names.push_back("a" + std::to_string(i));
      }
      names.push_back("0");
      std::vector<CayleyTable::index_type> t(
          n * n, static_cast<CayleyTable::index_type>(n - 1));
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Left zero semigroup of order n: xy = x.
    inline CayleyTable left_zero(std::size_t n) {
      if (n == 0) {
        throw Error("left zero semigroup: order must be positive");
      }
      std::vector<std::string>             names;
      std::vector<CayleyTable::index_type> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("l" + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<CayleyTable::index_type>(i);
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Cyclic group of order n, written multiplicatively: names 1, g, g2, ...
    inline CayleyTable cyclic_group(std::size_t n) {
      std::vector<std::string>             names;
      std::vector<CayleyTable::index_type> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<CayleyTable::index_type>((i + j) % n);
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Chain semilattice 1 > z1 > ... > z(n-1) with meet as product.
    inline CayleyTable chain_semilattice(std::size_t n) {
      std::vector<std::string>             names;
      std::vector<CayleyTable::index_type> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1"
                               : (n == 2 ? std::string("z")
                                         : "z" + std::to_string(i)));
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<CayleyTable::index_type>(std::max(i, j));
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Monoid {1} u {x1, ..., x(n-1)} u {0}-free "flat" extension: the
    // non-identity elements form a left zero semigroup.  Order n >= 1.
    inline CayleyTable flat_left_zero_monoid(std::size_t n) {
      std::vector<std::string>             names;
      std::vector<CayleyTable::index_type> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : "f" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          t[i * n + j] = static_cast<CayleyTable::index_type>(i == 0 ? j : i);
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Monoid {1} u N where N is a null semigroup of order n - 1.
    inline CayleyTable flat_null_monoid(std::size_t n) {
      std::vector<std::string>             names;
      std::vector<CayleyTable::index_type> t(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1"
                               : (i == n - 1 ? std::string("0")
                                             : "n" + std::to_string(i)));
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t v = i == 0 ? j : (j == 0 ? i : n - 1);
          t[i * n + j]  = static_cast<CayleyTable::index_type>(v);
        }
      }
      return CayleyTable(n, std::move(t), std::move(names));
    }

    // Direct product with element (i, j) at index i * |T| + j.
    inline CayleyTable direct_product(CayleyTable const& s,
                                      CayleyTable const& t) {
      std::size_t                          m = s.size(), k = t.size();
      std::vector<CayleyTable::index_type> tab(m * k * m * k);
      std::vector<std::string>             names;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          names.push_back("(" + s.name(a) + "," + t.name(b) + ")");
        }
      }
      for (std::size_t x = 0; x < m * k; ++x) {
        for (std::size_t y = 0; y < m * k; ++y) {
          tab[x * m * k + y] = static_cast<CayleyTable::index_type>(
              s.product(x / k, y / k) * k + t.product(x % k, y % k));
        }
      }
      return CayleyTable(m * k, std::move(tab), std::move(names));
    }

    // S with a new identity "1" (index n) if S has none, otherwise S.
    inline CayleyTable adjoin_identity(CayleyTable const& s) {
      if (s.identity()) {
        return s;
      }
      std::size_t                          n = s.size();
      std::vector<CayleyTable::index_type> t((n + 1) * (n + 1));
      auto names = s.names();
      std::string one = "1";
      while (s.find(one)) {
        one += "'";
      }
      names.push_back(one);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
          std::size_t v = i == n ? j : (j == n ? i : s.product(i, j));
          t[i * (n + 1) + j] = static_cast<CayleyTable::index_type>(v);
        }
      }
      return CayleyTable(n + 1, std::move(t), std::move(names));
    }

    // S with a new zero "0" (index n) if S has none, otherwise S.
    inline CayleyTable adjoin_zero(CayleyTable const& s) {
      if (s.zero()) {
        return s;
      }
      std::size_t                          n = s.size();
      std::vector<CayleyTable::index_type> t((n + 1) * (n + 1));
      auto names = s.names();
      std::string zero = "0";
      while (s.find(zero)) {
        zero += "'";
      }
      names.push_back(zero);
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
          std::size_t v = (i == n || j == n) ? n : s.product(i, j);
          t[i * (n + 1) + j] = static_cast<CayleyTable::index_type>(v);
        }
      }
      return CayleyTable(n + 1, std::move(t), std::move(names));
    }

  }  // namespace tables

}  // namespace wrc

#endif  // WRC_CAYLEY_TABLE_HPP_
