//
// wrc - right ideals and right congruences of semigroups
//
// Union-find over the points 0, ..., n - 1 that also keeps every successful
// merge as a labelled edge of a spanning forest.  Reading the forest path
// between two equivalent points back gives an explanation of why they were
// identified.
//

#ifndef WRC_UNION_FIND_HPP_
#define WRC_UNION_FIND_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace wrc {

  template <typename Label>
  class ProofForest {
   public:
    // One edge of a forest path, oriented in the direction of travel.
    // forward is true when the edge was created by unite(from, to, ...).
    struct Hop {
      std::size_t  from;
      std::size_t  to;
      Label const* label;
      bool         forward;
    };

    explicit ProofForest(std::size_t n)
        : _parent(n), _rank(n, 0), _adjacent(n), _classes(n) {
      std::iota(_parent.begin(), _parent.end(), 0);
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes;
    }

    std::size_t find(std::size_t x) const {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    bool same(std::size_t x, std::size_t y) const {
      return find(x) == find(y);
    }

    // Merges the classes of x and y, recording the edge x -- y.  Returns
    // false (and records nothing) if they were already equivalent.
    bool unite(std::size_t x, std::size_t y, Label label) {
      auto rx = find(x);
      auto ry = find(y);
      if (rx == ry) {
        return false;
      }
      if (_rank[rx] < _rank[ry]) {
        std::swap(rx, ry);
      }
      _parent[ry] = rx;
      if (_rank[rx] == _rank[ry]) {
        ++_rank[rx];
      }
      --_classes;
      std::size_t id = _edges.size();
      _edges.push_back({x, y, std::move(label)});
      _adjacent[x].push_back(id);
      _adjacent[y].push_back(id);
      return true;
    }

    // The forest path from x to y, or nullopt if they are not equivalent.
    std::optional<std::vector<Hop>> path(std::size_t x, std::size_t y) const {
      if (!same(x, y)) {
        return std::nullopt;
      }
      std::vector<std::size_t> via(size(), npos);
      std::vector<std::size_t> stack{x};
      std::vector<bool>        seen(size(), false);
      seen[x] = true;
      while (!stack.empty() && !seen[y]) {
        auto u = stack.back();
        stack.pop_back();
        for (auto id : _adjacent[u]) {
          auto const& e = _edges[id];
          auto        v = e.x == u ? e.y : e.x;
          if (!seen[v]) {
            seen[v] = true;
            via[v]  = id;
            stack.push_back(v);
          }
        }
      }
      std::vector<Hop> out;
      for (auto v = y; v != x;) {
        auto const& e    = _edges[via[v]];
        bool        fwd  = e.y == v;
        auto        from = fwd ? e.x : e.y;
        out.push_back({from, v, &e.label, fwd});
        v = from;
      }
      return std::vector<Hop>(out.rbegin(), out.rend());
    }

    // Class labels numbered 0, 1, ... in order of first occurrence.
    std::vector<std::size_t> classes() const {
      std::vector<std::size_t> out(size(), npos);
      std::vector<std::size_t> label(size(), npos);
      std::size_t              next = 0;
      for (std::size_t x = 0; x < size(); ++x) {
        auto r = find(x);
        if (label[r] == npos) {
          label[r] = next++;
        }
        out[x] = label[r];
      }
      return out;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

   private:
    struct Edge {
      std::size_t x;
      std::size_t y;
      Label       label;
    };

    mutable std::vector<std::size_t> _parent;
    std::vector<std::uint32_t>       _rank;
    std::vector<std::vector<std::size_t>> _adjacent;
    std::vector<Edge>                _edges;
    std::size_t                      _classes;
  };

}  // namespace wrc

#endif  // WRC_UNION_FIND_HPP_
