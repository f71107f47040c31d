#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ualg {

  // Disjoint sets with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), 0);
    }

    std::size_t find(std::size_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns false if x and y were already joined.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      return true;
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::vector<std::size_t> roots() {
      std::vector<std::size_t> result(_parent.size());
      for (std::size_t i = 0; i < result.size(); ++i) {
        result[i] = find(i);
      }
      return result;
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

}  // namespace ualg
