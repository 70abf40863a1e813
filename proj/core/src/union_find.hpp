#pragma once

#include <numeric>
#include <vector>

namespace knotpos {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int a) {
        while (parent_[static_cast<std::size_t>(a)] != a) {
            auto& p = parent_[static_cast<std::size_t>(a)];
            p = parent_[static_cast<std::size_t>(p)];
            a = p;
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        parent_[static_cast<std::size_t>(a)] = b;
        return true;
    }

  private:
    std::vector<int> parent_;
};

} // namespace knotpos
