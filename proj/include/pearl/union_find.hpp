#pragma once
#include <numeric>
#include <vector>

namespace pearl {

class UnionFind {
public:
    explicit UnionFind(int n = 0) { reset(n); }
    void reset(int n) {
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), 0);
        comps_ = n;
    }
    int add() {
        parent_.push_back(int(parent_.size()));
        ++comps_;
        return int(parent_.size()) - 1;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        --comps_;
        return true;
    }
    int count() const { return comps_; }
    int size() const { return int(parent_.size()); }

private:
    std::vector<int> parent_;
    int comps_ = 0;
};

}  // namespace pearl
