#pragma once
// Reference computations written directly from the tuple, without going
// through the library's diagram layout or tracer.

#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// endpoints: bottom position i -> i, top position j -> p + j
struct Curve {
    int p = 0;
    std::vector<int> mate;  // endpoint -> other endpoint of its arc
    int cycles = 0;
    int hw = 0, vw = 0;  // homology class (horizontal, vertical)
    // per rainbow arc (keyed by its smaller endpoint): +1 left to right
    std::map<int, int> rainbowDir;
};

inline Curve follow(int p, int q, int r, int s) {
    Curve c;
    c.p = p;
    c.mate.assign(2 * p, -1);
    auto link = [&](int a, int b) { c.mate[a] = b, c.mate[b] = a; };
    for (int k = 1; k <= q; ++k) {
        link(q - k, q + k - 1);
        link(p + r + q - k, p + r + q + k - 1);
    }
    std::vector<int> tops;
    for (int j = 0; j < p; ++j)
        if (j < r || j >= r + 2 * q) tops.push_back(j);
    for (int i = 2 * q; i < p; ++i) link(i, p + tops[i - 2 * q]);

    // walk every cycle; crossing the top edge at j lands on bottom (j+s) mod p
    std::vector<bool> seen(2 * p, false);
    long dx = 0, dy = 0;
    for (int start = 0; start < p; ++start) {
        if (seen[start]) continue;
        ++c.cycles;
        int e = start;
        while (!seen[e]) {
            seen[e] = true;
            int f = c.mate[e];
            seen[f] = true;
            bool fTop = f >= p, eTop = e >= p;
            int ex = eTop ? e - p : e, fx = f - (fTop ? p : 0);
            if (c.cycles == 1 && eTop == fTop) c.rainbowDir[std::min(e, f)] = fx > ex ? 1 : -1;
            if (fTop) {
                int b = (fx + s) % p;
                // the square above is shifted so that its bottom b sits over our top fx
                if (c.cycles == 1) dx += fx - b, dy += 1;
                e = b;
            } else {
                // arrived at the bottom edge: drop into the square below through its top
                int t = ((fx - s) % p + p) % p;
                if (c.cycles == 1) dx += fx - t, dy -= 1;
                e = p + t;
            }
        }
    }
    // start and end share local coordinates, so the displacement is the total
    // shift of the squares, a vector of the lattice spanned by (p, 0) and (-s, 1)
    c.vw = int(dy);
    c.hw = int((dx + long(s) * dy) / p);
    return c;
}

inline bool connected(int p, int q, int r, int s) { return follow(p, q, r, s).cycles == 1; }

// Tuple is valid iff beta is one primitive, non-horizontal curve.
inline bool valid(int p, int q, int r, int s) {
    if (p < 1 || q < 0 || 2 * q > p || r < 0 || r > p - 2 * q || s < 0 || s >= p) return false;
    auto c = follow(p, q, r, s);
    return c.cycles == 1 && c.vw != 0 && std::gcd(c.hw, c.vw) == 1;
}

// Coherent iff no two rainbow arcs of the same nest run in opposite
// directions, checked pair by pair.
inline bool coherent(int p, int q, int r, int s) {
    auto c = follow(p, q, r, s);
    std::vector<int> bottom, top;
    for (auto [e, dir] : c.rainbowDir) (e < p ? bottom : top).push_back(dir);
    for (auto* nest : {&bottom, &top})
        for (size_t i = 0; i < nest->size(); ++i)
            for (size_t j = i + 1; j < nest->size(); ++j)
                if ((*nest)[i] != (*nest)[j]) return false;
    return true;
}

// |H_1| of the Heegaard-split manifold is |alpha . beta| = |vw|
inline int homology_order(int p, int q, int r, int s) { return std::abs(follow(p, q, r, s).vw); }

// number of components of a graph on n vertices
inline int components(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    int k = n;
    for (auto [a, b] : edges)
        if (find(a) != find(b)) par[find(a)] = find(b), --k;
    return k;
}

}  // namespace oracle
