#include "pearl/sheet_complex.hpp"

#include <algorithm>

#include "pearl/union_find.hpp"

namespace pearl {

int SheetComplex::side_pos(int c, int e, int dr) const {
    const auto& bd = cells[c].bd;
    for (int i = 0; i < int(bd.size()); ++i)
        if (bd[i].first == e && bd[i].second == dr) return i;
    throw StructuralError("edge not on cell boundary");
}

std::vector<SheetComplex::Link> SheetComplex::links(int e) const {
    auto stack = [&](const std::vector<std::pair<int, int>>& side) {
        std::vector<Sheet> out;
        for (auto [c, dr] : side) {
            int pos = side_pos(c, e, dr);
            for (int k = 0; k < cells[c].m; ++k) out.push_back({c, pos, k});
        }
        return out;
    };
    auto A = stack(edges[e].A), B = stack(edges[e].B);
    std::vector<Link> out;
    size_t ia = 0, ib = 0;
    for (auto [na, nb] : edges[e].links) {
        if (ia + na > A.size() || ib + nb > B.size()) throw StructuralError("links overrun sheet stack");
        out.push_back({{A.begin() + ia, A.begin() + ia + na}, {B.begin() + ib, B.begin() + ib + nb}});
        ia += na;
        ib += nb;
    }
    if (ia != A.size() || ib != B.size()) throw StructuralError("links do not cover sheet stack");
    return out;
}

int SheetComplex::corner(int c, int pos, int end) const {
    int dr = cells[c].bd[pos].second, n = int(cells[c].bd.size());
    return (dr == 1) == (end == 1) ? pos : (pos - 1 + n) % n;
}

void SheetComplex::check() const {
    for (int c = 0; c < int(cells.size()); ++c) {
        const auto& bd = cells[c].bd;
        for (size_t k = 0; k < bd.size(); ++k) {
            auto [e1, d1] = bd[k];
            auto [e2, d2] = bd[(k + 1) % bd.size()];
            int v1 = edges[e1].v[d1 == 1 ? 1 : 0], v2 = edges[e2].v[d2 == 1 ? 0 : 1];
            if (v1 != v2) throw StructuralError("cell boundary not closed");
        }
    }
    for (int e = 0; e < int(edges.size()); ++e)
        for (auto* side : {&edges[e].A, &edges[e].B})
            for (auto [c, dr] : *side) side_pos(c, e, dr);
}

SheetComplex::Sectors SheetComplex::sectors() const {
    Sectors S;
    int n = 0;
    for (auto& c : cells) {
        S.base.push_back(n);
        n += c.m;
    }
    UnionFind uf(n);
    for (int e = 0; e < int(edges.size()); ++e)
        for (auto& l : links(e))
            if (l.a.size() == 1 && l.b.size() == 1)
                uf.unite(S.base[l.a[0].cell] + l.a[0].k, S.base[l.b[0].cell] + l.b[0].k);
    S.root.resize(n);
    for (int i = 0; i < n; ++i) S.root[i] = uf.find(i);
    return S;
}

std::vector<std::vector<std::pair<int, int>>> SheetComplex::sinks() const {
    auto S = sectors();
    const int n = int(S.root.size());
    auto sid = [&](const Sheet& x) { return S.base[x.cell] + x.k; };
    // corners of every sheet, glued across (1,1) links
    std::vector<int> cbase;
    int nc = 0;
    for (auto& c : cells) {
        cbase.push_back(nc);
        nc += int(c.bd.size()) * c.m;
    }
    auto cid = [&](const Sheet& x, int end) {
        return cbase[x.cell] + corner(x.cell, x.pos, end) * cells[x.cell].m + x.k;
    };
    UnionFind cu(nc);
    std::vector<int> E(n, 0), F(n, 0), V(n, 0);
    std::vector<bool> bad(n, false), punct(n, false);
    for (int e = 0; e < int(edges.size()); ++e)
        for (auto& l : links(e)) {
            if (l.a.size() == 1 && l.b.size() == 1) {
                E[S.root[sid(l.a[0])]] += 1;
                for (int end : {0, 1}) cu.unite(cid(l.a[0], end), cid(l.b[0], end));
            } else {
                const auto& h = l.a.size() == 1 ? l.a : l.b;
                const auto& pr = l.a.size() == 1 ? l.b : l.a;
                E[S.root[sid(h[0])]] += 1;
                for (auto& x : pr) {
                    E[S.root[sid(x)]] += 1;
                    bad[S.root[sid(x)]] = true;
                }
            }
        }
    std::vector<std::vector<int>> rootsOf(n);
    for (int c = 0; c < int(cells.size()); ++c)
        for (int k = 0; k < cells[c].m; ++k) {
            int r = S.root[S.base[c] + k];
            F[r] += 1;
            if (cells[c].punct) punct[r] = true;
            for (int i = 0; i < int(cells[c].bd.size()); ++i)
                rootsOf[r].push_back(cu.find(cbase[c] + i * cells[c].m + k));
        }
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int r = 0; r < n; ++r) {
        if (S.root[r] != r || punct[r] || bad[r]) continue;
        auto& vs = rootsOf[r];
        std::sort(vs.begin(), vs.end());
        V[r] = int(std::unique(vs.begin(), vs.end()) - vs.begin());
        if (V[r] - E[r] + F[r] != 1) continue;
        std::vector<std::pair<int, int>> mem;
        for (int c = 0; c < int(cells.size()); ++c)
            for (int k = 0; k < cells[c].m; ++k)
                if (S.root[S.base[c] + k] == r) mem.push_back({c, k});
        out.push_back(mem);
    }
    return out;
}

SheetComplex::HSummary SheetComplex::horizontal_summary() const {
    std::vector<int> base, cbase;
    int ns = 0, nc = 0;
    for (auto& c : cells) {
        base.push_back(ns);
        cbase.push_back(nc);
        ns += c.m;
        nc += int(c.bd.size()) * c.m * 2;
    }
    auto bit = [](int sg) { return sg == 1 ? 0 : 1; };
    auto ss = [&](const Sheet& x, int sg) { return 2 * (base[x.cell] + x.k) + bit(sg); };
    auto cs = [&](const Sheet& x, int sg, int end) {
        return cbase[x.cell] + (corner(x.cell, x.pos, end) * cells[x.cell].m + x.k) * 2 + bit(sg);
    };
    UnionFind fu(2 * ns), cu(nc);
    std::vector<int> ecls;
    struct Cusp {
        Sheet hi, lo;
    };
    std::vector<Cusp> cusps;
    auto glue = [&](const Sheet& x, const Sheet& y, int sx, int sy) {
        fu.unite(ss(x, sx), ss(y, sy));
        ecls.push_back(ss(x, sx));
        for (int end : {0, 1}) cu.unite(cs(x, sx, end), cs(y, sy, end));
    };
    for (int e = 0; e < int(edges.size()); ++e)
        for (auto& l : links(e)) {
            if (l.a.size() == 1 && l.b.size() == 1) {
                glue(l.a[0], l.b[0], 1, 1);
                glue(l.a[0], l.b[0], -1, -1);
            } else {
                const Sheet& h = l.a.size() == 1 ? l.a[0] : l.b[0];
                const auto& pr = l.a.size() == 1 ? l.b : l.a;
                const Sheet &lo = pr[0], &hi = pr[1];
                glue(h, hi, 1, 1);
                glue(h, lo, -1, -1);
                ecls.push_back(ss(hi, -1));
                ecls.push_back(ss(lo, 1));
                cusps.push_back({hi, lo});
            }
        }
    std::map<int, int> chi;
    for (int c = 0; c < int(cells.size()); ++c)
        for (int k = 0; k < cells[c].m; ++k)
            for (int b = 0; b < 2; ++b) chi[fu.find(2 * (base[c] + k) + b)] += cells[c].punct ? 0 : 1;
    for (int x : ecls) chi[fu.find(x)] -= 1;
    std::vector<bool> vseen(nc, false);
    for (int c = 0; c < int(cells.size()); ++c)
        for (int i = 0; i < int(cells[c].bd.size()); ++i)
            for (int k = 0; k < cells[c].m; ++k)
                for (int b = 0; b < 2; ++b) {
                    int r = cu.find(cbase[c] + (i * cells[c].m + k) * 2 + b);
                    if (vseen[r]) continue;
                    vseen[r] = true;
                    chi[fu.find(2 * (base[c] + k) + b)] += 1;
                }

    // cusp lines: each cusp edge has two boundary lines (hi-, lo+), which
    // continue through corners to the next cusp edge
    struct End {
        int ci, li, end;
        bool operator==(const End&) const = default;
    };
    auto zs = [&](int ci, int li) { return li == 0 ? std::pair{cusps[ci].hi, -1} : std::pair{cusps[ci].lo, 1}; };
    std::map<int, std::vector<End>> at;
    for (int ci = 0; ci < int(cusps.size()); ++ci)
        for (int li = 0; li < 2; ++li)
            for (int end = 0; end < 2; ++end) {
                auto [z, sg] = zs(ci, li);
                at[cu.find(cs(z, sg, end))].push_back({ci, li, end});
            }
    for (auto& [r, l] : at)
        if (l.size() != 2) throw StructuralError("cusp corner path without two ends");
    auto nxt = [&](End cur) {
        auto [z, sg] = zs(cur.ci, cur.li);
        auto& l = at[cu.find(cs(z, sg, cur.end))];
        End o = l[0] == cur ? l[1] : l[0];
        return End{o.ci, o.li, 1 - o.end};
    };
    std::set<std::pair<int, int>> seen;
    std::map<int, int> lineCount;
    UnionFind cuf(int(cusps.size()));
    for (int ci = 0; ci < int(cusps.size()); ++ci)
        for (int li = 0; li < 2; ++li) {
            if (seen.count({ci, li})) continue;
            End cur{ci, li, 1};
            while (!seen.count({cur.ci, cur.li})) {
                seen.insert({cur.ci, cur.li});
                cuf.unite(cur.ci, ci);
                cur = nxt(cur);
            }
            auto [z, sg] = zs(ci, li);
            lineCount[fu.find(ss(z, sg))] += 1;
        }
    HSummary H;
    std::set<int> circ;
    for (int ci = 0; ci < int(cusps.size()); ++ci) circ.insert(cuf.find(ci));
    H.cuspCircles = int(circ.size());
    for (auto& [r, x] : chi) H.comps.push_back({x, lineCount[r]});
    std::sort(H.comps.begin(), H.comps.end());
    return H;
}

SheetComplex sheet_form(const BranchedSurface& b) {
    const Diagram& d = b.diagram();
    const int p = d.p();
    SheetComplex E;
    E.cells.resize(p + 2);
    for (int f = 0; f < p; ++f) {
        auto& c = E.cells[f];
        for (auto& st : b.regions()[f]) {
            if (st.seg < p)
                c.bd.push_back({st.seg, 1});
            else
                c.bd.push_back({d.glue[st.seg - p], -1});
            auto dir = b.beta_dir(st.arc);
            c.bd.push_back({p + st.arc, dir.first == st.in ? 1 : -1});
        }
        c.punct = d.t.q >= 1 && (f == b.zf() || f == b.wf());
        c.parent = f;
    }
    for (int i = 0; i < p; ++i) E.cells[p].bd.push_back({i, 1});
    std::vector<int> order = d.order;
    if (b.beta_sign() == -1) std::reverse(order.begin(), order.end());
    for (int i : order) E.cells[p + 1].bd.push_back({p + i, 1});
    E.cells[p].parent = p;
    E.cells[p + 1].parent = p + 1;

    E.edges.resize(p + d.arcs.size());
    for (int i = 0; i < p; ++i) E.edges[i].v = {i, (i + 1) % p};
    for (int i = 0; i < int(d.arcs.size()); ++i) {
        auto dir = b.beta_dir(i);
        E.edges[p + i].v = {d.alpha_point(dir.first), d.alpha_point(dir.second)};
    }
    std::vector<std::vector<std::pair<int, int>>> occ(E.edges.size());
    for (int c = 0; c < p + 2; ++c)
        for (auto [e, dr] : E.cells[c].bd) occ[e].push_back({c, dr});
    for (int e = 0; e < int(E.edges.size()); ++e) {
        std::pair<int, int> L{-1, 0}, R{-1, 0}, Dk{-1, 0};
        int nl = 0, nr = 0, nd = 0;
        for (auto o : occ[e]) {
            if (o.first >= p) {
                Dk = o;
                ++nd;
            } else if (o.second == 1) {
                L = o;
                ++nl;
            } else {
                R = o;
                ++nr;
            }
        }
        if (nl != 1 || nr != 1 || nd != 1) throw StructuralError("edge without three sheets");
        Merge m = b.merge_edge(e);
        std::pair<int, int> h, lo, up;
        if (e < p) {
            if (m == Merge::Left) h = L, lo = Dk, up = R;
            else if (m == Merge::Right) h = R, lo = L, up = Dk;
            else h = Dk, lo = L, up = R;
        } else {
            if (m == Merge::Left) h = L, lo = R, up = Dk;
            else if (m == Merge::Right) h = R, lo = Dk, up = L;
            else h = Dk, lo = R, up = L;
        }
        E.edges[e].A = {h};
        E.edges[e].B = {lo, up};
        E.edges[e].links = {{1, 2}};
        E.edges[e].parent = e;
    }
    E.check();
    return E;
}

namespace {
// dense ids for tuple-shaped keys
struct Ids {
    std::map<std::array<int, 6>, int> m;
    int next = 0;
    int get(std::array<int, 6> k, bool* fresh = nullptr) {
        auto [it, ins] = m.emplace(k, next);
        if (ins) ++next;
        if (fresh) *fresh = ins;
        return it->second;
    }
};
}  // namespace

SheetComplex refine(const SheetComplex& E, int L) {
    SheetComplex R;
    R.layers = L;
    int nv = 0;
    for (auto& e : E.edges) nv = std::max({nv, e.v[0] + 1, e.v[1] + 1});
    Ids vid, eid, cid;
    vid.next = nv;
    enum { kPiece, kI, kJ, kM };
    enum { kN, kK, kC };
    enum { vE, vG };
    auto edge_id = [&](std::array<int, 6> k) {
        bool fresh;
        int id = eid.get(k, &fresh);
        if (fresh) R.edges.emplace_back();
        return id;
    };
    for (int e = 0; e < int(E.edges.size()); ++e) {
        std::vector<int> pts{E.edges[e].v[0]};
        for (int q = 1; q <= 2 * L; ++q) pts.push_back(vid.get({vE, e, q, 0, 0, 0}));
        pts.push_back(E.edges[e].v[1]);
        for (int j = 0; j <= 2 * L; ++j) {
            int id = edge_id({kPiece, e, j, 0, 0, 0});
            R.edges[id].v = {pts[j], pts[j + 1]};
            R.edges[id].links = E.edges[e].links;
            R.edges[id].parent = e;
            R.edges[id].piece = j;
        }
    }
    // (piece edge, direction, parent cell) -> refined cell
    std::map<std::array<int, 3>, int> occupant;
    for (int c = 0; c < int(E.cells.size()); ++c) {
        const auto& bd = E.cells[c].bd;
        const int n = int(bd.size()), m = E.cells[c].m;
        auto mod = [n](int k) { return ((k % n) + n) % n; };
        auto tpt = [&](int k, int tp) {
            auto [e, dr] = bd[mod(k)];
            int q = dr == 1 ? tp : 2 * L + 1 - tp;
            if (q == 0) return E.edges[e].v[0];
            if (q == 2 * L + 1) return E.edges[e].v[1];
            return vid.get({vE, e, q, 0, 0, 0});
        };
        auto G = [&](int k, int i, int j) {
            k = mod(k);
            if (i == 0) return tpt(k, 2 * L - j + 1);
            if (j == 0) return tpt(k + 1, i);
            return vid.get({vG, c, k, i, j, 0});
        };
        using DE = std::pair<int, int>;
        auto piece = [&](int k, int t) -> DE {
            auto [e, dr] = bd[mod(k)];
            return {eid.get({kPiece, e, dr == 1 ? t : 2 * L - t, 0, 0, 0}), dr};
        };
        auto rev = [](DE x) { return DE{x.first, -x.second}; };
        auto I = [&](int k, int i, int j) -> DE {
            k = mod(k);
            if (i == 0) return rev(piece(k, 2 * L - j));
            return {edge_id({kI, c, k, i, j, 0}), 1};
        };
        auto J = [&](int k, int i, int j) -> DE {
            k = mod(k);
            if (j == 0) return piece(k + 1, i);
            return {edge_id({kJ, c, k, i, j, 0}), 1};
        };
        auto M = [&](int k, int i) -> DE {
            k = mod(k);
            if (i == 0) return piece(k, L);
            return {edge_id({kM, c, k, i, 0, 0}), 1};
        };
        auto add_cell = [&](std::array<int, 6> key, std::vector<DE> b, std::vector<std::pair<int, int>> depth, bool punct) {
            int id = cid.get(key);
            if (id != int(R.cells.size())) throw StructuralError("refined cell ids out of order");
            R.cells.push_back({b, m, punct, c, depth});
            R.refinedCell[{key[0], key[1], key[2], key[3], key[4]}] = id;
        };
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < L; ++i)
                for (int j = 0; j < L; ++j)
                    add_cell({kN, c, k, i, j, 0}, {rev(I(k, i, j)), J(k, i, j), I(k, i + 1, j), rev(J(k, i, j + 1))},
                             {{k, i}, {mod(k + 1), j}}, false);
            for (int i = 0; i < L; ++i)
                add_cell({kK, c, k, i, 0, 0}, {M(k, i), J(k, i, L), rev(M(k, i + 1)), rev(I(k - 1, L, i))}, {{k, i}}, false);
        }
        std::vector<DE> cb;
        for (int k = 0; k < n; ++k) cb.push_back(M(k, L));
        add_cell({kC, c, 0, 0, 0, 0}, cb, {}, E.cells[c].punct);
        for (int k = 0; k < n; ++k) {
            for (int i = 1; i <= L; ++i)
                for (int j = 0; j < L; ++j) {
                    R.edges[I(k, i, j).first].v = {G(k, i, j), G(k, i, j + 1)};
                    R.edges[J(k, j, i).first].v = {G(k, j, i), G(k, j + 1, i)};
                }
            for (int i = 1; i <= L; ++i) R.edges[M(k, i).first].v = {G(k - 1, L, i), G(k, i, L)};
        }
    }
    for (int x = 0; x < int(R.cells.size()); ++x)
        for (auto [e, dr] : R.cells[x].bd) {
            auto& ed = R.edges[e];
            if (ed.parent >= 0) {
                occupant[{e, dr, R.cells[x].parent}] = x;
                continue;
            }
            (dr == 1 ? ed.A : ed.B).push_back({x, dr});
            ed.links.assign(R.cells[x].m, {1, 1});
        }
    for (int e = 0; e < int(E.edges.size()); ++e)
        for (auto* X : {&E.edges[e].A, &E.edges[e].B})
            for (auto [c, dr] : *X)
                for (int t = 0; t <= 2 * L; ++t) {
                    int pe = eid.get({kPiece, e, t, 0, 0, 0});
                    auto it = occupant.find({pe, dr, c});
                    if (it == occupant.end()) throw StructuralError("piece without occupant");
                    (X == &E.edges[e].A ? R.edges[pe].A : R.edges[pe].B).push_back({it->second, dr});
                }
    for (auto& ed : R.edges)
        if (ed.parent < 0 && (ed.A.size() != 1 || ed.B.size() != 1)) throw StructuralError("chord with bad incidence");
    R.check();
    return R;
}

std::map<int, int> split_along(SheetComplex& s, const std::set<int>& starts, const std::set<int>& region) {
    std::map<int, int> level;
    auto fail = [](const std::string& what, int cell = -1) {
        SplitError e(what);
        e.cell = cell;
        throw e;
    };
    auto setlev = [&](int c, int k) {
        auto it = level.find(c);
        if (it != level.end()) {
            if (it->second != k) fail("level clash", c);
            return false;
        }
        level[c] = k;
        return true;
    };
    for (int e : starts) {
        std::vector<SheetComplex::Link> ms;
        for (auto& l : s.links(e))
            if (l.a.size() + l.b.size() == 3) ms.push_back(l);
        if (ms.size() != 1) fail("start edge without a single branch");
        const auto& h = ms[0].a.size() == 1 ? ms[0].a[0] : ms[0].b[0];
        if (!region.count(h.cell)) fail("start outside region", h.cell);
        setlev(h.cell, h.k);
    }
    std::vector<int> todo;
    for (auto& [c, k] : level) todo.push_back(c);
    while (!todo.empty()) {
        int c = todo.back();
        todo.pop_back();
        for (auto [e, dr] : s.cells[c].bd)
            for (auto& l : s.links(e))
                for (int sw = 0; sw < 2; ++sw) {
                    const auto& X = sw ? l.b : l.a;
                    const auto& Y = sw ? l.a : l.b;
                    bool mine = std::any_of(X.begin(), X.end(), [&](auto& x) { return x.cell == c && x.k == level[c]; });
                    if (!mine) continue;
                    if (Y.size() == 1) {
                        if (region.count(Y[0].cell) && setlev(Y[0].cell, Y[0].k)) todo.push_back(Y[0].cell);
                    } else if (!starts.count(e)) {
                        std::vector<SheetComplex::Sheet> ys;
                        for (auto& y : Y)
                            if (region.count(y.cell)) ys.push_back(y);
                        if (ys.size() > 1) {
                            std::vector<SheetComplex::Sheet> keep;
                            for (auto& y : ys)
                                if (level.count(y.cell) && level[y.cell] == y.k) keep.push_back(y);
                            ys = keep;
                        }
                        if (ys.size() != 1) fail("ambiguous branch", c);
                        if (setlev(ys[0].cell, ys[0].k)) todo.push_back(ys[0].cell);
                    }
                }
    }
    for (int c : region)
        if (!level.count(c)) fail("region cell not reached", c);
    auto dbl = [&](const SheetComplex::Sheet& x) {
        auto it = level.find(x.cell);
        return it != level.end() && it->second == x.k;
    };
    for (int e = 0; e < int(s.edges.size()); ++e) {
        std::vector<std::pair<int, int>> nl;
        for (auto& l : s.links(e)) {
            std::vector<bool> da, db;
            for (auto& x : l.a) da.push_back(dbl(x));
            for (auto& x : l.b) db.push_back(dbl(x));
            bool any = std::count(da.begin(), da.end(), true) + std::count(db.begin(), db.end(), true) > 0;
            if (!any) {
                nl.push_back({int(l.a.size()), int(l.b.size())});
                continue;
            }
            if (l.a.size() == 1 && l.b.size() == 1) {
                if (da[0] && db[0]) {
                    nl.push_back({1, 1});
                    nl.push_back({1, 1});
                } else {
                    nl.push_back(da[0] ? std::pair{2, 1} : std::pair{1, 2});
                }
                continue;
            }
            bool sw = l.a.size() == 2;
            bool hd = sw ? db[0] : da[0];
            auto pd = sw ? da : db;
            if (!hd) fail("branch would triple", (sw ? l.b[0] : l.a[0]).cell);
            std::vector<std::pair<int, int>> out;
            if (!pd[0] && !pd[1]) {
                if (!starts.count(e)) fail("unzip outside start");
                out = {{1, 1}, {1, 1}};
            } else if (pd[0] && !pd[1]) {
                out = {{1, 1}, {1, 2}};
            } else if (!pd[0] && pd[1]) {
                out = {{1, 2}, {1, 1}};
            } else {
                fail("both pair sheets doubled");
            }
            for (auto [x, y] : out) nl.push_back(sw ? std::pair{y, x} : std::pair{x, y});
        }
        s.edges[e].links = nl;
    }
    for (int c : region) s.cells[c].m += 1;
    return level;
}

}  // namespace pearl
