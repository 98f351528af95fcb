#include "pearl/sink_analysis.hpp"

#include <algorithm>
#include <set>

namespace pearl {

SinkDiskReport sink_disks(const BranchedSurface& b) {
    const Diagram& d = b.diagram();
    const int p = d.p();
    SinkDiskReport rep;
    for (int f = 0; f < p; ++f) {
        if (f == b.zf() || f == b.wf()) continue;
        bool sink = true;
        for (auto& st : b.regions()[f]) {
            // f lies left of alpha edge i when it walks the bottom segment
            int a = st.seg < p ? st.seg : d.glue[st.seg - p];
            Merge want = st.seg < p ? Merge::Left : Merge::Right;
            if (b.merge_alpha(a) != want) sink = false;
            auto dir = b.beta_dir(st.arc);
            Merge wb = dir.first == st.in ? Merge::Left : Merge::Right;
            if (b.merge_beta(st.arc) != wb) sink = false;
        }
        if (sink) rep.sinkSectors.push_back(f);
    }
    bool da = true, db = true;
    for (int i = 0; i < p; ++i) da = da && b.merge_alpha(i) == Merge::Disk;
    for (int i = 0; i < int(d.arcs.size()); ++i) db = db && b.merge_beta(i) == Merge::Disk;
    if (da) rep.sinkSectors.push_back(b.DA());
    if (db) rep.sinkSectors.push_back(b.DB());
    auto ia = inconsistent_arcs(d);
    if (ia.z.size() == 1)
        for (int f : {b.bL(ia.z[0]), b.bR(ia.z[0])})
            if (b.regions()[f].size() == 2 && std::find(rep.candidates.begin(), rep.candidates.end(), f) == rep.candidates.end())
                rep.candidates.push_back(f);
    return rep;
}

bool sac_sink_bound(const BranchedSurface& b, const Classification& c) {
    if (c.verdict != Verdict::AlmostLSpaceKnot) throw InvalidInput("sink bound applies to strongly almost coherent diagrams");
    auto rep = sink_disks(b);
    if (rep.sinkSectors.size() > 1) return false;
    for (int f : rep.sinkSectors) {
        if (f >= b.p() || b.regions()[f].size() != 2) return false;
        bool hasArc = false;
        for (auto& st : b.regions()[f]) hasArc = hasArc || st.arc == c.inconsistent.z[0];
        if (!hasArc) return false;
    }
    return true;
}

namespace {
struct Rail {
    std::vector<int> arcs;
    int term = -1, end = -1;
};
// follow beta from alpha point x through vertical arcs, upward (into the
// arc whose bottom endpoint sits at x) or downward
Rail rail(const Diagram& d, int x, bool up) {
    Rail r;
    const int p = d.p();
    while (true) {
        int i = up ? d.atBottom[x] : d.atTop[((x - d.t.s) % p + p) % p];
        const auto& a = d.arcs[i];
        if (a.kind != ArcKind::Vertical) {
            r.term = i;
            r.end = x;
            return r;
        }
        r.arcs.push_back(i);
        x = up ? d.alpha_point(a.b) : a.a.pos;
    }
}
std::vector<int> subarc(int p, const std::vector<int>& edges, int x, int y) {
    std::vector<int> pts{edges[0]};
    for (int e : edges) pts.push_back((e + 1) % p);
    auto i = std::find(pts.begin(), pts.end(), x) - pts.begin();
    auto j = std::find(pts.begin(), pts.end(), y) - pts.begin();
    if (i >= long(pts.size()) || j >= long(pts.size())) throw StructuralError("tube corner not on alpha arc");
    if (i > j) std::swap(i, j);
    return {edges.begin() + i, edges.begin() + j};
}
}  // namespace

GeneralizedBetaTube generalized_beta_tube(const BranchedSurface& b) {
    const Diagram& d = b.diagram();
    const int p = d.p();
    const auto& S = b.region_S();
    if (S.beta0 < 0) throw StructuralError("region S not located");
    auto T = d.nest(Side::Top), B = d.nest(Side::Bottom);
    int k = int(std::find(T.begin(), T.end(), S.beta0) - T.begin());
    int b0p = B[k], b1p = B[0];
    GeneralizedBetaTube g;
    bool haveSi = false, haveSo = false;
    for (auto e : {d.arcs[T[0]].a, d.arcs[T[0]].b}) {
        int x = d.alpha_point(e);
        auto r = rail(d, x, true);
        if (r.term == b0p) {
            g.betaSi = r.arcs, g.siStart = x, g.siEnd = r.end;
            haveSi = true;
        }
    }
    for (auto e : {d.arcs[b1p].a, d.arcs[b1p].b}) {
        int x = d.alpha_point(e);
        auto r = rail(d, x, false);
        if (r.term == S.beta0) {
            g.betaSo = r.arcs, g.soStart = x, g.soEnd = r.end;
            haveSo = true;
        }
    }
    if (!haveSi || !haveSo) throw StructuralError("generalized beta tube rails not found");
    std::vector<int> alpha0p;
    for (int j = d.arcs[b0p].a.pos; j < d.arcs[b0p].b.pos; ++j) alpha0p.push_back(j);
    g.alpha1 = subarc(p, S.alpha0, g.siStart, g.soEnd);
    g.alpha1p = subarc(p, alpha0p, g.siEnd, g.soStart);

    auto facts = [&] {
        auto vert = [&](int x) { return d.arcs[d.atBottom[x]].kind == ArcKind::Vertical; };
        g.beta1NeighboursVertical = true;
        for (int x : d.alpha_points(T[0])) g.beta1NeighboursVertical = g.beta1NeighboursVertical && vert(x);
        int others = 0, vertical = 0;
        for (int x : d.alpha_points(S.beta0)) {
            int i = d.atBottom[x];
            if (i == b0p) continue;
            ++others;
            vertical += d.arcs[i].kind == ArcKind::Vertical;
        }
        g.beta0OtherVertical = others == 1 && vertical == 1;
    };
    facts();

    auto sortedA1 = g.alpha1, sortedA1p = g.alpha1p;
    std::sort(sortedA1.begin(), sortedA1.end());
    std::sort(sortedA1p.begin(), sortedA1p.end());
    if (g.betaSi.empty() && g.betaSo.empty() && sortedA1 == sortedA1p) {
        // the rails are single points and alpha1 runs along alpha1': no interior
        g.degenerate = true;
        g.allQuads = true;
        return g;
    }
    std::set<int> bndB(g.betaSi.begin(), g.betaSi.end()), bndA(g.alpha1.begin(), g.alpha1.end());
    bndB.insert(g.betaSo.begin(), g.betaSo.end());
    bndA.insert(g.alpha1p.begin(), g.alpha1p.end());
    std::set<int> seen;
    std::vector<int> todo;
    for (int e : g.alpha1) {
        int f = b.region_of_seg(e);
        if (seen.insert(f).second) todo.push_back(f);
    }
    while (!todo.empty()) {
        int f = todo.back();
        todo.pop_back();
        for (auto& st : b.regions()[f]) {
            int ae = st.seg < p ? st.seg : d.glue[st.seg - p];
            if (!bndA.count(ae)) {
                int other = st.seg < p ? b.aR(ae) : b.aL(ae);
                if (seen.insert(other).second) todo.push_back(other);
            }
            if (!bndB.count(st.arc))
                for (int nf : {b.bL(st.arc), b.bR(st.arc)})
                    if (seen.insert(nf).second) todo.push_back(nf);
        }
    }
    g.interiorSectors.assign(seen.begin(), seen.end());
    g.allQuads = std::all_of(seen.begin(), seen.end(), [&](int f) { return b.regions()[f].size() == 2; });
    return g;
}

}  // namespace pearl
