#include "pearl/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace pearl {

std::string FourTuple::str() const {
    std::ostringstream os;
    os << p << ',' << q << ',' << r << ',' << s;
    return os.str();
}

std::optional<FourTuple> parse_tuple(const std::string& text) {
    std::vector<long> v;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty() || cur.size() > 9) return std::nullopt;
            // stol would skip leading blanks; the format has none
            if (!std::all_of(cur.begin() + (cur[0] == '-'), cur.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                return std::nullopt;
            size_t used = 0;
            try {
                v.push_back(std::stol(cur, &used));
            } catch (...) {
                return std::nullopt;
            }
            if (used != cur.size()) return std::nullopt;
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (v.size() != 4) return std::nullopt;
    return FourTuple{int(v[0]), int(v[1]), int(v[2]), int(v[3])};
}

int Diagram::alpha_point(Endpoint e) const {
    return e.side == Side::Bottom ? e.pos : glue[e.pos];
}

int Diagram::arc_at(Endpoint e) const {
    return e.side == Side::Bottom ? atBottom[e.pos] : atTop[e.pos];
}

Endpoint Diagram::other_end(int arc, Endpoint e) const {
    const auto& a = arcs[arc];
    return a.a == e ? a.b : a.a;
}

std::vector<int> Diagram::nest(Side side) const {
    std::vector<int> out;
    auto want = side == Side::Bottom ? ArcKind::BottomRainbow : ArcKind::TopRainbow;
    for (int i = 0; i < int(arcs.size()); ++i)
        if (arcs[i].kind == want) out.push_back(i);
    // arcs are laid out innermost first
    return out;
}

int Diagram::rainbow_dir(int arc) const { return forward[arc] ? 1 : -1; }

std::array<int, 2> Diagram::alpha_points(int arc) const {
    return {alpha_point(arcs[arc].a), alpha_point(arcs[arc].b)};
}

Diagram layout_diagram(const FourTuple& t) {
    Diagram d;
    d.t = t;
    const int p = t.p, q = t.q, r = t.r;
    // innermost first in each nest
    for (int k = 1; k <= q; ++k)
        d.arcs.push_back({ArcKind::BottomRainbow, q - k + 1, {Side::Bottom, q - k}, {Side::Bottom, q + k - 1}});
    for (int k = 1; k <= q; ++k)
        d.arcs.push_back(
            {ArcKind::TopRainbow, q - k + 1, {Side::Top, r + q - k}, {Side::Top, r + q + k - 1}});
    std::vector<int> bots, tops;
    for (int x = 2 * q; x < p; ++x) bots.push_back(x);
    for (int x = 0; x < r; ++x) tops.push_back(x);
    for (int x = r + 2 * q; x < p; ++x) tops.push_back(x);
    for (size_t k = 0; k < bots.size() && k < tops.size(); ++k)
        d.arcs.push_back({ArcKind::Vertical, int(k), {Side::Bottom, bots[k]}, {Side::Top, tops[k]}});
    d.glue.resize(p);
    for (int j = 0; j < p; ++j) d.glue[j] = ((j + t.s) % p + p) % p;
    d.atBottom.assign(p, -1);
    d.atTop.assign(p, -1);
    for (int i = 0; i < int(d.arcs.size()); ++i)
        for (auto e : {d.arcs[i].a, d.arcs[i].b}) {
            auto& slot = e.side == Side::Bottom ? d.atBottom[e.pos] : d.atTop[e.pos];
            if (slot != -1) throw StructuralError("endpoint used twice");
            slot = i;
        }
    if (q >= 1) {
        d.zSeg = q - 1;
        d.wSeg = p + r + q - 1;
    }
    return d;
}

// follows beta through arcs and the gluing; fills order/forward on the way
static TraceResult run_trace(Diagram& d) {
    const int p = d.p();
    for (int x : d.atBottom)
        if (x < 0) throw StructuralError("unpaired bottom endpoint");
    for (int x : d.atTop)
        if (x < 0) throw StructuralError("unpaired top endpoint");
    std::vector<bool> seen(d.arcs.size(), false);
    d.order.clear();
    d.forward.assign(d.arcs.size(), true);
    long dx = 0, dy = 0;
    Endpoint cur{Side::Bottom, 0};
    while (true) {
        int i = d.arc_at(cur);
        if (seen[i]) break;
        seen[i] = true;
        d.order.push_back(i);
        Endpoint nxt = d.other_end(i, cur);
        d.forward[i] = d.arcs[i].a == cur;
        dx += nxt.pos - cur.pos;
        if (cur.side == Side::Bottom && nxt.side == Side::Top) ++dy;
        if (cur.side == Side::Top && nxt.side == Side::Bottom) --dy;
        if (nxt.side == Side::Top)
            cur = {Side::Bottom, d.glue[nxt.pos]};
        else
            cur = {Side::Top, ((nxt.pos - d.t.s) % p + p) % p};
    }
    TraceResult tr;
    tr.cycleCount = 1;
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        if (seen[i]) continue;
        ++tr.cycleCount;
        Endpoint c = d.arcs[i].a;
        while (true) {
            int j = d.arc_at(c);
            if (seen[j]) break;
            seen[j] = true;
            Endpoint n = d.other_end(j, c);
            c = n.side == Side::Top ? Endpoint{Side::Bottom, d.glue[n.pos]}
                                    : Endpoint{Side::Top, ((n.pos - d.t.s) % p + p) % p};
        }
    }
    // displacement lives in the lattice spanned by (p,0) and (-s,1)
    long k = dx + long(d.t.s) * dy;
    if (k % p != 0) throw StructuralError("trace displacement off lattice");
    tr.horizontalWinding = int(k / p);
    tr.verticalWinding = int(dy);
    return tr;
}

TraceResult trace_beta(const Diagram& d) {
    Diagram copy = d;
    return run_trace(copy);
}

static bool in_range(const FourTuple& t, std::vector<std::string>* why) {
    bool ok = true;
    auto fail = [&](const std::string& m) {
        ok = false;
        if (why) why->push_back(m);
    };
    if (t.p < 1) fail("p < 1");
    if (t.q < 0) fail("q < 0");
    if (2 * t.q > t.p) fail("2q > p");
    if (t.r < 0 || t.r > t.p - 2 * t.q) fail("r outside [0, p-2q]");
    if (t.s < 0 || t.s >= t.p) fail("s outside [0, p)");
    return ok;
}

ValidationReport validate_tuple(const FourTuple& t) {
    ValidationReport rep;
    if (!in_range(t, &rep.reasons)) {
        rep.ok = false;
        return rep;
    }
    Diagram d = layout_diagram(t);
    auto tr = run_trace(d);
    if (tr.cycleCount != 1)
        rep.reasons.push_back("beta disconnected: " + std::to_string(tr.cycleCount) + " cycles");
    else {
        int g = std::gcd(tr.horizontalWinding, tr.verticalWinding);
        if (tr.verticalWinding == 0) rep.reasons.push_back("beta has zero vertical winding");
        else if (g != 1)
            rep.reasons.push_back("beta not primitive: gcd " + std::to_string(g));
    }
    rep.ok = rep.reasons.empty();
    return rep;
}

Diagram build_diagram(const FourTuple& t) {
    auto rep = validate_tuple(t);
    if (!rep.ok) {
        std::string msg = "invalid tuple " + t.str() + ":";
        for (auto& r : rep.reasons) msg += " " + r + ";";
        throw InvalidInput(msg);
    }
    Diagram d = layout_diagram(t);
    d.trace = run_trace(d);
    return d;
}

std::vector<Region> complement_regions(const Diagram& d) {
    const int p = d.p();
    // successor of a segment inside its region
    auto step = [&](int seg) {
        Endpoint e = seg < p ? Endpoint{Side::Bottom, (seg + 1) % p} : Endpoint{Side::Top, seg - p};
        int i = d.arc_at(e);
        Endpoint o = d.other_end(i, e);
        int nxt = o.side == Side::Bottom ? o.pos : p + ((o.pos - 1 + p) % p);
        return std::pair{RegionStep{seg, i, e, o}, nxt};
    };
    std::vector<bool> seen(2 * p, false);
    std::vector<Region> out;
    for (int sg = 0; sg < 2 * p; ++sg) {
        if (seen[sg]) continue;
        Region f;
        int c = sg;
        while (!seen[c]) {
            seen[c] = true;
            auto [st, n] = step(c);
            f.push_back(st);
            c = n;
        }
        out.push_back(f);
    }
    return out;
}

int region_of_segment(const std::vector<Region>& regions, int seg) {
    for (int f = 0; f < int(regions.size()); ++f)
        for (auto& st : regions[f])
            if (st.seg == seg) return f;
    throw StructuralError("segment without region");
}

std::vector<Bigon> bigon_scan(const Diagram& d) {
    auto regs = complement_regions(d);
    std::vector<Bigon> out;
    for (int f = 0; f < int(regs.size()); ++f) {
        if (regs[f].size() != 1) continue;
        int sg = regs[f][0].seg;
        out.push_back({f, sg == d.zSeg, sg == d.wSeg});
    }
    return out;
}

std::string ManifoldId::str() const {
    if (s3) return "S3";
    return "L(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

ManifoldId ambient_manifold(const Diagram& d) {
    int vw = d.trace.verticalWinding, hw = d.trace.horizontalWinding;
    if (vw == 0) throw InvalidInput("vertical winding 0: not a rational homology sphere");
    int m = std::abs(vw);
    int n = ((hw % m) + m) % m;
    return {m == 1, m, m == 1 ? 0 : n};
}

// endpoint pairing of the standard layout: bottom i -> i, top j -> p + j
static std::vector<int> standard_mates(int p, int q, int r) {
    std::vector<int> m(2 * p);
    auto link = [&](int a, int b) { m[a] = b, m[b] = a; };
    for (int k = 1; k <= q; ++k) {
        link(q - k, q + k - 1);
        link(p + r + q - k, p + r + q + k - 1);
    }
    int v = 2 * q;
    for (int j = 0; j < p; ++j)
        if (j < r || j >= r + 2 * q) link(v++, p + j);
    return m;
}

// Smallest standard tuple whose pairing equals `mates` after cyclically
// relabeling the bottom by tb and the top by tt. Relabeling moves the cut of
// the square, so the glue shift becomes s + tt - tb.
static InvolutionImage normalize(int p, int q, int s, const std::vector<int>& mates) {
    std::optional<InvolutionImage> best;
    std::vector<int> moved(2 * p);
    auto relabel = [&](int e, int tb, int tt) { return e < p ? (e - tb + p) % p : p + (e - p - tt + p) % p; };
    for (int tb = 0; tb < p; ++tb)
        for (int tt = 0; tt < p; ++tt) {
            for (int e = 0; e < 2 * p; ++e) moved[relabel(e, tb, tt)] = relabel(mates[e], tb, tt);
            for (int r2 = 0; r2 <= p - 2 * q; ++r2) {
                if (standard_mates(p, q, r2) != moved) continue;
                FourTuple t2{p, q, r2, ((s + tt - tb) % p + p) % p};
                if (!best || t2 < best->tuple) best = InvolutionImage{t2, tb, tt};
            }
        }
    if (!best) throw StructuralError("diagram has no standard form");
    return *best;
}

FourTuple canonical_tuple(const Diagram& d) {
    return normalize(d.p(), d.t.q, d.t.s, standard_mates(d.p(), d.t.q, d.t.r)).tuple;
}

InvolutionImage hyperelliptic_involution(const Diagram& d) {
    const int p = d.p();
    // rotating by 180 degrees swaps the sides and reverses the order along each
    auto rot = [p](int e) { return e < p ? p + (p - 1 - e) : p - 1 - (e - p); };
    auto m = standard_mates(p, d.t.q, d.t.r);
    std::vector<int> img(2 * p);
    for (int e = 0; e < 2 * p; ++e) img[rot(e)] = rot(m[e]);
    return normalize(p, d.t.q, d.t.s, img);
}

std::vector<std::array<int, 2>> admissible_orientations(const Diagram& d) {
    std::vector<std::array<int, 2>> out;
    if (d.t.q < 1) return out;
    int wIn = d.nest(Side::Top)[0], zIn = d.nest(Side::Bottom)[0];
    for (int sa : {1, -1})
        for (int sb : {1, -1}) {
            // alpha-source bigon: w's when alpha runs left to right along the top edge
            bool ok = sa == 1 ? sb * d.rainbow_dir(wIn) == 1 : sb * d.rainbow_dir(zIn) == -1;
            if (ok) out.push_back({sa, sb});
        }
    return out;
}

OrientedDiagram orient_diagram(const Diagram& d) {
    auto adm = admissible_orientations(d);
    for (auto& o : adm)
        if (o[0] == 1) return {d, o[0], o[1]};
    throw StructuralError("no admissible orientation");
}

std::vector<FourTuple> valid_tuples(int pmax, int pmin) {
    std::vector<FourTuple> out;
    for (int p = std::max(1, pmin); p <= pmax; ++p)
        for (int q = 0; 2 * q <= p; ++q)
            for (int r = 0; r <= p - 2 * q; ++r)
                for (int s = 0; s < p; ++s)
                    if (validate_tuple({p, q, r, s}).ok) out.push_back({p, q, r, s});
    return out;
}

}  // namespace pearl
