#include "pearl/splitting.hpp"

#include <algorithm>
#include <map>

namespace pearl {

SplitPlan plan_split(const BranchedSurface& b) {
    const Diagram& d = b.diagram();
    const int p = d.p();
    SplitPlan P;
    P.tube = generalized_beta_tube(b);
    if (P.tube.degenerate) return P;
    auto T = d.nest(Side::Top), B = d.nest(Side::Bottom);
    const auto& S = b.region_S();
    int k = int(std::find(T.begin(), T.end(), S.beta0) - T.begin());
    std::set<int> tube(P.tube.interiorSectors.begin(), P.tube.interiorSectors.end());
    P.W = tube;
    for (int j = d.arcs[B[k]].a.pos; j < d.arcs[B[k]].b.pos; ++j) P.W.insert(b.region_of_seg(j));
    std::set<int> si(P.tube.betaSi.begin(), P.tube.betaSi.end()), so(P.tube.betaSo.begin(), P.tube.betaSo.end());
    std::set<int> nests(T.begin(), T.end());
    nests.insert(B.begin(), B.end());
    for (int f : tube)
        for (auto& st : b.regions()[f])
            if (!si.count(st.arc) && !so.count(st.arc) && !nests.count(st.arc)) P.tubeInterior.insert(st.arc);
    P.sPrimeArcs.insert(B.begin(), B.begin() + k);
    P.targets = si;
    P.targets.insert(B[k]);
    P.targets.insert(S.beta0);

    std::set<int> pushable = P.tubeInterior;
    pushable.insert(P.sPrimeArcs.begin(), P.sPrimeArcs.end());
    const auto& order = d.order;
    const int n = int(order.size());
    auto pos = [&](int arc) { return int(std::find(order.begin(), order.end(), arc) - order.begin()); };
    std::set<int> used;
    std::vector<PushRun> runs;
    for (int i : pushable) {
        if (used.count(i)) continue;
        int j = pos(i);
        for (int guard = 0; pushable.count(order[((j - 1) % n + n) % n]) && guard < n; ++guard) --j;
        PushRun r;
        for (int guard = 0; pushable.count(order[((j % n) + n) % n]) && guard < n; ++guard, ++j)
            r.arcs.push_back(order[((j % n) + n) % n]);
        used.insert(r.arcs.begin(), r.arcs.end());
        int first = pos(r.arcs.front()), last = pos(r.arcs.back());
        for (int c : {order[(first - 1 + n) % n], order[(last + 1) % n]})
            if (c != S.beta0) r.cont.insert(c);
        runs.push_back(r);
    }
    // runs whose region reaches beta_si go first
    auto touchesSi = [&](const PushRun& r) {
        std::set<int> seen;
        std::vector<int> todo;
        for (int i : r.arcs) {
            int f = b.merge_beta(i) == Merge::Left ? b.bL(i) : b.bR(i);
            if (P.W.count(f) && seen.insert(f).second) todo.push_back(f);
        }
        std::set<int> a1(P.tube.alpha1.begin(), P.tube.alpha1.end());
        while (!todo.empty()) {
            int f = todo.back();
            todo.pop_back();
            for (int ai = 0; ai < p; ++ai) {
                if (a1.count(ai) || (b.aL(ai) != f && b.aR(ai) != f)) continue;
                int o = b.aL(ai) == f ? b.aR(ai) : b.aL(ai);
                if (P.W.count(o) && seen.insert(o).second) todo.push_back(o);
            }
        }
        for (int i : P.targets)
            if (d.arcs[i].kind == ArcKind::Vertical && (seen.count(b.bL(i)) || seen.count(b.bR(i)))) return true;
        return false;
    };
    std::stable_sort(runs.begin(), runs.end(), [&](auto& x, auto& y) { return touchesSi(x) > touchesSi(y); });
    P.runs = runs;
    return P;
}

void check_movable(const BranchedSurface& b, int arc) {
    const auto& S = b.region_S();
    if (arc == S.beta0 || std::find(S.interior.begin(), S.interior.end(), arc) != S.interior.end())
        throw InvalidInput("beta arc " + std::to_string(arc) + " cannot be moved");
}

Splitter::Splitter(const BranchedSurface& b, const SplitPlan& plan) : b_(b), plan_(plan) {
    E0_ = sheet_form(b);
    R_ = refine(E0_, int(plan.runs.size()) + 1);
}

namespace {
using Occ = std::pair<int, int>;  // (base cell, direction)

struct Design {
    const SheetComplex& E0;
    const SheetComplex& R;
    int p;
    std::set<int> chain, cont, targets, core, pushed, Sfaces;
    int depth, exclude;

    std::set<int> starts, region;

    int occupant(int piece, Occ occ) const {
        for (auto* X : {&R.edges[piece].A, &R.edges[piece].B})
            for (auto [c, dr] : *X)
                if (R.cells[c].parent == occ.first && dr == occ.second) return c;
        throw StructuralError("piece occupant missing");
    }
    int layer(int x, int side) const {
        for (auto [s, l] : R.cells[x].depth)
            if (s == side) return l;
        return 1 << 20;
    }
    int side_index(int c, int e, int dr) const {
        const auto& bd = E0.cells[c].bd;
        for (int k = 0; k < int(bd.size()); ++k)
            if (bd[k] == Occ{e, dr}) return k;
        throw StructuralError("side not on base cell");
    }
    // cells stacked over piece t of side k, up to the given depth
    std::vector<int> column(int c, int k, int t) const {
        const int L = R.layers, n = int(E0.cells[c].bd.size());
        std::vector<int> out;
        for (int i = 0; i < depth; ++i) {
            std::array<int, 5> key = t < L    ? std::array<int, 5>{0, c, (k - 1 + n) % n, t, i}
                                     : t == L ? std::array<int, 5>{1, c, k, i, 0}
                                              : std::array<int, 5>{0, c, k, i, 2 * L - t};
            out.push_back(R.refinedCell.at(key));
        }
        return out;
    }
    bool add(int piece, Occ occ) {
        int y = occupant(piece, occ);
        int c = R.cells[y].parent;
        if (core.count(c)) return region.insert(y).second;
        int e = R.edges[piece].parent;
        int t = occ.second == 1 ? R.edges[piece].piece : 2 * R.layers - R.edges[piece].piece;
        bool changed = false;
        for (int x : column(c, side_index(c, e, occ.second), t)) changed |= region.insert(x).second;
        return changed;
    }
    void run() {
        const int DA = p, DB = p + 1;
        for (int x = 0; x < int(R.cells.size()); ++x) {
            int c = R.cells[x].parent;
            if (!core.count(c)) continue;
            bool residual = false;
            const auto& bd = E0.cells[c].bd;
            for (int k = 0; k < int(bd.size()); ++k) {
                auto h = E0.edges[bd[k].first].A[0];
                if (h.first == DA && Occ{c, bd[k].second} != h && layer(x, k) < exclude) residual = true;
            }
            if (!residual) region.insert(x);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> cur(region.begin(), region.end());
            for (int x : cur)
                for (auto [pc, dr] : R.cells[x].bd) {
                    int e = R.edges[pc].parent;
                    if (e < 0) continue;
                    bool beta = e >= p;
                    int arc = e - p;
                    if (beta && pushed.count(arc)) continue;
                    Occ h = E0.edges[e].A[0], lo = E0.edges[e].B[0], up = E0.edges[e].B[1];
                    Occ me{R.cells[x].parent, dr};
                    if (me == h) {
                        if (beta && (chain.count(arc) || cont.count(arc))) {
                            starts.insert(pc);
                            continue;
                        }
                        if (region.count(occupant(pc, lo)) || region.count(occupant(pc, up))) continue;
                        if (beta && targets.count(arc)) {
                            auto ok = [&](Occ o) { return o.first == DB || (o.first < p && !Sfaces.count(o.first)); };
                            changed |= add(pc, ok(up) ? up : lo);
                        } else if (!beta) {
                            changed |= add(pc, up);
                        } else {
                            throw SplitError("tongue meets beta arc " + std::to_string(arc) + " from its merged side");
                        }
                    } else {
                        if (h.first == DA) throw SplitError("tongue reaches an alpha disk branch");
                        changed |= add(pc, h);
                    }
                }
        }
    }
};
}  // namespace

std::vector<PushMove> Splitter::push_run(int index) {
    const Diagram& d = b_.diagram();
    const int p = d.p();
    const auto& run = plan_.runs.at(index);
    for (int a : run.arcs) check_movable(b_, a);
    // regions of W reached from the run's merged sides without crossing alpha1
    // or an arc that is still unpushed
    std::set<int> a1(plan_.tube.alpha1.begin(), plan_.tube.alpha1.end());
    std::set<int> blk(run.arcs.begin(), run.arcs.end());
    blk.insert(plan_.targets.begin(), plan_.targets.end());
    std::set<int> core;
    std::vector<int> todo;
    for (int i : run.arcs) {
        int f = b_.merge_beta(i) == Merge::Left ? b_.bL(i) : b_.bR(i);
        if (plan_.W.count(f) && core.insert(f).second) todo.push_back(f);
    }
    while (!todo.empty()) {
        int f = todo.back();
        todo.pop_back();
        auto visit = [&](int o) {
            if (plan_.W.count(o) && core.insert(o).second) todo.push_back(o);
        };
        for (int ai = 0; ai < p; ++ai)
            if (!a1.count(ai) && (b_.aL(ai) == f || b_.aR(ai) == f)) visit(b_.aL(ai) == f ? b_.aR(ai) : b_.aL(ai));
        for (int i : pushed_)
            if (!blk.count(i) && (b_.bL(i) == f || b_.bR(i) == f)) visit(b_.bL(i) == f ? b_.bR(i) : b_.bL(i));
    }
    std::set<int> Sf(b_.region_S().sectors.begin(), b_.region_S().sectors.end());
    const int n = int(plan_.runs.size());
    std::set<int> chain(run.arcs.begin(), run.arcs.end());
    Design D{E0_, R_, p, chain, run.cont, plan_.targets, core, pushed_, Sf, n - done_, done_ + 1, {}, {}};
    D.run();
    SheetComplex next = R_;
    split_along(next, D.starts, D.region);
    R_ = std::move(next);
    pushed_.insert(run.arcs.begin(), run.arcs.end());
    ++done_;

    std::vector<PushMove> moves;
    auto T = d.nest(Side::Top), B = d.nest(Side::Bottom);
    int k = int(std::find(T.begin(), T.end(), b_.region_S().beta0) - T.begin());
    for (int a : run.arcs) {
        if (plan_.tubeInterior.count(a)) {
            // tube arcs end on alpha1 and are pushed onto beta_si short of it
            int edge = -1;
            for (int x : d.alpha_points(a))
                for (int e : plan_.tube.alpha1)
                    if (e == x || (e + 1) % p == x) edge = e;
            int target = plan_.tube.betaSi.empty() ? B[k] : plan_.tube.betaSi.front();
            moves.push_back({a, target, edge >= 0 ? Extent::PartialAtAlpha1 : Extent::Full, edge});
        } else {
            moves.push_back({a, B[k], Extent::Full, -1});
        }
    }
    return moves;
}

SplitReport split_case3(const BranchedSurface& b) {
    SplitReport rep;
    rep.preSinkDisks = sink_disks(b);
    SheetComplex base = sheet_form(b);
    rep.horizontalBefore = base.horizontal_summary();
    rep.preSinkSectors = int(base.sinks().size());
    SplitPlan plan = plan_split(b);
    if (plan.tube.degenerate) {
        rep.degenerate = true;
        rep.postSinkDisks = rep.preSinkDisks;
        rep.postSinkSectors = rep.preSinkSectors;
        rep.horizontalAfter = rep.horizontalBefore;
        rep.ok = rep.postSinkSectors == 0;
        if (!rep.ok) rep.error = "degenerate tube with a sink disk";
        return rep;
    }
    try {
        Splitter sp(b, plan);
        for (int i = 0; i < int(plan.runs.size()); ++i) {
            auto mv = sp.push_run(i);
            rep.moves.insert(rep.moves.end(), mv.begin(), mv.end());
            ++rep.runs;
        }
        const auto& R = sp.complex();
        rep.horizontalAfter = R.horizontal_summary();
        auto sinks = R.sinks();
        rep.postSinkSectors = int(sinks.size());
        for (auto& s : sinks) rep.postSinkDisks.sinkSectors.push_back(R.cells[s.front().first].parent);
        rep.ok = rep.postSinkSectors == 0 && rep.horizontalAfter == rep.horizontalBefore;
        if (!rep.ok) rep.error = rep.postSinkSectors ? "sink disk left after splitting" : "horizontal boundary changed";
    } catch (const SplitError& e) {
        rep.error = std::string("split failed: ") + e.what();
    }
    return rep;
}

}  // namespace pearl
