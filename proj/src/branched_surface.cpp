#include "pearl/branched_surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pearl/classify.hpp"
#include "pearl/union_find.hpp"

namespace pearl {

namespace {
const char* polygon_name(size_t alphaSides) {
    switch (alphaSides) {
        case 1: return "bigon";
        case 2: return "quad";
        case 3: return "hexagon";
        case 4: return "octagon";
        default: return "other";
    }
}
}  // namespace

BranchedSurface::BranchedSurface(const Diagram& d) : d_(d) {
    const int p = d.p();
    regions_ = complement_regions(d);
    if (int(regions_.size()) != p) throw StructuralError("region count differs from p");
    seg2f_.assign(2 * p, -1);
    for (int f = 0; f < p; ++f)
        for (auto& st : regions_[f]) seg2f_[st.seg] = f;
    auto T = d.nest(Side::Top);
    bsign_ = (!T.empty() && d.rainbow_dir(T[0]) != 1) ? -1 : 1;
    aL_.resize(p);
    aR_.resize(p);
    for (int i = 0; i < p; ++i) {
        aL_[i] = seg2f_[i];
        aR_[i] = seg2f_[p + ((i - d.t.s) % p + p) % p];
    }
    bL_.assign(d.arcs.size(), -1);
    bR_.assign(d.arcs.size(), -1);
    for (int f = 0; f < p; ++f)
        for (auto& st : regions_[f]) {
            auto [from, to] = beta_dir(st.arc);
            (from == st.in && to == st.out ? bL_ : bR_)[st.arc] = f;
        }
    for (size_t i = 0; i < d.arcs.size(); ++i)
        if (bL_[i] < 0 || bR_[i] < 0) throw StructuralError("beta arc missing a side");
    sign_.assign(p, 1);
    if (d.t.q >= 1) {
        zf_ = seg2f_[d.zSeg];
        wf_ = seg2f_[d.wSeg];
    }
}

std::pair<Endpoint, Endpoint> BranchedSurface::beta_dir(int arc) const {
    const auto& a = d_.arcs[arc];
    bool fw = d_.forward[arc] == (bsign_ == 1);
    return fw ? std::pair{a.a, a.b} : std::pair{a.b, a.a};
}

static Merge merge_of(int a, int b) {
    if (a != b) return Merge::Disk;
    return a == 1 ? Merge::Left : Merge::Right;
}
Merge BranchedSurface::merge_alpha(int i) const { return merge_of(sign_[aL_[i]], sign_[aR_[i]]); }
Merge BranchedSurface::merge_beta(int i) const { return merge_of(sign_[bL_[i]], sign_[bR_[i]]); }
Merge BranchedSurface::merge_edge(int e) const {
    return e < p() ? merge_alpha(e) : merge_beta(e - p());
}

const RegionS& BranchedSurface::locate_S() {
    auto T = d_.nest(Side::Top);
    if (T.empty()) throw StructuralError("no rainbow arcs");
    int k = -1;
    int d0 = d_.rainbow_dir(T[0]);
    for (int j = 0; j < int(T.size()); ++j)
        if (d_.rainbow_dir(T[j]) != d0) {
            k = j;
            break;
        }
    if (k < 0) throw StructuralError("coherent top nest: no beta0");
    S_ = {};
    S_.beta0 = T[k];
    S_.interior.assign(T.begin(), T.begin() + k);
    int lo = d_.arcs[S_.beta0].a.pos, hi = d_.arcs[S_.beta0].b.pos;
    std::set<int> segs, faces;
    for (int j = lo; j < hi; ++j) {
        segs.insert(p() + j);
        faces.insert(seg2f_[p() + j]);
        S_.alpha0.push_back(d_.glue[j]);
    }
    for (int f : faces)
        for (auto& st : regions_[f])
            if (!segs.count(st.seg)) throw StructuralError("region S is not closed");
    S_.sectors.assign(faces.begin(), faces.end());
    haveS_ = true;
    return S_;
}

void BranchedSurface::reverse_coorientation(const std::vector<int>& region) {
    std::set<int> R(region.begin(), region.end());
    auto check = [&](int L, int Rt, Merge m, const std::string& what) {
        if (R.count(L) == R.count(Rt)) return;
        int h = m == Merge::Left ? L : m == Merge::Right ? Rt : -1;
        if (h >= 0 && R.count(h)) throw InvalidInput("branch direction points into region at " + what);
    };
    for (int i = 0; i < p(); ++i) check(aL_[i], aR_[i], merge_alpha(i), "alpha " + std::to_string(i));
    for (int i = 0; i < int(d_.arcs.size()); ++i)
        check(bL_[i], bR_[i], merge_beta(i), "beta " + std::to_string(i));
    for (int f : R) sign_[f] = -sign_[f];
}

std::vector<Sector> BranchedSurface::sectors() const {
    std::vector<Sector> out;
    std::set<int> inS(S_.sectors.begin(), S_.sectors.end());
    for (int f = 0; f < p(); ++f) {
        Sector s{f, SectorKind::SurfaceRegion, polygon_name(regions_[f].size()), {}, {}, sign_[f],
                 f == zf_ || f == wf_, inS.count(f) > 0};
        for (auto& st : regions_[f]) {
            int a = st.seg < p() ? st.seg : d_.glue[st.seg - p()];
            s.boundary.push_back(a);
            s.boundarySides.push_back(st.seg < p() ? 1 : -1);
            s.boundary.push_back(beta_edge(st.arc));
            auto dir = beta_dir(st.arc);
            s.boundarySides.push_back(dir.first == st.in ? 1 : -1);
        }
        out.push_back(s);
    }
    Sector da{DA(), SectorKind::AlphaDisk, "", {}, {}, 1, false, false};
    for (int i = 0; i < p(); ++i) {
        da.boundary.push_back(i);
        da.boundarySides.push_back(1);
    }
    Sector db{DB(), SectorKind::BetaDisk, "", {}, {}, 1, false, false};
    std::vector<int> order = d_.order;
    if (bsign_ == -1) std::reverse(order.begin(), order.end());
    for (int i : order) {
        db.boundary.push_back(beta_edge(i));
        db.boundarySides.push_back(1);
    }
    out.push_back(da);
    out.push_back(db);
    return out;
}

std::vector<BranchSegment> BranchedSurface::segments() const {
    std::vector<BranchSegment> out;
    for (int e = 0; e < num_edges(); ++e) {
        bool a = e < p();
        int c = a ? e : e - p();
        int L = a ? aL_[c] : bL_[c], R = a ? aR_[c] : bR_[c], D = a ? DA() : DB();
        Merge m = merge_edge(e);
        int dir = m == Merge::Left ? L : m == Merge::Right ? R : D;
        out.push_back({e, a, c, L, R, D, dir});
    }
    return out;
}

// Wedges around an edge: three pairs of sheet-sides, one of which is the
// cusp (left unglued). Side 0 of a face is its A side, 1 the other.
BranchedSurface::Wedge BranchedSurface::wedge(int e) const {
    Wedge w;
    if (e < p()) {
        int L = aL_[e], R = aR_[e];
        w.w = {{{side_id(L, 0), side_id(R, 0)}, {side_id(L, 1), side_id(DA(), 0)}, {side_id(R, 1), side_id(DA(), 1)}}};
        Merge m = merge_alpha(e);
        w.cusp = m == Merge::Left ? 2 : m == Merge::Right ? 1 : 0;
    } else {
        int i = e - p(), L = bL_[i], R = bR_[i];
        w.w = {{{side_id(L, 0), side_id(DB(), 0)}, {side_id(R, 0), side_id(DB(), 1)}, {side_id(L, 1), side_id(R, 1)}}};
        Merge m = merge_beta(i);
        w.cusp = m == Merge::Left ? 1 : m == Merge::Right ? 0 : 2;
    }
    return w;
}

int BranchedSurface::germ_chamber(const Vertex& v, int g) const {
    for (auto& [gg, c] : v.germChamber)
        if (gg == g) return c;
    throw StructuralError("germ not at vertex");
}

std::vector<BranchedSurface::Vertex> BranchedSurface::vertices() const {
    const int p = d_.p();
    std::vector<Vertex> V;
    enum { Um = 0, Up = 1, Lm = 2, Lp = 3 };
    for (int x = 0; x < p; ++x) {
        int j = ((x - d_.t.s) % p + p) % p;
        int aR = germ(x, 0), aL = germ((x - 1 + p) % p, 1);
        int iu = d_.atBottom[x], id = d_.atTop[j];
        int bU = germ(beta_edge(iu), d_.arcs[iu].a == Endpoint{Side::Bottom, x} ? 0 : 1);
        int bD = germ(beta_edge(id), d_.arcs[id].a == Endpoint{Side::Top, j} ? 0 : 1);
        int Qpp = seg2f_[x], Qmp = seg2f_[(x - 1 + p) % p];
        int Qpm = seg2f_[p + j], Qmm = seg2f_[p + (j - 1 + p) % p];
        bool up = beta_dir(iu).first == Endpoint{Side::Bottom, x};
        int DBm = side_id(DB(), up ? 0 : 1), DBp = side_id(DB(), up ? 1 : 0);
        Vertex v;
        v.ch[Um] = {{side_id(Qmp, 0), side_id(Qmm, 0), DBm}, {aL, bD, bU}};
        v.ch[Up] = {{side_id(Qpp, 0), side_id(Qpm, 0), DBp}, {aR, bD, bU}};
        v.ch[Lm] = {{side_id(Qmm, 1), side_id(Qpm, 1), side_id(DA(), 1)}, {bD, aR, aL}};
        v.ch[Lp] = {{side_id(Qmp, 1), side_id(Qpp, 1), side_id(DA(), 0)}, {bU, aR, aL}};
        for (auto [g, right] : {std::pair{aR, true}, std::pair{aL, false}}) {
            Merge m = merge_alpha(g / 2);
            int c = m == Merge::Left ? Lm : m == Merge::Right ? Lp : (right ? Up : Um);
            v.germChamber.push_back({g, c});
        }
        for (auto [g, isUp] : {std::pair{bU, true}, std::pair{bD, false}}) {
            Merge m = merge_beta(g / 2 - p);
            int c;
            if (m == Merge::Disk)
                c = isUp ? Lp : Lm;
            else
                c = ((m == Merge::Left) == up) ? Up : Um;
            v.germChamber.push_back({g, c});
        }
        V.push_back(v);
    }
    return V;
}

namespace {
struct Pairing {
    std::map<int, std::tuple<int, int, int>> pair;  // germ -> (partner, vertex, chamber)
};
}  // namespace

static Pairing pair_germs(const std::vector<BranchedSurface::Vertex>& V, auto chambers_of) {
    Pairing P;
    for (int vi = 0; vi < int(V.size()); ++vi) {
        std::map<int, std::vector<int>> byc = chambers_of(vi);
        for (auto& [c, gs] : byc) {
            if (gs.size() != 2) throw StructuralError("chamber without exactly two cusp germs");
            P.pair[gs[0]] = {gs[1], vi, c};
            P.pair[gs[1]] = {gs[0], vi, c};
        }
    }
    return P;
}

std::vector<BranchedSurface::Circle> BranchedSurface::branch_locus_circles() const {
    auto V = vertices();
    auto P = pair_germs(V, [&](int vi) {
        std::map<int, std::vector<int>> byc;
        for (auto& [g, c] : V[vi].germChamber) byc[c].push_back(g);
        return byc;
    });
    std::vector<bool> seen(num_edges(), false);
    std::vector<Circle> out;
    for (int e = 0; e < num_edges(); ++e) {
        if (seen[e]) continue;
        Circle circ;
        int g = germs_of(e)[0], cur = e;
        while (true) {
            if (seen[cur]) throw StructuralError("branch locus revisits an edge");
            seen[cur] = true;
            auto gs = germs_of(cur);
            int out_g = gs[0] == g ? gs[1] : gs[0];
            circ.push_back({cur, g, out_g});
            g = std::get<0>(P.pair.at(out_g));
            cur = g / 2;
            if (cur == circ[0].edge && g == circ[0].gin) break;
        }
        out.push_back(circ);
    }
    return out;
}

BranchedSurface::Boundary BranchedSurface::boundary_surface() const {
    const int nsides = 2 * (p() + 2);
    UnionFind uf(nsides);
    std::vector<Wedge> W;
    for (int e = 0; e < num_edges(); ++e) {
        W.push_back(wedge(e));
        for (int k = 0; k < 3; ++k)
            if (k != W[e].cusp) uf.unite(W[e].w[k][0], W[e].w[k][1]);
    }
    std::vector<long> V(nsides, 0), E(nsides, 0), F(nsides, 0);
    for (int x = 0; x < nsides; ++x) {
        int f = x / 2;
        F[uf.find(x)] += (f == zf_ || f == wf_) ? 0 : 1;
    }
    for (int e = 0; e < num_edges(); ++e)
        for (int k = 0; k < 3; ++k) {
            E[uf.find(W[e].w[k][0])] += 1;
            if (k == W[e].cusp) E[uf.find(W[e].w[k][1])] += 1;
        }
    auto Vs = vertices();
    auto P = pair_germs(Vs, [&](int vi) {
        std::map<int, std::vector<int>> byc;
        for (auto& [g, c] : Vs[vi].germChamber) byc[c].push_back(g);
        return byc;
    });
    auto lone_of = [](int i1, int i2) {
        for (int k = 0; k < 3; ++k)
            if ((k == i1 || k == (i1 + 1) % 3) && (k == i2 || k == (i2 + 1) % 3)) return k;
        throw StructuralError("cusp rays do not share a side");
    };
    for (auto& v : Vs)
        for (int cn = 0; cn < 4; ++cn) {
            auto& ch = v.ch[cn];
            std::vector<int> cus;
            for (int i = 0; i < 3; ++i)
                if (germ_chamber(v, ch.rays[i]) == cn) cus.push_back(i);
            if (cus.empty()) {
                V[uf.find(ch.sides[0])] += 1;
            } else {
                if (cus.size() != 2) throw StructuralError("chamber with one cusp ray");
                int lone = lone_of(cus[0], cus[1]);
                int other = lone == 0 ? 1 : 0;
                V[uf.find(ch.sides[lone])] += 1;
                V[uf.find(ch.sides[other])] += 1;
            }
        }

    Boundary B;
    auto circles = branch_locus_circles();
    for (int ci = 0; ci < int(circles.size()); ++ci) {
        auto& circ = circles[ci];
        auto& w0 = W[circ[0].edge];
        int sa = w0.w[w0.cusp][0], sb = w0.w[w0.cusp][1];
        int la = sa;
        std::vector<int> lines;
        for (auto& st : circ) {
            lines.push_back(la);
            auto [nxt, vi, cn] = P.pair.at(st.gout);
            auto& ch = Vs[vi].ch[cn];
            int i1 = int(std::find(ch.rays.begin(), ch.rays.end(), st.gout) - ch.rays.begin());
            int i2 = int(std::find(ch.rays.begin(), ch.rays.end(), nxt) - ch.rays.begin());
            int lone = lone_of(i1, i2);
            if (la != ch.sides[i1] && la != ch.sides[(i1 + 1) % 3])
                throw StructuralError("boundary line leaves its chamber");
            if (la != ch.sides[lone]) la = i2 != lone ? ch.sides[i2] : ch.sides[(i2 + 1) % 3];
        }
        Annulus a;
        a.circle = ci;
        a.mobius = la != lines[0];
        int lb = lines[0] == sa ? sb : sa;
        a.compA = uf.find(lines[0]);
        a.compB = uf.find(lb);
        B.annuli.push_back(a);
    }
    B.annuli.push_back({"dz", -1, uf.find(side_id(zf_, 0)), uf.find(side_id(zf_, 1)), false});
    B.annuli.push_back({"dw", -1, uf.find(side_id(wf_, 0)), uf.find(side_id(wf_, 1)), false});

    // labels for the branch-locus circles
    auto T = d_.nest(Side::Top);
    std::set<int> zc{B.annuli[B.annuli.size() - 2].compA, B.annuli[B.annuli.size() - 2].compB};
    for (int ci = 0; ci < int(circles.size()); ++ci) {
        auto& a = B.annuli[ci];
        bool hasW = false, hasB0 = false;
        for (auto& st : circles[ci]) {
            if (st.edge == beta_edge(T[0])) hasW = true;
            if (haveS_ && st.edge == beta_edge(S_.beta0)) hasB0 = true;
        }
        if (hasW) a.label = "Cw";
        else if (hasB0) a.label = "Ca";
        else if (zc.count(a.compA) || zc.count(a.compB)) a.label = "Cz";
        else a.label = "Cb";
    }

    std::map<int, int> bcount;
    for (auto& a : B.annuli) {
        bcount[a.compA]++;
        bcount[a.compB]++;
    }
    std::set<int> roots;
    for (int x = 0; x < nsides; ++x) roots.insert(uf.find(x));
    for (int r : roots) {
        Horizontal h{r, int(V[r] - E[r] + F[r]), bcount[r], false};
        for (auto& a : B.annuli)
            if ((a.label == "dz" || a.label == "dw") && (a.compA == r || a.compB == r)) h.punctureAdjacent = true;
        B.horizontal.push_back(h);
        B.chi += h.chi;
    }
    // connectivity of the assembly: horizontal pieces joined through annuli
    std::map<int, int> idx;
    for (int r : roots) idx[r] = int(idx.size());
    UnionFind g(int(roots.size()));
    for (auto& a : B.annuli) g.unite(idx[a.compA], idx[a.compB]);
    B.connected = g.count() == 1;
    B.orientable = std::none_of(B.annuli.begin(), B.annuli.end(), [](auto& a) { return a.mobius; });
    return B;
}

std::vector<std::string> annuli_cyclic_order(const BranchedSurface::Boundary& b) {
    const auto& A = b.annuli;
    if (A.empty()) return {};
    std::map<int, std::vector<int>> adj;
    for (int k = 0; k < int(A.size()); ++k) {
        adj[A[k].compA].push_back(k);
        adj[A[k].compB].push_back(k);
    }
    std::vector<std::string> order;
    int k = 0, comp = A[0].compB;
    for (size_t step = 0; step < A.size(); ++step) {
        order.push_back(A[k].label);
        std::vector<int> nk;
        for (int x : adj[comp])
            if (x != k) nk.push_back(x);
        if (nk.size() != 1) return {};
        k = nk[0];
        comp = A[k].compA == comp ? A[k].compB : A[k].compA;
    }
    if (k != 0) return {};
    return order;
}

bool same_cyclic_order(const std::vector<std::string>& got, const std::vector<std::string>& ref) {
    if (got.size() != ref.size()) return false;
    auto rev = ref;
    std::reverse(rev.begin(), rev.end());
    for (const std::vector<std::string>* r : std::array<const std::vector<std::string>*, 2>{&ref, &rev})
        for (size_t k = 0; k < r->size(); ++k) {
            bool eq = true;
            for (size_t i = 0; i < r->size() && eq; ++i) eq = got[i] == (*r)[(i + k) % r->size()];
            if (eq) return true;
        }
    return false;
}

// Cut-and-count: split one annulus along its core into two halves, each
// staying attached to one horizontal piece, and count pieces of the result.
MeridianCert meridian_verification(const BranchedSurface::Boundary& b) {
    MeridianCert cert;
    std::map<int, int> idx;
    for (auto& h : b.horizontal) idx[h.root] = int(idx.size());
    const int nh = int(idx.size()), na = int(b.annuli.size());
    for (int cut = 0; cut < na; ++cut) {
        // nodes: horizontals, then annuli, plus one extra node for the cut half
        UnionFind g(nh + na + 1);
        for (int k = 0; k < na; ++k) {
            auto& a = b.annuli[k];
            g.unite(nh + k, idx.at(a.compA));
            g.unite(k == cut ? nh + na : nh + k, idx.at(a.compB));
        }
        int comps = g.count();
        cert.cuts.push_back({b.annuli[cut].label, comps});
        if (comps != 1 && cert.ok) {
            cert.ok = false;
            cert.offending = b.annuli[cut].label;
        }
    }
    return cert;
}

BranchedSurface build_modified_hbs(const Diagram& d) {
    if (d.t.q < 1 || is_coherent(d)) throw InvalidInput("branched surface needs an incoherent diagram");
    BranchedSurface b(d);
    b.locate_S();
    b.reverse_coorientation(b.region_S().sectors);
    return b;
}

}  // namespace pearl
