#include "pearl/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace pearl {

namespace {
json tuple_json(const FourTuple& t) { return json::array({t.p, t.q, t.r, t.s}); }

json endpoint_json(const Endpoint& e) { return json::array({e.side == Side::Bottom ? "B" : "T", e.pos}); }

const char* kind_name(ArcKind k) {
    return k == ArcKind::BottomRainbow ? "bottomRainbow" : k == ArcKind::TopRainbow ? "topRainbow" : "vertical";
}

const char* merge_name(Merge m) { return m == Merge::Left ? "left" : m == Merge::Right ? "right" : "disk"; }

json summary_json(const SheetComplex::HSummary& h) {
    json comps = json::array();
    for (auto [chi, lines] : h.comps) comps.push_back(json::array({chi, lines}));
    return {{"cuspCircles", h.cuspCircles}, {"components", comps}};
}
}  // namespace

std::string dump(const json& j) { return j.dump(); }

json to_json(const Diagram& d) {
    json arcs = json::array();
    for (int i = 0; i < int(d.arcs.size()); ++i) {
        auto& a = d.arcs[i];
        arcs.push_back({{"id", i},
                        {"kind", kind_name(a.kind)},
                        {"depth", a.depth},
                        {"a", endpoint_json(a.a)},
                        {"b", endpoint_json(a.b)}});
    }
    json bp = json::object();
    if (d.zSeg >= 0) bp["z"] = {{"side", "B"}, {"segment", d.zSeg}};
    if (d.wSeg >= 0) bp["w"] = {{"side", "T"}, {"segment", d.wSeg - d.p()}};
    std::vector<int> fwd(d.forward.begin(), d.forward.end());
    json orient = {{"order", d.order}, {"forward", fwd}};
    // the source/sink convention only exists for incoherent diagrams
    if (!is_coherent(d)) {
        auto o = orient_diagram(d);
        orient["alpha"] = o.alphaSign;
        orient["beta"] = o.betaSign;
    }
    return {{"schema", "pearl-diagram/1"},
            {"tuple", tuple_json(d.t)},
            {"arcs", arcs},
            {"glue", d.glue},
            {"basepoints", bp},
            {"orientations", orient}};
}

json to_json(const BranchedSurface& b) {
    json sectors = json::array();
    for (auto& s : b.sectors()) {
        json j = {{"id", s.id},
                  {"kind", s.kind == SectorKind::SurfaceRegion ? "region"
                           : s.kind == SectorKind::AlphaDisk   ? "alphaDisk"
                                                               : "betaDisk"},
                  {"boundary", s.boundary},
                  {"sides", s.boundarySides},
                  {"coOrientation", s.coOrientation},
                  {"punctured", s.punctured},
                  {"inS", s.inS}};
        if (!s.polygon.empty()) j["polygon"] = s.polygon;
        sectors.push_back(j);
    }
    json segs = json::array();
    for (auto& g : b.segments())
        segs.push_back({{"id", g.id},
                        {"curve", g.alpha ? "alpha" : "beta"},
                        {"carrier", g.carrier},
                        {"left", g.left},
                        {"right", g.right},
                        {"disk", g.disk},
                        {"merge", merge_name(b.merge_edge(g.id))},
                        {"direction", g.direction}});
    const auto& S = b.region_S();
    json labels = json::object();
    if (b.zf() >= 0) labels["z"] = b.zf();
    if (b.wf() >= 0) labels["w"] = b.wf();
    labels["alphaDisk"] = b.DA();
    labels["betaDisk"] = b.DB();
    return {{"schema", "pearl-bs/1"},
            {"tuple", tuple_json(b.diagram().t)},
            {"sectors", sectors},
            {"segments", segs},
            {"regionS", {{"beta0", S.beta0}, {"interior", S.interior}, {"alpha0", S.alpha0}, {"sectors", S.sectors}}},
            {"labels", labels}};
}

json to_json(const Classification& c) {
    json j = {{"tuple", tuple_json(c.tuple)},
              {"verdict", to_string(c.verdict)},
              {"sacCase", c.sacCase ? json(to_string(*c.sacCase)) : json(nullptr)},
              {"caseTag", c.caseTag ? json(to_string(*c.caseTag)) : json(nullptr)},
              {"inconsistent", {{"z", c.inconsistent.z}, {"w", c.inconsistent.w}}}};
    if (!c.reasons.empty()) j["reasons"] = c.reasons;
    return j;
}

json to_json(const SplitReport& r) {
    json moves = json::array();
    for (auto& m : r.moves) {
        json mj = {{"moved", m.movedArc},
                   {"target", m.targetArc},
                   {"extent", m.extent == Extent::Full ? "full" : "partialAtAlpha1"}};
        if (m.alphaEdge >= 0) mj["alphaEdge"] = m.alphaEdge;
        moves.push_back(mj);
    }
    json j = {{"moves", moves},
              {"runs", r.runs},
              {"degenerate", r.degenerate},
              {"preSinkDisks", r.preSinkDisks.sinkSectors},
              {"postSinkDisks", r.postSinkDisks.sinkSectors},
              {"preSinkSectors", r.preSinkSectors},
              {"postSinkSectors", r.postSinkSectors},
              {"horizontalBefore", summary_json(r.horizontalBefore)},
              {"horizontalAfter", summary_json(r.horizontalAfter)},
              {"ok", r.ok}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json to_json(const Certificate& c) {
    json checks = json::array();
    for (auto& k : c.checks) {
        json kj = {{"name", k.name}, {"pass", k.pass}};
        if (!k.witness.empty()) kj["witness"] = k.witness;
        checks.push_back(kj);
    }
    json j = {{"schema", "pearl-cert/1"},
              {"tuple", tuple_json(c.tuple)},
              {"classification", to_json(c.classification)},
              {"stage", c.stage},
              {"checks", checks},
              {"pass", c.all_pass()}};
    if (c.circles >= 0) {
        json bs = {{"circles", c.circles},
                   {"annuli", c.annuli},
                   {"chi", c.boundaryChi},
                   {"cyclicOrder", c.cyclicOrder}};
        if (c.meridian) {
            json cuts = json::array();
            for (auto& [label, n] : c.meridian->cuts) cuts.push_back(json::array({label, n}));
            bs["meridian"] = {{"ok", c.meridian->ok}, {"cuts", cuts}};
        }
        j["branchedSurface"] = bs;
    }
    if (c.sinks) j["sinks"] = {{"sinkSectors", c.sinks->sinkSectors}, {"candidates", c.sinks->candidates}};
    if (c.tube) {
        auto& t = *c.tube;
        j["tube"] = {{"betaSi", t.betaSi},
                     {"betaSo", t.betaSo},
                     {"alpha1", t.alpha1},
                     {"alpha1p", t.alpha1p},
                     {"interiorSectors", t.interiorSectors},
                     {"degenerate", t.degenerate},
                     {"allQuads", t.allQuads}};
    }
    if (c.split) j["split"] = to_json(*c.split);
    if (c.sinkFree) j["sinkFree"] = *c.sinkFree;
    return j;
}

// ---------------------------------------------------------------- census

std::vector<FourTuple> census_tuples(const CensusSpec& spec) {
    std::vector<FourTuple> out;
    if (spec.pMin > spec.pMax) return out;
    auto in = [](const std::optional<std::pair<int, int>>& r, int v) {
        return !r || (r->first <= v && v <= r->second);
    };
    for (auto& t : valid_tuples(spec.pMax, spec.pMin))
        if (in(spec.q, t.q) && in(spec.r, t.r) && in(spec.s, t.s)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

std::string csv_header() { return "p,q,r,s,verdict,sacCase,caseTag,circles,sinks,moves,sinkFree,pass"; }

std::string csv_row(const Certificate& c) {
    const auto& cl = c.classification;
    std::ostringstream o;
    o << c.tuple.p << ',' << c.tuple.q << ',' << c.tuple.r << ',' << c.tuple.s << ',' << to_string(cl.verdict) << ','
      << (cl.sacCase ? to_string(*cl.sacCase) : "") << ',' << (cl.caseTag ? to_string(*cl.caseTag) : "") << ',';
    if (c.circles >= 0) o << c.circles;
    o << ',';
    if (c.sinks) o << c.sinks->sinkSectors.size();
    o << ',';
    if (c.split) o << c.split->moves.size();
    o << ',';
    if (c.sinkFree) o << (*c.sinkFree ? "true" : "false");
    o << ',' << (c.all_pass() ? "true" : "false");
    return o.str();
}

CensusSummary run_census(const CensusSpec& spec, std::ostream& out) {
    auto tuples = census_tuples(spec);
    std::vector<Certificate> certs(tuples.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < tuples.size();) certs[i] = laminarity_pipeline(tuples[i]);
    };
    int jobs = std::max(1, spec.jobs);
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    CensusSummary sum;
    if (spec.format == Format::Csv) out << csv_header() << '\n';
    for (auto& c : certs) {
        const auto& cl = c.classification;
        if (spec.verdict && cl.verdict != *spec.verdict) continue;
        if (spec.caseTag && cl.caseTag != spec.caseTag) continue;
        ++sum.total;
        if (cl.verdict == Verdict::LSpaceKnot) ++sum.lspace;
        if (cl.verdict == Verdict::AlmostLSpaceKnot) ++sum.almost;
        if (cl.verdict == Verdict::OtherNonLSpace) ++sum.other;
        if (cl.caseTag == CaseTag::Case1) ++sum.case1;
        if (cl.caseTag == CaseTag::Case2) ++sum.case2;
        if (cl.caseTag == CaseTag::Case3) ++sum.case3;
        if (!c.all_pass()) ++sum.failures;
        out << (spec.format == Format::Json ? dump(to_json(c)) : csv_row(c)) << '\n';
    }
    if (spec.format == Format::Json) {
        json s = {{"total", sum.total},
                  {"LSpaceKnot", sum.lspace},
                  {"AlmostLSpaceKnot", sum.almost},
                  {"OtherNonLSpace", sum.other},
                  {"Case1", sum.case1},
                  {"Case2", sum.case2},
                  {"Case3", sum.case3},
                  {"failures", sum.failures}};
        out << dump({{"summary", s}}) << '\n';
    } else {
        out << "# total=" << sum.total << " LSpaceKnot=" << sum.lspace << " AlmostLSpaceKnot=" << sum.almost
            << " OtherNonLSpace=" << sum.other << " Case1=" << sum.case1 << " Case2=" << sum.case2
            << " Case3=" << sum.case3 << " failures=" << sum.failures << '\n';
    }
    return sum;
}

// ---------------------------------------------------------------- svg

namespace {
struct Canvas {
    double margin = 40, W = 480, H = 480;
    int p;
    double x(int pos) const { return margin + (pos + 0.5) * W / p; }
    double bottom() const { return margin + H; }
    double top() const { return margin; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// small arrowhead at (x, y) pointing along (dx, dy)
std::string arrow(double x, double y, double dx, double dy, const char* color) {
    double n = std::hypot(dx, dy);
    dx /= n, dy /= n;
    double s = 7, w = 4;
    double bx = x - dx * s, by = y - dy * s;
    return "<path d=\"M" + fmt(x) + " " + fmt(y) + " L" + fmt(bx - dy * w) + " " + fmt(by + dx * w) + " L" +
           fmt(bx + dy * w) + " " + fmt(by - dx * w) + " Z\" fill=\"" + color + "\"/>\n";
}
}  // namespace

std::string render_svg(const Diagram& d, const BranchedSurface* b) {
    Canvas cv;
    cv.p = d.p();
    const int p = d.p();
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(cv.W + 2 * cv.margin) << "\" height=\""
      << fmt(cv.H + 2 * cv.margin) << "\" viewBox=\"0 0 " << fmt(cv.W + 2 * cv.margin) << " "
      << fmt(cv.H + 2 * cv.margin) << "\">\n";
    o << "<title>(1,1) diagram " << d.t.str() << "</title>\n";
    o << "<rect x=\"" << fmt(cv.margin) << "\" y=\"" << fmt(cv.margin) << "\" width=\"" << fmt(cv.W)
      << "\" height=\"" << fmt(cv.H) << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";

    std::set<int> Ssectors, tubeSectors;
    std::set<int> siArcs, soArcs, a1, a1p;
    if (b) {
        Ssectors.insert(b->region_S().sectors.begin(), b->region_S().sectors.end());
        auto cl = classify(d);
        if (cl.caseTag == CaseTag::Case3) {
            auto g = generalized_beta_tube(*b);
            tubeSectors.insert(g.interiorSectors.begin(), g.interiorSectors.end());
            siArcs.insert(g.betaSi.begin(), g.betaSi.end());
            soArcs.insert(g.betaSo.begin(), g.betaSo.end());
            a1.insert(g.alpha1.begin(), g.alpha1.end());
            a1p.insert(g.alpha1p.begin(), g.alpha1p.end());
        }
        // region S and the tube as bands along their alpha segments
        double band = 14, step = cv.W / p;
        auto shade = [&](int f, double x0, double y0) {
            const char* color = Ssectors.count(f) ? "#f4a261" : tubeSectors.count(f) ? "#90be6d" : nullptr;
            if (color)
                o << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(step) << "\" height=\""
                  << fmt(band) << "\" fill=\"" << color << "\" fill-opacity=\"0.35\"/>\n";
        };
        for (int i = 0; i < p; ++i) shade(b->aL(i), cv.margin + i * step, cv.bottom() - band);
        for (int j = 0; j < p; ++j) shade(b->aR(d.glue[j]), cv.margin + j * step, cv.top());
    }

    // alpha: bottom and top edges of the square, split into segments
    for (int i = 0; i < p; ++i) {
        double x0 = cv.margin + i * cv.W / p, x1 = x0 + cv.W / p;
        const char* col = a1.count(i) ? "#2a9d8f" : "#d62828";
        double wdt = a1.count(i) ? 4 : 2;
        o << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(cv.bottom()) << "\" x2=\"" << fmt(x1) << "\" y2=\""
          << fmt(cv.bottom()) << "\" stroke=\"" << col << "\" stroke-width=\"" << wdt << "\"/>\n";
        int e = d.glue[i];
        col = a1p.count(e) ? "#2a9d8f" : "#d62828";
        wdt = a1p.count(e) ? 4 : 2;
        o << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(cv.top()) << "\" x2=\"" << fmt(x1) << "\" y2=\""
          << fmt(cv.top()) << "\" stroke=\"" << col << "\" stroke-width=\"" << wdt << "\"/>\n";
    }
    for (int pos = 0; pos < p; ++pos) {
        o << "<text x=\"" << fmt(cv.x(pos)) << "\" y=\"" << fmt(cv.bottom() + 16)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << pos << "</text>\n";
        o << "<text x=\"" << fmt(cv.x(pos)) << "\" y=\"" << fmt(cv.top() - 8)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << pos << "</text>\n";
    }

    // beta arcs
    double rise = cv.H * 0.4 / std::max(1, d.t.q);
    for (int i = 0; i < int(d.arcs.size()); ++i) {
        const auto& a = d.arcs[i];
        const char* col = siArcs.count(i) ? "#2a9d8f" : soArcs.count(i) ? "#e76f51" : "#1d3557";
        double x1 = cv.x(a.a.pos), x2 = cv.x(a.b.pos);
        double mx, my, tx, ty;
        int sgn = d.forward[i] ? 1 : -1;
        if (a.kind == ArcKind::Vertical) {
            // leave each side straight up so it clears the rainbows
            double c = 0.75 * cv.H;
            o << "<path d=\"M" << fmt(x1) << " " << fmt(cv.bottom()) << " C" << fmt(x1) << " " << fmt(cv.bottom() - c)
              << " " << fmt(x2) << " " << fmt(cv.top() + c) << " " << fmt(x2) << " " << fmt(cv.top())
              << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.6\"/>\n";
            mx = (x1 + x2) / 2, my = (cv.bottom() + cv.top()) / 2;
            tx = sgn * (x2 - x1), ty = sgn * (cv.top() - cv.bottom());
        } else {
            bool bot = a.kind == ArcKind::BottomRainbow;
            double y = bot ? cv.bottom() : cv.top();
            double h = rise * (d.t.q - a.depth + 1);
            double cy = bot ? y - h : y + h;
            o << "<path d=\"M" << fmt(x1) << " " << fmt(y) << " C" << fmt(x1) << " " << fmt(cy) << " " << fmt(x2)
              << " " << fmt(cy) << " " << fmt(x2) << " " << fmt(y) << "\" fill=\"none\" stroke=\"" << col
              << "\" stroke-width=\"1.6\"/>\n";
            mx = (x1 + x2) / 2, my = bot ? y - 0.75 * h : y + 0.75 * h;
            tx = sgn * (x2 - x1), ty = 0;
        }
        o << arrow(mx, my, tx, ty, col);
        if (b) {
            // branch direction: a short tick toward the merged sheet
            Merge m = b->merge_beta(i);
            if (m != Merge::Disk) {
                double n = std::hypot(tx, ty), lx = ty / n, ly = -tx / n;  // left in screen coordinates
                if (b->beta_sign() < 0) lx = -lx, ly = -ly;
                if (m == Merge::Right) lx = -lx, ly = -ly;
                o << arrow(mx + 12 * lx, my + 12 * ly, lx, ly, "#6a4c93");
            } else {
                o << "<circle cx=\"" << fmt(mx) << "\" cy=\"" << fmt(my) << "\" r=\"3\" fill=\"#6a4c93\"/>\n";
            }
        }
    }
    if (b)
        for (int i = 0; i < p; ++i) {
            Merge m = b->merge_alpha(i);
            double x = cv.margin + (i + 0.5) * cv.W / p;
            if (m == Merge::Left)
                o << arrow(x, cv.bottom() - 14, 0, -1, "#6a4c93");
            else if (m == Merge::Right)
                o << arrow(x, cv.bottom() + 26, 0, 1, "#6a4c93");
            else
                o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(cv.bottom() + 24) << "\" r=\"3\" fill=\"#6a4c93\"/>\n";
        }

    auto basepoint = [&](double x, double y, const char* name) {
        o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"black\"/>\n";
        o << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y + 4) << "\" font-size=\"12\">" << name << "</text>\n";
    };
    double step = cv.W / p;
    if (d.zSeg >= 0) basepoint(cv.margin + (d.zSeg + 1) * step, cv.bottom() - rise * 0.4, "z");
    if (d.wSeg >= 0) basepoint(cv.margin + (d.wSeg - p + 1) * step, cv.top() + rise * 0.4, "w");
    o << "</svg>\n";
    return o.str();
}

}  // namespace pearl
