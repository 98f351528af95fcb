// Acceptance run: one PASS/FAIL line per criterion, exhaustive over the
// stated ranges. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sink_oracle.hpp"
#include "pearl/report.hpp"

using namespace pearl;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
    std::string firstBad;
    void fail(const FourTuple& t, const std::string& why) {
        if (pass) firstBad = t.str() + ": " + why;
        pass = false;
    }
};

std::vector<FourTuple> all_in_range(int pmax) {
    std::vector<FourTuple> out;
    for (int p = 1; p <= pmax; ++p)
        for (int q = 0; 2 * q <= p; ++q)
            for (int r = 0; r <= p - 2 * q; ++r)
                for (int s = 0; s < p; ++s) out.push_back({p, q, r, s});
    return out;
}

Result validation_oracle() {
    Result r;
    int n = 0, ok = 0;
    for (auto t : all_in_range(12)) {
        ++n;
        auto rep = validate_tuple(t);
        auto o = oracle::follow(t.p, t.q, t.r, t.s);
        bool saysDisconnected = false;
        for (auto& why : rep.reasons) saysDisconnected |= why.rfind("beta disconnected", 0) == 0;
        if (saysDisconnected != (o.cycles > 1)) r.fail(t, "connectivity disagrees");
        if (rep.ok != oracle::valid(t.p, t.q, t.r, t.s)) r.fail(t, "validity disagrees");
        ok += rep.ok;
    }
    r.detail = std::to_string(n) + " tuples, " + std::to_string(ok) + " valid";
    return r;
}

Result coherence_census() {
    Result r;
    int n = 0, coherent = 0, q0 = 0;
    for (auto t : valid_tuples(12)) {
        ++n;
        auto d = build_diagram(t);
        bool want = oracle::coherent(t.p, t.q, t.r, t.s);
        if (is_coherent(d) != want) r.fail(t, "is_coherent disagrees with the pairwise scan");
        coherent += want;
        if (t.q == 0) {
            ++q0;
            if (classify(d).verdict != Verdict::LSpaceKnot) r.fail(t, "q = 0 tuple not LSpaceKnot");
        }
    }
    r.detail = std::to_string(n) + " valid, " + std::to_string(coherent) + " coherent, " + std::to_string(q0) +
               " with q = 0";
    return r;
}

Result boundary_suite() {
    Result r;
    const std::vector<std::string> ref{"dw", "Cw", "Cb", "Cz", "dz", "Ca"};
    int n = 0;
    for (auto t : valid_tuples(14)) {
        if (oracle::coherent(t.p, t.q, t.r, t.s)) continue;
        ++n;
        auto b = build_modified_hbs(build_diagram(t));
        if (b.branch_locus_circles().size() != 4) r.fail(t, "branch locus circles != 4");
        auto bd = b.boundary_surface();
        if (bd.annuli.size() != 6) {
            r.fail(t, "vertical annuli != 6");
            continue;
        }
        int chi = 0;
        for (auto& h : bd.horizontal) chi += h.chi;
        if (chi != 0 || !bd.connected || !bd.orientable) r.fail(t, "boundary is not one torus");
        if (!same_cyclic_order(annuli_cyclic_order(bd), ref)) r.fail(t, "annuli out of cyclic order");
        std::map<int, int> idx;
        for (auto& h : bd.horizontal) idx[h.root] = int(idx.size());
        for (size_t k = 0; k < bd.annuli.size(); ++k) {
            std::vector<std::pair<int, int>> edges;
            for (size_t j = 0; j < bd.annuli.size(); ++j)
                if (j != k) edges.push_back({idx[bd.annuli[j].compA], idx[bd.annuli[j].compB]});
            if (oracle::components(int(idx.size()), edges) != 1) r.fail(t, "core of " + bd.annuli[k].label + " separates");
        }
        if (!meridian_verification(bd).ok) r.fail(t, "meridian certificate disagrees");
    }
    r.detail = std::to_string(n) + " incoherent tuples";
    return r;
}

Result sink_suite() {
    Result r;
    int n = 0, c3 = 0, withSink = 0;
    for (auto t : valid_tuples(14)) {
        auto c = classify(t);
        if (c.verdict != Verdict::AlmostLSpaceKnot) continue;
        ++n;
        auto b = build_modified_hbs(build_diagram(t));
        auto sinks = oracle::sinks(b);
        if (sinks.size() != sink_disks(b).sinkSectors.size()) r.fail(t, "sink scan disagrees");
        if (sinks.size() > 1) r.fail(t, "more than one sink disk");
        if (!sac_sink_bound(b, c)) r.fail(t, "sink bound certificate fails");
        if (*c.caseTag != CaseTag::Case3 && !sinks.empty()) r.fail(t, "Case 1/2 diagram has a sink disk");
        if (*c.caseTag == CaseTag::Case1 && *c.sacCase == SacCase::CaseII) r.fail(t, "Case 1 with a chain");
        if (*c.caseTag == CaseTag::Case3) {
            ++c3;
            auto g = generalized_beta_tube(b);
            bool quads = true;
            for (int f : g.interiorSectors) quads &= b.regions()[f].size() == 2;
            if (!quads || !g.allQuads) r.fail(t, "tube has a non-quadrilateral sector");
        }
        withSink += !sinks.empty();
    }
    r.detail = std::to_string(n) + " SAC tuples, " + std::to_string(c3) + " Case 3, " + std::to_string(withSink) +
               " with one sink disk";
    return r;
}

Result split_suite() {
    Result r;
    int n = 0, moves = 0;
    for (auto t : valid_tuples(14)) {
        auto c = classify(t);
        if (c.caseTag != CaseTag::Case3) continue;
        ++n;
        auto rep = split_case3(build_modified_hbs(build_diagram(t)));
        if (rep.error.rfind("split failed", 0) == 0) {
            r.fail(t, rep.error);
            continue;
        }
        if (rep.postSinkSectors != 0) r.fail(t, "sink disk survives splitting");
        if (!(rep.horizontalBefore == rep.horizontalAfter)) r.fail(t, "horizontal boundary changed");
        moves += int(rep.moves.size());
    }
    r.detail = std::to_string(n) + " Case 3 tuples, " + std::to_string(moves) + " moves in total";
    return r;
}

std::string verdicts(const Certificate& c) {
    std::string s = to_string(c.classification.verdict) + "|" +
                    (c.classification.caseTag ? to_string(*c.classification.caseTag) : "-") + "|" + c.stage;
    for (auto& k : c.checks) s += "|" + k.name + "=" + (k.pass ? "1" : "0");
    if (c.sinkFree) s += *c.sinkFree ? "|sinkFree" : "|sink";
    return s;
}

Result symmetry_suite() {
    Result r;
    int n = 0, moved = 0;
    for (auto t : valid_tuples(12)) {
        ++n;
        auto im = hyperelliptic_involution(build_diagram(t)).tuple;
        moved += !(im == t);
        auto a = laminarity_pipeline(t), b = laminarity_pipeline(im);
        if (a.classification.verdict != b.classification.verdict ||
            a.classification.sacCase != b.classification.sacCase)
            r.fail(t, "classification changes under the involution");
        if (a.classification.caseTag != b.classification.caseTag) r.fail(t, "case tag changes");
        if (verdicts(a) != verdicts(b)) r.fail(t, "certificate verdicts change");
    }
    r.detail = std::to_string(n) + " tuples, " + std::to_string(moved) + " not fixed by the involution";
    return r;
}

Result determinism() {
    Result r;
    auto run = [](int jobs) {
        CensusSpec spec;
        spec.pMax = 14;
        spec.jobs = jobs;
        std::ostringstream o;
        run_census(spec, o);
        return o.str();
    };
    auto base = run(1);
    for (int jobs : {2, 4, 8})
        if (run(jobs) != base) r.fail({14, 0, 0, 0}, "census differs with " + std::to_string(jobs) + " jobs");
    r.detail = "p <= 14 census, " + std::to_string(base.size()) + " bytes, jobs 1/2/4/8";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
        {"validation matches the endpoint follower (p <= 12)", validation_oracle},
        {"coherence matches the pairwise scan (p <= 12)", coherence_census},
        {"boundary of N(B): 4 circles, 6 annuli, torus, order, cores (p <= 14)", boundary_suite},
        {"sink disks and tube for SAC diagrams (p <= 14)", sink_suite},
        {"Case 3 splitting is sink free and keeps the boundary (p <= 14)", split_suite},
        {"involution invariance (p <= 12)", symmetry_suite},
        {"census determinism across job counts", determinism},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Result r = criteria[i].second();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s  %s [%s, %.0f ms]%s%s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first,
                    r.detail.c_str(), ms, r.pass ? "" : " first failure ", r.firstBad.c_str());
        failed += !r.pass;
    }
    return failed;
}
