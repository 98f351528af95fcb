#include <doctest.h>

#include <algorithm>
#include <set>

#include "sink_oracle.hpp"
#include "pearl/classify.hpp"
#include "pearl/sheet_complex.hpp"
#include "pearl/sink_analysis.hpp"
#include "pearl/splitting.hpp"

using namespace pearl;

namespace {
struct Sac {
    FourTuple t;
    Classification c;
};
std::vector<Sac> sac(int pmax) {
    std::vector<Sac> out;
    for (auto t : valid_tuples(pmax)) {
        auto c = classify(t);
        if (c.verdict == Verdict::AlmostLSpaceKnot) out.push_back({t, c});
    }
    return out;
}
}  // namespace

TEST_SUITE("sink_analysis") {

TEST_CASE("sink disks agree with the segment scan and the sheet complex") {
    for (auto& [t, c] : sac(14)) {
        CAPTURE(t.str());
        auto b = build_modified_hbs(build_diagram(t));
        auto rep = sink_disks(b);
        auto want = oracle::sinks(b);
        auto got = rep.sinkSectors;
        std::sort(got.begin(), got.end());
        CHECK(got == want);
        CHECK(int(sheet_form(b).sinks().size()) == int(want.size()));
        CHECK(sac_sink_bound(b, c));
        CHECK(want.size() <= 1);
        if (*c.caseTag != CaseTag::Case3) CHECK(want.empty());
        for (int f : want) {
            CHECK(std::count(rep.candidates.begin(), rep.candidates.end(), f) == 1);
            CHECK(b.regions()[f].size() == 2);  // two alpha and two beta sides
            bool touchesZ = false;
            for (auto& st : b.regions()[f]) touchesZ |= st.arc == c.inconsistent.z[0];
            CHECK(touchesZ);
        }
    }
}

TEST_CASE("generalized beta tube") {
    int degenerate = 0, total = 0;
    for (auto& [t, c] : sac(14)) {
        if (*c.caseTag != CaseTag::Case3) continue;
        CAPTURE(t.str());
        ++total;
        auto b = build_modified_hbs(build_diagram(t));
        auto g = generalized_beta_tube(b);
        CHECK(g.allQuads);
        for (int f : g.interiorSectors) CHECK(b.regions()[f].size() == 2);
        if (g.degenerate) {
            ++degenerate;
            CHECK(g.interiorSectors.empty());
            CHECK(sink_disks(b).sinkSectors.empty());
        } else {
            CHECK(g.beta1NeighboursVertical);
            CHECK(g.beta0OtherVertical);
            CHECK(sink_disks(b).sinkSectors.size() == 1);
        }
    }
    CHECK(total == 42);
    CHECK(degenerate == 14);
}

}

TEST_SUITE("splitting") {

TEST_CASE("refinement keeps the horizontal boundary and sinks") {
    auto b = build_modified_hbs(build_diagram({13, 3, 1, 7}));
    auto E = sheet_form(b);
    E.check();
    auto base = E.horizontal_summary();
    CHECK(base.cuspCircles == 4);
    for (int L = 1; L <= 3; ++L) {
        auto R = refine(E, L);
        R.check();
        CHECK(R.horizontal_summary() == base);
        CHECK(R.sinks().size() == E.sinks().size());
    }
}

TEST_CASE("beta0 and the arcs it encloses stay put") {
    auto b = build_modified_hbs(build_diagram({13, 3, 1, 7}));
    const auto& S = b.region_S();
    CHECK_THROWS_AS(check_movable(b, S.beta0), InvalidInput);
    for (int a : S.interior) CHECK_THROWS_AS(check_movable(b, a), InvalidInput);
}

TEST_CASE("Case 3 splitting removes the sink disk") {
    for (auto& [t, c] : sac(14)) {
        if (*c.caseTag != CaseTag::Case3) continue;
        CAPTURE(t.str());
        auto b = build_modified_hbs(build_diagram(t));
        auto plan = plan_split(b);
        auto rep = split_case3(b);
        CHECK(rep.ok);
        CHECK(rep.error.empty());
        CHECK(rep.postSinkSectors == 0);
        CHECK(rep.horizontalAfter == rep.horizontalBefore);
        if (rep.degenerate) {
            CHECK(rep.moves.empty());
            continue;
        }
        CHECK(rep.preSinkSectors == 1);
        // one move per interior tube arc plus one per arc of S'
        CHECK(rep.moves.size() == plan.tubeInterior.size() + b.region_S().interior.size());
        CHECK(rep.runs == int(plan.runs.size()));
        std::set<int> fixed(b.region_S().interior.begin(), b.region_S().interior.end());
        fixed.insert(b.region_S().beta0);
        for (auto& m : rep.moves) {
            CHECK(fixed.count(m.movedArc) == 0);
            CHECK(plan.targets.count(m.targetArc) == 1);
        }
    }
}

TEST_CASE("pushing a run by hand matches split_case3") {
    auto b = build_modified_hbs(build_diagram({11, 3, 1, 4}));
    auto plan = plan_split(b);
    REQUIRE(plan.runs.size() == 2);
    Splitter sp(b, plan);
    auto before = sp.complex().horizontal_summary();
    size_t moved = 0;
    for (int i = 0; i < 2; ++i) {
        moved += sp.push_run(i).size();
        CHECK(sp.complex().horizontal_summary() == before);
        sp.complex().check();
    }
    CHECK(sp.complex().sinks().empty());
    CHECK(moved == split_case3(b).moves.size());
}

}
