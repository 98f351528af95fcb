#include <doctest.h>

#include <sstream>

#include "pearl/report.hpp"

using namespace pearl;

namespace {
std::string census(int pmax, int jobs, Format f = Format::Json) {
    CensusSpec spec;
    spec.pMax = pmax;
    spec.jobs = jobs;
    spec.format = f;
    std::ostringstream o;
    run_census(spec, o);
    return o.str();
}

size_t count(const std::string& s, const std::string& what) {
    size_t n = 0;
    for (size_t i = s.find(what); i != std::string::npos; i = s.find(what, i + 1)) ++n;
    return n;
}
}  // namespace

TEST_SUITE("report") {

TEST_CASE("json round trips byte for byte") {
    for (auto t : {FourTuple{7, 2, 0, 3}, FourTuple{5, 2, 0, 1}, FourTuple{9, 4, 0, 1}, FourTuple{5, 0, 0, 2}}) {
        auto d = build_diagram(t);
        for (auto j : {to_json(d), to_json(laminarity_pipeline(t)), to_json(classify(t))}) {
            auto s = dump(j);
            CHECK(dump(json::parse(s)) == s);
        }
        if (!is_coherent(d)) {
            auto s = dump(to_json(build_modified_hbs(d)));
            CHECK(dump(json::parse(s)) == s);
            CHECK(json::parse(s)["schema"] == "pearl-bs/1");
        }
        CHECK(to_json(d)["schema"] == "pearl-diagram/1");
    }
}

TEST_CASE("classification json shape") {
    auto j = to_json(classify(FourTuple{7, 2, 0, 3}));
    CHECK(j["tuple"] == json::array({7, 2, 0, 3}));
    CHECK(j["verdict"] == "AlmostLSpaceKnot");
    CHECK(j["sacCase"] == "CaseI");
    CHECK(j["caseTag"] == "Case3");
    CHECK(j["inconsistent"]["z"].size() == 1);
    CHECK(j["inconsistent"]["w"].size() == 1);
    CHECK(to_json(classify(FourTuple{5, 0, 0, 2}))["caseTag"].is_null());
}

TEST_CASE("certificates") {
    auto lspace = laminarity_pipeline({5, 0, 0, 2});
    CHECK(lspace.stage == "L-space knot; branched-surface stage skipped");
    CHECK(lspace.checks.empty());

    auto c3 = laminarity_pipeline({13, 3, 1, 7});
    CHECK(c3.all_pass());
    CHECK(c3.circles == 4);
    REQUIRE(c3.split);
    CHECK(c3.sinkFree == true);
    CHECK(to_json(c3)["split"]["moves"].size() == c3.split->moves.size());

    // known limitation beyond the verified range: reported, not hidden
    auto far = laminarity_pipeline({15, 4, 2, 5});
    CHECK_FALSE(far.all_pass());
    REQUIRE(far.first_failure());
    CHECK(far.first_failure()->name == "split_terminates");
    CHECK_FALSE(far.first_failure()->witness.empty());
}

TEST_CASE("census stream") {
    auto s = census(8, 1);
    std::istringstream in(s);
    std::string line;
    int lines = 0;
    json last;
    while (std::getline(in, line)) {
        last = json::parse(line);
        ++lines;
        if (!last.contains("summary")) {
            CHECK(last["schema"] == "pearl-cert/1");
            if (last.contains("branchedSurface")) CHECK(last["branchedSurface"]["circles"] == 4);
        }
    }
    REQUIRE(last.contains("summary"));
    CHECK(last["summary"]["total"] == lines - 1);
    CHECK(int(valid_tuples(8).size()) == lines - 1);

    CHECK(census(8, 4) == s);
    CHECK(census(8, 3, Format::Csv) == census(8, 1, Format::Csv));
}

TEST_CASE("empty census") {
    CensusSpec spec;
    spec.pMin = 6;
    spec.pMax = 5;
    std::ostringstream o;
    auto sum = run_census(spec, o);
    CHECK(sum.total == 0);
    CHECK(o.str() == "{\"summary\":{\"AlmostLSpaceKnot\":0,\"Case1\":0,\"Case2\":0,\"Case3\":0,\"LSpaceKnot\":0,"
                     "\"OtherNonLSpace\":0,\"failures\":0,\"total\":0}}\n");
}

TEST_CASE("csv rows") {
    auto s = census(5, 2, Format::Csv);
    CHECK(s.rfind(csv_header() + "\n", 0) == 0);
    CHECK(count(s, "\n") == valid_tuples(5).size() + 2);
}

TEST_CASE("svg") {
    auto flat = render_svg(build_diagram({5, 0, 0, 2}));
    CHECK(flat.rfind("<svg", 0) == 0);
    CHECK(count(flat, "stroke=\"#1d3557\" stroke-width=\"1.6\"") == 5);
    CHECK(count(flat, "<circle") == 0);

    auto d = build_diagram({13, 3, 1, 7});
    auto b = build_modified_hbs(d);
    auto full = render_svg(d, &b);
    CHECK(count(full, "#f4a261") > 0);  // region S
    CHECK(count(full, "#90be6d") > 0);  // tube
    CHECK(count(full, ">z</text>") == 1);
    CHECK(count(full, ">w</text>") == 1);
}

}
