#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "pearl/report.hpp"

using namespace pearl;

namespace {

enum Exit { Ok = 0, Invalid = 1, Failed = 2, Internal = 3 };

struct Opts {
    std::string tuple;
    int pMin = 1, pMax = 8;
    std::string out;
    std::string format = "json";
    int jobs = 1;
    long seed = 0;  // accepted for compatibility, the pipeline is deterministic
    bool surface = false;
    std::string verdict, caseTag;
};

// stdout unless --out was given; an unwritable path is an input error
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw InvalidInput("cannot write " + path);
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

FourTuple need_tuple(const Opts& o) {
    if (o.tuple.empty()) throw InvalidInput("--tuple p,q,r,s is required");
    auto t = parse_tuple(o.tuple);
    if (!t) throw InvalidInput("malformed tuple '" + o.tuple + "'");
    return *t;
}

int cmd_validate(const Opts& o) {
    auto t = need_tuple(o);
    auto rep = validate_tuple(t);
    json j = {{"tuple", json::array({t.p, t.q, t.r, t.s})}, {"ok", rep.ok}, {"reasons", rep.reasons}};
    if (t.p >= 1 && t.q >= 0 && 2 * t.q <= t.p) {
        auto tr = trace_beta(layout_diagram(t));
        j["cycles"] = tr.cycleCount;
        j["winding"] = json::array({tr.horizontalWinding, tr.verticalWinding});
    }
    Sink s(o.out);
    s.os() << dump(j) << '\n';
    return rep.ok ? Ok : Invalid;
}

int cmd_classify(const Opts& o) {
    auto c = classify(need_tuple(o));
    Sink s(o.out);
    s.os() << dump(to_json(c)) << '\n';
    return c.verdict == Verdict::Invalid ? Invalid : Ok;
}

int cmd_build(const Opts& o) {
    auto d = build_diagram(need_tuple(o));
    Sink s(o.out);
    if (!o.surface) {
        s.os() << dump(to_json(d)) << '\n';
        return Ok;
    }
    if (is_coherent(d)) throw InvalidInput("coherent diagram: no modified branched surface");
    s.os() << dump(to_json(build_modified_hbs(d))) << '\n';
    return Ok;
}

int emit_cert(const Certificate& c, const Opts& o) {
    Sink s(o.out);
    s.os() << dump(to_json(c)) << '\n';
    if (auto f = c.first_failure()) {
        std::cerr << "verification failed: " << f->name << (f->witness.empty() ? "" : " (" + f->witness + ")") << '\n';
        return Failed;
    }
    return Ok;
}

int cmd_verify(const Opts& o) {
    auto t = need_tuple(o);
    auto c = laminarity_pipeline(t);
    if (c.classification.verdict == Verdict::Invalid) {
        std::cerr << "invalid tuple:";
        for (auto& r : c.classification.reasons) std::cerr << ' ' << r << ';';
        std::cerr << '\n';
        return Invalid;
    }
    return emit_cert(c, o);
}

int cmd_split(const Opts& o) {
    auto t = need_tuple(o);
    auto cl = classify(t);
    if (cl.verdict != Verdict::AlmostLSpaceKnot || cl.caseTag != CaseTag::Case3)
        throw InvalidInput("split needs a Case 3 strongly almost coherent tuple, got " + to_string(cl.verdict) +
                           (cl.caseTag ? " " + to_string(*cl.caseTag) : ""));
    return emit_cert(laminarity_pipeline(t), o);
}

std::optional<Verdict> parse_verdict(const std::string& v) {
    for (auto x : {Verdict::LSpaceKnot, Verdict::AlmostLSpaceKnot, Verdict::OtherNonLSpace})
        if (to_string(x) == v) return x;
    if (v.empty()) return std::nullopt;
    throw InvalidInput("unknown verdict '" + v + "'");
}

std::optional<CaseTag> parse_case(const std::string& v) {
    for (auto x : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3})
        if (to_string(x) == v) return x;
    if (v.empty()) return std::nullopt;
    throw InvalidInput("unknown case '" + v + "'");
}

int cmd_census(const Opts& o) {
    CensusSpec spec;
    spec.pMin = o.pMin;
    spec.pMax = o.pMax;
    spec.format = o.format == "csv" ? Format::Csv : Format::Json;
    spec.jobs = o.jobs;
    if (const char* env = std::getenv("PEARL_JOBS")) spec.jobs = std::max(1, std::atoi(env));
    spec.verdict = parse_verdict(o.verdict);
    spec.caseTag = parse_case(o.caseTag);
    if (spec.pMax > 40) throw InvalidInput("--p-max is limited to 40");
    Sink s(o.out);
    auto sum = run_census(spec, s.os());
    return sum.failures ? Failed : Ok;
}

int cmd_render(const Opts& o) {
    auto d = build_diagram(need_tuple(o));
    Sink s(o.out);
    if (o.surface && !is_coherent(d)) {
        auto b = build_modified_hbs(d);
        s.os() << render_svg(d, &b);
    } else {
        s.os() << render_svg(d);
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pearl: (1,1) diagrams, branched surfaces and sink disks"};
    app.require_subcommand(1);
    Opts o;
    auto tupleOpt = [&](CLI::App* c) { c->add_option("--tuple", o.tuple, "p,q,r,s"); };
    auto outOpt = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };
    auto seedOpt = [&](CLI::App* c) { c->add_option("--seed", o.seed, "reserved, unused"); };

    std::vector<std::pair<CLI::App*, int (*)(const Opts&)>> cmds;
    auto add = [&](const char* name, const char* help, int (*fn)(const Opts&)) {
        auto* c = app.add_subcommand(name, help);
        outOpt(c);
        seedOpt(c);
        cmds.push_back({c, fn});
        return c;
    };
    tupleOpt(add("validate", "check that a tuple gives a connected primitive beta curve", cmd_validate));
    tupleOpt(add("classify", "coherence verdict and case tag", cmd_classify));
    auto* build = add("build", "diagram JSON, or the branched surface with --surface", cmd_build);
    tupleOpt(build);
    build->add_flag("--surface", o.surface, "emit the modified branched surface");
    tupleOpt(add("verify", "run every check and print the certificate", cmd_verify));
    tupleOpt(add("split", "run the Case 3 splitting", cmd_split));
    auto* census = add("census", "certificates for all valid tuples in a range", cmd_census);
    census->add_option("--p-max", o.pMax, "largest p")->check(CLI::Range(0, 1000));
    census->add_option("--p-min", o.pMin, "smallest p");
    census->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--jobs", o.jobs, "worker threads (PEARL_JOBS overrides)")->check(CLI::PositiveNumber);
    census->add_option("--verdict", o.verdict, "keep only this verdict");
    census->add_option("--case", o.caseTag, "keep only this case tag");
    auto* render = add("render", "SVG drawing of the diagram", cmd_render);
    tupleOpt(render);
    render->add_flag("--surface", o.surface, "add branch directions, region S and the tube");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Invalid;
    }
    try {
        for (auto& [c, fn] : cmds)
            if (c->parsed()) return fn(o);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return Invalid;
    } catch (const StructuralError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Internal;
}
