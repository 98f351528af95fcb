#include "pearl/classify.hpp"

#include <algorithm>

namespace pearl {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::LSpaceKnot: return "LSpaceKnot";
        case Verdict::AlmostLSpaceKnot: return "AlmostLSpaceKnot";
        case Verdict::OtherNonLSpace: return "OtherNonLSpace";
        default: return "Invalid";
    }
}
std::string to_string(SacCase c) { return c == SacCase::CaseI ? "CaseI" : "CaseII"; }
std::string to_string(CaseTag c) {
    return c == CaseTag::Case1 ? "Case1" : c == CaseTag::Case2 ? "Case2" : "Case3";
}

// Minority direction of the nest. With a tie the arc met later when
// counting outward from the innermost one is the odd one out, so the
// innermost arc's direction counts as the majority.
static std::vector<int> minority(const Diagram& d, Side side) {
    auto ids = d.nest(side);
    if (ids.empty()) return {};
    int plus = 0, minus = 0;
    for (int i : ids) (d.rainbow_dir(i) == 1 ? plus : minus)++;
    if (plus == 0 || minus == 0) return {};
    int mino = plus != minus ? (plus < minus ? 1 : -1) : -d.rainbow_dir(ids[0]);
    std::vector<int> out;
    for (int i : ids)
        if (d.rainbow_dir(i) == mino) out.push_back(i);
    return out;
}

InconsistentArcs inconsistent_arcs(const Diagram& d) {
    return {minority(d, Side::Bottom), minority(d, Side::Top)};
}

bool is_coherent(const Diagram& d) {
    auto ia = inconsistent_arcs(d);
    return ia.z.empty() && ia.w.empty();
}

static bool share(const Diagram& d, int a, int b) {
    auto x = d.alpha_points(a), y = d.alpha_points(b);
    for (int u : x)
        for (int v : y)
            if (u == v) return true;
    return false;
}

std::optional<SacCase> strongly_almost_coherent(const Diagram& d) {
    auto ia = inconsistent_arcs(d);
    if (ia.z.size() != 1 || ia.w.size() != 1) return std::nullopt;
    int b = ia.z[0], t = ia.w[0];
    if (share(d, b, t)) return SacCase::CaseI;
    // chain b - (top rainbow) - (bottom rainbow) - t
    for (int r1 : d.nest(Side::Top)) {
        if (r1 == t || !share(d, r1, b)) continue;
        for (int r2 : d.nest(Side::Bottom))
            if (r2 != b && share(d, r2, r1) && share(d, r2, t)) return SacCase::CaseII;
    }
    return std::nullopt;
}

CaseTag case_tag(const Diagram& d) {
    auto sac = strongly_almost_coherent(d);
    if (!sac) throw StructuralError("case_tag needs a strongly almost coherent diagram");
    auto ia = inconsistent_arcs(d);
    bool innermost = ia.z[0] == d.nest(Side::Bottom)[0] || ia.w[0] == d.nest(Side::Top)[0];
    if (innermost) return CaseTag::Case1;
    return *sac == SacCase::CaseII ? CaseTag::Case2 : CaseTag::Case3;
}

Classification classify(const Diagram& d) {
    Classification c;
    c.tuple = d.t;
    c.inconsistent = inconsistent_arcs(d);
    if (c.inconsistent.z.empty() && c.inconsistent.w.empty()) {
        c.verdict = Verdict::LSpaceKnot;
        return c;
    }
    c.sacCase = strongly_almost_coherent(d);
    if (!c.sacCase) {
        c.verdict = Verdict::OtherNonLSpace;
        return c;
    }
    c.verdict = Verdict::AlmostLSpaceKnot;
    c.caseTag = case_tag(d);
    return c;
}

Classification classify(const FourTuple& t) {
    auto rep = validate_tuple(t);
    if (!rep.ok) {
        Classification c;
        c.tuple = t;
        c.reasons = rep.reasons;
        return c;
    }
    return classify(build_diagram(t));
}

}  // namespace pearl
