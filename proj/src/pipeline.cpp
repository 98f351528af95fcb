#include <algorithm>

#include "pearl/certificate.hpp"

namespace pearl {

namespace {
void check(Certificate& c, std::string name, bool pass, std::string witness) {
    c.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}
}  // namespace

Certificate laminarity_pipeline(const FourTuple& t) {
    Certificate c;
    c.tuple = t;
    c.classification = classify(t);
    const auto& cl = c.classification;
    if (cl.verdict == Verdict::Invalid) {
        c.stage = "invalid tuple";
        return c;
    }
    if (cl.verdict == Verdict::LSpaceKnot) {
        c.stage = "L-space knot; branched-surface stage skipped";
        return c;
    }

    Diagram d = build_diagram(t);
    BranchedSurface b = build_modified_hbs(d);
    c.circles = int(b.branch_locus_circles().size());
    auto bd = b.boundary_surface();
    c.annuli = int(bd.annuli.size());
    c.boundaryChi = bd.chi;
    c.cyclicOrder = annuli_cyclic_order(bd);
    c.meridian = meridian_verification(bd);
    check(c, "branch_locus_circles", c.circles == 4, "circles=" + std::to_string(c.circles));
    check(c, "vertical_annuli", c.annuli == 6, "annuli=" + std::to_string(c.annuli));
    check(c, "boundary_torus", bd.chi == 0 && bd.connected && bd.orientable,
          "chi=" + std::to_string(bd.chi) + " connected=" + std::to_string(bd.connected) +
              " orientable=" + std::to_string(bd.orientable));
    std::string ord;
    for (auto& s : c.cyclicOrder) ord += (ord.empty() ? "" : ",") + s;
    check(c, "annuli_cyclic_order", same_cyclic_order(c.cyclicOrder, {"dw", "Cw", "Cb", "Cz", "dz", "Ca"}),
          "order=" + (ord.empty() ? std::string("none") : ord));
    check(c, "meridian", c.meridian->ok, "separating core " + c.meridian->offending);

    if (cl.verdict != Verdict::AlmostLSpaceKnot) {
        c.stage = "boundary checks only; sink analysis needs a strongly almost coherent diagram";
        return c;
    }

    c.sinks = sink_disks(b);
    int nsinks = int(c.sinks->sinkSectors.size());
    check(c, "sac_sink_bound", sac_sink_bound(b, cl), "sinks=" + join(c.sinks->sinkSectors));
    if (*cl.caseTag == CaseTag::Case1)
        check(c, "case1_not_chain", *cl.sacCase == SacCase::CaseI, "case 1 with a chain of rainbow arcs");
    if (*cl.caseTag != CaseTag::Case3) {
        check(c, "no_sink_disk", nsinks == 0, "sinks=" + join(c.sinks->sinkSectors));
        c.sinkFree = nsinks == 0;
        c.stage = "sink analysis";
        return c;
    }

    c.tube = generalized_beta_tube(b);
    check(c, "tube_quads", c.tube->allQuads, "tube sectors=" + join(c.tube->interiorSectors));
    if (!c.tube->degenerate)
        check(c, "tube_vertical_arcs", c.tube->beta1NeighboursVertical && c.tube->beta0OtherVertical,
              "beta1 neighbours vertical=" + std::to_string(c.tube->beta1NeighboursVertical) +
                  " beta0 other vertical=" + std::to_string(c.tube->beta0OtherVertical));
    c.split = split_case3(b);
    const auto& sp = *c.split;
    bool aborted = sp.error.rfind("split failed", 0) == 0;
    check(c, "split_terminates", !aborted, sp.error);
    if (!aborted) {
        check(c, "horizontal_boundary_invariant", sp.horizontalBefore == sp.horizontalAfter, "summary changed");
        check(c, "post_split_sink_free", sp.postSinkSectors == 0, "sinks=" + std::to_string(sp.postSinkSectors));
    }
    c.sinkFree = sp.ok && sp.postSinkSectors == 0;
    c.stage = "split";
    return c;
}

}  // namespace pearl
