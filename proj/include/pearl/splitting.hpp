#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pearl/branched_surface.hpp"
#include "pearl/sheet_complex.hpp"
#include "pearl/sink_analysis.hpp"

namespace pearl {

enum class Extent { Full, PartialAtAlpha1 };

struct PushMove {
    int movedArc;
    int targetArc;
    Extent extent;
    int alphaEdge = -1;  // the alpha1 edge for partial pushes
};

// A run is a maximal stretch of beta consisting of arcs to be pushed
// (interior arcs of the generalized tube and the arcs of S' inside beta0').
// All arcs of a run are pushed by one tongue-shaped split.
struct PushRun {
    std::vector<int> arcs;
    std::set<int> cont;  // beta arcs adjacent to the run at its two ends
};

struct SplitPlan {
    std::set<int> W;  // tube and S' regions
    std::set<int> targets;  // beta_si arcs, beta0' and beta0
    std::set<int> tubeInterior, sPrimeArcs;
    std::vector<PushRun> runs;  // in push order
    GeneralizedBetaTube tube;
};

SplitPlan plan_split(const BranchedSurface& b);

struct SplitReport {
    std::vector<PushMove> moves;
    int runs = 0;
    SinkDiskReport preSinkDisks, postSinkDisks;
    int preSinkSectors = 0, postSinkSectors = 0;  // counted on the carried complex
    SheetComplex::HSummary horizontalBefore, horizontalAfter;
    bool degenerate = false;
    bool ok = false;
    std::string error;
};

// rejects arcs of the top nest up to beta0, which must stay in place
void check_movable(const BranchedSurface& b, int arc);

// Carries out the pushes one run at a time on a refined sheet complex.
class Splitter {
public:
    Splitter(const BranchedSurface& b, const SplitPlan& plan);
    // pushes run `index` of the plan; throws SplitError on a bad rewrite
    std::vector<PushMove> push_run(int index);
    const SheetComplex& complex() const { return R_; }
    const std::set<int>& pushed() const { return pushed_; }

private:
    const BranchedSurface& b_;
    const SplitPlan& plan_;
    SheetComplex E0_, R_;
    std::set<int> pushed_;
    int done_ = 0;
};

SplitReport split_case3(const BranchedSurface& b);

}  // namespace pearl
