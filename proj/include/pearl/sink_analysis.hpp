#pragma once
#include <optional>
#include <vector>

#include "pearl/branched_surface.hpp"
#include "pearl/classify.hpp"

namespace pearl {

struct SinkDiskReport {
    std::vector<int> sinkSectors;
    // quad regions next to the z-side inconsistent arc, the only places a
    // sink disk can appear in a strongly almost coherent diagram
    std::vector<int> candidates;
};

SinkDiskReport sink_disks(const BranchedSurface& b);
bool sac_sink_bound(const BranchedSurface& b, const Classification& c);

struct GeneralizedBetaTube {
    std::vector<int> betaSi, betaSo;  // vertical arcs of the two rails
    int siStart = -1, siEnd = -1, soStart = -1, soEnd = -1;  // alpha points
    std::vector<int> alpha1, alpha1p;  // alpha edges
    std::vector<int> interiorSectors;
    bool degenerate = false;  // both rails empty and alpha1 == alpha1'
    bool allQuads = false;
    bool beta1NeighboursVertical = false;
    bool beta0OtherVertical = false;
};

// needs a Case-3 surface built by build_modified_hbs
GeneralizedBetaTube generalized_beta_tube(const BranchedSurface& b);

}  // namespace pearl
