#pragma once
#include <vector>

#include "pearl/branched_surface.hpp"

namespace oracle {

// sink test read straight off the branch segments: every segment touching
// an unpunctured region must point into it
inline std::vector<int> sinks(const pearl::BranchedSurface& b) {
    std::vector<int> out;
    auto segs = b.segments();
    for (auto& s : b.sectors()) {
        if (s.kind != pearl::SectorKind::SurfaceRegion || s.punctured) continue;
        bool sink = true;
        for (auto& g : segs)
            if ((g.left == s.id || g.right == s.id) && g.direction != s.id) sink = false;
        if (sink) out.push_back(s.id);
    }
    return out;
}

}  // namespace oracle
