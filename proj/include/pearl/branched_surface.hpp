#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pearl/diagram.hpp"

namespace pearl {

// which side of an edge holds the merged sheet
enum class Merge { Left, Right, Disk };

enum class SectorKind { SurfaceRegion, AlphaDisk, BetaDisk };

struct Sector {
    int id;
    SectorKind kind;
    std::string polygon;  // bigon, quad, hexagon, octagon, other; empty for disks
    std::vector<int> boundary;  // edge ids, each signed +1/-1 via boundarySides
    std::vector<int> boundarySides;
    int coOrientation = 1;
    bool punctured = false;
    bool inS = false;
};

struct BranchSegment {
    int id;
    bool alpha;
    int carrier;  // alpha edge index or beta arc id
    int left, right, disk;  // adjacent sector ids
    int direction;  // sector the branch direction points into
};

struct RegionS {
    int beta0 = -1;
    std::vector<int> interior;  // beta_1..beta_n, innermost first
    std::vector<int> alpha0;
    std::vector<int> sectors;
};

// Sheets of B are the p surface regions plus the alpha disk DA and beta disk
// DB. Every edge (alpha edge or beta arc) sees three sheets meeting; the
// chamber model records which two of the six sheet-sides are glued.
class BranchedSurface {
public:
    explicit BranchedSurface(const Diagram& d);

    const Diagram& diagram() const { return d_; }
    int p() const { return d_.p(); }
    int DA() const { return d_.p(); }
    int DB() const { return d_.p() + 1; }
    int num_edges() const { return d_.p() + int(d_.arcs.size()); }
    int beta_edge(int arc) const { return d_.p() + arc; }

    const std::vector<Region>& regions() const { return regions_; }
    int region_of_seg(int seg) const { return seg2f_[seg]; }
    int beta_sign() const { return bsign_; }
    // oriented endpoints of a beta arc under the chosen orientation
    std::pair<Endpoint, Endpoint> beta_dir(int arc) const;

    int aL(int i) const { return aL_[i]; }
    int aR(int i) const { return aR_[i]; }
    int bL(int i) const { return bL_[i]; }
    int bR(int i) const { return bR_[i]; }
    int sign(int f) const { return sign_[f]; }
    int zf() const { return zf_; }
    int wf() const { return wf_; }

    Merge merge_alpha(int i) const;
    Merge merge_beta(int i) const;
    Merge merge_edge(int e) const;

    // identifies beta0, interior arcs, alpha0 and the sectors of S
    const RegionS& locate_S();
    const RegionS& region_S() const { return S_; }
    // flips co-orientation of the given surface regions, checking that the
    // branch directions on the region's frontier point out of it
    void reverse_coorientation(const std::vector<int>& region);

    std::vector<Sector> sectors() const;
    std::vector<BranchSegment> segments() const;

    // --- branch locus and boundary ---
    struct CircleStep {
        int edge, gin, gout;
    };
    using Circle = std::vector<CircleStep>;
    std::vector<Circle> branch_locus_circles() const;

    struct Annulus {
        std::string label;  // dw, dz, Cw, Ca, Cz, Cb
        int circle = -1;
        int compA, compB;
        bool mobius = false;
    };
    struct Horizontal {
        int root;
        int chi;
        int boundaryCount;
        bool punctureAdjacent = false;
    };
    struct Boundary {
        std::vector<Horizontal> horizontal;
        std::vector<Annulus> annuli;
        int chi = 0;
        bool connected = false;
        bool orientable = false;
    };
    Boundary boundary_surface() const;

    // vertex chamber model, exposed for the germ pairing helpers
    struct Chamber {
        std::array<int, 3> sides;
        std::array<int, 3> rays;
    };
    struct Vertex {
        std::array<Chamber, 4> ch;  // U-, U+, L-, L+
        std::vector<std::pair<int, int>> germChamber;  // germ -> chamber index
    };
    struct Wedge {
        std::array<std::array<int, 2>, 3> w;
        int cusp;
    };

private:
    int side_id(int face, int which) const { return 2 * face + which; }
    int germ(int edge, int end) const { return 2 * edge + end; }
    std::array<int, 2> germs_of(int edge) const { return {germ(edge, 0), germ(edge, 1)}; }
    Wedge wedge(int e) const;
    std::vector<Vertex> vertices() const;
    int germ_chamber(const Vertex& v, int g) const;

    Diagram d_;
    std::vector<Region> regions_;
    std::vector<int> seg2f_;
    int bsign_ = 1;
    std::vector<int> aL_, aR_, bL_, bR_, sign_;
    int zf_ = -1, wf_ = -1;
    RegionS S_;
    bool haveS_ = false;
};

// the annulus labels in circular order, or empty when the adjacency is not a
// single cycle
std::vector<std::string> annuli_cyclic_order(const BranchedSurface::Boundary& b);
bool same_cyclic_order(const std::vector<std::string>& got, const std::vector<std::string>& ref);

struct MeridianCert {
    bool ok = true;
    std::vector<std::pair<std::string, int>> cuts;  // label -> components after cutting its core
    std::string offending;
};
MeridianCert meridian_verification(const BranchedSurface::Boundary& b);

// validate + orient + build + locate S + reverse S
BranchedSurface build_modified_hbs(const Diagram& d);

}  // namespace pearl
