#pragma once
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pearl {

// thrown when internal bookkeeping contradicts itself (exit code 3 in the cli)
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FourTuple {
    int p = 1, q = 0, r = 0, s = 0;
    auto operator<=>(const FourTuple&) const = default;
    std::string str() const;
};
std::optional<FourTuple> parse_tuple(const std::string& text);

enum class Side { Bottom, Top };

struct Endpoint {
    Side side;
    int pos;
    bool operator==(const Endpoint&) const = default;
};

enum class ArcKind { BottomRainbow, TopRainbow, Vertical };

struct BetaArc {
    ArcKind kind;
    int depth;  // rainbows: 1 = outermost; verticals: left-to-right index
    Endpoint a, b;  // rainbows left->right, verticals bottom->top
    bool rainbow() const { return kind != ArcKind::Vertical; }
};

struct TraceResult {
    int cycleCount = 0;
    int horizontalWinding = 0;
    int verticalWinding = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> reasons;
};

// Region boundary step: the region walks along alpha segment `seg`, then
// along beta arc `arc` entering it at endpoint `in` and leaving at `out`.
// seg < p is the bottom segment between positions seg and seg+1,
// seg >= p is the top segment between positions seg-p and seg-p+1.
struct RegionStep {
    int seg;
    int arc;
    Endpoint in, out;
};
using Region = std::vector<RegionStep>;

struct Diagram {
    FourTuple t;
    std::vector<BetaArc> arcs;
    std::vector<int> glue;  // top position j -> bottom position glue[j]
    std::vector<int> atBottom, atTop;  // arc id per position
    // beta^+ traversal, fixed by starting at bottom position 0
    std::vector<int> order;
    std::vector<bool> forward;  // arc traversed a->b
    TraceResult trace;
    int zSeg = -1, wSeg = -1;  // bottom seg q-1 and top seg r+q-1 when q >= 1

    int p() const { return t.p; }
    int alpha_point(Endpoint e) const;
    int arc_at(Endpoint e) const;
    Endpoint other_end(int arc, Endpoint e) const;
    // arc ids of one nest, innermost first
    std::vector<int> nest(Side side) const;
    // +1 when the rainbow is traversed left to right under beta^+
    int rainbow_dir(int arc) const;
    std::array<int, 2> alpha_points(int arc) const;
};

TraceResult trace_beta(const Diagram& d);
ValidationReport validate_tuple(const FourTuple& t);
Diagram build_diagram(const FourTuple& t);  // throws InvalidInput
// layout only, no validation; used by the oracles and validate_tuple
Diagram layout_diagram(const FourTuple& t);

std::vector<Region> complement_regions(const Diagram& d);
int region_of_segment(const std::vector<Region>& regions, int seg);

struct Bigon {
    int region;
    bool hasZ, hasW;
};
std::vector<Bigon> bigon_scan(const Diagram& d);

struct ManifoldId {
    bool s3;
    int m, n;
    std::string str() const;
};
ManifoldId ambient_manifold(const Diagram& d);

// 180 degree rotation. Several tuples can describe the same diagram; the
// image is the lexicographically smallest of them.
struct InvolutionImage {
    FourTuple tuple;
    int shiftBottom, shiftTop;
};
InvolutionImage hyperelliptic_involution(const Diagram& d);
// smallest tuple describing the same diagram as d
FourTuple canonical_tuple(const Diagram& d);

// sign choices (alpha, beta) in {+1,-1}^2 for which the w bigon is
// alpha-source and beta-sink
std::vector<std::array<int, 2>> admissible_orientations(const Diagram& d);
struct OrientedDiagram {
    Diagram d;
    int alphaSign, betaSign;
};
OrientedDiagram orient_diagram(const Diagram& d);

std::vector<FourTuple> valid_tuples(int pmax, int pmin = 1);

}  // namespace pearl
