#pragma once
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearl/branched_surface.hpp"

namespace pearl {

// A branched surface given as stacks of sheets over a cellulated base.
// Each base cell carries m sheets. Each base edge has an A side (cells
// traversing it positively) and a B side; the sheets of both sides are
// concatenated bottom to top and matched by an ordered list of links:
// (1,1) glues one sheet to one sheet, (1,2)/(2,1) is a branch where the
// single sheet h splits into the pair (lo, hi) with a cusp between them.
class SheetComplex {
public:
    struct Cell {
        std::vector<std::pair<int, int>> bd;  // (edge, direction)
        int m = 1;
        bool punct = false;
        int parent = -1;  // base cell before refinement
        std::vector<std::pair<int, int>> depth;  // (parent side, layer)
    };
    struct Edge {
        std::array<int, 2> v{-1, -1};
        std::vector<std::pair<int, int>> A, B;  // (cell, direction)
        std::vector<std::pair<int, int>> links;
        int parent = -1;  // base edge a piece belongs to
        int piece = -1;
    };
    struct Sheet {
        int cell, pos, k;
        bool operator==(const Sheet&) const = default;
    };
    struct Link {
        std::vector<Sheet> a, b;
    };

    std::vector<Cell> cells;
    std::vector<Edge> edges;
    int layers = 0;  // refinement depth, 0 for the base complex
    // refined cells by (kind, parent, corner or side, i, j); kind 0 grid, 1 collar, 2 center
    std::map<std::array<int, 5>, int> refinedCell;

    std::vector<Link> links(int e) const;
    int corner(int c, int pos, int end) const;
    void check() const;

    struct Sectors {
        std::vector<int> root;  // per sheet id
        std::vector<int> base;  // first sheet id of each cell
    };
    Sectors sectors() const;
    // sink disk sectors as lists of (cell, sheet level)
    std::vector<std::vector<std::pair<int, int>>> sinks() const;

    struct HComponent {
        int chi = 0;
        int lines = 0;  // boundary circles running along cusps or punctures
    };
    struct HSummary {
        int cuspCircles = 0;
        std::vector<std::pair<int, int>> comps;  // sorted (chi, boundary lines)
        bool operator==(const HSummary&) const = default;
    };
    HSummary horizontal_summary() const;

private:
    int side_pos(int c, int e, int dr) const;
};

// The modified Heegaard branched surface in sheet form: cells 0..p-1 are the
// surface regions, p the alpha disk, p+1 the beta disk; edges 0..p-1 alpha,
// p+i beta arc i.
SheetComplex sheet_form(const BranchedSurface& b);

// Refines every cell into L nested layers: an L x L grid at each corner, L
// collar strips along each side and a center; each edge becomes 2L+1 pieces.
SheetComplex refine(const SheetComplex& E, int L);

struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
    int cell = -1;
};

// Splits along a disk occupying one sheet over each cell of `region`,
// starting at the branch of each start edge. Returns the level per cell.
std::map<int, int> split_along(SheetComplex& s, const std::set<int>& starts, const std::set<int>& region);

}  // namespace pearl
