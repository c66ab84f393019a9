#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sfpp {

// Edge families of a width-two stretch. Vertices are (column, row), row in {0,1}.
//   V: (i,0)-(i+1,1)   W: (i,1)-(i+1,0)
//   X: (i,0)-(i+1,0)   Y: (i,1)-(i+1,1)
//   Z: (i,0)-(i,1), one rung per column including column 0
enum class Edge { V = 0, W = 1, X = 2, Y = 3, Z = 4 };

inline constexpr std::array<Edge, 5> kAllEdges{Edge::V, Edge::W, Edge::X, Edge::Y, Edge::Z};

char edge_letter(Edge e);

struct GraphFamily {
    bool has_v = false;
    bool has_w = false;
    bool has_x = false;
    bool has_y = false;
    bool has_z = false;

    bool has(Edge e) const;
    void set(Edge e, bool present);
    unsigned mask() const;  // bit i set iff Edge(i) present
    static GraphFamily from_mask(unsigned mask);

    // Unordered letter set, e.g. "ZYX" == "XYZ". Throws std::invalid_argument on
    // unknown letters or repeats.
    static GraphFamily parse(std::string_view letters);
    // Canonical alphabetical spelling, "" for the empty family.
    std::string name() const;

    friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

enum class FamilyClass { trivial, nontrivial_solved, nontrivial_unsolved, disconnected };

std::string to_string(FamilyClass c);

// Row reflection (swap rows 0 and 1) and direction reversal (read columns right
// to left). Both leave the percolation rate unchanged.
GraphFamily swap_rows(GraphFamily f);
GraphFamily reverse_direction(GraphFamily f);

// True when (n,0) is reachable from (0,0) in G_n for every n >= 1.
bool connected_across(GraphFamily f);

// Table-1 representative of f's symmetry class, if f is one of the non-trivial
// families or a mirror image of one.
bool table_representative(GraphFamily f, GraphFamily& rep);

// Families outside the non-trivial classes are split into disconnected (some
// column's bottom vertex unreachable) and trivial (rate given by i.i.d.
// increments). That split is determined here by reachability, it is not
// tabulated in the source model.
FamilyClass classify(GraphFamily f);

// The six Table-1 families in table order: XYZ, VWXY, WXYZ, VWX, VWXZ, VWXYZ.
const std::vector<GraphFamily>& table_families();

}  // namespace sfpp
