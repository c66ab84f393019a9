#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "stretchfpp/family.hpp"
#include "stretchfpp/rng.hpp"

namespace sfpp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Weights of the edges that enter column i: v, w, x, y join column i-1 to
// column i, z is the rung at column i. An absent edge holds +infinity, so it
// never wins a minimum.
struct LayerWeights {
    double v = kInf;
    double w = kInf;
    double x = kInf;
    double y = kInf;
    double z = kInf;

    double get(Edge e) const;
    void set(Edge e, double value);
};

// Draws one layer: one Exp(1) sample per present family, in V,W,X,Y,Z order.
LayerWeights sample_layer(Rng& rng, GraphFamily family);

struct Vertex {
    int column = 0;
    int row = 0;
};

struct WeightedLadder {
    GraphFamily family;
    std::vector<LayerWeights> layers;  // layers[i-1] enters column i
    std::optional<double> z0;          // rung at column 0, present iff family.has_z

    int n() const { return static_cast<int>(layers.size()); }

    // Sub-ladder on columns m..n re-rooted so column m becomes column 0.
    WeightedLadder slice(int m, int n) const;
};

// n layers of i.i.d. Exp(1) weights. The stream is z0 first, then layer by
// layer, which is the order the chain recursions consume it in.
WeightedLadder sample_ladder(GraphFamily family, int n, std::uint64_t seed,
                             std::uint64_t stream = 0);

// Exact first-passage time from (0,0) to target over the whole finite ladder;
// nullopt when target is unreachable.
std::optional<double> dijkstra_oracle(const WeightedLadder& ladder, Vertex target);

// Both first-passage times from (0,0) to the last column: {(n,0), (n,1)}, with
// +infinity for unreachable vertices.
std::pair<double, double> dijkstra_frontier(const WeightedLadder& ladder);

// Debug JSON for reproducing failures; not a stable interchange format.
std::string to_json(const WeightedLadder& ladder);
WeightedLadder ladder_from_json(const std::string& text);

}  // namespace sfpp
