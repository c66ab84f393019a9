#include "stretchfpp/ladder.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace sfpp {

double LayerWeights::get(Edge e) const {
    switch (e) {
        case Edge::V: return v;
        case Edge::W: return w;
        case Edge::X: return x;
        case Edge::Y: return y;
        case Edge::Z: return z;
    }
    return kInf;
}

void LayerWeights::set(Edge e, double value) {
    switch (e) {
        case Edge::V: v = value; break;
        case Edge::W: w = value; break;
        case Edge::X: x = value; break;
        case Edge::Y: y = value; break;
        case Edge::Z: z = value; break;
    }
}

LayerWeights sample_layer(Rng& rng, GraphFamily family) {
    LayerWeights lw;
    if (family.has_v) lw.v = rng.exp1();
    if (family.has_w) lw.w = rng.exp1();
    if (family.has_x) lw.x = rng.exp1();
    if (family.has_y) lw.y = rng.exp1();
    if (family.has_z) lw.z = rng.exp1();
    return lw;
}

WeightedLadder WeightedLadder::slice(int m, int last) const {
    if (m < 0 || last < m || last > n())
        throw std::invalid_argument("slice: need 0 <= m <= n <= ladder size");
    WeightedLadder sub;
    sub.family = family;
    sub.layers.assign(layers.begin() + m, layers.begin() + last);
    if (family.has_z) sub.z0 = (m == 0) ? z0 : std::optional<double>(layers[m - 1].z);
    return sub;
}

WeightedLadder sample_ladder(GraphFamily family, int n, std::uint64_t seed,
                             std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("sample_ladder: n must be >= 1");
    Rng rng(seed, stream);
    WeightedLadder ladder;
    ladder.family = family;
    if (family.has_z) ladder.z0 = rng.exp1();
    ladder.layers.reserve(n);
    for (int i = 0; i < n; ++i) ladder.layers.push_back(sample_layer(rng, family));
    return ladder;
}

namespace {

std::vector<double> all_distances(const WeightedLadder& ladder) {
    const int n = ladder.n();
    const int count = 2 * (n + 1);
    std::vector<std::vector<std::pair<int, double>>> adj(count);
    auto link = [&](int a, int b, double weight) {
        if (weight == kInf) return;
        adj[a].emplace_back(b, weight);
        adj[b].emplace_back(a, weight);
    };
    if (ladder.z0) link(0, 1, *ladder.z0);
    for (int i = 1; i <= n; ++i) {
        const LayerWeights& lw = ladder.layers[i - 1];
        const int a = 2 * (i - 1), b = a + 1, c = 2 * i, e = c + 1;
        link(a, c, lw.x);
        link(b, e, lw.y);
        link(a, e, lw.v);
        link(b, c, lw.w);
        link(c, e, lw.z);
    }

    std::vector<double> dist(count, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[0] = 0.0;
    heap.emplace(0.0, 0);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (auto [v, weight] : adj[u]) {
            const double nd = d + weight;
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<double> dijkstra_oracle(const WeightedLadder& ladder, Vertex target) {
    if (target.column < 0 || target.column > ladder.n() || target.row < 0 || target.row > 1)
        throw std::invalid_argument("dijkstra_oracle: target outside the ladder");
    const double d = all_distances(ladder)[2 * target.column + target.row];
    if (d == kInf) return std::nullopt;
    return d;
}

std::pair<double, double> dijkstra_frontier(const WeightedLadder& ladder) {
    const auto dist = all_distances(ladder);
    const int n = ladder.n();
    return {dist[2 * n], dist[2 * n + 1]};
}

std::string to_json(const WeightedLadder& ladder) {
    using nlohmann::json;
    json j;
    j["family"] = ladder.family.name();
    j["n"] = ladder.n();
    if (ladder.z0) j["z0"] = *ladder.z0;
    for (Edge e : kAllEdges) {
        if (!ladder.family.has(e)) continue;
        json arr = json::array();
        for (const auto& lw : ladder.layers) arr.push_back(lw.get(e));
        j[std::string(1, static_cast<char>(edge_letter(e) - 'A' + 'a'))] = arr;
    }
    return j.dump();
}

WeightedLadder ladder_from_json(const std::string& text) {
    using nlohmann::json;
    const json j = json::parse(text);
    WeightedLadder ladder;
    ladder.family = GraphFamily::parse(j.at("family").get<std::string>());
    const int n = j.at("n").get<int>();
    ladder.layers.resize(n);
    if (ladder.family.has_z) ladder.z0 = j.at("z0").get<double>();
    for (Edge e : kAllEdges) {
        if (!ladder.family.has(e)) continue;
        const auto& arr = j.at(std::string(1, static_cast<char>(edge_letter(e) - 'A' + 'a')));
        if (static_cast<int>(arr.size()) != n)
            throw std::invalid_argument("ladder json: weight array length differs from n");
        for (int i = 0; i < n; ++i) ladder.layers[i].set(e, arr[i].get<double>());
    }
    return ladder;
}

}  // namespace sfpp
