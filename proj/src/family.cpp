#include "stretchfpp/family.hpp"

#include <stdexcept>
#include <utility>

namespace sfpp {

char edge_letter(Edge e) { return "VWXYZ"[static_cast<int>(e)]; }

bool GraphFamily::has(Edge e) const {
    switch (e) {
        case Edge::V: return has_v;
        case Edge::W: return has_w;
        case Edge::X: return has_x;
        case Edge::Y: return has_y;
        case Edge::Z: return has_z;
    }
    return false;
}

void GraphFamily::set(Edge e, bool present) {
    switch (e) {
        case Edge::V: has_v = present; break;
        case Edge::W: has_w = present; break;
        case Edge::X: has_x = present; break;
        case Edge::Y: has_y = present; break;
        case Edge::Z: has_z = present; break;
    }
}

unsigned GraphFamily::mask() const {
    unsigned m = 0;
    for (Edge e : kAllEdges)
        if (has(e)) m |= 1u << static_cast<unsigned>(e);
    return m;
}

GraphFamily GraphFamily::from_mask(unsigned mask) {
    GraphFamily f;
    for (Edge e : kAllEdges) f.set(e, (mask >> static_cast<unsigned>(e)) & 1u);
    return f;
}

GraphFamily GraphFamily::parse(std::string_view letters) {
    GraphFamily f;
    for (char c : letters) {
        Edge e;
        switch (c) {
            case 'V': case 'v': e = Edge::V; break;
            case 'W': case 'w': e = Edge::W; break;
            case 'X': case 'x': e = Edge::X; break;
            case 'Y': case 'y': e = Edge::Y; break;
            case 'Z': case 'z': e = Edge::Z; break;
            default:
                throw std::invalid_argument(std::string("unknown edge family letter '") + c +
                                            "' (expected V, W, X, Y or Z)");
        }
        if (f.has(e))
            throw std::invalid_argument(std::string("edge family letter repeated: '") + c + "'");
        f.set(e, true);
    }
    return f;
}

std::string GraphFamily::name() const {
    std::string s;
    for (Edge e : kAllEdges)
        if (has(e)) s += edge_letter(e);
    return s;
}

std::string to_string(FamilyClass c) {
    switch (c) {
        case FamilyClass::trivial: return "trivial";
        case FamilyClass::nontrivial_solved: return "nontrivial-solved";
        case FamilyClass::nontrivial_unsolved: return "nontrivial-unsolved";
        case FamilyClass::disconnected: return "disconnected";
    }
    return "?";
}

GraphFamily swap_rows(GraphFamily f) {
    std::swap(f.has_x, f.has_y);
    std::swap(f.has_v, f.has_w);
    return f;
}

GraphFamily reverse_direction(GraphFamily f) {
    std::swap(f.has_v, f.has_w);
    return f;
}

namespace {

// Structural BFS on G_n; vertex (i,r) has index 2i+r.
bool bottom_reachable(GraphFamily f, int n) {
    const int count = 2 * (n + 1);
    std::vector<std::vector<int>> adj(count);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i <= n; ++i) {
        if (f.has_z) link(2 * i, 2 * i + 1);
        if (i == n) continue;
        if (f.has_x) link(2 * i, 2 * (i + 1));
        if (f.has_y) link(2 * i + 1, 2 * (i + 1) + 1);
        if (f.has_v) link(2 * i, 2 * (i + 1) + 1);
        if (f.has_w) link(2 * i + 1, 2 * (i + 1));
    }
    std::vector<bool> seen(count, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen[2 * n];
}

}  // namespace

bool connected_across(GraphFamily f) {
    // A (0,0)->(1,0) path in G_1, translated column by column, reaches (n,0)
    // in G_n for every n; and G_1 must admit one.
    return bottom_reachable(f, 1);
}

const std::vector<GraphFamily>& table_families() {
    static const std::vector<GraphFamily> families{
        GraphFamily::parse("XYZ"), GraphFamily::parse("VWXY"),  GraphFamily::parse("WXYZ"),
        GraphFamily::parse("VWX"), GraphFamily::parse("VWXZ"), GraphFamily::parse("VWXYZ"),
    };
    return families;
}

bool table_representative(GraphFamily f, GraphFamily& rep) {
    const GraphFamily images[] = {f, swap_rows(f), reverse_direction(f),
                                  swap_rows(reverse_direction(f))};
    for (const GraphFamily& t : table_families())
        for (const GraphFamily& img : images)
            if (img == t) {
                rep = t;
                return true;
            }
    return false;
}

FamilyClass classify(GraphFamily f) {
    if (!connected_across(f)) return FamilyClass::disconnected;
    GraphFamily rep;
    if (!table_representative(f, rep)) return FamilyClass::trivial;
    const auto& t = table_families();
    for (std::size_t i = 0; i < 3; ++i)
        if (rep == t[i]) return FamilyClass::nontrivial_solved;
    return FamilyClass::nontrivial_unsolved;
}

}  // namespace sfpp
