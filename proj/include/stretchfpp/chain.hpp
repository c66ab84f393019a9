#pragma once

#include <cstdint>
#include <iosfwd>

#include "stretchfpp/family.hpp"
#include "stretchfpp/ladder.hpp"
#include "stretchfpp/rng.hpp"

namespace sfpp {

// Height-difference chain for the {X,Y,Z} ladder. delta = l' - l where l and
// l' are the first-passage times to the bottom and top vertex of the current
// last column. Storing (l, delta) keeps delta O(1) while l grows linearly.
struct DeltaState {
    double delta = 0.0;
    double l = 0.0;

    double l_top() const { return l + delta; }
};

DeltaState delta_init(double z0);

// One-step growth of l: min(x, delta + y + z).
double delta_increment(double delta, const LayerWeights& w);

// Advances one column:
//   delta' = min(delta + y, x + z) - min(x, delta + y + z)
//   l'     = l + min(x, delta + y + z)
DeltaState delta_step(const DeltaState& state, const LayerWeights& w);

// First-passage times to the two vertices of the last column for any edge
// family. Times are held as base + offset with min(offset0, offset1) == 0 so
// the offsets stay small; an unreachable vertex has offset +infinity.
class GenericFrontier {
public:
    GenericFrontier() = default;
    GenericFrontier(double d0, double d1);

    double d0() const { return base_ + offset0_; }
    double d1() const { return base_ + offset1_; }
    double base() const { return base_; }
    double offset0() const { return offset0_; }
    double offset1() const { return offset1_; }
    // d1 - d0 without forming either sum.
    double delta() const { return offset1_ - offset0_; }

private:
    friend struct FrontierStepper;
    double base_ = 0.0;
    double offset0_ = 0.0;
    double offset1_ = kInf;
};

// Column-0 frontier: (0,0) at time 0, (0,1) via the rung if there is one.
GenericFrontier generic_init(GraphFamily family, double z0);

struct FrontierStep {
    GenericFrontier front;
    double increment;  // t0(n) - t0(n-1)
};

// Exact shortest-path update across one layer. Shortest paths on G_n to the
// new column may step into it and come back to the other old vertex (e.g.
// bottom -x-> new bottom -w-> old top -y-> new top), so the new times are the
// distances on the four-vertex layer graph {old bottom, old top, new bottom,
// new top} with the old vertices seeded at their G_{n-1} times. Absent edges
// carry +infinity and drop out, so one routine serves every family.
FrontierStep generic_step(const GenericFrontier& front, const LayerWeights& w);

enum class Recursion { automatic, delta, generic };

struct ChainSummary {
    double l = 0.0;      // t0 after the last step
    double delta = 0.0;  // t1 - t0 after the last step
};

// Streams (k, Lambda_k, Delta_k) for k = 1..n to visit without storing the
// ladder. Weights come from Rng(seed, stream) in sample_ladder's order, so the
// same (seed, stream) reproduces sample_ladder's weights. automatic picks the
// delta recursion for {X,Y,Z} and the generic frontier otherwise.
template <class Visitor>
ChainSummary run_chain(GraphFamily family, std::int64_t n, std::uint64_t seed, Visitor&& visit,
                       Recursion recursion = Recursion::automatic, std::uint64_t stream = 0);

bool uses_delta_recursion(GraphFamily family, Recursion recursion);

// CSV rows "n,lambda,delta" for a run, header included.
void write_trajectory_csv(std::ostream& out, GraphFamily family, std::int64_t n,
                          std::uint64_t seed);

// ---------------------------------------------------------------------------

template <class Visitor>
ChainSummary run_chain(GraphFamily family, std::int64_t n, std::uint64_t seed, Visitor&& visit,
                       Recursion recursion, std::uint64_t stream) {
    Rng rng(seed, stream);
    const double z0 = family.has_z ? rng.exp1() : kInf;
    if (uses_delta_recursion(family, recursion)) {
        DeltaState s = delta_init(z0);
        for (std::int64_t k = 1; k <= n; ++k) {
            const LayerWeights w = sample_layer(rng, family);
            const double lambda = delta_increment(s.delta, w);
            s = delta_step(s, w);
            visit(k, lambda, s.delta);
        }
        return {s.l, s.delta};
    }
    GenericFrontier f = generic_init(family, z0);
    for (std::int64_t k = 1; k <= n; ++k) {
        const FrontierStep step = generic_step(f, sample_layer(rng, family));
        f = step.front;
        visit(k, step.increment, f.delta());
    }
    return {f.d0(), f.delta()};
}

}  // namespace sfpp
