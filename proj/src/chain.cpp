#include "stretchfpp/chain.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "stretchfpp/format.hpp"

namespace sfpp {

DeltaState delta_init(double z0) { return {z0, 0.0}; }

double delta_increment(double delta, const LayerWeights& w) {
    return std::min(w.x, delta + w.y + w.z);
}

DeltaState delta_step(const DeltaState& state, const LayerWeights& w) {
    const double lambda = delta_increment(state.delta, w);
    const double top = std::min(state.delta + w.y, w.x + w.z);
    return {top - lambda, state.l + lambda};
}

GenericFrontier::GenericFrontier(double d0, double d1) {
    base_ = std::min(d0, d1);
    if (base_ == kInf) throw std::invalid_argument("GenericFrontier: both vertices unreachable");
    offset0_ = d0 - base_;
    offset1_ = d1 - base_;
}

GenericFrontier generic_init(GraphFamily family, double z0) {
    return GenericFrontier(0.0, family.has_z ? z0 : kInf);
}

struct FrontierStepper {
    static FrontierStep step(const GenericFrontier& f, const LayerWeights& w) {
        // Labels relative to f.base_: old bottom a, old top b, new bottom c, new top e.
        double a = f.offset0_, b = f.offset1_, c = kInf, e = kInf;
        // A simple path in a four-vertex graph has at most three edges, so three
        // Bellman-Ford sweeps reach the fixed point.
        for (int sweep = 0; sweep < 3; ++sweep) {
            c = std::min({c, a + w.x, b + w.w, e + w.z});
            e = std::min({e, b + w.y, a + w.v, c + w.z});
            a = std::min({a, c + w.x, e + w.v});
            b = std::min({b, e + w.y, c + w.w});
        }
        const double shift = std::min(c, e);
        if (shift == kInf) throw std::runtime_error("generic_step: new column unreachable");
        FrontierStep out;
        out.increment = c - f.offset0_;
        out.front.base_ = f.base_ + shift;
        out.front.offset0_ = c - shift;
        out.front.offset1_ = e - shift;
        return out;
    }
};

FrontierStep generic_step(const GenericFrontier& front, const LayerWeights& w) {
    return FrontierStepper::step(front, w);
}

bool uses_delta_recursion(GraphFamily family, Recursion recursion) {
    switch (recursion) {
        case Recursion::delta:
            if (!(family == GraphFamily::parse("XYZ")))
                throw std::invalid_argument("delta recursion is only defined for the XYZ family");
            return true;
        case Recursion::generic: return false;
        case Recursion::automatic: return family == GraphFamily::parse("XYZ");
    }
    return false;
}

void write_trajectory_csv(std::ostream& out, GraphFamily family, std::int64_t n,
                          std::uint64_t seed) {
    out << "n,lambda,delta\n";
    run_chain(family, n, seed, [&](std::int64_t k, double lambda, double delta) {
        out << k << ',' << format_double(lambda) << ',' << format_double(delta) << '\n';
    });
}

}  // namespace sfpp
