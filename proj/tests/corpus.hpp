#pragma once

// Shared random-instance corpus for property tests and the acceptance suite.
// Everything is drawn from counter-based substreams, so a (seed, index) pair
// always denotes the same instance.

#include <cstdint>
#include <vector>

#include <holderkit/measure.hpp>
#include <holderkit/rng.hpp>
#include <holderkit/search.hpp>
#include <holderkit/transforms.hpp>

namespace corpus {

struct Instance {
    holderkit::DiscreteMeasure mu;
    holderkit::SampledFunction f;
    holderkit::SampledFunction g;
    double p;
};

/// 2..64 atoms, weights in (0.01, 1], values in [0, 10), p in [1.05, 8).
inline Instance draw(std::uint64_t seed, std::uint64_t index) {
    holderkit::SplitMix64 rng = holderkit::substream(seed, index);
    const int atoms = static_cast<int>(rng.uniform_int(2, 64));
    const holderkit::RandomInstance raw =
        holderkit::draw_random_instance(rng, atoms, 0.0, 10.0);
    const double p = rng.uniform(1.05, 8.0);
    return Instance{holderkit::DiscreteMeasure(raw.weights), holderkit::SampledFunction(raw.f),
                    holderkit::SampledFunction(raw.g), p};
}

/// Random composition of 2..4 primitive steps, scale factors in [0.25, 4).
inline holderkit::TransformSpec draw_composition(holderkit::SplitMix64& rng) {
    std::vector<holderkit::TransformSpec> parts;
    const int len = static_cast<int>(rng.uniform_int(2, 4));
    for (int i = 0; i < len; ++i) {
        switch (rng.uniform_int(0, 2)) {
            case 0: parts.push_back(holderkit::TransformSpec::scale(rng.uniform(0.25, 4.0))); break;
            case 1: parts.push_back(holderkit::TransformSpec::swap()); break;
            default: parts.push_back(holderkit::TransformSpec::maxmin()); break;
        }
    }
    return holderkit::TransformSpec::compose(parts);
}

/// Valid family parameters plus an offset t in [0, 0.9): p is kept away from
/// 2 and the ends of its range, w sits on the correct side of 1.
struct FamilyDraw {
    double p;
    double m;
    double w;
    double t;
};

inline FamilyDraw draw_family(std::uint64_t seed, std::uint64_t index) {
    holderkit::SplitMix64 rng = holderkit::substream(seed, index);
    FamilyDraw d{};
    if (rng.uniform01() < 0.5) {
        d.p = rng.uniform(1.05, 1.95);
        d.w = rng.uniform(0.05, 0.95);
    } else {
        d.p = rng.uniform(2.05, 6.0);
        d.w = rng.uniform(1.05, 8.0);
    }
    d.m = rng.uniform(0.05, 0.95);
    d.t = rng.uniform(0.0, 0.9);
    return d;
}

}  // namespace corpus
