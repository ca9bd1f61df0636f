#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "holderkit/bounds.hpp"
#include "holderkit/errors.hpp"
#include "holderkit/family.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/rng.hpp"
#include "holderkit/tolerances.hpp"

namespace holderkit {

// ============================================================================
// Seeded randomized search for symmetrized_bound > holder_rhs
// ============================================================================
//
// At p = 2 the improvement identity rules such violations out, so the search
// doubles as an empirical null check there; for p != 2 it generalizes the
// analytic two-piece construction to arbitrary random instances.

/// Family instance injected as trial 0, so a search is self-validating
/// against the analytic construction.
struct FamilyInjection {
    double m;
    double w;
    double t;
};

struct SearchConfig {
    double p = 2.0;
    int atoms = 16;
    std::int64_t trials = 1;
    std::uint64_t seed = 0;
    double value_low = 0.0;
    double value_high = 10.0;
    int threads = 1;  ///< never affects results, only wall time
    std::optional<FamilyInjection> inject_family;
};

struct RandomInstance {
    std::vector<double> weights;
    std::vector<double> f;
    std::vector<double> g;
};

/// Weights uniform in (0.01, 1], values uniform in [low, high).
inline RandomInstance draw_random_instance(SplitMix64& rng, int atoms, double low, double high) {
    RandomInstance inst;
    inst.weights.reserve(static_cast<std::size_t>(atoms));
    inst.f.reserve(static_cast<std::size_t>(atoms));
    inst.g.reserve(static_cast<std::size_t>(atoms));
    for (int i = 0; i < atoms; ++i) inst.weights.push_back(1.0 - 0.99 * rng.uniform01());
    for (int i = 0; i < atoms; ++i) inst.f.push_back(rng.uniform(low, high));
    for (int i = 0; i < atoms; ++i) inst.g.push_back(rng.uniform(low, high));
    return inst;
}

struct SearchResult {
    double best_gap = -std::numeric_limits<double>::infinity();
    std::int64_t best_trial = -1;
    std::int64_t violations_found = 0;
    RandomInstance best_instance;
};

namespace detail {

inline void validate_search_config(const SearchConfig& cfg) {
    (void)ExponentPair(cfg.p);  // p in (1, inf); p = 2 is allowed here
    if (cfg.atoms < 2 || cfg.atoms > 256) {
        throw domain_error("random_search: atoms must lie in [2, 256]");
    }
    if (cfg.trials < 1) {
        throw usage_error("random_search: trials must be positive");
    }
    if (!std::isfinite(cfg.value_low) || !std::isfinite(cfg.value_high) ||
        cfg.value_low < 0.0 || cfg.value_high <= cfg.value_low) {
        throw domain_error("random_search: need 0 <= value_low < value_high, both finite");
    }
    if (cfg.threads < 1) {
        throw usage_error("random_search: threads must be >= 1");
    }
    if (cfg.inject_family) {
        const FamilyParams params(cfg.p, cfg.inject_family->m, cfg.inject_family->w);
        (void)family_functions(params, cfg.inject_family->t);
    }
}

}  // namespace detail

/// Runs cfg.trials independent trials and reports the largest observed gap
/// symmetrized - holder together with the count of trials whose gap clears
/// the ordering margin. Deterministic for a fixed config: every trial draws
/// from its own counter-based substream and the reduction takes the
/// lexicographic max of (gap, trial index), so thread count cannot change
/// the result.
inline SearchResult random_search(const SearchConfig& cfg) {
    detail::validate_search_config(cfg);
    const ExponentPair e(cfg.p);

    struct Partial {
        double best_gap = -std::numeric_limits<double>::infinity();
        std::int64_t best_trial = -1;
        std::int64_t violations = 0;
        RandomInstance best_instance;
    };

    const auto run_trial = [&](std::int64_t index, RandomInstance& inst) -> std::pair<double, bool> {
        if (index == 0 && cfg.inject_family) {
            const FamilyParams params(cfg.p, cfg.inject_family->m, cfg.inject_family->w);
            const FamilyInstance fam = family_functions(params, cfg.inject_family->t);
            inst = RandomInstance{fam.mu.weights(), fam.f.values(), fam.g.values()};
        } else {
            SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(index));
            inst = draw_random_instance(rng, cfg.atoms, cfg.value_low, cfg.value_high);
        }
        const DiscreteMeasure mu(inst.weights);
        const SampledFunction f(inst.f);
        const SampledFunction g(inst.g);
        const double holder = holder_rhs(mu, f, g, e);
        const double gap = symmetrized_bound(mu, f, g, e) - holder;
        return {gap, gap > ordering_margin(holder)};
    };

    const auto run_range = [&](std::int64_t begin, std::int64_t end, Partial& out) {
        RandomInstance inst;
        for (std::int64_t i = begin; i < end; ++i) {
            const auto [gap, violates] = run_trial(i, inst);
            if (violates) ++out.violations;
            if (gap > out.best_gap || (gap == out.best_gap && i > out.best_trial)) {
                out.best_gap = gap;
                out.best_trial = i;
                out.best_instance = inst;
            }
        }
    };

    const int threads = static_cast<int>(
        std::min<std::int64_t>(cfg.threads, cfg.trials));
    std::vector<Partial> partials(static_cast<std::size_t>(threads));
    if (threads == 1) {
        run_range(0, cfg.trials, partials[0]);
    } else {
        const std::int64_t chunk = (cfg.trials + threads - 1) / threads;
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int k = 0; k < threads; ++k) {
            const std::int64_t begin = static_cast<std::int64_t>(k) * chunk;
            const std::int64_t end = std::min<std::int64_t>(begin + chunk, cfg.trials);
            workers.emplace_back(run_range, begin, end, std::ref(partials[static_cast<std::size_t>(k)]));
        }
        for (std::thread& t : workers) t.join();
    }

    SearchResult result;
    for (Partial& part : partials) {
        result.violations_found += part.violations;
        if (part.best_trial < 0) continue;
        if (part.best_gap > result.best_gap ||
            (part.best_gap == result.best_gap && part.best_trial > result.best_trial)) {
            result.best_gap = part.best_gap;
            result.best_trial = part.best_trial;
            result.best_instance = std::move(part.best_instance);
        }
    }
    return result;
}

}  // namespace holderkit
