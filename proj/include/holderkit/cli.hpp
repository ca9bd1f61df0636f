#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holderkit/bounds.hpp"
#include "holderkit/errors.hpp"
#include "holderkit/family.hpp"
#include "holderkit/json_io.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/search.hpp"
#include "holderkit/tolerances.hpp"
#include "holderkit/transforms.hpp"

namespace holderkit {

// ============================================================================
// Command-line surface
// ============================================================================

/// Result of one CLI invocation. Payloads (JSON or CSV) go to standard
/// output, diagnostics to standard error, never mixed.
struct CommandOutcome {
    int exit_code = 0;        ///< 0 ok; 1 usage/input; 2 invariant breach; 3 expectation violated
    std::string payload;
    std::string diagnostics;
};

/// Exit code for an exception escaping a command: internal invariant breaches
/// map to 2, everything else (bad usage, bad input) to 1.
inline int classify_error(const std::exception& e) {
    return dynamic_cast<const invariant_error*>(&e) != nullptr ? 2 : 1;
}

namespace detail {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw usage_error("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw usage_error("cannot open output file '" + path + "'");
    }
    out << text;
    if (!out) {
        throw usage_error("failed writing output file '" + path + "'");
    }
}

inline std::string short_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string version_text() {
    std::string out;
    out += "holderkit ";
    out += kVersion;
    out += "\nordering tolerance: ";
    out += short_double(kOrderingTol);
    out += " (margin tol*(1+bound))\nidentity tolerance: ";
    out += short_double(kIdentityRelTol);
    out += " (relative)\nfd step default: ";
    out += short_double(kDefaultFdStep);
    out += "\nderivative check tolerance: ";
    out += short_double(kDerivativeCheckTol);
    out += "\n";
    return out;
}

struct LoadedInstance {
    DiscreteMeasure mu;
    SampledFunction f;
    SampledFunction g;
};

inline LoadedInstance load_instance(const std::string& path) {
    const InstanceData data = parse_instance_json(read_text_file(path));
    return LoadedInstance{DiscreteMeasure(data.weights), SampledFunction(data.f),
                          SampledFunction(data.g)};
}

}  // namespace detail

/// Runs one command line (without the program name). Never throws.
inline CommandOutcome run_cli(const std::vector<std::string>& args) {
    CommandOutcome outcome;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Hoelder-type inequality bounds on finite discrete measure spaces"};
    app.name("holderkit");
    app.require_subcommand(1);
    const std::string version = detail::version_text();
    app.set_version_flag("--version", version);

    // --- bounds ------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Bound report (Hoelder, B_p, B_q, symmetrized) for a JSON instance");
    std::string bounds_input;
    double bounds_p = 2.0;
    std::string bounds_transform;
    bounds_cmd->add_option("--input", bounds_input, "instance JSON file with weights/f/g")
        ->required();
    bounds_cmd->add_option("--p", bounds_p, "exponent p in (1, inf)")->required();
    auto* bounds_transform_opt = bounds_cmd->add_option(
        "--transform", bounds_transform,
        "also evaluate the transformed bound (scale:K | swap | maxmin | a>b>c)");
    bounds_cmd->callback([&] {
        const detail::LoadedInstance inst = detail::load_instance(bounds_input);
        const ExponentPair e(bounds_p);
        const BoundReport rep = bound_report(inst.mu, inst.f, inst.g, e);
        JsonWriter w;
        w.begin_object();
        write_fields(w, rep);
        if (*bounds_transform_opt) {
            const TransformSpec T = TransformSpec::parse(bounds_transform);
            w.key("transform").string(T.to_string());
            w.key("transformed_bound")
                .number(transformed_holder_bound(inst.mu, inst.f, inst.g, e, T));
        }
        w.end_object();
        out << w.str() << '\n';
    });

    // --- identity ------------------------------------------------------------
    auto* identity_cmd = app.add_subcommand(
        "identity", "Cauchy-Schwarz improvement identity report (p = 2, a = f^2, b = g^2)");
    std::string identity_input;
    bool identity_random = false;
    int identity_n = 16;
    std::int64_t identity_trials = 1000;
    std::uint64_t identity_seed = 0;
    auto* identity_input_opt =
        identity_cmd->add_option("--input", identity_input, "instance JSON file");
    auto* identity_random_flag = identity_cmd->add_flag(
        "--random", identity_random, "run the identity over random instances instead");
    auto* identity_n_opt =
        identity_cmd->add_option("--n", identity_n, "atoms per random instance");
    auto* identity_trials_opt =
        identity_cmd->add_option("--trials", identity_trials, "number of random instances");
    auto* identity_seed_opt = identity_cmd->add_option("--seed", identity_seed, "RNG seed");
    identity_input_opt->excludes(identity_random_flag);
    identity_n_opt->needs(identity_random_flag);
    identity_trials_opt->needs(identity_random_flag);
    identity_seed_opt->needs(identity_random_flag);
    identity_random_flag->needs(identity_n_opt, identity_trials_opt, identity_seed_opt);
    identity_cmd->callback([&] {
        if (identity_random) {
            if (identity_n < 1 || identity_n > 4096) {
                throw usage_error("identity --random: --n must lie in [1, 4096]");
            }
            if (identity_trials < 1) {
                throw usage_error("identity --random: --trials must be positive");
            }
            double worst = -1.0;
            std::int64_t worst_trial = 0;
            for (std::int64_t i = 0; i < identity_trials; ++i) {
                SplitMix64 rng = substream(identity_seed, static_cast<std::uint64_t>(i));
                const RandomInstance raw =
                    draw_random_instance(rng, identity_n, 0.0, 10.0);
                const CsIdentityReport rep = cs_identity_report(
                    DiscreteMeasure(raw.weights), SampledFunction(raw.f), SampledFunction(raw.g));
                const double rel = std::abs(rep.residual) / (1.0 + rep.lhs);
                if (rel > worst) {
                    worst = rel;
                    worst_trial = i;
                }
            }
            JsonWriter w;
            w.begin_object();
            w.key("n").number(static_cast<std::int64_t>(identity_n));
            w.key("trials").number(identity_trials);
            w.key("seed").number(identity_seed);
            w.key("worst_relative_residual").number(worst);
            w.key("worst_trial").number(worst_trial);
            w.end_object();
            out << w.str() << '\n';
        } else if (*identity_input_opt) {
            const detail::LoadedInstance inst = detail::load_instance(identity_input);
            out << to_json(cs_identity_report(inst.mu, inst.f, inst.g)) << '\n';
        } else {
            throw usage_error("identity: pass --input FILE or --random");
        }
    });

    // --- family ------------------------------------------------------------
    auto* family_cmd = app.add_subcommand(
        "family", "Gap curves and bound report for one two-piece family instance");
    double family_p = 3.0, family_m = 0.5, family_w = 2.0, family_t = 0.0;
    family_cmd->add_option("--p", family_p, "exponent p != 2")->required();
    family_cmd->add_option("--m", family_m, "break point m in (0, 1)")->required();
    family_cmd->add_option("--w", family_w, "level w (w < 1 for p < 2, w > 1 for p > 2)")
        ->required();
    family_cmd->add_option("--t", family_t, "offset t in [0, 1)")->required();
    family_cmd->callback([&] {
        const FamilyParams params(family_p, family_m, family_w);
        const GapPoint gp = gap_pair(params, family_t);
        const FamilyInstance inst = family_functions(params, family_t);
        const BoundReport rep = bound_report(inst.mu, inst.f, inst.g, params.exponents());
        JsonWriter w;
        w.begin_object();
        write_fields(w, gp);
        w.key("bound_report").begin_object();
        write_fields(w, rep);
        w.end_object();
        w.end_object();
        out << w.str() << '\n';
    });

    // --- curve -------------------------------------------------------------
    auto* curve_cmd =
        app.add_subcommand("curve", "Write the gap curves on a linear t grid as CSV");
    double curve_p = 3.0, curve_m = 0.5, curve_w = 2.0, curve_tmax = 0.5;
    int curve_steps = 101;
    std::string curve_out;
    curve_cmd->add_option("--p", curve_p, "exponent p != 2")->required();
    curve_cmd->add_option("--m", curve_m, "break point m in (0, 1)")->required();
    curve_cmd->add_option("--w", curve_w, "level w per the sign rule")->required();
    curve_cmd->add_option("--t-max", curve_tmax, "grid endpoint in (0, 1) [default 0.5]");
    curve_cmd->add_option("--steps", curve_steps, "grid points including both ends [default 101]");
    curve_cmd->add_option("--out", curve_out, "output CSV path")->required();
    curve_cmd->callback([&] {
        const FamilyParams params(curve_p, curve_m, curve_w);
        detail::write_text_file(curve_out, to_csv(gap_curve(params, curve_tmax, curve_steps)));
    });

    // --- scan --------------------------------------------------------------
    auto* scan_cmd = app.add_subcommand(
        "scan", "Find the smallest t on a log grid whose min gap clears the ordering margin");
    double scan_p = 3.0, scan_m = 0.5, scan_w = 2.0, scan_tmax = 0.5;
    int scan_steps = 200;
    scan_cmd->add_option("--p", scan_p, "exponent p != 2")->required();
    scan_cmd->add_option("--m", scan_m, "break point m in (0, 1)")->required();
    scan_cmd->add_option("--w", scan_w, "level w per the sign rule")->required();
    scan_cmd->add_option("--t-max", scan_tmax, "scan endpoint in (1e-6, 1) [default 0.5]");
    scan_cmd->add_option("--steps", scan_steps, "log-spaced grid points [default 200]");
    scan_cmd->callback([&] {
        const FamilyParams params(scan_p, scan_m, scan_w);
        out << to_json(find_violation_t(params, scan_tmax, scan_steps)) << '\n';
    });

    // --- derivative ----------------------------------------------------------
    auto* deriv_cmd = app.add_subcommand(
        "derivative", "Gap derivative at t = 0: closed form vs finite difference");
    deriv_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    double deriv_p = 3.0, deriv_m = 0.5, deriv_w = 2.0, deriv_h = kDefaultFdStep;
    deriv_cmd->add_option("--p", deriv_p, "exponent p != 2")->required();
    deriv_cmd->add_option("--m", deriv_m, "break point m in (0, 1)")->required();
    deriv_cmd->add_option("--w", deriv_w, "level w per the sign rule")->required();
    deriv_cmd->add_option("--h", deriv_h, "difference step in (0, 1e-2] [default 1e-5]");
    deriv_cmd->callback([&] {
        const FamilyParams params(deriv_p, deriv_m, deriv_w);
        const double formula = derivative_at_zero(params);
        const double fd1 = fd_derivative_at_zero(params, deriv_h, 1);
        const double fd2 = fd_derivative_at_zero(params, deriv_h, 2);
        JsonWriter w;
        w.begin_object();
        w.key("formula").number(formula);
        w.key("fd_d1").number(fd1);
        w.key("fd_d2").number(fd2);
        w.key("relative_error_d1").number(std::abs(fd1 - formula) / (1.0 + std::abs(formula)));
        w.key("relative_error_d2").number(std::abs(fd2 - formula) / (1.0 + std::abs(formula)));
        w.key("h").number(deriv_h);
        w.end_object();
        out << w.str() << '\n';
    });

    // --- search --------------------------------------------------------------
    auto* search_cmd = app.add_subcommand(
        "search", "Seeded random search for symmetrized bound > Hoelder bound");
    SearchConfig cfg;
    bool expect_none = false;
    bool expect_some = false;
    std::vector<double> inject;
    search_cmd->add_option("--p", cfg.p, "exponent p in (1, inf)")->required();
    search_cmd->add_option("--atoms", cfg.atoms, "atoms per instance, in [2, 256]")->required();
    search_cmd->add_option("--trials", cfg.trials, "number of trials")->required();
    search_cmd->add_option("--seed", cfg.seed, "RNG seed")->required();
    search_cmd->add_option("--threads", cfg.threads, "worker threads (never affects results)");
    auto* none_flag = search_cmd->add_flag("--expect-none", expect_none,
                                           "exit 3 unless violations_found = 0");
    auto* some_flag = search_cmd->add_flag("--expect-some", expect_some,
                                           "exit 3 unless violations_found > 0");
    none_flag->excludes(some_flag);
    search_cmd
        ->add_option("--inject-family", inject,
                     "M,W,T: run the family instance (p from --p) as trial 0")
        ->delimiter(',')
        ->expected(3);
    search_cmd->callback([&] {
        if (!inject.empty()) {
            cfg.inject_family = FamilyInjection{inject[0], inject[1], inject[2]};
        }
        const SearchResult res = random_search(cfg);
        out << to_json(res, cfg) << '\n';
        if ((expect_none && res.violations_found > 0) ||
            (expect_some && res.violations_found == 0)) {
            outcome.exit_code = 3;
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* active = &app;
        while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
        out << active->help();
    } catch (const CLI::CallForVersion&) {
        out << version;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        outcome.exit_code = 1;
    } catch (const std::exception& e) {
        const int code = classify_error(e);
        err << (code == 2 ? "internal invariant failure: " : "error: ") << e.what() << '\n';
        outcome.exit_code = code;
    }

    outcome.payload = out.str();
    outcome.diagnostics = err.str();
    return outcome;
}

}  // namespace holderkit
