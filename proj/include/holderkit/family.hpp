#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "holderkit/errors.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/tolerances.hpp"

namespace holderkit {

// ============================================================================
// The two-piece counterexample family
// ============================================================================
//
// On [0,1) with Lebesgue measure (two atoms of mass m and 1-m), set
//
//     g = w        on [0, m),   1        on [m, 1)
//     f = (1-t) w  on [0, m),   1 + t    on [m, 1)
//
// with p != 2 and w chosen so that w^p - w^q > 0 (w < 1 for p < 2, w > 1 for
// p > 2). For t > 0 the symmetrized max-min bound B_p ^ B_q exceeds the
// Hoelder bound: both gap curves d_1, d_2 vanish at t = 0 and share the
// strictly positive derivative
//
//     d'(0) = (1-m) m (w^p - w^q) (1-m+m w^p)^(-1/q) (1-m+m w^q)^(-1/p).
//
// Everything below is closed-form only; it deliberately does not go through
// the integration pipeline, so the two routes can be checked against each
// other.

/// Validated parameters (p, m, w) of the family. Rejects p = 2 and any w on
/// the wrong side of 1 for the given p.
class FamilyParams {
public:
    FamilyParams(double p, double m, double w) : exponents_(p), m_(m), w_(w) {
        if (p == 2.0) {
            throw exceptional_exponent_error(
                "FamilyParams: p = 2 is the exceptional exponent; the family requires p != 2");
        }
        if (!std::isfinite(m) || m <= 0.0 || m >= 1.0) {
            throw domain_error("FamilyParams: m must lie in (0, 1)");
        }
        if (!std::isfinite(w) || w <= 0.0) {
            throw domain_error("FamilyParams: w must be finite and > 0");
        }
        if ((p < 2.0 && w >= 1.0) || (p > 2.0 && w <= 1.0)) {
            throw sign_condition_error(
                "FamilyParams: need w in (0,1) for p in (1,2) and w in (1,inf) for p in (2,inf)");
        }
        if (!(std::pow(w, this->p()) - std::pow(w, this->q()) > 0.0)) {
            throw sign_condition_error("FamilyParams: w^p - w^q is not positive");
        }
    }

    double p() const noexcept { return exponents_.p(); }
    double q() const noexcept { return exponents_.q(); }
    double m() const noexcept { return m_; }
    double w() const noexcept { return w_; }
    const ExponentPair& exponents() const noexcept { return exponents_; }

private:
    ExponentPair exponents_;
    double m_;
    double w_;
};

struct FamilyInstance {
    DiscreteMeasure mu;
    SampledFunction f;
    SampledFunction g;
};

namespace detail {

inline void require_family_t(double t) {
    if (!std::isfinite(t) || t < 0.0 || t >= 1.0) {
        throw domain_error("family: t must lie in [0, 1)");
    }
}

}  // namespace detail

/// The instance (mu, f, g) at offset t: mu = {m, 1-m}, g = {w, 1},
/// f = {(1-t) w, 1+t}. Exact: both functions are constant on each piece.
inline FamilyInstance family_functions(const FamilyParams& params, double t) {
    detail::require_family_t(t);
    return FamilyInstance{DiscreteMeasure({params.m(), 1.0 - params.m()}),
                          SampledFunction({(1.0 - t) * params.w(), 1.0 + t}),
                          SampledFunction({params.w(), 1.0})};
}

/// The Hoelder bound mu(f^p)^(1/p) mu(g^q)^(1/q) along the family, in closed
/// form.
inline double family_holder_bound(const FamilyParams& params, double t) {
    detail::require_family_t(t);
    const double p = params.p();
    const double q = params.q();
    const double m = params.m();
    const double w = params.w();
    const double fp = (1.0 - m) * std::pow(1.0 + t, p) + m * std::pow(1.0 - t, p) * std::pow(w, p);
    const double gq = (1.0 - m) + m * std::pow(w, q);
    return std::pow(fp, 1.0 / p) * std::pow(gq, 1.0 / q);
}

/// Gap curves at one offset: d1 = B_p - Hoelder and d2 = B_q - Hoelder.
struct GapPoint {
    double t;
    double d1;
    double d2;
    double min_gap;  ///< min(d1, d2), the symmetrized bound's margin over Hoelder
};

inline GapPoint gap_pair(const FamilyParams& params, double t) {
    detail::require_family_t(t);
    const double p = params.p();
    const double q = params.q();
    const double m = params.m();
    const double w = params.w();

    const double up_p = std::pow(1.0 + t, p);
    const double up_q = std::pow(1.0 + t, q);
    const double dn_p = std::pow(1.0 - t, p);
    const double dn_q = std::pow(1.0 - t, q);
    const double w_p = std::pow(w, p);
    const double w_q = std::pow(w, q);

    // On [0, m) the larger of f, g is g = w; on [m, 1) it is f = 1+t.
    const double max_p = (1.0 - m) * up_p + m * w_p;        // mu((f v g)^p)
    const double min_q = (1.0 - m) + m * dn_q * w_q;        // mu((f ^ g)^q)
    const double max_q = (1.0 - m) * up_q + m * w_q;        // mu((f v g)^q)
    const double min_p = (1.0 - m) + m * dn_p * w_p;        // mu((f ^ g)^p)
    const double f_p = (1.0 - m) * up_p + m * dn_p * w_p;   // mu(f^p)
    const double g_q = (1.0 - m) + m * w_q;                 // mu(g^q)

    const double holder = std::pow(f_p, 1.0 / p) * std::pow(g_q, 1.0 / q);
    const double d1 = std::pow(max_p, 1.0 / p) * std::pow(min_q, 1.0 / q) - holder;
    const double d2 = std::pow(max_q, 1.0 / q) * std::pow(min_p, 1.0 / p) - holder;
    return GapPoint{t, d1, d2, std::min(d1, d2)};
}

/// d'_j(0), identical for j = 1 and j = 2; strictly positive for every valid
/// parameter set because each factor is positive.
inline double derivative_at_zero(const FamilyParams& params) {
    const double p = params.p();
    const double q = params.q();
    const double m = params.m();
    const double w = params.w();
    return (1.0 - m) * m * (std::pow(w, p) - std::pow(w, q)) *
           std::pow(1.0 - m + m * std::pow(w, p), -1.0 / q) *
           std::pow(1.0 - m + m * std::pow(w, q), -1.0 / p);
}

/// Forward-difference estimate of d'_j(0), Richardson-extrapolated twice.
/// d_j is only defined for t >= 0, so a centered difference is not available;
/// the quotient D(s) = (d_j(s) - d_j(0)) / s is sampled at s = h, h/2, h/4
/// and combined as (4 R(h/2) - R(h)) / 3 with R(s) = 2 D(s/2) - D(s), leaving
/// O(h^3) truncation error.
inline double fd_derivative_at_zero(const FamilyParams& params, double h, int j) {
    if (j != 1 && j != 2) {
        throw usage_error("fd_derivative_at_zero: j must be 1 or 2");
    }
    if (!std::isfinite(h) || h <= 0.0 || h > 1e-2) {
        throw usage_error("fd_derivative_at_zero: h must lie in (0, 1e-2]");
    }
    const auto pick = [j](const GapPoint& g) { return j == 1 ? g.d1 : g.d2; };
    const double d0 = pick(gap_pair(params, 0.0));
    const auto quotient = [&](double s) { return (pick(gap_pair(params, s)) - d0) / s; };
    const double dh = quotient(h);
    const double dh2 = quotient(h / 2.0);
    const double dh4 = quotient(h / 4.0);
    const double r_h = 2.0 * dh2 - dh;
    const double r_h2 = 2.0 * dh4 - dh2;
    return (4.0 * r_h2 - r_h) / 3.0;
}

/// Result of scanning the gap curves for a certified violation.
struct ViolationScan {
    bool found;        ///< some grid t has min_gap above the ordering margin
    double t;          ///< smallest qualifying t; the argmax of min_gap when not found
    double d1;
    double d2;
    double min_gap;
    double tolerance;  ///< ordering margin 1e-9 * (1 + Hoelder) at that t
    double max_min_gap;  ///< largest min_gap over the whole grid
    double t_at_max;
    int steps;
    double t_max;
};

/// Scans a log-spaced grid of steps offsets from 1e-6 to t_max (inclusive)
/// and returns the smallest grid t whose min_gap clears the ordering margin.
/// Positivity is certified on the grid only; nothing is extrapolated between
/// grid points. Not finding a qualifying t is a result, not an error: for p
/// very close to 2 the gap can stay below the margin everywhere.
inline ViolationScan find_violation_t(const FamilyParams& params, double t_max, int steps) {
    constexpr double t_lo = 1e-6;
    if (!std::isfinite(t_max) || t_max <= t_lo || t_max >= 1.0) {
        throw usage_error("find_violation_t: t_max must lie in (1e-6, 1)");
    }
    if (steps < 1) {
        throw usage_error("find_violation_t: steps must be positive");
    }

    ViolationScan scan{};
    scan.found = false;
    scan.steps = steps;
    scan.t_max = t_max;
    scan.max_min_gap = -std::numeric_limits<double>::infinity();

    const double log_lo = std::log(t_lo);
    const double log_hi = std::log(t_max);
    for (int i = 0; i < steps; ++i) {
        const double t =
            steps == 1 ? t_max
                       : std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                               static_cast<double>(steps - 1));
        const GapPoint gp = gap_pair(params, t);
        const double tol = ordering_margin(family_holder_bound(params, t));
        if (gp.min_gap > scan.max_min_gap) {
            scan.max_min_gap = gp.min_gap;
            scan.t_at_max = t;
        }
        if (!scan.found && gp.min_gap > tol) {
            scan.found = true;
            scan.t = t;
            scan.d1 = gp.d1;
            scan.d2 = gp.d2;
            scan.min_gap = gp.min_gap;
            scan.tolerance = tol;
        }
    }
    if (!scan.found) {
        const GapPoint gp = gap_pair(params, scan.t_at_max);
        scan.t = scan.t_at_max;
        scan.d1 = gp.d1;
        scan.d2 = gp.d2;
        scan.min_gap = gp.min_gap;
        scan.tolerance = ordering_margin(family_holder_bound(params, scan.t_at_max));
    }
    return scan;
}

/// Samples the gap curves on a linear grid 0, ..., t_max (both ends
/// included), for plotting.
inline std::vector<GapPoint> gap_curve(const FamilyParams& params, double t_max, int steps) {
    if (!std::isfinite(t_max) || t_max <= 0.0 || t_max >= 1.0) {
        throw usage_error("gap_curve: t_max must lie in (0, 1)");
    }
    if (steps < 2) {
        throw usage_error("gap_curve: at least 2 grid points are required");
    }
    std::vector<GapPoint> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back(gap_pair(params, t));
    }
    return out;
}

}  // namespace holderkit
