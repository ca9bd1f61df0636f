#pragma once

#include <algorithm>
#include <cmath>

#include "holderkit/errors.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/tolerances.hpp"

namespace holderkit {

// ============================================================================
// Hoelder, max-min, and Cauchy-Schwarz improvement bounds
// ============================================================================

/// mu(f^p)^(1/p) * mu(g^q)^(1/q), the Hoelder upper bound on mu(fg).
inline double holder_rhs(const DiscreteMeasure& mu, const SampledFunction& f,
                         const SampledFunction& g, const ExponentPair& e) {
    return lr_mean(mu, f, e.p()) * lr_mean(mu, g, e.q());
}

/// B_p(f, g) = mu((f v g)^p)^(1/p) * mu((f ^ g)^q)^(1/q), the bound obtained
/// by feeding the max-min transform into the generalized Hoelder inequality.
/// Symmetric in f and g.
inline double maxmin_bound(const DiscreteMeasure& mu, const SampledFunction& f,
                           const SampledFunction& g, const ExponentPair& e) {
    return lr_mean(mu, pointwise(PointwiseOp::max, f, g), e.p()) *
           lr_mean(mu, pointwise(PointwiseOp::min, f, g), e.q());
}

/// B_p ^ B_q: the smaller of the max-min bounds with exponent roles exchanged.
inline double symmetrized_bound(const DiscreteMeasure& mu, const SampledFunction& f,
                                const SampledFunction& g, const ExponentPair& e) {
    return std::min(maxmin_bound(mu, f, g, e), maxmin_bound(mu, f, g, e.swapped()));
}

/// The p = 2 decomposition with a = f^2, b = g^2. The exact identity
///
///     mu(a) mu(b) = mu(a v b) mu(a ^ b) + mu((a-b)+) mu((b-a)+)
///
/// shows that the max-min bound at p = 2 never exceeds Cauchy-Schwarz and
/// quantifies the improvement; the improvement term is at most
/// mu(1)^2 * (sup |a-b|)^2, which is why counterexamples for p != 2 are built
/// from functions close to each other.
struct CsIdentityReport {
    double lhs;          ///< mu(a) * mu(b)
    double rhs_main;     ///< mu(a v b) * mu(a ^ b)
    double improvement;  ///< mu((a-b)+) * mu((b-a)+)
    double residual;     ///< lhs - rhs_main - improvement
    double eps_bound;    ///< mu(1)^2 * (sup_i |a_i - b_i|)^2
};

inline CsIdentityReport cs_identity_report(const DiscreteMeasure& mu, const SampledFunction& f,
                                           const SampledFunction& g) {
    detail::require_paired(mu, f, "cs_identity_report");
    detail::require_paired(mu, g, "cs_identity_report");

    const std::size_t n = mu.size();
    std::vector<double> a(n);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = f.values()[i] * f.values()[i];
        b[i] = g.values()[i] * g.values()[i];
    }
    const SampledFunction fa(std::move(a));
    const SampledFunction fb(std::move(b));

    CsIdentityReport rep{};
    rep.lhs = integrate(mu, fa) * integrate(mu, fb);
    rep.rhs_main = integrate(mu, pointwise(PointwiseOp::max, fa, fb)) *
                   integrate(mu, pointwise(PointwiseOp::min, fa, fb));
    rep.improvement = integrate(mu, pointwise(PointwiseOp::pos_diff, fa, fb)) *
                      integrate(mu, pointwise(PointwiseOp::pos_diff, fb, fa));
    rep.residual = rep.lhs - rep.rhs_main - rep.improvement;

    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sup = std::max(sup, std::abs(fa.values()[i] - fb.values()[i]));
    }
    const double mass = mu.total_mass();
    rep.eps_bound = mass * mass * sup * sup;

    if (rep.improvement < 0.0) {
        throw invariant_error("cs_identity_report: negative improvement term");
    }
    if (std::abs(rep.residual) > identity_margin(rep.lhs)) {
        throw invariant_error("cs_identity_report: identity residual above tolerance");
    }
    if (rep.improvement > rep.eps_bound + identity_margin(rep.eps_bound)) {
        throw invariant_error("cs_identity_report: improvement exceeds the sup bound");
    }
    const double mu_fg = integrate(mu, pointwise(PointwiseOp::product, f, g));
    if (mu_fg * mu_fg > rep.rhs_main + ordering_margin(rep.rhs_main)) {
        throw invariant_error("cs_identity_report: mu(fg)^2 exceeds mu(a v b) mu(a ^ b)");
    }
    return rep;
}

/// mu(fg) against the Hoelder bound, both max-min bounds, and their minimum.
/// The violation flag carries a strict margin so floating-point ties never
/// report a false counterexample.
struct BoundReport {
    double mu_fg;
    double holder;       ///< mu(f^p)^(1/p) * mu(g^q)^(1/q)
    double b_p;          ///< max-min bound at (p, q)
    double b_q;          ///< max-min bound at (q, p)
    double symmetrized;  ///< min(b_p, b_q)
    bool improves_holder;        ///< symmetrized <= holder + tol
    bool violates_holder_order;  ///< symmetrized >  holder + tol
};

inline BoundReport bound_report(const DiscreteMeasure& mu, const SampledFunction& f,
                                const SampledFunction& g, const ExponentPair& e) {
    BoundReport rep{};
    rep.mu_fg = integrate(mu, pointwise(PointwiseOp::product, f, g));
    rep.holder = holder_rhs(mu, f, g, e);
    rep.b_p = maxmin_bound(mu, f, g, e);
    rep.b_q = maxmin_bound(mu, f, g, e.swapped());
    rep.symmetrized = std::min(rep.b_p, rep.b_q);

    if (rep.mu_fg > rep.holder + ordering_margin(rep.holder) ||
        rep.mu_fg > rep.b_p + ordering_margin(rep.b_p) ||
        rep.mu_fg > rep.b_q + ordering_margin(rep.b_q)) {
        throw invariant_error("bound_report: mu(fg) exceeds an upper bound");
    }

    const double tol = ordering_margin(rep.holder);
    rep.improves_holder = rep.symmetrized <= rep.holder + tol;
    rep.violates_holder_order = rep.symmetrized > rep.holder + tol;
    return rep;
}

}  // namespace holderkit
