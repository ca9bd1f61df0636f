// Minimal tour: compare mu(fg) with the Hoelder and max-min bounds on a
// two-atom space, print the p = 2 improvement identity, and evaluate the
// two-piece family at one parameter point.

#include <cstdio>

#include <holderkit/holderkit.hpp>

int main() {
    using namespace holderkit;

    const DiscreteMeasure mu({0.5, 0.5});
    const SampledFunction f({1.0, 2.0});
    const SampledFunction g({2.0, 1.0});
    const ExponentPair e(2.0);

    const BoundReport rep = bound_report(mu, f, g, e);
    std::printf("mu(fg)      = %.6f\n", rep.mu_fg);
    std::printf("holder      = %.6f\n", rep.holder);
    std::printf("maxmin B_2  = %.6f\n", rep.b_p);

    const CsIdentityReport id = cs_identity_report(mu, f, g);
    std::printf("mu(a)mu(b)  = %.6f = %.6f + %.6f (residual %.3g)\n", id.lhs, id.rhs_main,
                id.improvement, id.residual);

    const FamilyParams params(3.0, 0.5, 2.0);
    const GapPoint gp = gap_pair(params, 0.05);
    std::printf("family p=3, m=0.5, w=2, t=0.05: d1 = %.6f, d2 = %.6f\n", gp.d1, gp.d2);
    std::printf("gap derivative at t=0: %.6f\n", derivative_at_zero(params));
    return 0;
}
