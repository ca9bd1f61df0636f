#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <holderkit/bounds.hpp>
#include <holderkit/family.hpp>

#include "corpus.hpp"

using namespace holderkit;

namespace {

// Frozen reference values for the family instance p = 3, m = 0.5, w = 2,
// t = 0.05, computed independently with 60-digit arithmetic.
constexpr double kFamHolder = 2.4489548797801223;
constexpr double kFamBp = 2.4657793951449124;
constexpr double kFamBq = 2.4648591726910268;
constexpr double kFamMuFg = 2.425;

}  // namespace

TEST_CASE("holder_rhs worked examples", "[bounds]") {
    // single atom: equality with mu(fg)
    const DiscreteMeasure unit({1.0});
    CHECK(holder_rhs(unit, SampledFunction({2.0}), SampledFunction({3.0}), ExponentPair(4.0)) ==
          Catch::Approx(6.0).epsilon(1e-14));

    // normalized constants: 1 * 1 = 1
    const DiscreteMeasure mass1({0.25, 0.75});
    CHECK(holder_rhs(mass1, SampledFunction::constant(1.0, 2), SampledFunction::constant(1.0, 2),
                     ExponentPair(3.0)) == Catch::Approx(1.0).epsilon(1e-14));

    const DiscreteMeasure half({0.5, 0.5});
    const SampledFunction f({1.0, 2.0});
    const SampledFunction g({2.0, 1.0});
    CHECK(holder_rhs(half, f, g, ExponentPair(2.0)) == Catch::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("maxmin_bound worked examples", "[bounds]") {
    const DiscreteMeasure half({0.5, 0.5});
    const SampledFunction f({1.0, 2.0});
    const SampledFunction g({2.0, 1.0});
    const ExponentPair e(2.0);

    // f = g collapses the bound to holder_rhs exactly
    CHECK(maxmin_bound(half, f, f, e) == holder_rhs(half, f, f, e));

    // the improvement closes the Cauchy-Schwarz gap entirely here
    CHECK(maxmin_bound(half, f, g, e) == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(integrate(half, pointwise(PointwiseOp::product, f, g)) ==
          Catch::Approx(2.0).epsilon(1e-15));

    // family instance cross-check against frozen independent values
    const FamilyParams params(3.0, 0.5, 2.0);
    const FamilyInstance inst = family_functions(params, 0.05);
    const double bp = maxmin_bound(inst.mu, inst.f, inst.g, params.exponents());
    const double holder = holder_rhs(inst.mu, inst.f, inst.g, params.exponents());
    CHECK(std::abs(bp - kFamBp) <= 1e-12 * kFamBp);
    CHECK(std::abs(holder - kFamHolder) <= 1e-12 * kFamHolder);
}

TEST_CASE("symmetrized_bound", "[bounds]") {
    const DiscreteMeasure half({0.5, 0.5});
    const SampledFunction f({1.0, 2.0});
    const SampledFunction g({2.0, 1.0});

    // p = 2 is self-conjugate
    CHECK(symmetrized_bound(half, f, g, ExponentPair(2.0)) ==
          maxmin_bound(half, f, g, ExponentPair(2.0)));

    // f = g collapses to holder
    CHECK(symmetrized_bound(half, f, f, ExponentPair(3.0)) ==
          holder_rhs(half, f, f, ExponentPair(3.0)));

    // family instance: strictly above the Hoelder bound
    const FamilyParams params(3.0, 0.5, 2.0);
    const FamilyInstance inst = family_functions(params, 0.05);
    const double sym = symmetrized_bound(inst.mu, inst.f, inst.g, params.exponents());
    const double holder = holder_rhs(inst.mu, inst.f, inst.g, params.exponents());
    CHECK(std::abs(sym - std::min(kFamBp, kFamBq)) <= 1e-12 * sym);
    CHECK(sym > holder + ordering_margin(holder));
}

TEST_CASE("cs_identity_report worked examples", "[bounds]") {
    const DiscreteMeasure ones({1.0, 1.0});
    const SampledFunction f({1.0, 2.0});
    const SampledFunction g({2.0, 1.0});

    const CsIdentityReport rep = cs_identity_report(ones, f, g);
    CHECK(rep.lhs == Catch::Approx(25.0).epsilon(1e-15));
    CHECK(rep.rhs_main == Catch::Approx(16.0).epsilon(1e-15));
    CHECK(rep.improvement == Catch::Approx(9.0).epsilon(1e-15));
    CHECK(rep.residual == 0.0);
    // mu(fg)^2 = 16 <= rhs_main: equality case of the rewritten inequality
    const double mu_fg = integrate(ones, pointwise(PointwiseOp::product, f, g));
    CHECK(mu_fg * mu_fg == Catch::Approx(16.0).epsilon(1e-15));

    const CsIdentityReport same = cs_identity_report(ones, f, f);
    CHECK(same.improvement == 0.0);
    CHECK(same.lhs == same.rhs_main);

    CHECK_THROWS_AS(cs_identity_report(ones, f, SampledFunction({1.0})), dimension_error);
}

TEST_CASE("identity, rewritten inequality and eps bound on random instances",
          "[bounds][property]") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const corpus::Instance inst = corpus::draw(301, i);
        const CsIdentityReport rep = cs_identity_report(inst.mu, inst.f, inst.g);

        REQUIRE(std::abs(rep.residual) <= identity_margin(rep.lhs));
        REQUIRE(rep.improvement >= 0.0);
        REQUIRE(rep.improvement <= rep.eps_bound + identity_margin(rep.eps_bound));
        // p = 2 improvement: the max-min bound cannot exceed Cauchy-Schwarz
        REQUIRE(rep.rhs_main <= rep.lhs + identity_margin(rep.lhs));

        const double b2 = maxmin_bound(inst.mu, inst.f, inst.g, ExponentPair(2.0));
        REQUIRE(b2 * b2 <= rep.lhs + identity_margin(rep.lhs));

        // swapping f and g changes nothing
        const CsIdentityReport swapped = cs_identity_report(inst.mu, inst.g, inst.f);
        REQUIRE(swapped.lhs == Catch::Approx(rep.lhs).epsilon(1e-15));
        REQUIRE(swapped.rhs_main == rep.rhs_main);
        REQUIRE(swapped.improvement == rep.improvement);
    }
}

TEST_CASE("maxmin_bound is symmetric in f and g", "[bounds][property]") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        const corpus::Instance inst = corpus::draw(302, i);
        const ExponentPair e(inst.p);
        REQUIRE(maxmin_bound(inst.mu, inst.f, inst.g, e) ==
                maxmin_bound(inst.mu, inst.g, inst.f, e));
    }
}

TEST_CASE("bound_report flags", "[bounds]") {
    // p = 2: never a violation
    for (std::uint64_t i = 0; i < 500; ++i) {
        const corpus::Instance inst = corpus::draw(303, i);
        const BoundReport rep = bound_report(inst.mu, inst.f, inst.g, ExponentPair(2.0));
        REQUIRE_FALSE(rep.violates_holder_order);
        REQUIRE(rep.improves_holder);
        REQUIRE(rep.symmetrized == std::min(rep.b_p, rep.b_q));
    }

    // the family instance is a certified violation
    const FamilyParams params(3.0, 0.5, 2.0);
    const FamilyInstance inst = family_functions(params, 0.05);
    const BoundReport rep = bound_report(inst.mu, inst.f, inst.g, params.exponents());
    CHECK(rep.violates_holder_order);
    CHECK_FALSE(rep.improves_holder);
    CHECK(std::abs(rep.mu_fg - kFamMuFg) <= 1e-12 * kFamMuFg);
    CHECK(std::abs(rep.b_p - kFamBp) <= 1e-12 * kFamBp);
    CHECK(std::abs(rep.b_q - kFamBq) <= 1e-12 * kFamBq);

    // f = g: improves with symmetrized == holder
    const DiscreteMeasure half({0.5, 0.5});
    const SampledFunction f({1.0, 2.0});
    const BoundReport same = bound_report(half, f, f, ExponentPair(3.0));
    CHECK(same.improves_holder);
    CHECK(same.symmetrized == same.holder);
}

TEST_CASE("mu(fg) never exceeds the reported bounds", "[bounds][property]") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const corpus::Instance inst = corpus::draw(304, i);
        const BoundReport rep = bound_report(inst.mu, inst.f, inst.g, ExponentPair(inst.p));
        REQUIRE(rep.mu_fg <= rep.holder + ordering_margin(rep.holder));
        REQUIRE(rep.mu_fg <= rep.b_p + ordering_margin(rep.b_p));
        REQUIRE(rep.mu_fg <= rep.b_q + ordering_margin(rep.b_q));
    }
}
