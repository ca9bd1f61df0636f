#pragma once

namespace holderkit {

inline constexpr char kVersion[] = "0.1.0";

/// Margin for inequality ordering checks: a bound B "holds" when
/// lhs <= B + kOrderingTol * (1 + B). All computations are in 64-bit binary
/// floating point, so every ordering carries this explicit slack.
inline constexpr double kOrderingTol = 1e-9;

/// Relative tolerance for checks of exact algebraic identities.
inline constexpr double kIdentityRelTol = 1e-12;

/// Default step for the finite-difference derivative validation.
inline constexpr double kDefaultFdStep = 1e-5;

/// Required agreement between the closed-form derivative and the
/// finite-difference estimate at the default step.
inline constexpr double kDerivativeCheckTol = 1e-6;

constexpr double ordering_margin(double bound) { return kOrderingTol * (1.0 + bound); }

constexpr double identity_margin(double scale) { return kIdentityRelTol * (1.0 + scale); }

}  // namespace holderkit
