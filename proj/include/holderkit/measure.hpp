#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "holderkit/errors.hpp"

namespace holderkit {

// ============================================================================
// Finite discrete measure spaces and nonnegative sampled functions
// ============================================================================
//
// Every integrand handled here is a step function, represented exactly by one
// value per atom; an atom's weight is the measure of its piece. In particular
// a step function on [0,1) with Lebesgue measure is encoded without any
// approximation by atoms weighted by the piece lengths.

/// A finite measure space: one strictly positive, finite weight per atom.
/// Immutable after construction.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(std::vector<double> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) {
            throw domain_error("DiscreteMeasure: at least one atom is required");
        }
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            const double w = weights_[i];
            if (!std::isfinite(w) || w <= 0.0) {
                throw domain_error("DiscreteMeasure: weight #" + std::to_string(i) +
                                   " must be strictly positive and finite");
            }
            total_mass_ += w;
        }
    }

    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }

    /// mu(1), the total mass of the space.
    double total_mass() const noexcept { return total_mass_; }

private:
    std::vector<double> weights_;
    double total_mass_ = 0.0;
};

/// A nonnegative measurable function sampled on the atoms of a
/// DiscreteMeasure: one finite value >= 0 per atom. The pairing with a
/// measure is re-checked by every operation that takes both.
class SampledFunction {
public:
    explicit SampledFunction(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw domain_error("SampledFunction: at least one value is required");
        }
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double v = values_[i];
            if (!std::isfinite(v) || v < 0.0) {
                throw domain_error("SampledFunction: value #" + std::to_string(i) +
                                   " must be finite and >= 0");
            }
        }
    }

    static SampledFunction constant(double value, std::size_t n) {
        return SampledFunction(std::vector<double>(n, value));
    }

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

/// q = p / (p - 1). Requires p finite and > 1.
inline double conjugate_exponent(double p) {
    if (!std::isfinite(p) || p <= 1.0) {
        throw domain_error("conjugate_exponent: p must be finite and > 1");
    }
    return p / (p - 1.0);
}

/// Conjugate exponents (p, q) with 1/p + 1/q = 1. q is always derived from p;
/// callers never supply it independently.
class ExponentPair {
public:
    explicit ExponentPair(double p) : p_(p), q_(conjugate_exponent(p)) { check_sum(); }

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    /// The pair with the roles of p and q exchanged. Exchanges the stored
    /// values exactly instead of recomputing the conjugate.
    ExponentPair swapped() const noexcept { return ExponentPair(q_, p_, raw_tag{}); }

private:
    struct raw_tag {};
    ExponentPair(double p, double q, raw_tag) noexcept : p_(p), q_(q) {}

    void check_sum() const {
        if (std::abs(1.0 / p_ + 1.0 / q_ - 1.0) > 1e-14) {
            throw invariant_error("ExponentPair: 1/p + 1/q deviates from 1");
        }
    }

    double p_;
    double q_;
};

namespace detail {

inline void require_paired(const DiscreteMeasure& mu, const SampledFunction& f,
                           const char* where) {
    if (mu.size() != f.size()) {
        throw dimension_error(std::string(where) + ": measure has " +
                              std::to_string(mu.size()) + " atoms but function has " +
                              std::to_string(f.size()) + " values");
    }
}

inline void require_same_length(const SampledFunction& f, const SampledFunction& g,
                                const char* where) {
    if (f.size() != g.size()) {
        throw dimension_error(std::string(where) + ": functions have lengths " +
                              std::to_string(f.size()) + " and " + std::to_string(g.size()));
    }
}

}  // namespace detail

/// mu(f) = sum_i weights[i] * values[i].
inline double integrate(const DiscreteMeasure& mu, const SampledFunction& f) {
    detail::require_paired(mu, f, "integrate");
    double sum = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sum += mu.weights()[i] * f.values()[i];
    }
    return sum;
}

/// mu(f^r)^(1/r) for r > 1. 0^r is taken as 0, so the result is 0 exactly
/// when f vanishes on every atom.
inline double lr_mean(const DiscreteMeasure& mu, const SampledFunction& f, double r) {
    detail::require_paired(mu, f, "lr_mean");
    if (!std::isfinite(r) || r <= 1.0) {
        throw domain_error("lr_mean: exponent r must be finite and > 1");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sum += mu.weights()[i] * std::pow(f.values()[i], r);
    }
    return std::pow(sum, 1.0 / r);
}

enum class PointwiseOp {
    product,   ///< (f g)(s)       = f(s) * g(s)
    max,       ///< (f v g)(s)     = max(f(s), g(s))
    min,       ///< (f ^ g)(s)     = min(f(s), g(s))
    pos_diff,  ///< ((f - g)+)(s)  = max(f(s) - g(s), 0)
};

/// Elementwise combination of two same-length functions. Note the exact
/// identity (f v g)(f ^ g) = f g: max/min only permute values per atom.
inline SampledFunction pointwise(PointwiseOp op, const SampledFunction& f,
                                 const SampledFunction& g) {
    detail::require_same_length(f, g, "pointwise");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = f.values()[i];
        const double b = g.values()[i];
        switch (op) {
            case PointwiseOp::product:  out[i] = a * b; break;
            case PointwiseOp::max:      out[i] = std::max(a, b); break;
            case PointwiseOp::min:      out[i] = std::min(a, b); break;
            case PointwiseOp::pos_diff: out[i] = std::max(a - b, 0.0); break;
        }
    }
    return SampledFunction(std::move(out));
}

inline SampledFunction operator+(const SampledFunction& f, const SampledFunction& g) {
    detail::require_same_length(f, g, "operator+");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f.values()[i] + g.values()[i];
    }
    return SampledFunction(std::move(out));
}

inline SampledFunction operator*(double c, const SampledFunction& f) {
    if (!std::isfinite(c) || c < 0.0) {
        throw domain_error("operator*: scalar must be finite and >= 0");
    }
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = c * f.values()[i];
    }
    return SampledFunction(std::move(out));
}

}  // namespace holderkit
