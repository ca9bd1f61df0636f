#pragma once

#include <charconv>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "holderkit/errors.hpp"
#include "holderkit/measure.hpp"
#include "holderkit/tolerances.hpp"

namespace holderkit {

// ============================================================================
// Product-preserving transformations T = (T1, T2) on [0, inf)^2
// ============================================================================
//
// T preserves the product when T1(x,y) * T2(x,y) = x y for all x, y >= 0.
// Substituting T1(f,g), T2(f,g) for f, g in Hoelder's inequality then yields
//
//     mu(fg) <= mu(T1(f,g)^p)^(1/p) * mu(T2(f,g)^q)^(1/q).

struct ScaleStep {
    double k;  // (x, y) -> (k x, y / k)
};
struct SwapStep {};    // (x, y) -> (y, x)
struct MaxMinStep {};  // (x, y) -> (x v y, x ^ y)

using TransformStep = std::variant<ScaleStep, SwapStep, MaxMinStep>;

/// A product-preserving transform: a non-empty sequence of primitive steps
/// applied left to right. Only product-preserving primitives are
/// constructible, so every instance satisfies T1 * T2 = x y by composition;
/// verify_product_preserving() re-checks the identity numerically.
class TransformSpec {
public:
    static TransformSpec scale(double k) {
        if (!std::isfinite(k) || k <= 0.0) {
            throw domain_error("TransformSpec::scale: k must be finite and > 0");
        }
        return TransformSpec({ScaleStep{k}});
    }

    static TransformSpec swap() { return TransformSpec({SwapStep{}}); }

    static TransformSpec maxmin() { return TransformSpec({MaxMinStep{}}); }

    /// Concatenation, applied left to right.
    static TransformSpec compose(const std::vector<TransformSpec>& parts) {
        if (parts.empty()) {
            throw usage_error("TransformSpec::compose: empty composition");
        }
        std::vector<TransformStep> steps;
        for (const TransformSpec& part : parts) {
            steps.insert(steps.end(), part.steps_.begin(), part.steps_.end());
        }
        return TransformSpec(std::move(steps));
    }

    /// Parses "scale:K", "swap", "maxmin", or a '>'-separated composition
    /// such as "scale:2>maxmin". Errors name the offending token.
    static TransformSpec parse(std::string_view text) {
        std::vector<TransformStep> steps;
        std::size_t pos = 0;
        while (true) {
            const std::size_t sep = text.find('>', pos);
            const std::string_view token =
                text.substr(pos, sep == std::string_view::npos ? std::string_view::npos
                                                               : sep - pos);
            steps.push_back(parse_token(token));
            if (sep == std::string_view::npos) break;
            pos = sep + 1;
        }
        return TransformSpec(std::move(steps));
    }

    std::string to_string() const {
        std::string out;
        for (const TransformStep& step : steps_) {
            if (!out.empty()) out += '>';
            if (const auto* s = std::get_if<ScaleStep>(&step)) {
                char buf[32];
                const auto res = std::to_chars(buf, buf + sizeof(buf), s->k);
                out += "scale:";
                out.append(buf, res.ptr);
            } else if (std::holds_alternative<SwapStep>(step)) {
                out += "swap";
            } else {
                out += "maxmin";
            }
        }
        return out;
    }

    const std::vector<TransformStep>& steps() const noexcept { return steps_; }

    /// (T1(x, y), T2(x, y)) for finite x, y >= 0.
    std::pair<double, double> apply(double x, double y) const {
        if (!std::isfinite(x) || !std::isfinite(y) || x < 0.0 || y < 0.0) {
            throw domain_error("TransformSpec::apply: inputs must be finite and >= 0");
        }
        for (const TransformStep& step : steps_) {
            if (const auto* s = std::get_if<ScaleStep>(&step)) {
                x = s->k * x;
                y = y / s->k;
            } else if (std::holds_alternative<SwapStep>(step)) {
                std::swap(x, y);
            } else {
                const double hi = std::max(x, y);
                const double lo = std::min(x, y);
                x = hi;
                y = lo;
            }
        }
        return {x, y};
    }

private:
    explicit TransformSpec(std::vector<TransformStep> steps) : steps_(std::move(steps)) {}

    static TransformStep parse_token(std::string_view token) {
        if (token == "swap") return SwapStep{};
        if (token == "maxmin") return MaxMinStep{};
        constexpr std::string_view prefix = "scale:";
        if (token.substr(0, prefix.size()) == prefix) {
            const std::string_view num = token.substr(prefix.size());
            double k = 0.0;
            const auto res = std::from_chars(num.data(), num.data() + num.size(), k);
            if (res.ec != std::errc{} || res.ptr != num.data() + num.size() ||
                !std::isfinite(k) || k <= 0.0) {
                throw usage_error("transform token '" + std::string(token) +
                                  "': scale factor must be a finite number > 0");
            }
            return ScaleStep{k};
        }
        throw usage_error("unrecognized transform token '" + std::string(token) + "'");
    }

    std::vector<TransformStep> steps_;
};

/// Max of |T1(x,y) * T2(x,y) - x y| over the grid. Exactly 0 for swap and
/// max-min; scale steps only incur rounding of (k x)(y / k).
inline double verify_product_preserving(const TransformSpec& T,
                                        std::span<const std::pair<double, double>> grid) {
    if (grid.empty()) {
        throw usage_error("verify_product_preserving: empty grid");
    }
    double worst = 0.0;
    for (const auto& [x, y] : grid) {
        const auto [u, v] = T.apply(x, y);
        worst = std::max(worst, std::abs(u * v - x * y));
    }
    return worst;
}

/// mu(T1(f,g)^p)^(1/p) * mu(T2(f,g)^q)^(1/q), the transformed Hoelder bound.
/// Checked on exit against mu(fg) with the standard ordering margin.
inline double transformed_holder_bound(const DiscreteMeasure& mu, const SampledFunction& f,
                                       const SampledFunction& g, const ExponentPair& e,
                                       const TransformSpec& T) {
    detail::require_paired(mu, f, "transformed_holder_bound");
    detail::require_paired(mu, g, "transformed_holder_bound");
    std::vector<double> t1(mu.size());
    std::vector<double> t2(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const auto [u, v] = T.apply(f.values()[i], g.values()[i]);
        t1[i] = u;
        t2[i] = v;
    }
    const double bound = lr_mean(mu, SampledFunction(std::move(t1)), e.p()) *
                         lr_mean(mu, SampledFunction(std::move(t2)), e.q());
    const double lhs = integrate(mu, pointwise(PointwiseOp::product, f, g));
    if (lhs > bound + ordering_margin(bound)) {
        throw invariant_error("transformed_holder_bound: mu(fg) exceeds the transformed bound");
    }
    return bound;
}

}  // namespace holderkit
