#pragma once

#include <optional>

#include "occupancy/kernel.hpp"

namespace occ {

enum class DeconvStatus { decomposable, indecomposable };

/// Negative value forced by the triangular recursion; proof of indecomposability
/// on the window 0..x_max.
struct DeconvCertificate {
    int x = 0;
    Rational value;
};

struct DeconvolutionResult {
    DeconvStatus status = DeconvStatus::indecomposable;
    std::optional<WeightFunction> factor;  // canonical gauge
    std::optional<DeconvCertificate> certificate;
    int window = 0;  // the verdict applies to 0..window only
};

/// Solve b^{*s} = a (gauge-canonicalized) by the triangular recursion
/// b(x) = (a(x) - interior convolution terms) / s, with b(0) = 1.
DeconvolutionResult deconvolve(const WeightFunction& a, int s);

struct GermClassification {
    bool is_germ = true;
    int s = 0;  // smallest s with a successful deconvolution, when merged
    std::optional<WeightFunction> factor;
};

/// Germ vs merged: try s = 2..max_s, report the smallest decomposing s.
GermClassification classify_germ(const WeightFunction& a, int max_s);

}  // namespace occ
