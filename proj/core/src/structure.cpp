#include "occupancy/structure.hpp"

namespace occ {

namespace {

// Coefficient at `degree` of the s-fold convolution of the series b(0..len-1).
Rational conv_power_coeff(const std::vector<Rational>& b, int s, int degree) {
    std::vector<Rational> acc(static_cast<std::size_t>(degree) + 1, 0);
    for (std::size_t i = 0; i < acc.size() && i < b.size(); ++i) acc[i] = b[i];
    for (int fold = 2; fold <= s; ++fold) {
        std::vector<Rational> next(acc.size(), 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; j < b.size() && i + j < next.size(); ++j)
                next[i + j] += acc[i] * b[j];
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(degree)];
}

}  // namespace

DeconvolutionResult deconvolve(const WeightFunction& a_raw, int s) {
    if (s < 2) throw std::domain_error("deconvolve: s must be >= 2");
    if (a_raw.at(0) <= 0) throw std::domain_error("deconvolve: a(0) must be positive");
    const WeightFunction a = gauge_canonicalize(a_raw);
    const int x_max = a.x_max();

    DeconvolutionResult result;
    result.window = x_max;
    std::vector<Rational> b{1};  // b(0) = a(0)^{1/s} = 1 in gauge form
    for (int x = 1; x <= x_max; ++x) {
        // a(x) = s * b(x) + (terms with every part < x); the recursion is total.
        Rational interior = conv_power_coeff(b, s, x);
        Rational bx = (a.at(x) - interior) / s;
        if (bx < 0) {
            result.status = DeconvStatus::indecomposable;
            result.certificate = DeconvCertificate{x, bx};
            return result;
        }
        b.push_back(bx);
    }
    result.status = DeconvStatus::decomposable;
    result.factor = gauge_canonicalize(WeightFunction(std::move(b)));
    return result;
}

GermClassification classify_germ(const WeightFunction& a, int max_s) {
    if (max_s < 2) throw std::domain_error("classify_germ: max_s must be >= 2");
    for (int s = 2; s <= max_s; ++s) {
        DeconvolutionResult r = deconvolve(a, s);
        if (r.status == DeconvStatus::decomposable)
            return GermClassification{false, s, std::move(r.factor)};
    }
    return GermClassification{true, 0, std::nullopt};
}

}  // namespace occ
