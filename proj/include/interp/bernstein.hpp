#pragma once

#include <vector>

#include "interp/divided_differences.hpp"

namespace interp {

/// Coefficients in the Bernstein basis of degree d on [lo, hi]. By the
/// convex-hull property, min(b) <= p(x) <= max(b) on [lo, hi], and b_0, b_d
/// are the endpoint values.
struct BernsteinForm {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Degrees above this would need binomial coefficients that are no longer
/// exactly representable alongside the rest of the pipeline.
inline constexpr int kMaxBernsteinDegree = 32;

/// Exact basis change Newton -> local power basis on [lo, hi] (synthetic
/// shift) -> Bernstein with binomial weights.
BernsteinForm to_bernstein(const NewtonPolynomial& p, double lo, double hi);

enum class CertStatus { CertifiedNonNegative, CertifiedNegative, Inconclusive };

struct CertResult {
    double lower_bound = 0.0;
    CertStatus status = CertStatus::Inconclusive;
};

/// Relative slack used by the certificate: 1e-12 * (1 + max |coefficient|).
double certificate_tolerance(const BernsteinForm& bf);

/// Recursive de Casteljau bisection. CertifiedNonNegative iff every leaf box
/// has all coefficients >= -tol; CertifiedNegative iff some sub-box endpoint
/// value (an actual polynomial value) is < -tol; Inconclusive once max_depth
/// is reached with mixed signs. lower_bound is the best bound proven by the
/// leaf boxes' coefficient minima.
CertResult certified_min(const BernsteinForm& bf, int max_depth = 10);

} // namespace interp
