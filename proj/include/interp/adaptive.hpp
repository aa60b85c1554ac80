#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interp/bernstein.hpp"
#include "interp/divided_differences.hpp"
#include "interp/grid_function.hpp"

namespace interp {

enum class AdaptiveMethod {
    DataBounded,          // interpolant stays within the local data bounds of each interval
    PositivityPreserving, // interpolant stays at or above a floor (default 0)
};

enum class ExtrapolationPolicy { Error, ClampToEdgeInterval };

struct InterpConfig {
    AdaptiveMethod method = AdaptiveMethod::PositivityPreserving;
    int target_degree = 3;
    double floor = 0.0;            // PositivityPreserving only
    bool element_confined = false; // restrict stencils to the interval's element
    int cert_max_depth = 10;       // Bernstein subdivision depth for the range certificate
};

/// One interval's committed interpolant: a Newton polynomial over the stencil
/// node range [lo, hi] of the source mesh, with achieved_degree = hi - lo.
struct StencilInterpolant {
    std::size_t interval = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
    NewtonPolynomial poly;
    int achieved_degree = 0;
};

struct PiecewiseInterpolant {
    GridFunction source;
    std::vector<StencilInterpolant> pieces;
    double avg_degree = 0.0;
};

/// Grows the stencil of interval i from {i, i+1} one point at a time.
/// Candidates are the next point left and the next point right; the one with
/// the smaller new highest-order divided difference is tried first (ties go
/// left), the other is tried on failure. A candidate is accepted when the
/// extended polynomial passes the method's certified range check on
/// [x_i, x_{i+1}]; growth stops when both fail or target_degree is reached.
StencilInterpolant build_interval(const GridFunction& data, std::size_t i,
                                  const InterpConfig& cfg);

/// One interpolant per interval. Intervals are independent, so the parallel
/// build partitions them across threads; results are identical to
/// build_serial bit for bit.
PiecewiseInterpolant build(const GridFunction& data, const InterpConfig& cfg);
PiecewiseInterpolant build_serial(const GridFunction& data, const InterpConfig& cfg);

double evaluate_at(const PiecewiseInterpolant& pi, double x,
                   ExtrapolationPolicy policy = ExtrapolationPolicy::Error);

std::vector<double> evaluate(const PiecewiseInterpolant& pi, std::span<const double> targets,
                             ExtrapolationPolicy policy = ExtrapolationPolicy::Error);

} // namespace interp
