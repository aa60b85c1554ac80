#pragma once

#include <span>
#include <vector>

#include "interp/grid_function.hpp"
#include "interp/methods.hpp"

namespace interp {

enum class AxisOrder { XThenY, YThenX };

struct Interp2DResult {
    std::vector<double> values; // values[i*num_targets_y + j] at (targets_x[i], targets_y[j])
    std::size_t num_targets_x = 0;
    std::size_t num_targets_y = 0;
    double avg_degree = 0.0; // mean over all 1D interval builds in both stages
    double min_value = 0.0;

    double at(std::size_t i, std::size_t j) const { return values[i * num_targets_y + j]; }
};

/// Tensor-product application of any 1D method: stage 1 interpolates each
/// source line along the first axis onto its targets, stage 2 interpolates
/// the stage-1 lines along the second axis. The method's predicate applies in
/// both stages, so a positivity-preserving config keeps every output at or
/// above the floor without any clipping.
Interp2DResult interpolate_2d(const GridFunction2D& data, std::span<const double> targets_x,
                              std::span<const double> targets_y, const MethodConfig& cfg,
                              AxisOrder order = AxisOrder::XThenY);

Interp2DResult interpolate_2d_serial(const GridFunction2D& data, std::span<const double> targets_x,
                                     std::span<const double> targets_y, const MethodConfig& cfg,
                                     AxisOrder order = AxisOrder::XThenY);

} // namespace interp
