#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "interp/methods.hpp"
#include "interp/tensor.hpp"
#include "interp/test_functions.hpp"

namespace interp {

inline constexpr std::size_t kErrorSamples1D = 10000;
inline constexpr std::size_t kErrorSamplesPerAxis2D = 1001;

/// Discrete L2-error: square root of the trapezoidal integral of the squared
/// pointwise error over 10000 equally spaced points (endpoints included).
double l2_error_1d(const std::function<double(double)>& truth,
                   const std::function<double(double)>& approx, double a, double b);

/// Same norm from precomputed samples at equally spaced points on [a, b].
double l2_error_from_samples(std::span<const double> truth, std::span<const double> approx,
                             double a, double b);

/// 2D analogue on a 1001x1001 uniform sampling grid with tensor-product
/// trapezoidal weights.
double l2_error_2d(const std::function<double(double, double)>& truth,
                   std::span<const double> approx_row_major, std::span<const double> xs,
                   std::span<const double> ys);

struct ErrorReportRow {
    std::size_t n = 0; // input points per dimension
    Method method = Method::Linear;
    int degree = 0;
    double l2_error = 0.0;
    double avg_degree = 0.0;
    double min_value = 0.0;
    double runtime_seconds = 0.0;
};

struct ErrorReport {
    std::vector<ErrorReportRow> rows;
};

struct RatioRow {
    Method method = Method::Linear;
    int degree = 0;
    std::size_t n_coarse = 0;
    std::size_t n_fine = 0;
    double ratio = 0.0; // NaN when either error is at noise level
};

/// Mesh used by the convergence studies for (n, degree): ne = (n-1)/degree
/// elements of the requested family with degree+1 nodes each. For the uniform
/// family this is a globally uniform mesh. Methods that need no element
/// structure accept any n; the rest require (n-1) divisible by degree.
Mesh1D convergence_mesh(double a, double b, std::size_t n, int degree, NodeFamily family);

/// One row per (degree, n): build the mesh, sample the function, build the
/// interpolant, and record the error protocol's outputs. f4/f5 receive the
/// element width of the current mesh automatically.
ErrorReport convergence_table(const MethodConfig& cfg, TestFunctionId fid,
                              std::span<const std::size_t> ns, std::span<const int> degrees,
                              NodeFamily family);

/// 2D variant over n x n Cartesian grids (same mesh recipe per axis).
ErrorReport convergence_table_2d(const MethodConfig& cfg, TestFunctionId fid,
                                 std::span<const std::size_t> ns, std::span<const int> degrees,
                                 NodeFamily family, AxisOrder order = AxisOrder::XThenY);

/// Consecutive error ratios e_{n_i}/e_{n_{i+1}} per (method, degree) group,
/// in row order. Ratios whose operands are at or below 1e-13 are emitted as
/// NaN sentinels and must not be asserted on.
std::vector<RatioRow> error_ratios(const ErrorReport& report);

} // namespace interp
