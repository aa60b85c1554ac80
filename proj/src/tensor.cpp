#include "interp/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "interp/exceptions.hpp"

namespace interp {

namespace {

struct DegreeTally {
    long double degree_sum = 0.0;
    long long interval_count = 0;

    void add(double avg_degree, std::size_t intervals) {
        degree_sum += static_cast<long double>(avg_degree) * static_cast<long double>(intervals);
        interval_count += static_cast<long long>(intervals);
    }
};

// One tensor stage: for each of `lines` input lines, build a 1D interpolant
// over `mesh` from `get_line` and write its values at `targets` via
// `put_value(line, target_index, value)`.
template <typename GetLine, typename PutValue>
void run_stage(std::size_t lines, const Mesh1D& mesh, std::span<const double> targets,
               const MethodConfig& cfg, bool parallel, DegreeTally& tally, GetLine get_line,
               PutValue put_value) {
    std::vector<double> stage_avg(lines, 0.0);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(lines);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::ptrdiff_t li = 0; li < n; ++li) {
        if (failed.load(std::memory_order_relaxed)) {
            continue;
        }
        try {
            const std::size_t line = static_cast<std::size_t>(li);
            GridFunction g;
            g.mesh = mesh;
            g.values = get_line(line);
            Interpolant1D it = Interpolant1D::build(g, cfg);
            stage_avg[line] = it.avg_degree();
            const std::vector<double> vals = it.evaluate(targets);
            for (std::size_t t = 0; t < vals.size(); ++t) {
                put_value(line, t, vals[t]);
            }
        } catch (...) {
#pragma omp critical
            {
                if (!error) {
                    error = std::current_exception();
                }
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    for (double a : stage_avg) {
        tally.add(a, mesh.num_intervals());
    }
}

Interp2DResult interpolate_2d_impl(const GridFunction2D& data, std::span<const double> targets_x,
                                   std::span<const double> targets_y, const MethodConfig& cfg,
                                   AxisOrder order, bool parallel) {
    data.validate();
    if (targets_x.empty() || targets_y.empty()) {
        throw std::invalid_argument("interpolate_2d requires nonempty target sets");
    }
    if (cfg.method == Method::Ppi) {
        double scale = 0.0;
        for (double v : data.values) {
            scale = std::max(scale, std::abs(v));
        }
        const double slack = 1e-12 * (1.0 + scale);
        for (double v : data.values) {
            if (v < cfg.floor - slack) {
                throw PreconditionError(
                    "positivity-preserving 2d interpolation requires data >= floor");
            }
        }
    }

    const std::size_t nx = data.nx();
    const std::size_t ny = data.ny();
    const std::size_t ntx = targets_x.size();
    const std::size_t nty = targets_y.size();

    Interp2DResult out;
    out.num_targets_x = ntx;
    out.num_targets_y = nty;
    out.values.assign(ntx * nty, 0.0);
    DegreeTally tally;

    if (order == AxisOrder::XThenY) {
        // stage 1: along x for each source row j, onto targets_x
        std::vector<double> mid(ntx * ny);
        run_stage(
            ny, data.mesh_x, targets_x, cfg, parallel, tally,
            [&](std::size_t j) {
                std::vector<double> line(nx);
                for (std::size_t i = 0; i < nx; ++i) {
                    line[i] = data.at(i, j);
                }
                return line;
            },
            [&](std::size_t j, std::size_t t, double v) { mid[t * ny + j] = v; });
        // stage 2: along y for each stage-1 column, onto targets_y
        run_stage(
            ntx, data.mesh_y, targets_y, cfg, parallel, tally,
            [&](std::size_t t) {
                return std::vector<double>(mid.begin() + static_cast<std::ptrdiff_t>(t * ny),
                                           mid.begin() + static_cast<std::ptrdiff_t>((t + 1) * ny));
            },
            [&](std::size_t t, std::size_t s, double v) { out.values[t * nty + s] = v; });
    } else {
        // stage 1: along y for each source column i, onto targets_y
        std::vector<double> mid(nx * nty);
        run_stage(
            nx, data.mesh_y, targets_y, cfg, parallel, tally,
            [&](std::size_t i) {
                return std::vector<double>(
                    data.values.begin() + static_cast<std::ptrdiff_t>(i * ny),
                    data.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * ny));
            },
            [&](std::size_t i, std::size_t s, double v) { mid[s * nx + i] = v; });
        // stage 2: along x for each stage-1 row, onto targets_x
        run_stage(
            nty, data.mesh_x, targets_x, cfg, parallel, tally,
            [&](std::size_t s) {
                return std::vector<double>(mid.begin() + static_cast<std::ptrdiff_t>(s * nx),
                                           mid.begin() + static_cast<std::ptrdiff_t>((s + 1) * nx));
            },
            [&](std::size_t s, std::size_t t, double v) { out.values[t * nty + s] = v; });
    }

    out.avg_degree = static_cast<double>(tally.degree_sum / tally.interval_count);
    out.min_value = *std::min_element(out.values.begin(), out.values.end());
    return out;
}

} // namespace

Interp2DResult interpolate_2d(const GridFunction2D& data, std::span<const double> targets_x,
                              std::span<const double> targets_y, const MethodConfig& cfg,
                              AxisOrder order) {
    return interpolate_2d_impl(data, targets_x, targets_y, cfg, order, true);
}

Interp2DResult interpolate_2d_serial(const GridFunction2D& data, std::span<const double> targets_x,
                                     std::span<const double> targets_y, const MethodConfig& cfg,
                                     AxisOrder order) {
    return interpolate_2d_impl(data, targets_x, targets_y, cfg, order, false);
}

} // namespace interp
