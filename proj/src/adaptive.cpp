#include "interp/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "interp/exceptions.hpp"

namespace interp {

namespace {

double scale_of(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

void check_positivity_precondition(const GridFunction& data, const InterpConfig& cfg) {
    if (cfg.method != AdaptiveMethod::PositivityPreserving) {
        return;
    }
    const double slack = 1e-12 * (1.0 + scale_of(data.values));
    for (std::size_t k = 0; k < data.values.size(); ++k) {
        if (data.values[k] < cfg.floor - slack) {
            throw PreconditionError("positivity-preserving build requires data >= floor; value " +
                                    std::to_string(data.values[k]) + " at node " +
                                    std::to_string(k) + " is below floor " +
                                    std::to_string(cfg.floor));
        }
    }
}

// Certified check that the candidate polynomial satisfies the method's bound
// on [xl, xr]. Inconclusive certificates count as rejections.
bool predicate_holds(const NewtonPolynomial& poly, double xl, double xr, double ul, double ur,
                     const InterpConfig& cfg) {
    BernsteinForm bf = to_bernstein(poly, xl, xr);
    if (cfg.method == AdaptiveMethod::PositivityPreserving) {
        // Lowering the floor to the interval data keeps the degree-1 base
        // case admissible when upstream values sit within roundoff of it.
        const double floor_eff = std::min({cfg.floor, ul, ur});
        BernsteinForm shifted = bf;
        for (double& c : shifted.coefficients) {
            c -= floor_eff;
        }
        return certified_min(shifted, cfg.cert_max_depth).status ==
               CertStatus::CertifiedNonNegative;
    }
    const double lo_bound = std::min(ul, ur);
    const double hi_bound = std::max(ul, ur);
    BernsteinForm above = bf;
    for (double& c : above.coefficients) {
        c -= lo_bound;
    }
    if (certified_min(above, cfg.cert_max_depth).status != CertStatus::CertifiedNonNegative) {
        return false;
    }
    BernsteinForm below = bf;
    for (double& c : below.coefficients) {
        c = hi_bound - c;
    }
    return certified_min(below, cfg.cert_max_depth).status == CertStatus::CertifiedNonNegative;
}

StencilInterpolant build_interval_kernel(const GridFunction& data, std::size_t i,
                                         const InterpConfig& cfg) {
    const auto& xs = data.mesh.nodes;
    const auto& us = data.values;

    std::size_t grow_min = 0;
    std::size_t grow_max = xs.size() - 1;
    if (cfg.element_confined) {
        const auto [first, last] = data.mesh.element_node_range(data.mesh.element_of_interval(i));
        grow_min = first;
        grow_max = last;
    }

    StencilInterpolant out;
    out.interval = i;
    out.lo = i;
    out.hi = i + 1;

    DividedDifferenceTable table(std::span(&xs[i], 2), std::span(&us[i], 2));
    const double xl = xs[i];
    const double xr = xs[i + 1];
    const double ul = us[i];
    const double ur = us[i + 1];

    while (static_cast<int>(out.hi - out.lo) < cfg.target_degree) {
        const bool has_left = out.lo > grow_min;
        const bool has_right = out.hi < grow_max;
        if (!has_left && !has_right) {
            break;
        }

        // ENO choice: smaller new highest-order divided difference first,
        // left on ties.
        std::size_t order[2];
        std::size_t count = 0;
        if (has_left && has_right) {
            const double dl = std::abs(table.extended_top(xs[out.lo - 1], us[out.lo - 1]));
            const double dr = std::abs(table.extended_top(xs[out.hi + 1], us[out.hi + 1]));
            if (dl <= dr) {
                order[0] = out.lo - 1;
                order[1] = out.hi + 1;
            } else {
                order[0] = out.hi + 1;
                order[1] = out.lo - 1;
            }
            count = 2;
        } else {
            order[0] = has_left ? out.lo - 1 : out.hi + 1;
            count = 1;
        }

        bool extended = false;
        for (std::size_t c = 0; c < count; ++c) {
            const std::size_t j = order[c];
            DividedDifferenceTable trial = table;
            trial.extend(xs[j], us[j]);
            if (predicate_holds(trial.polynomial(), xl, xr, ul, ur, cfg)) {
                table = std::move(trial);
                out.lo = std::min(out.lo, j);
                out.hi = std::max(out.hi, j);
                extended = true;
                break;
            }
        }
        if (!extended) {
            break;
        }
    }

    out.poly = table.polynomial();
    out.achieved_degree = static_cast<int>(out.hi - out.lo);
    return out;
}

void validate_build_input(const GridFunction& data, const InterpConfig& cfg) {
    data.validate();
    if (data.mesh.num_nodes() < 2) {
        throw std::invalid_argument("adaptive build requires at least 2 nodes");
    }
    if (cfg.target_degree < 1) {
        throw std::invalid_argument("adaptive build requires target degree >= 1");
    }
    check_positivity_precondition(data, cfg);
}

double average_degree(const std::vector<StencilInterpolant>& pieces) {
    long long total = 0;
    for (const auto& p : pieces) {
        total += p.achieved_degree;
    }
    return static_cast<double>(total) / static_cast<double>(pieces.size());
}

} // namespace

StencilInterpolant build_interval(const GridFunction& data, std::size_t i,
                                  const InterpConfig& cfg) {
    validate_build_input(data, cfg);
    if (i >= data.mesh.num_intervals()) {
        throw std::invalid_argument("interval index " + std::to_string(i) + " out of range");
    }
    return build_interval_kernel(data, i, cfg);
}

PiecewiseInterpolant build_serial(const GridFunction& data, const InterpConfig& cfg) {
    validate_build_input(data, cfg);
    PiecewiseInterpolant pi;
    pi.source = data;
    pi.pieces.resize(data.mesh.num_intervals());
    for (std::size_t i = 0; i < pi.pieces.size(); ++i) {
        pi.pieces[i] = build_interval_kernel(data, i, cfg);
    }
    pi.avg_degree = average_degree(pi.pieces);
    return pi;
}

PiecewiseInterpolant build(const GridFunction& data, const InterpConfig& cfg) {
    validate_build_input(data, cfg);
    PiecewiseInterpolant pi;
    pi.source = data;
    pi.pieces.resize(data.mesh.num_intervals());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pi.pieces.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        pi.pieces[static_cast<std::size_t>(i)] =
            build_interval_kernel(data, static_cast<std::size_t>(i), cfg);
    }
    pi.avg_degree = average_degree(pi.pieces);
    return pi;
}

double evaluate_at(const PiecewiseInterpolant& pi, double x, ExtrapolationPolicy policy) {
    const auto& xs = pi.source.mesh.nodes;
    if (!std::isfinite(x)) {
        throw std::invalid_argument("evaluate target must be finite");
    }
    if (x < xs.front() || x > xs.back()) {
        if (policy == ExtrapolationPolicy::Error) {
            throw std::domain_error("evaluation target " + std::to_string(x) +
                                    " lies outside the domain [" + std::to_string(xs.front()) +
                                    ", " + std::to_string(xs.back()) + "]");
        }
        x = std::clamp(x, xs.front(), xs.back());
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - xs.begin());
    idx = (idx == 0) ? 0 : idx - 1;
    if (idx >= pi.pieces.size()) {
        idx = pi.pieces.size() - 1;
    }
    // Nodes reproduce their data values exactly.
    if (x == xs[idx]) {
        return pi.source.values[idx];
    }
    if (x == xs[idx + 1]) {
        return pi.source.values[idx + 1];
    }
    return newton_eval(pi.pieces[idx].poly, x);
}

std::vector<double> evaluate(const PiecewiseInterpolant& pi, std::span<const double> targets,
                             ExtrapolationPolicy policy) {
    // Validate up front so the parallel loop below cannot throw.
    const double a = pi.source.mesh.nodes.front();
    const double b = pi.source.mesh.nodes.back();
    for (double t : targets) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("evaluate targets must be finite");
        }
        if (policy == ExtrapolationPolicy::Error && (t < a || t > b)) {
            throw std::domain_error("evaluation target " + std::to_string(t) +
                                    " lies outside the domain [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
        }
    }
    std::vector<double> out(targets.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = evaluate_at(pi, targets[k], policy);
    }
    return out;
}

} // namespace interp
