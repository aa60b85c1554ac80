#include "interp/remap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace interp {

RemapMethod remap_method_from_string(const std::string& name) {
    if (name == "std") return RemapMethod::Std;
    if (name == "clip") return RemapMethod::StdClip;
    if (name == "pchip") return RemapMethod::Pchip;
    if (name == "ppi") return RemapMethod::Ppi;
    if (name == "linear") return RemapMethod::Linear;
    throw std::invalid_argument("unknown remap method '" + name +
                                "' (expected std, clip, pchip, ppi, or linear)");
}

std::string remap_method_name(RemapMethod m) {
    switch (m) {
    case RemapMethod::Std: return "std";
    case RemapMethod::StdClip: return "clip";
    case RemapMethod::Pchip: return "pchip";
    case RemapMethod::Ppi: return "ppi";
    case RemapMethod::Linear: return "linear";
    }
    return "?";
}

std::vector<double> remap_map(const GridFunction& src, const Mesh1D& target,
                              const RemapConfig& cfg) {
    MethodConfig mc;
    mc.extrapolation = ExtrapolationPolicy::ClampToEdgeInterval;
    switch (cfg.method) {
    case RemapMethod::Std:
    case RemapMethod::StdClip:
        mc.method = Method::Std;
        break;
    case RemapMethod::Pchip:
        mc.method = Method::Pchip;
        break;
    case RemapMethod::Linear:
        mc.method = Method::Linear;
        break;
    case RemapMethod::Ppi:
        mc.method = Method::Ppi;
        mc.degree = cfg.ppi_degree;
        mc.floor = 0.0;
        break;
    }
    Interpolant1D it = Interpolant1D::build(src, mc);
    return it.evaluate(target.nodes);
}

double trapezoid_total(const Mesh1D& mesh, std::span<const double> values) {
    if (values.size() != mesh.num_nodes()) {
        throw std::invalid_argument("trapezoid_total: value count does not match mesh");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        acc += 0.5 * (values[i] + values[i + 1]) * (mesh.nodes[i + 1] - mesh.nodes[i]);
    }
    return acc;
}

namespace {

void clip_negative(std::vector<double>& v) {
    for (double& x : v) {
        if (x < 0.0) {
            x = 0.0;
        }
    }
}

} // namespace

RemapTrace remap_cycle(const GridFunction& initial, const Mesh1D& physics_mesh,
                       const RemapConfig& cfg, int cycles) {
    initial.validate();
    physics_mesh.validate();
    if (cycles < 1) {
        throw std::invalid_argument("remap_cycle requires cycles >= 1");
    }

    RemapTrace trace;
    trace.states.push_back(initial.values);

    GridFunction state = initial;
    for (int c = 1; c <= cycles; ++c) {
        std::vector<double> phys = remap_map(state, physics_mesh, cfg);
        if (cfg.method == RemapMethod::StdClip) {
            clip_negative(phys);
        }
        GridFunction on_phys{physics_mesh, phys};
        std::vector<double> dyn = remap_map(on_phys, state.mesh, cfg);
        if (cfg.method == RemapMethod::StdClip) {
            clip_negative(dyn);
        }

        RemapTraceRow row;
        row.cycle = c;
        row.method = cfg.method;
        row.min_value = std::min(*std::min_element(phys.begin(), phys.end()),
                                 *std::min_element(dyn.begin(), dyn.end()));
        row.total = trapezoid_total(state.mesh, dyn);
        row.peak = *std::max_element(dyn.begin(), dyn.end());
        trace.rows.push_back(row);

        state.values = dyn;
        trace.states.push_back(dyn);
    }
    return trace;
}

double default_tracer_profile(double x) {
    const double step = 1.0 / (1.0 + std::exp(-300.0 * (x - 0.5)));
    const double r = (x - 0.72) / 0.02;
    return step + 0.5 * std::exp(-r * r);
}

Mesh1D default_dynamics_mesh() { return element_mesh(0.0, 1.0, 10, 8, NodeFamily::Lgl); }

Mesh1D default_physics_mesh() { return uniform_mesh(0.0, 1.0, 61); }

} // namespace interp
