#pragma once

#include <span>
#include <string>
#include <vector>

#include "interp/grid_function.hpp"
#include "interp/methods.hpp"

namespace interp {

enum class RemapMethod { Std, StdClip, Pchip, Ppi, Linear };

RemapMethod remap_method_from_string(const std::string& name);
std::string remap_method_name(RemapMethod m);

struct RemapConfig {
    RemapMethod method = RemapMethod::Ppi;
    int ppi_degree = 8; // target degree of the positivity-preserving maps
};

struct RemapTraceRow {
    int cycle = 0;
    RemapMethod method = RemapMethod::Ppi;
    double min_value = 0.0; // min over both mapped stages of the cycle
    double total = 0.0;     // trapezoid integral of the cycle-end values
    double peak = 0.0;
};

struct RemapTrace {
    std::vector<RemapTraceRow> rows;
    // states[k]: values on the source mesh after k full cycles (states[0] is
    // the initial data); kept so callers can re-run single cycles for
    // like-for-like comparisons.
    std::vector<std::vector<double>> states;
};

/// One grid-to-grid mapping with the chosen method (no clipping applied).
std::vector<double> remap_map(const GridFunction& src, const Mesh1D& target,
                              const RemapConfig& cfg);

double trapezoid_total(const Mesh1D& mesh, std::span<const double> values);

/// Repeatedly maps the tracer source->physics->source; the clipping variant
/// zeroes negative values after each per-element-Lagrange map. One trace row
/// per full cycle.
RemapTrace remap_cycle(const GridFunction& initial, const Mesh1D& physics_mesh,
                       const RemapConfig& cfg, int cycles);

/// Smoothed step plus a narrow bump: the default positive tracer profile of
/// the remap demonstration.
double default_tracer_profile(double x);

/// The demonstration setup: dynamics mesh of 10 LGL elements of degree 8 on
/// [0, 1] and a uniform 61-node physics mesh.
Mesh1D default_dynamics_mesh();
Mesh1D default_physics_mesh();

} // namespace interp
