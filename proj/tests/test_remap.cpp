#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "interp/remap.hpp"

using namespace interp;

namespace {

GridFunction initial_tracer() {
    return sample(default_dynamics_mesh(), default_tracer_profile);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

} // namespace

TEST_CASE("positivity-preserving remap never goes negative") {
    const GridFunction init = initial_tracer();
    const double scale = max_abs(init.values);
    RemapConfig cfg;
    cfg.method = RemapMethod::Ppi;
    const auto trace = remap_cycle(init, default_physics_mesh(), cfg, 10);
    REQUIRE(trace.rows.size() == 10);
    for (const auto& row : trace.rows) {
        CHECK(row.min_value >= -1e-12 * scale);
    }
}

TEST_CASE("per-element Lagrange remap produces negative values") {
    RemapConfig cfg;
    cfg.method = RemapMethod::Std;
    const auto trace = remap_cycle(initial_tracer(), default_physics_mesh(), cfg, 10);
    double worst = 1e300;
    for (const auto& row : trace.rows) {
        worst = std::min(worst, row.min_value);
    }
    CHECK(worst < 0.0);
}

TEST_CASE("clipping floors the trace at zero and only adds mass") {
    const Mesh1D phys = default_physics_mesh();
    RemapConfig clip;
    clip.method = RemapMethod::StdClip;
    RemapConfig std_cfg;
    std_cfg.method = RemapMethod::Std;

    const auto trace = remap_cycle(initial_tracer(), phys, clip, 10);
    CHECK(trace.rows[0].min_value == 0.0);

    // per cycle, from identical inputs: clipped total >= unclipped total
    GridFunction state = initial_tracer();
    for (int c = 0; c < 10; ++c) {
        state.values = trace.states[static_cast<std::size_t>(c)];
        const auto one_std = remap_cycle(state, phys, std_cfg, 1);
        const auto one_clip = remap_cycle(state, phys, clip, 1);
        CHECK(one_clip.rows[0].total >= one_std.rows[0].total - 1e-14);
    }
}

TEST_CASE("linear remap is diffusive: totals never increase") {
    RemapConfig cfg;
    cfg.method = RemapMethod::Linear;
    const GridFunction init = initial_tracer();
    const auto trace = remap_cycle(init, default_physics_mesh(), cfg, 50);
    double prev = trapezoid_total(init.mesh, init.values);
    for (const auto& row : trace.rows) {
        CHECK(row.total <= prev + 1e-12);
        CHECK(row.min_value >= -1e-15);
        prev = row.total;
    }
    CHECK(trace.rows.back().total < trapezoid_total(init.mesh, init.values));
}

TEST_CASE("pchip remap stays positive") {
    RemapConfig cfg;
    cfg.method = RemapMethod::Pchip;
    const GridFunction init = initial_tracer();
    const auto trace = remap_cycle(init, default_physics_mesh(), cfg, 10);
    for (const auto& row : trace.rows) {
        CHECK(row.min_value >= -1e-12 * max_abs(init.values));
    }
}

TEST_CASE("remap validation") {
    RemapConfig cfg;
    CHECK_THROWS_AS(remap_cycle(initial_tracer(), default_physics_mesh(), cfg, 0),
                    std::invalid_argument);
}
