#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "interp/adaptive.hpp"
#include "interp/error_metrics.hpp"
#include "interp/exceptions.hpp"

using namespace interp;

namespace {

GridFunction make_grid(std::vector<double> xs, std::vector<double> ys) {
    GridFunction g;
    g.mesh.nodes = std::move(xs);
    g.mesh.element_offsets = {0};
    g.mesh.a = g.mesh.nodes.front();
    g.mesh.b = g.mesh.nodes.back();
    g.mesh.element_width = g.mesh.b - g.mesh.a;
    g.values = std::move(ys);
    return g;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    xs.back() = b;
    return xs;
}

} // namespace

TEST_CASE("constant data extends to full degree with a constant polynomial") {
    const auto g = make_grid({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0});
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.target_degree = 2;
    const auto piece = build_interval(g, 0, cfg);
    CHECK(piece.achieved_degree == 2);
    for (double x : {0.1, 0.5, 1.9}) {
        CHECK(newton_eval(piece.poly, x) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("data-bounded extension accepts an in-range parabola") {
    const auto g = make_grid({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0});
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::DataBounded;
    cfg.target_degree = 2;
    const auto piece = build_interval(g, 0, cfg);
    CHECK(piece.achieved_degree == 2); // p(x) = -x^2 + 2x has range [0,1] on the interval
    CHECK(newton_eval(piece.poly, 0.5) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("a single interval cannot grow") {
    const auto g = make_grid({0.0, 1.0}, {2.0, 3.0});
    InterpConfig cfg;
    cfg.target_degree = 8;
    const auto pi = build(g, cfg);
    CHECK(pi.pieces.size() == 1);
    CHECK(pi.pieces[0].achieved_degree == 1);
    CHECK(pi.avg_degree == 1.0);
}

TEST_CASE("degree-1 config yields average degree exactly 1") {
    const Mesh1D m = uniform_mesh(0.0, M_PI, 33);
    const GridFunction g = sample(m, [](double x) { return 1.0 + std::sin(x); });
    for (auto method : {AdaptiveMethod::DataBounded, AdaptiveMethod::PositivityPreserving}) {
        InterpConfig cfg;
        cfg.method = method;
        cfg.target_degree = 1;
        const auto pi = build(g, cfg);
        CHECK(pi.avg_degree == 1.0);
    }
}

TEST_CASE("smooth positive data reaches the full target degree") {
    const Mesh1D m = uniform_mesh(0.0, M_PI, 17);
    const GridFunction g = sample(m, [](double x) { return 1.0 + std::sin(x); });
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.target_degree = 4;
    const auto pi = build(g, cfg);
    CHECK(pi.avg_degree == 4.0);

    // matches the reference error level for this configuration
    const auto xs = linspace(0.0, M_PI, 10000);
    const auto vals = evaluate(pi, xs);
    std::vector<double> truth(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        truth[i] = 1.0 + std::sin(xs[i]);
    }
    const double err = l2_error_from_samples(truth, vals, 0.0, M_PI);
    CHECK(err == doctest::Approx(4.565e-6).epsilon(0.02));
}

TEST_CASE("positivity precondition is enforced") {
    const auto g = make_grid({0.0, 1.0, 2.0}, {0.5, -0.25, 0.5});
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.floor = 0.0;
    CHECK_THROWS_AS(build(g, cfg), PreconditionError);

    InterpConfig ok = cfg;
    ok.floor = -1.0;
    CHECK_NOTHROW(build(g, ok));

    CHECK_THROWS_AS(build_interval(g, 5, ok), std::invalid_argument);
}

TEST_CASE("polynomial data is reproduced exactly by the positivity method") {
    // q(x) = (x-1)^2 + 0.5 >= 0.5 on [0,3], degree 2 <= target
    const Mesh1D m = uniform_mesh(0.0, 3.0, 13);
    const GridFunction g = sample(m, [](double x) { return (x - 1.0) * (x - 1.0) + 0.5; });
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.target_degree = 4;
    const auto pi = build(g, cfg);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> pt(0.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double x = pt(rng);
        const double truth = (x - 1.0) * (x - 1.0) + 0.5;
        CHECK(std::abs(evaluate_at(pi, x) - truth) <= 1e-9 * std::abs(truth));
    }
}

TEST_CASE("per-interval degrees: positivity >= data-bounded") {
    const Mesh1D m = uniform_mesh(-1.0, 1.0, 33);
    const GridFunction g = sample(m, [](double x) { return 1.0 / (1.0 + 25.0 * x * x); });
    InterpConfig dbi;
    dbi.method = AdaptiveMethod::DataBounded;
    dbi.target_degree = 6;
    InterpConfig ppi = dbi;
    ppi.method = AdaptiveMethod::PositivityPreserving;
    const auto a = build(g, dbi);
    const auto b = build(g, ppi);
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        CHECK(b.pieces[i].achieved_degree >= a.pieces[i].achieved_degree);
    }
}

TEST_CASE("data-bounded interpolants stay within local data bounds") {
    const Mesh1D m = uniform_mesh(-1.0, 1.0, 25);
    const GridFunction g = sample(m, [](double x) { return x < 0.0 ? 0.1 : 1.0; });
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::DataBounded;
    cfg.target_degree = 5;
    const auto pi = build(g, cfg);
    double scale = 1.0;
    const auto xs = linspace(-1.0, 1.0, 10000);
    const auto vals = evaluate(pi, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const std::size_t i = std::min(
            static_cast<std::size_t>(std::upper_bound(m.nodes.begin(), m.nodes.end(), xs[k]) -
                                     m.nodes.begin()) -
                1,
            m.num_intervals() - 1);
        const double lo = std::min(g.values[i], g.values[i + 1]);
        const double hi = std::max(g.values[i], g.values[i + 1]);
        CHECK(vals[k] >= lo - 1e-10 * scale);
        CHECK(vals[k] <= hi + 1e-10 * scale);
    }
}

TEST_CASE("positivity holds for random nonnegative data") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> val(0.0, 5.0);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 8 + rng() % 30;
        const Mesh1D m = uniform_mesh(0.0, 1.0, n);
        GridFunction g;
        g.mesh = m;
        for (std::size_t i = 0; i < n; ++i) {
            g.values.push_back(val(rng));
        }
        InterpConfig cfg;
        cfg.method = AdaptiveMethod::PositivityPreserving;
        cfg.target_degree = 1 + static_cast<int>(rng() % 8);
        const auto pi = build(g, cfg);
        double scale = 0.0;
        for (double v : g.values) scale = std::max(scale, std::abs(v));
        const auto xs = linspace(0.0, 1.0, 4001);
        for (double v : evaluate(pi, xs)) {
            CHECK(v >= -1e-12 * scale);
        }
    }
}

TEST_CASE("continuity across interval boundaries") {
    const Mesh1D m = uniform_mesh(-1.0, 1.0, 17);
    const GridFunction g = sample(m, [](double x) { return 1.0 / (1.0 + 25.0 * x * x); });
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.target_degree = 4;
    const auto pi = build(g, cfg);
    for (std::size_t i = 1; i + 1 < m.num_nodes(); ++i) {
        const double x = m.nodes[i];
        const double eps = 1e-9;
        const double left = evaluate_at(pi, x - eps);
        const double right = evaluate_at(pi, x + eps);
        CHECK(std::abs(left - right) <= 1e-6); // both converge to the shared nodal value
        CHECK(evaluate_at(pi, x) == g.values[i]);
    }
}

TEST_CASE("parallel build matches the serial reference bit for bit") {
    const Mesh1D m = element_mesh(-0.2, 0.2, 8, 4, NodeFamily::Lgl);
    const GridFunction g =
        sample(m, [](double x) { return 1.0 / (1.0 + std::exp(-200.0 * x)); });
    for (auto method : {AdaptiveMethod::DataBounded, AdaptiveMethod::PositivityPreserving}) {
        InterpConfig cfg;
        cfg.method = method;
        cfg.target_degree = 4;
        const auto par = build(g, cfg);
        const auto ser = build_serial(g, cfg);
        REQUIRE(par.pieces.size() == ser.pieces.size());
        CHECK(par.avg_degree == ser.avg_degree);
        for (std::size_t i = 0; i < par.pieces.size(); ++i) {
            CHECK(par.pieces[i].lo == ser.pieces[i].lo);
            CHECK(par.pieces[i].hi == ser.pieces[i].hi);
            REQUIRE(par.pieces[i].poly.coefficients.size() ==
                    ser.pieces[i].poly.coefficients.size());
            for (std::size_t k = 0; k < par.pieces[i].poly.coefficients.size(); ++k) {
                CHECK(par.pieces[i].poly.coefficients[k] == ser.pieces[i].poly.coefficients[k]);
            }
        }
    }
}

TEST_CASE("element-confined stencils stay inside the owning element") {
    const Mesh1D m = element_mesh(0.0, 1.0, 4, 3, NodeFamily::Uniform);
    const GridFunction g = sample(m, [](double x) { return 2.0 + std::cos(3.0 * x); });
    InterpConfig cfg;
    cfg.method = AdaptiveMethod::PositivityPreserving;
    cfg.target_degree = 6;
    cfg.element_confined = true;
    const auto pi = build(g, cfg);
    for (const auto& piece : pi.pieces) {
        const std::size_t e = m.element_of_interval(piece.interval);
        const auto [first, last] = m.element_node_range(e);
        CHECK(piece.lo >= first);
        CHECK(piece.hi <= last);
        CHECK(piece.achieved_degree <= 3);
    }
}

TEST_CASE("evaluation policies at the domain edge") {
    const auto g = make_grid({0.0, 1.0, 2.0}, {1.0, 2.0, 4.0});
    InterpConfig cfg;
    cfg.target_degree = 2;
    const auto pi = build(g, cfg);
    CHECK_THROWS_AS(evaluate_at(pi, 2.5, ExtrapolationPolicy::Error), std::domain_error);
    CHECK_THROWS_AS(evaluate_at(pi, -0.1, ExtrapolationPolicy::Error), std::domain_error);
    CHECK(evaluate_at(pi, 2.5, ExtrapolationPolicy::ClampToEdgeInterval) == 4.0);
    CHECK(evaluate_at(pi, -3.0, ExtrapolationPolicy::ClampToEdgeInterval) == 1.0);
    // nodes return stored values exactly
    CHECK(evaluate_at(pi, 1.0) == 2.0);
}
