#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "interp/error_metrics.hpp"
#include "interp/test_functions.hpp"

using namespace interp;

TEST_CASE("test function point values") {
    const TestFunction f1 = make_test_function(TestFunctionId::F1);
    CHECK(f1(0.0) == 1.0);

    const TestFunction f3 = make_test_function(TestFunctionId::F3);
    CHECK(std::abs(f3(0.25)) <= 1e-15);
    // continuity from the left of the jump location is not expected; the two
    // branches meet the paper's definition exactly
    CHECK(f3(-0.5) == doctest::Approx(1.0 - std::sin(-M_PI / 3.0 + M_PI / 3.0)).epsilon(1e-14));

    const TestFunction f9 = make_test_function(TestFunctionId::F9);
    CHECK(f9(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f9(-0.5, 0.5) == 0.0);

    const TestFunction f6 = make_test_function(TestFunctionId::F6);
    CHECK(f6(0.0) == 1.0);
    CHECK(f6(M_PI / 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("parameter and domain errors") {
    const TestFunction f4_no_h = make_test_function(TestFunctionId::F4);
    CHECK_THROWS_AS(f4_no_h(0.5), std::invalid_argument);
    const TestFunction f4 = make_test_function(TestFunctionId::F4, 0.25);
    CHECK_NOTHROW(f4(0.5));
    CHECK(f4(0.5) >= 0.0);

    const TestFunction f1 = make_test_function(TestFunctionId::F1);
    CHECK_THROWS_AS(f1(1.5), std::domain_error);
    const TestFunction f7 = make_test_function(TestFunctionId::F7);
    CHECK_THROWS_AS(f7(0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(f7(0.5), std::invalid_argument); // needs a y coordinate
}

TEST_CASE("piecewise offsets of the tanh chain accumulate per element") {
    const double h = 0.5;
    const TestFunction f5 = make_test_function(TestFunctionId::F5, h);
    const double k = 10.0;
    // first element: plain tanh(kx)
    CHECK(f5(-1.8) == doctest::Approx(std::tanh(-18.0)).epsilon(1e-15));
    // second element subtracts the first boundary value once
    const double x1 = -1.3;
    CHECK(f5(x1) ==
          doctest::Approx(2.0 * std::tanh(x1 * k) - std::tanh(-1.5 * k)).epsilon(1e-14));
    // third element subtracts both prior boundary values
    const double x2 = -0.8;
    CHECK(f5(x2) == doctest::Approx(3.0 * std::tanh(x2 * k) - std::tanh(-1.5 * k) -
                                    std::tanh(-1.0 * k))
                        .epsilon(1e-14));
    // continuity at a boundary
    CHECK(f5(-1.5 + 1e-12) == doctest::Approx(f5(-1.5 - 1e-12)).epsilon(1e-9));
}

TEST_CASE("the cosine-disk function attains its negative lobe") {
    const TestFunction f8 = make_test_function(TestFunctionId::F8);
    double mn = 1e300;
    const std::size_t n = 1001;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = 2.0 * static_cast<double>(i) / (n - 1);
            const double y = 2.0 * static_cast<double>(j) / (n - 1);
            mn = std::min(mn, f8(x, y));
        }
    }
    CHECK(mn >= -1.0);
    CHECK(mn <= -0.99);
}

TEST_CASE("l2 error basics") {
    auto zero = [](double) { return 0.0; };
    auto one = [](double) { return 1.0; };
    CHECK(l2_error_1d(one, one, 0.0, 1.0) == 0.0);
    CHECK(l2_error_1d(zero, one, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("convergence table: linear on the Runge function") {
    MethodConfig lin;
    lin.method = Method::Linear;
    const std::vector<std::size_t> ns{17, 33, 65, 129, 257};
    const std::vector<int> degrees{1};
    const auto rep = convergence_table(lin, TestFunctionId::F1, ns, degrees, NodeFamily::Uniform);
    REQUIRE(rep.rows.size() == 5);
    const double expected[5] = {2.16e-2, 6.02e-3, 1.52e-3, 3.82e-4, 9.56e-5};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(rep.rows[i].l2_error == doctest::Approx(expected[i]).epsilon(0.02));
        CHECK(rep.rows[i].avg_degree == 1.0);
    }
}

TEST_CASE("convergence table: pchip on the smooth benchmark") {
    MethodConfig pchip;
    pchip.method = Method::Pchip;
    const std::vector<std::size_t> ns{17};
    const std::vector<int> degrees{3};
    const auto rep = convergence_table(pchip, TestFunctionId::F6, ns, degrees, NodeFamily::Uniform);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].l2_error == doctest::Approx(7.96e-4).epsilon(0.05));
}

TEST_CASE("convergence table: positivity-preserving on the smooth benchmark") {
    MethodConfig ppi;
    ppi.method = Method::Ppi;
    const std::vector<std::size_t> ns{17};
    const std::vector<int> degrees{4};
    const auto rep = convergence_table(ppi, TestFunctionId::F6, ns, degrees, NodeFamily::Uniform);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].l2_error <= 5e-5);
    CHECK(rep.rows[0].min_value >= -1e-12);
    CHECK(rep.rows[0].avg_degree == 4.0);
}

TEST_CASE("lgl family requires consistent (n, degree) pairs") {
    MethodConfig ppi;
    ppi.method = Method::Ppi;
    const std::vector<std::size_t> ns{18};
    const std::vector<int> degrees{4};
    CHECK_THROWS_WITH_AS(
        static_cast<void>(convergence_table(ppi, TestFunctionId::F6, ns, degrees, NodeFamily::Lgl)),
        doctest::Contains("18"), std::invalid_argument);
}

TEST_CASE("error ratios") {
    MethodConfig lin;
    lin.method = Method::Linear;
    const std::vector<std::size_t> ns{17, 33, 65, 129, 257};
    const std::vector<int> degrees{1};
    const auto rep = convergence_table(lin, TestFunctionId::F6, ns, degrees, NodeFamily::Uniform);
    const auto ratios = error_ratios(rep);
    REQUIRE(ratios.size() == 4);
    for (const auto& r : ratios) {
        CHECK(r.ratio >= 3.8);
        CHECK(r.ratio <= 4.2);
    }

    MethodConfig pchip;
    pchip.method = Method::Pchip;
    const std::vector<int> d3{3};
    const auto rep2 = convergence_table(pchip, TestFunctionId::F6, ns, d3, NodeFamily::Uniform);
    for (const auto& r : error_ratios(rep2)) {
        CHECK(r.ratio >= 5.4);
        CHECK(r.ratio <= 6.0);
    }

    // exact reproduction yields errors at noise level -> NaN sentinels
    ErrorReport tiny;
    for (std::size_t i = 0; i < 2; ++i) {
        ErrorReportRow row;
        row.n = 17 * (i + 1);
        row.method = Method::Spline;
        row.degree = 3;
        row.l2_error = 1e-15;
        tiny.rows.push_back(row);
    }
    const auto sentinel = error_ratios(tiny);
    REQUIRE(sentinel.size() == 1);
    CHECK(std::isnan(sentinel[0].ratio));

    ErrorReport single;
    single.rows.push_back(tiny.rows[0]);
    CHECK_THROWS_AS(error_ratios(single), std::invalid_argument);
}

TEST_CASE("f4 and f5 receive the mesh element width automatically") {
    MethodConfig ppi;
    ppi.method = Method::Ppi;
    const std::vector<std::size_t> ns{17};
    const std::vector<int> degrees{4};
    // (17-1)/4 = 4 elements, so h = 1/4 for f4 on [0,1]
    const auto rep = convergence_table(ppi, TestFunctionId::F4, ns, degrees, NodeFamily::Lgl);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].min_value >= -1e-12);

    // non-divisible pair is rejected for functions that need h
    const std::vector<std::size_t> bad_ns{18};
    CHECK_THROWS_AS(static_cast<void>(convergence_table(ppi, TestFunctionId::F4, bad_ns, degrees,
                                                        NodeFamily::Uniform)),
                    std::invalid_argument);
}
