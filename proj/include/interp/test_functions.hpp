#pragma once

#include <string>

namespace interp {

enum class TestFunctionId { F1, F2, F3, F4, F5, F6, F7, F8, F9, F10 };

TestFunctionId test_function_from_string(const std::string& name);
std::string test_function_name(TestFunctionId id);

/// One of the benchmark functions, with whatever parameters it needs bound.
/// f4 and f5 depend on the element width of the mesh in use and require it
/// at construction; the others ignore it.
struct TestFunction {
    TestFunctionId id = TestFunctionId::F1;
    double steepness = 0.0;     // k (f2, f5, f10)
    double smoothing = 0.0;     // delta (f4)
    double element_width = 0.0; // h (f4, f5)
    double left_endpoint = 0.0; // a (f5)
    double offset = 0.0;        // additive shift (positivity runs on f5)

    double xlo = 0.0, xhi = 1.0;
    double ylo = 0.0, yhi = 1.0;
    bool two_d = false;

    double operator()(double x) const;
    double operator()(double x, double y) const;
};

/// Binds the paper-standard parameters for the given function. element_width
/// is required for F4 and F5 and ignored elsewhere.
TestFunction make_test_function(TestFunctionId id, double element_width = 0.0,
                                double offset = 0.0);

/// Formula evaluation with explicit parameters (1D functions).
double eval_test_function(TestFunctionId id, const TestFunction& params, double x);

/// Formula evaluation for the 2D functions F7-F10.
double eval_test_function(TestFunctionId id, const TestFunction& params, double x, double y);

} // namespace interp
