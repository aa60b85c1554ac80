#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "interp/adaptive.hpp"
#include "interp/classic.hpp"
#include "interp/grid_function.hpp"

namespace interp {

enum class Method { Std, Linear, Pchip, Spline, Dbi, Ppi };

Method method_from_string(const std::string& name);
std::string method_name(Method m);

struct MethodConfig {
    Method method = Method::Ppi;
    int degree = 3; // target degree for Dbi/Ppi; element/mesh degree otherwise
    double floor = 0.0;
    bool element_confined = false;
    ExtrapolationPolicy extrapolation = ExtrapolationPolicy::Error;
};

/// A built 1D interpolant of any method behind one evaluation surface.
class Interpolant1D {
public:
    static Interpolant1D build(const GridFunction& data, const MethodConfig& cfg);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> targets) const;

    /// Mean achieved degree per interval for the adaptive methods; the
    /// nominal degree of the scheme otherwise (1 linear, 3 pchip/spline,
    /// element degree for per-element Lagrange).
    double avg_degree() const { return avg_degree_; }

private:
    std::variant<std::monostate, PiecewiseLinear, ElementLagrange, HermiteSpline, CubicSpline,
                 PiecewiseInterpolant>
        impl_;
    ExtrapolationPolicy policy_ = ExtrapolationPolicy::Error;
    double avg_degree_ = 0.0;
};

} // namespace interp
