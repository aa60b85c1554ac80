#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interp/grid_function.hpp"

namespace interp {

/// Per-element Lagrange interpolation of the mesh's full nodal data: degree
/// p within each element, C0 across element boundaries. Evaluation uses
/// barycentric weights.
class ElementLagrange {
public:
    explicit ElementLagrange(GridFunction data);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> targets) const;

    const GridFunction& data() const { return data_; }
    int element_degree(std::size_t e) const;

private:
    GridFunction data_;
    std::vector<double> boundaries_;
    std::vector<std::vector<double>> weights_; // barycentric, per element
};

/// Piecewise linear interpolant; stays within [min(u), max(u)] everywhere.
class PiecewiseLinear {
public:
    explicit PiecewiseLinear(GridFunction data);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> targets) const;

    const GridFunction& data() const { return data_; }

private:
    GridFunction data_;
};

/// Monotone cubic Hermite spline with slopes from the Fritsch-Carlson
/// weighted harmonic mean on nonuniform spacing; zero slope where adjacent
/// secants change sign or vanish; three-point shape-clamped endpoint slopes.
class HermiteSpline {
public:
    explicit HermiteSpline(GridFunction data);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> targets) const;

    const GridFunction& data() const { return data_; }
    const std::vector<double>& slopes() const { return slopes_; }

private:
    GridFunction data_;
    std::vector<double> slopes_;
};

/// Natural cubic spline (second derivative zero at both ends); C2, exact at
/// the nodes, no shape constraint.
class CubicSpline {
public:
    explicit CubicSpline(GridFunction data);

    double operator()(double x) const;
    std::vector<double> evaluate(std::span<const double> targets) const;

    const GridFunction& data() const { return data_; }
    const std::vector<double>& second_derivatives() const { return m_; }

private:
    GridFunction data_;
    std::vector<double> m_; // nodal second derivatives
};

ElementLagrange std_build(const GridFunction& data);
PiecewiseLinear linear_build(const GridFunction& data);
HermiteSpline pchip_build(const GridFunction& data);
CubicSpline spline_build(const GridFunction& data);

} // namespace interp
