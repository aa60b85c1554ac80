#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "interp/mesh.hpp"

namespace interp {

/// Mesh plus one sample value per node: the input of every interpolation build.
struct GridFunction {
    Mesh1D mesh;
    std::vector<double> values;

    void validate() const {
        mesh.validate();
        if (values.size() != mesh.num_nodes()) {
            throw std::invalid_argument("grid function value count does not match node count");
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("grid function values must be finite");
            }
        }
    }
};

inline GridFunction sample(const Mesh1D& mesh, const std::function<double(double)>& f) {
    GridFunction g;
    g.mesh = mesh;
    g.values.reserve(mesh.num_nodes());
    for (double x : mesh.nodes) {
        g.values.push_back(f(x));
    }
    return g;
}

/// Samples on a Cartesian product grid; values[i*ny + j] = f(x_i, y_j).
struct GridFunction2D {
    Mesh1D mesh_x;
    Mesh1D mesh_y;
    std::vector<double> values;

    std::size_t nx() const { return mesh_x.num_nodes(); }
    std::size_t ny() const { return mesh_y.num_nodes(); }
    double at(std::size_t i, std::size_t j) const { return values[i * ny() + j]; }

    void validate() const {
        mesh_x.validate();
        mesh_y.validate();
        if (values.size() != nx() * ny()) {
            throw std::invalid_argument("2d grid function value count does not match grid size");
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("2d grid function values must be finite");
            }
        }
    }
};

inline GridFunction2D sample_2d(const Mesh1D& mx, const Mesh1D& my,
                                const std::function<double(double, double)>& f) {
    GridFunction2D g;
    g.mesh_x = mx;
    g.mesh_y = my;
    g.values.reserve(mx.num_nodes() * my.num_nodes());
    for (double x : mx.nodes) {
        for (double y : my.nodes) {
            g.values.push_back(f(x, y));
        }
    }
    return g;
}

} // namespace interp
