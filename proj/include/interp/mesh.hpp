#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace interp {

enum class NodeFamily { Uniform, Lgl };

/// 1D mesh with element structure. Nodes are strictly increasing, adjacent
/// elements share exactly one node, and element boundaries are themselves
/// nodes. `element_offsets[e]` is the index of the first node of element e.
struct Mesh1D {
    std::vector<double> nodes;
    std::vector<std::size_t> element_offsets;
    double a = 0.0;
    double b = 1.0;
    NodeFamily family = NodeFamily::Uniform;
    double element_width = 0.0; // (b - a) / num_elements()

    std::size_t num_nodes() const { return nodes.size(); }
    std::size_t num_intervals() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    std::size_t num_elements() const { return element_offsets.size(); }

    /// Inclusive node index range [first, last] of element e.
    std::pair<std::size_t, std::size_t> element_node_range(std::size_t e) const;

    /// Element owning interval i (intervals are [nodes[i], nodes[i+1]]).
    std::size_t element_of_interval(std::size_t i) const;

    /// Throws std::invalid_argument if any structural invariant is broken.
    void validate() const;
};

/// n equally spaced nodes spanning [a, b], treated as a single element.
Mesh1D uniform_mesh(double a, double b, std::size_t n);

/// Legendre-Gauss-Lobatto points of degree p on [-1, 1]: the endpoints plus
/// the p-1 roots of the derivative of the Legendre polynomial of degree p.
/// Returned sorted; antisymmetric by construction.
std::vector<double> lgl_nodes(int p);

/// ne uniform-width elements on [a, b], each carrying p+1 nodes of the given
/// family mapped affinely into the element. Shared boundary nodes are stored
/// once; the total node count is ne*p + 1. Element boundaries are computed as
/// a + k*(b-a)/ne directly, never accumulated.
Mesh1D element_mesh(double a, double b, std::size_t ne, int p, NodeFamily family);

} // namespace interp
