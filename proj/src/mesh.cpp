#include "interp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace interp {

namespace {

// Legendre polynomial P_p and its first derivative at x, |x| < 1.
void legendre_with_derivative(int p, double x, double& value, double& derivative) {
    double pm1 = 1.0; // P_0
    double pk = x;    // P_1
    for (int k = 2; k <= p; ++k) {
        const double pk1 = ((2.0 * k - 1.0) * x * pk - (k - 1.0) * pm1) / k;
        pm1 = pk;
        pk = pk1;
    }
    value = (p == 0) ? 1.0 : pk;
    if (p == 0) {
        derivative = 0.0;
    } else {
        derivative = p * (x * pk - pm1) / (x * x - 1.0);
    }
}

double legendre_derivative(int p, double x) {
    double v, d;
    legendre_with_derivative(p, x, v, d);
    return d;
}

// Root of P'_p near the given seed: Newton on P'_p with the second derivative
// from the Legendre ODE, bisection on a sign bracket if Newton stalls.
double lgl_interior_root(int p, double seed) {
    double x = seed;
    for (int it = 0; it < 100; ++it) {
        double v, d;
        legendre_with_derivative(p, x, v, d);
        const double d2 = (2.0 * x * d - p * (p + 1.0) * v) / (1.0 - x * x);
        const double dx = -d / d2;
        x += dx;
        if (std::abs(dx) < 1e-16) {
            return x;
        }
    }
    // Newton stalled; bracket around the seed and bisect.
    double step = 0.5 * M_PI / (4.0 * p);
    double lo = seed, hi = seed;
    double flo = legendre_derivative(p, lo);
    for (int ex = 0; ex < 60; ++ex) {
        lo = std::max(seed - step, -1.0 + 1e-15);
        hi = std::min(seed + step, 1.0 - 1e-15);
        flo = legendre_derivative(p, lo);
        if (flo * legendre_derivative(p, hi) <= 0.0) break;
        step *= 1.5;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = legendre_derivative(p, mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

void require_finite_domain(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("mesh domain endpoints must be finite");
    }
    if (!(a < b)) {
        throw std::invalid_argument("mesh domain requires a < b");
    }
}

} // namespace

std::pair<std::size_t, std::size_t> Mesh1D::element_node_range(std::size_t e) const {
    const std::size_t first = element_offsets.at(e);
    const std::size_t last =
        (e + 1 < element_offsets.size()) ? element_offsets[e + 1] : nodes.size() - 1;
    return {first, last};
}

std::size_t Mesh1D::element_of_interval(std::size_t i) const {
    auto it = std::upper_bound(element_offsets.begin(), element_offsets.end(), i);
    return static_cast<std::size_t>(it - element_offsets.begin()) - 1;
}

void Mesh1D::validate() const {
    if (nodes.size() < 2) {
        throw std::invalid_argument("mesh requires at least 2 nodes");
    }
    if (element_offsets.empty() || element_offsets.front() != 0) {
        throw std::invalid_argument("mesh element structure is missing or malformed");
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i] < nodes[i + 1])) {
            throw std::invalid_argument("mesh nodes must be strictly increasing");
        }
    }
    for (std::size_t e = 0; e + 1 < element_offsets.size(); ++e) {
        if (element_offsets[e + 1] <= element_offsets[e]) {
            throw std::invalid_argument("mesh element offsets must be increasing");
        }
        if (element_offsets[e + 1] >= nodes.size()) {
            throw std::invalid_argument("mesh element offset out of range");
        }
    }
}

Mesh1D uniform_mesh(double a, double b, std::size_t n) {
    require_finite_domain(a, b);
    if (n < 2) {
        throw std::invalid_argument("uniform_mesh requires n >= 2");
    }
    Mesh1D m;
    m.a = a;
    m.b = b;
    m.family = NodeFamily::Uniform;
    m.element_width = b - a;
    m.element_offsets = {0};
    m.nodes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.nodes[i] = a + static_cast<double>(i) * (b - a) / static_cast<double>(n - 1);
    }
    m.nodes.front() = a;
    m.nodes.back() = b;
    return m;
}

std::vector<double> lgl_nodes(int p) {
    if (p < 1) {
        throw std::invalid_argument("lgl_nodes requires degree >= 1");
    }
    std::vector<double> x(static_cast<std::size_t>(p) + 1);
    x.front() = -1.0;
    x.back() = 1.0;
    // Interior node j sits near the Chebyshev-Gauss-Lobatto estimate
    // cos(pi*(p-j)/p). Solve the lower half and mirror for exact antisymmetry.
    for (int j = 1; j <= (p - 1) / 2; ++j) {
        const double seed = std::cos(M_PI * static_cast<double>(p - j) / p);
        const double r = lgl_interior_root(p, seed);
        x[static_cast<std::size_t>(j)] = r;
        x[static_cast<std::size_t>(p - j)] = -r;
    }
    if (p % 2 == 0 && p >= 2) {
        x[static_cast<std::size_t>(p / 2)] = 0.0;
    }
    return x;
}

Mesh1D element_mesh(double a, double b, std::size_t ne, int p, NodeFamily family) {
    require_finite_domain(a, b);
    if (ne < 1) {
        throw std::invalid_argument("element_mesh requires ne >= 1");
    }
    if (p < 1) {
        throw std::invalid_argument("element_mesh requires degree >= 1");
    }

    const double h = (b - a) / static_cast<double>(ne);
    std::vector<double> boundaries(ne + 1);
    for (std::size_t k = 0; k <= ne; ++k) {
        boundaries[k] = a + static_cast<double>(k) * h;
    }
    boundaries.back() = b;

    std::vector<double> reference;
    if (family == NodeFamily::Lgl) {
        reference = lgl_nodes(p);
    } else {
        reference.resize(static_cast<std::size_t>(p) + 1);
        for (int j = 0; j <= p; ++j) {
            reference[static_cast<std::size_t>(j)] = -1.0 + 2.0 * j / static_cast<double>(p);
        }
    }

    Mesh1D m;
    m.a = a;
    m.b = b;
    m.family = family;
    m.element_width = h;
    m.nodes.reserve(ne * static_cast<std::size_t>(p) + 1);
    m.element_offsets.reserve(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const double l = boundaries[e];
        const double r = boundaries[e + 1];
        m.element_offsets.push_back(m.nodes.size());
        m.nodes.push_back(l); // element boundary, exact
        for (int j = 1; j < p; ++j) {
            m.nodes.push_back(l + (r - l) * 0.5 * (reference[static_cast<std::size_t>(j)] + 1.0));
        }
    }
    m.nodes.push_back(b);
    m.validate();
    return m;
}

} // namespace interp
