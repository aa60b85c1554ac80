#include "interp/classic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace interp {

namespace {

// Index of the interval [xs[k], xs[k+1]] containing x; assumes x within range.
std::size_t locate(const std::vector<double>& xs, double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - xs.begin());
    idx = (idx == 0) ? 0 : idx - 1;
    if (idx >= xs.size() - 1) {
        idx = xs.size() - 2;
    }
    return idx;
}

void require_in_domain(const GridFunction& g, double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("evaluation target must be finite");
    }
    if (x < g.mesh.nodes.front() || x > g.mesh.nodes.back()) {
        throw std::domain_error("evaluation target " + std::to_string(x) +
                                " lies outside the data domain");
    }
}

template <typename F>
std::vector<double> map_targets(std::span<const double> targets, F&& f) {
    std::vector<double> out;
    out.reserve(targets.size());
    for (double t : targets) {
        out.push_back(f(t));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// ElementLagrange

ElementLagrange::ElementLagrange(GridFunction data) : data_(std::move(data)) {
    data_.validate();
    const std::size_t ne = data_.mesh.num_elements();
    boundaries_.reserve(ne + 1);
    weights_.reserve(ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto [first, last] = data_.mesh.element_node_range(e);
        if (last <= first) {
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " has fewer than 2 nodes");
        }
        boundaries_.push_back(data_.mesh.nodes[first]);
        const std::size_t m = last - first + 1;
        std::vector<double> w(m, 1.0);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                if (k != j) {
                    w[j] /= data_.mesh.nodes[first + j] - data_.mesh.nodes[first + k];
                }
            }
        }
        weights_.push_back(std::move(w));
    }
    boundaries_.push_back(data_.mesh.nodes.back());
}

int ElementLagrange::element_degree(std::size_t e) const {
    const auto [first, last] = data_.mesh.element_node_range(e);
    return static_cast<int>(last - first);
}

double ElementLagrange::operator()(double x) const {
    require_in_domain(data_, x);
    const std::size_t e = locate(boundaries_, x);
    const auto [first, last] = data_.mesh.element_node_range(e);
    const auto& w = weights_[e];
    // second barycentric form; exact at nodes
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j <= last - first; ++j) {
        const double d = x - data_.mesh.nodes[first + j];
        if (d == 0.0) {
            return data_.values[first + j];
        }
        const double q = w[j] / d;
        num += q * data_.values[first + j];
        den += q;
    }
    return num / den;
}

std::vector<double> ElementLagrange::evaluate(std::span<const double> targets) const {
    return map_targets(targets, [this](double t) { return (*this)(t); });
}

ElementLagrange std_build(const GridFunction& data) { return ElementLagrange(data); }

// ---------------------------------------------------------------------------
// PiecewiseLinear

PiecewiseLinear::PiecewiseLinear(GridFunction data) : data_(std::move(data)) {
    data_.validate();
}

double PiecewiseLinear::operator()(double x) const {
    require_in_domain(data_, x);
    const auto& xs = data_.mesh.nodes;
    const std::size_t k = locate(xs, x);
    if (x == xs[k]) {
        return data_.values[k];
    }
    if (x == xs[k + 1]) {
        return data_.values[k + 1];
    }
    const double t = (x - xs[k]) / (xs[k + 1] - xs[k]);
    return data_.values[k] + t * (data_.values[k + 1] - data_.values[k]);
}

std::vector<double> PiecewiseLinear::evaluate(std::span<const double> targets) const {
    return map_targets(targets, [this](double t) { return (*this)(t); });
}

PiecewiseLinear linear_build(const GridFunction& data) { return PiecewiseLinear(data); }

// ---------------------------------------------------------------------------
// HermiteSpline (PCHIP slopes)

namespace {

double pchip_endpoint_slope(double h0, double h1, double d0, double d1) {
    // Non-centered three-point estimate with the shape-preserving clamp.
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) {
        return 0.0;
    }
    if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) {
        return 3.0 * d0;
    }
    return m;
}

} // namespace

HermiteSpline::HermiteSpline(GridFunction data) : data_(std::move(data)) {
    data_.validate();
    const auto& xs = data_.mesh.nodes;
    const auto& ys = data_.values;
    const std::size_t n = xs.size();
    if (n < 2) {
        throw std::invalid_argument("pchip requires at least 2 nodes");
    }
    slopes_.assign(n, 0.0);
    if (n == 2) {
        const double d = (ys[1] - ys[0]) / (xs[1] - xs[0]);
        slopes_[0] = slopes_[1] = d;
        return;
    }
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = xs[k + 1] - xs[k];
        d[k] = (ys[k + 1] - ys[k]) / h[k];
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0) {
            slopes_[k] = 0.0;
        } else {
            const double w1 = 2.0 * h[k] + h[k - 1];
            const double w2 = h[k] + 2.0 * h[k - 1];
            slopes_[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
        }
    }
    slopes_[0] = pchip_endpoint_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = pchip_endpoint_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

double HermiteSpline::operator()(double x) const {
    require_in_domain(data_, x);
    const auto& xs = data_.mesh.nodes;
    const auto& ys = data_.values;
    const std::size_t k = locate(xs, x);
    if (x == xs[k]) {
        return ys[k];
    }
    if (x == xs[k + 1]) {
        return ys[k + 1];
    }
    const double h = xs[k + 1] - xs[k];
    const double t = (x - xs[k]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * ys[k] + h10 * h * slopes_[k] + h01 * ys[k + 1] + h11 * h * slopes_[k + 1];
}

std::vector<double> HermiteSpline::evaluate(std::span<const double> targets) const {
    return map_targets(targets, [this](double t) { return (*this)(t); });
}

HermiteSpline pchip_build(const GridFunction& data) { return HermiteSpline(data); }

// ---------------------------------------------------------------------------
// CubicSpline (natural end conditions)

CubicSpline::CubicSpline(GridFunction data) : data_(std::move(data)) {
    data_.validate();
    const auto& xs = data_.mesh.nodes;
    const auto& ys = data_.values;
    const std::size_t n = xs.size();
    if (n < 3) {
        throw std::invalid_argument("cubic spline requires at least 3 nodes");
    }
    m_.assign(n, 0.0);

    // Tridiagonal system for interior second derivatives, natural ends.
    const std::size_t ni = n - 2;
    std::vector<double> diag(ni), rhs(ni), sub(ni), sup(ni);
    for (std::size_t k = 0; k < ni; ++k) {
        const double hl = xs[k + 1] - xs[k];
        const double hr = xs[k + 2] - xs[k + 1];
        sub[k] = hl;
        diag[k] = 2.0 * (hl + hr);
        sup[k] = hr;
        rhs[k] = 6.0 * ((ys[k + 2] - ys[k + 1]) / hr - (ys[k + 1] - ys[k]) / hl);
    }
    // Thomas algorithm
    for (std::size_t k = 1; k < ni; ++k) {
        const double w = sub[k] / diag[k - 1];
        diag[k] -= w * sup[k - 1];
        rhs[k] -= w * rhs[k - 1];
    }
    m_[ni] = rhs[ni - 1] / diag[ni - 1];
    for (std::size_t k = ni - 1; k-- > 0;) {
        m_[k + 1] = (rhs[k] - sup[k] * m_[k + 2]) / diag[k];
    }
}

double CubicSpline::operator()(double x) const {
    require_in_domain(data_, x);
    const auto& xs = data_.mesh.nodes;
    const auto& ys = data_.values;
    const std::size_t k = locate(xs, x);
    if (x == xs[k]) {
        return ys[k];
    }
    if (x == xs[k + 1]) {
        return ys[k + 1];
    }
    const double h = xs[k + 1] - xs[k];
    const double A = (xs[k + 1] - x) / h;
    const double B = (x - xs[k]) / h;
    return A * ys[k] + B * ys[k + 1] +
           ((A * A * A - A) * m_[k] + (B * B * B - B) * m_[k + 1]) * h * h / 6.0;
}

std::vector<double> CubicSpline::evaluate(std::span<const double> targets) const {
    return map_targets(targets, [this](double t) { return (*this)(t); });
}

CubicSpline spline_build(const GridFunction& data) { return CubicSpline(data); }

} // namespace interp
