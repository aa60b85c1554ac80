#include "interp/error_metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace interp {

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    xs.front() = a;
    xs.back() = b;
    return xs;
}

bool needs_element_structure(const MethodConfig& cfg, TestFunctionId fid) {
    return cfg.method == Method::Std || fid == TestFunctionId::F4 || fid == TestFunctionId::F5;
}

} // namespace

double l2_error_from_samples(std::span<const double> truth, std::span<const double> approx,
                             double a, double b) {
    if (truth.size() != approx.size() || truth.size() < 2) {
        throw std::invalid_argument("l2 error needs two matching sample sets of size >= 2");
    }
    const double h = (b - a) / static_cast<double>(truth.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double e = truth[i] - approx[i];
        const double w = (i == 0 || i + 1 == truth.size()) ? 0.5 : 1.0;
        acc += w * e * e;
    }
    return std::sqrt(acc * h);
}

double l2_error_1d(const std::function<double(double)>& truth,
                   const std::function<double(double)>& approx, double a, double b) {
    const std::vector<double> xs = linspace(a, b, kErrorSamples1D);
    std::vector<double> t(xs.size()), s(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        t[i] = truth(xs[i]);
        s[i] = approx(xs[i]);
    }
    return l2_error_from_samples(t, s, a, b);
}

double l2_error_2d(const std::function<double(double, double)>& truth,
                   std::span<const double> approx_row_major, std::span<const double> xs,
                   std::span<const double> ys) {
    if (approx_row_major.size() != xs.size() * ys.size()) {
        throw std::invalid_argument("l2_error_2d: approximation grid size mismatch");
    }
    const double hx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    const double hy = (ys.back() - ys.front()) / static_cast<double>(ys.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double wx = (i == 0 || i + 1 == xs.size()) ? 0.5 : 1.0;
        double row = 0.0;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const double wy = (j == 0 || j + 1 == ys.size()) ? 0.5 : 1.0;
            const double e = truth(xs[i], ys[j]) - approx_row_major[i * ys.size() + j];
            row += wy * e * e;
        }
        acc += wx * row;
    }
    return std::sqrt(acc * hx * hy);
}

Mesh1D convergence_mesh(double a, double b, std::size_t n, int degree, NodeFamily family) {
    if (n < 2) {
        throw std::invalid_argument("convergence mesh requires n >= 2");
    }
    if (degree >= 1 && (n - 1) % static_cast<std::size_t>(degree) == 0) {
        return element_mesh(a, b, (n - 1) / static_cast<std::size_t>(degree), degree, family);
    }
    if (family == NodeFamily::Lgl) {
        throw std::invalid_argument("inconsistent (n, degree) for the LGL family: n=" +
                                    std::to_string(n) + ", degree=" + std::to_string(degree) +
                                    " ((n-1) must be divisible by degree)");
    }
    return uniform_mesh(a, b, n);
}

namespace {

ErrorReportRow run_row_1d(const MethodConfig& cfg, TestFunctionId fid, std::size_t n, int degree,
                          NodeFamily family) {
    TestFunction probe = make_test_function(fid);
    Mesh1D mesh;
    if (needs_element_structure(cfg, fid)) {
        if (degree < 1 || (n - 1) % static_cast<std::size_t>(degree) != 0) {
            throw std::invalid_argument(
                "inconsistent (n, degree) pair for an element-structured run: n=" +
                std::to_string(n) + ", degree=" + std::to_string(degree));
        }
        mesh = element_mesh(probe.xlo, probe.xhi, (n - 1) / static_cast<std::size_t>(degree),
                            degree, family);
    } else {
        mesh = convergence_mesh(probe.xlo, probe.xhi, n, degree, family);
    }

    const TestFunction fn = make_test_function(fid, mesh.element_width);

    const auto t0 = std::chrono::steady_clock::now();
    GridFunction data = sample(mesh, [&](double x) { return fn(x); });
    MethodConfig row_cfg = cfg;
    row_cfg.degree = degree;
    Interpolant1D it = Interpolant1D::build(data, row_cfg);

    const std::vector<double> xs = linspace(fn.xlo, fn.xhi, kErrorSamples1D);
    const std::vector<double> approx = it.evaluate(xs);
    const auto t1 = std::chrono::steady_clock::now();

    std::vector<double> truth(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        truth[i] = fn(xs[i]);
    }

    ErrorReportRow row;
    row.n = n;
    row.method = cfg.method;
    row.degree = degree;
    row.l2_error = l2_error_from_samples(truth, approx, fn.xlo, fn.xhi);
    row.avg_degree = it.avg_degree();
    row.min_value = *std::min_element(approx.begin(), approx.end());
    row.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    return row;
}

} // namespace

ErrorReport convergence_table(const MethodConfig& cfg, TestFunctionId fid,
                              std::span<const std::size_t> ns, std::span<const int> degrees,
                              NodeFamily family) {
    if (ns.empty() || degrees.empty()) {
        throw std::invalid_argument("convergence table requires nonempty n and degree lists");
    }
    ErrorReport report;
    for (int d : degrees) {
        for (std::size_t n : ns) {
            report.rows.push_back(run_row_1d(cfg, fid, n, d, family));
        }
    }
    return report;
}

ErrorReport convergence_table_2d(const MethodConfig& cfg, TestFunctionId fid,
                                 std::span<const std::size_t> ns, std::span<const int> degrees,
                                 NodeFamily family, AxisOrder order) {
    if (ns.empty() || degrees.empty()) {
        throw std::invalid_argument("convergence table requires nonempty n and degree lists");
    }
    TestFunction probe = make_test_function(fid);
    if (!probe.two_d) {
        throw std::invalid_argument(test_function_name(fid) + " is not a 2D function");
    }
    ErrorReport report;
    for (int d : degrees) {
        for (std::size_t n : ns) {
            Mesh1D mx = convergence_mesh(probe.xlo, probe.xhi, n, d, family);
            Mesh1D my = convergence_mesh(probe.ylo, probe.yhi, n, d, family);
            const TestFunction fn = make_test_function(fid, mx.element_width);

            const auto t0 = std::chrono::steady_clock::now();
            GridFunction2D data = sample_2d(mx, my, [&](double x, double y) { return fn(x, y); });
            MethodConfig row_cfg = cfg;
            row_cfg.degree = d;
            const std::vector<double> tx = linspace(fn.xlo, fn.xhi, kErrorSamplesPerAxis2D);
            const std::vector<double> ty = linspace(fn.ylo, fn.yhi, kErrorSamplesPerAxis2D);
            Interp2DResult res = interpolate_2d(data, tx, ty, row_cfg, order);
            const auto t1 = std::chrono::steady_clock::now();

            ErrorReportRow row;
            row.n = n;
            row.method = cfg.method;
            row.degree = d;
            row.l2_error = l2_error_2d([&](double x, double y) { return fn(x, y); }, res.values,
                                       tx, ty);
            row.avg_degree = res.avg_degree;
            row.min_value = res.min_value;
            row.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
            report.rows.push_back(row);
        }
    }
    return report;
}

std::vector<RatioRow> error_ratios(const ErrorReport& report) {
    std::vector<RatioRow> out;
    // group rows by (method, degree) preserving first-appearance order
    std::vector<std::pair<Method, int>> keys;
    for (const auto& r : report.rows) {
        const std::pair<Method, int> key{r.method, r.degree};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(key);
        }
    }
    for (const auto& key : keys) {
        std::vector<const ErrorReportRow*> rows;
        for (const auto& r : report.rows) {
            if (r.method == key.first && r.degree == key.second) {
                rows.push_back(&r);
            }
        }
        if (rows.size() < 2) {
            throw std::invalid_argument("error_ratios requires at least 2 rows per group");
        }
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            RatioRow rr;
            rr.method = key.first;
            rr.degree = key.second;
            rr.n_coarse = rows[i]->n;
            rr.n_fine = rows[i + 1]->n;
            if (rows[i]->l2_error <= 1e-13 || rows[i + 1]->l2_error <= 1e-13) {
                rr.ratio = std::numeric_limits<double>::quiet_NaN();
            } else {
                rr.ratio = rows[i]->l2_error / rows[i + 1]->l2_error;
            }
            out.push_back(rr);
        }
    }
    return out;
}

} // namespace interp
