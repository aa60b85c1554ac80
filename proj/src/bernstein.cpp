#include "interp/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace interp {

namespace {

// Pascal triangle row-by-row; exact in double for n <= 32.
std::vector<std::vector<double>> binomials(int n) {
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto& row = c[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, 1.0);
        for (int j = 1; j < i; ++j) {
            row[static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    return c;
}

struct CertAccumulator {
    double bound = std::numeric_limits<double>::infinity();
    int max_depth;
    double tol;
};

CertStatus combine(CertStatus a, CertStatus b) {
    if (a == CertStatus::CertifiedNegative || b == CertStatus::CertifiedNegative) {
        return CertStatus::CertifiedNegative;
    }
    if (a == CertStatus::Inconclusive || b == CertStatus::Inconclusive) {
        return CertStatus::Inconclusive;
    }
    return CertStatus::CertifiedNonNegative;
}

CertStatus subdivide(std::vector<double>& c, int depth, CertAccumulator& acc) {
    const double mn = *std::min_element(c.begin(), c.end());
    if (mn >= -acc.tol) {
        acc.bound = std::min(acc.bound, mn);
        return CertStatus::CertifiedNonNegative;
    }
    if (c.front() < -acc.tol || c.back() < -acc.tol) {
        acc.bound = std::min(acc.bound, mn);
        return CertStatus::CertifiedNegative;
    }
    if (depth >= acc.max_depth) {
        acc.bound = std::min(acc.bound, mn);
        return CertStatus::Inconclusive;
    }

    // de Casteljau split at the midpoint
    const std::size_t n = c.size();
    std::vector<double> left(n), right(n), work = c;
    left[0] = work[0];
    right[n - 1] = work[n - 1];
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i + r < n; ++i) {
            work[i] = 0.5 * (work[i] + work[i + 1]);
        }
        left[r] = work[0];
        right[n - 1 - r] = work[n - 1 - r];
    }

    const CertStatus sl = subdivide(left, depth + 1, acc);
    if (sl == CertStatus::CertifiedNegative) {
        return sl;
    }
    const CertStatus sr = subdivide(right, depth + 1, acc);
    return combine(sl, sr);
}

} // namespace

BernsteinForm to_bernstein(const NewtonPolynomial& p, double lo, double hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("to_bernstein requires lo < hi");
    }
    const int d = p.degree();
    if (d < 0) {
        throw std::invalid_argument("to_bernstein on empty polynomial");
    }
    if (d > kMaxBernsteinDegree) {
        throw std::invalid_argument("unsupported degree for Bernstein conversion (max 32)");
    }

    // Newton -> power basis in s = x - lo, by synthetic multiplication.
    const auto& t = p.centers;
    const auto& nc = p.coefficients;
    std::vector<double> a(static_cast<std::size_t>(d) + 1, 0.0);
    a[0] = nc[static_cast<std::size_t>(d)];
    std::size_t len = 1;
    for (int k = d - 1; k >= 0; --k) {
        const double shift = lo - t[static_cast<std::size_t>(k)];
        // multiply by (s + shift), then add c_k
        a.insert(a.begin(), 0.0);
        a.pop_back();
        for (std::size_t j = 0; j < len; ++j) {
            a[j] += shift * a[j + 1];
        }
        ++len;
        a[0] += nc[static_cast<std::size_t>(k)];
    }

    // scale to u = s / (hi - lo) on [0, 1]
    const double w = hi - lo;
    double pw = 1.0;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(d); ++j) {
        pw *= w;
        a[j] *= pw;
    }

    // power -> Bernstein: b_i = sum_{j<=i} C(i,j)/C(d,j) * a_j
    const auto C = binomials(d);
    BernsteinForm bf;
    bf.lo = lo;
    bf.hi = hi;
    bf.coefficients.assign(static_cast<std::size_t>(d) + 1, 0.0);
    for (int i = 0; i <= d; ++i) {
        double s = 0.0;
        for (int j = 0; j <= i; ++j) {
            s += C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
                 C[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] *
                 a[static_cast<std::size_t>(j)];
        }
        bf.coefficients[static_cast<std::size_t>(i)] = s;
    }
    return bf;
}

double certificate_tolerance(const BernsteinForm& bf) {
    double m = 0.0;
    for (double c : bf.coefficients) {
        m = std::max(m, std::abs(c));
    }
    return 1e-12 * (1.0 + m);
}

CertResult certified_min(const BernsteinForm& bf, int max_depth) {
    if (bf.coefficients.empty()) {
        throw std::invalid_argument("certified_min on empty form");
    }
    if (max_depth < 0) {
        throw std::invalid_argument("certified_min requires max_depth >= 0");
    }
    CertAccumulator acc;
    acc.max_depth = max_depth;
    acc.tol = certificate_tolerance(bf);
    std::vector<double> c = bf.coefficients;
    CertResult res;
    res.status = subdivide(c, 0, acc);
    res.lower_bound = acc.bound;
    return res;
}

} // namespace interp
