#include "interp/divided_differences.hpp"

#include <cmath>
#include <stdexcept>

namespace interp {

double newton_eval(const NewtonPolynomial& p, double x) {
    const auto& c = p.coefficients;
    const auto& t = p.centers;
    if (c.empty()) {
        throw std::invalid_argument("newton_eval on empty polynomial");
    }
    double v = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        v = c[k] + (x - t[k]) * v;
    }
    return v;
}

DividedDifferenceTable::DividedDifferenceTable(std::span<const double> xs,
                                               std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("divided differences need matching, nonempty xs and ys");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        extend(xs[i], ys[i]);
    }
}

void DividedDifferenceTable::check_new_point(double x, double y) const {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("divided differences require finite data");
    }
    for (double t : xs_) {
        if (t == x) {
            throw std::invalid_argument("divided differences require pairwise distinct abscissae");
        }
    }
}

void DividedDifferenceTable::extend(double x, double y) {
    check_new_point(x, y);
    const std::size_t n = xs_.size();
    xs_.push_back(x);
    if (levels_.empty()) {
        levels_.emplace_back();
    }
    levels_[0].push_back(y);
    for (std::size_t k = 1; k <= n; ++k) {
        if (levels_.size() <= k) {
            levels_.emplace_back();
        }
        const std::size_t i = n - k; // new entry index at level k
        const double num = levels_[k - 1][i + 1] - levels_[k - 1][i];
        levels_[k].push_back(num / (x - xs_[i]));
    }
}

double DividedDifferenceTable::extended_top(double x, double y) const {
    check_new_point(x, y);
    const std::size_t n = xs_.size();
    double e = y;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t i = n - k;
        e = (e - levels_[k - 1][i]) / (x - xs_[i]);
    }
    return e;
}

NewtonPolynomial DividedDifferenceTable::polynomial() const {
    NewtonPolynomial p;
    p.centers = xs_;
    p.coefficients.reserve(levels_.size());
    for (const auto& level : levels_) {
        p.coefficients.push_back(level[0]);
    }
    return p;
}

DividedDifferenceTable dd_table(std::span<const double> xs, std::span<const double> ys) {
    return DividedDifferenceTable(xs, ys);
}

} // namespace interp
