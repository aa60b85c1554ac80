#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace interp {

/// Newton-form polynomial: coefficients c_0..c_d over centers t_0..t_d taken
/// in insertion order. p(x) = c_0 + c_1 (x-t_0) + ... + c_d (x-t_0)...(x-t_{d-1}).
struct NewtonPolynomial {
    std::vector<double> centers;
    std::vector<double> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Nested (Horner-style) evaluation of the Newton form.
double newton_eval(const NewtonPolynomial& p, double x);

/// Triangular table of divided differences over abscissae kept in insertion
/// order. entry(i, k) = f[t_i, ..., t_{i+k}]; column 0 holds the input values.
/// Appending one point appends exactly one diagonal, so a table extended
/// point-by-point is bit-identical to one built in a single shot.
class DividedDifferenceTable {
public:
    DividedDifferenceTable() = default;
    DividedDifferenceTable(std::span<const double> xs, std::span<const double> ys);

    /// Appends one (x, y) pair and the corresponding new diagonal.
    void extend(double x, double y);

    /// Highest-order divided difference the table would acquire if (x, y)
    /// were appended. Does not modify the table.
    double extended_top(double x, double y) const;

    std::size_t size() const { return xs_.size(); }
    double entry(std::size_t i, std::size_t k) const { return levels_[k][i]; }
    double coefficient(std::size_t k) const { return levels_[k][0]; }
    const std::vector<double>& abscissae() const { return xs_; }

    NewtonPolynomial polynomial() const;

private:
    void check_new_point(double x, double y) const;

    std::vector<double> xs_;
    // levels_[k][i] = f[t_i..t_{i+k}]
    std::vector<std::vector<double>> levels_;
};

/// Convenience wrapper matching the classical signature.
DividedDifferenceTable dd_table(std::span<const double> xs, std::span<const double> ys);

} // namespace interp
