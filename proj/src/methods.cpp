#include "interp/methods.hpp"

#include <stdexcept>

namespace interp {

Method method_from_string(const std::string& name) {
    if (name == "std") return Method::Std;
    if (name == "linear") return Method::Linear;
    if (name == "pchip") return Method::Pchip;
    if (name == "spline") return Method::Spline;
    if (name == "dbi") return Method::Dbi;
    if (name == "ppi") return Method::Ppi;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected std, linear, pchip, spline, dbi, or ppi)");
}

std::string method_name(Method m) {
    switch (m) {
    case Method::Std: return "std";
    case Method::Linear: return "linear";
    case Method::Pchip: return "pchip";
    case Method::Spline: return "spline";
    case Method::Dbi: return "dbi";
    case Method::Ppi: return "ppi";
    }
    return "?";
}

Interpolant1D Interpolant1D::build(const GridFunction& data, const MethodConfig& cfg) {
    Interpolant1D out;
    out.policy_ = cfg.extrapolation;
    switch (cfg.method) {
    case Method::Linear:
        out.impl_ = linear_build(data);
        out.avg_degree_ = 1.0;
        break;
    case Method::Std: {
        ElementLagrange el = std_build(data);
        double total = 0.0;
        for (std::size_t e = 0; e < data.mesh.num_elements(); ++e) {
            total += el.element_degree(e);
        }
        out.avg_degree_ = total / static_cast<double>(data.mesh.num_elements());
        out.impl_ = std::move(el);
        break;
    }
    case Method::Pchip:
        out.impl_ = pchip_build(data);
        out.avg_degree_ = 3.0;
        break;
    case Method::Spline:
        out.impl_ = spline_build(data);
        out.avg_degree_ = 3.0;
        break;
    case Method::Dbi:
    case Method::Ppi: {
        InterpConfig acfg;
        acfg.method = (cfg.method == Method::Dbi) ? AdaptiveMethod::DataBounded
                                                  : AdaptiveMethod::PositivityPreserving;
        acfg.target_degree = cfg.degree;
        acfg.floor = cfg.floor;
        acfg.element_confined = cfg.element_confined;
        PiecewiseInterpolant pi = interp::build(data, acfg);
        out.avg_degree_ = pi.avg_degree;
        out.impl_ = std::move(pi);
        break;
    }
    }
    return out;
}

double Interpolant1D::operator()(double x) const {
    return std::visit(
        [&](const auto& impl) -> double {
            using T = std::decay_t<decltype(impl)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                throw std::logic_error("interpolant was not built");
            } else if constexpr (std::is_same_v<T, PiecewiseInterpolant>) {
                return evaluate_at(impl, x, policy_);
            } else {
                return impl(x);
            }
        },
        impl_);
}

std::vector<double> Interpolant1D::evaluate(std::span<const double> targets) const {
    return std::visit(
        [&](const auto& impl) -> std::vector<double> {
            using T = std::decay_t<decltype(impl)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                throw std::logic_error("interpolant was not built");
            } else if constexpr (std::is_same_v<T, PiecewiseInterpolant>) {
                return interp::evaluate(impl, targets, policy_);
            } else {
                return impl.evaluate(targets);
            }
        },
        impl_);
}

} // namespace interp
