// Command-line front end: mesh generation, grid-to-grid interpolation,
// convergence tables, and the remap diagnostic, all emitted as CSV.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "interp/csv.hpp"
#include "interp/error_metrics.hpp"
#include "interp/exceptions.hpp"
#include "interp/remap.hpp"
#include "interp/tensor.hpp"

namespace {

using namespace interp;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct DomainSpec {
    double a = 0.0;
    double b = 1.0;
};

DomainSpec parse_domain(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--domain expects 'a,b', got '" + text + "'");
    }
    DomainSpec d;
    d.a = parse_number(text.substr(0, comma), 0);
    d.b = parse_number(text.substr(comma + 1), 0);
    if (!(d.a < d.b)) {
        throw std::invalid_argument("--domain requires a < b");
    }
    return d;
}

NodeFamily parse_family(const std::string& name) {
    if (name == "uniform") return NodeFamily::Uniform;
    if (name == "lgl") return NodeFamily::Lgl;
    throw std::invalid_argument("--family must be 'uniform' or 'lgl', got '" + name + "'");
}

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& flag) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const long long v = std::llround(parse_number(item, 0));
        if (v < 2) {
            throw std::invalid_argument(flag + " entries must be >= 2");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument(flag + " must contain at least one value");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const int v = static_cast<int>(std::llround(parse_number(item, 0)));
        if (v < 1) {
            throw std::invalid_argument(flag + " entries must be >= 1");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument(flag + " must contain at least one value");
    }
    return out;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::invalid_argument("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    xs.back() = b;
    return xs;
}

// --- nodes ------------------------------------------------------------

struct MeshFlags {
    std::string family = "uniform";
    std::size_t n = 0;
    std::size_t elements = 0;
    int degree = 0;
    std::string domain;
};

Mesh1D build_mesh(const MeshFlags& f, const DomainSpec& dom) {
    const NodeFamily fam = parse_family(f.family);
    if (f.n > 0 && f.elements == 0) {
        if (fam == NodeFamily::Lgl) {
            throw std::invalid_argument("the lgl family needs --elements and --degree, not --n");
        }
        return uniform_mesh(dom.a, dom.b, f.n);
    }
    if (f.elements > 0 && f.degree > 0) {
        return element_mesh(dom.a, dom.b, f.elements, f.degree, fam);
    }
    throw std::invalid_argument("mesh spec needs either --n or both --elements and --degree");
}

int cmd_nodes(const MeshFlags& flags, const std::string& out_path) {
    const DomainSpec dom = parse_domain(flags.domain);
    const Mesh1D mesh = build_mesh(flags, dom);
    Output out(out_path);
    out.stream() << "x\n";
    for (double x : mesh.nodes) {
        out.stream() << format_value(x) << "\n";
    }
    return 0;
}

// --- interp -----------------------------------------------------------

struct InterpFlags {
    std::string method = "ppi";
    int degree = 4;
    double floor = 0.0;
    std::string function;
    std::string input;
    MeshFlags source;
    std::size_t targets_n = 0;
    std::string targets_file;
    MeshFlags targets;
    std::string extrapolation = "error";
    std::string order = "xy";
    std::string out_path;
};

MethodConfig make_method_config(const std::string& method, int degree, double floor,
                                const std::string& extrapolation) {
    MethodConfig cfg;
    cfg.method = method_from_string(method);
    cfg.degree = degree;
    cfg.floor = floor;
    if (extrapolation == "error") {
        cfg.extrapolation = ExtrapolationPolicy::Error;
    } else if (extrapolation == "clamp") {
        cfg.extrapolation = ExtrapolationPolicy::ClampToEdgeInterval;
    } else {
        throw std::invalid_argument("--extrapolation must be 'error' or 'clamp'");
    }
    return cfg;
}

GridFunction read_grid_1d(const CsvTable& table) {
    if (table.header.size() != 2) {
        throw std::invalid_argument("1d input csv must have exactly 2 columns (x, value)");
    }
    GridFunction g;
    std::size_t line = 1;
    for (const auto& row : table.rows) {
        ++line;
        g.mesh.nodes.push_back(parse_number(row[0], line));
        g.values.push_back(parse_number(row[1], line));
    }
    if (g.mesh.nodes.size() < 2) {
        throw std::invalid_argument("1d input csv needs at least 2 rows");
    }
    for (std::size_t i = 0; i + 1 < g.mesh.nodes.size(); ++i) {
        if (!(g.mesh.nodes[i] < g.mesh.nodes[i + 1])) {
            throw std::invalid_argument("input x column must be strictly increasing (row " +
                                        std::to_string(i + 3) + ")");
        }
    }
    g.mesh.a = g.mesh.nodes.front();
    g.mesh.b = g.mesh.nodes.back();
    g.mesh.element_offsets = {0};
    g.mesh.element_width = g.mesh.b - g.mesh.a;
    return g;
}

GridFunction2D read_grid_2d(const CsvTable& table) {
    GridFunction2D g;
    for (std::size_t j = 1; j < table.header.size(); ++j) {
        g.mesh_y.nodes.push_back(parse_number(table.header[j], 1));
    }
    std::size_t line = 1;
    for (const auto& row : table.rows) {
        ++line;
        g.mesh_x.nodes.push_back(parse_number(row[0], line));
        for (std::size_t j = 1; j < row.size(); ++j) {
            g.values.push_back(parse_number(row[j], line));
        }
    }
    auto finish_axis = [](Mesh1D& m, const char* axis) {
        if (m.nodes.size() < 2) {
            throw std::invalid_argument(std::string("2d input csv needs at least 2 ") + axis +
                                        " coordinates");
        }
        for (std::size_t i = 0; i + 1 < m.nodes.size(); ++i) {
            if (!(m.nodes[i] < m.nodes[i + 1])) {
                throw std::invalid_argument(std::string("2d input ") + axis +
                                            " coordinates must be strictly increasing");
            }
        }
        m.a = m.nodes.front();
        m.b = m.nodes.back();
        m.element_offsets = {0};
        m.element_width = m.b - m.a;
    };
    finish_axis(g.mesh_x, "x");
    finish_axis(g.mesh_y, "y");
    g.validate();
    return g;
}

int cmd_interp(const InterpFlags& flags) {
    const MethodConfig cfg =
        make_method_config(flags.method, flags.degree, flags.floor, flags.extrapolation);
    const AxisOrder order = (flags.order == "yx") ? AxisOrder::YThenX : AxisOrder::XThenY;
    if (flags.order != "xy" && flags.order != "yx") {
        throw std::invalid_argument("--order must be 'xy' or 'yx'");
    }

    std::optional<GridFunction> data_1d;
    std::optional<GridFunction2D> data_2d;

    if (!flags.function.empty()) {
        const TestFunctionId fid = test_function_from_string(flags.function);
        const TestFunction probe = make_test_function(fid);
        MeshFlags src = flags.source;
        src.domain = src.domain.empty()
                         ? format_value(probe.xlo) + "," + format_value(probe.xhi)
                         : src.domain;
        const DomainSpec dom = parse_domain(src.domain);
        const Mesh1D mesh = build_mesh(src, dom);
        const TestFunction fn = make_test_function(fid, mesh.element_width);
        if (probe.two_d) {
            data_2d = sample_2d(mesh, mesh, [&](double x, double y) { return fn(x, y); });
        } else {
            data_1d = sample(mesh, [&](double x) { return fn(x); });
        }
    } else if (!flags.input.empty()) {
        std::ifstream in(flags.input);
        if (!in) {
            throw std::invalid_argument("cannot open input file '" + flags.input + "'");
        }
        const CsvTable table = read_csv(in);
        if (!table.header.empty() && table.header.front().empty()) {
            data_2d = read_grid_2d(table);
        } else {
            data_1d = read_grid_1d(table);
        }
    } else {
        throw std::invalid_argument("interp needs either --function or --input");
    }

    Output out(flags.out_path);

    if (data_1d) {
        std::vector<double> targets;
        if (!flags.targets_file.empty()) {
            std::ifstream in(flags.targets_file);
            if (!in) {
                throw std::invalid_argument("cannot open targets file '" + flags.targets_file +
                                            "'");
            }
            const CsvTable t = read_csv(in);
            std::size_t line = 1;
            for (const auto& row : t.rows) {
                ++line;
                targets.push_back(parse_number(row[0], line));
            }
        } else if (flags.targets_n > 0) {
            targets = linspace(data_1d->mesh.a, data_1d->mesh.b, flags.targets_n);
        } else if (flags.targets.elements > 0 && flags.targets.degree > 0) {
            MeshFlags t = flags.targets;
            t.domain = format_value(data_1d->mesh.a) + "," + format_value(data_1d->mesh.b);
            targets = build_mesh(t, parse_domain(t.domain)).nodes;
        } else {
            throw std::invalid_argument(
                "interp needs targets: --targets-n, --targets-file, or a target mesh spec");
        }
        Interpolant1D it = Interpolant1D::build(*data_1d, cfg);
        const std::vector<double> vals = it.evaluate(targets);
        out.stream() << "x,value\n";
        for (std::size_t i = 0; i < targets.size(); ++i) {
            out.stream() << format_value(targets[i]) << "," << format_value(vals[i]) << "\n";
        }
        const double mn = *std::min_element(vals.begin(), vals.end());
        out.stream() << "# min=" << format_value(mn) << " avg_degree=" << format_value(it.avg_degree())
                     << "\n";
        return 0;
    }

    // 2D path
    if (flags.targets_n == 0) {
        throw std::invalid_argument("2d interp needs --targets-n (targets per axis)");
    }
    const auto tx = linspace(data_2d->mesh_x.a, data_2d->mesh_x.b, flags.targets_n);
    const auto ty = linspace(data_2d->mesh_y.a, data_2d->mesh_y.b, flags.targets_n);
    const Interp2DResult res = interpolate_2d(*data_2d, tx, ty, cfg, order);
    auto& os = out.stream();
    os << "";
    for (double y : ty) {
        os << "," << format_value(y);
    }
    os << "\n";
    for (std::size_t i = 0; i < tx.size(); ++i) {
        os << format_value(tx[i]);
        for (std::size_t j = 0; j < ty.size(); ++j) {
            os << "," << format_value(res.at(i, j));
        }
        os << "\n";
    }
    os << "# min=" << format_value(res.min_value) << " avg_degree=" << format_value(res.avg_degree)
       << "\n";
    return 0;
}

// --- convergence / compare ---------------------------------------------

struct ConvergenceFlags {
    std::string methods = "ppi";
    std::string function = "f6";
    std::string family = "uniform";
    std::string n_list = "17,33,65,129,257";
    std::string degree_list = "4";
    double floor = 0.0;
    std::string ratios_path;
    std::string out_path;
};

void write_report(std::ostream& os, const ErrorReport& report) {
    os << "n,method,degree,l2_error,avg_degree,min_value\n";
    for (const auto& r : report.rows) {
        os << r.n << "," << method_name(r.method) << "," << r.degree << ","
           << format_value(r.l2_error) << "," << format_value(r.avg_degree) << ","
           << format_value(r.min_value) << "\n";
    }
}

void write_ratios(std::ostream& os, const std::vector<RatioRow>& ratios) {
    os << "method,degree,n_coarse,n_fine,ratio\n";
    for (const auto& r : ratios) {
        os << method_name(r.method) << "," << r.degree << "," << r.n_coarse << "," << r.n_fine
           << "," << format_value(r.ratio) << "\n";
    }
}

int cmd_convergence(const ConvergenceFlags& flags) {
    const TestFunctionId fid = test_function_from_string(flags.function);
    const NodeFamily family = parse_family(flags.family);
    const auto ns = parse_size_list(flags.n_list, "--n-list");
    const auto degrees = parse_int_list(flags.degree_list, "--degree-list");
    const bool two_d = make_test_function(fid).two_d;

    ErrorReport combined;
    std::stringstream method_stream(flags.methods);
    std::string method;
    bool any = false;
    while (std::getline(method_stream, method, ',')) {
        if (method.empty()) continue;
        any = true;
        MethodConfig cfg;
        cfg.method = method_from_string(method);
        cfg.floor = flags.floor;
        const ErrorReport rep = two_d
                                    ? convergence_table_2d(cfg, fid, ns, degrees, family)
                                    : convergence_table(cfg, fid, ns, degrees, family);
        combined.rows.insert(combined.rows.end(), rep.rows.begin(), rep.rows.end());
    }
    if (!any) {
        throw std::invalid_argument("--methods must name at least one method");
    }

    Output out(flags.out_path);
    write_report(out.stream(), combined);
    if (!flags.ratios_path.empty()) {
        Output rout(flags.ratios_path);
        write_ratios(rout.stream(), error_ratios(combined));
    }
    return 0;
}

// --- remap --------------------------------------------------------------

struct RemapFlags {
    std::string method = "ppi";
    int cycles = 50;
    int degree = 8;
    std::string out_path;
};

int cmd_remap(const RemapFlags& flags) {
    RemapConfig cfg;
    cfg.method = remap_method_from_string(flags.method);
    cfg.ppi_degree = flags.degree;
    if (flags.cycles < 1) {
        throw std::invalid_argument("--cycles must be >= 1");
    }
    const GridFunction init = sample(default_dynamics_mesh(), default_tracer_profile);
    const RemapTrace trace = remap_cycle(init, default_physics_mesh(), cfg, flags.cycles);
    Output out(flags.out_path);
    out.stream() << "cycle,method,min,total,peak\n";
    for (const auto& row : trace.rows) {
        out.stream() << row.cycle << "," << remap_method_name(row.method) << ","
                     << format_value(row.min_value) << "," << format_value(row.total) << ","
                     << format_value(row.peak) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-to-grid interpolation toolkit"};
    app.require_subcommand(1);

    MeshFlags nodes_flags;
    std::string nodes_out;
    auto* nodes = app.add_subcommand("nodes", "emit mesh nodes as csv");
    nodes->add_option("--family", nodes_flags.family, "uniform or lgl");
    nodes->add_option("--n", nodes_flags.n, "total node count (uniform)");
    nodes->add_option("--elements", nodes_flags.elements, "element count");
    nodes->add_option("--degree", nodes_flags.degree, "nodes per element minus one");
    nodes->add_option("--domain", nodes_flags.domain, "a,b")->required();
    nodes->add_option("-o,--out", nodes_out, "output path (default stdout)");

    InterpFlags interp_flags;
    auto* itp = app.add_subcommand("interp", "interpolate a function or csv data set");
    itp->add_option("--method", interp_flags.method, "std|linear|pchip|spline|dbi|ppi");
    itp->add_option("--degree", interp_flags.degree, "target degree for dbi/ppi");
    itp->add_option("--floor", interp_flags.floor, "positivity floor (ppi)");
    itp->add_option("--function", interp_flags.function, "built-in function f1..f10");
    itp->add_option("--input", interp_flags.input, "input csv (x,value or 2d grid)");
    itp->add_option("--source-family", interp_flags.source.family, "uniform or lgl");
    itp->add_option("--source-n", interp_flags.source.n, "source node count (uniform)");
    itp->add_option("--source-elements", interp_flags.source.elements, "source element count");
    itp->add_option("--source-degree", interp_flags.source.degree, "source element degree");
    itp->add_option("--domain", interp_flags.source.domain, "a,b (defaults to the function's)");
    itp->add_option("--targets-n", interp_flags.targets_n, "equally spaced target count");
    itp->add_option("--targets-file", interp_flags.targets_file, "csv of target x values");
    itp->add_option("--targets-family", interp_flags.targets.family, "target mesh family");
    itp->add_option("--targets-elements", interp_flags.targets.elements, "target element count");
    itp->add_option("--targets-degree", interp_flags.targets.degree, "target element degree");
    itp->add_option("--extrapolation", interp_flags.extrapolation, "error or clamp");
    itp->add_option("--order", interp_flags.order, "2d axis order: xy or yx");
    itp->add_option("-o,--out", interp_flags.out_path, "output path (default stdout)");

    ConvergenceFlags conv_flags;
    auto* conv = app.add_subcommand("convergence", "error table over a resolution sweep");
    conv->add_option("--method", conv_flags.methods, "method to sweep");
    conv->add_option("--function", conv_flags.function, "built-in function f1..f10");
    conv->add_option("--family", conv_flags.family, "uniform or lgl");
    conv->add_option("--n-list", conv_flags.n_list, "comma-separated point counts");
    conv->add_option("--degree-list", conv_flags.degree_list, "comma-separated degrees");
    conv->add_option("--floor", conv_flags.floor, "positivity floor (ppi)");
    conv->add_option("--ratios", conv_flags.ratios_path, "also write consecutive error ratios");
    conv->add_option("-o,--out", conv_flags.out_path, "output path (default stdout)");

    ConvergenceFlags cmp_flags;
    auto* cmp = app.add_subcommand("compare", "error table for several methods side by side");
    cmp->add_option("--methods", cmp_flags.methods, "comma-separated methods")->required();
    cmp->add_option("--function", cmp_flags.function, "built-in function f1..f10");
    cmp->add_option("--family", cmp_flags.family, "uniform or lgl");
    cmp->add_option("--n-list", cmp_flags.n_list, "comma-separated point counts");
    cmp->add_option("--degree-list", cmp_flags.degree_list, "comma-separated degrees");
    cmp->add_option("--floor", cmp_flags.floor, "positivity floor (ppi)");
    cmp->add_option("--ratios", cmp_flags.ratios_path, "also write consecutive error ratios");
    cmp->add_option("-o,--out", cmp_flags.out_path, "output path (default stdout)");

    RemapFlags remap_flags;
    auto* rmp = app.add_subcommand("remap", "round-trip mapping diagnostic");
    rmp->add_option("--method", remap_flags.method, "std|clip|pchip|ppi|linear");
    rmp->add_option("--cycles", remap_flags.cycles, "number of round trips");
    rmp->add_option("--degree", remap_flags.degree, "target degree of the ppi maps");
    rmp->add_option("-o,--out", remap_flags.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (nodes->parsed()) return cmd_nodes(nodes_flags, nodes_out);
        if (itp->parsed()) return cmd_interp(interp_flags);
        if (conv->parsed()) return cmd_convergence(conv_flags);
        if (cmp->parsed()) return cmd_convergence(cmp_flags);
        if (rmp->parsed()) return cmd_remap(remap_flags);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
