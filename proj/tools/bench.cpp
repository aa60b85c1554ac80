// Compares the OpenMP kernels against their serial reference implementations
// and verifies that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "interp/adaptive.hpp"
#include "interp/tensor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace interp;

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, double max_diff) {
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx %12.3e\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_diff);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-28s %13s %13s %8s %12s\n", "kernel", "serial", "parallel", "speedup",
                "max |diff|");

    {
        const Mesh1D mesh = uniform_mesh(-0.2, 0.2, 20001);
        const GridFunction data =
            sample(mesh, [](double x) { return 1.0 / (1.0 + std::exp(-200.0 * x)); });
        InterpConfig cfg;
        cfg.method = AdaptiveMethod::PositivityPreserving;
        cfg.target_degree = 8;

        PiecewiseInterpolant serial_result, parallel_result;
        const double ts = time_ms([&] { serial_result = build_serial(data, cfg); }, 3);
        const double tp = time_ms([&] { parallel_result = build(data, cfg); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < serial_result.pieces.size(); ++i) {
            diff = std::max(diff, std::abs(static_cast<double>(
                                      serial_result.pieces[i].achieved_degree -
                                      parallel_result.pieces[i].achieved_degree)));
        }
        report("adaptive build d=8, n=20k", ts, tp, diff);

        std::vector<double> targets(1000001);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            targets[i] = -0.2 + 0.4 * static_cast<double>(i) / (targets.size() - 1);
        }
        std::vector<double> ev_serial, ev_parallel;
        const double es = time_ms(
            [&] {
                ev_serial.resize(targets.size());
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    ev_serial[i] = evaluate_at(serial_result, targets[i]);
                }
            },
            3);
        const double ep = time_ms([&] { ev_parallel = evaluate(parallel_result, targets); }, 3);
        double ediff = 0.0;
        for (std::size_t i = 0; i < targets.size(); ++i) {
            ediff = std::max(ediff, std::abs(ev_serial[i] - ev_parallel[i]));
        }
        report("evaluate 1e6 targets", es, ep, ediff);
    }

    {
        const Mesh1D mesh = uniform_mesh(-1.0, 1.0, 257);
        const GridFunction2D data = sample_2d(mesh, mesh, [](double x, double y) {
            return 1.0 / (1.0 + 25.0 * (x * x + y * y));
        });
        MethodConfig cfg;
        cfg.method = Method::Ppi;
        cfg.degree = 4;
        std::vector<double> t(501);
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = -1.0 + 2.0 * static_cast<double>(i) / (t.size() - 1);
        }
        Interp2DResult rs, rp;
        const double ts = time_ms([&] { rs = interpolate_2d_serial(data, t, t, cfg); }, 3);
        const double tp = time_ms([&] { rp = interpolate_2d(data, t, t, cfg); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < rs.values.size(); ++i) {
            diff = std::max(diff, std::abs(rs.values[i] - rp.values[i]));
        }
        report("2d tensor ppi 257^2->501^2", ts, tp, diff);
    }

    return 0;
}
