// Benchmark of the OpenMP kernels against their serial references.  The
// parallel versions use fixed chunking, so their results are bit-identical
// for any thread count; the table reports times, speedup, and the largest
// observed deviation from the serial pass.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "ballframes/bergman_core.hpp"
#include "ballframes/sampling.hpp"

using namespace ballframes;

namespace {

template <typename F>
double time_of(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, double maxdiff) {
    std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   %.3e\n", name, 1e3 * serial,
                1e3 * parallel, serial / parallel, maxdiff);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %13s %13s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
                "max |diff|");

    { // diagonal monomial moments on a mid-size 2-ball rule
        const QuadratureRule q = rule_for_degree(2, 1.0, 12);
        Eigen::VectorXd ser, par;
        const double ts = time_of([&] { ser = moments_diag_serial(q, 12); });
        const double tp = time_of([&] { par = moments_diag(q, 12); });
        row("moments_diag (2-ball)", ts, tp, (ser - par).cwiseAbs().maxCoeff());
    }

    { // generic integration of a kernel-section integrand
        const QuadratureRule q = rule_for_degree(2, 1.0, 16);
        CVector w(2);
        w[0] = Complex(0.4, 0.2);
        w[1] = Complex(-0.3, 0.1);
        const BallPoint bw(w);
        auto f = [&](std::size_t i) {
            return kernel_eval(BallPoint::clamped(q.point(i)), bw, 1.0);
        };
        Complex ser, par;
        const double ts = time_of([&] { ser = integrate_nodes_serial(q, f); });
        const double tp = time_of([&] { par = integrate_nodes(q, f); });
        row("integrate kernel section", ts, tp, std::abs(ser - par));
    }

    { // Gram assembly for a kernel-atom family
        const PointFamily fam = generate_lattice(0.08, 1.4, 1);
        const double sigma = 3.0, alpha = 1.0;
        const auto m = static_cast<Eigen::Index>(fam.size());
        Eigen::MatrixXcd gs(m, m), gp(m, m);
        const double ts = time_of([&] {
            for (Eigen::Index i = 0; i < m; ++i)
                for (Eigen::Index j = 0; j <= i; ++j) {
                    const auto &ei = fam.entry(static_cast<std::size_t>(i)),
                               &ej = fam.entry(static_cast<std::size_t>(j));
                    gs(i, j) = std::pow(ei.one_minus_w2, sigma / 2.0) *
                               std::pow(ej.one_minus_w2, sigma / 2.0) *
                               kernel_eval(ei.w, ej.w, alpha);
                }
        });
        const long long mll = static_cast<long long>(m);
        const double tp = time_of([&] {
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < mll; ++i)
                for (long long j = 0; j <= i; ++j) {
                    const auto &ei = fam.entry(static_cast<std::size_t>(i)),
                               &ej = fam.entry(static_cast<std::size_t>(j));
                    gp(i, j) = std::pow(ei.one_minus_w2, sigma / 2.0) *
                               std::pow(ej.one_minus_w2, sigma / 2.0) *
                               kernel_eval(ei.w, ej.w, alpha);
                }
        });
        double diff = 0.0;
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j <= i; ++j)
                diff = std::max(diff, std::abs(gs(i, j) - gp(i, j)));
        row("Gram assembly (961 atoms)", ts, tp, diff);
    }

    return 0;
}
