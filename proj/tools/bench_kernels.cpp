// Compares the serial reference kernels against the OpenMP ones on
// representative exact-arithmetic workloads: the Jacobi sweep over a
// truncated map algebra and dense row reduction.

#include "weylem/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace weylem;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1);
}

} // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    if (threads > 0) linalg::set_threads(threads);

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    {
        Scenario sc = load_scenario("S4");
        ring::WeightFunction psi;
        lie::Weight w(sc.rank, 0);
        w[1] = 1;
        psi.insert_add(sc.default_point(), w);
        psi = psi.equivariant_completion(*sc.A, *sc.fd);
        auto E = ema::build_truncated_ema(*sc.L, *sc.fd, *sc.A, psi, 3);
        bool ok_serial = false, ok_parallel = false;
        double ts = timed([&] { ok_serial = E.verify_jacobi(linalg::Mode::Serial); });
        double tp = timed([&] { ok_parallel = E.verify_jacobi(linalg::Mode::Parallel); });
        if (ok_serial != ok_parallel) {
            std::fprintf(stderr, "serial and parallel Jacobi disagree\n");
            return 1;
        }
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "jacobi sweep (S4 EMA, N=3)", ts, tp, ts / tp);
    }

    {
        // dense exact row reduction; small integer entries, so the usual
        // coefficient growth of rational elimination stays in scope
        int n = 120;
        linalg::Matrix a(n, n), b(n, n);
        std::mt19937_64 rng(7);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = Scalar(long(rng() % 5) - 2);
                b.at(i, j) = a.at(i, j);
            }
        std::vector<int> ps, pp;
        double ts = timed([&] { ps = linalg::row_reduce(a, linalg::Mode::Serial); });
        double tp = timed([&] { pp = linalg::row_reduce(b, linalg::Mode::Parallel); });
        if (ps != pp || !(a == b)) {
            std::fprintf(stderr, "serial and parallel row reduction disagree\n");
            return 1;
        }
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "row reduction (120x120 exact)", ts, tp,
                    ts / tp);
    }

    {
        Scenario sc = load_scenario("S2");
        ring::WeightFunction psi;
        lie::Weight w(sc.rank, 0);
        w[0] = 1;
        psi.insert_add(sc.default_point(), w);
        auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi);
        bool ok_serial = false, ok_parallel = false;
        double ts = timed([&] { ok_serial = W.verify_representation(linalg::Mode::Serial); });
        double tp = timed([&] { ok_parallel = W.verify_representation(linalg::Mode::Parallel); });
        if (ok_serial != ok_parallel) {
            std::fprintf(stderr, "serial and parallel representation checks disagree\n");
            return 1;
        }
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", "representation check (S2 module)", ts, tp,
                    ts / tp);
    }

    return 0;
}
