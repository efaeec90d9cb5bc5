// Benchmark: OpenMP ideal-closure sweep versus the serial reference.
// Prints timings and verifies both kernels produce the same row space.

#include <chrono>
#include <cstdio>
#include <string>

#include "graycat/algebra.hpp"
#include "graycat/fixture.hpp"

using namespace graycat;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_fixture(const std::string& path, const Field& f) {
    FixtureSpec spec = parse_fixture(path);
    auto g = std::make_shared<GrayGroupoid>(theta(to_module(spec)));
    IdealGenerators gens = ideal_generators(*g, f);
    GroupAlgebra a3 = group_algebra(*g->C3, f);
    GroupAlgebra a2 = group_algebra(*g->C2, f);

    std::printf("%-16s dim K(C3)=%d  dim K(C2)=%d  generators: %zu + %zu\n",
                spec.name.c_str(), a3.dim(), a2.dim(), gens.j2.size(),
                gens.j1.size());

    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = Clock::now();
        Subspace par3 = ideal_closure(a3, gens.j2, /*parallel=*/true);
        Subspace par2 = ideal_closure(a2, gens.j1, /*parallel=*/true);
        double tp = ms_since(t0);

        t0 = Clock::now();
        Subspace ser3 = ideal_closure(a3, gens.j2, /*parallel=*/false);
        Subspace ser2 = ideal_closure(a2, gens.j1, /*parallel=*/false);
        double ts = ms_since(t0);

        bool agree = par3.rows() == ser3.rows() && par2.rows() == ser2.rows();
        std::printf("  run %d: parallel %8.2f ms   serial %8.2f ms   "
                    "speedup %.2fx   rank(J2)=%d rank(J1)=%d   agree: %s\n",
                    rep, tp, ts, ts / tp, par3.rank(), par2.rank(),
                    agree ? "yes" : "NO");
        if (!agree) std::exit(1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : FIXTURE_DIR;
    Field f{0};
    for (const char* name : {"s3-z3", "s3-comm", "z3-z3-z2-inv"})
        bench_fixture(dir + "/" + name + ".g2x", f);
    return 0;
}
