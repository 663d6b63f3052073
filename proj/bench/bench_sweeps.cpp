// Wall-time comparison of the serial reference kernels against the OpenMP
// ones, plus the geodesic walk against the BFS oracle. Not part of ctest.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fsurg/parallel.hpp"
#include "fsurg/sweeps.hpp"

using namespace fsurg;

namespace {

double time_of(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void row(const std::string& name, const std::function<void(ExecMode)>& sweep) {
    double serial = time_of([&] { sweep(ExecMode::serial); });
    double parallel = time_of([&] { sweep(ExecMode::parallel); });
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n",
                name.c_str(), serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", effective_thread_count());

    row("oracle-agreement r=12", [](ExecMode m) { oracle_agreement_sweep(12, m); });
    row("random-pairs 10k", [](ExecMode m) { random_pair_sweep(10000, 10, 1, m); });
    row("flip-paths 10k", [](ExecMode m) { flip_path_sweep(10000, 10, 1, m); });
    row("slope-identities S<=12", [](ExecMode m) { slope_identity_sweep(12, m); });
    row("cf-properties 100k", [](ExecMode m) { cf_property_sweep(100000, 1000000, 1, m); });

    // one-off micro comparison: the walk vs the oracle on a radius-10 ball
    FareyTriangle base = base_triangle(0);
    auto ball = triangles_within(base, 10);
    double walk = time_of([&] {
        for (const auto& [t, d] : ball)
            (void)geodesic_distance(base, t);
    });
    double oracle = time_of([&] {
        for (std::size_t i = 0; i < ball.size(); i += 64)
            (void)bfs_distance(base, ball[i].first, 10);
    });
    std::printf("geodesic walk over %zu triangles: %.3fs; BFS oracle on every "
                "64th: %.3fs\n",
                ball.size(), walk, oracle);
    return 0;
}
