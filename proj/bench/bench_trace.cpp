// Serial vs OpenMP trace kernels on Whitehead entries; prints a small table.
#include <chrono>
#include <cstdio>

#include <omp.h>

#include "tdl/modular.hpp"

int main() {
    using namespace tdl;
    using clock = std::chrono::steady_clock;
    const TwistedDouble theory({{11, 5, 4}, 1});
    const BraidWord word = whitehead_braid();
    const auto cs = closure_structure(word);

    std::vector<ColoredBraid> jobs;
    for (int a = 0; a < theory.size(); ++a)
        for (int b = 0; b < theory.size(); ++b) {
            std::vector<int> colors(word.strands);
            for (int s = 0; s < word.strands; ++s) colors[s] = cs.component_of[s] == cs.component_of[0] ? a : b;
            jobs.push_back({word, colors});
        }

    auto run = [&](Kernel k) {
        const auto t0 = clock::now();
        std::int64_t checksum = 0;
        for (const auto& job : jobs) {
            const auto h = trace_histogram(theory, job, k);
            for (std::size_t e = 0; e < h.size(); ++e) checksum += h[e] * static_cast<std::int64_t>(e + 1);
        }
        return std::pair{std::chrono::duration<double>(clock::now() - t0).count(), checksum};
    };

    const auto [serial_s, serial_sum] = run(Kernel::Serial);
    const auto [par_s, par_sum] = run(Kernel::Parallel);
    std::printf("colored Whitehead traces: %zu, threads: %d\n", jobs.size(), omp_get_max_threads());
    std::printf("%-10s %10s\n", "kernel", "seconds");
    std::printf("%-10s %10.3f\n", "serial", serial_s);
    std::printf("%-10s %10.3f\n", "parallel", par_s);
    std::printf("speedup %.2fx, histograms %s\n", serial_s / par_s, serial_sum == par_sum ? "agree" : "DIFFER");
    return serial_sum == par_sum ? 0 : 1;
}
