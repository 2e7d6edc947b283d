// Benchmark comparing the serial reference enumeration with the OpenMP
// parallel path, plus batch spectral-radius throughput. Results of both
// paths are cross-checked before timings are reported.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct EnumResult {
    long long count = 0;
    std::vector<std::string> codes;
};

EnumResult run_serial(int m, const PatternId& p) {
    EnumResult r;
    r.count = enumerate_free_serial(m, p, [&](const Graph& g) { r.codes.push_back(to_graph6(g)); });
    return r;
}

EnumResult run_parallel(int m, const PatternId& p, int threads) {
    EnumResult r;
    r.count = enumerate_free(m, p, [&](const Graph& g) { r.codes.push_back(to_graph6(g)); }, threads);
    return r;
}

void bench_enumeration(int m, const PatternId& p, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    EnumResult serial = run_serial(m, p);
    const double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    EnumResult parallel = run_parallel(m, p, threads);
    const double parallel_ms = ms_since(t0);

    const bool equal = serial.codes == parallel.codes;
    std::printf("enumerate m=%-2d pattern=%-9s classes=%-6lld serial=%9.1fms parallel=%9.1fms speedup=%.2fx %s\n",
                m, p.to_string().c_str(), serial.count, serial_ms, parallel_ms,
                serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9), equal ? "results-equal" : "MISMATCH");
}

void bench_batch_rho(int count, int threads) {
    std::vector<Graph> graphs;
    for (int i = 0; i < count; ++i) {
        const int m = 18 + (i % 40);
        switch (i % 4) {
            case 0: graphs.push_back(star_matching(m, 1)); break;
            case 1: graphs.push_back(double_star(m - 2, 1)); break;
            case 2: graphs.push_back(h_figure1(m)); break;
            default: graphs.push_back(family_f(m % 2 == 0 ? m : m + 1, 1)); break;
        }
    }
    std::vector<double> serial_rho(graphs.size()), parallel_rho(graphs.size());

    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < graphs.size(); ++i) serial_rho[i] = spectral_radius(graphs[i]).rho;
    const double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const long long total = static_cast<long long>(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (long long i = 0; i < total; ++i)
        parallel_rho[static_cast<std::size_t>(i)] = spectral_radius(graphs[static_cast<std::size_t>(i)]).rho;
    const double parallel_ms = ms_since(t0);

    bool equal = true;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (serial_rho[i] != parallel_rho[i]) equal = false;
    std::printf("batch-rho n=%-5d                        serial=%9.1fms parallel=%9.1fms speedup=%.2fx %s\n",
                count, serial_ms, parallel_ms, serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9),
                equal ? "results-equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[i + 1]);
    }
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", threads > 0 ? threads : omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel paths run serially\n");
#endif
    if (quick) {
        bench_enumeration(7, PatternId::none(), threads);
        bench_enumeration(8, PatternId::theta123(), threads);
        bench_batch_rho(200, threads);
        return 0;
    }
    bench_enumeration(9, PatternId::none(), threads);
    bench_enumeration(10, PatternId::theta123(), threads);
    bench_enumeration(11, PatternId::theta123(), threads);
    bench_enumeration(10, PatternId::k2r1(2), threads);
    bench_batch_rho(2000, threads);
    return 0;
}
