#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"

#include "json.hpp"

namespace turan {

/// Result of one extremal run over connected pattern-free graphs of size m.
struct SearchReport {
    int m = 0;
    std::string pattern;                  // PatternId::to_string()
    std::vector<std::string> exclusions;  // canonical codes (graph6)
    long long enumerated = 0;             // isomorphism classes visited / states evaluated
    double max_rho = 0.0;
    std::vector<std::string> argmax;      // graph6, all within 1e-9 of max_rho
    long long runtime_ms = 0;
    bool heuristic = false;
    /// Maximum over this run and all cached runs with m' < m; covers
    /// disconnected graphs, whose spectral radius equals that of a component
    /// with fewer edges.
    double gmf_max_rho = 0.0;

    nlohmann::json to_json() const;
    static SearchReport from_json(const nlohmann::json& j);
};

inline constexpr int kEnumerationMaxEdges = 12;

/// Visits one representative per isomorphism class of connected pattern-free
/// graphs with exactly m edges and no isolated vertices, in canonical-code
/// order. Returns the class count. Generation is by edge/pendant augmentation
/// from K_2 with per-level canonical dedup; pattern-freeness is closed under
/// taking subgraphs, so pruning at an ancestor is exhaustive-safe.
long long enumerate_free(int m, const PatternId& pattern,
                         const std::function<void(const Graph&)>& visit, int threads = 0);

/// Single-threaded reference implementation of the same enumeration, kept
/// independent of the parallel path for testing.
long long enumerate_free_serial(int m, const PatternId& pattern,
                                const std::function<void(const Graph&)>& visit);

/// Exhaustive extremal search: maximum spectral radius and all argmax graphs
/// among the enumerated classes, minus the excluded ones.
SearchReport extremal_search(int m, const PatternId& pattern, const std::vector<Graph>& exclusions,
                             int threads = 0, const std::vector<SearchReport>& cached = {});

struct HillClimbOptions {
    int restarts = 50;
    std::uint64_t seed = 1;
    int threads = 0;
    int max_steps = 400;       // accepted moves per restart
    int patience = 400;        // consecutive rejected samples before stopping
    int max_vertices = 0;      // 0: default m+1
};

/// Stochastic edge-rewiring local search over connected pattern-free graphs
/// of size m. Deterministic for a fixed seed (per-restart RNG streams).
/// Restart 0 seeds from the relevant named families when they fit the
/// pattern; the rest start from random pattern-free spanning structures.
SearchReport hill_climb(int m, const PatternId& pattern, const std::vector<Graph>& exclusions,
                        const HillClimbOptions& opt);

/// True iff no single rewiring move from g (remove one edge, add one edge,
/// keep connectivity and pattern-freeness, stay off the exclusion list)
/// increases the spectral radius by more than 1e-12. Full move scan.
bool is_local_maximum(const Graph& g, const PatternId& pattern, const std::vector<Graph>& exclusions);

// JSONL cache.
void append_report(const std::string& path, const SearchReport& report);
std::vector<SearchReport> read_reports(const std::string& path);

}  // namespace turan
