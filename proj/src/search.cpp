#include "turan/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/spectral.hpp"

namespace turan {

nlohmann::json SearchReport::to_json() const {
    return {{"m", m},
            {"pattern", pattern},
            {"exclusions", exclusions},
            {"enumerated", enumerated},
            {"max_rho", max_rho},
            {"argmax", argmax},
            {"runtime_ms", runtime_ms},
            {"heuristic", heuristic},
            {"gmf_max_rho", gmf_max_rho}};
}

SearchReport SearchReport::from_json(const nlohmann::json& j) {
    SearchReport r;
    r.m = j.at("m").get<int>();
    r.pattern = j.at("pattern").get<std::string>();
    r.exclusions = j.value("exclusions", std::vector<std::string>{});
    r.enumerated = j.at("enumerated").get<long long>();
    r.max_rho = j.at("max_rho").get<double>();
    r.argmax = j.value("argmax", std::vector<std::string>{});
    r.runtime_ms = j.value("runtime_ms", 0LL);
    r.heuristic = j.value("heuristic", false);
    r.gmf_max_rho = j.value("gmf_max_rho", r.max_rho);
    return r;
}

namespace {

// All one-edge augmentations of a connected graph that stay pattern-free:
// a new edge between existing vertices or a fresh pendant vertex. Every
// connected pattern-free graph with one more edge arises this way (delete a
// cycle edge, or a leaf edge of a tree).
template <class F>
void expand(const Graph& g, const PatternId& pattern, int max_n, F&& emit) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (!incremental_free_check(g, {u, v}, pattern)) continue;
            emit(g.with_edge(u, v));
        }
    if (n + 1 <= max_n) {
        // a pendant endpoint has degree 1, so it cannot complete K_{2,r+1}
        // or a theta; a generic pattern may have degree-1 vertices, though
        bool pendant_safe = pattern.kind != PatternId::Kind::Generic;
        for (int u = 0; u < n; ++u) {
            Graph child = g.with_pendant(u);
            if (!pendant_safe && contains_pattern(child, pattern)) continue;
            emit(std::move(child));
        }
    }
}

Graph seed_k2() { return Graph::from_edge_list(2, {{0, 1}}); }

void check_envelope(int m) {
    if (m < 1 || m > kEnumerationMaxEdges)
        throw std::invalid_argument("enumeration envelope is 1 <= m <= " +
                                    std::to_string(kEnumerationMaxEdges));
}

}  // namespace

long long enumerate_free_serial(int m, const PatternId& pattern,
                                const std::function<void(const Graph&)>& visit) {
    check_envelope(m);
    if (contains_pattern(seed_k2(), pattern)) return 0;
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(seed_k2()).bytes, seed_k2());
    for (int edges = 1; edges < m; ++edges) {
        std::map<std::string, Graph> next;
        for (const auto& [code, g] : level)
            expand(g, pattern, m + 1, [&](Graph child) {
                std::string ccode = canonical_form(child).bytes;
                auto it = next.lower_bound(ccode);
                if (it == next.end() || it->first != ccode) next.emplace_hint(it, std::move(ccode), std::move(child));
            });
        level = std::move(next);
    }
    // emit canonically labeled representatives, in code order
    for (const auto& [code, g] : level) visit(from_graph6(code));
    return static_cast<long long>(level.size());
}

long long enumerate_free(int m, const PatternId& pattern,
                         const std::function<void(const Graph&)>& visit, int threads) {
    check_envelope(m);
    if (contains_pattern(seed_k2(), pattern)) return 0;
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)threads;
#endif
    std::vector<std::pair<std::string, Graph>> level{{canonical_form(seed_k2()).bytes, seed_k2()}};
    for (int edges = 1; edges < m; ++edges) {
        std::vector<std::map<std::string, Graph>> shards(static_cast<std::size_t>(nthreads));
        const long long count = static_cast<long long>(level.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#endif
        for (long long i = 0; i < count; ++i) {
#ifdef _OPENMP
            auto& shard = shards[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& shard = shards[0];
#endif
            expand(level[static_cast<std::size_t>(i)].second, pattern, m + 1, [&](Graph child) {
                std::string ccode = canonical_form(child).bytes;
                auto it = shard.lower_bound(ccode);
                if (it == shard.end() || it->first != ccode)
                    shard.emplace_hint(it, std::move(ccode), std::move(child));
            });
        }
        // merge shards; the union is independent of thread scheduling
        std::map<std::string, Graph> merged;
        for (auto& shard : shards)
            for (auto& [code, g] : shard) merged.try_emplace(code, std::move(g));
        level.assign(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
    }
    for (const auto& [code, g] : level) visit(from_graph6(code));
    return static_cast<long long>(level.size());
}

SearchReport extremal_search(int m, const PatternId& pattern, const std::vector<Graph>& exclusions,
                             int threads, const std::vector<SearchReport>& cached) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.m = m;
    report.pattern = pattern.to_string();
    for (const Graph& x : exclusions) report.exclusions.push_back(canonical_form(x).bytes);

    std::vector<Graph> hits;
    std::vector<std::string> codes;
    report.enumerated = enumerate_free(
        m, pattern,
        [&](const Graph& g) {
            hits.push_back(g);
            codes.push_back(to_graph6(g));  // representatives carry canonical labels
        },
        threads);

    const long long count = static_cast<long long>(hits.size());
    std::vector<double> rho(hits.size(), -1.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        bool excluded = false;
        for (const std::string& x : report.exclusions)
            if (codes[idx] == x) {
                excluded = true;
                break;
            }
        if (!excluded) rho[idx] = spectral_radius(hits[idx]).rho;
    }
    double best = -1.0;
    for (double r : rho) best = std::max(best, r);
    if (best >= 0.0) {
        report.max_rho = best;
        for (std::size_t i = 0; i < hits.size(); ++i)
            if (rho[i] >= best - 1e-9) report.argmax.push_back(codes[i]);
        std::sort(report.argmax.begin(), report.argmax.end());
    }
    report.gmf_max_rho = report.max_rho;
    for (const SearchReport& c : cached)
        if (c.m < m && c.pattern == report.pattern && !c.heuristic && c.exclusions.empty())
            report.gmf_max_rho = std::max(report.gmf_max_rho, c.max_rho);
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

namespace {

// deterministic splitmix64 stream, keyed by (seed, restart)
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

bool excluded_graph(const Graph& g, const std::vector<Graph>& exclusions) {
    for (const Graph& x : exclusions)
        if (is_isomorphic(g, x)) return true;
    return false;
}

// Random connected pattern-free graph with m edges: random tree, then random
// chords while freeness allows, pendants otherwise.
Graph random_free_start(int m, const PatternId& pattern, SplitMix& rng, int max_n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int hi = std::min(max_n, m + 1);
        const int n = 2 + rng.below(std::max(1, hi - 1));
        GraphBuilder b(std::min(n, hi));
        for (int v = 1; v < std::min(n, hi); ++v) b.add_edge(rng.below(v), v);
        Graph g = std::move(b).build();
        if (contains_pattern(g, pattern)) continue;  // possible for generic patterns only
        bool stuck = false;
        while (g.edge_count() < m && !stuck) {
            bool grown = false;
            for (int tries = 0; tries < 8 && !grown; ++tries) {
                int u = rng.below(g.vertex_count());
                int v = rng.below(g.vertex_count());
                if (u == v || g.has_edge(u, v)) continue;
                if (!incremental_free_check(g, {u, v}, pattern)) continue;
                g = g.with_edge(u, v);
                grown = true;
            }
            if (!grown) {
                Graph child = g.with_pendant(rng.below(g.vertex_count()));
                if (pattern.kind == PatternId::Kind::Generic && contains_pattern(child, pattern))
                    stuck = true;
                else
                    g = std::move(child);
            }
        }
        if (!stuck) return g;
    }
    throw std::runtime_error("hill_climb: could not build a pattern-free start graph");
}

struct ClimbState {
    Graph g;
    double rho = -1.0;
};

// First-improvement climb under the rewiring move set.
ClimbState climb(Graph start, const PatternId& pattern, const std::vector<Graph>& exclusions,
                 const HillClimbOptions& opt, SplitMix& rng, long long& evaluated) {
    ClimbState cur{start, spectral_radius(start).rho};
    ++evaluated;
    for (int step = 0; step < opt.max_steps; ++step) {
        bool improved = false;
        const auto edges = edge_list(cur.g);
        for (int probe = 0; probe < opt.patience && !improved; ++probe) {
            const auto& [ru, rv] = edges[rng.below(static_cast<int>(edges.size()))];
            int au = rng.below(cur.g.vertex_count());
            int av = rng.below(cur.g.vertex_count());
            if (au > av) std::swap(au, av);
            if (au == av || cur.g.has_edge(au, av)) continue;
            if (au == ru && av == rv) continue;
            Graph removed = cur.g.without_edge(ru, rv);
            if (!incremental_free_check(removed, {au, av}, pattern)) continue;
            Graph cand = removed.with_edge(au, av).drop_isolated();
            if (!is_connected(cand)) continue;
            if (excluded_graph(cand, exclusions)) continue;
            double r = spectral_radius(cand).rho;
            ++evaluated;
            if (r > cur.rho + 1e-12) {
                cur = {std::move(cand), r};
                improved = true;
            }
        }
        if (!improved) break;
    }
    return cur;
}

}  // namespace

SearchReport hill_climb(int m, const PatternId& pattern, const std::vector<Graph>& exclusions,
                        const HillClimbOptions& opt) {
    if (m < 1 || m > 500) throw std::invalid_argument("hill_climb: need 1 <= m <= 500");
    const auto t0 = std::chrono::steady_clock::now();
    const int max_n = opt.max_vertices > 0 ? opt.max_vertices : m + 1;

    // family seeds that live in the search space; the relevant extremal
    // candidates should be fixed points of the move set
    std::vector<Graph> seeds;
    auto try_seed = [&](Graph g) {
        if (g.edge_count() == m && !contains_pattern(g, pattern) && !excluded_graph(g, exclusions))
            seeds.push_back(std::move(g));
    };
    if (m >= 4 && m % 2 == 0) try_seed(family_f(m, 1));
    if (m >= 6 && m % 2 == 1) try_seed(family_f(m, 2));
    if (m >= 3 && m % 2 == 1) try_seed(split_star((m + 3) / 2, 2));
    if (m >= 3) try_seed(star_matching(m, 1));
    try_seed(star(m));

    const int restarts = std::max(opt.restarts, static_cast<int>(seeds.size()));
    std::vector<ClimbState> results(static_cast<std::size_t>(restarts));
    std::vector<long long> evals(static_cast<std::size_t>(restarts), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
#endif
    for (int rs = 0; rs < restarts; ++rs) {
        SplitMix rng(opt.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(rs) * 0x100000001b3ULL + 1);
        Graph start;
        if (rs < static_cast<int>(seeds.size()))
            start = seeds[static_cast<std::size_t>(rs)];
        else
            start = random_free_start(m, pattern, rng, max_n);
        results[static_cast<std::size_t>(rs)] =
            climb(std::move(start), pattern, exclusions, opt, rng, evals[static_cast<std::size_t>(rs)]);
    }

    SearchReport report;
    report.m = m;
    report.pattern = pattern.to_string();
    for (const Graph& x : exclusions)
        report.exclusions.push_back(x.vertex_count() <= 64 ? canonical_form(x).bytes : to_graph6(x));
    report.heuristic = true;
    double best = -1.0;
    for (const auto& r : results) best = std::max(best, r.rho);
    report.max_rho = best;
    std::vector<std::string> arg;
    for (const auto& r : results)
        if (r.rho >= best - 1e-9)
            arg.push_back(r.g.vertex_count() <= 64 ? canonical_form(r.g).bytes : to_graph6(r.g));
    std::sort(arg.begin(), arg.end());
    arg.erase(std::unique(arg.begin(), arg.end()), arg.end());
    report.argmax = std::move(arg);
    for (long long e : evals) report.enumerated += e;
    report.gmf_max_rho = report.max_rho;
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

bool is_local_maximum(const Graph& g, const PatternId& pattern, const std::vector<Graph>& exclusions) {
    const double rho0 = spectral_radius(g).rho;
    const auto edges = edge_list(g);
    const int n = g.vertex_count();
    for (const auto& [ru, rv] : edges) {
        Graph removed = g.without_edge(ru, rv);
        for (int au = 0; au < n; ++au)
            for (int av = au + 1; av < n; ++av) {
                if (removed.has_edge(au, av)) continue;
                if (au == ru && av == rv) continue;
                if (!incremental_free_check(removed, {au, av}, pattern)) continue;
                Graph cand = removed.with_edge(au, av).drop_isolated();
                if (!is_connected(cand)) continue;
                if (excluded_graph(cand, exclusions)) continue;
                if (spectral_radius(cand).rho > rho0 + 1e-12) return false;
            }
    }
    return true;
}

void append_report(const std::string& path, const SearchReport& report) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file: " + path);
    out << report.to_json().dump() << "\n";
}

std::vector<SearchReport> read_reports(const std::string& path) {
    std::ifstream in(path);
    std::vector<SearchReport> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(SearchReport::from_json(nlohmann::json::parse(line)));
    }
    return out;
}

}  // namespace turan
