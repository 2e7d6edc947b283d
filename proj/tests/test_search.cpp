#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <set>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

using namespace turan;

TEST_CASE("unrestricted enumeration matches the labeled-graph oracle") {
    for (int m = 1; m <= 6; ++m) {
        const auto oracle_classes = oracle::connected_classes_bruteforce(m);
        long long count = enumerate_free_serial(m, PatternId::none(), [](const Graph&) {});
        CHECK(count == static_cast<long long>(oracle_classes.size()));
    }
    // frozen milestone: three trees, C_4 and the paw at m = 4
    CHECK(enumerate_free_serial(4, PatternId::none(), [](const Graph&) {}) == 5);
}

TEST_CASE("pattern-restricted enumeration matches the filtered oracle") {
    for (int m = 4; m <= 6; ++m) {
        long long want_theta = 0, want_k22 = 0;
        for (const Graph& g : oracle::connected_classes_bruteforce(m)) {
            if (!contains_subgraph(g, theta(1, 2, 3))) ++want_theta;
            if (!contains_subgraph(g, complete_bipartite(2, 3))) ++want_k22;
        }
        CHECK(enumerate_free_serial(m, PatternId::theta123(), [](const Graph&) {}) == want_theta);
        CHECK(enumerate_free_serial(m, PatternId::k2r1(2), [](const Graph&) {}) == want_k22);
    }
    // the theta graph itself is never visited under the theta pattern
    std::set<std::string> codes;
    enumerate_free_serial(6, PatternId::theta123(),
                          [&](const Graph& g) { codes.insert(canonical_form(g).bytes); });
    CHECK(codes.count(canonical_form(theta(1, 2, 3)).bytes) == 0);
}

TEST_CASE("enumeration postconditions and no duplicate codes") {
    for (int m : {5, 7}) {
        std::set<std::string> seen;
        long long count = enumerate_free_serial(m, PatternId::theta123(), [&](const Graph& g) {
            CHECK(is_connected(g));
            CHECK(g.edge_count() == m);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) > 0);
            CHECK(seen.insert(canonical_form(g).bytes).second);
        });
        CHECK(count == static_cast<long long>(seen.size()));
    }
    CHECK_THROWS_AS(enumerate_free_serial(0, PatternId::none(), [](const Graph&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_free_serial(13, PatternId::none(), [](const Graph&) {}),
                    std::invalid_argument);
}

TEST_CASE("parallel enumeration equals the serial reference") {
    for (int m : {5, 6, 7, 8}) {
        for (const PatternId& p :
             {PatternId::none(), PatternId::theta123(), PatternId::k2r1(2)}) {
            if (m == 8 && p.kind == PatternId::Kind::None) continue;  // keep the test quick
            std::vector<std::string> serial, parallel;
            enumerate_free_serial(m, p, [&](const Graph& g) { serial.push_back(to_graph6(g)); });
            enumerate_free(m, p, [&](const Graph& g) { parallel.push_back(to_graph6(g)); }, 2);
            CHECK(serial == parallel);
        }
    }
}

TEST_CASE("extremal search reproduces the odd-size extremal graph at m = 9") {
    SearchReport r = extremal_search(9, PatternId::theta123(), {});
    const double bound = (1.0 + std::sqrt(33.0)) / 2.0;
    CHECK(std::abs(r.max_rho - bound) < 1e-9);
    REQUIRE(r.argmax.size() == 1);
    CHECK(r.argmax[0] == canonical_form(split_star(6, 2)).bytes);
    CHECK(r.enumerated > 0);
    CHECK(r.gmf_max_rho == r.max_rho);
}

TEST_CASE("extremal search stays strictly below the even-size bound at m = 8") {
    SearchReport r = extremal_search(8, PatternId::theta123(), {});
    const double bound = (1.0 + std::sqrt(29.0)) / 2.0;
    CHECK(r.max_rho < bound - 1e-9);
}

TEST_CASE("exclusions remove the named extremal graph") {
    SearchReport r = extremal_search(9, PatternId::theta123(), {split_star(6, 2)});
    CHECK(r.exclusions.size() == 1);
    const double bound = (1.0 + std::sqrt(33.0)) / 2.0;
    CHECK(r.max_rho < bound - 1e-9);
    for (const auto& code : r.argmax) CHECK(code != canonical_form(split_star(6, 2)).bytes);

    // exploratory K_{2,3}-free run below the theorem threshold
    SearchReport k = extremal_search(9, PatternId::k2r1(2), {star(9)});
    CHECK(k.enumerated > 0);
    CHECK(!k.argmax.empty());
    for (const auto& code : k.argmax) CHECK(code != canonical_form(star(9)).bytes);
}

TEST_CASE("cached smaller-size reports cover the disconnected case") {
    std::vector<SearchReport> cache;
    cache.push_back(extremal_search(7, PatternId::theta123(), {}));
    cache.push_back(extremal_search(8, PatternId::theta123(), {}, 0, cache));
    SearchReport r = extremal_search(9, PatternId::theta123(), {}, 0, cache);
    CHECK(r.gmf_max_rho == r.max_rho);  // connected max dominates smaller sizes
    CHECK(r.gmf_max_rho >= cache[1].max_rho);
}

TEST_CASE("hill climb is deterministic for a fixed seed") {
    HillClimbOptions opt;
    opt.restarts = 6;
    opt.seed = 42;
    opt.max_steps = 60;
    opt.patience = 80;
    SearchReport a = hill_climb(12, PatternId::theta123(), {}, opt);
    SearchReport b = hill_climb(12, PatternId::theta123(), {}, opt);
    CHECK(a.max_rho == b.max_rho);
    CHECK(a.argmax == b.argmax);
    CHECK(a.heuristic);
    CHECK(b.enumerated == a.enumerated);

    opt.seed = 43;
    SearchReport c = hill_climb(12, PatternId::theta123(), {}, opt);
    CHECK(c.heuristic);  // different stream still yields a valid report
}

TEST_CASE("hill climb finds the family optimum at m = 22") {
    HillClimbOptions opt;
    opt.restarts = 8;
    opt.seed = 7;
    opt.max_steps = 80;
    opt.patience = 120;
    SearchReport r = hill_climb(22, PatternId::theta123(), {}, opt);
    const double target = spectral_radius(family_f(22, 1)).rho;
    CHECK(r.max_rho >= target - 1e-9);  // the family seed is in the restart schedule
    CHECK(r.max_rho <= target + 1e-9);  // and nothing above it exists
}

TEST_CASE("split star is a local maximum of the move set at m = 9") {
    CHECK(is_local_maximum(split_star(6, 2), PatternId::theta123(), {}));
    // a path is not: closing it into a cycle improves rho
    Graph p9 = Graph::from_edge_list(
        9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
    CHECK_FALSE(is_local_maximum(p9, PatternId::theta123(), {}));
}

TEST_CASE("jsonl cache round trip and rerun reproducibility") {
    const std::string path = "test_cache_tmp.jsonl";
    std::remove(path.c_str());
    SearchReport a = extremal_search(7, PatternId::theta123(), {});
    append_report(path, a);
    SearchReport b = extremal_search(7, PatternId::theta123(), {});
    append_report(path, b);
    auto reports = read_reports(path);
    REQUIRE(reports.size() == 2);
    CHECK(std::abs(reports[0].max_rho - reports[1].max_rho) < 1e-12);
    CHECK(reports[0].argmax == reports[1].argmax);
    CHECK(reports[0].m == 7);
    CHECK(reports[0].pattern == "theta123");
    std::remove(path.c_str());
    CHECK(read_reports(path).empty());
}
