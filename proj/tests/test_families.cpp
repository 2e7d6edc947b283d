#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/pattern.hpp"

using namespace turan;

TEST_CASE("star") {
    Graph s = star(4);
    CHECK(s.vertex_count() == 5);
    CHECK(s.edge_count() == 4);
    CHECK(s.degree(0) == 4);
    CHECK_THROWS_AS(star(0), std::invalid_argument);
}

TEST_CASE("star_matching") {
    Graph s = star_matching(5, 2);
    CHECK(s.edge_count() == 6);
    CHECK(s.degree_sequence() == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(star_matching(9, 1).edge_count() == 9);       // S_m^1 has m edges at n = m
    CHECK(star_matching(8, 2).edge_count() == 9);       // S_{m-1}^2 has m edges
    CHECK_THROWS_AS(star_matching(4, 2), std::invalid_argument);
    // k = 0 degenerates to the star
    CHECK(canonical_form(star_matching(6, 0)) == canonical_form(star(5)));
}

TEST_CASE("split_star") {
    CHECK(split_star(6, 2).edge_count() == 9);
    CHECK(canonical_form(split_star(6, 1)) == canonical_form(star(5)));
    for (int m : {9, 15, 23}) {
        CHECK(split_star((m + 3) / 2, 2).edge_count() == m);
    }
    CHECK_THROWS_AS(split_star(3, 4), std::invalid_argument);
}

TEST_CASE("family_f counts") {
    Graph f = family_f(22, 1);
    CHECK(f.edge_count() == 22);
    CHECK(f.vertex_count() == 13);  // 2 + |R| + t with |R| = 10
    CHECK(f.degree(0) == 12);       // v: u, R and T
    CHECK(f.max_degree() == 12);

    Graph f2 = family_f(23, 2);
    CHECK(f2.edge_count() == 23);
    CHECK(f2.vertex_count() == 14);

    CHECK_THROWS_AS(family_f(22, 2), std::invalid_argument);  // parity
    CHECK_THROWS_AS(family_f(4, 3), std::invalid_argument);   // m <= t+1
}

TEST_CASE("family_f equals the join construction") {
    // S_{(m-t+3)/2,2} with t pendants at a maximum-degree vertex
    for (auto [m, t] : std::vector<std::pair<int, int>>{{22, 1}, {23, 2}, {31, 4}}) {
        Graph base = split_star((m - t + 3) / 2, 2);
        for (int i = 0; i < t; ++i) base = base.with_pendant(0);
        CHECK(canonical_form(base) == canonical_form(family_f(m, t)));
    }
}

TEST_CASE("theta") {
    Graph t123 = theta(1, 2, 3);
    CHECK(t123.vertex_count() == 5);
    CHECK(t123.edge_count() == 6);

    // K_4 minus one edge
    Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK(canonical_form(theta(1, 2, 2)) == canonical_form(diamond));

    CHECK(canonical_form(theta(2, 2, 2)) == canonical_form(complete_bipartite(2, 3)));
    CHECK_THROWS_AS(theta(1, 1, 2), std::invalid_argument);
    CHECK(theta(2, 2, 5).edge_count() == 9);
    CHECK(theta(2, 2, 5).vertex_count() == 8);
}

TEST_CASE("complete_bipartite") {
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(canonical_form(complete_bipartite(1, 7)) == canonical_form(star(7)));
    Graph k2r = complete_bipartite(2, 4);
    CHECK(k2r.common_neighbors(0, 1) == 4);
    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("double_star") {
    CHECK(double_star(20, 1).edge_count() == 22);  // D_{m-2,1} has size m
    Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(canonical_form(double_star(1, 1)) == canonical_form(p4));
    CHECK(double_star(2, 2).degree_sequence() == std::vector<int>{3, 3, 1, 1, 1, 1});
}

TEST_CASE("h_figure1") {
    Graph h6 = h_figure1(6);
    CHECK(h6.vertex_count() == 5);
    CHECK(h6.edge_count() == 6);

    Graph h20 = h_figure1(20);
    CHECK(h20.edge_count() == 20);
    CHECK(induced_neighborhood(h20, 0).graph.edge_count() == 2);
    CHECK_THROWS_AS(h_figure1(5), std::invalid_argument);
}

TEST_CASE("hts_k1r") {
    // s = 0 collapses to F_{2r+t+1, t}
    for (auto [t, r] : std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 4}}) {
        Graph h = hts_k1r(t, 0, r, {});
        CHECK(canonical_form(h) == canonical_form(family_f(2 * r + t + 1, t)));
    }
    // paw: triangle with one pendant
    Graph paw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK(canonical_form(hts_k1r(1, 0, 1, {})) == canonical_form(paw));

    std::vector<Edge> bip{{0, 0}, {1, 0}, {1, 1}};
    Graph h = hts_k1r(2, 2, 3, bip);
    CHECK(h.edge_count() == 2 * 3 + 1 + 2 + 3);
    std::vector<Edge> bad{{2, 0}};
    CHECK_THROWS_AS(hts_k1r(2, 1, 3, bad), std::invalid_argument);
}

TEST_CASE("family spec json round trip") {
    FamilySpec spec = FamilySpec::from_json(nlohmann::json::parse(
        R"({"family":"F","params":{"m":23,"t":2}})"));
    CHECK(spec.build().edge_count() == 23);
    CHECK(FamilySpec::from_json(spec.to_json()).build() == spec.build());

    for (const char* text : {R"({"family":"Star","params":{"m":9}})",
                             R"({"family":"StarMatching","params":{"n":9,"k":1}})",
                             R"({"family":"SplitStar","params":{"n":6,"k":2}})",
                             R"({"family":"Theta","params":{"p":1,"q":2,"r":3}})",
                             R"({"family":"CompleteBipartite","params":{"a":2,"b":3}})",
                             R"({"family":"DoubleStar","params":{"i":3,"j":2}})",
                             R"({"family":"HFigure1","params":{"m":18}})",
                             R"({"family":"HtsK1r","params":{"t":2,"s":1,"r":3,"bip_edges":[[0,0]]}})"}) {
        FamilySpec s = FamilySpec::from_json(nlohmann::json::parse(text));
        Graph g = s.build();
        CHECK(g.vertex_count() > 0);
        CHECK(FamilySpec::from_json(s.to_json()).build() == g);
    }
    CHECK_THROWS_AS(FamilySpec::from_json(nlohmann::json::parse(R"({"family":"Nope"})")),
                    std::invalid_argument);
}

TEST_CASE("constructor sizes match the closed forms") {
    for (int n = 3; n <= 40; ++n)
        for (int k = 0; 2 * k + 1 <= n; ++k)
            CHECK(star_matching(n, k).edge_count() == n - 1 + k);
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(split_star(n, k).edge_count() ==
                  static_cast<long long>(k) * (k - 1) / 2 + static_cast<long long>(k) * (n - k));
    for (int m = 4; m <= 41; ++m)
        for (int t = 1; t <= m - 3; ++t) {
            if ((m - t) % 2 == 0) continue;
            CHECK(family_f(m, t).edge_count() == m);
        }
    for (int p = 1; p <= 4; ++p)
        for (int q = std::max(p, 2); q <= 5; ++q)
            for (int r = q; r <= 6; ++r) {
                CHECK(theta(p, q, r).edge_count() == p + q + r);
                CHECK(theta(p, q, r).vertex_count() == p + q + r - 1);
            }
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            CHECK(double_star(i, j).edge_count() == i + j + 1);
    for (int m = 6; m <= 40; ++m) CHECK(h_figure1(m).edge_count() == m);
}
