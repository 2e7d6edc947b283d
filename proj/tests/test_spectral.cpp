#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "turan/families.hpp"
#include "turan/pattern.hpp"
#include "turan/spectral.hpp"

using namespace turan;

namespace {

Graph c5() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST_CASE("spectral radius of named graphs") {
    CHECK(spectral_radius(star(4)).rho == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(spectral_radius(star(9)).rho == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(spectral_radius(star(16)).rho == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(spectral_radius(split_star(6, 2)).rho ==
          doctest::Approx((1.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-10));
    CHECK(spectral_radius(split_star(7, 7)).rho == doctest::Approx(6.0).epsilon(1e-10));  // K_7
    CHECK(spectral_radius(c5()).rho == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(spectral_radius(Graph::from_edge_list(2, {{0, 1}})).rho == doctest::Approx(1.0));
}

TEST_CASE("power iteration matches the dense eigensolver oracle") {
    for (const Graph& g : oracle::test_corpus(97, 120)) {
        if (g.vertex_count() > 10) continue;
        CHECK(std::abs(spectral_radius(g).rho - oracle::rho_dense(g)) < 1e-9);
    }
    // a couple of larger instances
    CHECK(std::abs(spectral_radius(family_f(23, 2)).rho - oracle::rho_dense(family_f(23, 2))) < 1e-9);
    CHECK(std::abs(spectral_radius(h_figure1(30)).rho - oracle::rho_dense(h_figure1(30))) < 1e-9);
}

TEST_CASE("spectral result metadata") {
    SpectralResult r = spectral_radius(star_matching(9, 1));
    CHECK(r.residual < 1e-10);
    CHECK(r.iterations > 0);
    CHECK(r.perron.size() == 9);
    double norm = 0.0;
    for (double x : r.perron) {
        CHECK(x > 0.0);  // Perron positivity
        norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("disconnected graphs take the max over components; no perron") {
    Graph g = Graph::from_edge_list(7, {{0, 1}, {2, 3}, {3, 4}, {4, 2}, {5, 6}});
    SpectralResult r = spectral_radius(g);
    CHECK(r.rho == doctest::Approx(2.0).epsilon(1e-10));  // the triangle wins
    CHECK(r.perron.empty());
    Graph isolated_only = Graph::from_edge_list(3, {});
    CHECK(spectral_radius(isolated_only).rho == doctest::Approx(0.0));
    CHECK_THROWS_AS(spectral_radius(Graph::from_edge_list(0, {})), std::invalid_argument);
}

TEST_CASE("classical bounds: 2m/n <= rho <= max degree") {
    for (const Graph& g : oracle::test_corpus(101, 150)) {
        if (g.edge_count() == 0 || !is_connected(g)) continue;
        const double rho = spectral_radius(g).rho;
        CHECK(rho >= 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count() - 1e-9);
        CHECK(rho <= g.max_degree() + 1e-9);
    }
}

TEST_CASE("quadratic form") {
    Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    std::vector<double> ones{1.0, 1.0};
    CHECK(quadratic_form(k2, ones) == doctest::Approx(2.0));
    std::vector<double> zeros{0.0, 0.0};
    CHECK(quadratic_form(k2, zeros) == doctest::Approx(0.0));
    CHECK_THROWS_AS(quadratic_form(k2, std::vector<double>{1.0}), std::invalid_argument);

    // Rayleigh identity on the Perron vector
    for (const Graph& g : oracle::test_corpus(103, 60)) {
        if (g.edge_count() == 0 || !is_connected(g)) continue;
        SpectralResult r = spectral_radius(g);
        CHECK(std::abs(quadratic_form(g, r.perron) - r.rho) < 1e-9);
    }
}

TEST_CASE("edge rotation harness: strict rho increase") {
    // triples (G, G', u) with N_G(u) properly contained in N_{G'}(u) and
    // nonnegative quadratic-form change at the Perron vector of G
    std::mt19937_64 rng(211);
    int done = 0;
    while (done < 200) {
        const int n = 5 + static_cast<int>(rng() % 6ULL);
        Graph g = oracle::random_connected(rng, n, static_cast<int>(rng() % 6ULL));
        SpectralResult rg = spectral_radius(g);
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        Graph gp = g;
        bool built = false;
        if (done % 2 == 0) {
            // add one edge at u
            for (int w = 0; w < n && !built; ++w)
                if (w != u && !g.has_edge(u, w)) {
                    gp = g.with_edge(u, w);
                    built = true;
                }
        } else {
            // rotate an edge vw to uw with x_u >= x_v
            for (int v = 0; v < n && !built; ++v) {
                if (v == u || rg.perron[u] < rg.perron[v]) continue;
                std::vector<int> nbrs = g.neighbors(v);
                for (int w : nbrs) {
                    if (w == u || g.has_edge(u, w)) continue;
                    Graph cand = g.without_edge(v, w).with_edge(u, w);
                    if (!is_connected(cand)) continue;
                    gp = std::move(cand);
                    built = true;
                    break;
                }
            }
        }
        if (!built) continue;
        CHECK(quadratic_form(gp, rg.perron) >= quadratic_form(g, rg.perron) - 1e-12);
        CHECK(spectral_radius(gp).rho > rg.rho);
        ++done;
    }
}

TEST_CASE("is_equitable") {
    CHECK(is_equitable(family_f(23, 2), family_f_partition(23, 2)));
    CHECK(is_equitable(family_f(22, 1), family_f_partition(22, 1)));
    CHECK(is_equitable(h_figure1(20), h_figure1_partition(20)));
    CHECK(is_equitable(star_matching(9, 1), star_matching_partition(9, 1)));
    CHECK(is_equitable(split_star(6, 2), split_star_partition(6, 2)));
    CHECK(is_equitable(double_star(5, 1), double_star_partition(5, 1)));

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    Partition bad{{{0, 1}, {2}}};
    CHECK_FALSE(is_equitable(p3, bad));

    Partition malformed{{{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(is_equitable(p3, malformed), std::invalid_argument);
    Partition empty_block{{{0, 1, 2}, {}}};
    CHECK_THROWS_AS(is_equitable(p3, empty_block), std::invalid_argument);
}

TEST_CASE("quotient matrices match the displayed forms") {
    const QuotientMatrix qf = quotient_matrix(family_f(23, 2), family_f_partition(23, 2));
    const std::vector<long long> expect_f{0, 1, 0, 0, 2, 0, 1, 10, 0, 1, 0, 10, 0, 1, 1, 0};
    CHECK(qf.b == expect_f);

    const QuotientMatrix qh = quotient_matrix(h_figure1(20), h_figure1_partition(20));
    const std::vector<long long> expect_h{0, 1, 1, 1, 15, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0,
                                          1, 0, 0, 0, 0};
    CHECK(qh.b == expect_h);

    Graph k5 = split_star(5, 5);
    Partition whole{{{0, 1, 2, 3, 4}}};
    const QuotientMatrix qk = quotient_matrix(k5, whole);
    CHECK(qk.b == std::vector<long long>{4});

    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(quotient_matrix(p3, Partition{{{0, 1}, {2}}}), std::invalid_argument);
}

TEST_CASE("quotient largest eigenvalue equals the graph spectral radius") {
    for (auto [m, t] : std::vector<std::pair<int, int>>{{22, 1}, {23, 2}, {29, 4}, {40, 1}}) {
        Graph f = family_f(m, t);
        auto q = quotient_matrix(f, family_f_partition(m, t));
        const double root = largest_real_root(char_poly(q).to_polynomial());
        CHECK(std::abs(root - spectral_radius(f).rho) < 1e-9);
    }
}

TEST_CASE("char_poly exact values") {
    // K_n on a single block: x - (n-1)
    QuotientMatrix q1{1, {6}};
    CHECK(char_poly(q1).c == std::vector<__int128>{-6, 1});

    // F quotient equals f3 coefficient-for-coefficient
    for (auto [m, t] : std::vector<std::pair<int, int>>{{23, 2}, {22, 1}, {31, 2}}) {
        auto cp = char_poly(quotient_matrix(family_f(m, t), family_f_partition(m, t)));
        const long long a = (m - t - 1) / 2;
        std::vector<__int128> expect{static_cast<__int128>(t) * a, -(2 * a), -m, 0, 1};
        CHECK(cp.c == expect);
    }

    // H quotient equals x * f2 (the displayed closed form uses det(B - xI),
    // which flips the overall sign at odd degree)
    for (int m : {18, 20, 33}) {
        auto cp = char_poly(quotient_matrix(h_figure1(m), h_figure1_partition(m)));
        std::vector<__int128> expect{0, 2 * m - 10, -4, -m, 0, 1};
        CHECK(cp.c == expect);
    }

    // star-with-matching quotient reproduces the cubic from the S_n^k lemma
    for (auto [n, k] : std::vector<std::pair<int, int>>{{9, 1}, {11, 3}}) {
        auto cp = char_poly(quotient_matrix(star_matching(n, k), star_matching_partition(n, k)));
        std::vector<__int128> expect{n - 1 - 2 * k, -(n - 1), -1, 1};
        CHECK(cp.c == expect);
    }

    QuotientMatrix overflow_case;
    overflow_case.k = 16;
    overflow_case.b.assign(16 * 16, 1000000000LL);
    CHECK_THROWS_AS(char_poly(overflow_case), std::overflow_error);

    QuotientMatrix too_big;
    too_big.k = 17;
    too_big.b.assign(17 * 17, 1);
    CHECK_THROWS_AS(char_poly(too_big), std::invalid_argument);
}

TEST_CASE("vertex deletion bound") {
    // equality on complete graphs and on stars at a leaf
    for (int n : {3, 5, 8}) {
        Graph kn = split_star(n, n);
        CHECK(vertex_deletion_bound_holds(kn, 0));
        std::vector<int> keep;
        for (int u = 1; u < n; ++u) keep.push_back(u);
        const double lhs = spectral_radius(kn).rho;
        const double rhs = std::sqrt(std::pow(spectral_radius(kn.induced(keep)).rho, 2) + 2.0 * (n - 1) - 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    Graph s = star(7);
    CHECK(vertex_deletion_bound_holds(s, 3));
    {
        std::vector<int> keep{0, 1, 2, 4, 5, 6, 7};
        const double lhs = spectral_radius(s).rho;
        const double rhs = std::sqrt(std::pow(spectral_radius(s.induced(keep)).rho, 2) + 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    // strict on C_5
    {
        const double lhs = spectral_radius(c5()).rho;
        Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
        const double rhs = std::sqrt(std::pow(spectral_radius(p4).rho, 2) + 3.0);
        CHECK(vertex_deletion_bound_holds(c5(), 0));
        CHECK(rhs - lhs > 1e-6);
    }
    CHECK_THROWS_AS(vertex_deletion_bound_holds(Graph::from_edge_list(2, {}), 0), std::invalid_argument);

    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8ULL);
        Graph g = oracle::random_connected(rng, n, static_cast<int>(rng() % 8ULL));
        CHECK(vertex_deletion_bound_holds(g, static_cast<int>(rng() % static_cast<std::uint64_t>(n))));
    }
}
