#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "turan/canonical.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/pattern.hpp"
#include "turan/poly.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"
#include "turan/verify.hpp"

using nlohmann::json;
using namespace turan;

namespace {

// 15 significant digits, reproducible across runs
std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

struct CommonArgs {
    bool as_json = false;
    bool as_csv = false;
    int threads = 0;
    std::uint64_t seed = 1;
    std::string cache;
};

Graph graph_from_args(const std::string& g6, const std::string& spec) {
    if (!g6.empty() && !spec.empty())
        throw CLI::ValidationError("--g6 and --spec are mutually exclusive");
    if (!g6.empty()) return from_graph6(g6);
    if (!spec.empty()) return FamilySpec::from_json(json::parse(spec)).build();
    throw CLI::ValidationError("need --g6 or --spec");
}

std::vector<Graph> parse_exclusions_impl(const std::string& text, int m) {
    std::vector<Graph> out;
    if (text.empty() || text == "none") return out;
    if (text == "star") {
        out.push_back(star(m));
        return out;
    }
    if (text == "split-star") {
        if (m % 2 == 1 && m >= 3) out.push_back(split_star((m + 3) / 2, 2));
        return out;
    }
    if (text.rfind("g6:", 0) == 0) {
        out.push_back(from_graph6(text.substr(3)));
        return out;
    }
    throw CLI::ValidationError("bad --exclude value: " + text);
}

int run_family(const std::string& spec_text, const std::string& out_mode) {
    const FamilySpec spec = FamilySpec::from_json(json::parse(spec_text));
    const Graph g = spec.build();
    if (out_mode == "g6") {
        std::cout << to_graph6(g) << "\n";
    } else {
        json j = spec.to_json();
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["g6"] = to_graph6(g);
        print_json(j);
    }
    return 0;
}

int run_rho(const Graph& g, bool with_perron) {
    const SpectralResult r = spectral_radius(g);
    json j{{"rho", r.rho}, {"iterations", r.iterations}, {"residual", r.residual}};
    if (with_perron) {
        json p = json::array();
        for (double x : r.perron) p.push_back(x);
        j["perron"] = p;
    }
    print_json(j);
    return 0;
}

int run_free_check(const Graph& g, const std::string& pattern_text) {
    const PatternId pattern = PatternId::parse(pattern_text);
    const bool contains = contains_pattern(g, pattern);
    print_json(json{{"pattern", pattern.to_string()}, {"contains", contains}, {"free", !contains}});
    return 0;
}

int run_quotient(const std::string& spec_text) {
    const FamilySpec spec = FamilySpec::from_json(json::parse(spec_text));
    const Graph g = spec.build();
    const auto part = spec.partition();
    if (!part)
        throw CLI::ValidationError("family has no canonical equitable partition: " +
                                   FamilySpec::family_name(spec.family));
    const QuotientMatrix q = quotient_matrix(g, *part);
    const IntPolynomial cp = char_poly(q);
    const double root = largest_real_root(cp.to_polynomial());
    const double rho = spectral_radius(g).rho;
    json blocks = json::array();
    for (const auto& b : part->blocks) blocks.push_back(b);
    json rows = json::array();
    for (int i = 0; i < q.k; ++i) {
        json row = json::array();
        for (int j = 0; j < q.k; ++j) row.push_back(q.at(i, j));
        rows.push_back(row);
    }
    json coeffs = json::array();
    for (auto c : cp.c) coeffs.push_back(static_cast<long long>(c));
    print_json(json{{"family", spec.to_json()},
                    {"blocks", blocks},
                    {"quotient", rows},
                    {"char_poly", coeffs},
                    {"char_poly_str", cp.to_string()},
                    {"largest_root", root},
                    {"rho", rho},
                    {"agree", std::abs(root - rho) < 1e-9}});
    return 0;
}

int run_largest_root(const std::string& coeffs_text, const std::string& poly_name, long long m,
                     long long t, long long n, long long k) {
    Polynomial p;
    json desc;
    if (!coeffs_text.empty()) {
        std::vector<double> c;
        std::string cur;
        for (char ch : coeffs_text + ",") {
            if (ch == ',') {
                if (!cur.empty()) c.push_back(std::stod(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        p = Polynomial(std::move(c));
        desc = {{"coeffs", coeffs_text}};
    } else if (!poly_name.empty()) {
        long long p1 = 0, p2 = 0;
        if (poly_name == "lemma23" || poly_name == "lemma24") {
            p1 = n;
            p2 = k;
        } else {
            p1 = m;
            p2 = t;
        }
        p = paper_poly(PaperPolyId::parse(poly_name, p1, p2));
        desc = {{"poly", poly_name}, {"p1", p1}, {"p2", p2}};
    } else {
        throw CLI::ValidationError("need --coeffs or --poly");
    }
    const double root = largest_real_root(p);
    desc["polynomial"] = p.to_string();
    desc["largest_root"] = root;
    desc["root_str"] = fmt_double(root);
    print_json(desc);
    return 0;
}

// splitmix64, matching the search module's deterministic streams
struct MixRng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

Graph random_connected_graph(MixRng& rng, int max_n) {
    const int n = 2 + rng.below(max_n - 1);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(rng.below(v), v);
    const int extra = rng.below(n);
    for (int e = 0; e < extra; ++e) {
        int u = rng.below(n), v = rng.below(n);
        if (u != v && !b.has_edge(u, v)) b.add_edge(u, v);
    }
    return std::move(b).build();
}

int emit_verdicts(const std::vector<Verdict>& verdicts, const CommonArgs& common) {
    if (common.as_csv) {
        std::cout << Verdict::csv_header() << "\n";
        for (const auto& v : verdicts) std::cout << v.csv_row() << "\n";
    } else {
        for (const auto& v : verdicts) print_json(v.to_json());
    }
    for (const auto& v : verdicts)
        if (v.status == "fails") return 1;
    return 0;
}

int run_verify(const std::string& claim, long long m, int r, int tmax, const std::string& g6,
               int samples, const CommonArgs& common) {
    std::vector<Verdict> verdicts;
    const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto graph_or = [&](Graph fallback) { return g6.empty() ? fallback : from_graph6(g6); };
    if (claim == "sec3") {
        verdicts.push_back(check_sec3_orderings(m));
    } else if (claim == "lemma43") {
        verdicts.push_back(check_lemma_4_3(m, tmax));
    } else if (claim == "thm14") {
        if (!g6.empty()) {
            verdicts.push_back(check_theorem_1_4(from_graph6(g6)));
        } else {
            if (m % 2 == 1) verdicts.push_back(check_theorem_1_4(split_star(static_cast<int>((m + 3) / 2), 2)));
            if (m % 2 == 0 && m >= 4) verdicts.push_back(check_theorem_1_4(family_f(static_cast<int>(m), 1)));
            if (m % 2 == 1 && m >= 6) verdicts.push_back(check_theorem_1_4(family_f(static_cast<int>(m), 2)));
            verdicts.push_back(check_theorem_1_4(star(static_cast<int>(m))));
        }
    } else if (claim == "thm12") {
        if (!g6.empty()) {
            verdicts.push_back(check_star_bound_k2r1(from_graph6(g6), r));
        } else {
            verdicts.push_back(check_star_bound_k2r1(star(static_cast<int>(m)), r));
            if (m >= 3) verdicts.push_back(check_star_bound_k2r1(star_matching(static_cast<int>(m), 1), r));
            verdicts.push_back(check_star_bound_k2r1(c5, r));
        }
    } else if (claim == "nikiforov") {
        if (!g6.empty()) {
            verdicts.push_back(check_nikiforov_bound(from_graph6(g6), r));
        } else {
            verdicts.push_back(check_nikiforov_bound(c5, r));
            if (m >= 4 && m % 2 == 0)
                verdicts.push_back(check_nikiforov_bound(complete_bipartite(2, static_cast<int>(m) / 2), r));
            verdicts.push_back(check_nikiforov_bound(star(static_cast<int>(m)), r));
        }
    } else if (claim == "lemma25") {
        const int count = samples > 0 ? samples : 100;
        MixRng rng{common.seed};
        Graph k5 = split_star(5, 5);
        verdicts.push_back(check_lemma_2_5(graph_or(k5), 0));
        if (g6.empty()) {
            verdicts.push_back(check_lemma_2_5(star(6), 1));  // leaf of K_{1,6}
            for (int i = 0; i < count; ++i) {
                Graph g = random_connected_graph(rng, 10);
                verdicts.push_back(check_lemma_2_5(g, rng.below(g.vertex_count())));
            }
        }
    } else {
        throw CLI::ValidationError("unknown claim: " + claim);
    }
    return emit_verdicts(verdicts, common);
}

int run_search(int m, const std::string& pattern_text, const std::string& exclude_text,
               bool heuristic, int restarts, const CommonArgs& common) {
    const PatternId pattern = PatternId::parse(pattern_text);
    const std::vector<Graph> exclusions = parse_exclusions_impl(exclude_text, m);
    std::vector<SearchReport> cached;
    if (!common.cache.empty()) cached = read_reports(common.cache);
    SearchReport report;
    if (heuristic) {
        HillClimbOptions opt;
        opt.restarts = restarts;
        opt.seed = common.seed;
        opt.threads = common.threads;
        report = hill_climb(m, pattern, exclusions, opt);
    } else {
        report = extremal_search(m, pattern, exclusions, common.threads, cached);
    }
    if (!common.cache.empty()) append_report(common.cache, report);
    print_json(report.to_json());
    return 0;
}

int run_report(const CommonArgs& common) {
    if (common.cache.empty()) throw CLI::ValidationError("report needs --cache");
    const auto reports = read_reports(common.cache);
    if (common.as_csv) {
        std::cout << "m,pattern,exclusions,enumerated,max_rho,argmax_count,heuristic\n";
        for (const auto& r : reports) {
            std::string exc;
            for (std::size_t i = 0; i < r.exclusions.size(); ++i) {
                if (i) exc += ";";
                exc += r.exclusions[i];
            }
            std::cout << r.m << ',' << r.pattern << ",\"" << exc << "\"," << r.enumerated << ','
                      << fmt_double(r.max_rho) << ',' << r.argmax.size() << ','
                      << (r.heuristic ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& r : reports) print_json(r.to_json());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral Turán verification toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_flag("--json", common.as_json, "JSON output (default for structured verbs)");
    app.add_flag("--csv", common.as_csv, "CSV output where supported");
    app.add_option("--threads", common.threads, "worker threads (default: logical cores)");
    app.add_option("--seed", common.seed, "RNG seed for heuristic search");
    app.add_option("--cache", common.cache, "JSONL search-report cache path");

    std::string spec_text, g6_text, out_mode = "g6", pattern_text = "none", exclude_text = "none";
    std::string claim, coeffs_text, poly_name;
    long long m = 0, t = 0, n = 0, k = 0;
    int r = 2, tmax = 9, restarts = 50, samples = 0;
    bool with_perron = false, heuristic = false;
    int search_m = 0;

    auto* family_cmd = app.add_subcommand("family", "build a named family graph");
    family_cmd->add_option("--spec", spec_text, "family spec JSON")->required();
    family_cmd->add_option("--out", out_mode, "g6|json");

    auto* rho_cmd = app.add_subcommand("rho", "spectral radius of a graph");
    rho_cmd->add_option("--g6", g6_text, "graph6 input");
    rho_cmd->add_option("--spec", spec_text, "family spec JSON");
    rho_cmd->add_flag("--perron", with_perron, "emit the Perron vector");

    auto* free_cmd = app.add_subcommand("free-check", "forbidden-subgraph check");
    free_cmd->add_option("--g6", g6_text, "graph6 input");
    free_cmd->add_option("--spec", spec_text, "family spec JSON");
    free_cmd->add_option("--pattern", pattern_text, "k2r1:<r>|theta123|g6:<string>")->required();

    auto* quot_cmd = app.add_subcommand("quotient", "equitable partition quotient data");
    quot_cmd->add_option("--spec", spec_text, "family spec JSON")->required();

    auto* root_cmd = app.add_subcommand("largest-root", "largest real root of a polynomial");
    root_cmd->add_option("--coeffs", coeffs_text, "ascending coefficients, comma separated");
    root_cmd->add_option("--poly", poly_name, "registry id: lemma23|lemma24|f|f1|g|h|f2|h1|f3|f4|h2");
    root_cmd->add_option("--m", m, "size parameter");
    root_cmd->add_option("--t", t, "pendant parameter");
    root_cmd->add_option("--n", n, "order parameter");
    root_cmd->add_option("--k", k, "matching/clique parameter");

    auto* verify_cmd = app.add_subcommand("verify", "check one quantitative claim");
    verify_cmd->add_option("--claim", claim, "thm12|thm14|sec3|lemma43|lemma25|nikiforov")->required();
    verify_cmd->add_option("--m", m, "size parameter");
    verify_cmd->add_option("--r", r, "forbidden K_{2,r+1} parameter");
    verify_cmd->add_option("--tmax", tmax, "largest t for lemma43");
    verify_cmd->add_option("--g6", g6_text, "check this graph instead of the battery");
    verify_cmd->add_option("--samples", samples, "random probes for lemma25");

    auto* search_cmd = app.add_subcommand("search", "extremal search over pattern-free graphs");
    search_cmd->add_option("--m", search_m, "edge count")->required();
    search_cmd->add_option("--pattern", pattern_text, "k2r1:<r>|theta123|g6:<string>|none");
    search_cmd->add_option("--exclude", exclude_text, "none|star|split-star|g6:<string>");
    search_cmd->add_flag("--heuristic", heuristic, "hill climb instead of exhaustive enumeration");
    search_cmd->add_option("--restarts", restarts, "hill-climb restarts");

    app.add_subcommand("report", "summarize a JSONL search cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (common.as_json)
            print_json(json{{"error", {{"code", "usage"}, {"message", e.what()}}}});
        else
            std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (common.threads > 0) omp_set_num_threads(common.threads);
#endif

    try {
        if (family_cmd->parsed()) return run_family(spec_text, out_mode);
        if (rho_cmd->parsed()) return run_rho(graph_from_args(g6_text, spec_text), with_perron);
        if (free_cmd->parsed()) return run_free_check(graph_from_args(g6_text, spec_text), pattern_text);
        if (quot_cmd->parsed()) return run_quotient(spec_text);
        if (root_cmd->parsed()) return run_largest_root(coeffs_text, poly_name, m, t, n, k);
        if (verify_cmd->parsed()) return run_verify(claim, m, r, tmax, g6_text, samples, common);
        if (search_cmd->parsed())
            return run_search(search_m, pattern_text, exclude_text, heuristic, restarts, common);
        return run_report(common);
    } catch (const CLI::ValidationError& e) {
        if (common.as_json)
            print_json(json{{"error", {{"code", "usage"}, {"message", e.what()}}}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (common.as_json)
            print_json(json{{"error", {{"code", "runtime"}, {"message", e.what()}}}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
