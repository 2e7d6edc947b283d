#include "turan/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "turan/graph6.hpp"
#include "turan/pattern.hpp"

namespace turan {

namespace {

// Canonical labeling search for one graph with n <= 64. Cells form an ordered
// partition; candidate labelings assign positions in cell order. Leaf strings
// use the graph6 bit order (column-major upper triangle) so the winner can be
// emitted directly as a graph6 body.
struct Canonizer {
    int n;
    std::vector<std::uint64_t> rows;  // single-word adjacency rows
    std::vector<std::uint8_t> best;   // best full bit string so far
    bool have_best = false;
    std::vector<std::uint8_t> scratch;

    explicit Canonizer(const Graph& graph) : n(graph.vertex_count()) {
        rows.resize(n);
        for (int v = 0; v < n; ++v) rows[v] = graph.row(v)[0];
        scratch.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
    }

    // Equitable refinement of an ordered partition. Sub-cells are ordered by
    // neighbor count into the splitter, so the result depends only on the
    // isomorphism type, not on vertex labels.
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::uint64_t smask = 0;
                for (int v : cells[s]) smask |= 1ULL << v;
                std::vector<std::vector<int>> next;
                next.reserve(cells.size() + 2);
                for (const auto& c : cells) {
                    if (c.size() == 1) {
                        next.push_back(c);
                        continue;
                    }
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(c.size());
                    for (int v : c)
                        keyed.emplace_back(__builtin_popcountll(rows[v] & smask), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::size_t i = 0;
                    while (i < keyed.size()) {
                        std::vector<int> sub;
                        std::size_t j = i;
                        while (j < keyed.size() && keyed[j].first == keyed[i].first)
                            sub.push_back(keyed[j++].second);
                        next.push_back(std::move(sub));
                        i = j;
                    }
                    if (next.back().size() != c.size()) changed = true;
                }
                if (changed) cells = std::move(next);
            }
        }
    }

    static std::size_t determined_bits(int k) { return static_cast<std::size_t>(k) * (k - 1) / 2; }

    void fill_bits(const std::vector<int>& order, int k) {
        std::size_t b = 0;
        for (int j = 1; j < k; ++j) {
            std::uint64_t rj = rows[order[j]];
            for (int i = 0; i < j; ++i) scratch[b++] = (rj >> order[i]) & 1ULL;
        }
    }

    // Swapping u,v while fixing everything else is an automorphism iff
    // N(u)\{v} == N(v)\{u}; branching on one representative per twin class
    // inside a cell therefore loses no labelings.
    std::vector<int> twin_representatives(const std::vector<int>& cell) const {
        std::vector<int> reps;
        std::vector<char> covered(cell.size(), 0);
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (covered[i]) continue;
            reps.push_back(cell[i]);
            for (std::size_t j = i + 1; j < cell.size(); ++j) {
                if (covered[j]) continue;
                std::uint64_t bi = 1ULL << cell[i], bj = 1ULL << cell[j];
                if ((rows[cell[i]] & ~bj) == (rows[cell[j]] & ~bi)) covered[j] = 1;
            }
        }
        return reps;
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        std::vector<int> order;
        order.reserve(n);
        std::size_t first_ns = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() != 1) {
                first_ns = i;
                break;
            }
            order.push_back(cells[i][0]);
        }
        const int k = static_cast<int>(order.size());
        fill_bits(order, k);
        if (have_best) {
            int c = std::memcmp(scratch.data(), best.data(), determined_bits(k));
            if (c > 0) return;  // prefix already worse than the incumbent
        }
        if (first_ns == cells.size()) {
            if (!have_best || std::memcmp(scratch.data(), best.data(), determined_bits(n)) < 0) {
                best.assign(scratch.begin(), scratch.begin() + determined_bits(n));
                have_best = true;
            }
            return;
        }
        const std::vector<int> cell = cells[first_ns];
        for (int v : twin_representatives(cell)) {
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != first_ns) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cell.size() - 1);
                for (int u : cell)
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

std::string encode_code(int n, const std::vector<std::uint8_t>& bits) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++nb == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            nb = 0;
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("canonical_form: n > 64");
    if (n <= 1) return {to_graph6(g)};
    Canonizer c(g);
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    c.search({all});
    return {encode_code(n, c.best)};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    if (a.vertex_count() <= 64) return canonical_form(a) == canonical_form(b);
    // same order and size: a subgraph embedding is necessarily an isomorphism
    return contains_subgraph(a, b);
}

}  // namespace turan
