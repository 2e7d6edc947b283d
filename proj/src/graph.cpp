#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace turan {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

void check_vertex_count(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

}  // namespace

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
    check_vertex_count(n);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.vertex_count()), words_(g.words_per_row()), m_(g.edge_count()) {
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v)
        std::copy(g.row(v), g.row(v) + words_, bits_.begin() + static_cast<std::size_t>(v) * words_);
}

bool GraphBuilder::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (has_edge(u, v)) return;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++m_;
}

Graph GraphBuilder::build() && {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.m_ = m_;
    g.bits_ = std::move(bits_);
    return g;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::common_neighbors(int u, int v) const {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    GraphBuilder b(*this);
    b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
    g.bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
    --g.m_;
    return g;
}

Graph Graph::with_pendant(int u) const {
    GraphBuilder b(n_ + 1);
    for (int v = 0; v < n_; ++v)
        for_each_neighbor(v, [&](int w) { if (w > v) b.add_edge(v, w); });
    b.add_edge(u, n_);
    return std::move(b).build();
}

Graph Graph::induced(std::span<const int> keep) const {
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

Graph Graph::drop_isolated(std::vector<int>* old_of) const {
    std::vector<int> keep;
    keep.reserve(n_);
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 0) keep.push_back(v);
    if (old_of) *old_of = keep;
    return induced(keep);
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<Edge> edge_list(const Graph& g) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        g.for_each_neighbor(v, [&](int w) { if (w > v) out.emplace_back(v, w); });
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("is_connected: empty graph");
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        });
    }
    return count == n;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.for_each_neighbor(v, [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

namespace {

// Iterative low-link articulation point search.
void articulation_points(const Graph& g, std::vector<int>& out) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        // stack of (vertex, neighbor list, next index)
        struct Frame { int v; std::vector<int> nbrs; std::size_t i; };
        std::vector<Frame> stack;
        stack.push_back({root, g.neighbors(root), 0});
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i < f.nbrs.size()) {
                int w = f.nbrs[f.i++];
                if (disc[w] == -1) {
                    parent[w] = f.v;
                    if (f.v == root) ++root_children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, g.neighbors(w), 0});
                } else if (w != parent[f.v]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(v);
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_vertices: disconnected input");
    std::vector<int> out;
    articulation_points(g, out);
    return out;
}

InducedSubgraph induced_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    InducedSubgraph r;
    r.old_of = g.neighbors(v);
    r.graph = g.induced(r.old_of);
    return r;
}

}  // namespace turan
