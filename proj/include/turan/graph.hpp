#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace turan {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable after construction: the with_* builders return new graphs.
/// Symmetry and looplessness are enforced by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 4096;

    Graph() = default;

    /// Builds a graph with exactly the given edges (duplicates collapse).
    /// Throws std::invalid_argument on out-of-range endpoints or loops.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    /// Number of edges, m = size(G).
    long long edge_count() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }
    int degree(int v) const;
    int max_degree() const;

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    /// |N(u) ∩ N(v)| via bitwise AND + popcount.
    int common_neighbors(int u, int v) const;

    std::vector<int> neighbors(int v) const;

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f((w << 6) | b);
                word &= word - 1;
            }
        }
    }

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Appends a fresh vertex adjacent to u.
    Graph with_pendant(int u) const;

    /// Induced subgraph on `keep` (order preserved); keep[i] is the old index of new vertex i.
    Graph induced(std::span<const int> keep) const;

    /// Copy with isolated vertices removed. If old_of is non-null, it receives
    /// the old index of each surviving vertex.
    Graph drop_isolated(std::vector<int>* old_of = nullptr) const;

    std::vector<int> degree_sequence() const;  // sorted descending

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for graph construction; used by generators that add
/// edges incrementally before freezing into an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int vertex_count() const { return n_; }
    Graph build() &&;

private:
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// True iff a BFS tree from vertex 0 spans all vertices. Throws on n = 0.
bool is_connected(const Graph& g);

int component_count(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

/// Cut vertices of a connected graph (low-link). Throws on disconnected input.
std::vector<int> cut_vertices(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of;  // old_of[new index] = original vertex
};

/// Induced subgraph on N(v), with the index map retained.
InducedSubgraph induced_neighborhood(const Graph& g, int v);

std::vector<Edge> edge_list(const Graph& g);

}  // namespace turan
