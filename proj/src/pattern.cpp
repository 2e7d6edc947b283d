#include "turan/pattern.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "turan/graph6.hpp"

namespace turan {

namespace {

constexpr int kMaxWords = Graph::kMaxVertices / 64;

// Fixed-capacity vertex set used by the specialized detectors.
struct VSet {
    std::array<std::uint64_t, kMaxWords> w{};
    int words = 0;

    static VSet row(const Graph& g, int v) {
        VSet s;
        s.words = g.words_per_row();
        std::copy(g.row(v), g.row(v) + s.words, s.w.begin());
        return s;
    }
    static VSet intersect(const Graph& g, int u, int v) {
        VSet s;
        s.words = g.words_per_row();
        const std::uint64_t* a = g.row(u);
        const std::uint64_t* b = g.row(v);
        for (int i = 0; i < s.words; ++i) s.w[i] = a[i] & b[i];
        return s;
    }
    void clear(int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1ULL; }
    bool any() const {
        for (int i = 0; i < words; ++i)
            if (w[i]) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
        return c;
    }
    template <class F>
    bool for_each_until(F&& f) const {  // stops when f returns true
        for (int i = 0; i < words; ++i) {
            std::uint64_t word = w[i];
            while (word) {
                int b = std::countr_zero(word);
                if (f((i << 6) | b)) return true;
                word &= word - 1;
            }
        }
        return false;
    }
};

// One θ_{1,2,3} probe anchored at the adjacent pair (a,b): a common neighbor
// plus a 3-path a-x-y-b whose interior avoids the chosen common neighbor.
bool theta_at_pair(const Graph& g, int a, int b) {
    VSet common = VSet::intersect(g, a, b);
    const int ccount = common.count();
    if (ccount == 0) return false;
    VSet na = VSet::row(g, a);
    na.clear(b);
    return na.for_each_until([&](int x) {
        VSet y_set = VSet::intersect(g, x, b);
        y_set.clear(a);
        if (!y_set.any()) return false;
        if (ccount >= 3) return true;  // some witness survives removing {x,y}
        return y_set.for_each_until([&](int y) {
            VSet c = common;
            c.clear(x);
            c.clear(y);
            return c.any();
        });
    });
}

// 3-path u-p-q-c with interior disjoint from `avoid` and from {u,c}.
bool path3_between(const Graph& g, int u, int c, int avoid) {
    VSet np = VSet::row(g, u);
    np.clear(avoid);
    np.clear(c);
    return np.for_each_until([&](int p) {
        VSet q_set = VSet::intersect(g, p, c);
        q_set.clear(u);
        q_set.clear(avoid);
        return q_set.any();
    });
}

// Backtracking subgraph embedding. Pattern vertices are ordered so each new
// vertex (after the first in its component) has a previously placed neighbor.
struct Embedder {
    const Graph& g;
    const Graph& f;
    std::vector<int> order;              // pattern vertices in placement order
    std::vector<std::vector<int>> back;  // placed pattern-neighbors of order[i]
    std::vector<int> fdeg;
    std::vector<int> image;
    std::vector<char> used;

    Embedder(const Graph& host, const Graph& pat) : g(host), f(pat) {
        const int nf = f.vertex_count();
        fdeg.resize(nf);
        for (int v = 0; v < nf; ++v) fdeg[v] = f.degree(v);
        image.assign(nf, -1);
        used.assign(g.vertex_count(), 0);
    }

    void build_order(std::span<const int> seeds) {
        const int nf = f.vertex_count();
        std::vector<char> placed(nf, 0);
        for (int s : seeds) {
            order.push_back(s);
            placed[s] = 1;
        }
        while (static_cast<int>(order.size()) < nf) {
            int best = -1, best_links = -1;
            for (int v = 0; v < nf; ++v) {
                if (placed[v]) continue;
                int links = 0;
                f.for_each_neighbor(v, [&](int u) { links += placed[u]; });
                if (links > best_links || (links == best_links && best >= 0 && fdeg[v] > fdeg[best])) {
                    best = v;
                    best_links = links;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
        back.resize(nf);
        for (std::size_t i = seeds.size(); i < order.size(); ++i) {
            std::vector<char> earlier(nf, 0);
            for (std::size_t j = 0; j < i; ++j) earlier[order[j]] = 1;
            f.for_each_neighbor(order[i], [&](int u) {
                if (earlier[u]) back[i].push_back(u);
            });
        }
    }

    bool place(std::size_t step) {
        if (step == order.size()) return true;
        const int p = order[step];
        const auto& anchors = back[step];
        auto feasible = [&](int v) {
            if (used[v] || g.degree(v) < fdeg[p]) return false;
            for (int a : anchors)
                if (!g.has_edge(v, image[a])) return false;
            return true;
        };
        auto attempt = [&](int v) {
            image[p] = v;
            used[v] = 1;
            bool ok = place(step + 1);
            used[v] = 0;
            image[p] = -1;
            return ok;
        };
        if (!anchors.empty()) {
            bool found = false;
            g.for_each_neighbor(image[anchors[0]], [&](int v) {
                if (!found && feasible(v) && attempt(v)) found = true;
            });
            return found;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (feasible(v) && attempt(v)) return true;
        return false;
    }
};

bool embeds_with_anchor(const Graph& g, const Graph& f, int fp, int fq, int gu, int gv) {
    if (f.degree(fp) > g.degree(gu) || f.degree(fq) > g.degree(gv)) return false;
    Embedder e(g, f);
    std::array<int, 2> seeds{fp, fq};
    e.build_order(seeds);
    e.image[fp] = gu;
    e.image[fq] = gv;
    e.used[gu] = e.used[gv] = 1;
    return e.place(2);
}

}  // namespace

PatternId PatternId::k2r1(int r) {
    if (r < 1) throw std::invalid_argument("k2r1 requires r >= 1");
    return {Kind::K2R1, r, {}};
}

std::string PatternId::to_string() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::K2R1: return "k2r1:" + std::to_string(r);
        case Kind::Theta123: return "theta123";
        case Kind::Generic: return "g6:" + to_graph6(generic);
    }
    return "none";
}

PatternId PatternId::parse(std::string_view s) {
    if (s == "none") return none();
    if (s == "theta123") return theta123();
    if (s.rfind("k2r1:", 0) == 0) {
        int r = 0;
        auto [p, ec] = std::from_chars(s.data() + 5, s.data() + s.size(), r);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw std::invalid_argument("bad k2r1 pattern: " + std::string(s));
        return k2r1(r);
    }
    if (s.rfind("g6:", 0) == 0) return generic_graph(from_graph6(s.substr(3)));
    throw std::invalid_argument("unknown pattern: " + std::string(s));
}

bool contains_k2r1(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("contains_k2r1 requires r >= 1");
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.common_neighbors(u, v) >= r + 1) return true;
    return false;
}

bool contains_theta123(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        bool hit = false;
        g.for_each_neighbor(a, [&](int b) {
            if (b > a && !hit && theta_at_pair(g, a, b)) hit = true;
        });
        if (hit) return true;
    }
    return false;
}

bool contains_subgraph(const Graph& g, const Graph& f) {
    if (f.vertex_count() > g.vertex_count()) return false;
    if (f.vertex_count() == 0) return true;
    if (f.edge_count() > g.edge_count()) return false;
    Embedder e(g, f);
    // seed with a maximum-degree pattern vertex
    int seed = 0;
    for (int v = 1; v < f.vertex_count(); ++v)
        if (f.degree(v) > f.degree(seed)) seed = v;
    std::array<int, 1> seeds{seed};
    e.build_order(seeds);
    return e.place(0) || false;
}

bool contains_pattern(const Graph& g, const PatternId& p) {
    switch (p.kind) {
        case PatternId::Kind::None: return false;
        case PatternId::Kind::K2R1: return contains_k2r1(g, p.r);
        case PatternId::Kind::Theta123: return contains_theta123(g);
        case PatternId::Kind::Generic: return contains_subgraph(g, p.generic);
    }
    return false;
}

namespace {

bool k2r1_through_edge(const Graph& g, int u, int v, int r) {
    // a new occurrence pairs u or v with some other vertex
    const int n = g.vertex_count();
    for (int w = 0; w < n; ++w) {
        if (w != u && g.common_neighbors(u, w) >= r + 1) return true;
        if (w != v && g.common_neighbors(v, w) >= r + 1) return true;
    }
    return false;
}

// Occurrence roles of the new edge (u,v) inside θ_{1,2,3}: the 1-path itself,
// an edge of the 2-path, the outer or middle edge of the 3-path.
bool theta_through_edge(const Graph& g, int u, int v) {
    if (theta_at_pair(g, u, v)) return true;

    // edge of the 2-path: one endpoint plays a, the other the common neighbor
    VSet both = VSet::intersect(g, u, v);
    if (both.for_each_until([&](int c) { return path3_between(g, u, c, v); })) return true;
    if (both.for_each_until([&](int c) { return path3_between(g, v, c, u); })) return true;

    // outer edge of the 3-path: a-p with (a,p) = (u,v) or (v,u)
    auto outer = [&](int a, int p) {
        VSet q_set = VSet::row(g, p);
        q_set.clear(a);
        return q_set.for_each_until([&](int q) {
            VSet b_set = VSet::intersect(g, q, a);
            b_set.clear(p);
            return b_set.for_each_until([&](int b) {
                VSet wit = VSet::intersect(g, a, b);
                wit.clear(p);
                wit.clear(q);
                return wit.any();
            });
        });
    };
    if (outer(u, v) || outer(v, u)) return true;

    // middle edge of the 3-path: p-q = (u,v) or (v,u)
    auto middle = [&](int p, int q) {
        VSet a_set = VSet::row(g, p);
        a_set.clear(q);
        return a_set.for_each_until([&](int a) {
            VSet b_set = VSet::intersect(g, q, a);
            b_set.clear(p);
            b_set.clear(a);
            return b_set.for_each_until([&](int b) {
                if (b == a) return false;
                VSet wit = VSet::intersect(g, a, b);
                wit.clear(p);
                wit.clear(q);
                return wit.any();
            });
        });
    };
    return middle(u, v) || middle(v, u);
}

}  // namespace

bool incremental_free_check(const Graph& g, Edge new_edge, const PatternId& pattern) {
    auto [u, v] = new_edge;
    if (g.has_edge(u, v)) throw std::invalid_argument("incremental_free_check: edge already present");
    if (pattern.kind == PatternId::Kind::None) return true;
    const Graph g2 = g.with_edge(u, v);
    switch (pattern.kind) {
        case PatternId::Kind::K2R1: return !k2r1_through_edge(g2, u, v, pattern.r);
        case PatternId::Kind::Theta123: return !theta_through_edge(g2, u, v);
        case PatternId::Kind::Generic: {
            const Graph& f = pattern.generic;
            if (f.edge_count() == 0) return true;  // vertex count unchanged
            for (int p = 0; p < f.vertex_count(); ++p) {
                bool hit = false;
                f.for_each_neighbor(p, [&](int q) {
                    if (hit) return;
                    if (embeds_with_anchor(g2, f, p, q, u, v) || embeds_with_anchor(g2, f, p, q, v, u))
                        hit = true;
                });
                if (hit) return false;
            }
            return true;
        }
        default: return true;
    }
}

}  // namespace turan
