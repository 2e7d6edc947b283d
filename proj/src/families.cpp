#include "turan/families.hpp"

#include <stdexcept>

namespace turan {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<int> range_block(int lo, int hi) {  // [lo, hi)
    std::vector<int> b;
    b.reserve(hi - lo);
    for (int v = lo; v < hi; ++v) b.push_back(v);
    return b;
}

}  // namespace

Graph star(int m) {
    require(m >= 1, "star: need m >= 1");
    GraphBuilder b(m + 1);
    for (int v = 1; v <= m; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

Graph star_matching(int n, int k) {
    require(k >= 0 && n >= 2 * k + 1 && n >= 2, "star_matching: need n >= 2k+1");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(0, v);
    for (int i = 0; i < k; ++i) b.add_edge(2 * i + 1, 2 * i + 2);
    return std::move(b).build();
}

Graph split_star(int n, int k) {
    require(k >= 1 && k <= n, "split_star: need 1 <= k <= n");
    GraphBuilder b(n);
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
        for (int v = k; v < n; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph family_f(int m, int t) {
    require(t >= 1, "family_f: need t >= 1");
    require(m > t + 1, "family_f: need m > t+1");
    require((m - t) % 2 == 1, "family_f: need m-t odd");
    const int a = (m - t - 1) / 2;  // |R|
    GraphBuilder b(2 + a + t);
    b.add_edge(0, 1);
    for (int i = 0; i < a; ++i) {
        b.add_edge(0, 2 + i);
        b.add_edge(1, 2 + i);
    }
    for (int i = 0; i < t; ++i) b.add_edge(0, 2 + a + i);
    return std::move(b).build();
}

Graph theta(int p, int q, int r) {
    require(1 <= p && p <= q && q <= r, "theta: need 1 <= p <= q <= r");
    require(q >= 2, "theta: need q >= 2 (no multi-edges)");
    const int n = p + q + r - 1;
    GraphBuilder b(n);
    int next = 2;
    auto add_path = [&](int len) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, 1);
    };
    add_path(p);
    add_path(q);
    add_path(r);
    return std::move(b).build();
}

Graph complete_bipartite(int a, int b_) {
    require(a >= 1 && b_ >= 1, "complete_bipartite: parts must be nonempty");
    GraphBuilder b(a + b_);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b_; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph double_star(int i, int j) {
    require(i >= 1 && j >= 1, "double_star: need i, j >= 1");
    GraphBuilder b(i + j + 2);
    b.add_edge(0, 1);
    for (int v = 0; v < i; ++v) b.add_edge(0, 2 + v);
    for (int v = 0; v < j; ++v) b.add_edge(1, 2 + i + v);
    return std::move(b).build();
}

Graph h_figure1(int m) {
    require(m >= 6, "h_figure1: need m >= 6");
    GraphBuilder b(m - 1);  // 4 + (m-5)
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(0, 3);
    b.add_edge(1, 2);
    b.add_edge(2, 3);
    for (int v = 4; v < m - 1; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

Graph hts_k1r(int t, int s, int r, std::span<const Edge> bip_edges) {
    require(r >= 1 && t >= 1 && s >= 0, "hts_k1r: need r >= 1, t >= 1, s >= 0");
    const int n = 2 + r + t + s;
    GraphBuilder b(n);
    b.add_edge(0, 1);
    for (int i = 0; i < r; ++i) {
        b.add_edge(0, 2 + i);
        b.add_edge(1, 2 + i);
    }
    const int t0 = r + 2, s0 = r + 2 + t;
    for (int i = 0; i < t; ++i) b.add_edge(0, t0 + i);
    for (const auto& [ti, si] : bip_edges) {
        require(ti >= 0 && ti < t && si >= 0 && si < s, "hts_k1r: bipartite edge index out of range");
        b.add_edge(t0 + ti, s0 + si);
    }
    return std::move(b).build();
}

Partition family_f_partition(int m, int t) {
    const int a = (m - t - 1) / 2;
    return {{range_block(2 + a, 2 + a + t), {0}, {1}, range_block(2, 2 + a)}};
}

Partition h_figure1_partition(int m) {
    return {{{0}, {1}, {2}, {3}, range_block(4, m - 1)}};
}

Partition star_matching_partition(int n, int k) {
    Partition p;
    p.blocks.push_back({0});
    if (k > 0) p.blocks.push_back(range_block(1, 2 * k + 1));
    if (n > 2 * k + 1) p.blocks.push_back(range_block(2 * k + 1, n));
    return p;
}

Partition split_star_partition(int n, int k) {
    Partition p;
    p.blocks.push_back(range_block(0, k));
    if (n > k) p.blocks.push_back(range_block(k, n));
    return p;
}

Partition double_star_partition(int i, int j) {
    return {{{0}, {1}, range_block(2, 2 + i), range_block(2 + i, 2 + i + j)}};
}

std::string FamilySpec::family_name(Family f) {
    switch (f) {
        case Family::Star: return "Star";
        case Family::StarMatching: return "StarMatching";
        case Family::SplitStar: return "SplitStar";
        case Family::F: return "F";
        case Family::Theta: return "Theta";
        case Family::CompleteBipartite: return "CompleteBipartite";
        case Family::DoubleStar: return "DoubleStar";
        case Family::HFigure1: return "HFigure1";
        case Family::HtsK1r: return "HtsK1r";
    }
    return "?";
}

nlohmann::json FamilySpec::to_json() const {
    return {{"family", family_name(family)}, {"params", params}};
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
    const std::string name = j.at("family").get<std::string>();
    FamilySpec s;
    s.params = j.value("params", nlohmann::json::object());
    if (name == "Star") s.family = Family::Star;
    else if (name == "StarMatching") s.family = Family::StarMatching;
    else if (name == "SplitStar") s.family = Family::SplitStar;
    else if (name == "F") s.family = Family::F;
    else if (name == "Theta") s.family = Family::Theta;
    else if (name == "CompleteBipartite") s.family = Family::CompleteBipartite;
    else if (name == "DoubleStar") s.family = Family::DoubleStar;
    else if (name == "HFigure1") s.family = Family::HFigure1;
    else if (name == "HtsK1r") s.family = Family::HtsK1r;
    else throw std::invalid_argument("unknown family: " + name);
    return s;
}

namespace {

int param(const nlohmann::json& p, const char* key) {
    if (!p.contains(key)) throw std::invalid_argument(std::string("missing family parameter: ") + key);
    return p.at(key).get<int>();
}

}  // namespace

Graph FamilySpec::build() const {
    using F = Family;
    switch (family) {
        case F::Star: return star(param(params, "m"));
        case F::StarMatching: return star_matching(param(params, "n"), param(params, "k"));
        case F::SplitStar: return split_star(param(params, "n"), param(params, "k"));
        case F::F: return family_f(param(params, "m"), param(params, "t"));
        case F::Theta: return theta(param(params, "p"), param(params, "q"), param(params, "r"));
        case F::CompleteBipartite: return complete_bipartite(param(params, "a"), param(params, "b"));
        case F::DoubleStar: return double_star(param(params, "i"), param(params, "j"));
        case F::HFigure1: return h_figure1(param(params, "m"));
        case F::HtsK1r: {
            std::vector<Edge> bip;
            if (params.contains("bip_edges"))
                for (const auto& e : params.at("bip_edges"))
                    bip.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            return hts_k1r(param(params, "t"), param(params, "s"), param(params, "r"), bip);
        }
    }
    throw std::invalid_argument("unknown family");
}

std::optional<Partition> FamilySpec::partition() const {
    using F = Family;
    switch (family) {
        case F::F: return family_f_partition(param(params, "m"), param(params, "t"));
        case F::HFigure1: return h_figure1_partition(param(params, "m"));
        case F::StarMatching: return star_matching_partition(param(params, "n"), param(params, "k"));
        case F::SplitStar: return split_star_partition(param(params, "n"), param(params, "k"));
        case F::DoubleStar: return double_star_partition(param(params, "i"), param(params, "j"));
        case F::Star: {
            const int m = param(params, "m");
            return star_matching_partition(m + 1, 0);
        }
        default: return std::nullopt;
    }
}

}  // namespace turan
