#include "turan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace turan {

namespace {

constexpr double kRayleighTol = 1e-13;
constexpr double kResidualTol = 1e-10;
constexpr long long kMaxIterations = 1'000'000;

void matvec(const Graph& g, const std::vector<double>& x, std::vector<double>& out) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        g.for_each_neighbor(v, [&](int u) { acc += x[u]; });
        out[v] = acc;
    }
}

// Power iteration on A+I for a single (assumed connected) graph.
SpectralResult power_iterate(const Graph& g) {
    const int n = g.vertex_count();
    SpectralResult r;
    if (g.edge_count() == 0) {
        r.perron.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        return r;  // rho = 0, residual 0
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    double prev_ray = -1.0;
    for (long long it = 1; it <= kMaxIterations; ++it) {
        matvec(g, x, ax);
        double ray = 0.0;
        for (int v = 0; v < n; ++v) ray += x[v] * ax[v];  // x has unit 2-norm
        double resid = 0.0;
        for (int v = 0; v < n; ++v) resid = std::max(resid, std::abs(ax[v] - ray * x[v]));
        r.iterations = it;
        if (std::abs(ray - prev_ray) < kRayleighTol && resid < kResidualTol) {
            r.rho = ray;
            r.residual = resid;
            r.perron = x;
            return r;
        }
        prev_ray = ray;
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            ax[v] += x[v];  // shift: (A+I)x keeps bipartite iterates aperiodic
            norm += ax[v] * ax[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = ax[v] / norm;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("spectral_radius: empty graph");
    auto comps = components(g);
    if (comps.size() == 1) return power_iterate(g);
    SpectralResult best;
    best.rho = -1.0;
    long long total_iterations = 0;
    for (const auto& comp : comps) {
        SpectralResult r = power_iterate(g.induced(comp));
        total_iterations += r.iterations;
        if (r.rho > best.rho) best = r;
    }
    best.iterations = total_iterations;
    best.perron.clear();  // only defined for connected input
    return best;
}

double quadratic_form(const Graph& g, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw std::invalid_argument("quadratic_form: vector length mismatch");
    double acc = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        double local = 0.0;
        g.for_each_neighbor(v, [&](int u) {
            if (u > v) local += x[u];
        });
        acc += 2.0 * x[v] * local;
    }
    return acc;
}

void Partition::validate(const Graph& g) const {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition: empty block");
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
            if (seen[v]) throw std::invalid_argument("partition: overlapping blocks");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("partition: does not cover all vertices");
}

namespace {

std::vector<int> block_of(const Graph& g, const Partition& p) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (int v : p.blocks[i]) owner[v] = static_cast<int>(i);
    return owner;
}

bool compute_quotient(const Graph& g, const Partition& p, QuotientMatrix& out) {
    const auto owner = block_of(g, p);
    const int k = static_cast<int>(p.blocks.size());
    out.k = k;
    out.b.assign(static_cast<std::size_t>(k) * k, -1);
    std::vector<long long> counts(k);
    for (int i = 0; i < k; ++i) {
        bool first = true;
        for (int v : p.blocks[i]) {
            std::fill(counts.begin(), counts.end(), 0);
            g.for_each_neighbor(v, [&](int u) { ++counts[owner[u]]; });
            if (first) {
                for (int j = 0; j < k; ++j) out.b[static_cast<std::size_t>(i) * k + j] = counts[j];
                first = false;
            } else {
                for (int j = 0; j < k; ++j)
                    if (out.b[static_cast<std::size_t>(i) * k + j] != counts[j]) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& p) {
    p.validate(g);
    QuotientMatrix q;
    return compute_quotient(g, p, q);
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    p.validate(g);
    QuotientMatrix q;
    if (!compute_quotient(g, p, q))
        throw std::invalid_argument("quotient_matrix: partition is not equitable");
    return q;
}

namespace {

using I128 = __int128;

I128 checked_add(I128 a, I128 b) {
    I128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("char_poly: coefficient overflow");
    return r;
}

I128 checked_mul(I128 a, I128 b) {
    I128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("char_poly: coefficient overflow");
    return r;
}

}  // namespace

IntPolynomial char_poly(const QuotientMatrix& bm) {
    const int k = bm.k;
    if (k < 1 || k > 16) throw std::invalid_argument("char_poly: need 1 <= k <= 16");
    // Faddeev-LeVerrier: M_1 = B, c_{k-1} = -tr M_1; M_j = B(M_{j-1} + c_{k-j+1} I),
    // c_{k-j} = -tr(M_j)/j. All divisions are exact over the integers.
    std::vector<I128> coeff(k + 1, 0);
    coeff[k] = 1;
    std::vector<I128> m(static_cast<std::size_t>(k) * k, 0);
    std::vector<I128> b(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k * k; ++i) b[i] = bm.b[i];
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i) * k + i] = 1;  // M_0 = I
    for (int j = 1; j <= k; ++j) {
        // M_j = B * M_{j-1}
        std::vector<I128> next(static_cast<std::size_t>(k) * k, 0);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) {
                I128 acc = 0;
                for (int t = 0; t < k; ++t)
                    acc = checked_add(acc, checked_mul(b[static_cast<std::size_t>(r) * k + t],
                                                       m[static_cast<std::size_t>(t) * k + c]));
                next[static_cast<std::size_t>(r) * k + c] = acc;
            }
        I128 tr = 0;
        for (int i = 0; i < k; ++i) tr = checked_add(tr, next[static_cast<std::size_t>(i) * k + i]);
        I128 cj = -tr / j;
        if (cj * j != -tr) throw std::runtime_error("char_poly: inexact division");
        coeff[k - j] = cj;
        for (int i = 0; i < k; ++i)
            next[static_cast<std::size_t>(i) * k + i] = checked_add(next[static_cast<std::size_t>(i) * k + i], cj);
        m = std::move(next);
    }
    IntPolynomial out;
    out.c = std::move(coeff);
    return out;
}

bool vertex_deletion_bound_holds(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    const int d = g.degree(v);
    if (d < 1) throw std::invalid_argument("vertex_deletion_bound_holds: isolated vertex");
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    const double rho = spectral_radius(g).rho;
    const double rho_sub = spectral_radius(g.induced(keep)).rho;
    return rho <= std::sqrt(rho_sub * rho_sub + 2.0 * d - 1.0) + 1e-9;
}

}  // namespace turan
