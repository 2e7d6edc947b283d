#include "turan/graph6.hpp"

#include <stdexcept>

namespace turan {

namespace {

void append_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_n(out, n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    std::size_t pos = 0;
    if (s[0] == ':' || s[0] == ';' || s[0] == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 not supported");
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw std::invalid_argument("graph6: order too large");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(s[k]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad order byte");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad order byte");
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: order exceeds vertex cap");
    const long long nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < need) throw std::invalid_argument("graph6: truncated body");

    GraphBuilder b(static_cast<int>(n));
    long long bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < need; ++k) {
        int c = static_cast<unsigned char>(s[pos + k]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad body byte");
        for (int sh = 5; sh >= 0 && bit < nbits; --sh, ++bit) {
            if ((c >> sh) & 1) b.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return std::move(b).build();
}

}  // namespace turan
