#include "turan/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace turan {

Polynomial::Polynomial(std::vector<double> coeffs_ascending) : c_(std::move(coeffs_ascending)) {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::normalized() const {
    if (c_.back() >= 0.0) return *this;
    std::vector<double> neg(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) neg[i] = -c_[i];
    return Polynomial(std::move(neg));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

namespace {

std::string term_to_string(double coef, int deg, bool lead) {
    std::ostringstream os;
    double a = coef;
    if (lead) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        a = std::abs(a);
    }
    const bool unit = a == 1.0 && deg > 0;
    if (!unit) {
        os << a;
        if (deg > 0) os << "*";
    }
    if (deg > 1)
        os << "x^" << deg;
    else if (deg == 1)
        os << "x";
    return os.str();
}

}  // namespace

std::string Polynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        double a = c_[d];
        if (a == 0.0 && !(d == 0 && first)) continue;
        os << term_to_string(a, d, first);
        first = false;
    }
    return os.str();
}

Polynomial IntPolynomial::to_polynomial() const {
    std::vector<double> d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = static_cast<double>(c[i]);
    return Polynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
    std::vector<double> d(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = static_cast<double>(c[i]);
    return Polynomial(std::move(d)).to_string();
}

double largest_real_root(const Polynomial& p0) {
    const Polynomial p = p0.normalized();
    const int deg = p.degree();
    if (deg < 1) throw std::domain_error("largest_real_root: degree < 1");
    const auto& c = p.coeffs();
    double bound = 0.0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
    double hi = 1.0 + bound;
    if (p.eval(hi) <= 0.0) {
        // leading coefficient positive: p(x) -> +inf, so push the bracket up
        while (p.eval(hi) <= 0.0) hi *= 2.0;
    }
    // rightmost sign change on a dense grid over [-hi, hi]
    const int kSamples = 8192;
    double lo = -hi;
    bool found = false;
    double prev_x = hi, prev_v = p.eval(hi);
    for (int i = 1; i <= kSamples; ++i) {
        double x = hi - (2.0 * hi) * i / kSamples;
        double v = p.eval(x);
        if (v == 0.0) return x;
        if (v < 0.0 && prev_v > 0.0) {
            lo = x;
            hi = prev_x;
            found = true;
            break;
        }
        prev_x = x;
        prev_v = v;
    }
    if (!found) throw std::domain_error("largest_real_root: no sign change in bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = p.eval(mid);
        if (v == 0.0) return mid;
        (v < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

Polynomial from_ll(std::initializer_list<long long> asc) {
    std::vector<double> d;
    d.reserve(asc.size());
    for (long long v : asc) d.push_back(static_cast<double>(v));
    return Polynomial(std::move(d));
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Polynomial poly_lemma23(long long n, long long k) {
    require(n >= 2 * k + 1 && n >= 2 && k >= 0, "poly_lemma23: need n >= 2k+1");
    return from_ll({n - 1 - 2 * k, -(n - 1), -1, 1});
}

Polynomial poly_lemma24(long long n, long long k) {
    require(k >= 1 && k <= n, "poly_lemma24: need 1 <= k <= n");
    return from_ll({-k * (n - k), -(k - 1), 1});
}

Polynomial poly_f(long long m) { return from_ll({m - 3, -(m - 1), -1, 1}); }
Polynomial poly_f1(long long m) { return from_ll({m - 6, -(m - 2), -1, 1}); }
Polynomial poly_g(long long m) { return from_ll({m - 2, 0, -m, 0, 1}); }
Polynomial poly_h(long long m) { return from_ll({m - 2, -(m - 3), -1, 1}); }
Polynomial poly_f2(long long m) { return from_ll({2 * m - 10, -4, -m, 0, 1}); }
Polynomial poly_h1(long long m) { return from_ll({2 * m - 10, -(m + 1), -1, 1}); }

Polynomial poly_f3(long long m, long long t) {
    require(t >= 1 && m > t + 1 && (m - t) % 2 == 1, "poly_f3: need m > t+1 with m-t odd");
    const long long half = (m - t - 1) / 2;  // exact: m-t-1 is even
    return from_ll({t * half, -(m - t - 1), -m, 0, 1});
}

Polynomial poly_f4(long long m) { return poly_f3(m, 1); }

Polynomial poly_h2(long long m, long long t) {
    // exact difference f3 - f4; the x-coefficient is t-1 and the constant is
    // (t(m-t-1) - (m-2))/2, an integer whenever m-t is odd
    require(t >= 1 && m > t + 1 && (m - t) % 2 == 1, "poly_h2: need m > t+1 with m-t odd");
    require(m % 2 == 0, "poly_h2: f4 requires even m");
    const long long num = t * (m - t - 1) - (m - 2);
    std::vector<double> c{static_cast<double>(num) / 2.0, static_cast<double>(t - 1)};
    return Polynomial(std::move(c));
}

std::string PaperPolyId::to_string() const {
    switch (which) {
        case Which::Lemma23: return "lemma23";
        case Which::Lemma24: return "lemma24";
        case Which::FThm13: return "f";
        case Which::F1Sec3: return "f1";
        case Which::GSec3: return "g";
        case Which::HSec3: return "h";
        case Which::F2Sec3: return "f2";
        case Which::H1Sec3: return "h1";
        case Which::F3Thm15: return "f3";
        case Which::F4Lem43: return "f4";
        case Which::H2Lem43: return "h2";
    }
    return "?";
}

PaperPolyId PaperPolyId::parse(const std::string& name, long long p1, long long p2) {
    using W = Which;
    W w;
    if (name == "lemma23") w = W::Lemma23;
    else if (name == "lemma24") w = W::Lemma24;
    else if (name == "f") w = W::FThm13;
    else if (name == "f1") w = W::F1Sec3;
    else if (name == "g") w = W::GSec3;
    else if (name == "h") w = W::HSec3;
    else if (name == "f2") w = W::F2Sec3;
    else if (name == "h1") w = W::H1Sec3;
    else if (name == "f3") w = W::F3Thm15;
    else if (name == "f4") w = W::F4Lem43;
    else if (name == "h2") w = W::H2Lem43;
    else throw std::invalid_argument("unknown polynomial id: " + name);
    return {w, p1, p2};
}

Polynomial paper_poly(const PaperPolyId& id) {
    using W = PaperPolyId::Which;
    switch (id.which) {
        case W::Lemma23: return poly_lemma23(id.p1, id.p2);
        case W::Lemma24: return poly_lemma24(id.p1, id.p2);
        case W::FThm13: return poly_f(id.p1);
        case W::F1Sec3: return poly_f1(id.p1);
        case W::GSec3: return poly_g(id.p1);
        case W::HSec3: return poly_h(id.p1);
        case W::F2Sec3: return poly_f2(id.p1);
        case W::H1Sec3: return poly_h1(id.p1);
        case W::F3Thm15: return poly_f3(id.p1, id.p2);
        case W::F4Lem43: return poly_f4(id.p1);
        case W::H2Lem43: return poly_h2(id.p1, id.p2);
    }
    throw std::invalid_argument("unknown polynomial id");
}

}  // namespace turan
