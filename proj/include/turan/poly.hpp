#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace turan {

/// Real-coefficient polynomial, coefficients ascending by degree, nonzero
/// leading coefficient (except for the zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs_ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }
    double eval(double x) const;  // Horner

    /// Scaled so the leading coefficient is positive.
    Polynomial normalized() const;

    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    /// Descending-degree human-readable form, e.g. "x^3 - x^2 - 8*x + 6".
    std::string to_string() const;

private:
    std::vector<double> c_{0.0};
};

/// Exact integer-coefficient polynomial (ascending), as produced by the
/// characteristic polynomial routine. Coefficients are 128-bit.
struct IntPolynomial {
    std::vector<__int128> c;

    bool operator==(const IntPolynomial&) const = default;
    Polynomial to_polynomial() const;
    std::string to_string() const;
};

/// Greatest real root of p, to absolute accuracy 1e-12: bracket at the last
/// sign change below the Cauchy bound, then bisect. Throws std::domain_error
/// when no sign change is found.
double largest_real_root(const Polynomial& p);

/// Identifiers for the closed-form polynomials used in the source results.
struct PaperPolyId {
    enum class Which {
        Lemma23,   // x^3 - x^2 - (n-1)x + n-1-2k
        Lemma24,   // x^2 - (k-1)x - k(n-k)
        FThm13,    // f  = x^3 - x^2 - (m-1)x + m-3
        F1Sec3,    // f1 = x^3 - x^2 - (m-2)x + m-6
        GSec3,     // g  = x^4 - m x^2 + m-2
        HSec3,     // h  = g - x f = x^3 - x^2 - (m-3)x + m-2
        F2Sec3,    // f2 = x^4 - m x^2 - 4x + 2m-10
        H1Sec3,    // h1 = f2 - x f = x^3 - x^2 - (m+1)x + 2m-10
        F3Thm15,   // f3 = x^4 - m x^2 - (m-t-1)x + (t/2)(m-t-1)
        F4Lem43,   // f4 = f3 at t=1 (m even)
        H2Lem43,   // h2 = f3 - f4 (exact difference)
    };
    Which which;
    long long p1 = 0;  // n or m
    long long p2 = 0;  // k or t

    std::string to_string() const;
    static PaperPolyId parse(const std::string& name, long long p1, long long p2);
};

/// Registry of the closed-form polynomials; exact integer (or half-integer)
/// coefficients built in integer arithmetic, then converted.
Polynomial paper_poly(const PaperPolyId& id);

// Convenience constructors.
Polynomial poly_lemma23(long long n, long long k);
Polynomial poly_lemma24(long long n, long long k);
Polynomial poly_f(long long m);
Polynomial poly_f1(long long m);
Polynomial poly_g(long long m);
Polynomial poly_h(long long m);
Polynomial poly_f2(long long m);
Polynomial poly_h1(long long m);
Polynomial poly_f3(long long m, long long t);
Polynomial poly_f4(long long m);
Polynomial poly_h2(long long m, long long t);

}  // namespace turan
