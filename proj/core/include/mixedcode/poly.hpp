#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mixedcode/ring.hpp"

namespace mixedcode {

/// Polynomial in Z_{2^e}[x], e in {1, 2, 3}. Coefficients ascending and trimmed.
class Poly {
public:
    explicit Poly(unsigned e = 3);
    Poly(unsigned e, const std::vector<int>& coeffs);

    static Poly monomial(unsigned e, std::size_t degree, int coeff = 1);
    /// x^n - 1
    static Poly x_n_minus_1(unsigned e, std::size_t n);

    unsigned exponent() const noexcept { return e_; }
    unsigned modulus() const noexcept { return 1u << e_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Residue{0}; }
    Residue leading() const noexcept { return c_.empty() ? Residue{0} : c_.back(); }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }

    /// Same integer coefficients read in Z_{2^e}.
    Poly in_ring(unsigned e) const;
    Poly scaled(int d) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const { return scaled(-1); }
    Poly operator*(const Poly& o) const;

    /// "1+5x+7x^2+2x^3+x^4"; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    unsigned e_;
    std::vector<Residue> c_;
};

struct DivMod {
    Poly quotient, remainder;
};

/// Long division in Z_{2^e}[x]. Throws IndeterminateDivision when den is zero or its leading
/// coefficient is even.
DivMod divmod(const Poly& num, const Poly& den);
/// Whether a divides b in Z_{2^e}[x]; same preconditions as divmod.
bool divides(const Poly& a, const Poly& b);
/// The quotient b / a; throws IndeterminateDivision when the remainder is nonzero.
Poly exact_quotient(const Poly& b, const Poly& a);

/// s a + t b = gcd(a, b) over Z2 (e = 1 only); gcd is monic.
struct Bezout {
    Poly s{1}, t{1}, gcd{1};
};
Bezout xgcd(const Poly& a, const Poly& b);

/// Remainder of p modulo x^n - 1, as a polynomial of degree < n.
Poly reduce_mod_xn1(const Poly& p, std::size_t n);

/// Element of Z_{2^e}[x] / (x^n - 1), stored as n coefficients.
class ResiduePoly {
public:
    ResiduePoly(unsigned e, std::size_t n);
    /// Reduces p modulo x^n - 1 and modulo 2^e.
    ResiduePoly(const Poly& p, std::size_t n, unsigned e);
    ResiduePoly(const Poly& p, std::size_t n) : ResiduePoly(p, n, p.exponent()) {}

    unsigned exponent() const noexcept { return e_; }
    std::size_t length() const noexcept { return c_.size(); }
    Residue operator[](std::size_t i) const noexcept { return c_[i]; }
    void set(std::size_t i, int value) noexcept;
    const std::vector<Residue>& coeffs() const noexcept { return c_; }

    /// Lowest-degree representative.
    Poly lift() const { return Poly(e_, std::vector<int>(c_.begin(), c_.end())); }

    ResiduePoly operator+(const ResiduePoly& o) const;
    ResiduePoly operator*(const ResiduePoly& o) const;

    friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;

private:
    void require_compatible(const ResiduePoly& o, const char* op) const;
    unsigned e_;
    std::vector<Residue> c_;
};

/// Product reduced modulo 2^e and x^n - 1.
ResiduePoly poly_mul_mod(const ResiduePoly& x, const ResiduePoly& y);

/// Element (a, b, c) of Z2[x]/(x^alpha-1) x Z4[x]/(x^beta-1) x Z8[x]/(x^theta-1).
struct PolyTriple {
    ResiduePoly a, b, c;

    explicit PolyTriple(const AlphabetSplit& split);
    PolyTriple(const AlphabetSplit& split, const Poly& a, const Poly& b, const Poly& c);

    AlphabetSplit split() const { return {a.length(), b.length(), c.length()}; }
    PolyTriple operator+(const PolyTriple& o) const;
    friend bool operator==(const PolyTriple&, const PolyTriple&) = default;
};

/// d * (a, b, c) = (d a mod 2, d b mod 4, d c mod 8), each modulo its x^n - 1.
PolyTriple star_mul(const Poly& d, const PolyTriple& t);

MixedVector to_vector(const PolyTriple& t);
PolyTriple from_vector(const MixedVector& v);

} // namespace mixedcode
