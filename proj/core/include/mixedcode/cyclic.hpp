#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mixedcode/matrix.hpp"
#include "mixedcode/poly.hpp"

namespace mixedcode {

/// Generators (f, 0, 0), (l1, g1 + 2a1, 0), (l2, g2, p + 2q + 4r) of a cyclic code.
/// f, l1, l2 live over Z2; g1, a1, g2 over Z4; p, q, r over Z8.
struct CyclicGenerators {
    AlphabetSplit split;
    Poly f{1}, l1{1}, l2{1};
    Poly g1{2}, a1{2}, g2{2};
    Poly p{3}, q{3}, r{3};

    /// Throws InputError unless alpha, beta and theta are all odd.
    explicit CyclicGenerators(const AlphabetSplit& split);
};

/// Applies the input conventions: zero f, g1 or p stands for x^n - 1, zero a1 for g1, zero q for p
/// and zero r for q. Divisors with a unit leading coefficient other than 1 are made monic. Throws
/// IndeterminateDivision naming the polynomial when a leading coefficient is even.
CyclicGenerators resolve_generators(const CyclicGenerators& g);

struct ConditionResult {
    std::string name;      // "i" .. "vi"
    std::string statement; // the divisibility being tested
    bool pass = false;
    Poly remainder{3};     // the failing remainder, zero on success
    std::string note;
};

struct ValidationReport {
    std::array<ConditionResult, 6> conditions;
    bool ok() const noexcept;
    /// First failing condition, if any.
    const ConditionResult* first_failure() const noexcept;
};

/// Checks the six conditions. (i)-(iv) are divisibility in Z_{2^e}[x]; (v) is membership in the
/// ideal generated by g1 + 2a1 in Z4[x]/(x^beta - 1), and (vi) uses the resulting k.
///   (i)   f | x^alpha - 1                                  mod 2
///   (ii)  a1 | g1 | x^beta - 1                             mod 4
///   (iii) r | q | p | x^theta - 1                          mod 8
///   (iv)  f | ((x^beta - 1)/a1) l1                         mod 2
///   (v)   (g1 + 2a1) | ((x^theta - 1)/r) g2                mod 4, x^beta - 1
///   (vi)  f | k l1 + ((x^theta - 1)/r) l2                  mod 2
ValidationReport validate_generators(const CyclicGenerators& g);

/// Some k of degree < beta with k (g1 + 2a1) = ((x^theta - 1)/r) g2 in Z4[x]/(x^beta - 1).
/// Throws ValidationError when (ii), (iii) or (v) fails.
Poly compute_k(const CyclicGenerators& g);

struct DerivedCofactors {
    Poly h_f{1}, h1{2}, b1{2}, h_p{3}, h_q{3}, qhat{3}, rhat{3}, k{2};
};
/// Throws ValidationError when a condition fails.
DerivedCofactors derive_cofactors(const CyclicGenerators& g);

/// Reduces g2 modulo g1 + 2a1 (moving the multiple of l1 into l2), then l1 and l2 modulo f.
/// The generated code is unchanged.
CyclicGenerators normalize_generators(const CyclicGenerators& g);

struct SpanningSet {
    /// S1 .. S6
    std::array<std::vector<MixedVector>, 6> groups;
    /// Rows in the order S1, S2, S3, S6, S4, S5.
    MixedMatrix matrix;
};

/// x^i * (f,0,0), i < deg h_f;              x^i * (l1, g1+2a1, 0), i < deg h1;
/// x^i * (l2, g2, p+2q+4r), i < deg h_p;    x^i * (h_p l2, h_p g2, 2h_p(q+2r)), i < deg qhat;
/// x^i * (h_q l2, h_q g2, 4h_q r), i < deg rhat;  x^i * (h1 l1, 2a1 h1, 0), i < deg b1.
SpanningSet spanning_set(const CyclicGenerators& g);

/// 2^(deg h_f + 2 deg h1 + 3 deg h_p + 2 deg qhat + deg rhat + deg b1)
Cardinality cyclic_size(const CyclicGenerators& g);

/// Rotates each block right by one position.
MixedVector cyclic_shift(const MixedVector& c);

/// Index of the first row whose shift leaves the span of m.
std::optional<std::size_t> first_non_cyclic_row(const MixedMatrix& m);
inline bool check_cyclic_closure(const MixedMatrix& m) { return !first_non_cyclic_row(m); }

} // namespace mixedcode
