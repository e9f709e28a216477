#include "mixedcode/poly.hpp"

#include "mixedcode/errors.hpp"

#include <utility>

namespace mixedcode {

namespace {

Residue reduce(long long value, unsigned e) noexcept {
    const long long m = 1LL << e;
    return static_cast<Residue>(((value % m) + m) % m);
}

void require_exponent(unsigned e) {
    if (e < 1 || e > 3) throw DimensionError("coefficient ring Z_{2^" + std::to_string(e) + "} is not supported");
}

void require_same_ring(const Poly& a, const Poly& b, const char* op) {
    if (a.exponent() != b.exponent())
        throw DimensionError(std::string(op) + ": polynomials over Z" + std::to_string(a.modulus()) + " and Z" +
                             std::to_string(b.modulus()));
}

} // namespace

Poly::Poly(unsigned e) : e_(e) { require_exponent(e); }

Poly::Poly(unsigned e, const std::vector<int>& coeffs) : e_(e) {
    require_exponent(e);
    c_.reserve(coeffs.size());
    for (int v : coeffs) c_.push_back(reduce(v, e));
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(unsigned e, std::size_t degree, int coeff) {
    std::vector<int> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(e, c);
}

Poly Poly::x_n_minus_1(unsigned e, std::size_t n) { return monomial(e, n) - Poly(e, {1}); }

Poly Poly::in_ring(unsigned e) const { return Poly(e, std::vector<int>(c_.begin(), c_.end())); }

Poly Poly::scaled(int d) const {
    std::vector<int> c(c_.begin(), c_.end());
    for (int& v : c) v *= d;
    return Poly(e_, c);
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o, "add");
    std::vector<int> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(e_, c);
}

Poly Poly::operator-(const Poly& o) const {
    require_same_ring(*this, o, "subtract");
    std::vector<int> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(e_, c);
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o, "multiply");
    if (is_zero() || o.is_zero()) return Poly(e_);
    std::vector<int> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(e_, c);
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!out.empty()) out += '+';
        if (c_[i] != 1 || i == 0) out += std::to_string(int(c_[i]));
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

DivMod divmod(const Poly& num, const Poly& den) {
    require_same_ring(num, den, "divmod");
    if (den.is_zero()) throw IndeterminateDivision("division by the zero polynomial");
    if (den.leading() % 2 == 0)
        throw IndeterminateDivision("divisor " + den.to_string() + " has non-unit leading coefficient " +
                                    std::to_string(int(den.leading())));
    const unsigned e = num.exponent();
    // odd residues mod 2, 4 and 8 are their own inverses
    const int inv = den.leading();
    Poly q(e), r = num;
    while (r.degree() >= den.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - den.degree());
        const Poly term = Poly::monomial(e, shift, r.leading() * inv);
        q = q + term;
        r = r - term * den;
    }
    return {q, r};
}

bool divides(const Poly& a, const Poly& b) { return divmod(b, a).remainder.is_zero(); }

Poly exact_quotient(const Poly& b, const Poly& a) {
    DivMod d = divmod(b, a);
    if (!d.remainder.is_zero())
        throw IndeterminateDivision(a.to_string() + " does not divide " + b.to_string() + " over Z" +
                                    std::to_string(a.modulus()) + ", remainder " + d.remainder.to_string());
    return d.quotient;
}

Bezout xgcd(const Poly& a, const Poly& b) {
    if (a.exponent() != 1 || b.exponent() != 1) throw DimensionError("xgcd is only defined over Z2");
    Poly r0 = a, r1 = b, s0(1, {1}), s1(1), t0(1), t1(1, {1});
    while (!r1.is_zero()) {
        const DivMod d = divmod(r0, r1);
        r0 = std::exchange(r1, d.remainder);
        s0 = std::exchange(s1, s0 - d.quotient * s1);
        t0 = std::exchange(t1, t0 - d.quotient * t1);
    }
    return {s0, t0, r0};
}

Poly reduce_mod_xn1(const Poly& p, std::size_t n) { return ResiduePoly(p, n).lift(); }

ResiduePoly::ResiduePoly(unsigned e, std::size_t n) : e_(e), c_(n, 0) { require_exponent(e); }

ResiduePoly::ResiduePoly(const Poly& p, std::size_t n, unsigned e) : ResiduePoly(e, n) {
    if (n == 0) return;
    std::vector<long long> acc(n, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) acc[i % n] += p.coeffs()[i];
    for (std::size_t i = 0; i < n; ++i) c_[i] = reduce(acc[i], e);
}

void ResiduePoly::set(std::size_t i, int value) noexcept { c_[i] = reduce(value, e_); }

void ResiduePoly::require_compatible(const ResiduePoly& o, const char* op) const {
    if (e_ != o.e_ || c_.size() != o.c_.size())
        throw DimensionError(std::string(op) + ": residue polynomials from different rings");
}

ResiduePoly ResiduePoly::operator+(const ResiduePoly& o) const {
    require_compatible(o, "add");
    ResiduePoly r(e_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.set(i, c_[i] + o.c_[i]);
    return r;
}

ResiduePoly ResiduePoly::operator*(const ResiduePoly& o) const {
    require_compatible(o, "multiply");
    const std::size_t n = c_.size();
    std::vector<long long> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < n; ++j) acc[(i + j) % n] += c_[i] * o.c_[j];
    }
    ResiduePoly r(e_, n);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = reduce(acc[i], e_);
    return r;
}

ResiduePoly poly_mul_mod(const ResiduePoly& x, const ResiduePoly& y) { return x * y; }

PolyTriple::PolyTriple(const AlphabetSplit& split)
    : a(1, split.alpha()), b(2, split.beta()), c(3, split.theta()) {}

PolyTriple::PolyTriple(const AlphabetSplit& split, const Poly& pa, const Poly& pb, const Poly& pc)
    : a(pa, split.alpha(), 1), b(pb, split.beta(), 2), c(pc, split.theta(), 3) {}

PolyTriple PolyTriple::operator+(const PolyTriple& o) const {
    PolyTriple r = *this;
    r.a = a + o.a;
    r.b = b + o.b;
    r.c = c + o.c;
    return r;
}

PolyTriple star_mul(const Poly& d, const PolyTriple& t) {
    PolyTriple r = t;
    r.a = ResiduePoly(d, t.a.length(), 1) * t.a;
    r.b = ResiduePoly(d, t.b.length(), 2) * t.b;
    r.c = ResiduePoly(d, t.c.length(), 3) * t.c;
    return r;
}

MixedVector to_vector(const PolyTriple& t) {
    const AlphabetSplit split = t.split();
    MixedVector v(split);
    std::size_t pos = 0;
    for (const ResiduePoly* part : {&t.a, &t.b, &t.c})
        for (Residue r : part->coeffs()) v.set(pos++, r);
    return v;
}

PolyTriple from_vector(const MixedVector& v) {
    PolyTriple t(v.split());
    for (std::size_t i = 0; i < v.split().alpha(); ++i) t.a.set(i, v.u()[i]);
    for (std::size_t i = 0; i < v.split().beta(); ++i) t.b.set(i, v.v()[i]);
    for (std::size_t i = 0; i < v.split().theta(); ++i) t.c.set(i, v.w()[i]);
    return t;
}

} // namespace mixedcode
