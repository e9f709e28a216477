#include "mixedcode/cyclic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "mixedcode/errors.hpp"

namespace mixedcode {

namespace {

// Z_{2^e}-multiple of the unit leading coefficient's inverse; odd residues are self-inverse.
Poly make_monic(const Poly& d, const char* name) {
    if (d.leading() % 2 == 0)
        throw IndeterminateDivision(std::string("polynomial ") + name + " = " + d.to_string() +
                                    " has non-unit leading coefficient");
    return d.scaled(d.leading());
}

Poly resolve_divisor(const Poly& d, std::size_t n, const char* name) {
    if (d.is_zero()) return Poly::x_n_minus_1(d.exponent(), n);
    return make_monic(d, name);
}

ConditionResult check(std::string name, std::string statement, const Poly& divisor, const Poly& dividend) {
    ConditionResult c{std::move(name), std::move(statement), false, divmod(dividend, divisor).remainder, {}};
    c.pass = c.remainder.is_zero();
    return c;
}

ConditionResult skipped(std::string name, std::string statement, const std::string& needs) {
    ConditionResult c{std::move(name), std::move(statement), false, Poly(3), {}};
    c.note = "not evaluated: requires condition (" + needs + ")";
    return c;
}

ConditionResult combine(ConditionResult first, ConditionResult second) {
    return first.pass ? second : first;
}

// ((x^theta - 1) / r) over Z8, read over Z4 or Z2.
Poly theta_cofactor(const CyclicGenerators& g) { return exact_quotient(Poly::x_n_minus_1(3, g.split.theta()), g.r); }

struct IdealQuotient {
    std::optional<Poly> k;
    Poly witness{2};
};

// Some k with k (g1 + 2a1) = h in Z4[x]/(x^beta - 1). The ideal equals <g1, 2a1>: write
// h = u g1 + 2 v a1, then use k_a (g1 + 2a1) = 2a1 with k_a = h1 w + 2t, where t b1 + w h1 = 1
// over Z2. Requires a1 | g1 | x^beta - 1.
IdealQuotient quotient_in_ideal(const Poly& h_in, const Poly& g1, const Poly& a1, std::size_t beta) {
    const Poly h = reduce_mod_xn1(h_in, beta);
    const DivMod ud = divmod(h, g1);
    IdealQuotient out;
    for (Residue c : ud.remainder.coeffs())
        if (c % 2) {
            out.witness = ud.remainder;
            return out;
        }
    std::vector<int> halves;
    for (Residue c : ud.remainder.coeffs()) halves.push_back(c / 2);
    const DivMod vd = divmod(Poly(1, halves), a1.in_ring(1));
    if (!vd.remainder.is_zero()) {
        out.witness = vd.remainder.in_ring(2).scaled(2);
        return out;
    }
    const Poly xn = Poly::x_n_minus_1(2, beta);
    const Poly h1 = exact_quotient(xn, g1);
    const Bezout bz = xgcd(exact_quotient(g1.in_ring(1), a1.in_ring(1)), h1.in_ring(1));
    if (!(bz.gcd == Poly(1, {1}))) throw std::logic_error("quotient_in_ideal: b1 and h1 are not coprime mod 2");
    const Poly ka = h1 * bz.t.in_ring(2) + bz.s.in_ring(2).scaled(2);
    const Poly one(2, {1});
    const Poly k = reduce_mod_xn1(ud.quotient * (one - ka) + vd.quotient.in_ring(2) * ka, beta);
    if (!(reduce_mod_xn1(k * (g1 + a1.scaled(2)), beta) == h))
        throw std::logic_error("quotient_in_ideal: constructed k does not reproduce " + h.to_string());
    out.k = k;
    return out;
}

} // namespace

CyclicGenerators::CyclicGenerators(const AlphabetSplit& s) : split(s) {
    for (std::size_t n : {s.alpha(), s.beta(), s.theta()})
        if (n % 2 == 0)
            throw InputError("cyclic codes need odd lengths, got split " + s.to_string());
}

CyclicGenerators resolve_generators(const CyclicGenerators& in) {
    CyclicGenerators g = in;
    g.f = resolve_divisor(in.f, in.split.alpha(), "f");
    g.g1 = resolve_divisor(in.g1, in.split.beta(), "g1");
    g.a1 = in.a1.is_zero() ? g.g1 : make_monic(in.a1, "a1");
    g.p = resolve_divisor(in.p, in.split.theta(), "p");
    g.q = in.q.is_zero() ? g.p : make_monic(in.q, "q");
    g.r = in.r.is_zero() ? g.q : make_monic(in.r, "r");
    return g;
}

bool ValidationReport::ok() const noexcept {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

const ConditionResult* ValidationReport::first_failure() const noexcept {
    for (const auto& c : conditions)
        if (!c.pass) return &c;
    return nullptr;
}

ValidationReport validate_generators(const CyclicGenerators& in) {
    const CyclicGenerators g = resolve_generators(in);
    const std::size_t a = g.split.alpha(), b = g.split.beta(), t = g.split.theta();
    ValidationReport rep;
    auto& c = rep.conditions;

    c[0] = check("i", "f | x^alpha - 1 mod 2", g.f, Poly::x_n_minus_1(1, a));
    c[1] = combine(check("ii", "a1 | g1 | x^beta - 1 mod 4", g.a1, g.g1),
                   check("ii", "a1 | g1 | x^beta - 1 mod 4", g.g1, Poly::x_n_minus_1(2, b)));
    const char* s3 = "r | q | p | x^theta - 1 mod 8";
    c[2] = combine(check("iii", s3, g.r, g.q),
                   combine(check("iii", s3, g.q, g.p), check("iii", s3, g.p, Poly::x_n_minus_1(3, t))));

    const char* s4 = "f | ((x^beta - 1)/a1) l1 mod 2";
    if (c[1].pass)
        c[3] = check("iv", s4, g.f, exact_quotient(Poly::x_n_minus_1(2, b), g.a1).in_ring(1) * g.l1);
    else
        c[3] = skipped("iv", s4, "ii");

    const char* s5 = "(g1 + 2a1) | ((x^theta - 1)/r) g2 in Z4[x]/(x^beta - 1)";
    const char* s6 = "f | k l1 + ((x^theta - 1)/r) l2 mod 2";
    if (c[1].pass && c[2].pass) {
        const Poly xr = theta_cofactor(g);
        const IdealQuotient kq = quotient_in_ideal(xr.in_ring(2) * g.g2, g.g1, g.a1, b);
        c[4] = ConditionResult{"v", s5, kq.k.has_value(), kq.witness, {}};
        if (kq.k)
            c[5] = check("vi", s6, g.f, kq.k->in_ring(1) * g.l1 + xr.in_ring(1) * g.l2);
        else
            c[5] = skipped("vi", s6, "v");
    } else {
        const std::string needs = c[1].pass ? "iii" : "ii";
        c[4] = skipped("v", s5, needs);
        c[5] = skipped("vi", s6, needs);
    }
    return rep;
}

Poly compute_k(const CyclicGenerators& in) {
    const CyclicGenerators g = resolve_generators(in);
    const ValidationReport rep = validate_generators(g);
    for (std::size_t i : {1, 2, 4})
        if (!rep.conditions[i].pass)
            throw ValidationError("k is undefined: condition (" + rep.conditions[i].name + ") fails");
    const IdealQuotient kq = quotient_in_ideal(theta_cofactor(g).in_ring(2) * g.g2, g.g1, g.a1, g.split.beta());
    return *kq.k;
}

namespace {

void require_valid(const CyclicGenerators& g) {
    const ValidationReport rep = validate_generators(g);
    if (const ConditionResult* bad = rep.first_failure())
        throw ValidationError("condition (" + bad->name + ") " + bad->statement + " fails" +
                              (bad->note.empty() ? ": remainder " + bad->remainder.to_string() : ": " + bad->note));
}

} // namespace

DerivedCofactors derive_cofactors(const CyclicGenerators& in) {
    require_valid(in);
    const CyclicGenerators g = resolve_generators(in);
    const std::size_t a = g.split.alpha(), b = g.split.beta(), t = g.split.theta();
    DerivedCofactors d;
    d.h_f = exact_quotient(Poly::x_n_minus_1(1, a), g.f);
    d.h1 = exact_quotient(Poly::x_n_minus_1(2, b), g.g1);
    d.b1 = exact_quotient(g.g1, g.a1);
    d.h_p = exact_quotient(Poly::x_n_minus_1(3, t), g.p);
    d.h_q = exact_quotient(Poly::x_n_minus_1(3, t), g.q);
    d.qhat = exact_quotient(g.p, g.q);
    d.rhat = exact_quotient(g.q, g.r);
    d.k = compute_k(g);
    return d;
}

CyclicGenerators normalize_generators(const CyclicGenerators& in) {
    CyclicGenerators g = resolve_generators(in);
    const Poly gen2 = g.g1 + g.a1.scaled(2);
    const DivMod gd = divmod(g.g2, gen2);
    g.g2 = gd.remainder;
    g.l2 = g.l2 - gd.quotient.in_ring(1) * g.l1;
    g.l1 = divmod(g.l1, g.f).remainder;
    g.l2 = divmod(g.l2, g.f).remainder;
    return g;
}

SpanningSet spanning_set(const CyclicGenerators& in) {
    const CyclicGenerators g = normalize_generators(in);
    const DerivedCofactors d = derive_cofactors(g);
    const AlphabetSplit& sp = g.split;
    const Poly zero2(1), zero4(2), zero8(3);

    const Poly hp2 = d.h_p.in_ring(1), hp4 = d.h_p.in_ring(2);
    const Poly hq2 = d.h_q.in_ring(1), hq4 = d.h_q.in_ring(2);
    const Poly h1_2 = d.h1.in_ring(1);

    const std::array<PolyTriple, 6> base{
        PolyTriple(sp, g.f, zero4, zero8),
        PolyTriple(sp, g.l1, g.g1 + g.a1.scaled(2), zero8),
        PolyTriple(sp, g.l2, g.g2, g.p + g.q.scaled(2) + g.r.scaled(4)),
        PolyTriple(sp, hp2 * g.l2, hp4 * g.g2, (d.h_p * (g.q + g.r.scaled(2))).scaled(2)),
        PolyTriple(sp, hq2 * g.l2, hq4 * g.g2, (d.h_q * g.r).scaled(4)),
        PolyTriple(sp, h1_2 * g.l1, (g.a1 * d.h1).scaled(2), zero8),
    };
    const std::array<int, 6> count{d.h_f.degree(), d.h1.degree(), d.h_p.degree(),
                                   d.qhat.degree(), d.rhat.degree(), d.b1.degree()};

    SpanningSet out{{}, MixedMatrix(sp)};
    for (std::size_t s = 0; s < 6; ++s)
        for (int i = 0; i < count[s]; ++i)
            out.groups[s].push_back(to_vector(star_mul(Poly::monomial(3, static_cast<std::size_t>(i)), base[s])));
    for (std::size_t s : {0, 1, 2, 5, 3, 4})
        for (const auto& v : out.groups[s]) out.matrix.append(v);
    return out;
}

Cardinality cyclic_size(const CyclicGenerators& g) {
    const DerivedCofactors d = derive_cofactors(g);
    const int log2 = d.h_f.degree() + 2 * d.h1.degree() + 3 * d.h_p.degree() + 2 * d.qhat.degree() +
                     d.rhat.degree() + d.b1.degree();
    return Cardinality{static_cast<std::size_t>(log2)};
}

MixedVector cyclic_shift(const MixedVector& c) {
    MixedVector out(c.split());
    for (Block b : {Block::Z2, Block::Z4, Block::Z8}) {
        const std::size_t off = c.split().offset(b), n = c.split().size(b);
        for (std::size_t i = 0; i < n; ++i) out.set(off + (i + 1) % n, c[off + i]);
    }
    return out;
}

std::optional<std::size_t> first_non_cyclic_row(const MixedMatrix& m) {
    const StandardForm form = standard_form(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!form.contains(cyclic_shift(m.row(i)))) return i;
    return std::nullopt;
}

} // namespace mixedcode
