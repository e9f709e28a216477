// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is the number of failures.
//   acceptance                        all criteria
//   acceptance --criterion N          one criterion
//   acceptance --exhaustive-example3  exhaustive minimum distance of the 2^33-word cyclic code

#include <mixedcode/mixedcode.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic_oracle.hpp"
#include "random_codes.hpp"
#include "test_data.hpp"

using namespace mixedcode;

namespace {

// Runtime limits in seconds.
constexpr double kLimitExample1 = 1.0;
constexpr double kLimitExample2 = 5.0;
constexpr double kLimitDuality = 60.0;
constexpr double kLimitGray = 1.0;
constexpr double kLimitExample3 = 10.0;
constexpr double kLimitMinimality = 300.0;
constexpr double kLimitDualCyclic = 60.0;
constexpr double kLimitProperties = 60.0;

constexpr int kDualityCodes = 100;
constexpr std::size_t kDualityMaxBits = 16;
constexpr int kMinimalityCodes = 24;
constexpr std::size_t kMinimalityMaxLog2 = 18;
constexpr int kDualCyclicCodes = 12;
constexpr std::size_t kPropertyMaxBits = 12;

// Collects failed sub-checks of one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failed_.push_back(what);
    }
    bool ok() const { return failed_.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& f : failed_) s += (s.empty() ? "" : "; ") + f;
        return s;
    }

private:
    std::vector<std::string> failed_;
};

CodeType type_of(std::size_t a, std::size_t b, std::size_t t, std::array<std::size_t, 6> k) {
    CodeType c;
    c.alpha = a, c.beta = b, c.theta = t, c.k = k;
    return c;
}

Checks example1_standard_form() {
    Checks c;
    const MixedMatrix g = load_matrix("example1.mtx");
    const StandardForm sf = standard_form(g);
    c.expect(sf.type().to_string() == "(2,3,4;2;1,1;1,1,0)", "type is " + sf.type().to_string());
    const CodewordSet words = enumerate_codewords(sf);
    c.expect(words.size() == 1024, "enumeration gives " + std::to_string(words.size()) + " codewords");
    c.expect(cardinality(sf.type()).log2 == 10, "type formula gives 2^" + std::to_string(cardinality(sf.type()).log2));
    c.expect(words == span_closure(g), "enumeration differs from the additive closure of G");
    const CodewordSet reference = span_closure(load_matrix("example1_gs.mtx"));
    std::size_t shared = 0;
    for (std::uint64_t k : reference.keys()) shared += words.contains_key(k);
    c.expect(words == reference, "code is not set-equal to the span of the reference G_S (" +
                                     std::to_string(shared) + " of 1024 words shared)");
    return c;
}

Checks example2_dual() {
    Checks c;
    const MixedMatrix gs = load_matrix("example1_gs.mtx");
    const StandardFormBlocks blocks = StandardFormBlocks::from_matrix(gs, standard_form(gs).type());
    const MixedMatrix h = dual_matrix(blocks);
    const CodewordSet code = span_closure(gs);
    const CodewordSet dual = span_closure(h);
    c.expect(dual == span_closure(load_matrix("example2_h.mtx")), "span of H differs from the reference H_S");
    const CodeType t = standard_form(h).type();
    c.expect(t.to_string() == "(2,3,4;0;1,1;2,0,1)", "dual type is " + t.to_string());
    c.expect(dual.size() == 1024, "|dual| = " + std::to_string(dual.size()));
    const Packer& p = code.packer();
    std::size_t bad = 0;
    for (std::uint64_t x : code.keys())
        for (std::uint64_t y : dual.keys()) bad += p.inner_product(x, y) != 0;
    c.expect(code.size() * dual.size() == 1024 * 1024 && bad == 0,
             std::to_string(bad) + " nonzero inner products among " + std::to_string(code.size() * dual.size()));
    return c;
}

Checks duality_identity() {
    Checks c;
    std::mt19937_64 rng(2024);
    int wrong_size = 0, wrong_span = 0;
    for (int i = 0; i < kDualityCodes; ++i) {
        const AlphabetSplit s = oracle::random_split(rng, kDualityMaxBits);
        const MixedMatrix g = oracle::random_matrix(rng, s, 1 + rng() % 5);
        const CodewordSet code = span_closure(g);
        const CodewordSet dual = brute_force_dual(code);
        wrong_size += code.size() * dual.size() != (std::size_t{1} << s.ambient_log2());
        wrong_span += !(dual == span_closure(parity_check_matrix(g)));
    }
    c.expect(wrong_size == 0, std::to_string(wrong_size) + " codes break |C||C^perp| = 2^(a+2b+3t)");
    c.expect(wrong_span == 0, std::to_string(wrong_span) + " brute-force duals differ from the computed dual");
    return c;
}

Checks gray_tables() {
    Checks c;
    const char* phi1[] = {"00", "01", "11", "10"};
    const char* phi2[] = {"0000", "0001", "0011", "0111", "1111", "1110", "1100", "1000"};
    auto bits = [](auto arr) {
        std::string s;
        for (auto b : arr) s += char('0' + b);
        return s;
    };
    auto distance = [](const std::string& a, const std::string& b) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
        return d;
    };
    for (int v = 0; v < 4; ++v) {
        c.expect(bits(gray_phi1(Residue(v))) == phi1[v], "phi1(" + std::to_string(v) + ")");
        c.expect(distance(bits(gray_phi1(Residue(v))), bits(gray_phi1(Residue((v + 1) % 4)))) == 1,
                 "phi1 step at " + std::to_string(v));
    }
    for (int w = 0; w < 8; ++w) {
        const std::string b = bits(gray_phi2(Residue(w)));
        c.expect(b == phi2[w], "phi2(" + std::to_string(w) + ")");
        c.expect(std::size_t(std::count(b.begin(), b.end(), '1')) == std::size_t(std::min(w, 8 - w)),
                 "Lee weight of " + std::to_string(w));
        c.expect(distance(b, bits(gray_phi2(Residue((w + 1) % 8)))) == 1, "phi2 step at " + std::to_string(w));
    }
    return c;
}

Checks example3_pipeline() {
    Checks c;
    const CyclicGenerators g = load_generators("example3.gen");
    const ValidationReport rep = validate_generators(g);
    for (const auto& cond : rep.conditions) c.expect(cond.pass, "condition (" + cond.name + ") fails");
    if (!rep.ok()) return c;
    const DerivedCofactors d = derive_cofactors(g);
    c.expect(d.k == Poly(2, {1, 1}), "k = " + d.k.to_string() + ", expected 1+x");
    c.expect(d.h_p == Poly(3, {7, 5, 6, 1}), "h_p = " + d.h_p.to_string());
    c.expect(d.h_q == Poly(3, {1, 1, 1, 1, 1, 1, 1}), "h_q = " + d.h_q.to_string());
    c.expect(d.h1 == Poly(2, {3, 2, 3, 1}), "h_1 = " + d.h1.to_string());
    const SpanningSet ss = spanning_set(g);
    c.expect(ss.matrix == load_matrix("example3_matrix.mtx"), "spanning matrix differs from the reference rows");
    c.expect(cyclic_size(g).log2 == 33, "size 2^" + std::to_string(cyclic_size(g).log2));
    c.expect(ss.matrix.split().binary_length() == 57, "Gray length " + std::to_string(ss.matrix.split().binary_length()));
    const DistanceResult dist = search_min_gray_distance(ss.matrix, 0, 100000);
    const bool found4 = dist.witness && gray_weight(*dist.witness) == 4 && standard_form(ss.matrix).contains(*dist.witness);
    c.expect(found4, "bounded sweep found weight " + std::to_string(dist.distance));
    return c;
}

Checks minimality_and_size() {
    Checks c;
    std::mt19937_64 rng(77);
    const std::size_t lens[] = {3, 5, 7};
    int used = 0, invalid = 0, size_bad = 0, span_bad = 0, not_minimal = 0, not_cyclic = 0;
    std::string first_redundant;
    while (used < kMinimalityCodes) {
        const AlphabetSplit s(lens[rng() % 3], lens[rng() % 3], lens[rng() % 3]);
        std::vector<MixedVector> seeds;
        for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i)
            seeds.push_back(scalar_mul(1 << (rng() % 3), oracle::random_vector(rng, s)));
        const MixedMatrix shifts = oracle::shift_rows(seeds);
        if (cardinality(standard_form(shifts).type()).log2 > kMinimalityMaxLog2) continue;
        const CodewordSet code = span_closure(shifts);
        const auto g = oracle::canonical_generators(code);
        if (!g) {
            ++invalid;
            ++used;
            continue;
        }
        ++used;
        if (!validate_generators(*g).ok()) {
            ++invalid;
            continue;
        }
        const SpanningSet ss = spanning_set(*g);
        const CodewordSet span = span_closure(ss.matrix);
        size_bad += (std::size_t{1} << cyclic_size(*g).log2) != span.size() || span.size() != code.size();
        span_bad += !(span == code);
        for (std::size_t r = 0; r < ss.matrix.rows(); ++r)
            if (span_closure(ss.matrix.without_row(r)).size() == span.size()) {
                if (!not_minimal++)
                    first_redundant = "row " + std::to_string(r) + " of the set for " + s.to_string();
                break;
            }
        not_cyclic += !check_cyclic_closure(ss.matrix);
    }
    c.expect(invalid == 0, std::to_string(invalid) + " recovered generator sets are not valid");
    c.expect(size_bad == 0, std::to_string(size_bad) + " size mismatches");
    c.expect(span_bad == 0, std::to_string(span_bad) + " spans differ from the code");
    c.expect(not_minimal == 0, std::to_string(not_minimal) + " of " + std::to_string(used) +
                                   " spanning sets have a redundant row (first: " + first_redundant + ")");
    c.expect(not_cyclic == 0, std::to_string(not_cyclic) + " spans not closed under the shift");
    return c;
}

bool shift_closed(const CodewordSet& c) {
    const auto words = c.vectors();
    return std::all_of(words.begin(), words.end(), [&](const MixedVector& x) { return c.contains(cyclic_shift(x)); });
}

Checks dual_cyclicity() {
    Checks c;
    std::mt19937_64 rng(5);
    const AlphabetSplit s(3, 3, 3);
    int failures = 0, not_cyclic_input = 0;
    for (int i = 0; i < kDualCyclicCodes; ++i) {
        std::vector<MixedVector> seeds;
        for (std::size_t j = 0, n = 1 + rng() % 2; j < n; ++j)
            seeds.push_back(scalar_mul(1 << (rng() % 3), oracle::random_vector(rng, s)));
        const MixedMatrix m = oracle::shift_rows(seeds);
        const CodewordSet code = span_closure(m);
        not_cyclic_input += !shift_closed(code);
        const CodewordSet dual = brute_force_dual(code);
        failures += !(check_cyclic_closure(generating_set(dual)) && shift_closed(dual));
    }
    c.expect(not_cyclic_input == 0, std::to_string(not_cyclic_input) + " generated codes are not cyclic");
    c.expect(failures == 0, std::to_string(failures) + " duals are not cyclic");
    return c;
}

std::vector<AlphabetSplit> property_splits() {
    return {AlphabetSplit(1, 1, 1), AlphabetSplit(2, 2, 2), AlphabetSplit(3, 3, 1), AlphabetSplit(1, 1, 3)};
}

Checks property_suite() {
    Checks c;
    std::mt19937_64 rng(9);

    // <d x, y> = d <x, y>
    std::size_t bad_action = 0;
    for (const auto& s : property_splits()) {
        if (s.ambient_log2() > kPropertyMaxBits) continue;
        const Packer p(s);
        const std::uint64_t n = std::uint64_t{1} << p.bits();
        for (std::uint64_t x = 0; x < n; ++x)
            for (int d = 2; d < 8; ++d) {
                const std::uint64_t dx = p.scale(d, x);
                for (std::uint64_t y = 0; y < n; ++y)
                    bad_action += p.inner_product(dx, y) != (d * p.inner_product(x, y)) % 8;
            }
    }
    c.expect(bad_action == 0, std::to_string(bad_action) + " pairs break <dx, y> = d<x, y>");

    // star multiplication: representative independence, module laws, shift commutation
    std::size_t bad_star = 0, bad_shift = 0;
    auto random_poly = [&](int deg) {
        std::vector<int> co(deg + 1);
        for (int& v : co) v = static_cast<int>(rng() % 8);
        return Poly(3, co);
    };
    for (const auto& s : property_splits()) {
        const Packer p(s);
        const std::size_t lens[] = {s.alpha(), s.beta(), s.theta()};
        std::vector<Poly> ds{Poly(3, {1}), Poly::monomial(3, 1), Poly(3, {2, 0, 7})};
        for (int i = 0; i < 3; ++i) ds.push_back(random_poly(5));
        const Poly x = Poly::monomial(3, 1);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << p.bits()); ++k) {
            const PolyTriple t = from_vector(p.unpack(k));
            bad_shift += !(to_vector(star_mul(x, t)) == cyclic_shift(p.unpack(k)));
            const PolyTriple u = from_vector(p.unpack(rng() & ((std::uint64_t{1} << p.bits()) - 1)));
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const Poly& d = ds[i];
                const PolyTriple dt = star_mul(d, t);
                // unreduced product with a shifted representative of each component
                const ResiduePoly* parts[] = {&t.a, &t.b, &t.c};
                const ResiduePoly* got[] = {&dt.a, &dt.b, &dt.c};
                for (unsigned e = 1; e <= 3; ++e) {
                    const std::size_t n = lens[e - 1];
                    const Poly rep = parts[e - 1]->lift() + Poly::x_n_minus_1(e, n) * random_poly(2).in_ring(e);
                    bad_star += !(ResiduePoly(d.in_ring(e) * rep, n, e) == *got[e - 1]);
                }
                const Poly& d2 = ds[(i + 1) % ds.size()];
                bad_star += !(star_mul(d * d2, t) == star_mul(d, star_mul(d2, t)));
                bad_star += !(star_mul(d + d2, t) == star_mul(d, t) + star_mul(d2, t));
                bad_star += !(star_mul(d, t + u) == dt + star_mul(d, u));
            }
        }
    }
    c.expect(bad_star == 0, std::to_string(bad_star) + " star-multiplication identities fail");
    c.expect(bad_shift == 0, std::to_string(bad_shift) + " vectors where x * t differs from the shift");

    // dual type involution over every type of every split within the bound
    std::size_t bad_involution = 0;
    for (std::size_t a = 0; a <= kPropertyMaxBits; ++a)
        for (std::size_t b = 0; a + 2 * b <= kPropertyMaxBits; ++b)
            for (std::size_t th = 0; a + 2 * b + 3 * th <= kPropertyMaxBits; ++th)
                for (std::size_t k0 = 0; k0 <= a; ++k0)
                    for (std::size_t k1 = 0; k1 <= b; ++k1)
                        for (std::size_t k2 = 0; k1 + k2 <= b; ++k2)
                            for (std::size_t k3 = 0; k3 <= th; ++k3)
                                for (std::size_t k4 = 0; k3 + k4 <= th; ++k4)
                                    for (std::size_t k5 = 0; k3 + k4 + k5 <= th; ++k5) {
                                        const CodeType t = type_of(a, b, th, {k0, k1, k2, k3, k4, k5});
                                        bad_involution += !(dual_type(dual_type(t)) == t) || !dual_type(t).valid();
                                    }
    c.expect(bad_involution == 0, std::to_string(bad_involution) + " types break the dual type involution");

    // standard form preserves the span: every one-row matrix, and every two-row matrix on a 2^6 space
    std::size_t bad_span = 0;
    for (const auto& s : property_splits()) {
        const Packer p(s);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << p.bits()); ++k) {
            const MixedMatrix g(s, {p.unpack(k)});
            bad_span += !(enumerate_codewords(standard_form(g)) == span_closure(g));
        }
    }
    {
        const AlphabetSplit s(1, 1, 1);
        const Packer p(s);
        for (std::uint64_t k1 = 0; k1 < 64; ++k1)
            for (std::uint64_t k2 = 0; k2 < 64; ++k2) {
                const MixedMatrix g(s, {p.unpack(k1), p.unpack(k2)});
                bad_span += !(enumerate_codewords(standard_form(g)) == span_closure(g));
            }
    }
    c.expect(bad_span == 0, std::to_string(bad_span) + " matrices whose standard form changes the span");
    return c;
}

// Minimum Gray weight over all 2^33 codewords: a walk that adds one row per step.
int exhaustive_example3() {
    const SpanningSet ss = spanning_set(load_generators("example3.gen"));
    const StandardForm sf = standard_form(ss.matrix);
    const Packer p(sf.matrix.split());
    std::vector<std::uint64_t> rows;
    std::vector<unsigned> order;
    for (const auto& r : sf.matrix.row_list()) {
        rows.push_back(p.pack(r));
        order.push_back(r.order());
    }
    std::vector<unsigned> digit(rows.size(), 0);
    std::uint64_t key = 0;
    std::size_t best = SIZE_MAX;
    std::uint64_t count = 0;
    for (;;) {
        std::size_t i = 0;
        // advance the mixed-radix counter; a wrapping digit also adds its row (ord * row = 0)
        while (i < rows.size()) {
            key = p.add(key, rows[i]);
            if (++digit[i] < order[i]) break;
            digit[i] = 0;
            ++i;
        }
        if (i == rows.size()) break;
        ++count;
        best = std::min(best, p.gray_weight(key));
    }
    std::printf("%s exhaustive minimum distance over %llu nonzero codewords: %zu\n", best == 4 ? "PASS" : "FAIL",
                static_cast<unsigned long long>(count), best);
    return best == 4 ? 0 : 1;
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Checks()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "Example 1 standard form", kLimitExample1, example1_standard_form},
        {2, "Example 2 dual", kLimitExample2, example2_dual},
        {3, "Duality identity", kLimitDuality, duality_identity},
        {4, "Gray tables", kLimitGray, gray_tables},
        {5, "Example 3 cyclic pipeline", kLimitExample3, example3_pipeline},
        {6, "Minimality and size oracle", kLimitMinimality, minimality_and_size},
        {7, "Dual cyclicity", kLimitDualCyclic, dual_cyclicity},
        {8, "Property suite", kLimitProperties, property_suite},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--exhaustive-example3")) return exhaustive_example3();
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N | --exhaustive-example3]\n");
            return 2;
        }
    }
    int failures = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Checks result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.expect(secs < c.limit, "runtime exceeds " + std::to_string(int(c.limit)) + " s");
        std::printf("%s [%d] %s (%.2f s)%s%s\n", result.ok() ? "PASS" : "FAIL", c.id, c.name, secs,
                    result.ok() ? "" : ": ", result.summary().c_str());
        failures += !result.ok();
    }
    return failures;
}
