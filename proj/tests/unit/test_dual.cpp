#include "doctest.h"

#include <mixedcode/mixedcode.hpp>

#include "random_codes.hpp"
#include "test_data.hpp"
#include "type_oracle.hpp"

using namespace mixedcode;

TEST_CASE("parity-check matrix from the reference standard-form blocks") {
    const MixedMatrix gs = load_matrix("example1_gs.mtx");
    const MixedMatrix printed_h = load_matrix("example2_h.mtx");
    const StandardFormBlocks blocks = StandardFormBlocks::from_matrix(gs, standard_form(gs).type());
    const MixedMatrix h = dual_matrix(blocks);
    CHECK(h == printed_h);
    CHECK(verify_orthogonality(gs, h));
    CHECK(span_closure(h) == brute_force_dual(span_closure(gs)));
    CHECK(standard_form(h).type().to_string() == "(2,3,4;0;1,1;2,0,1)");
}

TEST_CASE("dual of the worked example") {
    const MixedMatrix g = load_matrix("example1.mtx");
    const StandardForm sf = standard_form(g);
    const MixedMatrix h = parity_check_matrix(g);
    CHECK_FALSE(find_non_orthogonal(g, h));
    const CodewordSet c = span_closure(g);
    const CodewordSet d = enumerate_codewords(h);
    CHECK(d.size() == 1024);
    CHECK(d == brute_force_dual(c));
    CHECK(standard_form(h).type() == dual_type(sf.type()));
    CHECK(oracle::type_from_invariants(d) == dual_type(sf.type()));
}

TEST_CASE("computed dual equals the brute-force dual on random codes") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const AlphabetSplit s = oracle::random_split(rng, 12);
        const MixedMatrix g = oracle::random_matrix(rng, s, 1 + rng() % 4);
        INFO(g.to_string());
        const MixedMatrix h = parity_check_matrix(g);
        REQUIRE_FALSE(find_non_orthogonal(g, h));
        const CodewordSet c = span_closure(g);
        const CodewordSet d = brute_force_dual(c);
        REQUIRE(enumerate_codewords(h) == d);
        REQUIRE(c.size() * d.size() == (std::size_t{1} << s.ambient_log2()));
        REQUIRE(brute_force_dual(d) == c);
    }
}

TEST_CASE("predicted dual type can differ from the actual dual type") {
    // <(1 | 2)> over split (1,0,1) is self-dual
    const AlphabetSplit s(1, 0, 1);
    const MixedMatrix g(s, {{1, 2}});
    const CodeType t = standard_form(g).type();
    CHECK(t.to_string() == "(1,0,1;0;0,0;0,1,0)");
    const CodewordSet c = span_closure(g);
    CHECK(brute_force_dual(c) == c);
    CHECK(standard_form(parity_check_matrix(g)).type() == t);
    CHECK(dual_type(t).to_string() == "(1,0,1;1;0,0;0,0,1)");
    CHECK(cardinality(dual_type(t)) == cardinality(t));
}

TEST_CASE("orthogonality witness") {
    const AlphabetSplit s(1, 1, 1);
    const MixedMatrix g(s, {{1, 0, 0}, {0, 1, 0}});
    const MixedMatrix h(s, {{0, 2, 0}, {0, 1, 0}});
    const auto w = find_non_orthogonal(g, h);
    REQUIRE(w);
    CHECK(w->g_row == 1);
    CHECK(w->h_row == 0);
    CHECK(w->value == 4);
    CHECK_FALSE(verify_orthogonality(g, h));
}
