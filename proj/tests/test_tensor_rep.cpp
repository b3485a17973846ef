#include "doctest.h"

#include "bcoend/random.hpp"
#include "bcoend/tensor_rep.hpp"

using namespace bcoend;

TEST_CASE("tensor words") {
    CHECK(tensor_dim(FiniteSetPair::standard(2, 1), 3) == 27);
    for (std::uint64_t i = 0; i < 27; ++i) CHECK(tensor_index(tensor_word(i, 3, 3), 3) == i);
    CHECK(tensor_word(5, 3, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("loop evaluates to n") {
    FiniteSetPair e{};
    auto ins = WalledDiagram::insertion(e, 1, 1);
    auto con = WalledDiagram::contraction(ins.target(), 1, 1);
    for (int n = 1; n <= 5; ++n) {
        RationalMatrix m = K_on_morphism(con, n) * K_on_morphism(ins, n);
        REQUIRE(m.rows() == 1);
        CHECK(m.get(0, 0) == n);
    }
}

TEST_CASE("zigzag is the identity on H") {
    FiniteSetPair one({1}, {});
    auto ins = WalledDiagram::insertion(one, 2, 1);
    auto con = WalledDiagram::contraction(ins.target(), 1, 1);
    for (int n = 1; n <= 4; ++n) CHECK(K_on_morphism(con, n) * K_on_morphism(ins, n) == RationalMatrix::identity(std::size_t(n)));
}

TEST_CASE("identity diagram gives the identity matrix") {
    CHECK(K_on_morphism(WalledDiagram::identity(FiniteSetPair::standard(2, 1)), 3) == RationalMatrix::identity(27));
    CHECK(K_on_morphism(WalledDiagram::identity(FiniteSetPair{}), 3) == RationalMatrix::identity(1));
}

TEST_CASE("K is a functor") {
    rnd::Engine rng(37);
    for (int t = 0; t < 120; ++t) {
        FiniteSetPair s = rnd::object(rng, 4), u = rnd::object_like(rng, s, 4), v = rnd::object_like(rng, s, 4);
        WalledDiagram f = rnd::diagram(rng, s, u), g = rnd::diagram(rng, u, v);
        int n = rnd::uniform(rng, 1, 4);
        CHECK(K_on_morphism(compose(g, f, n), n) == K_on_morphism(g, n) * K_on_morphism(f, n));
    }
}

TEST_CASE("group generators") {
    for (int n = 2; n <= 4; ++n) {
        auto gens = gl_generators(n);
        CHECK(gens.size() == 4);
        for (auto& g : gens) {
            // g · g^{-1} = 1
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int s = 0;
                    for (int k = 0; k < n; ++k) s += g.g[std::size_t(i)][std::size_t(k)] * g.inverse[std::size_t(k)][std::size_t(j)];
                    CHECK(s == (i == j));
                }
        }
    }
}

TEST_CASE("invariants") {
    InvariantReport a = invariants(FiniteSetPair::standard(1, 1), 4);
    CHECK(a.dim == 1);
    CHECK(a.span_inside);
    CHECK(a.span_surjective());
    // spanned by Σ e_i ⊗ e_i^#
    for (std::size_t r = 0; r < 16; ++r) {
        bool diag = r % 5 == 0;
        CHECK((sgn(a.basis.get(r, 0)) != 0) == diag);
    }
    CHECK(invariants(FiniteSetPair::standard(1, 0), 3).dim == 0);
    CHECK(invariants(FiniteSetPair::standard(2, 0), 3).dim == 0);
    InvariantReport b = invariants(FiniteSetPair::standard(2, 2), 7);
    CHECK(b.dim == 2);
    CHECK(b.span_inside);
    CHECK(b.span_surjective());
    // the span stays inside for small n, where it need not be independent
    for (int n = 2; n <= 3; ++n) {
        InvariantReport c = invariants(FiniteSetPair::standard(2, 2), n);
        CHECK(c.span_inside);
        CHECK(c.span_surjective());
    }
}

TEST_CASE("traceless tensors") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(traceless(FiniteSetPair::standard(1, 1), n).cols() == std::size_t(n * n - 1));
        CHECK(traceless(FiniteSetPair::standard(1, 0), n).cols() == std::size_t(n));
    }
    RationalMatrix t = traceless(FiniteSetPair::standard(2, 2), 4);
    CHECK(t.cols() == 194);
    FiniteSetPair s = FiniteSetPair::standard(2, 2);
    for (Atom x : s.s1)
        for (Atom y : s.s2) CHECK((K_on_morphism(WalledDiagram::contraction(s, x, y), 4) * t).is_zero());
}

TEST_CASE("decomposition into traceless parts") {
    DecompositionReport a = decomposition_check(FiniteSetPair::standard(1, 1), 3);
    CHECK(a.total == 9);
    CHECK(a.summand_sum == 9);
    CHECK(a.ok());
    DecompositionReport b = decomposition_check(FiniteSetPair::standard(2, 1), 3);
    CHECK(b.total == 27);
    CHECK(b.ok());
    std::size_t top = 0, rest = 0;
    for (auto& s : b.summands) (s.I.size() == 3 ? top : rest) += s.dim;
    CHECK(top == 21);
    CHECK(rest == 6);
    CHECK(decomposition_check(FiniteSetPair{}, 5).ok());
    CHECK(decomposition_check(FiniteSetPair::standard(2, 2), 4).ok());
    // below |S| the sum need not be direct
    CHECK_FALSE(decomposition_check(FiniteSetPair::standard(2, 2), 1).ok());
}

TEST_CASE("size guardrail") {
    CHECK_THROWS_AS(K_on_morphism(WalledDiagram::identity(FiniteSetPair::standard(4, 4)), 9), GuardrailError);
}
