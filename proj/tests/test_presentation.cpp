#include "doctest.h"

#include <algorithm>

#include "bcoend/presentation.hpp"

using namespace bcoend;

namespace {

// κ(x,y,z) ∧ κ(u,v,w) with both factors written out by hand.
WedgeVector pair_term(int x, int y, int z, int u, int v, int w, int n) {
    WedgeVector out;
    if (x == y || u == v) return out;
    int s = 1;
    if (x > y) std::swap(x, y), s = -s;
    if (u > v) std::swap(u, v), s = -s;
    std::size_t a = generator_index({x, y, z}, n), b = generator_index({u, v, w}, n);
    if (a == b) return out;
    if (a > b) std::swap(a, b), s = -s;
    add_term(out, {a, b}, Rational(s));
    return out;
}

WedgeVector brute_ih(int a, int b, int c, int k, int n) {
    WedgeVector out;
    for (int i = 1; i <= n; ++i) {
        for (auto& [m, x] : pair_term(a, b, i, i, c, k, n)) add_term(out, m, x);
        for (auto& [m, x] : pair_term(c, a, i, i, b, k, n)) add_term(out, m, -x);
    }
    return out;
}

}  // namespace

TEST_CASE("generator numbering") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(num_generators(n) == std::size_t(n * n * (n - 1) / 2));
        for (std::size_t i = 0; i < num_generators(n); ++i) CHECK(generator_index(generator(i, n), n) == i);
    }
    CHECK(kappa(2, 2, 1, 3).empty());
    WedgeVector k = kappa(2, 1, 3, 3);
    REQUIRE(k.size() == 1);
    CHECK(k.begin()->second == -1);
}

TEST_CASE("IH expansions") {
    CHECK(ih_expansion(1, 1, 1, 1, 3).empty());
    for (int n = 2; n <= 3; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int k = 1; k <= n; ++k) CHECK(ih_expansion(a, b, c, k, n) == brute_ih(a, b, c, k, n));
    // a = b: only the second sum survives
    WedgeVector e = ih_expansion(2, 2, 1, 1, 3);
    WedgeVector second;
    for (int i = 1; i <= 3; ++i)
        for (auto& [m, x] : pair_term(1, 2, i, i, 2, 1, 3)) add_term(second, m, -x);
    CHECK(e == second);
    CHECK(ih_relations(2).size() > 0);
}

TEST_CASE("wedge products") {
    WedgeVector x = kappa(1, 2, 1, 2), y = kappa(1, 2, 2, 2);
    CHECK(wedge(x, x).empty());
    WedgeVector xy = wedge(x, y), yx = wedge(y, x);
    REQUIRE(xy.size() == 1);
    CHECK(xy.begin()->second == -yx.begin()->second);
}

TEST_CASE("presented ring dimensions") {
    CHECK(ring_pres_component(3, 0).dim == 1);
    for (int n = 2; n <= 5; ++n) {
        PresentedComponent c = ring_pres_component(n, 1);
        CHECK(c.dim == std::size_t(n * n * (n - 1) / 2));
        CHECK(c.ideal_rank == 0);
    }
    PresentedComponent c = ring_pres_component(4, 2);
    CHECK(c.ambient.size() == 276);
    CHECK(c.dim == 276 - c.ideal_rank);
}

TEST_CASE("comparison map") {
    ComparisonReport z = comparison_map(2, 0);
    CHECK(z.dim_pres == 1);
    CHECK(z.dim_R == 1);
    CHECK(z.injective);
    for (int n = 3; n <= 5; ++n) {
        ComparisonReport r = comparison_map(n, 1);
        CHECK(r.dim_pres == std::size_t(n * n * (n - 1) / 2));
        CHECK(r.surjective);
        CHECK(r.injective);
    }
    ComparisonReport two = comparison_map(4, 2);
    CHECK(two.surjective);
    CHECK(two.relations_sound);
    CHECK(two.dim_pres >= two.dim_R);
}

TEST_CASE("kappa elimination") {
    int n = 3;
    // a (2,1)-word is already a generator
    KappaExpr g{{{KappaWord{{1, 2}, 3}}, Rational(1)}};
    CHECK(kappa_eliminate(g, n) == g);
    // κ₀(f) = Σᵢ κ₁(f⊗eᵢ^#⊗eᵢ)
    KappaExpr k0{{{KappaWord{{2}, 0}}, Rational(1)}};
    KappaExpr want;
    for (int i = 1; i <= n; ++i) want[{KappaWord{{2, i}, i}}] += 1;
    CHECK(kappa_to_wedge(kappa_eliminate(k0, n), n) == kappa_to_wedge(want, n));
    // κ₁ on a (3,1)-word splits into products of generators
    KappaExpr k31{{{KappaWord{{1, 2, 3}, 1}}, Rational(1)}};
    KappaExpr left = kappa_eliminate(k31, n, EliminationOrder::LeftmostFirst);
    for (auto& [prod, c] : left)
        for (auto& w : prod) {
            CHECK(w.f.size() == 2);
            CHECK(w.v != 0);
        }
    CHECK(kappa_to_wedge(left, n) == kappa_to_wedge(kappa_eliminate(k31, n, EliminationOrder::RightmostFirst), n));
}
