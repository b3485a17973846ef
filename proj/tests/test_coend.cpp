#include "doctest.h"

#include "bcoend/coend.hpp"
#include "bcoend/random.hpp"

using namespace bcoend;

TEST_CASE("coend dimensions in low degree") {
    for (int n = 1; n <= 4; ++n) CHECK(compute_R(n, 0).dim == 1);
    CHECK(compute_R(3, 1).dim == 9);
    CHECK(compute_R(4, 1).dim == 24);
    CHECK(compute_R(5, 1).dim == 50);
}

TEST_CASE("block monomials") {
    // an odd block cannot repeat
    BlockMonomial twice{{{1, 2}, 1}, {{1, 2}, 1}};
    CHECK(canonical_class(twice).sign == 0);
    // an even block can
    BlockMonomial even{{{1, 2}, 0}, {{1, 2}, 0}};
    CHECK(monomial_degree(even) == 4);
    CHECK(canonical_class(even).sign != 0);
    // reordering the elements of an odd block costs a sign
    SignedMonomial a = canonical_class({{{1, 2}, 3}});
    SignedMonomial b = canonical_class({{{2, 1}, 3}});
    CHECK(a.mono == b.mono);
    CHECK(a.sign == -b.sign);
    // odd blocks anticommute
    BlockMonomial x{{{1, 2}, 1}}, y{{{1, 3}, 2}};
    SignedMonomial xy = block_product(x, y), yx = block_product(y, x);
    CHECK(xy.mono == yx.mono);
    CHECK(xy.sign == -yx.sign);
    CHECK(monomial_weight({{{1, 2}, 1}}, 3) == std::vector<int>{0, -1, 0});
}

TEST_CASE("ring structure") {
    CoendRing R(3);
    RingElement one = R.one();
    const auto& c1 = R.component(1);
    REQUIRE(c1.dim == 9);
    for (std::size_t i = 0; i < c1.dim; ++i) {
        RingElement a = R.basis_element(1, i);
        CHECK(R.multiply(one, a).coords == a.coords);
        CHECK(R.multiply(a, one).coords == a.coords);
    }
    rnd::Engine rng(41);
    for (int t = 0; t < 30; ++t) {
        RingElement a = R.basis_element(1, std::size_t(rnd::uniform(rng, 0, 8)));
        RingElement b = R.basis_element(1, std::size_t(rnd::uniform(rng, 0, 8)));
        RingElement ab = R.multiply(a, b), ba = R.multiply(b, a);
        CHECK(ab.degree == 2);
        CHECK(ab.coords.size() == R.component(2).dim);
        for (std::size_t k = 0; k < ab.coords.size(); ++k) CHECK(ab.coords[k] == -ba.coords[k]);
    }
}

TEST_CASE("kappa words") {
    // κ₀(f) and Σᵢ κ₁(f⊗eᵢ^#⊗eᵢ) have the same class
    int n = 3;
    CoendRing R(n);
    for (int f = 1; f <= n; ++f) {
        RingElement k0 = R.from_monomial(1, kappa_product_class({KappaWord{{f}, 0}}));
        std::vector<Rational> sum(k0.coords.size(), 0);
        for (int i = 1; i <= n; ++i) {
            RingElement k1 = R.from_monomial(1, kappa_product_class({KappaWord{{f, i}, i}}));
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += k1.coords[k];
        }
        CHECK(sum == k0.coords);
    }
    CHECK(kappa_to_string(KappaWord{{1, 2}, 3}).find("κ") != std::string::npos);
}

TEST_CASE("Albanese quotient in degree 1") {
    for (int n = 3; n <= 4; ++n) {
        AlbaneseReport w = compute_W(1, n);
        CHECK(w.dim == std::size_t(n * n * (n - 1) / 2));
        CHECK(w.content_dim == w.dim);
        // Hom(H, Λ²H) = V_{(1,1),(1)} ⊕ H
        CHECK(w.content.entries == std::map<Bipartition, long>{{{{1, 1}, {1}}, 1}, {{{1}, {}}, 1}});
    }
}

TEST_CASE("coend guardrail") {
    CHECK_THROWS_AS(compute_R(12, 4), GuardrailError);
}
