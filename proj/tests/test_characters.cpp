#include "doctest.h"

#include "bcoend/characters.hpp"
#include "bcoend/coend.hpp"
#include "bcoend/tensor_rep.hpp"

using namespace bcoend;

namespace {

// ⟨χ, ψ⟩ over Σ_k
Rational inner(int k, const Partition& a, const Partition& b) {
    Rational s = 0;
    for (auto& rho : enumerate_partitions(k))
        s += Rational(class_size(rho)) * specht_character(a, rho) * specht_character(b, rho);
    return s / Rational(Integer(factorial(k)));
}

}  // namespace

TEST_CASE("Specht characters") {
    for (int p = 1; p <= 5; ++p)
        for (auto& rho : enumerate_partitions(p)) CHECK(specht_character({p}, rho) == 1);
    CHECK(specht_character({1, 1}, {2}) == -1);
    CHECK(specht_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(specht_character({2, 1}, {3}) == -1);
    CHECK(specht_character({2, 1}, {2, 1}) == 0);
    CHECK_THROWS(specht_character({2}, {1}));
}

TEST_CASE("character orthogonality") {
    for (int k = 0; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        Integer total = 0;
        for (auto& rho : ps) total += class_size(rho);
        CHECK(total == Integer(factorial(k)));
        for (auto& a : ps) {
            CHECK(specht_dim(a) == specht_character(a, Partition(std::size_t(k), 1)));
            for (auto& b : ps) CHECK(inner(k, a, b) == (a == b ? 1 : 0));
        }
    }
}

TEST_CASE("module characters") {
    CHECK(module_character(2, 1, {{1, 1}, {1}}) == 1);
    CHECK(module_character(4, 2, {{1, 1, 1, 1}, {1, 1}}) == 6);
    CHECK(module_character(2, 1, {{2}, {1}}) == -1);
    CHECK(permutation_of_type({2, 1}) == std::vector<int>{2, 1, 3});
}

TEST_CASE("multiplicities") {
    MultiplicityTable a = multiplicities(1, 0);
    CHECK(a.entries == std::map<Bipartition, long>{{{{1}, {}}, 1}});
    MultiplicityTable b = multiplicities(2, 1);
    CHECK(b.entries == std::map<Bipartition, long>{{{{1, 1}, {1}}, 1}});
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 3 && 2 * q <= p; ++q) {
            MultiplicityTable t = multiplicities(p, q);
            long total = 0;
            for (auto& [bp, m] : t.entries) {
                CHECK(m > 0);
                total += m * specht_dim(bp.lambda) * specht_dim(bp.mu);
            }
            CHECK(std::size_t(total) == enumerate_labeled_partitions(FiniteSetPair::standard(p, q), true).size());
        }
}

TEST_CASE("Weyl dimensions") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(gl_dimension({{1}, {}}, n) == n);
        CHECK(gl_dimension({{}, {1}}, n) == n);
    }
    for (int n = 2; n <= 6; ++n) CHECK(gl_dimension({{1}, {1}}, n) == n * n - 1);
    CHECK(gl_dimension({{1}, {1, 1}}, 3) == 6);
    CHECK(gl_dimension({{1, 1}, {1}}, 3) == 6);
    CHECK(gl_dimension({{1, 1}, {1}}, 2) == 0);
    CHECK(gl_dimension({{2}, {}}, 4) == 10);
}

TEST_CASE("traceless tensors by characters") {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int n = std::max(1, p + q); n <= 5; ++n) {
                if (tensor_dim(FiniteSetPair::standard(p, q), n) > 2000) continue;
                Integer expect = 0;
                for (auto& b : enumerate_bipartitions(p, q))
                    expect += Integer(specht_dim(b.lambda) * specht_dim(b.mu)) * gl_dimension(b, n);
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(n);
                CHECK(Integer(traceless(FiniteSetPair::standard(p, q), n).cols()) == expect);
            }
}

TEST_CASE("stable tables") {
    auto t0 = stable_table(0, false);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].entries == std::map<Bipartition, long>{{{{}, {}}, 1}});
    auto t1 = stable_table(1, false);
    REQUIRE(t1.size() == 1);
    // Λ²H^∨⊗H = V_{(1),(1,1)} ⊕ H^∨
    CHECK(t1[0].entries == std::map<Bipartition, long>{{{{1}, {1, 1}}, 1}, {{{}, {1}}, 1}});
    for (int n = 3; n <= 8; ++n) CHECK(t1[0].total_at(n) == std::size_t(n * n * (n - 1) / 2));
    CHECK(stable_table(1, true).size() == 1);
    CHECK(stable_table(3, true).size() == 1);
    CHECK(stable_table(4, true).size() == 2);
    auto t4 = stable_table(4, true);
    CHECK(t4[1].y_monomial == "y4");
    CHECK(t4[1].entries == stable_table(0, false)[0].entries);
    CHECK_THROWS_AS(stable_table(6, false), GuardrailError);

    auto raw = stable_table(1, false, Convention::LambdaDual);
    CHECK(raw[0].entries == std::map<Bipartition, long>{{{{1, 1}, {1}}, 1}, {{{1}, {}}, 1}});
    CHECK(convert(raw[0], Convention::MuDual).entries == t1[0].entries);

    // degree 2 is the union over (2,0), (3,1) and (4,2)
    auto t2 = stable_table(2, false, Convention::LambdaDual);
    std::map<Bipartition, long> u;
    for (auto [p, q] : {std::pair{2, 0}, {3, 1}, {4, 2}})
        for (auto& [b, m] : multiplicities(p, q).entries) u[b] += m;
    CHECK(t2[0].entries == u);
}

TEST_CASE("conventions") {
    CHECK(parse_convention("mu-dual") == Convention::MuDual);
    CHECK(parse_convention(convention_name(Convention::LambdaDual)) == Convention::LambdaDual);
    CHECK_THROWS(parse_convention("sideways"));
    std::string csv = character_table_csv(3);
    CHECK(csv.find("-1") != std::string::npos);
}
