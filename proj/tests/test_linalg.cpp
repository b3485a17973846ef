#include "doctest.h"

#include <sstream>

#include "bcoend/linalg.hpp"
#include "bcoend/random.hpp"

using namespace bcoend;

namespace {

RationalMatrix random_matrix(rnd::Engine& rng, std::size_t r, std::size_t c, int rank_cap) {
    // product of r×k and k×c integer matrices has rank at most k
    std::size_t k = std::size_t(rank_cap);
    RationalMatrix a(r, k), b(k, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) a.set(i, j, rnd::uniform(rng, -3, 3));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c; ++j) b.set(i, j, rnd::uniform(rng, -3, 3));
    return a * b;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(4, 5)) == 0);
    CHECK(rank(RationalMatrix::from_dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RationalMatrix(0, 0)) == 0);
}

TEST_CASE("nullspace of small matrices") {
    CHECK(nullspace(RationalMatrix::identity(3)).cols() == 0);
    RationalMatrix m = RationalMatrix::from_dense({{1, 1}});
    RationalMatrix n = nullspace(m);
    REQUIRE(n.cols() == 1);
    CHECK(n.get(0, 0) == -n.get(1, 0));
    CHECK(sgn(n.get(0, 0)) != 0);
    CHECK((m * n).is_zero());
}

TEST_CASE("rank-nullity and transpose rank on random matrices") {
    rnd::Engine rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = std::size_t(rnd::uniform(rng, 1, 6)), c = std::size_t(rnd::uniform(rng, 1, 9));
        RationalMatrix m = random_matrix(rng, r, c, rnd::uniform(rng, 1, 5));
        std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        RationalMatrix n = nullspace(m);
        CHECK(n.cols() + rk == c);
        CHECK((m * n).is_zero());
        CHECK(rank(n) == n.cols());
    }
}

TEST_CASE("5x8 kernel has 8 - rank vectors") {
    rnd::Engine rng(11);
    RationalMatrix m = random_matrix(rng, 5, 8, 3);
    CHECK(rank(m) <= 3);
    CHECK(nullspace(m).cols() == 8 - rank(m));
}

TEST_CASE("incremental echelon agrees with Bareiss") {
    rnd::Engine rng(3);
    for (int t = 0; t < 30; ++t) {
        RationalMatrix m = random_matrix(rng, 6, 7, rnd::uniform(rng, 1, 6));
        SparseEchelon e(7);
        for (auto& row : m.sparse_rows()) e.add(row);
        CHECK(e.rank() == bareiss(m).pivot_cols.size());
        for (auto& row : m.sparse_rows()) CHECK(e.in_span(row));
        RationalMatrix n = e.nullspace();
        CHECK((m * n).is_zero());
    }
}

TEST_CASE("storage switch preserves entries") {
    RationalMatrix m = RationalMatrix::from_dense({{0, Rational(1, 2), 0}, {3, 0, 0}});
    RationalMatrix d = m;
    d.to_dense();
    CHECK(d == m);
    d.to_sparse();
    CHECK(d == m);
    CHECK(m.nonzeros() == 2);
}

TEST_CASE("quotient basis") {
    SUBCASE("no relations") {
        Quotient q = quotient_basis(3, RationalMatrix(0, 3));
        CHECK(q.dim == 3);
        auto c = q.reduce({{1, Rational(5)}});
        CHECK(c == std::vector<Rational>{0, 5, 0});
    }
    SUBCASE("full basis of relations") {
        CHECK(quotient_basis(3, RationalMatrix::identity(3)).dim == 0);
    }
    SUBCASE("one relation e1 - e2") {
        Quotient q = quotient_basis(4, RationalMatrix::from_dense({{1, -1, 0, 0}}));
        CHECK(q.dim == 3);
        CHECK(q.reduce({{0, Rational(1)}}) == q.reduce({{1, Rational(1)}}));
        CHECK(q.reduce({{0, Rational(1)}, {1, Rational(-1)}}) == std::vector<Rational>(3, 0));
    }
}

TEST_CASE("matrix market dump") {
    std::ostringstream os;
    RationalMatrix::from_dense({{0, Rational(-2, 3)}}).write_matrix_market(os);
    CHECK(os.str().find("1 2 -2/3") != std::string::npos);
}
