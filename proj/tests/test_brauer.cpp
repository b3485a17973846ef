#include "doctest.h"

#include "bcoend/brauer.hpp"
#include "bcoend/random.hpp"

using namespace bcoend;

namespace {

const FiniteSetPair kEmpty{};

WalledDiagram omega(Atom x, Atom y) { return WalledDiagram::insertion(kEmpty, x, y); }
WalledDiagram lambda(Atom x, Atom y) { return WalledDiagram::contraction(FiniteSetPair({x}, {y}), x, y); }

}  // namespace

TEST_CASE("a closed loop costs the charge") {
    Rational d(7, 2);
    WalledDiagram loop = compose(lambda(1, 1), omega(1, 1), d);
    CHECK(loop.same_matching(WalledDiagram::identity(kEmpty)));
    CHECK(loop.source() == kEmpty);
    CHECK(loop.coefficient() == d);
    CHECK(count_loops(lambda(1, 1), omega(1, 1)) == 1);
}

TEST_CASE("two loops cost the charge squared") {
    Rational d(3);
    FiniteSetPair one({1}, {1}), two({1, 2}, {1, 2});
    WalledDiagram ins = compose(WalledDiagram::insertion(one, 2, 2), omega(1, 1), d);
    WalledDiagram con = compose(WalledDiagram::contraction(one, 1, 1), WalledDiagram::contraction(two, 2, 2), d);
    WalledDiagram r = compose(con, ins, d);
    CHECK(r.same_matching(WalledDiagram::identity(kEmpty)));
    CHECK(r.coefficient() == 9);
    CHECK(count_loops(con, ins) == 2);
}

TEST_CASE("identity composition keeps the coefficient") {
    rnd::Engine rng(5);
    for (int t = 0; t < 50; ++t) {
        FiniteSetPair s = rnd::object(rng, 4), u = rnd::object_like(rng, s, 4);
        WalledDiagram f = rnd::diagram(rng, s, u);
        f.set_coefficient(Rational(t + 1, 3));
        CHECK(compose(WalledDiagram::identity(u), f, 5) == f);
        CHECK(compose(f, WalledDiagram::identity(s), 5) == f);
    }
}

TEST_CASE("tensor product") {
    WalledDiagram f = WalledDiagram::contraction(FiniteSetPair({1, 2}, {1}), 2, 1);
    CHECK(tensor(f, WalledDiagram::identity(kEmpty)) == f);
    FiniteSetPair a({1, 2}, {1}), b({3}, {2, 4});
    WalledDiagram ii = tensor(WalledDiagram::identity(a), WalledDiagram::identity(b));
    CHECK(ii.is_identity());
    CHECK(ii.source() == tensor_objects(a, b));
    WalledDiagram oo = tensor(omega(1, 1), omega(2, 2));
    CHECK(oo.source() == kEmpty);
    CHECK(oo.target().size() == 4);
    CHECK(oo.insertions().size() == 2);
    CHECK(oo.coefficient() == 1);
}

TEST_CASE("colliding atoms are renamed") {
    std::map<Atom, Atom> r1, r2;
    WalledDiagram t = tensor(omega(1, 1), omega(1, 1), &r1, &r2);
    CHECK(t.target().s1.size() == 2);
    CHECK(r1.at(1) != 1);
    CHECK(r2.at(1) != 1);
}

TEST_CASE("downward diagrams") {
    CHECK(lambda(1, 1).is_downward());
    CHECK_FALSE(omega(1, 1).is_downward());
    CHECK(WalledDiagram::identity(FiniteSetPair::standard(2, 1)).is_downward());
}

TEST_CASE("composition is associative") {
    rnd::Engine rng(13);
    for (int t = 0; t < 200; ++t) {
        FiniteSetPair s = rnd::object(rng, 4);
        FiniteSetPair u = rnd::object_like(rng, s, 4), v = rnd::object_like(rng, s, 4), w = rnd::object_like(rng, s, 4);
        WalledDiagram f = rnd::diagram(rng, s, u), g = rnd::diagram(rng, u, v), h = rnd::diagram(rng, v, w);
        Rational d(rnd::uniform(rng, -3, 4));
        CHECK(compose(h, compose(g, f, d), d) == compose(compose(h, g, d), f, d));
        int loops = count_loops(g, f);
        WalledDiagram gf = compose(g, f, 2);
        CHECK(gf.coefficient() == Rational(1 << loops));
    }
}

TEST_CASE("tensor is functorial") {
    rnd::Engine rng(17);
    for (int t = 0; t < 100; ++t) {
        FiniteSetPair s = rnd::object(rng, 2), u = rnd::object_like(rng, s, 2);
        FiniteSetPair a({11, 12}, {11}), b = FiniteSetPair({11}, {});
        WalledDiagram f1 = rnd::diagram(rng, s, u), g1 = rnd::diagram(rng, a, b);
        WalledDiagram f2 = rnd::diagram(rng, u, s), g2 = rnd::diagram(rng, b, a);
        Rational d(3);
        CHECK(compose(tensor(f2, g2), tensor(f1, g1), d) == tensor(compose(f2, f1, d), compose(g2, g1, d)));
    }
}

TEST_CASE("factorization into generators") {
    CHECK(factor_into_generators(WalledDiagram::identity(FiniteSetPair::standard(2, 2))).empty());

    WalledDiagram two = tensor(omega(1, 1), omega(2, 2));
    DiagramWord w = factor_into_generators(two);
    REQUIRE(w.size() == 3);
    CHECK(w[0].insertions().size() == 1);
    CHECK(w[1].insertions().size() == 1);
    CHECK(recompose(w, kEmpty, 9) == two);

    // one through strand, one contraction, one insertion
    FiniteSetPair s({1, 2}, {1}), t({3, 4}, {2});
    WalledDiagram mixed = WalledDiagram::from_pairs(s, t, {{1, 3}}, {{2, 1}}, {{4, 2}}, {});
    DiagramWord m = factor_into_generators(mixed);
    CHECK(m.size() == 3);
    CHECK(recompose(m, s, 9) == mixed);

    rnd::Engine rng(19);
    for (int k = 0; k < 200; ++k) {
        FiniteSetPair a = rnd::object(rng, 5), b = rnd::object_like(rng, a, 5);
        WalledDiagram f = rnd::diagram(rng, a, b);
        for (auto& letter : factor_into_generators(f))
            CHECK(letter.contractions().size() + letter.insertions().size() <= 1);
        CHECK(recompose(factor_into_generators(f), a, 9) == f);
    }
}

TEST_CASE("diagram text round trip") {
    rnd::Engine rng(23);
    for (int k = 0; k < 50; ++k) {
        FiniteSetPair a = rnd::object(rng, 4), b = rnd::object_like(rng, a, 4);
        WalledDiagram f = rnd::diagram(rng, a, b);
        Rational c(-k, 7);
        c.canonicalize();
        f.set_coefficient(c);
        CHECK(WalledDiagram::parse(f.to_string()) == f);
    }
    AtomTable t;
    WalledDiagram g = WalledDiagram::parse("S=(a,b|x); T=(c|); m=[(a→c),(b→x)]; c=2/3", &t);
    CHECK(g.insertions().empty());
    CHECK(g.through().size() == 1);
    CHECK(g.contractions().size() == 1);
    CHECK(g.coefficient() == Rational(2, 3));
}

TEST_CASE("malformed matchings are rejected") {
    FiniteSetPair s({1}, {}), t({1}, {});
    CHECK_THROWS(WalledDiagram(s, t, {1}));
    AtomTable names;
    CHECK_THROWS(WalledDiagram::parse("S=(a|); T=(b|); m=[]", &names));
    CHECK_THROWS(WalledDiagram::parse("S=(a|); m=[(a→a)]", &names));
}
