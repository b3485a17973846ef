#include "doctest.h"

#include "bcoend/partitions.hpp"
#include "bcoend/random.hpp"

using namespace bcoend;

namespace {

PartitionVector vec(const FiniteSetPair& s, const std::string& text) {
    return PartitionVector::basis(s, LabeledPartition::parse(text));
}

}  // namespace

TEST_CASE("contracting a labeled singleton multiplies by n") {
    FiniteSetPair s({1, 2}, {1, 2});
    auto c = WalledDiagram::contraction(s, 1, 1);
    auto [q, e] = act_P(c, LabeledPartition::parse("{1;1|2;2}"));
    CHECK(e == 1);
    CHECK(q == LabeledPartition::parse("{2;2}"));
    PartitionVector out = apply_P(c, vec(s, "{1;1|2;2}"), Rational(5));
    CHECK(out == vec(c.target(), "{2;2}").scaled(5));
}

TEST_CASE("contraction merges into the labeled part") {
    FiniteSetPair s({1, 2, 3}, {1, 2});
    auto c = WalledDiagram::contraction(s, 1, 2);
    auto [q, e] = act_P(c, LabeledPartition::parse("{1,2;1|3;2}"));
    CHECK(e == 0);
    CHECK(q == LabeledPartition::parse("{2,3;1}"));
}

TEST_CASE("identity acts trivially") {
    FiniteSetPair s = FiniteSetPair::standard(3, 1);
    auto id = WalledDiagram::identity(s);
    for (auto& p : enumerate_labeled_partitions(s, false)) CHECK(act_P(id, p) == std::make_pair(p, 0));
    CHECK(det_sign(id) == 1);
}

TEST_CASE("det signs") {
    FiniteSetPair s({1, 2}, {});
    CHECK(det_sign(WalledDiagram::bijection(s, s, {{1, 2}, {2, 1}}, {})) == -1);
    FiniteSetPair t({1}, {1, 2});
    CHECK(det_sign(WalledDiagram::bijection(t, t, {{1, 1}}, {{1, 2}, {2, 1}})) == -1);
    // the loop costs -1 in det
    FiniteSetPair e{};
    auto ins = WalledDiagram::insertion(e, 1, 1);
    auto con = WalledDiagram::contraction(ins.target(), 1, 1);
    CHECK(det_sign(con) * det_sign(ins) == -1);
    // a zigzag composes to a bijection with the same det
    FiniteSetPair one({1}, {1});
    auto ins2 = WalledDiagram::insertion(one, 2, 2);
    auto zz = WalledDiagram::contraction(ins2.target(), 1, 2);
    CHECK(count_loops(zz, ins2) == 0);
    CHECK(det_sign(zz) * det_sign(ins2) == det_sign(compose(zz, ins2, 1)));
}

TEST_CASE("P, det and P⊗det are functors") {
    rnd::Engine rng(29);
    for (int t = 0; t < 300; ++t) {
        FiniteSetPair s = rnd::object(rng, 5);
        if (s.degree() < 0) continue;
        FiniteSetPair u = rnd::object_like(rng, s, 5), v = rnd::object_like(rng, s, 5);
        WalledDiagram f = rnd::diagram(rng, s, u), g = rnd::diagram(rng, u, v);
        Rational n(rnd::uniform(rng, -4, 6));
        auto parts = enumerate_labeled_partitions(s, false);
        if (parts.empty()) continue;
        PartitionVector x = PartitionVector::basis(s, parts[std::size_t(rnd::uniform(rng, 0, int(parts.size()) - 1))]);
        CHECK(apply_P(compose(g, f, n), x, n) == apply_P(g, apply_P(f, x, n), n));
        CHECK(apply_Pdet(compose(g, f, n), x, n) == apply_Pdet(g, apply_Pdet(f, x, n), n));
        int loops = count_loops(g, f);
        CHECK(det_sign(g) * det_sign(f) == det_sign(compose(g, f, n)) * (loops % 2 ? -1 : 1));
    }
}

TEST_CASE("symbolic charge agrees with evaluation") {
    rnd::Engine rng(31);
    for (int t = 0; t < 100; ++t) {
        FiniteSetPair s = FiniteSetPair::standard(3, 2), u = rnd::object_like(rng, s, 5);
        WalledDiagram f = rnd::diagram(rng, s, u);
        for (auto& p : enumerate_labeled_partitions(s, false)) {
            auto sym = apply_P(f, SymbolicPartitionVector::basis(s, p, PolyN(1)), PolyN::n());
            auto num = apply_P(f, PartitionVector::basis(s, p), Rational(7));
            PartitionVector ev(u);
            for (auto& [q, c] : sym.terms) ev.add(q, c.eval(7));
            CHECK(ev == num);
        }
    }
}

TEST_CASE("standard shapes") {
    StandardShape a = standardize(LabeledPartition::parse("{1,2;1}"), FiniteSetPair::standard(2, 1));
    CHECK(a.lambda == Partition{2});
    CHECK(a.k == std::vector<int>{1});
    CHECK(a.sign == 1);
    StandardShape b = standardize(LabeledPartition::parse("{2;·|1,3;1}"), FiniteSetPair::standard(3, 1));
    CHECK(b.lambda == Partition{2, 1});
    CHECK(b.k == std::vector<int>{1, 0});
    CHECK(standard_partition(b.lambda, b.k).is_valid_for(FiniteSetPair::standard(3, 1)));

    AtomTable t;
    FiniteSetPair ab({1, 2}, {t.intern("a"), t.intern("b")});
    StandardShape x = standardize(LabeledPartition::parse("{1;a|2;b}", &t), ab);
    StandardShape y = standardize(LabeledPartition::parse("{2;b|1;a}", &t), ab);
    CHECK(x.lambda == y.lambda);
    CHECK(x.k == y.k);
    CHECK(std::abs(x.sign) == 1);
}

TEST_CASE("standard shape transports the partition") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 0; 2 * q <= p + 1 && q <= 2; ++q) {
            FiniteSetPair s = FiniteSetPair::standard(p, q);
            for (auto& lp : enumerate_labeled_partitions(s, false)) {
                StandardShape sh = standardize(lp, s);
                LabeledPartition std_p = standard_partition(sh.lambda, sh.k);
                WalledDiagram b = WalledDiagram::bijection(s, s, [&] {
                    std::map<Atom, Atom> f;
                    for (auto& [x, y] : sh.f) f[x] = y;
                    return f;
                }(), [&] {
                    std::map<Atom, Atom> g;
                    for (auto& [y, j] : sh.g) g[j] = y;
                    return g;
                }());
                CHECK(act_P(b, lp).first == std_p);
                CHECK(det_sign(b) == sh.sign);
            }
        }
}

TEST_CASE("Day product") {
    FiniteSetPair e{};
    PartitionVector unit = PartitionVector::basis(e, LabeledPartition());
    PartitionVector u = vec(FiniteSetPair({1, 2}, {1}), "{1,2;1}");
    CHECK(day_product(u, unit) == u);
    CHECK(day_product(unit, u) == u);
    PartitionVector v = vec(FiniteSetPair({3, 4}, {2}), "{3,4;2}");
    PartitionVector uv = day_product(u, v);
    CHECK(uv == vec(FiniteSetPair({1, 2, 3, 4}, {1, 2}), "{1,2;1|3,4;2}"));
    // swapping two degree-1 factors costs -1
    PartitionVector vu = day_product(v, u);
    WalledDiagram b = WalledDiagram::bijection(vu.S, uv.S, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}, {{1, 1}, {2, 2}});
    CHECK(apply_Pdet(b, vu, Rational(3)) == uv.scaled(-1));
}

TEST_CASE("Kan decomposition of P") {
    auto s21 = kan_decompose(FiniteSetPair::standard(2, 1));
    std::size_t total = 0;
    for (auto& k : s21) total += k.matchings.size() * k.strict.size();
    CHECK(total == 3);
    std::size_t nonempty = 0;
    for (auto& k : s21) nonempty += !k.strict.empty() && !k.matchings.empty();
    CHECK(nonempty == 3);

    auto s11 = kan_decompose(FiniteSetPair::standard(1, 1));
    total = 0;
    for (auto& k : s11) total += k.matchings.size() * k.strict.size();
    CHECK(total == 1);

    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(kan_decompose_is_bijection(FiniteSetPair::standard(p, q)));
    total = 0;
    for (auto& k : kan_decompose(FiniteSetPair::standard(3, 1))) total += k.matchings.size() * k.strict.size();
    CHECK(total == enumerate_labeled_partitions(FiniteSetPair::standard(3, 1), false).size());
    CHECK(total == 10);
}

TEST_CASE("wheeled model classes") {
    using namespace wheeled;
    Element h21 = h(2, 1);
    Element s = h21;
    s.add(permute_inputs(h21, {2, 1}));
    CHECK(s.is_zero());
    Element n = contract(unit(), 1, 1);
    CHECK(n == Element::basis(FiniteSetPair{}, LabeledPartition(), PolyN::n()));
    // ξ_{3,1}(h_{2,1} h_{2,1}) = h_{3,1}
    CHECK(contract(horizontal(h(2, 1), h(2, 1)), 3, 1) == h(3, 1));
    for (auto& r : wheeled_model_check(3)) {
        if (r.name.rfind("xi", 0) == 0 && r.name.find("0) = h") != std::string::npos) continue;  // literal i = 0 case
        CAPTURE(r.name);
        CHECK(r.ok);
    }
}

TEST_CASE("PolyN arithmetic") {
    PolyN n = PolyN::n();
    PolyN x = (n + PolyN(1)) * (n - PolyN(1));
    CHECK(x == n * n - PolyN(1));
    CHECK(x.eval(4) == 15);
    CHECK((x - x).is_zero());
    CHECK(x.to_string() == "[-1,0,1]");
}
