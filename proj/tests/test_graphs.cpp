#include "doctest.h"

#include "bcoend/graphs.hpp"

using namespace bcoend;

namespace {

bool has_cycle(const Graph21& g) {
    for (int v = 0; v < g.V; ++v) {
        int w = v;
        for (int step = 0; step < g.V; ++step) {
            int h = g.match[std::size_t(g.out_tail(w))];
            if (h < g.q()) break;
            w = (h - g.q()) / 2;
            if (w == v) return true;
        }
    }
    return false;
}

std::size_t dim_P(const FiniteSetPair& s) { return enumerate_labeled_partitions(s, false).size(); }

}  // namespace

TEST_CASE("graph enumeration") {
    auto one = enumerate_graphs(FiniteSetPair::standard(1, 1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].V == 0);
    CHECK(enumerate_graphs(FiniteSetPair::standard(2, 1)).size() == 6);
    CHECK(enumerate_graphs(FiniteSetPair::standard(1, 2)).empty());
    for (auto& g : enumerate_graphs(FiniteSetPair::standard(3, 1))) {
        CHECK(g.V == 2);
        // every slot is fed exactly once
        for (int v = 0; v < g.V; ++v)
            for (int j = 0; j < 2; ++j) CHECK(g.match[std::size_t(g.feeder(v, j))] == g.slot_head(v, j));
    }
}

TEST_CASE("graph text round trip") {
    for (auto& g : enumerate_graphs(FiniteSetPair::standard(3, 1))) CHECK(Graph21::parse(g.S, g.to_string()) == g);
    AtomTable t;
    FiniteSetPair s({t.intern("a"), t.intern("b"), t.intern("c")}, {t.intern("y")});
    Graph21 g = Graph21::parse(s, "V=2; out=[(v1→v2.in1),(v2→y)]; legs=[(a→v1.in1),(b→v1.in2),(c→v2.in2)]", &t);
    CHECK(g.feeder_vertex(1, 0) == 0);
    CHECK(g.feeder_vertex(1, 1) == -1);
    CHECK(Graph21::parse(s, g.to_string(&t), &t) == g);
    CHECK_THROWS(Graph21::parse(s, "V=2; out=[(v1→v2.in1)]; legs=[]", &t));
}

TEST_CASE("reordering signs") {
    auto gs = enumerate_graphs(FiniteSetPair::standard(3, 1));
    for (auto& g : gs) {
        CHECK(reorder_sign(g, {0, 1}, {false, false}) == std::make_pair(g, 1));
        CHECK(reorder_sign(g, {0, 1}, {true, false}).second == -1);
        CHECK(reorder_sign(g, {1, 0}, {false, false}).second == -1);
        auto [h, s] = reorder_sign(g, {1, 0}, {true, false});
        CHECK(s == 1);
        // swap flags refer to the vertices before relabeling
        auto [back, t] = reorder_sign(h, {1, 0}, {false, true});
        CHECK(back == g);
        CHECK(s * t == 1);
    }
}

TEST_CASE("normal forms of small graphs") {
    NormalForm strand = ih_rewrite(enumerate_graphs(FiniteSetPair::standard(1, 1))[0]);
    REQUIRE(strand.components.size() == 1);
    CHECK(strand.components[0].type == 'c');

    FiniteSetPair s20 = FiniteSetPair::standard(2, 0);
    Graph21 cyc = Graph21::parse(s20, "V=2; out=[(v1→v2.in1),(v2→v1.in1)]; legs=[(1→v1.in2),(2→v2.in2)]");
    NormalForm b = ih_rewrite(cyc);
    REQUIRE(b.components.size() == 1);
    CHECK(b.components[0].type == 'b');
    CHECK(b.components[0].legs == std::vector<Atom>{1, 2});
    auto [lp, det] = graph_to_partition(b);
    CHECK(lp == LabeledPartition::parse("{1,2;·}"));

    std::size_t trees = 0;
    for (auto& g : enumerate_graphs(FiniteSetPair::standard(3, 1))) {
        if (has_cycle(g)) continue;
        ++trees;
        NormalForm nf = ih_rewrite(g);
        CHECK(is_irreducible(nf.graph));
        REQUIRE(nf.components.size() == 1);
        CHECK(nf.components[0].type == 'a');
        CHECK(nf.components[0].legs == std::vector<Atom>{1, 2, 3});
        CHECK(nf.components[0].out == 1);
        CHECK(graph_to_partition(nf).first == LabeledPartition::parse("{1,2,3;1}"));
    }
    CHECK(trees > 0);
}

TEST_CASE("normal forms agree with the partition image") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= p && q <= 2; ++q) {
            FiniteSetPair s = FiniteSetPair::standard(p, q);
            for (auto& g : enumerate_graphs(s)) {
                NormalForm nf = ih_rewrite(g);
                CHECK(is_irreducible(nf.graph));
                CHECK(canonical_normal_form(nf.graph).graph == nf.graph);
                auto [lp, det] = graph_to_partition(nf);
                CHECK(graph_to_pdet(g) == PartitionVector::basis(s, lp, Rational(det.relative_sign(s))));
                for (auto& site : rewrite_sites(g)) {
                    auto [h, sg] = apply_site(g, site);
                    CHECK(graph_to_pdet(h).scaled(Rational(sg)) == graph_to_pdet(g));
                }
            }
        }
}

TEST_CASE("normal form blocks") {
    FiniteSetPair s({1, 2, 3}, {1});
    Graph21 g = Graph21::parse(s, "V=2; out=[(v1→v1.in2),(v2→1)]; legs=[(1→v1.in1),(2→v2.in1),(3→v2.in2)]");
    NormalForm nf = ih_rewrite(g);
    REQUIRE(nf.components.size() == 2);
    CHECK(graph_to_partition(nf).first == LabeledPartition::parse("{1;·|2,3;1}"));
    CHECK(nf.to_json().find("\"type\"") != std::string::npos);
}

TEST_CASE("IH move preserves the partition image") {
    for (auto& g : enumerate_graphs(FiniteSetPair::standard(4, 1)))
        for (int u = 0; u < g.V; ++u) {
            int h = g.match[std::size_t(g.out_tail(u))];
            if (h < g.q() || (h - g.q()) / 2 == u) continue;
            CHECK(graph_to_pdet(ih_move(g, u)) == graph_to_pdet(g));
        }
}

TEST_CASE("rewriting is confluent") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= p && q <= 2; ++q) {
            ConfluenceReport r = confluence_check(FiniteSetPair::standard(p, q));
            CHECK(r.failures == 0);
        }
}

TEST_CASE("graph space dimensions") {
    CHECK(graph_space_dim(FiniteSetPair::standard(1, 1)) == 1);
    CHECK(graph_space_dim(FiniteSetPair::standard(2, 1)) == 3);
    CHECK(graph_space_dim(FiniteSetPair::standard(2, 0)) == 2);
    CHECK(graph_space_dim(FiniteSetPair::standard(1, 2)) == 0);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 2; ++q) {
            FiniteSetPair s = FiniteSetPair::standard(p, q);
            GraphSpaceReport r = graph_space(s);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(r.dim == dim_P(s));
            if (q <= p) {
                CHECK(r.phi_descends);
                CHECK(r.phi_rank == r.dim);
            }
        }
}
