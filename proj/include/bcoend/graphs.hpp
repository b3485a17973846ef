#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcoend/combinatorics.hpp"
#include "bcoend/partitions.hpp"

namespace bcoend {

// Marked (2,1)-valent directed graph with legs S. Vertices 0..V-1 with
// V = |S1| - |S2|. Tails are the S1 legs (positions 0..p-1) and the vertex
// outputs (p+v); heads are the S2 legs (0..q-1) and the input slots
// (q+2v+j). The graph is the bijection match: tail -> head.
struct Graph21 {
    FiniteSetPair S;
    int V = 0;
    std::vector<int> match;

    int p() const { return int(S.s1.size()); }
    int q() const { return int(S.s2.size()); }
    int out_tail(int v) const { return p() + v; }
    int slot_head(int v, int j) const { return q() + 2 * v + j; }
    // Tail feeding slot j of v.
    int feeder(int v, int j) const;
    // Vertex whose output feeds (v, j), or -1 for a leg.
    int feeder_vertex(int v, int j) const;
    bool operator==(const Graph21& o) const { return S == o.S && match == o.match; }
    bool operator<(const Graph21& o) const { return match < o.match; }

    // V=2; out=[(v1→v2.in1),(v2→y)]; legs=[(a→v1.in1),(b→v1.in2),(c→v2.in2)]
    std::string to_string(const AtomTable* t = nullptr) const;
    static Graph21 parse(const FiniteSetPair& S, const std::string& text, AtomTable* t = nullptr);
};

// All marked graphs: (|S1|+V)! bijections. Empty when |S1| < |S2|.
std::vector<Graph21> enumerate_graphs(const FiniteSetPair& S);

// Relabels vertices by f (v -> f[v]) and swaps the inputs of every vertex
// with swap[v] set. Sign sgn(f)·Π(-1)^{swap}.
std::pair<Graph21, int> reorder_sign(const Graph21& g, const std::vector<int>& f, const std::vector<bool>& swap);

// The directed IH move on the edge u -> w (u != w): with u's inputs (a,b)
// and w's other input c, the new inputs are u:(c,a) and w:b.
Graph21 ih_move(const Graph21& g, int u);

enum class RewriteKind { Shrink, LoopSwap, Rotate, Sort };
struct RewriteSite {
    RewriteKind kind;
    int vertex;  // Shrink: edge source; Sort: the upper vertex of the pair, or the bottom vertex
    bool operator==(const RewriteSite&) const = default;
};
// Applicable sites, cycles first, then by vertex.
std::vector<RewriteSite> rewrite_sites(const Graph21& g);
// Result and sign of one rewriting step; every step is a product of IH
// moves (sign +1) and input swaps (sign -1).
std::pair<Graph21, int> apply_site(const Graph21& g, const RewriteSite& s);

struct NormalComponent {
    char type = 'c';          // 'a' comb tree, 'b' loop with comb, 'c' strand
    std::vector<Atom> legs;   // S1 legs, in S order
    Atom out = kUnlabeled;    // S2 leg for types a and c
};

struct NormalForm {
    Graph21 graph;            // canonical marked graph
    int sign = 1;             // input = sign · graph in C(S)
    std::vector<NormalComponent> components;
    std::string to_json(const AtomTable* t = nullptr) const;
};

// Canonical vertex order of an irreducible graph: components by first leg,
// comb vertices bottom-up, the loop vertex last.
NormalForm canonical_normal_form(const Graph21& irreducible);
bool is_irreducible(const Graph21& g);
// Always rewrites the first site.
NormalForm ih_rewrite(const Graph21& g);

// All maximal rewriting sequences from every graph over S; returns the
// number of graphs whose sequences reach different normal forms or signs.
struct ConfluenceReport {
    std::size_t graphs = 0, states = 0, failures = 0;
};
ConfluenceReport confluence_check(const FiniteSetPair& S);

// h_{2,1} per vertex and h_{1,1} per strand, composed along the edges.
PartitionVector graph_to_pdet(const Graph21& g);
// The labeled partition of a normal form and its det generator with sign.
std::pair<LabeledPartition, DetGenerator> graph_to_partition(const NormalForm& nf);

constexpr std::uint64_t kGraphLimit = 5000000;

struct GraphSpaceReport {
    std::size_t raw = 0;         // marked graphs
    std::size_t orbits = 0;      // basis of C(S) plus zero classes
    std::size_t nonzero = 0;     // dim C(S)
    std::size_t ih_rank = 0;
    std::size_t dim = 0;         // dim G(S)
    bool phi_descends = false;   // graph_to_pdet kills the sign and IH relations
    std::size_t phi_rank = 0;    // rank of graph_to_pdet on C(S)
};
GraphSpaceReport graph_space(const FiniteSetPair& S, bool force = false);
std::size_t graph_space_dim(const FiniteSetPair& S, bool force = false);

}  // namespace bcoend
