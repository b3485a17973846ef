#include "bcoend/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bcoend/brauer.hpp"
#include "text_util.hpp"

namespace bcoend {

namespace {

// Vertex fed by v's output, or -1 for an S2 leg.
int next_vertex(const Graph21& g, int v) {
    int h = g.match[std::size_t(g.out_tail(v))];
    return h < g.q() ? -1 : (h - g.q()) / 2;
}

int slot_of_output(const Graph21& g, int v) { return (g.match[std::size_t(g.out_tail(v))] - g.q()) % 2; }

Graph21 swap_inputs(const Graph21& g, int v) {
    Graph21 r = g;
    int a = g.feeder(v, 0), b = g.feeder(v, 1);
    r.match[std::size_t(a)] = g.slot_head(v, 1);
    r.match[std::size_t(b)] = g.slot_head(v, 0);
    return r;
}

std::vector<bool> cycle_vertices(const Graph21& g) {
    std::vector<bool> on(std::size_t(g.V), false);
    for (int v = 0; v < g.V; ++v) {
        int x = next_vertex(g, v);
        for (int step = 0; step < g.V && x >= 0 && x != v; ++step) x = next_vertex(g, x);
        on[std::size_t(v)] = x == v;
    }
    return on;
}

std::vector<int> components(const Graph21& g) {
    std::vector<int> parent(std::size_t(g.V));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[std::size_t(x)] == x ? x : parent[std::size_t(x)] = find(parent[std::size_t(x)]); };
    for (int v = 0; v < g.V; ++v) {
        int w = next_vertex(g, v);
        if (w >= 0) parent[std::size_t(find(v))] = find(w);
    }
    std::vector<int> c(std::size_t(g.V));
    for (int v = 0; v < g.V; ++v) c[std::size_t(v)] = find(v);
    return c;
}

std::uint64_t encode(const std::vector<int>& m) {
    std::uint64_t k = 0;
    for (int x : m) k = (k << 4) | std::uint64_t(x);
    return k;
}

std::size_t lehmer_rank(const std::vector<int>& perm) {
    std::size_t r = 0;
    int k = int(perm.size());
    for (int i = 0; i < k; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < k; ++j)
            if (perm[std::size_t(j)] < perm[std::size_t(i)]) ++smaller;
        r = r * std::size_t(k - i) + std::size_t(smaller);
    }
    return r;
}

std::vector<int> lehmer_unrank(std::size_t r, int k) {
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        std::size_t base = std::size_t(k - i);
        digits[std::size_t(i)] = int(r % base);
        r /= base;
    }
    std::vector<int> avail(static_cast<std::size_t>(k));
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm;
    for (int i = 0; i < k; ++i) {
        perm.push_back(avail[std::size_t(digits[std::size_t(i)])]);
        avail.erase(avail.begin() + digits[std::size_t(i)]);
    }
    return perm;
}

std::string vertex_name(int v) { return "v" + std::to_string(v + 1); }

std::string head_name(const Graph21& g, int h, const AtomTable* t) {
    if (h < g.q()) return atom_name(g.S.s2[std::size_t(h)], t);
    int v = (h - g.q()) / 2, j = (h - g.q()) % 2;
    return vertex_name(v) + ".in" + std::to_string(j + 1);
}

int parse_head(const Graph21& g, const std::string& tok, AtomTable* t) {
    auto dot = tok.find(".in");
    if (tok.size() > 1 && tok[0] == 'v' && dot != std::string::npos) {
        int v = std::stoi(tok.substr(1, dot - 1)) - 1, j = std::stoi(tok.substr(dot + 3)) - 1;
        if (v < 0 || v >= g.V || j < 0 || j > 1) throw std::invalid_argument("graph: bad slot " + tok);
        return g.slot_head(v, j);
    }
    Atom a = parse_atom(tok, t);
    auto it = std::find(g.S.s2.begin(), g.S.s2.end(), a);
    if (it == g.S.s2.end()) throw std::invalid_argument("graph: unknown output leg " + tok);
    return int(it - g.S.s2.begin());
}

PartitionVector single(FiniteSetPair s, Block b) { return PartitionVector::basis(std::move(s), LabeledPartition({std::move(b)})); }

}  // namespace

int Graph21::feeder(int v, int j) const {
    int h = slot_head(v, j);
    for (std::size_t t = 0; t < match.size(); ++t)
        if (match[t] == h) return int(t);
    throw std::logic_error("graph: slot without feeder");
}

int Graph21::feeder_vertex(int v, int j) const {
    int t = feeder(v, j);
    return t < p() ? -1 : t - p();
}

std::string Graph21::to_string(const AtomTable* t) const {
    std::ostringstream os;
    os << "V=" << V << "; out=[";
    for (int v = 0; v < V; ++v)
        os << (v ? "," : "") << "(" << vertex_name(v) << "→" << head_name(*this, match[std::size_t(out_tail(v))], t) << ")";
    os << "]; legs=[";
    for (int s = 0; s < p(); ++s)
        os << (s ? "," : "") << "(" << atom_name(S.s1[std::size_t(s)], t) << "→" << head_name(*this, match[std::size_t(s)], t) << ")";
    os << "]";
    return os.str();
}

Graph21 Graph21::parse(const FiniteSetPair& S, const std::string& text, AtomTable* t) {
    Graph21 g;
    g.S = S;
    g.V = S.degree();
    if (g.V < 0) throw std::invalid_argument("graph: |S1| < |S2|");
    g.match.assign(std::size_t(g.p() + g.V), -1);
    bool seen_v = false;
    for (const std::string& field : split(text, ';')) {
        if (field.empty()) continue;
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("graph: expected key=value in " + field);
        std::string key = trim(field.substr(0, eq)), val = trim(field.substr(eq + 1));
        if (key == "V") {
            if (std::stoi(val) != g.V) throw std::invalid_argument("graph: V must be |S1|-|S2|");
            seen_v = true;
        } else if (key == "out" || key == "legs") {
            for (auto& [a, b] : parse_arrow_pairs(val)) {
                int tail;
                if (key == "out") {
                    if (a.size() < 2 || a[0] != 'v') throw std::invalid_argument("graph: bad vertex " + a);
                    int v = std::stoi(a.substr(1)) - 1;
                    if (v < 0 || v >= g.V) throw std::invalid_argument("graph: bad vertex " + a);
                    tail = g.out_tail(v);
                } else {
                    Atom x = parse_atom(a, t);
                    auto it = std::find(S.s1.begin(), S.s1.end(), x);
                    if (it == S.s1.end()) throw std::invalid_argument("graph: unknown input leg " + a);
                    tail = int(it - S.s1.begin());
                }
                if (g.match[std::size_t(tail)] != -1) throw std::invalid_argument("graph: tail used twice");
                g.match[std::size_t(tail)] = parse_head(g, b, t);
            }
        } else {
            throw std::invalid_argument("graph: unknown field " + key);
        }
    }
    if (!seen_v) throw std::invalid_argument("graph: missing V");
    std::vector<int> sorted = g.match;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != int(i)) throw std::invalid_argument("graph: not a bijection onto the heads");
    return g;
}

std::vector<Graph21> enumerate_graphs(const FiniteSetPair& S) {
    std::vector<Graph21> out;
    int V = S.degree();
    if (V < 0) return out;
    int k = int(S.s1.size()) + V;
    for_each_permutation(k, [&](const std::vector<std::size_t>& perm) {
        Graph21 g{S, V, std::vector<int>(perm.begin(), perm.end())};
        out.push_back(std::move(g));
    });
    return out;
}

std::pair<Graph21, int> reorder_sign(const Graph21& g, const std::vector<int>& f, const std::vector<bool>& swap) {
    Graph21 r = g;
    int p = g.p(), q = g.q();
    auto map_head = [&](int h) {
        if (h < q) return h;
        int v = (h - q) / 2, j = (h - q) % 2;
        return q + 2 * f[std::size_t(v)] + (j ^ int(swap[std::size_t(v)]));
    };
    for (int t = 0; t < int(g.match.size()); ++t) {
        int nt = t < p ? t : p + f[std::size_t(t - p)];
        r.match[std::size_t(nt)] = map_head(g.match[std::size_t(t)]);
    }
    int sign = permutation_sign(std::vector<std::size_t>(f.begin(), f.end()));
    for (bool s : swap)
        if (s) sign = -sign;
    return {std::move(r), sign};
}

Graph21 ih_move(const Graph21& g, int u) {
    int w = next_vertex(g, u);
    if (w < 0 || w == u) throw std::invalid_argument("ih_move: output of u must feed another vertex");
    int s = slot_of_output(g, u);
    int a = g.feeder(u, 0), b = g.feeder(u, 1), c = g.feeder(w, 1 - s);
    Graph21 r = g;
    r.match[std::size_t(c)] = g.slot_head(u, 0);
    r.match[std::size_t(a)] = g.slot_head(u, 1);
    r.match[std::size_t(b)] = g.slot_head(w, 1 - s);
    return r;
}

std::vector<RewriteSite> rewrite_sites(const Graph21& g) {
    std::vector<RewriteSite> out;
    std::vector<bool> cyc = cycle_vertices(g);
    std::vector<int> comp = components(g);
    std::set<int> busy;
    auto add = [&](RewriteKind k, int v) {
        out.push_back({k, v});
        busy.insert(comp[std::size_t(v)]);
    };
    for (int u = 0; u < g.V; ++u)
        if (cyc[std::size_t(u)] && next_vertex(g, u) != u) add(RewriteKind::Shrink, u);
    for (int z = 0; z < g.V; ++z)
        if (g.feeder_vertex(z, 1) == z) add(RewriteKind::LoopSwap, z);
    for (int w = 0; w < g.V; ++w)
        if (!cyc[std::size_t(w)] && g.feeder_vertex(w, 1) >= 0) add(RewriteKind::Rotate, w);
    // Leg transpositions only in components that are already combs.
    for (int w = 0; w < g.V; ++w) {
        if (busy.count(comp[std::size_t(w)])) continue;
        int t0 = g.feeder(w, 0), t1 = g.feeder(w, 1);
        if (t1 >= g.p()) continue;
        if (t0 < g.p()) {
            if (t0 > t1) out.push_back({RewriteKind::Sort, w});
            continue;
        }
        int u = t0 - g.p();
        if (u == w) continue;
        int l = g.feeder(u, 1);
        if (l < g.p() && l > t1) out.push_back({RewriteKind::Sort, w});
    }
    return out;
}

std::pair<Graph21, int> apply_site(const Graph21& g, const RewriteSite& s) {
    switch (s.kind) {
    case RewriteKind::LoopSwap:
        return {swap_inputs(g, s.vertex), -1};
    case RewriteKind::Rotate: {
        // w(L, x(c,d)) = -w(x(c,d), L) = -w(x(L,c), d)
        int x = g.feeder_vertex(s.vertex, 1);
        return {ih_move(swap_inputs(g, s.vertex), x), -1};
    }
    case RewriteKind::Shrink: {
        int u = s.vertex;
        std::vector<bool> cyc = cycle_vertices(g);
        int pred1 = g.feeder_vertex(u, 1);
        bool once = pred1 >= 0 && cyc[std::size_t(pred1)] && next_vertex(g, pred1) == u;
        Graph21 r = ih_move(g, u);
        if (!once) r = ih_move(r, u);
        return {std::move(r), 1};
    }
    case RewriteKind::Sort: {
        int w = s.vertex;
        int u = g.feeder_vertex(w, 0);
        if (u < 0) return {swap_inputs(g, w), -1};
        // u(X,a), w(u,b) -> u(b,X), w(u,a) -> -u(X,b), w(u,a)
        return {swap_inputs(ih_move(g, u), u), -1};
    }
    }
    throw std::logic_error("apply_site: unknown kind");
}

bool is_irreducible(const Graph21& g) { return rewrite_sites(g).empty(); }

NormalForm canonical_normal_form(const Graph21& g) {
    if (!is_irreducible(g)) throw std::invalid_argument("canonical_normal_form: graph is reducible");
    struct Comp {
        int first;
        NormalComponent nc;
        std::vector<int> order;
    };
    std::vector<Comp> comps;
    int p = g.p(), q = g.q();
    for (int s = 0; s < p; ++s) {
        int h = g.match[std::size_t(s)];
        if (h < q) comps.push_back({s, {'c', {g.S.s1[std::size_t(s)]}, g.S.s2[std::size_t(h)]}, {}});
    }
    for (int v = 0; v < g.V; ++v) {
        int nx = next_vertex(g, v);
        bool root = nx < 0, loop = nx == v;
        if (!root && !loop) continue;
        Comp c;
        c.nc.type = root ? 'a' : 'b';
        if (root) c.nc.out = g.S.s2[std::size_t(g.match[std::size_t(g.out_tail(v))])];
        int top = root ? v : g.feeder_vertex(v, 1);
        std::vector<int> chain;
        for (int x = top; x >= 0; x = g.feeder_vertex(x, 0)) chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        std::vector<int> legs;
        if (chain.empty()) {
            legs.push_back(g.feeder(v, 1));
        } else {
            legs.push_back(g.feeder(chain[0], 0));
            for (int x : chain) legs.push_back(g.feeder(x, 1));
        }
        c.order = chain;
        if (loop) c.order.push_back(v);
        c.first = *std::min_element(legs.begin(), legs.end());
        for (int l : legs) c.nc.legs.push_back(g.S.s1[std::size_t(l)]);
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) { return a.first < b.first; });
    std::vector<int> f(std::size_t(g.V), -1);
    int next = 0;
    NormalForm nf;
    for (auto& c : comps) {
        for (int x : c.order) f[std::size_t(x)] = next++;
        nf.components.push_back(c.nc);
    }
    if (next != g.V) throw std::logic_error("canonical_normal_form: vertices outside components");
    auto [r, sign] = reorder_sign(g, f, std::vector<bool>(std::size_t(g.V), false));
    nf.graph = std::move(r);
    nf.sign = sign;
    return nf;
}

NormalForm ih_rewrite(const Graph21& g) {
    Graph21 cur = g;
    int sign = 1;
    for (std::size_t steps = 0;; ++steps) {
        auto sites = rewrite_sites(cur);
        if (sites.empty()) break;
        if (steps > 100000) throw std::logic_error("ih_rewrite: no termination");
        auto [r, s] = apply_site(cur, sites.front());
        cur = std::move(r);
        sign *= s;
    }
    NormalForm nf = canonical_normal_form(cur);
    nf.sign *= sign;
    return nf;
}

std::string NormalForm::to_json(const AtomTable* t) const {
    std::ostringstream os;
    os << "{\"graph\":\"" << graph.to_string(t) << "\",\"sign\":" << sign << ",\"components\":[";
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        os << (i ? "," : "") << "{\"type\":\"" << c.type << "\",\"legs\":[";
        for (std::size_t k = 0; k < c.legs.size(); ++k) os << (k ? "," : "") << "\"" << atom_name(c.legs[k], t) << "\"";
        os << "]";
        if (c.out != kUnlabeled) os << ",\"out\":\"" << atom_name(c.out, t) << "\"";
        os << "}";
    }
    os << "]}";
    return os.str();
}

ConfluenceReport confluence_check(const FiniteSetPair& S) {
    ConfluenceReport rep;
    using Result = std::vector<std::pair<std::uint64_t, int>>;  // (normal form, sign), sorted
    std::unordered_map<std::uint64_t, Result> memo;
    std::function<const Result&(const Graph21&)> solve = [&](const Graph21& g) -> const Result& {
        std::uint64_t key = encode(g.match);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Result res;
        auto sites = rewrite_sites(g);
        if (sites.empty()) {
            NormalForm nf = canonical_normal_form(g);
            res.push_back({encode(nf.graph.match), nf.sign});
        } else {
            std::set<std::pair<std::uint64_t, int>> acc;
            for (const auto& s : sites) {
                auto [r, sign] = apply_site(g, s);
                for (auto [nf, ns] : solve(r)) acc.insert({nf, ns * sign});
            }
            res.assign(acc.begin(), acc.end());
        }
        return memo.emplace(key, std::move(res)).first->second;
    };
    for (const Graph21& g : enumerate_graphs(S)) {
        ++rep.graphs;
        if (solve(g).size() != 1) ++rep.failures;
    }
    rep.states = memo.size();
    return rep;
}

PartitionVector graph_to_pdet(const Graph21& g) {
    int p = g.p(), q = g.q();
    // Product object: vertex v has inputs 2v+1, 2v+2 and output v+1; strands follow.
    PartitionVector prod = PartitionVector::basis(FiniteSetPair({}, {}), LabeledPartition());
    for (int v = 0; v < g.V; ++v) {
        Atom a = 2 * v + 1, b = 2 * v + 2, o = v + 1;
        prod = day_product(prod, single(FiniteSetPair({a, b}, {o}), Block{{a, b}, o}));
    }
    std::vector<std::pair<Atom, Atom>> through, contractions, dual;
    int k = 0;
    for (int s = 0; s < p; ++s) {
        int h = g.match[std::size_t(s)];
        Atom leg = g.S.s1[std::size_t(s)];
        if (h < q) {
            Atom i = 2 * g.V + 1 + k, o = g.V + 1 + k;
            ++k;
            prod = day_product(prod, single(FiniteSetPair({i}, {o}), Block{{i}, o}));
            through.push_back({i, leg});
            dual.push_back({g.S.s2[std::size_t(h)], o});
        } else {
            through.push_back({Atom(h - q + 1), leg});
        }
    }
    for (int v = 0; v < g.V; ++v) {
        int h = g.match[std::size_t(g.out_tail(v))];
        if (h < q)
            dual.push_back({g.S.s2[std::size_t(h)], v + 1});
        else
            contractions.push_back({Atom(h - q + 1), v + 1});
    }
    WalledDiagram D = WalledDiagram::from_pairs(prod.S, g.S, through, contractions, {}, dual);
    // Graphs never remove a labeled singleton, so the charge does not enter.
    return apply_Pdet(D, prod, Rational(0));
}

std::pair<LabeledPartition, DetGenerator> graph_to_partition(const NormalForm& nf) {
    PartitionVector v = graph_to_pdet(nf.graph);
    if (v.terms.size() != 1) throw std::logic_error("graph_to_partition: image is not a single partition");
    auto& [part, c] = *v.terms.begin();
    int s = c * nf.sign == 1 ? 1 : c * nf.sign == -1 ? -1 : 0;
    if (s == 0) throw std::logic_error("graph_to_partition: coefficient is not a sign");
    DetGenerator d = DetGenerator::canonical(nf.graph.S);
    d.sign = s;
    return {part, d};
}

GraphSpaceReport graph_space(const FiniteSetPair& S, bool force) {
    GraphSpaceReport rep;
    int V = S.degree();
    if (V < 0) {
        rep.phi_descends = true;
        return rep;
    }
    int k = int(S.s1.size()) + V;
    if (k > 15) throw GuardrailError("graph space: too many tails");
    check_size(factorial(k), kGraphLimit, force, "marked graphs");
    rep.raw = factorial(k);
    std::vector<int> orbit(rep.raw, -1);
    std::vector<signed char> osign(rep.raw, 0);
    std::vector<std::size_t> reps;
    std::vector<bool> zero;
    std::vector<std::vector<int>> perms;
    for_each_permutation(V, [&](const std::vector<std::size_t>& f) { perms.emplace_back(f.begin(), f.end()); });
    for (std::size_t r = 0; r < rep.raw; ++r) {
        if (orbit[r] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(r);
        zero.push_back(false);
        Graph21 g{S, V, lehmer_unrank(r, k)};
        for (const auto& f : perms)
            for (unsigned mask = 0; mask < (1u << V); ++mask) {
                std::vector<bool> sw(static_cast<std::size_t>(V));
                for (int v = 0; v < V; ++v) sw[std::size_t(v)] = (mask >> v) & 1u;
                auto [h, s] = reorder_sign(g, f, sw);
                std::size_t rh = lehmer_rank(h.match);
                if (orbit[rh] < 0) {
                    orbit[rh] = id;
                    osign[rh] = static_cast<signed char>(s);
                } else if (osign[rh] != s) {
                    zero[std::size_t(id)] = true;
                }
            }
    }
    rep.orbits = reps.size();
    std::vector<long> column(reps.size(), -1);
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!zero[i]) column[i] = long(rep.nonzero++);
    auto coord = [&](const Graph21& g) -> std::pair<long, int> {
        std::size_t r = lehmer_rank(g.match);
        return {column[std::size_t(orbit[r])], osign[r]};
    };

    // Basis of P⊗det(S) for the rank of graph_to_pdet.
    std::map<LabeledPartition, std::size_t> pindex;
    for (const auto& lp : enumerate_labeled_partitions(S, false)) pindex.emplace(lp, pindex.size());
    auto phi_row = [&](const Graph21& g) {
        SparseRow row;
        for (auto& [lp, c] : graph_to_pdet(g).terms) row.push_back({pindex.at(lp), c});
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return row;
    };
    auto sub = [](SparseRow a, const SparseRow& b, const Rational& s) { return axpy_row(a, s, b); };

    SparseEchelon ih(rep.nonzero), phi(pindex.size());
    bool descends = true;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Graph21 g{S, V, lehmer_unrank(reps[i], k)};
        SparseRow pg = phi_row(g);
        if (zero[i] && !pg.empty()) descends = false;
        if (!zero[i]) phi.add(pg);
        // Sign relations under the generators of the vertex symmetries.
        for (int v = 0; v < V; ++v) {
            if (!sub(phi_row(swap_inputs(g, v)), pg, Rational(-1)).empty()) descends = false;
            if (v + 1 < V) {
                std::vector<int> f(static_cast<std::size_t>(V));
                std::iota(f.begin(), f.end(), 0);
                std::swap(f[std::size_t(v)], f[std::size_t(v + 1)]);
                auto [h, s] = reorder_sign(g, f, std::vector<bool>(std::size_t(V), false));
                if (!sub(phi_row(h), pg, Rational(s)).empty()) descends = false;
            }
        }
        for (int u = 0; u < V; ++u) {
            int w = next_vertex(g, u);
            if (w < 0 || w == u) continue;
            for (const Graph21& g0 : {g, swap_inputs(g, u)}) {
                Graph21 g1 = ih_move(g0, u);
                SparseRow row;
                auto [c0, s0] = coord(g0);
                auto [c1, s1] = coord(g1);
                std::map<std::size_t, Rational> acc;
                if (c0 >= 0) acc[std::size_t(c0)] += s0;
                if (c1 >= 0) acc[std::size_t(c1)] -= s1;
                for (auto& [c, x] : acc)
                    if (sgn(x) != 0) row.push_back({c, x});
                ih.add(row);
                if (!sub(phi_row(g0), phi_row(g1), Rational(1)).empty()) descends = false;
            }
        }
    }
    rep.ih_rank = ih.rank();
    rep.dim = rep.nonzero - rep.ih_rank;
    rep.phi_rank = phi.rank();
    rep.phi_descends = descends;
    return rep;
}

std::size_t graph_space_dim(const FiniteSetPair& S, bool force) { return graph_space(S, force).dim; }

}  // namespace bcoend
