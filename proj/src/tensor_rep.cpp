#include "bcoend/tensor_rep.hpp"

#include <map>
#include <stdexcept>

namespace bcoend {

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

std::map<Atom, std::size_t> positions(const std::vector<Atom>& v, std::size_t offset = 0) {
    std::map<Atom, std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) out[v[i]] = offset + i;
    return out;
}

IntMatrix identity_int(int n) {
    IntMatrix m(std::size_t(n), std::vector<int>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix transpose_int(const IntMatrix& a) {
    IntMatrix t(a[0].size(), std::vector<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace

std::uint64_t tensor_dim(const FiniteSetPair& s, int n) {
    return ipow(std::uint64_t(n), s.size());
}

std::vector<int> tensor_word(std::uint64_t index, std::size_t length, int n) {
    std::vector<int> w(length);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = int(index % std::uint64_t(n));
        index /= std::uint64_t(n);
    }
    return w;
}

std::uint64_t tensor_index(const std::vector<int>& word, int n) {
    std::uint64_t r = 0;
    for (int x : word) r = r * std::uint64_t(n) + std::uint64_t(x);
    return r;
}

RationalMatrix K_on_morphism(const WalledDiagram& m, int n, bool force) {
    if (n < 1) throw std::invalid_argument("K_on_morphism: n must be positive");
    const auto& S = m.source();
    const auto& T = m.target();
    std::uint64_t ds = tensor_dim(S, n), dt = tensor_dim(T, n);
    check_size(std::max(ds, dt), kTensorLimit, force, "tensor space");
    auto ps1 = positions(S.s1), ps2 = positions(S.s2, S.s1.size());
    auto pt1 = positions(T.s1), pt2 = positions(T.s2, T.s1.size());

    std::vector<std::pair<std::size_t, std::size_t>> con, thr, ins;  // positions
    for (auto [x, y] : m.contractions()) con.push_back({ps1.at(x), ps2.at(y)});
    for (auto [x, t] : m.through()) thr.push_back({ps1.at(x), pt1.at(t)});
    for (auto [t, y] : m.dual_through()) thr.push_back({ps2.at(y), pt2.at(t)});
    for (auto [x, y] : m.insertions()) ins.push_back({pt1.at(x), pt2.at(y)});
    std::uint64_t nins = ipow(std::uint64_t(n), ins.size());

    std::vector<SparseRow> cols(ds);
    std::vector<int> tw(T.size());
    for (std::uint64_t c = 0; c < ds; ++c) {
        auto w = tensor_word(c, S.size(), n);
        bool alive = true;
        for (auto [a, b] : con)
            if (w[a] != w[b]) alive = false;
        if (!alive) continue;
        for (auto [a, b] : thr) tw[b] = w[a];
        std::vector<std::pair<std::size_t, Rational>> col;
        for (std::uint64_t k = 0; k < nins; ++k) {
            auto iw = tensor_word(k, ins.size(), n);
            for (std::size_t j = 0; j < ins.size(); ++j) tw[ins[j].first] = tw[ins[j].second] = iw[j];
            col.push_back({std::size_t(tensor_index(tw, n)), m.coefficient()});
        }
        std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
        cols[c] = std::move(col);
    }
    return RationalMatrix::from_columns(std::size_t(dt), cols);
}

std::vector<GroupGenerator> gl_generators(int n) {
    std::vector<GroupGenerator> out;
    if (n < 1) return out;
    if (n >= 2) {
        auto g = identity_int(n), h = identity_int(n);
        g[0][1] = 1;
        h[0][1] = -1;
        out.push_back({"I+E12", g, h});
        IntMatrix c(std::size_t(n), std::vector<int>(std::size_t(n), 0));
        for (int i = 0; i < n; ++i) c[std::size_t((i + 1) % n)][std::size_t(i)] = 1;  // e_i -> e_{i+1}
        out.push_back({"n-cycle", c, transpose_int(c)});
        auto s = identity_int(n);
        s[0][0] = s[1][1] = 0;
        s[0][1] = s[1][0] = 1;
        out.push_back({"(12)", s, s});
    }
    auto d = identity_int(n);
    d[0][0] = -1;
    out.push_back({"diag(-1,1,...)", d, d});
    return out;
}

RationalMatrix gl_action(const GroupGenerator& g, int p, int q, bool force) {
    int n = int(g.g.size());
    auto S = FiniteSetPair::standard(p, q);
    std::uint64_t dim = tensor_dim(S, n);
    check_size(dim, kTensorLimit, force, "tensor space");
    // Column j of the factor acting on slot k: g e_j on H, g^{-T} e_j^# on H^∨.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> fac(2, std::vector<std::vector<std::pair<int, int>>>(std::size_t(n)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (g.g[i][j]) fac[0][j].push_back({i, g.g[i][j]});
            if (g.inverse[j][i]) fac[1][j].push_back({i, g.inverse[j][i]});
        }
    std::size_t len = S.size();
    std::vector<SparseRow> cols(dim);
    for (std::uint64_t c = 0; c < dim; ++c) {
        auto w = tensor_word(c, len, n);
        std::vector<std::pair<std::uint64_t, long>> cur{{0, 1}};
        for (std::size_t k = 0; k < len; ++k) {
            const auto& f = fac[k < std::size_t(p) ? 0 : 1][std::size_t(w[k])];
            std::vector<std::pair<std::uint64_t, long>> next;
            next.reserve(cur.size() * f.size());
            for (auto& [idx, v] : cur)
                for (auto& [i, x] : f) next.push_back({idx * std::uint64_t(n) + std::uint64_t(i), v * x});
            cur = std::move(next);
        }
        std::map<std::size_t, long> acc;
        for (auto& [idx, v] : cur) acc[std::size_t(idx)] += v;
        for (auto& [idx, v] : acc)
            if (v) cols[c].push_back({idx, Rational(v)});
    }
    return RationalMatrix::from_columns(std::size_t(dim), cols);
}

WalledDiagram insertion_along(const FiniteSetPair& I, const FiniteSetPair& S, const Matching& m) {
    std::vector<std::pair<Atom, Atom>> th, du;
    for (Atom a : I.s1) th.push_back({a, a});
    for (Atom b : I.s2) du.push_back({b, b});
    return WalledDiagram::from_pairs(I, S, th, {}, m, du);
}

InvariantReport invariants(const FiniteSetPair& s, int n, bool force) {
    if (n < 1) throw std::invalid_argument("invariants: n must be positive");
    std::uint64_t dim = tensor_dim(s, n);
    check_size(dim, kTensorLimit, force, "tensor space");
    auto st = FiniteSetPair::standard(int(s.s1.size()), int(s.s2.size()));
    SparseEchelon ech{std::size_t(dim)};
    auto id = RationalMatrix::identity(std::size_t(dim));
    for (auto& g : gl_generators(n)) {
        auto r = gl_action(g, int(s.s1.size()), int(s.s2.size()), force) - id;
        for (auto& row : r.sparse_rows())
            if (!row.empty()) ech.add(row);
    }
    InvariantReport rep;
    rep.basis = ech.nullspace();
    rep.dim = rep.basis.cols();

    // ω_m(1) for each perfect matching, in the standard numbering of S.
    std::vector<SparseRow> span;
    FiniteSetPair empty;
    for (auto& m : enumerate_matchings(st)) {
        auto K = K_on_morphism(insertion_along(empty, st, m), n, force);
        span.push_back(K.sparse_columns()[0]);
    }
    rep.matching_span = RationalMatrix::from_columns(std::size_t(dim), span);
    rep.span_inside = true;
    SparseEchelon inv{std::size_t(dim)};
    for (auto& col : rep.basis.sparse_columns()) inv.add(col);
    SparseEchelon sp{std::size_t(dim)};
    for (auto& v : span) {
        if (!inv.in_span(v)) rep.span_inside = false;
        sp.add(v);
    }
    rep.span_rank = sp.rank();
    return rep;
}

RationalMatrix traceless(const FiniteSetPair& s, int n, bool force) {
    std::uint64_t dim = tensor_dim(s, n);
    check_size(dim, kTensorLimit, force, "tensor space");
    SparseEchelon ech{std::size_t(dim)};
    for (Atom x : s.s1)
        for (Atom y : s.s2)
            for (auto& row : K_on_morphism(WalledDiagram::contraction(s, x, y), n, force).sparse_rows())
                if (!row.empty()) ech.add(row);
    return ech.nullspace();
}

DecompositionReport decomposition_check(const FiniteSetPair& s, int n, bool force) {
    DecompositionReport rep;
    rep.total = tensor_dim(s, n);
    check_size(rep.total, kTensorLimit, force, "tensor space");
    SparseEchelon all{std::size_t(rep.total)};
    std::size_t p = s.s1.size(), q = s.s2.size();
    std::map<std::pair<std::size_t, std::size_t>, RationalMatrix> cache;
    // I keeps the atoms selected by the masks; the rest must be matched.
    for (std::uint32_t m1 = 0; m1 < (1u << p); ++m1)
        for (std::uint32_t m2 = 0; m2 < (1u << q); ++m2) {
            FiniteSetPair I, R;
            for (std::size_t i = 0; i < p; ++i) ((m1 >> i) & 1 ? I.s1 : R.s1).push_back(s.s1[i]);
            for (std::size_t j = 0; j < q; ++j) ((m2 >> j) & 1 ? I.s2 : R.s2).push_back(s.s2[j]);
            if (R.s1.size() != R.s2.size()) continue;
            auto key = std::make_pair(I.s1.size(), I.s2.size());
            if (!cache.count(key)) cache[key] = traceless(I, n, force);
            const auto& base = cache[key];
            for (auto& m : enumerate_matchings(R)) {
                auto img = K_on_morphism(insertion_along(I, s, m), n, force) * base;
                SparseEchelon local{std::size_t(rep.total)};
                for (auto& col : img.sparse_columns()) {
                    local.add(col);
                    all.add(col);
                }
                rep.summands.push_back({I, m, local.rank()});
                rep.summand_sum += local.rank();
            }
        }
    rep.image_rank = all.rank();
    return rep;
}

}  // namespace bcoend
