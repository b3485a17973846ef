#include "bcoend/coend.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bcoend/brauer.hpp"
#include "bcoend/partitions.hpp"
#include "bcoend/tensor_rep.hpp"

namespace bcoend {

std::string monomial_to_string(const BlockMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "·";
        out += "[";
        for (std::size_t j = 0; j < m[i].elems.size(); ++j) out += (j ? "," : "") + std::to_string(m[i].elems[j]);
        out += ";" + (m[i].labeled() ? std::to_string(m[i].label) : std::string("·")) + "]";
    }
    return out;
}

int monomial_degree(const BlockMonomial& m) {
    int d = 0;
    for (auto& b : m) d += b.degree();
    return d;
}

namespace {

// Class of a labeled partition of S with indices f on S.s1 and e on S.s2.
SignedMonomial class_of(const FiniteSetPair& S, const std::map<Atom, int>& f, const std::map<Atom, int>& e,
                        const LabeledPartition& P) {
    struct Item {
        DecoratedBlock b;
        std::vector<Atom> atoms;
        Atom label;
    };
    std::vector<Item> items;
    items.reserve(P.parts.size());
    for (auto& part : P.parts) {
        std::vector<std::pair<int, Atom>> el;
        for (Atom a : part.elems) el.push_back({f.at(a), a});
        std::sort(el.begin(), el.end());
        Item it;
        for (std::size_t i = 0; i < el.size(); ++i) {
            if (i && el[i].first == el[i - 1].first) return {};
            it.b.elems.push_back(el[i].first);
            it.atoms.push_back(el[i].second);
        }
        it.label = part.label;
        it.b.label = part.labeled() ? e.at(part.label) : 0;
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.b < y.b; });
    SignedMonomial out;
    std::vector<Atom> c1, c2;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i && items[i].b == items[i - 1].b && items[i].b.fermionic()) return {};
        out.mono.push_back(items[i].b);
        c1.insert(c1.end(), items[i].atoms.begin(), items[i].atoms.end());
        if (items[i].b.labeled()) c2.push_back(items[i].label);
    }
    out.sign = permutation_sign(S.s1, c1) * permutation_sign(S.s2, c2);
    return out;
}

// Standard realization of a block list: atoms 1..p and labels 1..q in block order.
struct Realization {
    FiniteSetPair S;
    std::map<Atom, int> f, e;
    LabeledPartition P;
};

Realization realize(const BlockMonomial& blocks) {
    Realization r;
    std::vector<Atom> s1, s2;
    Atom a = 1, l = 1;
    for (auto& b : blocks) {
        Block part;
        for (int x : b.elems) {
            s1.push_back(a);
            part.elems.push_back(a);
            r.f[a++] = x;
        }
        if (b.labeled()) {
            s2.push_back(l);
            part.label = l;
            r.e[l++] = b.label;
        }
        r.P.parts.push_back(std::move(part));
    }
    r.P.canonicalize();
    r.S = FiniteSetPair(s1, s2);
    return r;
}

void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = from; x <= n; ++x) {
        cur.push_back(x);
        subsets(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k >= 0) subsets(n, k, 1, cur, out);
    return out;
}

// All blocks of degree k, sorted.
std::vector<DecoratedBlock> blocks_of_degree(int n, int k) {
    std::vector<DecoratedBlock> out;
    for (auto& s : subsets(n, k)) out.push_back({s, 0});
    for (auto& s : subsets(n, k + 1))
        if (s.size() >= 2)
            for (int l = 1; l <= n; ++l) out.push_back({s, l});
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical nonzero monomials of degree d.
std::vector<BlockMonomial> monomials_of_degree(int n, int d) {
    std::vector<DecoratedBlock> all;
    for (int k = 1; k <= d; ++k) {
        auto b = blocks_of_degree(n, k);
        all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<BlockMonomial> out;
    BlockMonomial cur;
    auto rec = [&](auto&& self, std::size_t from, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i) {
            int k = all[i].degree();
            if (k > rem) continue;
            if (!cur.empty() && cur.back() == all[i] && all[i].fermionic()) continue;
            cur.push_back(all[i]);
            self(self, all[i].fermionic() ? i + 1 : i, rem - k);
            cur.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

std::uint64_t count_monomials(int n, int d) {
    // Odd blocks appear at most once, even blocks with repetition.
    std::vector<double> c(std::size_t(d) + 1, 0.0);
    c[0] = 1;
    for (int k = 1; k <= d; ++k) {
        double nb = double(binomial(n, k)) + double(binomial(n, k + 1)) * n;
        std::vector<double> next(c.size(), 0.0);
        for (int i = 0; i <= d; ++i) {
            double ways = 1;
            for (int j = 0; i + j * k <= d && ways > 0; ++j) {
                next[std::size_t(i + j * k)] += c[std::size_t(i)] * ways;
                ways = k % 2 ? ways * (nb - j) / (j + 1) : ways * (nb + j) / (j + 1);
            }
        }
        c = next;
    }
    return std::uint64_t(c[std::size_t(d)]);
}

}  // namespace

SignedMonomial canonical_class(const BlockMonomial& blocks) {
    auto r = realize(blocks);
    return class_of(r.S, r.f, r.e, r.P);
}

SignedMonomial block_product(const BlockMonomial& a, const BlockMonomial& b) {
    int pa = 0, sb = 0;
    for (auto& x : a) pa += int(x.elems.size());
    for (auto& x : b) sb += int(x.elems.size()) + (x.labeled() ? 1 : 0);
    BlockMonomial cat = a;
    cat.insert(cat.end(), b.begin(), b.end());
    auto out = canonical_class(cat);
    if ((pa * sb) % 2) out.sign = -out.sign;
    return out;
}

std::vector<int> monomial_weight(const BlockMonomial& m, int n) {
    std::vector<int> w(std::size_t(n), 0);
    for (auto& b : m) {
        for (int x : b.elems) w[std::size_t(x - 1)]--;
        if (b.labeled()) w[std::size_t(b.label - 1)]++;
    }
    return w;
}

SparseRow CoendComponent::ambient_vector(const SignedMonomial& m) const {
    if (m.sign == 0) return {};
    auto it = index.find(m.mono);
    if (it == index.end()) throw std::logic_error("monomial outside the ambient space: " + monomial_to_string(m.mono));
    return {{it->second, Rational(m.sign)}};
}

std::vector<Rational> CoendComponent::reduce(const SparseRow& v) const {
    std::vector<Rational> out(dim);
    std::map<std::vector<int>, SparseRow> split;
    for (auto& [c, x] : v) split[weight_of_column[c]].push_back({c, x});
    for (auto& [w, part] : split) {
        const auto& q = weights.at(w);
        SparseRow local;
        for (auto& [c, x] : part) {
            auto pos = std::lower_bound(q.columns.begin(), q.columns.end(), c) - q.columns.begin();
            local.push_back({std::size_t(pos), x});
        }
        std::sort(local.begin(), local.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (auto& [c, x] : q.relations.reduce(local)) {
            auto pos = std::lower_bound(q.free.begin(), q.free.end(), c) - q.free.begin();
            out[q.offset + std::size_t(pos)] += x;
        }
    }
    return out;
}

std::string CoendComponent::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"degree\":" << degree << ",\"ambient_dim\":" << ambient.size()
       << ",\"relation_rank\":" << relation_rank << ",\"dim\":" << dim << "}";
    return os.str();
}

CoendComponent compute_R(int n, int degree, bool force) {
    if (n < 1 || degree < 0) throw std::invalid_argument("compute_R: need n >= 1 and degree >= 0");
    check_size(count_monomials(n, degree), kWedgeLimit, force, "coend ambient space");
    CoendComponent R;
    R.n = n;
    R.degree = degree;
    R.ambient = monomials_of_degree(n, degree);
    for (std::size_t i = 0; i < R.ambient.size(); ++i) {
        R.index[R.ambient[i]] = i;
        R.weight_of_column.push_back(monomial_weight(R.ambient[i], n));
        R.weights[R.weight_of_column.back()].columns.push_back(i);
    }
    for (auto& [w, q] : R.weights) q.relations = SparseEchelon(q.columns.size());

    std::vector<std::vector<BlockMonomial>> rest(std::size_t(degree) + 1);
    for (int k = 0; k < degree; ++k) rest[std::size_t(k)] = monomials_of_degree(n, k);

    auto add_row = [&](const SparseRow& row) {
        if (row.empty()) return;
        auto& q = R.weights[R.weight_of_column[row.front().first]];
        SparseRow local;
        for (auto& [c, x] : row) {
            auto pos = std::lower_bound(q.columns.begin(), q.columns.end(), c) - q.columns.begin();
            local.push_back({std::size_t(pos), x});
        }
        std::sort(local.begin(), local.end(), [](auto& a, auto& b) { return a.first < b.first; });
        ++R.relation_rows;
        q.relations.add(std::move(local));
    };

    // One relation per configuration: pattern blocks after the rest, with the
    // contracted atom x* last among the elements and y* the label of `ylab`.
    auto relate = [&](const BlockMonomial& rest_mono, const BlockMonomial& pattern, std::size_t xblock,
                      std::size_t yblock) {
        BlockMonomial blocks = rest_mono;
        std::size_t base = blocks.size();
        blocks.insert(blocks.end(), pattern.begin(), pattern.end());
        auto r = realize(blocks);
        Atom xs = 0, ys = 0;
        {
            Atom a = 1, l = 1;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                a += Atom(blocks[i].elems.size());
                if (i == base + xblock) xs = a - 1;
                if (blocks[i].labeled()) {
                    if (i == base + yblock) ys = l;
                    ++l;
                }
            }
        }
        std::map<std::size_t, Rational> row;
        for (int a = 1; a <= n; ++a) {
            r.f[xs] = a;
            r.e[ys] = a;
            auto c = class_of(r.S, r.f, r.e, r.P);
            if (c.sign) row[R.index.at(c.mono)] += c.sign;
        }
        auto m = WalledDiagram::contraction(r.S, xs, ys);
        auto img = apply_Pdet(m, PartitionVector::basis(r.S, r.P), Rational(n));
        auto f = r.f, e = r.e;
        f.erase(xs);
        e.erase(ys);
        for (auto& [P2, coef] : img.terms) {
            auto c = class_of(img.S, f, e, P2);
            if (c.sign) row[R.index.at(c.mono)] -= coef * c.sign;
        }
        SparseRow out;
        for (auto& [c, x] : row)
            if (sgn(x)) out.push_back({c, x});
        add_row(out);
    };

    const int X = 0;  // placeholder index for x*; overwritten in relate
    for (int dl = 1; dl <= degree; ++dl) {
        const auto& rests = rest[std::size_t(degree - dl)];
        // x* in the block labeled by y*.
        for (auto& A : subsets(n, dl)) {
            DecoratedBlock b{A, 1};
            b.elems.push_back(X);
            for (auto& rm : rests) relate(rm, {b}, 0, 0);
        }
        // y* labels A_j; x* joins A′, labeled by b or unlabeled.
        for (int t = 2; t <= dl + 1; ++t) {
            int s1 = dl - t + 1;  // labeled: s + t - 1 = dl
            int s0 = dl - t;      // unlabeled: s + t = dl
            for (auto& Aj : subsets(n, t)) {
                DecoratedBlock yb{Aj, 1};
                if (s1 >= 1)
                    for (auto& Ap : subsets(n, s1))
                        for (int lab = 1; lab <= n; ++lab) {
                            DecoratedBlock xb{Ap, lab};
                            xb.elems.push_back(X);
                            for (auto& rm : rests) relate(rm, {yb, xb}, 1, 0);
                        }
                if (s0 >= 0)
                    for (auto& Ap : subsets(n, s0)) {
                        DecoratedBlock xb{Ap, 0};
                        xb.elems.push_back(X);
                        for (auto& rm : rests) relate(rm, {yb, xb}, 1, 0);
                    }
            }
        }
    }

    for (auto& [w, q] : R.weights) {
        q.relations.make_reduced();
        q.free = q.relations.free_columns();
        q.offset = R.dim;
        R.relation_rank += q.relations.rank();
        R.dim += q.dim();
        for (auto c : q.free) R.basis.push_back(q.columns[c]);
    }
    return R;
}

const CoendComponent& CoendRing::component(int degree) {
    auto it = comps_.find(degree);
    if (it == comps_.end()) it = comps_.emplace(degree, compute_R(n_, degree, force_)).first;
    return it->second;
}

RingElement CoendRing::basis_element(int degree, std::size_t i) {
    const auto& c = component(degree);
    if (i >= c.dim) throw std::out_of_range("basis_element: index out of range");
    RingElement r{degree, std::vector<Rational>(c.dim)};
    r.coords[i] = 1;
    return r;
}

RingElement CoendRing::from_monomial(int degree, const SignedMonomial& m) {
    if (m.sign && monomial_degree(m.mono) != degree) throw std::invalid_argument("from_monomial: degree mismatch");
    const auto& c = component(degree);
    return {degree, c.reduce(c.ambient_vector(m))};
}

RingElement CoendRing::multiply(const RingElement& a, const RingElement& b) {
    const auto& ca = component(a.degree);
    const auto& cb = component(b.degree);
    const auto& cc = component(a.degree + b.degree);
    RingElement out{a.degree + b.degree, std::vector<Rational>(cc.dim)};
    std::map<std::size_t, Rational> acc;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (sgn(a.coords[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (sgn(b.coords[j]) == 0) continue;
            auto p = block_product(ca.ambient[ca.basis[i]], cb.ambient[cb.basis[j]]);
            if (p.sign) acc[cc.index.at(p.mono)] += a.coords[i] * b.coords[j] * p.sign;
        }
    }
    SparseRow v;
    for (auto& [c, x] : acc)
        if (sgn(x)) v.push_back({c, x});
    out.coords = cc.reduce(v);
    return out;
}

RingElement ring_multiply(const RingElement& a, const RingElement& b, CoendRing& ctx) {
    return ctx.multiply(a, b);
}

std::string kappa_to_string(const KappaWord& w) {
    std::string out = w.v ? "κ1(" : "κ0(";
    for (std::size_t i = 0; i < w.f.size(); ++i) out += (i ? "," : "") + std::to_string(w.f[i]);
    if (w.v) out += ";" + std::to_string(w.v);
    return out + ")";
}

SignedMonomial kappa_product_class(const std::vector<KappaWord>& words) {
    SignedMonomial acc{{}, 1};
    for (auto& w : words) {
        BlockMonomial one{{w.f, w.v}};
        auto p = block_product(acc.mono, one);
        p.sign *= acc.sign * (w.v ? -1 : 1);
        if (p.sign == 0) return {};
        acc = p;
    }
    return acc;
}

std::string AlbaneseReport::to_json() const {
    std::ostringstream os;
    os << "{\"i\":" << i << ",\"n\":" << n << ",\"dim\":" << dim << ",\"content_dim\":" << content_dim << ",\"parts\":[";
    for (std::size_t k = 0; k < parts.size(); ++k)
        os << (k ? "," : "") << "{\"p\":" << parts[k].first.first << ",\"q\":" << parts[k].first.second
           << ",\"dim\":" << parts[k].second << "}";
    os << "],\"content\":" << content.to_json() << "}";
    return os.str();
}

AlbaneseReport compute_W(int i, int n, bool force) {
    if (i < 1) throw std::invalid_argument("compute_W: i must be at least 1");
    AlbaneseReport rep;
    rep.i = i;
    rep.n = n;
    rep.content.degree = i;
    rep.content.convention = Convention::MuDual;
    for (int q = 0; q <= i; ++q) {
        int p = i + q;
        auto S = FiniteSetPair::standard(p, q);
        check_size(tensor_dim(S, n), kTensorLimit, force, "tensor space");
        SparseEchelon ech{std::size_t(tensor_dim(S, n))};
        for (Atom x : S.s1)
            for (Atom y : S.s2)
                for (auto& row : K_on_morphism(WalledDiagram::contraction(S, x, y), n, force).sparse_rows())
                    if (!row.empty()) ech.add(row);
        // Column c of the nullspace is the identity on the free coordinates,
        // so the coordinate of a vector along it is its entry at freec[c].
        auto cols = ech.nullspace().sparse_columns();
        auto freec = ech.free_columns();

        Rational total = 0;
        auto ps = enumerate_partitions(p), qs = enumerate_partitions(q);
        for (auto& a : ps)
            for (auto& b : qs) {
                Rational chiM = module_character(p, q, {a, b});
                if (sgn(chiM) == 0) continue;
                auto sig = permutation_of_type(a), tau = permutation_of_type(b);
                Rational tr = 0;
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    auto w = tensor_word(freec[c], S.size(), n);
                    // g^{-1} applied to the word: slot k reads slot σ(k).
                    std::vector<int> u(w.size());
                    for (int k = 0; k < p; ++k) u[std::size_t(k)] = w[std::size_t(sig[std::size_t(k)] - 1)];
                    for (int k = 0; k < q; ++k) u[std::size_t(p + k)] = w[std::size_t(p + tau[std::size_t(k)] - 1)];
                    std::size_t idx = std::size_t(tensor_index(u, n));
                    const auto& col = cols[c];
                    auto it = std::lower_bound(col.begin(), col.end(), idx, [](auto& e, std::size_t k) { return e.first < k; });
                    if (it != col.end() && it->first == idx) tr += it->second;
                }
                total += Rational(class_size(a) * class_size(b)) * tr * chiM;
            }
        total /= Rational(Integer(factorial(p))) * Rational(Integer(factorial(q)));
        if (total.get_den() != 1) throw std::logic_error("compute_W: non-integral coinvariant dimension");
        std::size_t d = std::size_t(total.get_num().get_ui());
        rep.parts.push_back({{p, q}, d});
        rep.dim += d;
        // λ ⊢ p acts on the H slots of K°, so the raw reading is the GL one.
        for (auto& [bp, m] : multiplicities(p, q).entries) rep.content.entries[bp] += m;
    }
    rep.content_dim = rep.content.total_at(n);
    return rep;
}

}  // namespace bcoend
