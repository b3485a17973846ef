#include "bcoend/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bcoend/characters.hpp"

namespace bcoend {

std::size_t num_generators(int n) {
    return std::size_t(n) * binomial(n, 2);
}

std::size_t generator_index(const KappaIndex& g, int n) {
    // Pairs (i,j) before g in lexicographic order.
    std::size_t pairs = 0;
    for (int i = 1; i < g.i; ++i) pairs += std::size_t(n - i);
    pairs += std::size_t(g.j - g.i - 1);
    return pairs * std::size_t(n) + std::size_t(g.k - 1);
}

KappaIndex generator(std::size_t idx, int n) {
    std::size_t pair = idx / std::size_t(n);
    KappaIndex g;
    g.k = int(idx % std::size_t(n)) + 1;
    for (int i = 1; i < n; ++i) {
        std::size_t row = std::size_t(n - i);
        if (pair < row) {
            g.i = i;
            g.j = i + 1 + int(pair);
            return g;
        }
        pair -= row;
    }
    throw std::out_of_range("generator: index out of range");
}

void add_term(WedgeVector& v, const WedgeMonomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = v.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) v.erase(it);
    }
}

WedgeVector kappa(int x, int y, int z, int n) {
    WedgeVector v;
    if (x == y) return v;
    if (x < y)
        v[{generator_index({x, y, z}, n)}] = 1;
    else
        v[{generator_index({y, x, z}, n)}] = -1;
    return v;
}

namespace {

// Sorted merge of two wedge monomials with the sign of the shuffle; 0 on a repeat.
int merge(const WedgeMonomial& a, const WedgeMonomial& b, WedgeMonomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inv = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else {
            if (i < a.size() && a[i] == b[j]) return 0;
            inv += long(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    return inv % 2 ? -1 : 1;
}

}  // namespace

WedgeVector wedge(const WedgeVector& a, const WedgeVector& b) {
    WedgeVector out;
    WedgeMonomial m;
    for (auto& [x, c] : a)
        for (auto& [y, d] : b) {
            int s = merge(x, y, m);
            if (s) add_term(out, m, c * d * s);
        }
    return out;
}

std::string wedge_to_string(const WedgeVector& v, int n) {
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
        os << (first ? "" : " + ") << c.get_str();
        for (auto g : m) {
            auto k = generator(g, n);
            os << "·κ(" << k.i << k.j << ";" << k.k << ")";
        }
        first = false;
    }
    return first ? "0" : os.str();
}

WedgeVector ih_expansion(int a, int b, int c, int k, int n) {
    WedgeVector out;
    for (int i = 1; i <= n; ++i) {
        for (auto& [m, x] : wedge(kappa(a, b, i, n), kappa(i, c, k, n))) add_term(out, m, x);
        for (auto& [m, x] : wedge(kappa(c, a, i, n), kappa(i, b, k, n))) add_term(out, m, -x);
    }
    return out;
}

std::vector<IHRelation> ih_relations(int n, bool dedupe) {
    std::vector<IHRelation> out;
    std::set<WedgeVector> seen;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int k = 1; k <= n; ++k) {
                    auto e = ih_expansion(a, b, c, k, n);
                    if (dedupe) {
                        if (e.empty()) continue;
                        WedgeVector norm = e;
                        Rational lead = norm.begin()->second;
                        for (auto& [m, x] : norm) x /= lead;
                        if (!seen.insert(norm).second) continue;
                    }
                    out.push_back({a, b, c, k, std::move(e)});
                }
    return out;
}

std::vector<int> wedge_weight(const WedgeMonomial& m, int n) {
    std::vector<int> w(std::size_t(n), 0);
    for (auto g : m) {
        auto k = generator(g, n);
        w[std::size_t(k.i - 1)]--;
        w[std::size_t(k.j - 1)]--;
        w[std::size_t(k.k - 1)]++;
    }
    return w;
}

namespace {

std::vector<WedgeMonomial> combinations(std::size_t N, int d) {
    std::vector<WedgeMonomial> out;
    WedgeMonomial cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (int(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (std::size_t x = from; x < N; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SparseRow to_local(const WedgeVector& v, const PresentedComponent& P, const std::vector<std::size_t>& cols) {
    SparseRow row;
    for (auto& [m, c] : v) {
        std::size_t g = P.index.at(m);
        auto pos = std::lower_bound(cols.begin(), cols.end(), g) - cols.begin();
        row.push_back({std::size_t(pos), c});
    }
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return row;
}

// Rows spanning the degree-d slice of the ideal: relation ∧ monomial.
template <class F>
void for_each_ideal_row(int n, int degree, F&& f) {
    if (degree < 2) return;
    auto rels = ih_relations(n, true);
    auto rest = combinations(num_generators(n), degree - 2);
    for (auto& r : rels)
        for (auto& m : rest) {
            auto row = wedge(r.expansion, WedgeVector{{m, Rational(1)}});
            if (!row.empty()) f(row);
        }
}

}  // namespace

std::string PresentedComponent::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"degree\":" << degree << ",\"ambient\":" << ambient.size() << ",\"ideal_rank\":" << ideal_rank
       << ",\"dim\":" << dim << "}";
    return os.str();
}

PresentedComponent ring_pres_component(int n, int degree, bool force) {
    if (n < 2 || degree < 0) throw std::invalid_argument("ring_pres_component: need n >= 2 and degree >= 0");
    std::size_t N = num_generators(n);
    check_size(binomial(int(N), degree), kWedgeLimit, force, "wedge power");
    PresentedComponent P;
    P.n = n;
    P.degree = degree;
    P.ambient = combinations(N, degree);
    for (std::size_t i = 0; i < P.ambient.size(); ++i) {
        P.index[P.ambient[i]] = i;
        P.by_weight[wedge_weight(P.ambient[i], n)].push_back(i);
    }
    for (auto& [w, cols] : P.by_weight) P.ideal.emplace(w, SparseEchelon(cols.size()));
    for_each_ideal_row(n, degree, [&](const WedgeVector& row) {
        auto w = wedge_weight(row.begin()->first, n);
        P.ideal.at(w).add(to_local(row, P, P.by_weight.at(w)));
    });
    for (auto& [w, e] : P.ideal) {
        P.ideal_rank += e.rank();
        P.dim += e.cols() - e.rank();
    }
    return P;
}

SignedMonomial comparison_image(const WedgeMonomial& m, int n) {
    KappaProduct words;
    for (auto g : m) {
        auto k = generator(g, n);
        words.push_back({{k.i, k.j}, k.k});
    }
    return kappa_product_class(words);
}

std::string ComparisonReport::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"degree\":" << degree << ",\"ambient\":" << ambient << ",\"ideal_rank\":" << ideal_rank
       << ",\"dim\":" << dim_pres << ",\"dim_R\":" << dim_R << ",\"rank\":" << rank
       << ",\"surjective\":" << (surjective ? "true" : "false") << ",\"injective\":" << (injective ? "true" : "false")
       << ",\"relations_sound\":" << (relations_sound ? "true" : "false") << ",\"stable\":" << (stable ? "true" : "false")
       << "}";
    return os.str();
}

ComparisonReport comparison_map(int n, int degree, bool force) {
    auto P = ring_pres_component(n, degree, force);
    auto R = compute_R(n, degree, force);
    ComparisonReport rep;
    rep.n = n;
    rep.degree = degree;
    rep.ambient = P.ambient.size();
    rep.ideal_rank = P.ideal_rank;
    rep.dim_pres = P.dim;
    rep.dim_R = R.dim;
    rep.stable = n >= stable_threshold(degree);

    auto image = [&](const WedgeVector& v) {
        std::map<std::size_t, Rational> acc;
        for (auto& [m, c] : v) {
            auto s = comparison_image(m, n);
            if (s.sign) acc[R.index.at(s.mono)] += c * s.sign;
        }
        SparseRow row;
        for (auto& [i, x] : acc)
            if (sgn(x)) row.push_back({i, x});
        return R.reduce(row);
    };
    auto sparse = [](const std::vector<Rational>& v) {
        SparseRow r;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i])) r.push_back({i, v[i]});
        return r;
    };

    // The map respects weights, so the rank is a sum over weight spaces.
    std::map<std::vector<int>, SparseEchelon> img;
    for (auto& [w, cols] : P.by_weight) {
        auto& e = img.emplace(w, SparseEchelon(R.dim)).first->second;
        for (auto c : cols) e.add(sparse(image({{P.ambient[c], Rational(1)}})));
        rep.rank += e.rank();
    }
    rep.surjective = rep.rank == R.dim;
    rep.injective = rep.rank == P.dim;
    rep.relations_sound = true;
    for_each_ideal_row(n, degree, [&](const WedgeVector& row) {
        if (!rep.relations_sound) return;
        auto v = image(row);
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; })) rep.relations_sound = false;
    });
    return rep;
}

namespace {

bool is_final(const KappaWord& w) {
    return w.v != 0 && w.f.size() == 2;
}

// One rewriting step on a word: the replacement products with coefficients.
std::vector<std::pair<KappaProduct, Rational>> rewrite(const KappaWord& w, int n) {
    std::vector<std::pair<KappaProduct, Rational>> out;
    std::size_t k = w.f.size();
    if (w.v == 0) {
        if (k == 0) throw std::invalid_argument("kappa_eliminate: empty κ0 word");
        // κ₀(f) = Σᵢ κ₁(f⊗eᵢ^#⊗eᵢ)
        for (int i = 1; i <= n; ++i) {
            KappaWord x{w.f, i};
            x.f.push_back(i);
            out.push_back({{x}, Rational(1)});
        }
        return out;
    }
    if (k < 2) throw std::invalid_argument("kappa_eliminate: κ1 needs at least two f's");
    // κ₁(f₁…f_k⊗v) = (−1)^{k−1} Σᵢ κ₁(f₁…f_{k−1}⊗eᵢ)·κ₁(eᵢ^#⊗f_k⊗v)
    int s = (k - 1) % 2 ? -1 : 1;
    for (int i = 1; i <= n; ++i) {
        KappaWord a{std::vector<int>(w.f.begin(), w.f.end() - 1), i};
        KappaWord b{{i, w.f.back()}, w.v};
        out.push_back({{a, b}, Rational(s)});
    }
    return out;
}

}  // namespace

KappaExpr kappa_eliminate(const KappaExpr& e, int n, EliminationOrder order) {
    KappaExpr cur = e;
    while (true) {
        KappaExpr next;
        bool changed = false;
        for (auto& [prod, c] : cur) {
            long at = -1;
            for (std::size_t i = 0; i < prod.size(); ++i) {
                std::size_t j = order == EliminationOrder::LeftmostFirst ? i : prod.size() - 1 - i;
                if (!is_final(prod[j])) {
                    at = long(j);
                    break;
                }
            }
            if (at < 0) {
                next[prod] += c;
                continue;
            }
            changed = true;
            for (auto& [rep, s] : rewrite(prod[std::size_t(at)], n)) {
                KappaProduct p(prod.begin(), prod.begin() + at);
                p.insert(p.end(), rep.begin(), rep.end());
                p.insert(p.end(), prod.begin() + at + 1, prod.end());
                next[p] += c * s;
            }
        }
        for (auto it = next.begin(); it != next.end();) it = sgn(it->second) ? std::next(it) : next.erase(it);
        cur = std::move(next);
        if (!changed) return cur;
    }
}

WedgeVector kappa_to_wedge(const KappaExpr& e, int n) {
    WedgeVector out;
    for (auto& [prod, c] : e) {
        WedgeVector acc{{{}, Rational(1)}};
        for (auto& w : prod) {
            if (!is_final(w)) throw std::invalid_argument("kappa_to_wedge: expression is not eliminated");
            acc = wedge(acc, kappa(w.f[0], w.f[1], w.v, n));
        }
        for (auto& [m, x] : acc) add_term(out, m, x * c);
    }
    return out;
}

std::string kappa_expr_to_string(const KappaExpr& e) {
    std::ostringstream os;
    bool first = true;
    for (auto& [prod, c] : e) {
        os << (first ? "" : " + ") << c.get_str();
        for (auto& w : prod) os << "·" << kappa_to_string(w);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace bcoend
