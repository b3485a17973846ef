#include "bcoend/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bcoend {

Rational PolyN::eval(const Rational& n) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * n + c_[i];
    return r;
}

void PolyN::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

PolyN& PolyN::operator+=(const PolyN& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyN PolyN::operator*(const PolyN& o) const {
    if (c_.empty() || o.c_.empty()) return PolyN();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PolyN(std::move(r));
}

std::string PolyN::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + c_[i].get_str();
    if (c_.empty()) out += "0";
    return out + "]";
}

int DetGenerator::relative_sign(const FiniteSetPair& s) const {
    return sign * permutation_sign(w1, s.s1) * permutation_sign(w2, s.s2);
}

std::string DetGenerator::to_string(const AtomTable* t) const {
    auto word = [&](const std::vector<Atom>& w) {
        std::string o;
        for (std::size_t i = 0; i < w.size(); ++i) o += (i ? "∧" : "") + atom_name(w[i], t);
        return o.empty() ? std::string("1") : o;
    };
    return std::string(sign < 0 ? "-" : "") + word(w1) + "⊗" + word(w2);
}

namespace {

// Moves a to the end of w and drops it; returns the sign of the move.
int pop_to_end(std::vector<Atom>& w, Atom a) {
    auto it = std::find(w.begin(), w.end(), a);
    if (it == w.end()) throw std::invalid_argument("det: atom missing from wedge word");
    std::size_t after = std::size_t(w.end() - it) - 1;
    w.erase(it);
    return after % 2 ? -1 : 1;
}

}  // namespace

DetGenerator apply_det(const WalledDiagram& m, const DetGenerator& g) {
    const auto& S = m.source();
    if (!std::is_permutation(g.w1.begin(), g.w1.end(), S.s1.begin(), S.s1.end()) ||
        !std::is_permutation(g.w2.begin(), g.w2.end(), S.s2.begin(), S.s2.end()) || g.w1.size() != S.s1.size() ||
        g.w2.size() != S.s2.size())
        throw std::invalid_argument("apply_det: generator is not over the diagram source");
    DetGenerator out = g;
    // A contraction is minus the inverse of the insertion; this makes det a
    // functor with loop value -1.
    for (auto [x, y] : m.contractions()) {
        out.sign *= -pop_to_end(out.w1, x);
        out.sign *= pop_to_end(out.w2, y);
    }
    std::map<Atom, Atom> f, gd;
    for (auto [x, t] : m.through()) f[x] = t;
    for (auto [t, y] : m.dual_through()) gd[y] = t;
    for (auto& a : out.w1) a = f.at(a);
    for (auto& b : out.w2) b = gd.at(b);
    for (auto [x, y] : m.insertions()) {
        out.w1.push_back(x);
        out.w2.push_back(y);
    }
    return out;
}

int det_sign(const WalledDiagram& m) {
    return apply_det(m, DetGenerator::canonical(m.source())).relative_sign(m.target());
}

std::pair<LabeledPartition, int> act_P(const WalledDiagram& m, const LabeledPartition& p) {
    std::vector<Block> b = p.parts;
    int e = 0;
    auto find_elem = [&](Atom x) {
        for (std::size_t i = 0; i < b.size(); ++i)
            if (std::find(b[i].elems.begin(), b[i].elems.end(), x) != b[i].elems.end()) return i;
        throw std::invalid_argument("act_P: element missing from partition");
    };
    auto find_label = [&](Atom y) {
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].label == y) return i;
        throw std::invalid_argument("act_P: label missing from partition");
    };
    for (auto [x, y] : m.contractions()) {
        std::size_t i = find_elem(x), j = find_label(y);
        if (i == j) {
            if (b[i].elems.size() == 1) {
                b.erase(b.begin() + long(i));
                ++e;
            } else {
                std::erase(b[i].elems, x);
                b[i].label = kUnlabeled;
            }
        } else {
            std::erase(b[i].elems, x);
            b[j].elems.insert(b[j].elems.end(), b[i].elems.begin(), b[i].elems.end());
            b[j].label = b[i].label;
            b.erase(b.begin() + long(i));
        }
    }
    std::map<Atom, Atom> f, gd;
    for (auto [x, t] : m.through()) f[x] = t;
    for (auto [t, y] : m.dual_through()) gd[y] = t;
    for (auto& blk : b) {
        for (auto& a : blk.elems) a = f.at(a);
        if (blk.labeled()) blk.label = gd.at(blk.label);
    }
    for (auto [x, y] : m.insertions()) b.push_back({{x}, y});
    return {LabeledPartition(std::move(b)), e};
}

StandardShape standardize_with(const LabeledPartition& p, const FiniteSetPair& s, const std::vector<std::size_t>& part_order,
                               const std::vector<std::vector<Atom>>& element_orders) {
    StandardShape sh;
    int pos = 1, lab = 1;
    for (std::size_t idx = 0; idx < part_order.size(); ++idx) {
        const Block& blk = p.parts[part_order[idx]];
        sh.lambda.push_back(int(blk.elems.size()));
        sh.k.push_back(blk.labeled() ? 1 : 0);
        for (Atom a : element_orders[idx]) sh.f[a] = pos++;
        if (blk.labeled()) sh.g[blk.label] = lab++;
    }
    std::vector<std::size_t> pf, pg;
    for (Atom a : s.s1) pf.push_back(std::size_t(sh.f.at(a) - 1));
    for (Atom a : s.s2) pg.push_back(std::size_t(sh.g.at(a) - 1));
    sh.sign = permutation_sign(pf) * permutation_sign(pg);
    return sh;
}

StandardShape standardize(const LabeledPartition& p, const FiniteSetPair& s) {
    if (!p.is_valid_for(s)) throw std::invalid_argument("standardize: partition is not over the given object");
    std::vector<std::size_t> order(p.parts.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Block &x = p.parts[a], &y = p.parts[b];
        if (x.elems.size() != y.elems.size()) return x.elems.size() > y.elems.size();
        return x.labeled() && !y.labeled();
    });
    std::vector<std::vector<Atom>> elems;
    for (auto i : order) elems.push_back(p.parts[i].elems);
    return standardize_with(p, s, order, elems);
}

LabeledPartition standard_partition(const Partition& lambda, const std::vector<int>& k) {
    LabeledPartition out;
    int pos = 1, lab = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        Block b;
        for (int t = 0; t < lambda[i]; ++t) b.elems.push_back(pos++);
        b.label = k[i] ? lab++ : kUnlabeled;
        out.parts.push_back(b);
    }
    out.canonicalize();
    return out;
}

namespace {

template <class F>
void for_each_subset(const std::vector<Atom>& v, std::size_t k, F&& f) {
    std::vector<Atom> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= v.size(); ++i) {
            cur.push_back(v[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<Atom> minus(const std::vector<Atom>& v, const std::vector<Atom>& r) {
    std::vector<Atom> out;
    for (Atom a : v)
        if (std::find(r.begin(), r.end(), a) == r.end()) out.push_back(a);
    return out;
}

}  // namespace

std::vector<KanSummand> kan_decompose(const FiniteSetPair& s) {
    std::vector<KanSummand> out;
    std::size_t jmax = std::min(s.s1.size(), s.s2.size());
    for (std::size_t j = 0; j <= jmax; ++j) {
        for_each_subset(s.s1, j, [&](const std::vector<Atom>& a) {
            for_each_subset(s.s2, j, [&](const std::vector<Atom>& b) {
                KanSummand k;
                k.I = FiniteSetPair(minus(s.s1, a), minus(s.s2, b));
                k.matchings = enumerate_matchings(FiniteSetPair(a, b));
                k.strict = enumerate_labeled_partitions(k.I, true);
                out.push_back(std::move(k));
            });
        });
    }
    return out;
}

LabeledPartition kan_assemble(const Matching& m, const LabeledPartition& strict) {
    LabeledPartition out = strict;
    for (auto [a, b] : m) out.parts.push_back({{a}, b});
    out.canonicalize();
    return out;
}

bool kan_decompose_is_bijection(const FiniteSetPair& s) {
    std::set<LabeledPartition> image;
    std::size_t count = 0;
    for (auto& k : kan_decompose(s))
        for (auto& m : k.matchings)
            for (auto& p : k.strict) {
                image.insert(kan_assemble(m, p));
                ++count;
            }
    auto all = enumerate_labeled_partitions(s, false);
    return count == image.size() && image == std::set<LabeledPartition>(all.begin(), all.end());
}

namespace wheeled {

namespace {

Element shifted(const Element& a, int dp, int dq) {
    FiniteSetPair s = a.S;
    for (auto& x : s.s1) x += dp;
    for (auto& y : s.s2) y += dq;
    Element out(s);
    for (auto& [p, c] : a.terms) {
        LabeledPartition q = p;
        for (auto& b : q.parts) {
            for (auto& x : b.elems) x += dp;
            if (b.labeled()) b.label += dq;
        }
        out.add(q, c);
    }
    return out;
}

Element apply(const WalledDiagram& m, const Element& a) {
    return apply_Pdet(m, a, PolyN::n());
}

}  // namespace

Element unit() {
    return Element::basis(FiniteSetPair::standard(1, 1), LabeledPartition::parse("{1;1}"), PolyN(1));
}

Element horizontal(const Element& a, const Element& b) {
    return day_product(a, shifted(b, int(a.S.s1.size()), int(a.S.s2.size())));
}

Element contract(const Element& a, int i, int j) {
    int p = int(a.S.s1.size()), q = int(a.S.s2.size());
    if (i < 1 || i > p || j < 1 || j > q) throw std::invalid_argument("contract: index out of range");
    std::vector<std::pair<Atom, Atom>> th, du;
    for (int x = 1, t = 1; x <= p; ++x)
        if (x != i) th.push_back({x, t++});
    for (int y = 1, t = 1; y <= q; ++y)
        if (y != j) du.push_back({t++, y});
    auto m = WalledDiagram::from_pairs(a.S, FiniteSetPair::standard(p - 1, q - 1), th, {{i, j}}, {}, du);
    return apply(m, a);
}

Element vertical(const Element& a, const Element& b) {
    int p = int(a.S.s1.size()), q = int(a.S.s2.size());
    int qb = int(b.S.s1.size()), r = int(b.S.s2.size());
    if (q != qb) throw std::invalid_argument("vertical: biarities do not compose");
    // a on ([p],[q]), b on (p+[q], q+[r]); the outputs of b feed the inputs of a.
    Element prod = horizontal(a, b);
    std::vector<std::pair<Atom, Atom>> th, co, du;
    for (int j = 1; j <= q; ++j) co.push_back({p + j, j});
    for (int k = 1; k <= p; ++k) th.push_back({k, k});
    for (int k = 1; k <= r; ++k) du.push_back({k, q + k});
    auto m = WalledDiagram::from_pairs(prod.S, FiniteSetPair::standard(p, r), th, co, {}, du);
    return apply(m, prod);
}

Element permute_inputs(const Element& a, const std::vector<int>& perm) {
    std::map<Atom, Atom> f, g;
    for (std::size_t i = 0; i < perm.size(); ++i) f[Atom(i + 1)] = perm[i];
    for (Atom y : a.S.s2) g[y] = y;
    return apply(WalledDiagram::bijection(a.S, a.S, f, g), a);
}

Element h(int p, int q) {
    if (q == 0) return contract(h(p + 1, 1), 1, 1);
    if (q != 1 || p < 1) throw std::invalid_argument("h: only h_{p,1} (p>=1) and h_{p,0} (p>=0) exist");
    if (p == 1) return unit();
    Element h21 = Element::basis(FiniteSetPair::standard(2, 1), LabeledPartition::parse("{1,2;1}"), PolyN(1));
    Element left = h21;
    for (int i = 0; i < p - 2; ++i) left = horizontal(left, unit());
    return vertical(left, h(p - 1, 1));
}

}  // namespace wheeled

std::vector<CheckResult> wheeled_model_check(int pmax) {
    using namespace wheeled;
    std::vector<CheckResult> out;
    auto report = [&](std::string name, const Element& lhs, const Element& rhs) {
        bool ok = lhs == rhs;
        out.push_back({std::move(name), ok, ok ? "" : lhs.to_string() + " != " + rhs.to_string()});
    };
    Element h21 = h(2, 1);
    Element zero21(h21.S);
    {
        Element s = h21;
        s.add(permute_inputs(h21, {2, 1}));
        report("antisymmetry h21 + tau.h21 = 0", s, zero21);
    }
    {
        Element s = vertical(horizontal(unit(), h21), h21);
        s.add(vertical(horizontal(h21, unit()), h21));
        report("three-term (1⊗h21)∘h21 + (h21⊗1)∘h21 = 0", s, Element(FiniteSetPair::standard(3, 1)));
    }
    {
        Element nscalar = Element::basis(FiniteSetPair::standard(0, 0), LabeledPartition(), PolyN::n());
        report("xi11(h11) = n", contract(unit(), 1, 1), nscalar);
    }
    for (int p = 1; p <= pmax; ++p) {
        Element hp = h(p, 1);
        std::vector<Block> blk{{std::vector<Atom>(std::size_t(p)), 1}};
        std::iota(blk[0].elems.begin(), blk[0].elems.end(), 1);
        Element single = Element::basis(FiniteSetPair::standard(p, 1), LabeledPartition(blk), PolyN(1));
        bool ok = hp == single || hp == single.scaled(PolyN(-1));
        out.push_back({"h" + std::to_string(p) + "1 is a single labeled block", ok, hp.to_string()});
        report("xi11(h" + std::to_string(p) + "1) = h" + std::to_string(p - 1) + "0", contract(hp, 1, 1), h(p - 1, 0));
    }
    for (int p = 1; p <= pmax; ++p)
        for (int pp = 1; pp <= pmax; ++pp)
            for (int i = 0; i <= 1; ++i) {
                Element lhs = contract(horizontal(h(p, 1), h(pp, i)), p + 1, 1);
                std::string name = "xi" + std::to_string(p + 1) + "1(h" + std::to_string(p) + "1 h" +
                                   std::to_string(pp) + std::to_string(i) + ") = h" + std::to_string(p + pp - 1) +
                                   std::to_string(i);
                Element rhs = h(p + pp - 1, i);
                report(name, lhs, rhs);
                // Moving the contracted input to the front of an antisymmetric
                // class costs (-1)^p, so the i = 0 case carries that sign.
                if (i == 0)
                    report("signed " + name + " (times (-1)^(p+1))", lhs, p % 2 ? rhs : rhs.scaled(PolyN(-1)));
            }
    return out;
}

}  // namespace bcoend
