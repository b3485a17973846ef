#include "bcoend/brauer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "text_util.hpp"

namespace bcoend {

namespace {

std::size_t index_of(const std::vector<Atom>& v, Atom a) {
    auto it = std::find(v.begin(), v.end(), a);
    return it == v.end() ? std::size_t(-1) : std::size_t(it - v.begin());
}

bool contains(const std::vector<Atom>& v, Atom a) {
    return std::find(v.begin(), v.end(), a) != v.end();
}

std::vector<Atom> without(const std::vector<Atom>& v, Atom a) {
    std::vector<Atom> out;
    for (Atom x : v)
        if (x != a) out.push_back(x);
    return out;
}

Atom max_atom(std::initializer_list<const std::vector<Atom>*> lists) {
    Atom m = 0;
    for (auto* l : lists)
        for (Atom a : *l) m = std::max(m, a);
    return m;
}

FiniteSetPair parse_set_pair(const std::string& text, AtomTable* t) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("expected (..|..): " + text);
    auto halves = split(s.substr(1, s.size() - 2), '|');
    if (halves.size() != 2) throw std::invalid_argument("expected one '|': " + text);
    std::vector<Atom> a, b;
    if (!halves[0].empty())
        for (auto& x : split(halves[0], ',')) a.push_back(parse_atom(x, t));
    if (!halves[1].empty())
        for (auto& x : split(halves[1], ',')) b.push_back(parse_atom(x, t));
    return {a, b};
}

}  // namespace

WalledDiagram::WalledDiagram(FiniteSetPair source, FiniteSetPair target, std::vector<std::size_t> match,
                             Rational coefficient)
    : source_(std::move(source)), target_(std::move(target)), match_(std::move(match)), coeff_(std::move(coefficient)) {
    std::size_t nl = source_.s1.size() + target_.s2.size();
    std::size_t nr = target_.s1.size() + source_.s2.size();
    if (nl != nr || match_.size() != nl) throw std::invalid_argument("walled diagram: sides have different sizes");
    std::vector<char> hit(nr, 0);
    for (auto r : match_) {
        if (r >= nr || hit[r]) throw std::invalid_argument("walled diagram: matching is not perfect");
        hit[r] = 1;
    }
}

WalledDiagram WalledDiagram::identity(const FiniteSetPair& s) {
    std::vector<std::size_t> m(s.size());
    for (std::size_t i = 0; i < s.s1.size(); ++i) m[i] = i;
    for (std::size_t j = 0; j < s.s2.size(); ++j) m[s.s1.size() + j] = s.s1.size() + j;
    return {s, s, m};
}

WalledDiagram WalledDiagram::from_pairs(const FiniteSetPair& s, const FiniteSetPair& t,
                                        const std::vector<std::pair<Atom, Atom>>& through,
                                        const std::vector<std::pair<Atom, Atom>>& contractions,
                                        const std::vector<std::pair<Atom, Atom>>& insertions,
                                        const std::vector<std::pair<Atom, Atom>>& dual_through, Rational coefficient) {
    std::size_t p = s.s1.size(), tp = t.s1.size();
    std::size_t nl = p + t.s2.size();
    std::vector<std::size_t> m(nl, std::size_t(-1));
    auto put = [&](std::size_t l, std::size_t r) {
        if (l == std::size_t(-1) || r == std::size_t(-1)) throw std::invalid_argument("diagram pair uses unknown atom");
        if (l >= nl || m[l] != std::size_t(-1)) throw std::invalid_argument("diagram endpoint used twice");
        m[l] = r;
    };
    auto sidx = [](const std::vector<Atom>& v, Atom a, std::size_t off) {
        std::size_t i = index_of(v, a);
        return i == std::size_t(-1) ? i : i + off;
    };
    for (auto& [x, y] : through) put(sidx(s.s1, x, 0), sidx(t.s1, y, 0));
    for (auto& [x, y] : contractions) put(sidx(s.s1, x, 0), sidx(s.s2, y, tp));
    for (auto& [x, y] : insertions) put(sidx(t.s2, y, p), sidx(t.s1, x, 0));
    for (auto& [x, y] : dual_through) put(sidx(t.s2, x, p), sidx(s.s2, y, tp));
    for (auto r : m)
        if (r == std::size_t(-1)) throw std::invalid_argument("diagram pairs do not cover every endpoint");
    return {s, t, m, std::move(coefficient)};
}

WalledDiagram WalledDiagram::bijection(const FiniteSetPair& s, const FiniteSetPair& t, const std::map<Atom, Atom>& f,
                                       const std::map<Atom, Atom>& g) {
    std::vector<std::pair<Atom, Atom>> th(f.begin(), f.end()), du(g.begin(), g.end());
    return from_pairs(s, t, th, {}, {}, du);
}

WalledDiagram WalledDiagram::contraction(const FiniteSetPair& s, Atom x, Atom y) {
    if (!contains(s.s1, x) || !contains(s.s2, y)) throw std::invalid_argument("contraction atoms not in object");
    FiniteSetPair t(without(s.s1, x), without(s.s2, y));
    std::vector<std::pair<Atom, Atom>> th, du;
    for (Atom a : t.s1) th.push_back({a, a});
    for (Atom b : t.s2) du.push_back({b, b});
    return from_pairs(s, t, th, {{x, y}}, {}, du);
}

WalledDiagram WalledDiagram::insertion(const FiniteSetPair& s, Atom x, Atom y) {
    if (contains(s.s1, x) || contains(s.s2, y)) throw std::invalid_argument("insertion atoms already present");
    FiniteSetPair t = s;
    t.s1.push_back(x);
    t.s2.push_back(y);
    std::vector<std::pair<Atom, Atom>> th, du;
    for (Atom a : s.s1) th.push_back({a, a});
    for (Atom b : s.s2) du.push_back({b, b});
    return from_pairs(s, t, th, {}, {{x, y}}, du);
}

std::vector<std::pair<Atom, Atom>> WalledDiagram::through() const {
    std::vector<std::pair<Atom, Atom>> out;
    for (std::size_t i = 0; i < source_.s1.size(); ++i)
        if (match_[i] < target_.s1.size()) out.push_back({source_.s1[i], target_.s1[match_[i]]});
    return out;
}

std::vector<std::pair<Atom, Atom>> WalledDiagram::contractions() const {
    std::vector<std::pair<Atom, Atom>> out;
    std::size_t tp = target_.s1.size();
    for (std::size_t i = 0; i < source_.s1.size(); ++i)
        if (match_[i] >= tp) out.push_back({source_.s1[i], source_.s2[match_[i] - tp]});
    return out;
}

std::vector<std::pair<Atom, Atom>> WalledDiagram::insertions() const {
    std::vector<std::pair<Atom, Atom>> out;
    std::size_t p = source_.s1.size(), tp = target_.s1.size();
    for (std::size_t i = p; i < match_.size(); ++i)
        if (match_[i] < tp) out.push_back({target_.s1[match_[i]], target_.s2[i - p]});
    return out;
}

std::vector<std::pair<Atom, Atom>> WalledDiagram::dual_through() const {
    std::vector<std::pair<Atom, Atom>> out;
    std::size_t p = source_.s1.size(), tp = target_.s1.size();
    for (std::size_t i = p; i < match_.size(); ++i)
        if (match_[i] >= tp) out.push_back({target_.s2[i - p], source_.s2[match_[i] - tp]});
    return out;
}

bool WalledDiagram::is_identity() const {
    if (!(source_ == target_) || coeff_ != 1) return false;
    return same_matching(identity(source_));
}

bool WalledDiagram::same_matching(const WalledDiagram& o) const {
    return source_ == o.source_ && target_ == o.target_ && match_ == o.match_;
}

std::string WalledDiagram::to_string(const AtomTable* t) const {
    std::string out = "S=" + source_.to_string(t) + "; T=" + target_.to_string(t) + "; m=[";
    std::size_t p = source_.s1.size(), tp = target_.s1.size();
    for (std::size_t i = 0; i < match_.size(); ++i) {
        std::string l, r;
        if (i < p) {
            l = atom_name(source_.s1[i], t);
        } else {
            Atom a = target_.s2[i - p];
            l = atom_name(a, t) + (contains(source_.s1, a) ? "'" : "");
        }
        if (match_[i] < tp) {
            r = atom_name(target_.s1[match_[i]], t);
        } else {
            Atom a = source_.s2[match_[i] - tp];
            r = atom_name(a, t) + (contains(target_.s1, a) ? "'" : "");
        }
        out += (i ? ",(" : "(") + l + "→" + r + ")";
    }
    out += "]";
    if (coeff_ != 1) out += "; c=" + coeff_.get_str();
    return out;
}

WalledDiagram WalledDiagram::parse(const std::string& text, AtomTable* t) {
    FiniteSetPair s, tg;
    std::string mtext;
    Rational c = 1;
    bool have_s = false, have_t = false, have_m = false;
    for (auto& field : split(text, ';')) {
        if (field.empty()) continue;
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("diagram field without '=': " + field);
        std::string key = trim(field.substr(0, eq)), val = trim(field.substr(eq + 1));
        if (key == "S") {
            s = parse_set_pair(val, t);
            have_s = true;
        } else if (key == "T") {
            tg = parse_set_pair(val, t);
            have_t = true;
        } else if (key == "m") {
            mtext = val;
            have_m = true;
        } else if (key == "c") {
            c = Rational(val);
            c.canonicalize();
        } else {
            throw std::invalid_argument("unknown diagram field: " + key);
        }
    }
    if (!have_s || !have_t || !have_m) throw std::invalid_argument("diagram needs S, T and m");
    std::size_t p = s.s1.size(), tp = tg.s1.size();
    std::vector<std::size_t> m(p + tg.s2.size(), std::size_t(-1));
    for (auto& [ls, rs] : parse_arrow_pairs(mtext)) {
        bool lp = !ls.empty() && ls.back() == '\'', rp = !rs.empty() && rs.back() == '\'';
        Atom la = parse_atom(lp ? ls.substr(0, ls.size() - 1) : ls, t);
        Atom ra = parse_atom(rp ? rs.substr(0, rs.size() - 1) : rs, t);
        std::size_t l = std::size_t(-1), r = std::size_t(-1);
        if (!lp && contains(s.s1, la))
            l = index_of(s.s1, la);
        else if (contains(tg.s2, la))
            l = p + index_of(tg.s2, la);
        if (!rp && contains(tg.s1, ra))
            r = index_of(tg.s1, ra);
        else if (contains(s.s2, ra))
            r = tp + index_of(s.s2, ra);
        if (l == std::size_t(-1) || r == std::size_t(-1)) throw std::invalid_argument("diagram pair uses unknown atom");
        if (m[l] != std::size_t(-1)) throw std::invalid_argument("diagram endpoint used twice");
        m[l] = r;
    }
    return {s, tg, m, c};
}

namespace {

// Walks the glued matching graph of g ∘ f. Node kinds are the outer ends
// (S.s1, U.s2 on the left, U.s1, S.s2 on the right) and middle nodes T.s1, T.s2.
struct Glue {
    const WalledDiagram& g;
    const WalledDiagram& f;
    std::size_t p, t1, u1;

    enum Kind { Left, Right, Mid1, Mid2 };
    struct Node {
        Kind kind;
        std::size_t idx;  // Right: R-position in the result
    };

    // Follow f from its L-position.
    Node via_f(std::size_t l) const {
        std::size_t r = f.match()[l];
        if (r < t1) return {Mid1, r};
        return {Right, u1 + (r - t1)};
    }
    // Follow g from its L-position.
    Node via_g(std::size_t l) const {
        std::size_t r = g.match()[l];
        if (r < u1) return {Right, r};
        return {Mid2, r - u1};
    }
    Node step(Node n) const {
        if (n.kind == Mid1) return via_g(n.idx);
        return via_f(p + n.idx);  // Mid2
    }
};

}  // namespace

static WalledDiagram compose_impl(const WalledDiagram& g, const WalledDiagram& f, const Rational* charge, int* loops_out) {
    if (!(f.target() == g.source())) throw std::invalid_argument("compose: target of f differs from source of g");
    const FiniteSetPair& S = f.source();
    const FiniteSetPair& T = f.target();
    const FiniteSetPair& U = g.target();
    Glue gl{g, f, S.s1.size(), T.s1.size(), U.s1.size()};
    std::vector<char> seen1(T.s1.size(), 0), seen2(T.s2.size(), 0);
    std::vector<std::size_t> m(S.s1.size() + U.s2.size());
    auto walk = [&](Glue::Node n) {
        while (n.kind != Glue::Right) {
            if (n.kind == Glue::Mid1)
                seen1[n.idx] = 1;
            else
                seen2[n.idx] = 1;
            n = gl.step(n);
        }
        return n.idx;
    };
    for (std::size_t i = 0; i < S.s1.size(); ++i) m[i] = walk(gl.via_f(i));
    for (std::size_t j = 0; j < U.s2.size(); ++j) m[S.s1.size() + j] = walk(gl.via_g(T.s1.size() + j));
    int loops = 0;
    for (std::size_t k = 0; k < T.s1.size(); ++k) {
        if (seen1[k]) continue;
        ++loops;
        Glue::Node n{Glue::Mid1, k};
        do {
            if (n.kind == Glue::Mid1)
                seen1[n.idx] = 1;
            else
                seen2[n.idx] = 1;
            n = gl.step(n);
        } while (!(n.kind == Glue::Mid1 && n.idx == k));
    }
    if (loops_out) *loops_out = loops;
    Rational c = f.coefficient() * g.coefficient();
    if (charge)
        for (int i = 0; i < loops; ++i) c *= *charge;
    return {S, U, m, c};
}

WalledDiagram compose(const WalledDiagram& g, const WalledDiagram& f, const Rational& charge) {
    return compose_impl(g, f, &charge, nullptr);
}

int count_loops(const WalledDiagram& g, const WalledDiagram& f) {
    int loops = 0;
    compose_impl(g, f, nullptr, &loops);
    return loops;
}

FiniteSetPair tensor_objects(const FiniteSetPair& a, const FiniteSetPair& b) {
    auto s1 = a.s1, s2 = a.s2;
    s1.insert(s1.end(), b.s1.begin(), b.s1.end());
    s2.insert(s2.end(), b.s2.begin(), b.s2.end());
    return {s1, s2};
}

WalledDiagram tensor(const WalledDiagram& f, const WalledDiagram& g, std::map<Atom, Atom>* relabel_s1,
                     std::map<Atom, Atom>* relabel_s2) {
    const auto &fs = f.source(), &ft = f.target(), &gs = g.source(), &gt = g.target();
    Atom fresh = std::max(max_atom({&fs.s1, &fs.s2, &ft.s1, &ft.s2}), max_atom({&gs.s1, &gs.s2, &gt.s1, &gt.s2})) + 1;
    std::set<Atom> f1(fs.s1.begin(), fs.s1.end()), f2(fs.s2.begin(), fs.s2.end());
    f1.insert(ft.s1.begin(), ft.s1.end());
    f2.insert(ft.s2.begin(), ft.s2.end());
    std::map<Atom, Atom> r1, r2;
    auto ren = [&](std::map<Atom, Atom>& r, const std::set<Atom>& taken, Atom a) {
        if (!taken.count(a)) return a;
        auto it = r.find(a);
        if (it != r.end()) return it->second;
        return r[a] = fresh++;
    };
    auto map1 = [&](Atom a) { return ren(r1, f1, a); };
    auto map2 = [&](Atom a) { return ren(r2, f2, a); };
    FiniteSetPair gs2, gt2;
    for (Atom a : gs.s1) gs2.s1.push_back(map1(a));
    for (Atom a : gt.s1) gt2.s1.push_back(map1(a));
    for (Atom a : gs.s2) gs2.s2.push_back(map2(a));
    for (Atom a : gt.s2) gt2.s2.push_back(map2(a));
    auto th = f.through(), co = f.contractions(), in = f.insertions(), du = f.dual_through();
    for (auto [x, y] : g.through()) th.push_back({map1(x), map1(y)});
    for (auto [x, y] : g.contractions()) co.push_back({map1(x), map2(y)});
    for (auto [x, y] : g.insertions()) in.push_back({map1(x), map2(y)});
    for (auto [x, y] : g.dual_through()) du.push_back({map2(x), map2(y)});
    if (relabel_s1) *relabel_s1 = r1;
    if (relabel_s2) *relabel_s2 = r2;
    return WalledDiagram::from_pairs(tensor_objects(fs, gs2), tensor_objects(ft, gt2), th, co, in, du,
                                     f.coefficient() * g.coefficient());
}

DiagramWord factor_into_generators(const WalledDiagram& f) {
    if (f.coefficient() != 1) throw std::invalid_argument("factor_into_generators: coefficient must be 1");
    DiagramWord w;
    if (f.is_identity()) return w;
    const auto &S = f.source(), &T = f.target();
    FiniteSetPair cur = S;
    for (auto [x, y] : f.contractions()) {
        w.push_back(WalledDiagram::contraction(cur, x, y));
        cur = w.back().target();
    }
    Atom fresh = max_atom({&S.s1, &S.s2, &T.s1, &T.s2}) + 1;
    std::map<Atom, Atom> fmap, gmap;
    for (auto [x, t] : f.through()) fmap[x] = t;
    for (auto [t, y] : f.dual_through()) gmap[t] = y;
    for (auto [x, y] : f.insertions()) {
        Atom a = fresh++, b = fresh++;
        w.push_back(WalledDiagram::insertion(cur, a, b));
        cur = w.back().target();
        fmap[a] = x;
        gmap[y] = b;
    }
    auto bij = WalledDiagram::bijection(cur, T, fmap, gmap);
    if (!bij.is_identity()) w.push_back(bij);
    return w;
}

WalledDiagram recompose(const DiagramWord& w, const FiniteSetPair& source, const Rational& charge) {
    WalledDiagram acc = WalledDiagram::identity(source);
    for (auto& letter : w) acc = compose(letter, acc, charge);
    return acc;
}

}  // namespace bcoend
