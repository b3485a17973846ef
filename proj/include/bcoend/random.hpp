#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "bcoend/brauer.hpp"

// Seeded random objects and diagrams for property checks.
namespace bcoend::rnd {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ([1..p],[1..q]) with p+q <= max_size.
inline FiniteSetPair object(Engine& rng, int max_size) {
    int p = uniform(rng, 0, max_size);
    int q = uniform(rng, 0, max_size - p);
    return FiniteSetPair::standard(p, q);
}

// A standard object of the same degree as s with at most max_size atoms.
inline FiniteSetPair object_like(Engine& rng, const FiniteSetPair& s, int max_size) {
    int d = s.degree();
    int lo = std::max(0, d), hi = (max_size + d) / 2;
    if (hi < lo) hi = lo;
    int p = uniform(rng, lo, hi);
    return FiniteSetPair::standard(p, p - d);
}

// Uniform matching between L = S.s1 ⊔ T.s2 and R = T.s1 ⊔ S.s2.
inline WalledDiagram diagram(Engine& rng, const FiniteSetPair& s, const FiniteSetPair& t) {
    std::vector<std::size_t> m(s.s1.size() + t.s2.size());
    std::iota(m.begin(), m.end(), std::size_t(0));
    std::shuffle(m.begin(), m.end(), rng);
    return WalledDiagram(s, t, m);
}

// k random contractions followed by a random bijection onto a standard object.
inline WalledDiagram downward(Engine& rng, const FiniteSetPair& s) {
    int k = uniform(rng, 0, int(std::min(s.s1.size(), s.s2.size())));
    std::vector<Atom> a = s.s1, b = s.s2;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    FiniteSetPair t = FiniteSetPair::standard(int(a.size()) - k, int(b.size()) - k);
    std::vector<std::pair<Atom, Atom>> th, con, du;
    for (int i = 0; i < k; ++i) con.push_back({a[std::size_t(i)], b[std::size_t(i)]});
    for (std::size_t i = std::size_t(k); i < a.size(); ++i) th.push_back({a[i], t.s1[i - std::size_t(k)]});
    for (std::size_t i = std::size_t(k); i < b.size(); ++i) du.push_back({t.s2[i - std::size_t(k)], b[i]});
    return WalledDiagram::from_pairs(s, t, th, con, {}, du);
}

}  // namespace bcoend::rnd
