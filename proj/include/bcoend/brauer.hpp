#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcoend/combinatorics.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// Morphism S -> T of the walled Brauer category: a perfect matching between
// L = S.s1 ⊔ T.s2 and R = T.s1 ⊔ S.s2, plus a scalar.
//
// Pairs by endpoint kind:
//   S.s1 -> T.s1   through strand
//   S.s1 -> S.s2   contraction
//   T.s2 -> T.s1   insertion
//   T.s2 -> S.s2   dual through strand
class WalledDiagram {
public:
    WalledDiagram() = default;
    // `match[i]` is the R-position matched to L-position i.
    WalledDiagram(FiniteSetPair source, FiniteSetPair target, std::vector<std::size_t> match,
                  Rational coefficient = 1);

    static WalledDiagram identity(const FiniteSetPair& s);
    // Bijection S -> T given by f: S.s1 -> T.s1 and g: T.s2 -> S.s2.
    static WalledDiagram bijection(const FiniteSetPair& s, const FiniteSetPair& t, const std::map<Atom, Atom>& f,
                                   const std::map<Atom, Atom>& g);
    // S -> S minus {x, y}, x in S.s1, y in S.s2.
    static WalledDiagram contraction(const FiniteSetPair& s, Atom x, Atom y);
    // S -> S plus x appended to s1 and y appended to s2.
    static WalledDiagram insertion(const FiniteSetPair& s, Atom x, Atom y);
    // Generic constructor from the four kinds of pairs.
    static WalledDiagram from_pairs(const FiniteSetPair& s, const FiniteSetPair& t,
                                    const std::vector<std::pair<Atom, Atom>>& through,
                                    const std::vector<std::pair<Atom, Atom>>& contractions,
                                    const std::vector<std::pair<Atom, Atom>>& insertions,
                                    const std::vector<std::pair<Atom, Atom>>& dual_through, Rational coefficient = 1);

    const FiniteSetPair& source() const { return source_; }
    const FiniteSetPair& target() const { return target_; }
    const Rational& coefficient() const { return coeff_; }
    void set_coefficient(Rational c) { coeff_ = std::move(c); }
    const std::vector<std::size_t>& match() const { return match_; }

    // (x in S.s1, t in T.s1)
    std::vector<std::pair<Atom, Atom>> through() const;
    // (x in S.s1, y in S.s2)
    std::vector<std::pair<Atom, Atom>> contractions() const;
    // (x in T.s1, y in T.s2)
    std::vector<std::pair<Atom, Atom>> insertions() const;
    // (t in T.s2, y in S.s2)
    std::vector<std::pair<Atom, Atom>> dual_through() const;

    bool is_downward() const { return insertions().empty(); }
    bool is_identity() const;
    bool same_matching(const WalledDiagram& o) const;
    bool operator==(const WalledDiagram& o) const { return same_matching(o) && coeff_ == o.coeff_; }

    // S=(a,b|x); T=(c|y,z); m=[(a→y),(c→x)]; c=p/q
    std::string to_string(const AtomTable* t = nullptr) const;
    static WalledDiagram parse(const std::string& text, AtomTable* t = nullptr);

private:
    FiniteSetPair source_, target_;
    std::vector<std::size_t> match_;
    Rational coeff_ = 1;
};

// g ∘ f, multiplying by charge once per closed loop.
WalledDiagram compose(const WalledDiagram& g, const WalledDiagram& f, const Rational& charge);
int count_loops(const WalledDiagram& g, const WalledDiagram& f);

// Atoms of g that collide with atoms of f are renamed; the renaming of g's
// s1-side and s2-side atoms is returned through the optional maps.
WalledDiagram tensor(const WalledDiagram& f, const WalledDiagram& g, std::map<Atom, Atom>* relabel_s1 = nullptr,
                     std::map<Atom, Atom>* relabel_s2 = nullptr);
FiniteSetPair tensor_objects(const FiniteSetPair& a, const FiniteSetPair& b);

// Letters applied first to last: result = w.back() ∘ ... ∘ w.front().
using DiagramWord = std::vector<WalledDiagram>;

// Contractions, then insertions on fresh atoms, then one bijection.
// The identity factors as the empty word.
DiagramWord factor_into_generators(const WalledDiagram& f);
WalledDiagram recompose(const DiagramWord& w, const FiniteSetPair& source, const Rational& charge);

}  // namespace bcoend
