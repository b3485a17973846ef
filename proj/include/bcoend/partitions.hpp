#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcoend/brauer.hpp"
#include "bcoend/combinatorics.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// Polynomial in the charge n with rational coefficients; c[i] multiplies n^i.
class PolyN {
public:
    PolyN() = default;
    PolyN(long v) : c_{Rational(v)} { trim(); }
    PolyN(const Rational& v) : c_{v} { trim(); }
    static PolyN n() { return PolyN(std::vector<Rational>{0, 1}); }
    explicit PolyN(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rational eval(const Rational& n) const;

    PolyN& operator+=(const PolyN& o);
    PolyN& operator-=(const PolyN& o);
    PolyN operator+(const PolyN& o) const { return PolyN(*this) += o; }
    PolyN operator-(const PolyN& o) const { return PolyN(*this) -= o; }
    PolyN operator-() const { return PolyN() - *this; }
    PolyN operator*(const PolyN& o) const;
    bool operator==(const PolyN& o) const { return c_ == o.c_; }

    std::string to_string() const;  // [c0,c1,...]

private:
    void trim();
    std::vector<Rational> c_;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const PolyN& p) { return p.is_zero(); }
inline std::string coeff_string(const Rational& r) { return r.get_str(); }
inline std::string coeff_string(const PolyN& p) { return p.to_string(); }

// Wedge words for det(S) = det(Q^{S1}) ⊗ det(Q^{S2}), with a sign.
struct DetGenerator {
    std::vector<Atom> w1, w2;
    int sign = 1;

    static DetGenerator canonical(const FiniteSetPair& s) { return {s.s1, s.s2, 1}; }
    // Sign relative to the canonical generator of s.
    int relative_sign(const FiniteSetPair& s) const;
    std::string to_string(const AtomTable* t = nullptr) const;
};

DetGenerator apply_det(const WalledDiagram& m, const DetGenerator& g);
// Sign of det(m) between the canonical generators of source and target.
int det_sign(const WalledDiagram& m);

// Image of a single partition and the power of n picked up by removed
// labeled singletons.
std::pair<LabeledPartition, int> act_P(const WalledDiagram& m, const LabeledPartition& p);

// Formal linear combination of labeled partitions of S. When used as an
// element of P⊗det, each term carries the canonical det generator of S.
template <class C>
struct PartitionVectorT {
    FiniteSetPair S;
    std::map<LabeledPartition, C> terms;

    PartitionVectorT() = default;
    explicit PartitionVectorT(FiniteSetPair s) : S(std::move(s)) {}
    static PartitionVectorT basis(FiniteSetPair s, LabeledPartition p, C c = C(1)) {
        PartitionVectorT v(std::move(s));
        v.add(p, c);
        return v;
    }

    void add(const LabeledPartition& p, const C& c) {
        if (bcoend::is_zero(c)) return;
        auto [it, fresh] = terms.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (bcoend::is_zero(it->second)) terms.erase(it);
        }
    }
    void add(const PartitionVectorT& o, const C& s = C(1)) {
        for (auto& [p, c] : o.terms) add(p, c * s);
    }
    PartitionVectorT scaled(const C& s) const {
        PartitionVectorT out(S);
        for (auto& [p, c] : terms) out.add(p, c * s);
        return out;
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const PartitionVectorT& o) const { return S == o.S && terms == o.terms; }
    int degree() const { return S.degree(); }

    // [(coefficient, partition, det word)]
    std::string to_string(const AtomTable* t = nullptr) const {
        std::string out = "[";
        bool first = true;
        std::string det = DetGenerator::canonical(S).to_string(t);
        for (auto& [p, c] : terms) {
            out += (first ? "(" : ", (") + coeff_string(c) + ", " + p.to_string(t) + ", " + det + ")";
            first = false;
        }
        return out + "]";
    }
};

using PartitionVector = PartitionVectorT<Rational>;
using SymbolicPartitionVector = PartitionVectorT<PolyN>;

template <class C>
C power(const C& x, int e) {
    C r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

// The functor P on wBr_n. `nval` is the scalar for removed labeled singletons.
template <class C>
PartitionVectorT<C> apply_P(const WalledDiagram& m, const PartitionVectorT<C>& v, const C& nval) {
    if (!(v.S == m.source())) throw std::invalid_argument("apply_P: vector is not over the diagram source");
    PartitionVectorT<C> out(m.target());
    C coef(m.coefficient());
    for (auto& [p, c] : v.terms) {
        auto [q, e] = act_P(m, p);
        out.add(q, c * coef * power(nval, e));
    }
    return out;
}

// The functor P⊗det on wBr_n. det has loop value -1, so P is evaluated at
// charge -n.
template <class C>
PartitionVectorT<C> apply_Pdet(const WalledDiagram& m, const PartitionVectorT<C>& v, const C& nval) {
    return apply_P(m, v, C(C(0) - nval)).scaled(C(det_sign(m)));
}

// Product in P⊗det of u over S and v over T with disjoint atoms. The
// concatenated det word carries the sign (-1)^{|S1|·|T|}.
template <class C>
PartitionVectorT<C> day_product(const PartitionVectorT<C>& u, const PartitionVectorT<C>& v) {
    FiniteSetPair st = tensor_objects(u.S, v.S);
    {
        FiniteSetPair check(st.s1, st.s2);  // throws on collisions
        (void)check;
    }
    int eps = (u.S.s1.size() * v.S.size()) % 2 ? -1 : 1;
    PartitionVectorT<C> out(st);
    for (auto& [p, c] : u.terms)
        for (auto& [q, d] : v.terms) {
            LabeledPartition r = p;
            r.parts.insert(r.parts.end(), q.parts.begin(), q.parts.end());
            r.canonicalize();
            out.add(r, c * d * C(eps));
        }
    return out;
}

struct StandardShape {
    Partition lambda;
    std::vector<int> k;        // 1 for labeled parts
    std::map<Atom, int> f;     // S1 -> 1..p
    std::map<Atom, int> g;     // S2 -> 1..q
    int sign = 1;              // sgn(f)·sgn(g) against the list orders of S
};

// Parts sorted by size (descending), labeled before unlabeled; ties keep
// the order by minimum element.
StandardShape standardize(const LabeledPartition& p, const FiniteSetPair& s);
// The standard partition of ([p],[q]) with this shape.
LabeledPartition standard_partition(const Partition& lambda, const std::vector<int>& k);
// Shape with an explicit order of the parts (indices into p.parts) and of
// the elements inside each part.
StandardShape standardize_with(const LabeledPartition& p, const FiniteSetPair& s, const std::vector<std::size_t>& part_order,
                               const std::vector<std::vector<Atom>>& element_orders);

struct KanSummand {
    FiniteSetPair I;                     // sub-object carrying the strict partition
    std::vector<Matching> matchings;     // perfect matchings of S∖I
    std::vector<LabeledPartition> strict;  // P′(I) basis
};

std::vector<KanSummand> kan_decompose(const FiniteSetPair& s);
// (matching, strict partition) -> partition with labeled singletons added.
LabeledPartition kan_assemble(const Matching& m, const LabeledPartition& strict);
// True when kan_assemble is a bijection onto the basis of P(S).
bool kan_decompose_is_bijection(const FiniteSetPair& s);

// Classes in the P⊗det model of the wheeled structure, over ([p],[q]),
// with symbolic n.
namespace wheeled {
using Element = SymbolicPartitionVector;

Element unit();                       // h_{1,1}
Element h(int p, int q);              // h_{p,1} by iterated composition, h_{p,0} by contraction
Element horizontal(const Element& a, const Element& b);
Element contract(const Element& a, int i, int j);  // ξ_{i,j}
Element vertical(const Element& a, const Element& b);  // a ∘ b
Element permute_inputs(const Element& a, const std::vector<int>& perm);  // i -> perm[i-1]
}  // namespace wheeled

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<CheckResult> wheeled_model_check(int p);

}  // namespace bcoend
