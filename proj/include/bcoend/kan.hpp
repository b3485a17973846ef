#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bcoend/brauer.hpp"
#include "bcoend/linalg.hpp"
#include "bcoend/partitions.hpp"

namespace bcoend {

// A functor on the downward walled Brauer category, given by a basis of
// each value and the action of downward diagrams on basis vectors.
class DownwardFunctor {
public:
    virtual ~DownwardFunctor() = default;
    virtual std::string name() const = 0;
    virtual std::size_t dim(const FiniteSetPair& I) const = 0;
    // A(g) on basis vector b of A(source), in the basis of A(target).
    virtual SparseRow apply(const WalledDiagram& g, std::size_t b) const = 0;
};

// P′: strict labeled partitions.
class StrictPartitionFunctor : public DownwardFunctor {
public:
    std::string name() const override { return "P'"; }
    std::size_t dim(const FiniteSetPair& I) const override { return basis(I).size(); }
    SparseRow apply(const WalledDiagram& g, std::size_t b) const override;
    const std::vector<LabeledPartition>& basis(const FiniteSetPair& I) const;

private:
    mutable std::map<FiniteSetPair, std::vector<LabeledPartition>> cache_;
};

// K°(n): the traceless tensors, in the null-space basis of the contractions.
class TracelessFunctor : public DownwardFunctor {
public:
    explicit TracelessFunctor(int n, bool force = false) : n_(n), force_(force) {}
    std::string name() const override { return "K°"; }
    int n() const { return n_; }
    std::size_t dim(const FiniteSetPair& I) const override { return data(I).basis.cols(); }
    SparseRow apply(const WalledDiagram& g, std::size_t b) const override;
    // Basis vectors as columns in K(I).
    const RationalMatrix& basis(const FiniteSetPair& I) const { return data(I).basis; }

private:
    struct Data {
        RationalMatrix basis;
        std::vector<std::size_t> free;  // the basis is the identity on these rows
    };
    const Data& data(const FiniteSetPair& I) const;
    int n_;
    bool force_;
    mutable std::map<FiniteSetPair, Data> cache_;
};

// Basis vector of i_*(A)(S): an insertion along m of S∖I applied to basis
// vector b of A(I).
struct KanElement {
    FiniteSetPair I;
    Matching m;  // sorted pairs
    std::size_t b = 0;
    auto operator<=>(const KanElement&) const = default;
};

struct KanSummandDim {
    FiniteSetPair I;
    std::size_t matchings = 0, dim = 0;
};

struct KanExtension {
    FiniteSetPair S;
    std::vector<KanSummandDim> summands;
    std::vector<KanElement> basis;
    std::map<KanElement, std::size_t> index;
    std::size_t dim() const { return basis.size(); }
    std::string to_json() const;
};

// i_*(A)(S) = ⊕_{I⊆S} Hom(∅, S∖I) ⊗ A(I).
KanExtension kan_extend(const DownwardFunctor& A, const FiniteSetPair& S);

using KanVector = std::map<KanElement, Rational>;

// f: S -> T on a basis element: compose f with the insertion, split the
// result into its insertions and a downward part, and apply A to the latter.
// Closed loops cost `charge`.
KanVector kan_act(const DownwardFunctor& A, const WalledDiagram& f, const KanElement& e, const Rational& charge);

// i_*(P′)(S) -> P(S), adding a labeled singleton per inserted pair.
PartitionVector kan_to_P(const StrictPartitionFunctor& A, const KanVector& v, const FiniteSetPair& S);

// ψ: i_*(K°)(S) -> K(S).
struct PsiReport {
    FiniteSetPair S;
    int n = 0;
    std::size_t source = 0;
    std::uint64_t target = 0;
    std::size_t rank = 0;
    bool surjective() const { return rank == target; }
    bool injective() const { return rank == source; }
    std::string to_json() const;
};
PsiReport psi_report(const FiniteSetPair& S, int n, bool force = false);
// ψ(e) as a column of K(S).
SparseRow psi(const TracelessFunctor& A, const KanElement& e, const FiniteSetPair& S);

}  // namespace bcoend
