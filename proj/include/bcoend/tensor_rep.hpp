#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcoend/brauer.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// Basis words of K_S(n) = H^{⊗S1} ⊗ H^∨^{⊗S2} are numbered in mixed radix
// n: the s1 atoms in list order, then the s2 atoms, first atom most
// significant. Index values are 0-based.
std::uint64_t tensor_dim(const FiniteSetPair& s, int n);
std::vector<int> tensor_word(std::uint64_t index, std::size_t length, int n);
std::uint64_t tensor_index(const std::vector<int>& word, int n);

constexpr std::uint64_t kTensorLimit = 1000000;

// Matrix of K(m) on the standard bases, n^{|T|} x n^{|S|}.
RationalMatrix K_on_morphism(const WalledDiagram& m, int n, bool force = false);

using IntMatrix = std::vector<std::vector<int>>;

struct GroupGenerator {
    std::string name;
    IntMatrix g, inverse;
};
// I + E12, the n-cycle, the transposition (1 2) and diag(-1,1,...,1).
std::vector<GroupGenerator> gl_generators(int n);
// g^{⊗p} ⊗ (g^{-T})^{⊗q} on K_{p,q}(n).
RationalMatrix gl_action(const GroupGenerator& g, int p, int q, bool force = false);

struct InvariantReport {
    std::size_t dim = 0;
    RationalMatrix basis;          // columns
    RationalMatrix matching_span;  // columns ω_m(1), one per perfect matching
    std::size_t span_rank = 0;
    bool span_inside = false;      // every ω_m(1) is invariant
    bool span_surjective() const { return span_rank == dim; }
};
InvariantReport invariants(const FiniteSetPair& s, int n, bool force = false);

// Columns span the common kernel of all contractions.
RationalMatrix traceless(const FiniteSetPair& s, int n, bool force = false);

struct DecompositionSummand {
    FiniteSetPair I;
    Matching m;                // pairs of S∖I inserted
    std::size_t dim = 0;       // dim K°(I)
};

struct DecompositionReport {
    std::uint64_t total = 0;   // dim K_S(n)
    std::size_t summand_sum = 0;
    std::size_t image_rank = 0;
    std::vector<DecompositionSummand> summands;
    bool direct() const { return image_rank == summand_sum; }
    bool ok() const { return direct() && summand_sum == total; }
};
DecompositionReport decomposition_check(const FiniteSetPair& s, int n, bool force = false);

// Insertion S∖{pairs} -> S along the pairs of m, identity on I.
WalledDiagram insertion_along(const FiniteSetPair& I, const FiniteSetPair& S, const Matching& m);

}  // namespace bcoend
