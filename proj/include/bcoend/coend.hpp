#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcoend/characters.hpp"
#include "bcoend/combinatorics.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// A block of a labeled partition with basis indices attached: the elements
// carry H^∨ indices, the label (if any) an H index. Indices are 1..n and
// label 0 marks an unlabeled block.
struct DecoratedBlock {
    std::vector<int> elems;
    int label = 0;

    bool labeled() const { return label != 0; }
    int degree() const { return int(elems.size()) - (labeled() ? 1 : 0); }
    // Odd blocks anticommute and cannot repeat.
    bool fermionic() const { return degree() % 2 != 0; }
    auto operator<=>(const DecoratedBlock&) const = default;
    bool operator==(const DecoratedBlock&) const = default;
};

// A basis vector of K^∨(S) ⊗ (P′⊗det)(S) up to the symmetric groups: blocks
// listed with atoms numbered consecutively in block order (elements in the
// order written, labels in block order). A canonical monomial has sorted
// elements and sorted blocks.
using BlockMonomial = std::vector<DecoratedBlock>;

std::string monomial_to_string(const BlockMonomial& m);
int monomial_degree(const BlockMonomial& m);

// Class of a block list in the coinvariants: canonical monomial and sign,
// or sign 0 when the class vanishes.
struct SignedMonomial {
    BlockMonomial mono;
    int sign = 0;
};
SignedMonomial canonical_class(const BlockMonomial& blocks);

// Product of two block lists as a concatenation with the Day sign.
SignedMonomial block_product(const BlockMonomial& a, const BlockMonomial& b);

// Torus weight: +1 per label index, -1 per element index.
std::vector<int> monomial_weight(const BlockMonomial& m, int n);

constexpr std::uint64_t kWedgeLimit = 5000000;

// Degreewise quotient, split by torus weight.
struct WeightQuotient {
    std::vector<std::size_t> columns;  // global ambient indices of this weight
    SparseEchelon relations{0};
    std::vector<std::size_t> free;     // local indices of quotient basis columns
    std::size_t offset = 0;            // position of the first free column in the global basis
    std::size_t dim() const { return free.size(); }
};

struct CoendComponent {
    int n = 0, degree = 0;
    std::vector<BlockMonomial> ambient;  // canonical, nonzero
    std::map<BlockMonomial, std::size_t> index;
    std::vector<std::vector<int>> weight_of_column;
    std::map<std::vector<int>, WeightQuotient> weights;
    std::size_t relation_rows = 0;
    std::size_t relation_rank = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> basis;      // ambient indices of the quotient basis

    // Quotient coordinates of an ambient vector, indexed like `basis`.
    std::vector<Rational> reduce(const SparseRow& v) const;
    SparseRow ambient_vector(const SignedMonomial& m) const;
    std::string to_json() const;
};

// R in degree d at rank n, by the coequalizer of all single contractions.
CoendComponent compute_R(int n, int degree, bool force = false);

// Element of R_d in coordinates of the quotient basis.
struct RingElement {
    int degree = 0;
    std::vector<Rational> coords;
};

class CoendRing {
public:
    explicit CoendRing(int n, bool force = false) : n_(n), force_(force) {}
    int n() const { return n_; }
    const CoendComponent& component(int degree);
    RingElement basis_element(int degree, std::size_t i);
    RingElement from_monomial(int degree, const SignedMonomial& m);
    RingElement multiply(const RingElement& a, const RingElement& b);
    RingElement one() { return basis_element(0, 0); }

private:
    int n_;
    bool force_;
    std::map<int, CoendComponent> comps_;
};

RingElement ring_multiply(const RingElement& a, const RingElement& b, CoendRing& ctx);

// The class of κ₁(f₁⊗…⊗f_k⊗v) and κ₀(f₁⊗…⊗f_k). Labeled blocks carry a
// factor -1 so that κ₀(f) = Σᵢ κ₁(f⊗eᵢ^#⊗eᵢ).
struct KappaWord {
    std::vector<int> f;
    int v = 0;  // 0 for κ₀
    bool operator==(const KappaWord&) const = default;
    auto operator<=>(const KappaWord&) const = default;
};
std::string kappa_to_string(const KappaWord& w);
// Class of the product w₁·w₂·… in R (unreduced ambient monomial and sign).
SignedMonomial kappa_product_class(const std::vector<KappaWord>& words);

// Albanese W_i(n) = ⊕_{p−q=i} K°_{p,q}(n) ⊗_{Σp×Σq} (P′⊗det)(p,q).
struct AlbaneseReport {
    int i = 0, n = 0;
    std::size_t dim = 0;                      // by traces on K° and P′⊗det
    MultiplicityTable content;                // GL convention: λ is the H content
    std::size_t content_dim = 0;              // Σ mult · dim V_{λ,μ}(n)
    std::vector<std::pair<std::pair<int, int>, std::size_t>> parts;  // ((p,q), dim)
    std::string to_json() const;
};
AlbaneseReport compute_W(int i, int n, bool force = false);

}  // namespace bcoend
