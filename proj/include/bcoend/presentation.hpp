#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcoend/coend.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// Generator κ₁(f_i ∧ f_j ⊗ e_k), i < j, numbered lexicographically on (i,j,k).
struct KappaIndex {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const KappaIndex&) const = default;
};
std::size_t num_generators(int n);
std::size_t generator_index(const KappaIndex& g, int n);
KappaIndex generator(std::size_t idx, int n);

// Sorted generator indices -> coefficient.
using WedgeMonomial = std::vector<std::size_t>;
using WedgeVector = std::map<WedgeMonomial, Rational>;

void add_term(WedgeVector& v, const WedgeMonomial& m, const Rational& c);
// κ₁(f_x ∧ f_y ⊗ e_z) with antisymmetry applied; empty for x = y.
WedgeVector kappa(int x, int y, int z, int n);
WedgeVector wedge(const WedgeVector& a, const WedgeVector& b);
std::string wedge_to_string(const WedgeVector& v, int n);

struct IHRelation {
    int a = 0, b = 0, c = 0, k = 0;
    WedgeVector expansion;
};
// Σᵢ κ(a,b,i)∧κ(i,c,k) − Σᵢ κ(c,a,i)∧κ(i,b,k)
WedgeVector ih_expansion(int a, int b, int c, int k, int n);
// All (a,b,c,k); zero expansions and repeats up to sign dropped when `dedupe`.
std::vector<IHRelation> ih_relations(int n, bool dedupe = true);

struct PresentedComponent {
    int n = 0, degree = 0;
    std::vector<WedgeMonomial> ambient;
    std::map<WedgeMonomial, std::size_t> index;
    std::map<std::vector<int>, std::vector<std::size_t>> by_weight;  // ambient indices
    std::map<std::vector<int>, SparseEchelon> ideal;                 // local columns per weight
    std::size_t ideal_rank = 0;
    std::size_t dim = 0;
    std::string to_json() const;
};
std::vector<int> wedge_weight(const WedgeMonomial& m, int n);
PresentedComponent ring_pres_component(int n, int degree, bool force = false);

struct ComparisonReport {
    int n = 0, degree = 0;
    std::size_t ambient = 0, ideal_rank = 0;
    std::size_t dim_pres = 0, dim_R = 0, rank = 0;
    bool surjective = false, injective = false;
    bool relations_sound = false;  // every ideal row maps to 0 in R
    bool stable = false;           // n at or above the stable threshold
    std::string to_json() const;
};
// The ring map R_pres → R, κ₁(f_i∧f_j⊗e_k) ↦ the class of the block ({i,j};k).
ComparisonReport comparison_map(int n, int degree, bool force = false);

// Image of a wedge monomial in the ambient space of R.
SignedMonomial comparison_image(const WedgeMonomial& m, int n);

using KappaProduct = std::vector<KappaWord>;
using KappaExpr = std::map<KappaProduct, Rational>;
enum class EliminationOrder { LeftmostFirst, RightmostFirst };

// Rewrites κ₀ words and κ₁ words with more than two f's into products of
// κ₁ on (2,1)-words, using the insertion sums Σᵢ eᵢ⊗eᵢ^#.
KappaExpr kappa_eliminate(const KappaExpr& e, int n, EliminationOrder order = EliminationOrder::LeftmostFirst);
// Fully eliminated expression as a wedge vector.
WedgeVector kappa_to_wedge(const KappaExpr& e, int n);
std::string kappa_expr_to_string(const KappaExpr& e);

}  // namespace bcoend
