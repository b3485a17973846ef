#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcoend/combinatorics.hpp"
#include "bcoend/linalg.hpp"

namespace bcoend {

// χ^λ(ρ) by Murnaghan–Nakayama.
long specht_character(const Partition& lambda, const Partition& rho);
long specht_dim(const Partition& lambda);
// |Σ_k| / z_ρ
Integer class_size(const Partition& rho);

struct CycleTypePair {
    Partition sigma, tau;
};

// Permutation of 1..k with the given cycle type, cycles on consecutive points.
std::vector<int> permutation_of_type(const Partition& rho);

// Trace of σ×τ on P′(p,q)⊗det: sgn(σ)sgn(τ) times the number of fixed
// strict labeled partitions.
Rational module_character(int p, int q, const CycleTypePair& c);

enum class Convention {
    MuDual,      // λ carries the H content, μ the H^∨ content
    LambdaDual,  // λ carries the H^∨ content (the raw Σ_p × Σ_q reading)
};
std::string convention_name(Convention c);
Convention parse_convention(const std::string& s);

struct MultiplicityTable {
    int degree = 0;
    std::string y_monomial = "1";  // formal y factor, GL-trivial
    int y_degree = 0;
    std::map<Bipartition, long> entries;
    int n_min = 0;
    Convention convention = Convention::LambdaDual;

    std::size_t total_at(int n) const;  // Σ mult · dim V_{λ,μ}(n)
    std::string to_json() const;
};

// Bound on |P′(p,q)| times the number of classes.
constexpr std::uint64_t kCharacterLimit = 200000000;

// ⟨P′(p,q)⊗det, S^λ⊗S^μ⟩ with λ ⊢ p, μ ⊢ q: the raw reading.
MultiplicityTable multiplicities(int p, int q, bool force = false);
MultiplicityTable convert(const MultiplicityTable& t, Convention to);

// Weyl dimension of V_{λ,μ}(n); λ is the H content. 0 when l(λ)+l(μ) > n.
Integer gl_dimension(const Bipartition& b, int n);

// Stable threshold used for tables and comparisons in degree d.
int stable_threshold(int degree);

// One table per formal y-monomial of degree ≤ `degree` (only the empty one
// without with_y).
std::vector<MultiplicityTable> stable_table(int degree, bool with_y, Convention c = Convention::MuDual,
                                           bool force = false);

// χ^λ(ρ) for all λ, ρ ⊢ k, rows λ, columns ρ.
std::string character_table_csv(int k);

}  // namespace bcoend
