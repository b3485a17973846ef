#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcoend {

// Atoms are positive integers. Label 0 on a block means "unlabeled".
using Atom = int;
constexpr Atom kUnlabeled = 0;

// Optional names for atoms in text formats. Decimal tokens always parse to
// their value; other tokens are interned here, numbered after `base`.
class AtomTable {
public:
    explicit AtomTable(Atom base = 1000) : next_(base) {}
    Atom intern(const std::string& name);
    std::string name(Atom a) const;

private:
    Atom next_;
    std::map<std::string, Atom> ids_;
    std::map<Atom, std::string> names_;
};

Atom parse_atom(const std::string& tok, AtomTable* table);
std::string atom_name(Atom a, const AtomTable* table);

struct FiniteSetPair {
    std::vector<Atom> s1, s2;

    FiniteSetPair() = default;
    FiniteSetPair(std::vector<Atom> a, std::vector<Atom> b);
    // ([1..p],[1..q])
    static FiniteSetPair standard(int p, int q);

    std::size_t size() const { return s1.size() + s2.size(); }
    int degree() const { return int(s1.size()) - int(s2.size()); }
    bool operator==(const FiniteSetPair&) const = default;
    auto operator<=>(const FiniteSetPair&) const = default;
    std::string to_string(const AtomTable* t = nullptr) const;  // (a,b|x)
};

// Pairs (a in s1, b in s2).
using Matching = std::vector<std::pair<Atom, Atom>>;

std::vector<Matching> enumerate_matchings(const FiniteSetPair& s);
std::string matching_to_string(const Matching& m, const AtomTable* t = nullptr);
Matching parse_matching(const std::string& text, AtomTable* t = nullptr);

// Sign of the permutation i -> perm[i] of {0..k-1}.
int permutation_sign(const std::vector<std::size_t>& perm);
// Sign of the reordering taking `from` to `to` (same atoms, different order).
int permutation_sign(const std::vector<Atom>& from, const std::vector<Atom>& to);

std::size_t factorial(int k);
std::size_t binomial(int n, int k);

struct Block {
    std::vector<Atom> elems;  // sorted
    Atom label = kUnlabeled;
    bool labeled() const { return label != kUnlabeled; }
    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;
};

// Partition of s1 with some blocks labeled bijectively by s2.
struct LabeledPartition {
    std::vector<Block> parts;

    LabeledPartition() = default;
    explicit LabeledPartition(std::vector<Block> b) : parts(std::move(b)) { canonicalize(); }

    // Sorts elements in each block and blocks by their minimum.
    void canonicalize();
    bool is_valid_for(const FiniteSetPair& s) const;
    bool is_strict() const;
    std::size_t num_labeled() const;
    bool operator==(const LabeledPartition&) const = default;
    auto operator<=>(const LabeledPartition&) const = default;

    std::string to_string(const AtomTable* t = nullptr) const;  // {1,2;a|3;·}
    static LabeledPartition parse(const std::string& text, AtomTable* t = nullptr);
};

std::vector<LabeledPartition> enumerate_labeled_partitions(const FiniteSetPair& s, bool strict);
// The number of labeled partitions of ([p],[q]), without enumerating them.
mpz_class count_labeled_partitions(int p, int q, bool strict);
constexpr std::uint64_t kPartitionLimit = 2000000;

// Set partitions of `elems` as lists of blocks, in restricted-growth order.
std::vector<std::vector<std::vector<Atom>>> enumerate_set_partitions(const std::vector<Atom>& elems);

using Partition = std::vector<int>;  // weakly decreasing, positive

// Partitions of k in reverse lexicographic order, (k) first.
std::vector<Partition> enumerate_partitions(int k);
int weight(const Partition& p);
std::string partition_to_string(const Partition& p);

struct Bipartition {
    Partition lambda, mu;
    std::size_t length() const { return lambda.size() + mu.size(); }
    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;
    std::string to_string() const;
};

std::vector<Bipartition> enumerate_bipartitions(int p, int q);

// Calls f on each permutation of {0..k-1} in lexicographic order.
template <class F>
void for_each_permutation(int k, F&& f);

}  // namespace bcoend

#include <algorithm>
#include <numeric>

namespace bcoend {

template <class F>
void for_each_permutation(int k, F&& f) {
    std::vector<std::size_t> p(std::size_t(std::max(k, 0)));
    std::iota(p.begin(), p.end(), std::size_t(0));
    do {
        f(static_cast<const std::vector<std::size_t>&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace bcoend
