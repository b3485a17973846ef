#include "bcoend/combinatorics.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace bcoend {

Atom AtomTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Atom a = next_++;
    ids_[name] = a;
    names_[a] = name;
    return a;
}

std::string AtomTable::name(Atom a) const {
    auto it = names_.find(a);
    return it == names_.end() ? std::to_string(a) : it->second;
}

Atom parse_atom(const std::string& raw, AtomTable* table) {
    std::string tok = trim(raw);
    if (tok.empty()) throw std::invalid_argument("empty atom");
    bool digits = std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
    if (digits) {
        Atom a = std::stoi(tok);
        if (a <= 0) throw std::invalid_argument("atoms must be positive: " + tok);
        return a;
    }
    if (!table) throw std::invalid_argument("named atom '" + tok + "' needs an atom table");
    return table->intern(tok);
}

std::string atom_name(Atom a, const AtomTable* table) {
    return table ? table->name(a) : std::to_string(a);
}

FiniteSetPair::FiniteSetPair(std::vector<Atom> a, std::vector<Atom> b) : s1(std::move(a)), s2(std::move(b)) {
    for (auto* v : {&s1, &s2}) {
        std::set<Atom> seen(v->begin(), v->end());
        if (seen.size() != v->size()) throw std::invalid_argument("repeated atom in finite set");
        if (seen.count(kUnlabeled)) throw std::invalid_argument("atom 0 is reserved");
    }
}

FiniteSetPair FiniteSetPair::standard(int p, int q) {
    std::vector<Atom> a(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(q));
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    return {a, b};
}

std::string FiniteSetPair::to_string(const AtomTable* t) const {
    std::string out = "(";
    for (std::size_t i = 0; i < s1.size(); ++i) out += (i ? "," : "") + atom_name(s1[i], t);
    out += "|";
    for (std::size_t i = 0; i < s2.size(); ++i) out += (i ? "," : "") + atom_name(s2[i], t);
    return out + ")";
}

std::vector<Matching> enumerate_matchings(const FiniteSetPair& s) {
    std::vector<Matching> out;
    if (s.s1.size() != s.s2.size()) return out;
    for_each_permutation(int(s.s1.size()), [&](const std::vector<std::size_t>& p) {
        Matching m;
        for (std::size_t i = 0; i < p.size(); ++i) m.push_back({s.s1[i], s.s2[p[i]]});
        out.push_back(std::move(m));
    });
    return out;
}

std::string matching_to_string(const Matching& m, const AtomTable* t) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i)
        out += (i ? ",(" : "(") + atom_name(m[i].first, t) + "→" + atom_name(m[i].second, t) + ")";
    return out + "]";
}

Matching parse_matching(const std::string& text, AtomTable* t) {
    Matching m;
    for (auto& [a, b] : parse_arrow_pairs(text)) m.push_back({parse_atom(a, t), parse_atom(b, t)});
    return m;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            if (perm[j] >= perm.size()) throw std::invalid_argument("not a permutation");
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int permutation_sign(const std::vector<Atom>& from, const std::vector<Atom>& to) {
    if (from.size() != to.size()) throw std::invalid_argument("permutation_sign: size mismatch");
    std::map<Atom, std::size_t> pos;
    for (std::size_t i = 0; i < to.size(); ++i) pos[to[i]] = i;
    std::vector<std::size_t> perm(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = pos.find(from[i]);
        if (it == pos.end()) throw std::invalid_argument("permutation_sign: atom sets differ");
        perm[i] = it->second;
    }
    std::vector<char> hit(perm.size(), 0);
    for (auto p : perm) {
        if (hit[p]) throw std::invalid_argument("permutation_sign: repeated atom");
        hit[p] = 1;
    }
    return permutation_sign(perm);
}

std::size_t factorial(int k) {
    std::size_t r = 1;
    for (int i = 2; i <= k; ++i) r *= std::size_t(i);
    return r;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * std::size_t(n - k + i) / std::size_t(i);
    return r;
}

void LabeledPartition::canonicalize() {
    for (auto& b : parts) std::sort(b.elems.begin(), b.elems.end());
    std::sort(parts.begin(), parts.end(), [](const Block& a, const Block& b) { return a.elems < b.elems; });
}

bool LabeledPartition::is_valid_for(const FiniteSetPair& s) const {
    std::vector<Atom> els, labs;
    for (auto& b : parts) {
        if (b.elems.empty()) return false;
        els.insert(els.end(), b.elems.begin(), b.elems.end());
        if (b.labeled()) labs.push_back(b.label);
    }
    std::sort(els.begin(), els.end());
    std::sort(labs.begin(), labs.end());
    auto a = s.s1, c = s.s2;
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    return els == a && labs == c;
}

bool LabeledPartition::is_strict() const {
    return std::none_of(parts.begin(), parts.end(), [](const Block& b) { return b.labeled() && b.elems.size() == 1; });
}

std::size_t LabeledPartition::num_labeled() const {
    return std::size_t(std::count_if(parts.begin(), parts.end(), [](const Block& b) { return b.labeled(); }));
}

std::string LabeledPartition::to_string(const AtomTable* t) const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        for (std::size_t j = 0; j < parts[i].elems.size(); ++j) out += (j ? "," : "") + atom_name(parts[i].elems[j], t);
        out += ";";
        out += parts[i].labeled() ? atom_name(parts[i].label, t) : std::string("·");
    }
    return out + "}";
}

LabeledPartition LabeledPartition::parse(const std::string& text, AtomTable* t) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw std::invalid_argument("partition must be braced: " + text);
    s = s.substr(1, s.size() - 2);
    LabeledPartition p;
    if (trim(s).empty()) return p;
    for (auto& part : split(s, '|')) {
        auto fields = split(part, ';');
        if (fields.size() > 2) throw std::invalid_argument("bad block: " + part);
        Block b;
        for (auto& e : split(fields[0], ',')) b.elems.push_back(parse_atom(e, t));
        if (fields.size() == 2) {
            std::string lab = trim(fields[1]);
            if (lab != "·" && lab != "." && !lab.empty()) b.label = parse_atom(lab, t);
        }
        p.parts.push_back(std::move(b));
    }
    p.canonicalize();
    return p;
}

std::vector<std::vector<std::vector<Atom>>> enumerate_set_partitions(const std::vector<Atom>& elems) {
    std::vector<std::vector<std::vector<Atom>>> out;
    std::vector<std::vector<Atom>> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == elems.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(elems[i]);
            self(self, i + 1);
            cur[b].pop_back();
        }
        cur.push_back({elems[i]});
        self(self, i + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

std::vector<LabeledPartition> enumerate_labeled_partitions(const FiniteSetPair& s, bool strict) {
    std::vector<LabeledPartition> out;
    std::size_t q = s.s2.size();
    for (auto& blocks : enumerate_set_partitions(s.s1)) {
        if (blocks.size() < q) continue;
        // Injective assignment of the q labels to blocks.
        std::vector<Atom> lab(blocks.size(), kUnlabeled);
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == q) {
                LabeledPartition p;
                for (std::size_t b = 0; b < blocks.size(); ++b) p.parts.push_back({blocks[b], lab[b]});
                p.canonicalize();
                out.push_back(std::move(p));
                return;
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (lab[b] != kUnlabeled) continue;
                if (strict && blocks[b].size() == 1) continue;
                lab[b] = s.s2[j];
                self(self, j + 1);
                lab[b] = kUnlabeled;
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_partitions(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rem, maxpart); x >= 1; --x) {
            cur.push_back(x);
            self(self, rem - x, x);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

int weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "∅";
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

std::string Bipartition::to_string() const {
    return "(" + partition_to_string(lambda) + "," + partition_to_string(mu) + ")";
}

std::vector<Bipartition> enumerate_bipartitions(int p, int q) {
    std::vector<Bipartition> out;
    for (auto& m : enumerate_partitions(q))
        for (auto& l : enumerate_partitions(p)) out.push_back({l, m});
    std::stable_sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) {
        return a.lambda > b.lambda || (a.lambda == b.lambda && a.mu > b.mu);
    });
    return out;
}

mpz_class count_labeled_partitions(int p, int q, bool strict) {
    if (p < 0 || q < 0) return 0;
    // a[j][k]: set partitions of j elements into k blocks, each of size >= m
    int m = strict ? 2 : 1;
    auto P = std::size_t(p), Q = std::size_t(q);
    std::vector<std::vector<mpz_class>> a(P + 1, std::vector<mpz_class>(Q + 1, 0));
    a[0][0] = 1;
    for (std::size_t j = 1; j <= P; ++j)
        for (std::size_t k = 1; k <= Q; ++k) {
            mpz_class v = mpz_class(k) * a[j - 1][k];
            if (j >= std::size_t(m)) v += mpz_class(binomial(int(j) - 1, m - 1)) * a[j - std::size_t(m)][k - 1];
            a[j][k] = v;
        }
    // Bell numbers by the triangle
    std::vector<mpz_class> bell(P + 1, 0), row{1};
    bell[0] = 1;
    for (std::size_t j = 1; j <= P; ++j) {
        std::vector<mpz_class> next{row.back()};
        for (auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bell[j] = row.front();
    }
    mpz_class qf = 1;
    for (int k = 2; k <= q; ++k) qf *= k;
    mpz_class total = 0;
    for (std::size_t j = 0; j <= P; ++j) total += mpz_class(binomial(p, int(j))) * a[j][Q] * qf * bell[P - j];
    return total;
}

}  // namespace bcoend
