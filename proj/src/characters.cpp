#include "bcoend/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcoend {

namespace {

// Border-strip removal on beta-numbers.
long mn(std::vector<int> beta, const Partition& rho, std::size_t at) {
    if (at == rho.size()) return 1;
    int r = rho[at];
    std::set<int> occ(beta.begin(), beta.end());
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], t = b - r;
        if (t < 0 || occ.count(t)) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        auto nb = beta;
        nb[i] = t;
        long v = mn(nb, rho, at + 1);
        total += between % 2 ? -v : v;
    }
    return total;
}

int perm_sign(const std::vector<int>& perm) {
    std::vector<std::size_t> p(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p[i] = std::size_t(perm[i] - 1);
    return permutation_sign(p);
}

// True when (s,t) maps every block of x onto a block of x with the matching label.
bool is_fixed(const LabeledPartition& x, const std::vector<int>& s, const std::vector<int>& t,
              std::vector<int>& block_of) {
    for (std::size_t i = 0; i < x.parts.size(); ++i)
        for (Atom e : x.parts[i].elems) block_of[std::size_t(e - 1)] = int(i);
    for (const auto& b : x.parts) {
        int j = block_of[std::size_t(s[std::size_t(b.elems[0] - 1)] - 1)];
        const Block& c = x.parts[std::size_t(j)];
        if (c.elems.size() != b.elems.size()) return false;
        if (b.labeled() != c.labeled() || (b.labeled() && c.label != t[std::size_t(b.label - 1)])) return false;
        for (Atom e : b.elems)
            if (block_of[std::size_t(s[std::size_t(e - 1)] - 1)] != j) return false;
    }
    return true;
}

void check_character_work(int p, int q, bool force) {
    Integer work = count_labeled_partitions(p, q, true) * Integer(enumerate_partitions(p).size() * enumerate_partitions(q).size());
    check_size(work.fits_ulong_p() ? work.get_ui() : ~0ul, kCharacterLimit, force,
               "character sum over P'(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

}  // namespace

long specht_character(const Partition& lambda, const Partition& rho) {
    if (weight(lambda) != weight(rho)) throw std::invalid_argument("specht_character: weight mismatch");
    static std::map<std::pair<Partition, Partition>, long> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({lambda, rho});
        if (it != memo.end()) return it->second;
    }
    std::vector<int> beta(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) beta[i] = lambda[i] + int(lambda.size() - 1 - i);
    long v = mn(beta, rho, 0);
    std::lock_guard<std::mutex> lock(mu);
    memo[{lambda, rho}] = v;
    return v;
}

long specht_dim(const Partition& lambda) {
    return specht_character(lambda, Partition(std::size_t(weight(lambda)), 1));
}

Integer class_size(const Partition& rho) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int r : rho) mult[r]++;
    for (auto [r, m] : mult)
        for (int i = 1; i <= m; ++i) z *= r * i;
    Integer f = 1;
    for (int i = 2; i <= weight(rho); ++i) f *= i;
    return f / z;
}

std::vector<int> permutation_of_type(const Partition& rho) {
    std::vector<int> p(std::size_t(weight(rho)));
    int start = 1;
    for (int r : rho) {
        for (int i = 0; i < r; ++i) p[std::size_t(start - 1 + i)] = start + (i + 1) % r;
        start += r;
    }
    return p;
}

Rational module_character(int p, int q, const CycleTypePair& c) {
    if (weight(c.sigma) != p || weight(c.tau) != q) throw std::invalid_argument("module_character: class does not match (p,q)");
    auto s = permutation_of_type(c.sigma), t = permutation_of_type(c.tau);
    long fixed = 0;
    std::vector<int> block_of(static_cast<std::size_t>(p));
    for (auto& x : enumerate_labeled_partitions(FiniteSetPair::standard(p, q), true))
        if (is_fixed(x, s, t, block_of)) ++fixed;
    return Rational(perm_sign(s) * perm_sign(t) * fixed);
}

std::string convention_name(Convention c) {
    return c == Convention::MuDual ? "mu-dual" : "lambda-dual";
}

Convention parse_convention(const std::string& s) {
    if (s == "mu-dual") return Convention::MuDual;
    if (s == "lambda-dual") return Convention::LambdaDual;
    throw std::invalid_argument("unknown convention: " + s);
}

int stable_threshold(int degree) {
    // 2·degree ≤ n − |S| − 3 with |S| ≤ 3·degree on the support of P′.
    return 5 * degree + 3;
}

MultiplicityTable multiplicities(int p, int q, bool force) {
    MultiplicityTable t;
    t.degree = p - q;
    t.n_min = 2 * (p - q) + p + q + 3;
    auto ps = enumerate_partitions(p), qs = enumerate_partitions(q);
    check_character_work(p, q, force);
    auto basis = enumerate_labeled_partitions(FiniteSetPair::standard(p, q), true);
    std::map<std::pair<Partition, Partition>, Rational> chi;
    for (auto& a : ps)
        for (auto& b : qs) {
            auto s = permutation_of_type(a), t = permutation_of_type(b);
            long fixed = 0;
            std::vector<int> block_of(static_cast<std::size_t>(p));
            for (auto& x : basis)
                if (is_fixed(x, s, t, block_of)) ++fixed;
            chi[{a, b}] = Rational(perm_sign(s) * perm_sign(t) * fixed);
        }
    Rational order = Rational(Integer(factorial(p))) * Rational(Integer(factorial(q)));
    for (auto& l : ps)
        for (auto& m : qs) {
            Rational acc = 0;
            for (auto& a : ps)
                for (auto& b : qs) {
                    auto& x = chi[{a, b}];
                    if (sgn(x) == 0) continue;
                    acc += Rational(class_size(a) * class_size(b)) * x * specht_character(l, a) * specht_character(m, b);
                }
            acc /= order;
            if (acc.get_den() != 1 || sgn(acc) < 0)
                throw std::logic_error("multiplicities: non-integral or negative multiplicity");
            if (sgn(acc) > 0) t.entries[{l, m}] = acc.get_num().get_si();
        }
    return t;
}

MultiplicityTable convert(const MultiplicityTable& t, Convention to) {
    if (t.convention == to) return t;
    MultiplicityTable out = t;
    out.entries.clear();
    out.convention = to;
    for (auto& [b, m] : t.entries) out.entries[{b.mu, b.lambda}] += m;
    return out;
}

Integer gl_dimension(const Bipartition& b, int n) {
    if (int(b.length()) > n) return 0;
    std::vector<long> w(std::size_t(n), 0);
    for (std::size_t i = 0; i < b.lambda.size(); ++i) w[i] = b.lambda[i];
    for (std::size_t i = 0; i < b.mu.size(); ++i) w[std::size_t(n) - 1 - i] = -b.mu[i];
    Rational d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational f(w[i] - w[j] + j - i, j - i);
            f.canonicalize();
            d *= f;
        }
    return d.get_num();
}

std::size_t MultiplicityTable::total_at(int n) const {
    Integer s = 0;
    for (auto& [b, m] : entries) {
        // gl_dimension reads λ as the H content.
        Bipartition g = convention == Convention::MuDual ? b : Bipartition{b.mu, b.lambda};
        s += gl_dimension(g, n) * m;
    }
    return std::size_t(s.get_ui());
}

namespace {
std::string part_json(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}
}  // namespace

std::string MultiplicityTable::to_json() const {
    std::ostringstream os;
    os << "{\"degree\":" << degree << ",\"y\":\"" << y_monomial << "\",\"convention\":\"" << convention_name(convention)
       << "\",\"terms\":[";
    bool first = true;
    for (auto& [b, m] : entries) {
        os << (first ? "" : ",") << "{\"lambda\":" << part_json(b.lambda) << ",\"mu\":" << part_json(b.mu)
           << ",\"mult\":" << m << "}";
        first = false;
    }
    os << "],\"n_min\":" << n_min << "}";
    return os.str();
}

std::vector<MultiplicityTable> stable_table(int degree, bool with_y, Convention c, bool force) {
    if (degree < 0) throw std::invalid_argument("stable_table: negative degree");
    // y monomials: partitions of e/4 into parts i, one y_{4i} per part.
    std::vector<std::pair<int, std::string>> ys{{0, "1"}};
    if (with_y)
        for (int k = 1; 4 * k <= degree; ++k)
            for (auto& part : enumerate_partitions(k)) {
                std::map<int, int> ex;
                for (int i : part) ex[4 * i]++;
                std::string name;
                for (auto [i, e] : ex) name += (name.empty() ? "" : "*") + ("y" + std::to_string(i)) + (e > 1 ? "^" + std::to_string(e) : "");
                ys.push_back({4 * k, name});
            }
    for (auto& [e, name] : ys)
        for (int q = 0; q <= degree - e; ++q) check_character_work(degree - e + q, q, force);
    std::vector<MultiplicityTable> out;
    for (auto& [e, name] : ys) {
        int d = degree - e;
        MultiplicityTable t;
        t.degree = degree;
        t.y_monomial = name;
        t.y_degree = e;
        t.n_min = stable_threshold(degree);
        for (int q = 0; q <= d; ++q) {
            auto m = multiplicities(d + q, q, force);
            for (auto& [b, k] : m.entries) t.entries[b] += k;
        }
        out.push_back(convert(t, c));
    }
    return out;
}

std::string character_table_csv(int k) {
    auto ps = enumerate_partitions(k);
    std::ostringstream os;
    os << "lambda";
    for (auto& r : ps) os << "," << partition_to_string(r);
    os << "\n";
    for (auto& l : ps) {
        os << partition_to_string(l);
        for (auto& r : ps) os << "," << specht_character(l, r);
        os << "\n";
    }
    return os.str();
}

}  // namespace bcoend
