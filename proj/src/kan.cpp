#include "bcoend/kan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bcoend/tensor_rep.hpp"

namespace bcoend {

namespace {

Matching sorted(Matching m) {
    std::sort(m.begin(), m.end());
    return m;
}

SparseRow column_of(const RationalMatrix& M, std::size_t c) {
    SparseRow col;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        Rational x = M.get(r, c);
        if (sgn(x) != 0) col.push_back({r, x});
    }
    return col;
}

SparseRow apply_matrix(const RationalMatrix& M, const SparseRow& v) {
    std::map<std::size_t, Rational> acc;
    for (auto& [c, x] : v)
        for (std::size_t r = 0; r < M.rows(); ++r) {
            Rational y = M.get(r, c);
            if (sgn(y) != 0) acc[r] += x * y;
        }
    SparseRow out;
    for (auto& [r, x] : acc)
        if (sgn(x) != 0) out.push_back({r, x});
    return out;
}

}  // namespace

const std::vector<LabeledPartition>& StrictPartitionFunctor::basis(const FiniteSetPair& I) const {
    auto it = cache_.find(I);
    if (it == cache_.end()) it = cache_.emplace(I, enumerate_labeled_partitions(I, true)).first;
    return it->second;
}

SparseRow StrictPartitionFunctor::apply(const WalledDiagram& g, std::size_t b) const {
    if (!g.is_downward()) throw std::invalid_argument("P': diagram is not downward");
    const auto& src = basis(g.source());
    const auto& tgt = basis(g.target());
    // No labeled singleton is ever removed, so the charge is irrelevant.
    PartitionVector img = apply_P(g, PartitionVector::basis(g.source(), src.at(b)), Rational(0));
    SparseRow out;
    for (auto& [p, c] : img.terms) {
        auto it = std::lower_bound(tgt.begin(), tgt.end(), p);
        if (it == tgt.end() || !(*it == p)) {
            auto lin = std::find(tgt.begin(), tgt.end(), p);
            if (lin == tgt.end()) throw std::logic_error("P': image is not strict");
            it = lin;
        }
        out.push_back({std::size_t(it - tgt.begin()), c});
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

const TracelessFunctor::Data& TracelessFunctor::data(const FiniteSetPair& I) const {
    auto it = cache_.find(I);
    if (it != cache_.end()) return it->second;
    std::uint64_t d = tensor_dim(I, n_);
    check_size(d, kTensorLimit, force_, "tensor space");
    SparseEchelon ech{std::size_t(d)};
    for (Atom x : I.s1)
        for (Atom y : I.s2)
            for (auto& row : K_on_morphism(WalledDiagram::contraction(I, x, y), n_, force_).sparse_rows())
                if (!row.empty()) ech.add(row);
    Data out{ech.nullspace(), ech.free_columns()};
    return cache_.emplace(I, std::move(out)).first->second;
}

SparseRow TracelessFunctor::apply(const WalledDiagram& g, std::size_t b) const {
    if (!g.is_downward()) throw std::invalid_argument("K°: diagram is not downward");
    const Data& src = data(g.source());
    const Data& tgt = data(g.target());
    SparseRow img = apply_matrix(K_on_morphism(g, n_, force_), column_of(src.basis, b));
    // The target basis is the identity on its free rows, so coordinates are read off there.
    std::map<std::size_t, Rational> at(img.begin(), img.end());
    SparseRow out;
    for (std::size_t k = 0; k < tgt.free.size(); ++k) {
        auto it = at.find(tgt.free[k]);
        if (it != at.end()) out.push_back({k, it->second});
    }
    return out;
}

KanExtension kan_extend(const DownwardFunctor& A, const FiniteSetPair& S) {
    KanExtension K;
    K.S = S;
    std::size_t p = S.s1.size(), q = S.s2.size();
    for (std::uint32_t m1 = 0; m1 < (1u << p); ++m1)
        for (std::uint32_t m2 = 0; m2 < (1u << q); ++m2) {
            FiniteSetPair I, R;
            for (std::size_t i = 0; i < p; ++i) ((m1 >> i) & 1 ? I.s1 : R.s1).push_back(S.s1[i]);
            for (std::size_t j = 0; j < q; ++j) ((m2 >> j) & 1 ? I.s2 : R.s2).push_back(S.s2[j]);
            if (R.s1.size() != R.s2.size()) continue;
            auto ms = enumerate_matchings(R);
            std::size_t d = A.dim(I);
            K.summands.push_back({I, ms.size(), d});
            for (auto& m : ms)
                for (std::size_t b = 0; b < d; ++b) {
                    KanElement e{I, sorted(m), b};
                    K.index.emplace(e, K.basis.size());
                    K.basis.push_back(std::move(e));
                }
        }
    return K;
}

std::string KanExtension::to_json() const {
    std::ostringstream os;
    os << "{\"S\":\"" << S.to_string() << "\",\"dim\":" << dim() << ",\"summands\":[";
    for (std::size_t i = 0; i < summands.size(); ++i)
        os << (i ? "," : "") << "{\"I\":\"" << summands[i].I.to_string() << "\",\"matchings\":" << summands[i].matchings
           << ",\"dim\":" << summands[i].dim << "}";
    os << "]}";
    return os.str();
}

KanVector kan_act(const DownwardFunctor& A, const WalledDiagram& f, const KanElement& e, const Rational& charge) {
    WalledDiagram h = compose(f, insertion_along(e.I, f.source(), e.m), charge);
    Matching ins = sorted(h.insertions());
    FiniteSetPair J;
    const FiniteSetPair& T = f.target();
    for (Atom x : T.s1)
        if (std::none_of(ins.begin(), ins.end(), [&](auto& pr) { return pr.first == x; })) J.s1.push_back(x);
    for (Atom y : T.s2)
        if (std::none_of(ins.begin(), ins.end(), [&](auto& pr) { return pr.second == y; })) J.s2.push_back(y);
    WalledDiagram g = WalledDiagram::from_pairs(e.I, J, h.through(), h.contractions(), {}, h.dual_through(), h.coefficient());
    KanVector out;
    for (auto& [b, c] : A.apply(g, e.b)) {
        Rational& slot = out[KanElement{J, ins, b}];
        slot += c;
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

PartitionVector kan_to_P(const StrictPartitionFunctor& A, const KanVector& v, const FiniteSetPair& S) {
    PartitionVector out(S);
    for (auto& [e, c] : v) out.add(kan_assemble(e.m, A.basis(e.I).at(e.b)), c);
    return out;
}

SparseRow psi(const TracelessFunctor& A, const KanElement& e, const FiniteSetPair& S) {
    return apply_matrix(K_on_morphism(insertion_along(e.I, S, e.m), A.n()), column_of(A.basis(e.I), e.b));
}

PsiReport psi_report(const FiniteSetPair& S, int n, bool force) {
    PsiReport rep;
    rep.S = S;
    rep.n = n;
    rep.target = tensor_dim(S, n);
    check_size(rep.target, kTensorLimit, force, "tensor space");
    TracelessFunctor A(n, force);
    KanExtension K = kan_extend(A, S);
    rep.source = K.dim();
    SparseEchelon ech{std::size_t(rep.target)};
    for (const auto& e : K.basis) ech.add(psi(A, e, S));
    rep.rank = ech.rank();
    return rep;
}

std::string PsiReport::to_json() const {
    std::ostringstream os;
    os << "{\"S\":\"" << S.to_string() << "\",\"n\":" << n << ",\"source_dim\":" << source << ",\"target_dim\":" << target
       << ",\"rank\":" << rank << ",\"surjective\":" << (surjective() ? "true" : "false")
       << ",\"injective\":" << (injective() ? "true" : "false") << "}";
    return os.str();
}

}  // namespace bcoend
