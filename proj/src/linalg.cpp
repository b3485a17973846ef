#include "bcoend/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace bcoend {

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::uint64_t size_limit(std::uint64_t default_limit) {
    if (const char* env = std::getenv("BRAUER_COEND_MAX_DIM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return default_limit;
}

void check_size(std::uint64_t size, std::uint64_t default_limit, bool force, const std::string& what) {
    if (force) return;
    std::uint64_t lim = size_limit(default_limit);
    if (size > lim) {
        throw GuardrailError(what + ": size " + std::to_string(size) + " exceeds limit " + std::to_string(lim) +
                             " (use --force-size or BRAUER_COEND_MAX_DIM)");
    }
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, Storage s)
    : rows_(rows), cols_(cols), storage_(s) {
    if (s == Storage::Dense)
        dense_.assign(rows * cols, Rational(0));
    else
        sparse_.assign(rows, {});
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.sparse_[i].push_back({i, Rational(1)});
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, std::vector<SparseRow> rows) {
    RationalMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.storage_ = Storage::Sparse;
    m.sparse_ = std::move(rows);
    for (auto& r : m.sparse_) {
        std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& e : r) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](auto& e) { return sgn(e.second) == 0; });
        r = std::move(merged);
    }
    return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    RationalMatrix m(rows.size(), c, Storage::Dense);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m.dense_[i * c + j] = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<SparseRow>& cols) {
    std::vector<SparseRow> r(rows);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [i, v] : cols[j]) r[i].push_back({j, v});
    return from_rows(cols.size(), std::move(r));
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
    if (storage_ == Storage::Dense) return dense_[r * cols_ + c];
    const auto& row = sparse_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](auto& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (storage_ == Storage::Dense) {
        dense_[r * cols_ + c] = v;
        return;
    }
    auto& row = sparse_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](auto& e, std::size_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
        if (sgn(v) == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (sgn(v) != 0) {
        row.insert(it, {c, v});
    }
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
    set(r, c, get(r, c) + v);
}

SparseRow RationalMatrix::row(std::size_t r) const {
    if (storage_ == Storage::Sparse) return sparse_[r];
    SparseRow out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(dense_[r * cols_ + c]) != 0) out.push_back({c, dense_[r * cols_ + c]});
    return out;
}

std::vector<SparseRow> RationalMatrix::sparse_rows() const {
    if (storage_ == Storage::Sparse) return sparse_;
    std::vector<SparseRow> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = row(r);
    return out;
}

std::vector<SparseRow> RationalMatrix::sparse_columns() const {
    std::vector<SparseRow> out(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : row(r)) out[c].push_back({r, v});
    return out;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    if (storage_ == Storage::Sparse) {
        for (auto& r : sparse_) n += r.size();
    } else {
        for (auto& v : dense_) n += sgn(v) != 0;
    }
    return n;
}

void RationalMatrix::auto_storage() {
    double cells = double(rows_) * double(cols_);
    if (cells == 0) return;
    if (double(nonzeros()) < 0.1 * cells)
        to_sparse();
    else
        to_dense();
}

void RationalMatrix::to_sparse() {
    if (storage_ == Storage::Sparse) return;
    sparse_ = sparse_rows();
    dense_.clear();
    storage_ = Storage::Sparse;
}

void RationalMatrix::to_dense() {
    if (storage_ == Storage::Dense) return;
    dense_.assign(rows_ * cols_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : sparse_[r]) dense_[r * cols_ + c] = v;
    sparse_.clear();
    storage_ = Storage::Dense;
}

RationalMatrix RationalMatrix::transpose() const {
    std::vector<SparseRow> t(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : row(r)) t[c].push_back({r, v});
    RationalMatrix m = from_rows(rows_, std::move(t));
    if (storage_ == Storage::Dense) m.to_dense();
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    auto orows = o.sparse_rows();
    std::vector<SparseRow> out(rows_);
    std::vector<Rational> acc(o.cols_);
    std::vector<char> touched(o.cols_, 0);
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < rows_; ++r) {
        idx.clear();
        for (auto& [k, v] : row(r)) {
            for (auto& [c, w] : orows[k]) {
                if (!touched[c]) {
                    touched[c] = 1;
                    acc[c] = 0;
                    idx.push_back(c);
                }
                acc[c] += v * w;
            }
        }
        std::sort(idx.begin(), idx.end());
        for (auto c : idx) {
            if (sgn(acc[c]) != 0) out[r].push_back({c, acc[c]});
            touched[c] = 0;
        }
    }
    return from_rows(o.cols_, std::move(out));
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    std::vector<SparseRow> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = axpy_row(row(r), Rational(1), o.row(r));
    return from_rows(cols_, std::move(out));
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    if (storage_ == Storage::Dense) {
        for (auto& v : dense_) v *= s;
    } else if (sgn(s) == 0) {
        for (auto& r : sparse_) r.clear();
    } else {
        for (auto& r : sparse_)
            for (auto& e : r) e.second *= s;
    }
    return *this;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        if (row(r) != o.row(r)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    return nonzeros() == 0;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& b) const {
    if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0) throw std::invalid_argument("vstack: column mismatch");
    auto rows = sparse_rows();
    for (auto& r : b.sparse_rows()) rows.push_back(r);
    return from_rows(std::max(cols_, b.cols_), std::move(rows));
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& b) const {
    if (rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    auto rows = sparse_rows();
    auto brows = b.sparse_rows();
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : brows[r]) rows[r].push_back({c + cols_, v});
    return from_rows(cols_ + b.cols_, std::move(rows));
}

void RationalMatrix::write_matrix_market(std::ostream& os) const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto& [c, v] : row(r)) os << (r + 1) << ' ' << (c + 1) << ' ' << v.get_str() << '\n';
}

SparseRow axpy_row(const SparseRow& v, const Rational& s, const SparseRow& w, std::size_t from) {
    SparseRow out;
    out.reserve(v.size() + w.size());
    out.insert(out.end(), v.begin(), v.begin() + from);
    std::size_t i = from, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            out.push_back({w[j].first, -s * w[j].second});
            ++j;
        } else {
            Rational x = v[i].second - s * w[j].second;
            if (sgn(x) != 0) out.push_back({v[i].first, std::move(x)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseEchelon::SparseEchelon(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

SparseRow SparseEchelon::reduce(SparseRow v) const {
    std::size_t k = 0;
    while (k < v.size()) {
        long pr = pivot_of_col_[v[k].first];
        if (pr < 0) {
            ++k;
            continue;
        }
        Rational f = v[k].second;
        v = axpy_row(v, f, rows_[pr], k);
    }
    return v;
}

bool SparseEchelon::add(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational lead = row.front().second;
    if (lead != 1)
        for (auto& e : row) e.second /= lead;
    pivot_of_col_[row.front().first] = long(rows_.size());
    pivot_col_.push_back(row.front().first);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
}

void SparseEchelon::make_reduced() {
    // Rows are processed from the largest pivot column down so that each
    // row only needs the already-reduced rows below it.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_col_[a] > pivot_col_[b]; });
    for (auto idx : order) {
        SparseRow& r = rows_[idx];
        std::size_t k = 1;
        while (k < r.size()) {
            long pr = pivot_of_col_[r[k].first];
            if (pr < 0) {
                ++k;
                continue;
            }
            Rational f = r[k].second;
            r = axpy_row(r, f, rows_[pr], k);
        }
    }
}

RationalMatrix SparseEchelon::nullspace() const {
    SparseEchelon red = *this;
    red.make_reduced();
    auto fr = free_columns();
    std::vector<SparseRow> cols;
    cols.reserve(fr.size());
    // Column of free variable f: e_f - sum over pivot rows r of r[f] e_pivot(r).
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_free(cols_);
    for (std::size_t i = 0; i < red.rows_.size(); ++i)
        for (std::size_t k = 1; k < red.rows_[i].size(); ++k)
            by_free[red.rows_[i][k].first].push_back({red.pivot_col_[i], -red.rows_[i][k].second});
    for (auto f : fr) {
        SparseRow v = by_free[f];
        v.push_back({f, Rational(1)});
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        cols.push_back(std::move(v));
    }
    return RationalMatrix::from_columns(cols_, cols);
}

BareissResult bareiss(const RationalMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t r = 0; r < R; ++r) {
        auto row = m.row(r);
        Integer l = 1;
        for (auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (auto& [c, v] : row) a[r][c] = v.get_num() * (l / v.get_den());
    }
    BareissResult res;
    Integer prev = 1;
    std::size_t k = 0;
    for (std::size_t c = 0; c < C && k < R; ++c) {
        std::size_t p = k;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[k]);
        for (std::size_t i = k + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                Integer t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[k][c];
        res.pivot_cols.push_back(c);
        ++k;
    }
    a.resize(k);
    res.echelon = std::move(a);
    return res;
}

namespace {

SparseEchelon sparse_echelon_of(const RationalMatrix& m) {
    SparseEchelon e(m.cols());
    for (auto& r : m.sparse_rows()) e.add(r);
    return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    if (m.is_sparse()) return sparse_echelon_of(m).rank();
    return bareiss(m).pivot_cols.size();
}

RationalMatrix nullspace(const RationalMatrix& m) {
    if (m.is_sparse()) return sparse_echelon_of(m).nullspace();
    auto b = bareiss(m);
    // Back substitution to reduced form over the rationals.
    std::size_t C = m.cols(), k = b.pivot_cols.size();
    std::vector<std::vector<Rational>> rr(k, std::vector<Rational>(C));
    for (std::size_t i = 0; i < k; ++i) {
        Rational lead(b.echelon[i][b.pivot_cols[i]]);
        for (std::size_t j = 0; j < C; ++j) rr[i][j] = Rational(b.echelon[i][j]) / lead;
    }
    for (std::size_t i = k; i-- > 0;) {
        std::size_t pc = b.pivot_cols[i];
        for (std::size_t h = 0; h < i; ++h) {
            if (sgn(rr[h][pc]) == 0) continue;
            Rational f = rr[h][pc];
            for (std::size_t j = pc; j < C; ++j) rr[h][j] -= f * rr[i][j];
        }
    }
    std::vector<char> is_pivot(C, 0);
    for (auto c : b.pivot_cols) is_pivot[c] = 1;
    std::vector<SparseRow> cols;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(rr[i][f]) != 0) v.push_back({b.pivot_cols[i], -rr[i][f]});
        v.push_back({f, Rational(1)});
        std::sort(v.begin(), v.end(), [](auto& a, auto& b2) { return a.first < b2.first; });
        cols.push_back(std::move(v));
    }
    auto out = RationalMatrix::from_columns(C, cols);
    return out;
}

std::vector<Rational> Quotient::reduce(const SparseRow& v) const {
    auto r = relations.reduce(v);
    std::vector<Rational> out(representatives.size());
    for (auto& [c, x] : r) {
        auto it = std::lower_bound(representatives.begin(), representatives.end(), c);
        out[std::size_t(it - representatives.begin())] = x;
    }
    return out;
}

Quotient quotient_basis(std::size_t space_dim, const RationalMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != space_dim)
        throw std::invalid_argument("quotient_basis: relation width differs from space dimension");
    Quotient q;
    q.relations = SparseEchelon(space_dim);
    for (auto& r : relations.sparse_rows()) q.relations.add(r);
    q.representatives = q.relations.free_columns();
    q.dim = q.representatives.size();
    return q;
}

}  // namespace bcoend
