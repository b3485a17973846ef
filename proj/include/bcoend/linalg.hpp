#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcoend {

using Rational = mpq_class;
using Integer = mpz_class;

// Sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

std::string to_string(const Rational& q);

// Thrown when a computation would exceed a configured size limit.
struct GuardrailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Size limit for a guarded computation. BRAUER_COEND_MAX_DIM overrides the default.
std::uint64_t size_limit(std::uint64_t default_limit);
void check_size(std::uint64_t size, std::uint64_t default_limit, bool force, const std::string& what);

class RationalMatrix {
public:
    enum class Storage { Dense, Sparse };

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols, Storage s = Storage::Sparse);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(std::size_t cols, std::vector<SparseRow> rows);
    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
    // Column vectors stacked side by side.
    static RationalMatrix from_columns(std::size_t rows, const std::vector<SparseRow>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Storage storage() const { return storage_; }
    bool is_sparse() const { return storage_ == Storage::Sparse; }

    Rational get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add_to(std::size_t r, std::size_t c, const Rational& v);

    SparseRow row(std::size_t r) const;
    std::vector<SparseRow> sparse_rows() const;
    std::vector<SparseRow> sparse_columns() const;
    std::size_t nonzeros() const;

    // Switches to sparse storage below 10% density, dense otherwise.
    void auto_storage();
    void to_sparse();
    void to_dense();

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix& operator*=(const Rational& s);
    bool operator==(const RationalMatrix& o) const;
    bool is_zero() const;

    // Rows of b appended below this matrix.
    RationalMatrix vstack(const RationalMatrix& b) const;
    RationalMatrix hstack(const RationalMatrix& b) const;

    // `row col value` triples, 1-based, one per line.
    void write_matrix_market(std::ostream& os) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Storage storage_ = Storage::Sparse;
    std::vector<Rational> dense_;
    std::vector<SparseRow> sparse_;
};

// Incremental row echelon form over the rationals. Each stored row is
// normalised so its leading entry is 1 and that column is its pivot.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols = 0);

    // Returns true when the row was independent of the rows added so far.
    bool add(SparseRow row);
    // Eliminates every pivot column from v.
    SparseRow reduce(SparseRow v) const;
    bool in_span(const SparseRow& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_pivot(std::size_t c) const { return pivot_of_col_[c] >= 0; }
    std::vector<std::size_t> free_columns() const;

    // Back substitution, after which the stored rows are in reduced form.
    void make_reduced();
    // Columns of the result span the null space of the added rows.
    RationalMatrix nullspace() const;

private:
    std::size_t cols_;
    std::vector<SparseRow> rows_;
    std::vector<long> pivot_of_col_;
    std::vector<std::size_t> pivot_col_;
};

// Row v - s*w on sorted sparse rows, starting the merge at position `from` of v.
SparseRow axpy_row(const SparseRow& v, const Rational& s, const SparseRow& w, std::size_t from = 0);

// Fraction-free elimination on an integer matrix (rows are scaled to clear
// denominators). Pivot: first nonzero entry in column order. Returns the
// echelon form and the pivot columns.
struct BareissResult {
    std::vector<std::vector<Integer>> echelon;
    std::vector<std::size_t> pivot_cols;
};
BareissResult bareiss(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
RationalMatrix nullspace(const RationalMatrix& m);

struct Quotient {
    std::size_t dim = 0;
    std::vector<std::size_t> representatives;  // non-pivot columns
    SparseEchelon relations;
    // Coordinates of v in the quotient, indexed like `representatives`.
    std::vector<Rational> reduce(const SparseRow& v) const;
};
Quotient quotient_basis(std::size_t space_dim, const RationalMatrix& relations);

}  // namespace bcoend
