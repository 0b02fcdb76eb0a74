#pragma once

// Exact elimination over the rationals and over prime fields.  Rows are
// sparse (sorted column/value pairs); pivot selection is the first nonzero
// entry in row-major order, so results are deterministic.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nka/errors.hpp"
#include "nka/rational.hpp"

namespace nka::linalg {

struct RationalField {
    using Value = Rational;
    Value zero() const { return Rational(0); }
    Value one() const { return Rational(1); }
    bool is_zero(const Value& a) const { return a == 0; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    Value inv(const Value& a) const {
        if (a == 0) throw precondition_error("division by zero");
        return 1 / a;
    }
};

struct PrimeField {
    long p;
    using Value = long;
    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    bool is_zero(const Value& a) const { return a % p == 0; }
    Value norm(long a) const {
        long r = a % p;
        return r < 0 ? r + p : r;
    }
    Value add(Value a, Value b) const { return norm(a + b); }
    Value sub(Value a, Value b) const { return norm(a - b); }
    Value mul(Value a, Value b) const { return norm(a * b); }
    Value neg(Value a) const { return norm(-a); }
    Value inv(Value a) const {
        a = norm(a);
        if (a == 0) throw precondition_error("division by zero mod p");
        long t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return norm(t);
    }
};

template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Value>>;  // sorted by column

// r -> r + c * s
template <class F>
SparseRow<F> axpy(const F& f, const SparseRow<F>& r, const typename F::Value& c,
                  const SparseRow<F>& s) {
    SparseRow<F> out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || s[j].first < r[i].first) {
            auto v = f.mul(c, s[j].second);
            if (!f.is_zero(v)) out.emplace_back(s[j].first, v);
            ++j;
        } else {
            auto v = f.add(r[i].second, f.mul(c, s[j].second));
            if (!f.is_zero(v)) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental reduced row echelon form.  Pivot rows are kept fully reduced
// against each other, keyed by pivot column.
template <class F>
class Echelon {
public:
    Echelon(F field, int ncols) : field_(field), ncols_(ncols) {}

    // Reduce `row` against the current pivots without inserting it.
    SparseRow<F> reduce(SparseRow<F> row) const {
        std::size_t k = 0;
        while (k < row.size()) {
            auto it = pivots_.find(row[k].first);
            if (it == pivots_.end()) {
                ++k;
                continue;
            }
            auto coeff = field_.neg(row[k].second);
            row = axpy(field_, row, coeff, it->second);
            // entries before position k are untouched (pivot rows start at their pivot)
        }
        return row;
    }

    // Returns true if the row enlarged the span (a new pivot was created).
    bool add_row(SparseRow<F> row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        auto lead = field_.inv(row.front().second);
        for (auto& [c, v] : row) v = field_.mul(v, lead);
        int pivot_col = row.front().first;
        for (auto& [col, prow] : pivots_) {
            (void)col;
            auto it_entry = std::lower_bound(
                prow.begin(), prow.end(), pivot_col,
                [](const auto& e, int c) { return e.first < c; });
            if (it_entry != prow.end() && it_entry->first == pivot_col)
                prow = axpy(field_, prow, field_.neg(it_entry->second), row);
        }
        pivots_.emplace(pivot_col, std::move(row));
        return true;
    }

    long rank() const { return static_cast<long>(pivots_.size()); }
    int cols() const { return ncols_; }
    const std::map<int, SparseRow<F>>& pivots() const { return pivots_; }
    const F& field() const { return field_; }

private:
    F field_;
    int ncols_;
    std::map<int, SparseRow<F>> pivots_;
};

// Fully reduced pivot rows pay off on the coboundary matrices: off-pivot
// entries survive only in the free columns, so pivot rows stay short when
// the nullity is small.
template <class F>
long rank_of(const F& field, const std::vector<SparseRow<F>>& rows, int ncols) {
    Echelon<F> e(field, ncols);
    for (const auto& r : rows) e.add_row(r);
    return e.rank();
}

// Basis of { x : A x = 0 } where the rows of A are given.  Dense vectors out,
// one per free column, in increasing column order.
template <class F>
std::vector<std::vector<typename F::Value>> kernel_basis(const F& field,
                                                         const std::vector<SparseRow<F>>& rows,
                                                         int ncols) {
    Echelon<F> e(field, ncols);
    for (const auto& r : rows) e.add_row(r);
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [col, prow] : e.pivots()) {
        (void)prow;
        is_pivot[col] = true;
    }
    std::vector<std::vector<typename F::Value>> basis;
    for (int j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<typename F::Value> x(ncols, field.zero());
        x[j] = field.one();
        for (const auto& [col, prow] : e.pivots()) {
            for (const auto& [c, v] : prow) {
                if (c == j) {
                    x[col] = field.neg(v);
                    break;
                }
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class F>
SparseRow<F> to_sparse(const F& field, const std::vector<typename F::Value>& dense) {
    SparseRow<F> row;
    for (int j = 0; j < static_cast<int>(dense.size()); ++j)
        if (!field.is_zero(dense[j])) row.emplace_back(j, dense[j]);
    return row;
}

// Solve target = sum_i x_i * rows[i] by dense elimination; the systems this
// serves (cohomology class coordinates) are small.
template <class F>
std::optional<std::vector<typename F::Value>> coordinates_in_span(
    const F& field, const std::vector<std::vector<typename F::Value>>& rows,
    const std::vector<typename F::Value>& target) {
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(target.size());
    // Augmented columns track the combination.
    std::vector<std::vector<typename F::Value>> work;
    for (int i = 0; i < n; ++i) {
        auto row = rows[i];
        row.resize(m + n, field.zero());
        row[m + i] = field.one();
        work.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    int next_row = 0;
    for (int col = 0; col < m && next_row < n; ++col) {
        int sel = -1;
        for (int r = next_row; r < n; ++r)
            if (!field.is_zero(work[r][col])) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(work[sel], work[next_row]);
        auto lead = field.inv(work[next_row][col]);
        for (auto& v : work[next_row]) v = field.mul(v, lead);
        for (int r = 0; r < n; ++r) {
            if (r == next_row || field.is_zero(work[r][col])) continue;
            auto c = field.neg(work[r][col]);
            for (int j = 0; j < m + n; ++j)
                work[r][j] = field.add(work[r][j], field.mul(c, work[next_row][j]));
        }
        pivot_col.push_back(col);
        ++next_row;
    }
    // Reduce the target against the pivot rows.
    auto t = target;
    t.resize(m + n, field.zero());
    for (int r = 0; r < next_row; ++r) {
        int col = pivot_col[r];
        if (field.is_zero(t[col])) continue;
        auto c = field.neg(t[col]);
        for (int j = 0; j < m + n; ++j) t[j] = field.add(t[j], field.mul(c, work[r][j]));
    }
    for (int j = 0; j < m; ++j)
        if (!field.is_zero(t[j])) return std::nullopt;
    std::vector<typename F::Value> x(n, field.zero());
    for (int i = 0; i < n; ++i) x[i] = field.neg(t[m + i]);
    return x;
}

}  // namespace nka::linalg
