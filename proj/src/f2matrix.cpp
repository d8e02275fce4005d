#include "skewcm/f2matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace skewcm {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("F2Matrix: empty dimension");
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("F2Matrix::from_rows: empty input");
    F2Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("F2Matrix::from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols_; ++j) m.row_[i].assign(j, rows[i][j] & 1);
    }
    return m;
}

void F2Matrix::check(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("F2Matrix: index out of range");
}

bool F2Matrix::at(std::size_t i, std::size_t j) const {
    check(i, j);
    return row_[i - 1].test(j - 1);
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
    check(i, j);
    row_[i - 1].assign(j - 1, v);
}

void F2Matrix::add_row(std::size_t dst, std::size_t src) {
    check(dst, 1);
    check(src, 1);
    row_[dst - 1] ^= row_[src - 1];
}

void F2Matrix::add_col(std::size_t dst, std::size_t src) {
    check(1, dst);
    check(1, src);
    for (std::size_t i = 0; i < rows_; ++i)
        if (row_[i].test(src - 1)) row_[i].flip(dst - 1);
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (row_[i].test(j)) t.row_[j].set(i);
    return t;
}

std::size_t F2Matrix::rank() const {
    // Incremental elimination. The basis is kept sorted by pivot (lowest
    // set bit) ascending, so a reduction pass never reintroduces a
    // previously cleared pivot.
    std::vector<std::pair<std::size_t, BitVec>> basis;
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVec v = row_[r];
        for (const auto& [p, b] : basis)
            if (v.test(p)) v ^= b;
        if (v.any()) {
            std::size_t p = v.first_set();
            auto it = std::lower_bound(basis.begin(), basis.end(), p,
                                       [](const auto& e, std::size_t q) { return e.first < q; });
            basis.insert(it, {p, std::move(v)});
        }
    }
    return basis.size();
}

std::string F2Matrix::row_string(std::size_t i) const {
    check(i, 1);
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j)
        if (row_[i - 1].test(j)) s[j] = '1';
    return s;
}

SpanDecision column_in_span(const F2Matrix& m, std::size_t target,
                            const std::vector<std::size_t>& excluded) {
    if (target < 1 || target > m.cols())
        throw std::out_of_range("column_in_span: target out of range");
    for (std::size_t e : excluded)
        if (e < 1 || e > m.cols()) throw std::out_of_range("column_in_span: excluded column out of range");

    std::vector<std::size_t> span_cols; // 1-based labels of spanning columns
    for (std::size_t j = 1; j <= m.cols(); ++j) {
        if (j == target) continue;
        if (std::find(excluded.begin(), excluded.end(), j) != excluded.end()) continue;
        span_cols.push_back(j);
    }
    const std::size_t k = span_cols.size();
    const std::size_t nr = m.rows();

    // Augmented system [A | b]: A = spanning columns, b = target column.
    std::vector<BitVec> rows(nr, BitVec(k + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t c = 0; c < k; ++c) rows[i].assign(c, m.at(i + 1, span_cols[c]));
        rows[i].assign(k, m.at(i + 1, target));
    }

    // Gauss-Jordan.
    std::vector<std::size_t> pivot_row(k, nr); // nr = no pivot in this column
    std::size_t next = 0;
    for (std::size_t c = 0; c < k && next < nr; ++c) {
        std::size_t pr = nr;
        for (std::size_t r = next; r < nr; ++r)
            if (rows[r].test(c)) {
                pr = r;
                break;
            }
        if (pr == nr) continue;
        std::swap(rows[next], rows[pr]);
        for (std::size_t r = 0; r < nr; ++r)
            if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
        pivot_row[c] = next;
        ++next;
    }

    SpanDecision d;
    for (std::size_t r = 0; r < nr; ++r)
        if (rows[r].first_set() == k) return d; // inconsistent: 0 = 1 row

    d.in_span = true;
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_row[c] != nr && rows[pivot_row[c]].test(k)) d.witness.push_back(span_cols[c]);
    return d;
}

} // namespace skewcm
