#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewcm/bitvec.hpp"

namespace skewcm {

// Dense matrix over the two-element field with bit-packed rows.
// Row and column indices on this surface are 1-based.
class F2Matrix {
public:
    F2Matrix(std::size_t rows, std::size_t cols);

    // Entries are reduced mod 2.
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool v);

    // Elementary operations, dst += src over the field.
    void add_row(std::size_t dst, std::size_t src);
    void add_col(std::size_t dst, std::size_t src);

    F2Matrix transposed() const;

    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }

    // Debug rendering: row i as a string of '0'/'1'.
    std::string row_string(std::size_t i) const;

    bool operator==(const F2Matrix&) const = default;

private:
    void check(std::size_t i, std::size_t j) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> row_;
};

// Whether column `target` is a sum of a subset of the remaining columns
// (those not in `excluded`; `target` is always excluded from the spanning
// set). `witness` is the column set of one solution, chosen by pinning all
// free variables to zero, listed ascending.
struct SpanDecision {
    bool in_span = false;
    std::vector<std::size_t> witness;
};
SpanDecision column_in_span(const F2Matrix& m, std::size_t target,
                            const std::vector<std::size_t>& excluded = {});

} // namespace skewcm
