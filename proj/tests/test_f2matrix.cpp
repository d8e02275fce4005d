#include <doctest.h>

#include <random>

#include "skewcm/f2matrix.hpp"
#include "test_helpers.hpp"

using namespace skewcm;
using namespace skewcm::testing;

namespace {

F2Matrix bordered_complete(int n) {
    // (n+1)x(n+1), zero diagonal, ones elsewhere.
    F2Matrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
    for (std::size_t i = 1; i <= m.rows(); ++i)
        for (std::size_t j = 1; j <= m.cols(); ++j)
            if (i != j) m.set(i, j, true);
    return m;
}

F2Matrix example_delta() {
    return F2Matrix::from_rows({{0, 1, 0, 1, 1},
                                {1, 0, 1, 1, 1},
                                {0, 1, 0, 0, 1},
                                {1, 1, 0, 0, 1},
                                {1, 1, 1, 1, 0}});
}

} // namespace

TEST_CASE("rank golden values") {
    CHECK(F2Matrix(3, 3).rank() == 0);
    CHECK(F2Matrix::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}).rank() == 2);
    CHECK(example_delta().rank() == 4);
}

TEST_CASE("nullity golden values") {
    CHECK(example_delta().nullity() == 1);
    CHECK(bordered_complete(3).nullity() == 0);
    CHECK(bordered_complete(4).nullity() == 1);
}

TEST_CASE("column_in_span golden values") {
    SUBCASE("bordered complete graph on 4 vertices") {
        const auto d = column_in_span(bordered_complete(4), 4);
        CHECK(d.in_span);
        CHECK(d.witness == std::vector<std::size_t>{1, 2, 3, 5});
    }
    SUBCASE("worked 4x4 example") {
        CHECK_FALSE(column_in_span(example_delta(), 4).in_span);
    }
    SUBCASE("two identical columns") {
        const auto m = F2Matrix::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
        const auto d = column_in_span(m, 2);
        CHECK(d.in_span);
        CHECK(d.witness == std::vector<std::size_t>{1});
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS((void)column_in_span(example_delta(), 6), std::out_of_range);
    }
}

TEST_CASE("witness sums to the target column") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng() % 8, cols = 2 + rng() % 8;
        const F2Matrix m = random_f2(rows, cols, rng);
        const std::size_t target = 1 + rng() % cols;
        const auto d = column_in_span(m, target);
        if (!d.in_span) continue;
        for (std::size_t i = 1; i <= rows; ++i) {
            bool sum = false;
            for (std::size_t j : d.witness) sum ^= m.at(i, j);
            CHECK(sum == m.at(i, target));
        }
    }
}

TEST_CASE("rank equals transpose rank and matches the span oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        const F2Matrix m = random_f2(rows, cols, rng);
        const std::size_t r = m.rank();
        CHECK(r == m.transposed().rank());
        CHECK(r + m.nullity() == cols);
        CHECK(r == rank_by_span(m));
    }
}

TEST_CASE("column_in_span agrees with the rank formulation and the subset oracle") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng() % 6, cols = 2 + rng() % 6;
        const F2Matrix m = random_f2(rows, cols, rng);
        const std::size_t target = 1 + rng() % cols;

        // target in span of others iff deleting it keeps the rank.
        F2Matrix without(rows, cols - 1);
        for (std::size_t i = 1; i <= rows; ++i) {
            std::size_t jj = 1;
            for (std::size_t j = 1; j <= cols; ++j) {
                if (j == target) continue;
                without.set(i, jj++, m.at(i, j));
            }
        }
        const bool by_rank = without.rank() == m.rank();
        const bool direct = column_in_span(m, target).in_span;
        CHECK(direct == by_rank);
        CHECK(direct == in_span_by_enumeration(m, target));
    }
}

TEST_CASE("rank is invariant under invertible row and column operations") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
        F2Matrix m = random_f2(rows, cols, rng);
        const std::size_t r = m.rank();
        for (int k = 0; k < 10; ++k) {
            const std::size_t a = 1 + rng() % rows, b = 1 + rng() % rows;
            if (a != b) m.add_row(a, b);
            const std::size_t c = 1 + rng() % cols, d = 1 + rng() % cols;
            if (c != d) m.add_col(c, d);
        }
        CHECK(m.rank() == r);
    }
}

TEST_CASE("debug rendering") {
    const auto m = F2Matrix::from_rows({{0, 1, 1}, {1, 0, 0}});
    CHECK(m.row_string(1) == "011");
    CHECK(m.row_string(2) == "100");
}
