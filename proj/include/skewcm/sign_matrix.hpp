#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewcm/graph.hpp"

namespace skewcm {

enum class SignErrorKind { NotSquare, NotSymmetric, DiagonalNotOne, EntryNotPlusMinusOne };

class ValidationError : public std::runtime_error {
public:
    ValidationError(SignErrorKind kind, int i, int j);
    SignErrorKind kind() const { return kind_; }
    int row() const { return i_; }
    int col() const { return j_; }

private:
    SignErrorKind kind_;
    int i_;
    int j_;
};

// Symmetric n x n matrix over {+1,-1} with unit diagonal. Indices are
// 1-based; symmetry and the diagonal are maintained by construction.
class SignMatrix {
public:
    explicit SignMatrix(int n); // all-commuting: every entry +1

    static SignMatrix all_commuting(int n) { return SignMatrix(n); }
    static SignMatrix all_anticommuting(int n);

    int size() const { return n_; }
    int sign(int i, int j) const; // +1 or -1
    void set_sign(int i, int j, int s); // off-diagonal only; sets (j,i) too

    bool operator==(const SignMatrix&) const = default;

private:
    void check(int i, int j) const;

    int n_ = 0;
    std::vector<std::int8_t> s_;
};

// Validates a raw integer matrix. Throws ValidationError naming the
// first offending index pair, scanning rows left to right, entry value
// before diagonal before symmetry.
SignMatrix validate_signs(const std::vector<std::vector<int>>& raw);

// Edge ij present exactly when the variables i and j commute.
Graph graph_from_signs(const SignMatrix& eps);
SignMatrix signs_from_graph(const Graph& g);

// Relabeling: entry (i,j) of the result is entry (perm[i-1], perm[j-1])
// of eps. perm must be a bijection on 1..n.
SignMatrix permuted(const SignMatrix& eps, const std::vector<int>& perm);

// Lexicographic enumeration of sign matrices: bit k of index addresses
// the k-th pair (1,2),(1,3),...,(1,n),(2,3),...; a set bit means -1.
// Index 0 is the all-commuting matrix.
std::uint64_t pair_count(int n);
SignMatrix signs_from_index(int n, std::uint64_t index);

} // namespace skewcm
