#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewcm/classify.hpp"
#include "skewcm/sign_matrix.hpp"

namespace skewcm {

// Sign-twisted monomial algebra on generators t_2..t_n with
// t_i t_j = c(i,j) t_j t_i, c(i,j) = -eps(1,i) eps(i,j) eps(1,j),
// t_l^2 = 1 for l < n, and t_n^2 = 0 (AInfinity) or 1 (A1). Basis
// monomials are subsets of {2..n}, encoded as bitmasks with bit (i-2)
// standing for generator i; the structure constants live in {0, +1, -1},
// so every question below is pure sign combinatorics.
class TwistedAlgebra {
public:
    TwistedAlgebra(const SignMatrix& eps, Variant variant);

    int n() const { return n_; }
    Variant variant() const { return variant_; }
    int generator_count() const { return n_ - 1; }
    std::uint64_t dimension() const { return std::uint64_t{1} << (n_ - 1); }

    int commutation_sign(int i, int j) const; // c(i,j), i != j in 2..n

    struct Product {
        int sign = 0; // 0 means the zero element
        std::uint64_t monomial = 0;
    };
    Product multiply(std::uint64_t s, std::uint64_t t) const;

    // Sign of t_j t_S t_j^{-1} relative to t_S (generator j skipped
    // when it lies in S).
    int conjugation_sign(int j, std::uint64_t s) const;

    static std::uint64_t mask_of(const std::vector<int>& generators);
    static std::vector<int> generators_of(std::uint64_t mask);

private:
    int n_;
    Variant variant_;
    std::vector<std::uint64_t> anti_; // anti_[j-2]: bit (i-2) set iff c(i,j) = -1
};

TwistedAlgebra build_c_algebra(const SignMatrix& eps, Variant variant);

// (t_S t_T) t_U == t_S (t_T t_U), exhaustive over all triples when
// n <= 6, on sampled triples otherwise.
bool associativity_selfcheck(const TwistedAlgebra& a, std::uint64_t seed = 1);

// AInfinity only: the monomials containing t_n. Asserts the span is a
// two-sided ideal with square zero (pairwise products sampled once the
// ideal outgrows 4096 monomials).
std::vector<std::uint64_t> radical_monomials(const TwistedAlgebra& a);

// Number of matrix blocks of the split semisimple quotient: monomials
// over the invertible generator range that conjugation by every such
// generator fixes.
std::uint64_t block_count(const TwistedAlgebra& a);

struct OracleReport {
    std::uint64_t dim = 0;
    std::uint64_t radical_dim = 0;
    std::uint64_t block_count = 0;
    bool semisimple = false;
    bool consistent = false;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
};

// Cross-checks the algebra against a classification of the same eps:
// dimension 2^(n-1); AInfinity: radical dimension 2^(n-2) > 0 and
// blocks 2^(r-1) / 2^(r+1) for the Lambda / Gamma cases; A1: all
// monomials invertible and blocks 2^r; block count invariant under
// switching at every vertex.
OracleReport verify_against_classification(const SignMatrix& eps, const Classification& cls);

} // namespace skewcm
