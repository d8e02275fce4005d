#include "skewcm/sign_matrix.hpp"

#include <algorithm>

namespace skewcm {

namespace {

std::string kind_name(SignErrorKind k) {
    switch (k) {
        case SignErrorKind::NotSquare: return "NotSquare";
        case SignErrorKind::NotSymmetric: return "NotSymmetric";
        case SignErrorKind::DiagonalNotOne: return "DiagonalNotOne";
        case SignErrorKind::EntryNotPlusMinusOne: return "EntryNotPlusMinusOne";
    }
    return "UnknownSignError";
}

} // namespace

ValidationError::ValidationError(SignErrorKind kind, int i, int j)
    : std::runtime_error(kind_name(kind) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
      kind_(kind), i_(i), j_(j) {}

SignMatrix::SignMatrix(int n) : n_(n), s_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1) {
    if (n < 1) throw std::invalid_argument("SignMatrix: size must be >= 1");
}

SignMatrix SignMatrix::all_anticommuting(int n) {
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) m.set_sign(i, j, -1);
    return m;
}

void SignMatrix::check(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("SignMatrix: index out of range");
}

int SignMatrix::sign(int i, int j) const {
    check(i, j);
    return s_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
}

void SignMatrix::set_sign(int i, int j, int s) {
    check(i, j);
    if (i == j) throw std::invalid_argument("SignMatrix: diagonal is fixed at +1");
    if (s != 1 && s != -1) throw std::invalid_argument("SignMatrix: entries are +1 or -1");
    s_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)] =
        static_cast<std::int8_t>(s);
    s_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1)] =
        static_cast<std::int8_t>(s);
}

SignMatrix validate_signs(const std::vector<std::vector<int>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n < 1) throw ValidationError(SignErrorKind::NotSquare, 1, 0);
    for (int i = 1; i <= n; ++i)
        if (static_cast<int>(raw[static_cast<std::size_t>(i - 1)].size()) != n)
            throw ValidationError(SignErrorKind::NotSquare, i,
                                  static_cast<int>(raw[static_cast<std::size_t>(i - 1)].size()));

    auto entry = [&](int i, int j) { return raw[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int v = entry(i, j);
            if (v != 1 && v != -1) throw ValidationError(SignErrorKind::EntryNotPlusMinusOne, i, j);
            if (i == j && v != 1) throw ValidationError(SignErrorKind::DiagonalNotOne, i, j);
            if (i < j && v != entry(j, i)) throw ValidationError(SignErrorKind::NotSymmetric, i, j);
        }
    }

    SignMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (entry(i, j) == -1) m.set_sign(i, j, -1);
    return m;
}

Graph graph_from_signs(const SignMatrix& eps) {
    Graph g(eps.size());
    for (int i = 1; i <= eps.size(); ++i)
        for (int j = i + 1; j <= eps.size(); ++j)
            if (eps.sign(i, j) == 1) g.add_edge(i, j);
    return g;
}

SignMatrix signs_from_graph(const Graph& g) {
    SignMatrix m(g.vertex_count());
    for (int i = 1; i <= g.vertex_count(); ++i)
        for (int j = i + 1; j <= g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) m.set_sign(i, j, -1);
    return m;
}

SignMatrix permuted(const SignMatrix& eps, const std::vector<int>& perm) {
    const int n = eps.size();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permuted: permutation length must equal n");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("permuted: not a bijection on 1..n");
        seen[static_cast<std::size_t>(p)] = true;
    }
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (eps.sign(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]) == -1)
                out.set_sign(i, j, -1);
    return out;
}

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

SignMatrix signs_from_index(int n, std::uint64_t index) {
    if (pair_count(n) > 63) throw std::invalid_argument("signs_from_index: too many pairs for a 64-bit index");
    SignMatrix m(n);
    std::uint64_t k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++k)
            if ((index >> k) & 1u) m.set_sign(i, j, -1);
    return m;
}

} // namespace skewcm
