#include "skewcm/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace skewcm {

namespace {

int parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1 : 1;
}

} // namespace

TwistedAlgebra::TwistedAlgebra(const SignMatrix& eps, Variant variant)
    : n_(eps.size()), variant_(variant) {
    if (n_ < 2) throw std::invalid_argument("TwistedAlgebra: need n >= 2");
    if (n_ > 60) throw std::invalid_argument("TwistedAlgebra: monomial masks cap n at 60");
    anti_.assign(static_cast<std::size_t>(n_ - 1), 0);
    for (int i = 2; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            const int c = -eps.sign(1, i) * eps.sign(i, j) * eps.sign(1, j);
            if (c == -1) {
                anti_[static_cast<std::size_t>(j - 2)] |= std::uint64_t{1} << (i - 2);
                anti_[static_cast<std::size_t>(i - 2)] |= std::uint64_t{1} << (j - 2);
            }
        }
}

int TwistedAlgebra::commutation_sign(int i, int j) const {
    if (i < 2 || i > n_ || j < 2 || j > n_ || i == j)
        throw std::out_of_range("commutation_sign: generators are distinct labels in 2..n");
    return (anti_[static_cast<std::size_t>(j - 2)] >> (i - 2)) & 1u ? -1 : 1;
}

TwistedAlgebra::Product TwistedAlgebra::multiply(std::uint64_t s, std::uint64_t t) const {
    const std::uint64_t all = (std::uint64_t{1} << (n_ - 1)) - 1;
    if ((s & ~all) || (t & ~all)) throw std::out_of_range("multiply: monomial outside generator range");

    int sign = 1;
    std::uint64_t acc = s;
    std::uint64_t rest = t;
    while (rest) {
        const int b = std::countr_zero(rest); // generator label b + 2
        rest &= rest - 1;
        // Move t_{b+2} left past every higher generator already in acc.
        const std::uint64_t higher = acc & anti_[static_cast<std::size_t>(b)] & ~((std::uint64_t{2} << b) - 1);
        sign *= parity_sign(higher);
        const std::uint64_t bit = std::uint64_t{1} << b;
        if (acc & bit) {
            // Squared generator: t_l^2 = 1, t_n^2 = 0 for AInfinity.
            if (variant_ == Variant::AInfinity && b == n_ - 2) return {0, 0};
            acc &= ~bit;
        } else {
            acc |= bit;
        }
    }
    return {sign, acc};
}

int TwistedAlgebra::conjugation_sign(int j, std::uint64_t s) const {
    if (j < 2 || j > n_) throw std::out_of_range("conjugation_sign: generator out of range");
    const std::uint64_t others = s & ~(std::uint64_t{1} << (j - 2));
    return parity_sign(others & anti_[static_cast<std::size_t>(j - 2)]);
}

std::uint64_t TwistedAlgebra::mask_of(const std::vector<int>& generators) {
    std::uint64_t m = 0;
    for (int g : generators) {
        if (g < 2) throw std::out_of_range("mask_of: generator labels start at 2");
        m |= std::uint64_t{1} << (g - 2);
    }
    return m;
}

std::vector<int> TwistedAlgebra::generators_of(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 2);
        mask &= mask - 1;
    }
    return out;
}

TwistedAlgebra build_c_algebra(const SignMatrix& eps, Variant variant) {
    return TwistedAlgebra(eps, variant);
}

bool associativity_selfcheck(const TwistedAlgebra& a, std::uint64_t seed) {
    const std::uint64_t dim = a.dimension();
    auto check = [&](std::uint64_t s, std::uint64_t t, std::uint64_t u) {
        auto st = a.multiply(s, t);
        auto left = st.sign == 0 ? TwistedAlgebra::Product{0, 0} : a.multiply(st.monomial, u);
        if (left.sign != 0) left.sign *= st.sign;

        auto tu = a.multiply(t, u);
        auto right = tu.sign == 0 ? TwistedAlgebra::Product{0, 0} : a.multiply(s, tu.monomial);
        if (right.sign != 0) right.sign *= tu.sign;

        if (left.sign == 0 && right.sign == 0) return true;
        return left.sign == right.sign && left.monomial == right.monomial;
    };

    if (a.n() <= 6) {
        for (std::uint64_t s = 0; s < dim; ++s)
            for (std::uint64_t t = 0; t < dim; ++t)
                for (std::uint64_t u = 0; u < dim; ++u)
                    if (!check(s, t, u)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, dim - 1);
    for (int k = 0; k < 10000; ++k)
        if (!check(pick(rng), pick(rng), pick(rng))) return false;
    return true;
}

std::vector<std::uint64_t> radical_monomials(const TwistedAlgebra& a) {
    if (a.variant() != Variant::AInfinity)
        throw std::invalid_argument("radical_monomials: defined for the AInfinity variant only");

    const std::uint64_t last = std::uint64_t{1} << (a.n() - 2);
    std::vector<std::uint64_t> rad;
    for (std::uint64_t s = 0; s < a.dimension(); ++s)
        if (s & last) rad.push_back(s);

    // Two-sided ideal: multiplying by any generator keeps t_n in the
    // monomial (or kills it), and any two members multiply to zero.
    for (std::uint64_t s : rad)
        for (int j = 2; j <= a.n(); ++j) {
            const std::uint64_t gj = std::uint64_t{1} << (j - 2);
            auto l = a.multiply(gj, s);
            auto r = a.multiply(s, gj);
            if ((l.sign != 0 && !(l.monomial & last)) || (r.sign != 0 && !(r.monomial & last)))
                throw std::logic_error("radical_monomials: span is not closed under generator multiplication");
        }
    if (rad.size() <= 4096) {
        for (std::uint64_t s : rad)
            for (std::uint64_t t : rad)
                if (a.multiply(s, t).sign != 0)
                    throw std::logic_error("radical_monomials: ideal does not square to zero");
    } else {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<std::size_t> pick(0, rad.size() - 1);
        for (int k = 0; k < 10000; ++k)
            if (a.multiply(rad[pick(rng)], rad[pick(rng)]).sign != 0)
                throw std::logic_error("radical_monomials: ideal does not square to zero");
    }
    return rad;
}

std::uint64_t block_count(const TwistedAlgebra& a) {
    // Generator range of the semisimple part: everything but t_n for
    // AInfinity (the quotient by the radical), all generators for A1.
    const int top = a.variant() == Variant::AInfinity ? a.n() - 1 : a.n();
    if (top < 2) return 1; // part is spanned by the identity alone

    const std::uint64_t part = (std::uint64_t{1} << (top - 1)) - 1;
    std::uint64_t central = 0;
    for (std::uint64_t s = 0; s <= part; ++s) {
        bool ok = true;
        for (int j = 2; j <= top && ok; ++j) ok = a.conjugation_sign(j, s) == 1;
        if (ok) ++central;
    }
    return central;
}

OracleReport verify_against_classification(const SignMatrix& eps, const Classification& cls) {
    OracleReport rep;
    const TwistedAlgebra a(eps, cls.variant);
    const int n = a.n();

    rep.dim = a.dimension();
    if (rep.dim != (std::uint64_t{1} << (n - 1)))
        rep.failures.push_back("dimension is not 2^(n-1)");

    rep.block_count = block_count(a);

    if (cls.variant == Variant::AInfinity) {
        rep.radical_dim = static_cast<std::uint64_t>(radical_monomials(a).size());
        rep.semisimple = rep.radical_dim == 0;
        if (rep.radical_dim != (std::uint64_t{1} << (n - 2)))
            rep.failures.push_back("radical dimension is not 2^(n-2)");
        if (rep.semisimple)
            rep.failures.push_back("algebra is semisimple but the variant forbids it");
        const unsigned want = cls.case_kind == CaseKind::LambdaPower
                                  ? cls.factor_exponent            // 2^(r-1) local blocks
                                  : cls.factor_exponent + 1;       // 2^r two-simple blocks
        if (rep.block_count != (std::uint64_t{1} << want))
            rep.failures.push_back("block count disagrees with the classification");
        // Uniform block size needs an even split of the part's rank.
        const int m = n - 2;
        if (((m - static_cast<int>(std::bit_width(rep.block_count)) + 1) & 1) != 0)
            rep.warnings.push_back("block-size parity is odd");
    } else {
        rep.radical_dim = 0;
        // Every monomial squares to +-1, so none spans a nilpotent ideal.
        bool invertible = true;
        for (std::uint64_t s = 0; s < a.dimension() && invertible; ++s)
            invertible = a.multiply(s, s).sign != 0;
        rep.semisimple = invertible;
        if (!invertible) rep.failures.push_back("a monomial fails to be invertible in the A1 variant");
        if (rep.block_count != (std::uint64_t{1} << cls.factor_exponent))
            rep.failures.push_back("block count disagrees with 2^r");
        const int m = n - 1;
        if (((m - static_cast<int>(std::bit_width(rep.block_count)) + 1) & 1) != 0)
            rep.warnings.push_back("block-size parity is odd");
    }

    // Switching eps at any vertex must not move the block count.
    const Graph g = graph_from_signs(eps);
    for (int v = 1; v <= n; ++v) {
        const TwistedAlgebra b(signs_from_graph(switched(g, v)), cls.variant);
        if (block_count(b) != rep.block_count) {
            rep.failures.push_back("block count changed under switching at vertex " + std::to_string(v));
            break;
        }
    }

    rep.consistent = rep.failures.empty();
    return rep;
}

} // namespace skewcm
