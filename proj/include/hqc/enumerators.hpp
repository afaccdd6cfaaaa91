#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hqc/errors.hpp"
#include "hqc/stabilizer.hpp"

namespace hqc {

// Sum_k (-1)^k (q^2-1)^(j-k) C(r,k) C(n-r,j-k), exact.
inline mpz_class krawtchouk(unsigned q, std::size_t n, std::size_t j, std::size_t r) {
    if (j > n || r > n) throw std::invalid_argument("krawtchouk: index out of range");
    mpz_class base = mpz_class(q) * q - 1;
    mpz_class sum = 0;
    for (std::size_t k = 0; k <= j; ++k) {
        if (k > r || j - k > n - r) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(j - k));
        mpz_class c1, c2;
        mpz_bin_uiui(c1.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(k));
        mpz_bin_uiui(c2.get_mpz_t(), static_cast<unsigned long>(n - r),
                     static_cast<unsigned long>(j - k));
        term *= c1 * c2;
        if (k & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

struct PairDistributions {
    std::vector<mpq_class> A, B;  // indexed by weight 0..n
};

struct WeightDistributionSet {
    std::size_t n = 0;
    mpz_class K = 0;                                    // dimension of each inner code
    std::size_t M = 0;                                  // number of inner codes
    std::vector<std::vector<PairDistributions>> pairs;  // M x M
    std::vector<mpq_class> A, B;                        // aggregate

    const PairDistributions& pair(std::size_t a, std::size_t b) const { return pairs[a][b]; }
};

// Signed weight distributions of one ordered pair of stabilizer codes.
// A_d sums the product of group signs over weight-d elements of the
// intersection of the two unsigned groups; B_d is its Krawtchouk transform
// scaled by 2^-rank.
inline PairDistributions pair_distributions(const StabilizerGroup& sa, const StabilizerGroup& sb,
                                            std::uint64_t cap = kDefaultGroupCap) {
    if (sa.n != sb.n) throw std::invalid_argument("pair_distributions: size mismatch");
    if (sa.rank() != sb.rank()) throw std::invalid_argument("pair_distributions: rank mismatch");
    std::size_t n = sa.n;
    IntersectionBasis ib = intersect(sa, sb);

    std::vector<mpz_class> asum(n + 1, 0);
    for_each_intersection_element(
        ib,
        [&](const PauliOperator& el, int sign) {
            asum[weight(el)] += sign;
            return true;
        },
        cap);

    PairDistributions out;
    out.A.resize(n + 1);
    out.B.resize(n + 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(sa.rank()));
    for (std::size_t d = 0; d <= n; ++d) {
        out.A[d] = mpq_class(asum[d]);
        mpz_class acc = 0;
        for (std::size_t r = 0; r <= n; ++r) {
            if (asum[r] == 0) continue;
            acc += asum[r] * krawtchouk(2, n, d, r);
        }
        mpq_class b(acc, scale);
        b.canonicalize();
        out.B[d] = b;
    }
    return out;
}

// Fills the aggregate rows A = M^-2 * sum_ab A^(ab), B = M^-1 * sum_ab B^(ab).
inline void aggregate_distributions(WeightDistributionSet& w) {
    std::size_t m = w.M, n = w.n;
    w.A.assign(n + 1, 0);
    w.B.assign(n + 1, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t d = 0; d <= n; ++d) {
                w.A[d] += w.pairs[a][b].A[d];
                w.B[d] += w.pairs[a][b].B[d];
            }
    mpq_class ma(static_cast<unsigned long>(m));
    for (std::size_t d = 0; d <= n; ++d) {
        w.A[d] /= ma * ma;
        w.B[d] /= ma;
    }
}

inline WeightDistributionSet all_pair_distributions(std::span<const StabilizerGroup> codes,
                                                    std::uint64_t cap = kDefaultGroupCap) {
    if (codes.empty()) throw std::invalid_argument("all_pair_distributions: no codes");
    WeightDistributionSet w;
    w.n = codes[0].n;
    w.M = codes.size();
    std::size_t r = codes[0].rank();
    mpz_ui_pow_ui(w.K.get_mpz_t(), 2, static_cast<unsigned long>(w.n - r));
    w.pairs.assign(w.M, std::vector<PairDistributions>(w.M));
    for (std::size_t a = 0; a < w.M; ++a)
        for (std::size_t b = a; b < w.M; ++b) {
            w.pairs[a][b] = pair_distributions(codes[a], codes[b], cap);
            if (b != a) w.pairs[b][a] = w.pairs[a][b];
        }
    aggregate_distributions(w);
    return w;
}

// B_j = (K / q^n) * sum_r K_j(r) A_r.
inline std::vector<mpq_class> macwilliams(const std::vector<mpq_class>& a, const mpq_class& K,
                                          unsigned q, std::size_t n) {
    if (a.size() != n + 1) throw std::invalid_argument("macwilliams: bad length");
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
    std::vector<mpq_class> b(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        mpq_class acc = 0;
        for (std::size_t r = 0; r <= n; ++r) acc += mpq_class(krawtchouk(q, n, j, r)) * a[r];
        b[j] = acc * K / mpq_class(qn);
    }
    return b;
}

// S_j = sum_r (-1)^r K_j(r) A_r; only defined for qubit alphabets.
inline std::vector<mpq_class> shadow_values(const std::vector<mpq_class>& a, unsigned q,
                                            std::size_t n) {
    if (q != 2) throw ShadowUndefinedForQ(q);
    if (a.size() != n + 1) throw std::invalid_argument("shadow_values: bad length");
    std::vector<mpq_class> s(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        mpq_class acc = 0;
        for (std::size_t r = 0; r <= n; ++r) {
            mpq_class term = mpq_class(krawtchouk(q, n, j, r)) * a[r];
            if (r & 1)
                acc -= term;
            else
                acc += term;
        }
        s[j] = acc;
    }
    return s;
}

// Smallest weight j >= 1 violating the exact detectability conditions:
// A^(aa)_j == B^(aa)_j for all a and B^(ab)_j == 0 for all a != b.
// Returns n + 1 when every weight passes.
inline std::size_t distance_from_enumerators(const WeightDistributionSet& w) {
    for (std::size_t j = 1; j <= w.n; ++j) {
        bool ok = true;
        for (std::size_t a = 0; a < w.M && ok; ++a)
            for (std::size_t b = 0; b < w.M && ok; ++b) {
                if (a == b)
                    ok = w.pairs[a][a].A[j] == w.pairs[a][a].B[j];
                else
                    ok = w.pairs[a][b].B[j] == 0;
            }
        if (!ok) return j;
    }
    return w.n + 1;
}

}  // namespace hqc
