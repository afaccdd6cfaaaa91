#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hqc/enumerators.hpp"
#include "hqc/errors.hpp"
#include "hqc/gaussian.hpp"
#include "hqc/pauli.hpp"
#include "hqc/stabilizer.hpp"

namespace hqc {

inline constexpr std::size_t kDenseDefaultLimit = 12;
inline constexpr std::size_t kDetectableDimLimit = 4;

// mpz_class lacks long long constructors on some libgmp builds.
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

// Exact complex integer a + b*i.
struct GaussianInt {
    long long re = 0, im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt times_i_pow(unsigned k) const {
        switch (k & 3) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }
    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const GaussianInt&) const = default;
};

namespace detail {

// Basis-state action of a Pauli: qubit p maps to index bit n-1-p.
struct DenseAction {
    std::uint32_t xmask = 0, zmask = 0;
    std::uint8_t phase = 0;
};

inline DenseAction dense_action(const PauliOperator& p) {
    if (p.n > 31) throw DenseLimitExceeded(p.n, 31);
    DenseAction a;
    for (std::size_t q = 0; q < p.n; ++q) {
        std::uint32_t bit = 1u << (p.n - 1 - q);
        if (p.x.get(q)) a.xmask |= bit;
        if (p.z.get(q)) a.zmask |= bit;
    }
    a.phase = p.phase;
    return a;
}

inline unsigned action_exponent(const DenseAction& a, std::uint32_t j) {
    return (a.phase + 2u * (std::popcount(a.zmask & j) & 1u)) & 3u;
}

}  // namespace detail

// Dense projector (1/2^r) * sum of signed group elements.
inline GaussianRationalMatrix projector(const StabilizerGroup& s,
                                        std::size_t limit = kDenseDefaultLimit) {
    if (s.n > limit) throw DenseLimitExceeded(s.n, limit);
    std::size_t dim = std::size_t{1} << s.n;
    GaussianRationalMatrix m(dim, dim);
    enumerate_group(s, [&](const PauliOperator& g) {
        detail::DenseAction a = detail::dense_action(g);
        for (std::uint32_t j = 0; j < dim; ++j)
            m.at(j ^ a.xmask, j) += gaussian_unit(detail::action_exponent(a, j));
        return true;
    });
    mpq_class inv(1, mpz_class(1) << s.rank());
    inv.canonicalize();
    m.scale(GaussianRational(inv));
    return m;
}

struct SparseEntry {
    std::uint32_t index;
    GaussianInt value;
};
using SparseVec = std::vector<SparseEntry>;

// Orthogonal unnormalized basis of a stabilizer code: each vector is
// 2^r * P |seed>, every self inner product equals 2^norm_exp.
struct CodeBasis {
    std::size_t n = 0;
    int norm_exp = 0;
    std::vector<SparseVec> vecs;

    std::size_t dim() const { return vecs.size(); }
};

// <u|v> with exact Gaussian integers.
inline GaussianInt sparse_inner(const SparseVec& u, const SparseVec& v) {
    GaussianInt acc;
    auto iu = u.begin();
    for (const auto& e : v) {
        while (iu != u.end() && iu->index < e.index) ++iu;
        if (iu == u.end()) break;
        if (iu->index == e.index) acc += iu->value.conj() * e.value;
    }
    return acc;
}

// <u|E|v> for a Pauli action.
inline GaussianInt sparse_inner_action(const SparseVec& u, const detail::DenseAction& a,
                                       const SparseVec& v) {
    GaussianInt acc;
    for (const auto& e : v) {
        std::uint32_t t = e.index ^ a.xmask;
        auto it = std::lower_bound(u.begin(), u.end(), t,
                                   [](const SparseEntry& s, std::uint32_t x) { return s.index < x; });
        if (it == u.end() || it->index != t) continue;
        acc += it->value.conj() * e.value.times_i_pow(detail::action_exponent(a, e.index));
    }
    return acc;
}

inline CodeBasis code_basis(const StabilizerGroup& s, std::size_t limit = kDenseDefaultLimit) {
    if (s.n > limit) throw DenseLimitExceeded(s.n, limit);
    std::size_t dim = std::size_t{1} << s.n;
    std::size_t want = std::size_t{1} << (s.n - s.rank());

    std::vector<detail::DenseAction> actions;
    enumerate_group(s, [&](const PauliOperator& g) {
        actions.push_back(detail::dense_action(g));
        return true;
    });

    CodeBasis basis;
    basis.n = s.n;
    std::vector<GaussianInt> temp(dim);
    long long norm2 = -1;
    for (std::uint32_t seed = 0; seed < dim && basis.vecs.size() < want; ++seed) {
        std::fill(temp.begin(), temp.end(), GaussianInt{});
        for (const auto& a : actions)
            temp[seed ^ a.xmask] += GaussianInt{1, 0}.times_i_pow(detail::action_exponent(a, seed));
        SparseVec w;
        for (std::uint32_t t = 0; t < dim; ++t)
            if (!temp[t].is_zero()) w.push_back({t, temp[t]});
        if (w.empty()) continue;
        bool overlaps = false;
        for (const auto& v : basis.vecs)
            if (!sparse_inner(v, w).is_zero()) {
                overlaps = true;
                break;
            }
        if (overlaps) continue;
        GaussianInt self = sparse_inner(w, w);
        if (self.im != 0 || self.re <= 0) throw std::logic_error("code_basis: bad self product");
        if (norm2 < 0) {
            norm2 = self.re;
            if ((norm2 & (norm2 - 1)) != 0) throw std::logic_error("code_basis: norm not a power of two");
        } else if (self.re != norm2) {
            throw std::logic_error("code_basis: non-uniform norms");
        }
        basis.vecs.push_back(std::move(w));
    }
    if (basis.vecs.size() != want) throw std::logic_error("code_basis: incomplete basis");
    basis.norm_exp = norm2 <= 0 ? 0 : std::countr_zero(static_cast<unsigned long long>(norm2));
    return basis;
}

struct KLDetectable {
    std::vector<GaussianRational> lambda;  // one scalar per inner code
};
struct KLOffDiagonal {
    std::size_t a, b;
};
struct KLNonScalar {
    std::size_t a;
};
using KLResult = std::variant<KLDetectable, KLOffDiagonal, KLNonScalar>;

inline bool kl_is_detectable(const KLResult& r) { return std::holds_alternative<KLDetectable>(r); }

// Exact Knill-Laflamme check P_b E P_a = lambda_a delta_ab P_a on code bases.
inline KLResult kl_check(std::span<const CodeBasis> bases, const PauliOperator& e) {
    detail::DenseAction act = detail::dense_action(e);
    std::size_t m = bases.size();
    std::vector<GaussianRational> lambda(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const CodeBasis& ca = bases[a];
            const CodeBasis& cb = bases[b];
            if (a == b) {
                std::size_t k = ca.dim();
                GaussianInt diag;
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) {
                        GaussianInt g = sparse_inner_action(ca.vecs[i], act, cb.vecs[j]);
                        if (i == j) {
                            if (i == 0)
                                diag = g;
                            else if (!(g == diag))
                                return KLNonScalar{a};
                        } else if (!g.is_zero()) {
                            return KLNonScalar{a};
                        }
                    }
                mpq_class scale(1, mpz_class(1) << ca.norm_exp);
                scale.canonicalize();
                lambda[a] = GaussianRational(mpq_class(to_mpz(diag.re)) * scale,
                                             mpq_class(to_mpz(diag.im)) * scale);
            } else {
                for (const auto& u : cb.vecs)
                    for (const auto& v : ca.vecs)
                        if (!sparse_inner_action(u, act, v).is_zero()) return KLOffDiagonal{a, b};
            }
        }
    }
    return KLDetectable{std::move(lambda)};
}

// Same check through full projector matrices.
inline KLResult kl_check(std::span<const GaussianRationalMatrix> projectors,
                         const PauliOperator& e) {
    detail::DenseAction act = detail::dense_action(e);
    std::size_t dim = std::size_t{1} << e.n;
    GaussianRationalMatrix em(dim, dim);
    for (std::uint32_t j = 0; j < dim; ++j)
        em.at(j ^ act.xmask, j) = gaussian_unit(detail::action_exponent(act, j));

    std::size_t m = projectors.size();
    std::vector<GaussianRational> lambda(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            GaussianRationalMatrix prod = projectors[b] * em * projectors[a];
            if (a == b) {
                GaussianRational tr = projectors[a].trace();
                GaussianRational lam = prod.trace() * tr.inverse();
                GaussianRationalMatrix expect = projectors[a];
                expect.scale(lam);
                if (!(prod == expect)) return KLNonScalar{a};
                lambda[a] = lam;
            } else if (!prod.is_zero()) {
                return KLOffDiagonal{a, b};
            }
        }
    }
    return KLDetectable{std::move(lambda)};
}

// Exact signed weight distributions straight from code bases:
// A^(ab)_d = K^-2 sum_E Tr(E P_a) Tr(E P_b), B^(ab)_d = K^-1 sum_E Tr(E P_a E P_b).
inline WeightDistributionSet weight_distributions_dense(std::span<const CodeBasis> bases) {
    if (bases.empty()) throw std::invalid_argument("weight_distributions_dense: no codes");
    std::size_t n = bases[0].n;
    std::size_t m = bases.size();
    std::size_t k = bases[0].dim();
    for (const auto& b : bases)
        if (b.n != n || b.dim() != k)
            throw std::invalid_argument("weight_distributions_dense: mismatched codes");

    WeightDistributionSet w;
    w.n = n;
    w.M = m;
    w.K = k;
    w.pairs.assign(m, std::vector<PairDistributions>(m));
    for (auto& row : w.pairs)
        for (auto& p : row) {
            p.A.assign(n + 1, 0);
            p.B.assign(n + 1, 0);
        }

    std::vector<std::vector<mpz_class>> sa(m, std::vector<mpz_class>(m));
    std::vector<std::vector<mpz_class>> sb(m, std::vector<mpz_class>(m));
    std::vector<GaussianInt> tr(m);
    for (std::size_t d = 0; d <= n; ++d) {
        for (auto& row : sa)
            for (auto& v : row) v = 0;
        for (auto& row : sb)
            for (auto& v : row) v = 0;
        for_each_pauli(n, d, [&](const PauliOperator& e) {
            detail::DenseAction act = detail::dense_action(e);
            for (std::size_t a = 0; a < m; ++a) {
                tr[a] = GaussianInt{};
                for (std::size_t i = 0; i < k; ++i)
                    tr[a] += sparse_inner_action(bases[a].vecs[i], act, bases[a].vecs[i]);
            }
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    GaussianInt p = tr[a] * tr[b].conj();
                    sa[a][b] += to_mpz(p.re);
                    mpz_class b2 = 0;
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < k; ++j) {
                            GaussianInt g =
                                sparse_inner_action(bases[b].vecs[j], act, bases[a].vecs[i]);
                            b2 += to_mpz(g.re) * to_mpz(g.re) + to_mpz(g.im) * to_mpz(g.im);
                        }
                    sb[a][b] += b2;
                }
            return true;
        });
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                mpz_class norm = mpz_class(1) << (bases[a].norm_exp + bases[b].norm_exp);
                mpq_class av(sa[a][b], norm * (mpz_class(k) * k));
                av.canonicalize();
                mpq_class bv(sb[a][b], norm * k);
                bv.canonicalize();
                w.pairs[a][b].A[d] = av;
                w.pairs[a][b].B[d] = bv;
            }
    }
    aggregate_distributions(w);
    return w;
}

// Matrix-route variant over explicit projectors, for small sizes.
inline WeightDistributionSet weight_distributions_dense(
    std::span<const GaussianRationalMatrix> projectors, std::size_t n, const mpz_class& dim_k) {
    if (projectors.empty()) throw std::invalid_argument("weight_distributions_dense: no codes");
    std::size_t m = projectors.size();
    WeightDistributionSet w;
    w.n = n;
    w.M = m;
    w.K = dim_k;
    w.pairs.assign(m, std::vector<PairDistributions>(m));
    for (auto& row : w.pairs)
        for (auto& p : row) {
            p.A.assign(n + 1, 0);
            p.B.assign(n + 1, 0);
        }
    mpq_class k2(dim_k * dim_k), k1(dim_k);
    for (std::size_t d = 0; d <= n; ++d) {
        for_each_pauli(n, d, [&](const PauliOperator& e) {
            detail::DenseAction act = detail::dense_action(e);
            std::size_t dim = std::size_t{1} << n;
            GaussianRationalMatrix em(dim, dim);
            for (std::uint32_t j = 0; j < dim; ++j)
                em.at(j ^ act.xmask, j) = gaussian_unit(detail::action_exponent(act, j));
            std::vector<GaussianRational> tr(m);
            std::vector<GaussianRationalMatrix> ep(m);
            for (std::size_t a = 0; a < m; ++a) {
                ep[a] = em * projectors[a];
                tr[a] = ep[a].trace();
            }
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    GaussianRational av = tr[a] * tr[b].conj();
                    GaussianRational bv = (ep[a] * ep[b]).trace();
                    w.pairs[a][b].A[d] += av.re / k2;
                    w.pairs[a][b].B[d] += bv.re / k1;
                }
            return true;
        });
    }
    aggregate_distributions(w);
    return w;
}

struct DetectableSpaceInfo {
    std::size_t rank = 0;
    mpz_class dim = 0;
};

// Rank of the exact linear system cutting out the detectable operator space,
// built row by row from code-basis matrix elements.
inline DetectableSpaceInfo detectable_space_dim_dense(std::span<const StabilizerGroup> codes,
                                                      std::size_t limit = kDetectableDimLimit) {
    if (codes.empty()) throw std::invalid_argument("detectable_space_dim_dense: no codes");
    std::size_t n = codes[0].n;
    if (n > limit) throw DenseLimitExceeded(n, limit);
    std::vector<CodeBasis> bases;
    for (const auto& s : codes) bases.push_back(code_basis(s, limit));
    std::size_t m = bases.size();
    std::size_t k = bases[0].dim();
    for (const auto& b : bases)
        if (b.dim() != k) throw std::invalid_argument("detectable_space_dim_dense: unequal ranks");
    std::size_t dim = std::size_t{1} << n;
    std::size_t cols = dim * dim;

    auto functional = [&](const SparseVec& u, const SparseVec& v, GaussianRationalMatrix& mat,
                          std::size_t row, int sign) {
        for (const auto& eu : u)
            for (const auto& ev : v) {
                GaussianInt c = eu.value.conj() * ev.value;
                GaussianRational g(mpq_class(to_mpz(c.re)), mpq_class(to_mpz(c.im)));
                if (sign < 0) g = GaussianRational() - g;
                mat.at(row, eu.index * dim + ev.index) += g;
            }
    };

    std::size_t nrows = m * k * m * k - m * k + m * (k - 1);
    GaussianRationalMatrix rows(nrows, cols);
    std::size_t r = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t j = 0; j < k; ++j) {
                    if (a == b && i == j) continue;
                    functional(bases[a].vecs[i], bases[b].vecs[j], rows, r, +1);
                    ++r;
                }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 1; i < k; ++i) {
            functional(bases[a].vecs[i], bases[a].vecs[i], rows, r, +1);
            functional(bases[a].vecs[0], bases[a].vecs[0], rows, r, -1);
            ++r;
        }

    DetectableSpaceInfo info;
    info.rank = rows.rank();
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), 4, static_cast<unsigned long>(n));
    info.dim = total - static_cast<unsigned long>(info.rank);
    return info;
}

// q^(2n) - (MK)^2 + M, the dimension predicted by counting constraints.
inline mpz_class detectable_dimension(std::size_t n, const mpz_class& K, const mpz_class& M,
                                      unsigned q = 2) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), q, static_cast<unsigned long>(2 * n));
    mpz_class mk = M * K;
    return total - mk * mk + M;
}

}  // namespace hqc
