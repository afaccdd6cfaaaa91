#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hqc/dense.hpp"
#include "hqc/enumerators.hpp"
#include "hqc/errors.hpp"
#include "hqc/pauli.hpp"
#include "hqc/stabilizer.hpp"

namespace hqc {

// Stabilizer code with m classical generators demoted from the normalizer:
// full group S_0 = <quantum, classical> has rank r_Q + m, encoding k qubits
// alongside m classical bits.
struct HybridCode {
    std::size_t n = 0;
    StabilizerGroup quantum;                // rank r_Q
    std::vector<PauliOperator> classical;   // m commuting rows outside quantum
    StabilizerGroup full;                   // S_0, rank r_Q + m

    std::size_t m() const { return classical.size(); }
    std::size_t r_q() const { return quantum.rank(); }
    std::size_t k() const { return n - full.rank(); }
};

inline HybridCode make_hybrid(std::vector<PauliOperator> quantum_rows,
                              std::vector<PauliOperator> classical_rows) {
    HybridCode h;
    h.quantum = build_group(quantum_rows);
    h.n = h.quantum.n;
    for (auto& c : classical_rows) {
        if (c.n != h.n) throw std::invalid_argument("make_hybrid: size mismatch");
        if (!is_hermitian(c)) throw std::invalid_argument("make_hybrid: non-hermitian classical row");
        c = sign_free(c);
    }
    std::vector<PauliOperator> all = h.quantum.basis;
    all.insert(all.end(), classical_rows.begin(), classical_rows.end());
    h.full = build_group(all);
    if (h.full.rank() != h.quantum.rank() + classical_rows.size())
        throw std::invalid_argument("make_hybrid: classical rows dependent modulo the stabilizer");
    h.classical = std::move(classical_rows);
    return h;
}

inline HybridCode make_hybrid(const std::vector<std::string>& quantum_rows,
                              const std::vector<std::string>& classical_rows) {
    return make_hybrid(parse_pauli_rows(quantum_rows), parse_pauli_rows(classical_rows));
}

// Inner stabilizer code selected by the classical word c: classical row i
// enters with sign (-1)^c_i.
inline StabilizerGroup inner_code(const HybridCode& h, const std::vector<bool>& c) {
    if (c.size() != h.m()) throw std::invalid_argument("inner_code: wrong classical word length");
    std::vector<PauliOperator> rows = h.quantum.basis;
    for (std::size_t i = 0; i < c.size(); ++i) {
        PauliOperator p = h.classical[i];
        if (c[i]) p.phase = (p.phase + 2) & 3;
        rows.push_back(p);
    }
    return build_group(rows);
}

// Tr(P_a P_b) vanishes iff the signed intersection sums to zero.
inline bool orthogonal_pair(const StabilizerGroup& sa, const StabilizerGroup& sb,
                            std::uint64_t cap = kDefaultGroupCap) {
    if (sa.n != sb.n) throw std::invalid_argument("orthogonal_pair: size mismatch");
    IntersectionBasis ib = intersect(sa, sb);
    long long sum = 0;
    for_each_intersection_element(
        ib,
        [&](const PauliOperator&, int sign) {
            sum += sign;
            return true;
        },
        cap);
    return sum == 0;
}

// Union of equal-rank, pairwise orthogonal stabilizer codes.
struct StabilizerUnionCode {
    std::size_t n = 0;
    std::vector<StabilizerGroup> inner;

    std::size_t M() const { return inner.size(); }
};

inline StabilizerUnionCode make_union(std::vector<StabilizerGroup> inner, bool validate = true) {
    if (inner.empty()) throw std::invalid_argument("make_union: no inner codes");
    StabilizerUnionCode u;
    u.n = inner[0].n;
    if (validate) {
        for (const auto& s : inner) {
            if (s.n != u.n) throw std::invalid_argument("make_union: size mismatch");
            if (s.rank() != inner[0].rank()) throw std::invalid_argument("make_union: unequal ranks");
        }
        for (std::size_t a = 0; a < inner.size(); ++a)
            for (std::size_t b = a + 1; b < inner.size(); ++b)
                if (!orthogonal_pair(inner[a], inner[b]))
                    throw std::invalid_argument("make_union: inner codes not pairwise orthogonal");
    }
    u.inner = std::move(inner);
    return u;
}

// All 2^m inner codes in lexicographic classical-word order.
inline StabilizerUnionCode as_union(const HybridCode& h) {
    if (h.m() > 12) throw CapExceeded("as_union: more than 2^12 inner codes");
    std::size_t count = std::size_t{1} << h.m();
    std::vector<StabilizerGroup> inner;
    inner.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<bool> c(h.m());
        for (std::size_t i = 0; i < h.m(); ++i) c[i] = (idx >> (h.m() - 1 - i)) & 1;
        inner.push_back(inner_code(h, c));
    }
    return make_union(std::move(inner), false);
}

// A Pauli is detectable iff it anticommutes with the stabilizer or lies in
// the row space of the full group.
inline bool is_detectable(const HybridCode& h, const PauliOperator& e) {
    for (const auto& g : h.quantum.basis)
        if (!commutes(g, e)) return true;
    return in_rowspace(h.full, e);
}

struct DistanceResult {
    std::optional<WeightHit> found;
    std::size_t scanned_to = 0;

    bool exact() const { return found.has_value(); }
    // Exact distance when found, otherwise the least value still possible.
    std::size_t value() const { return found ? found->weight : scanned_to + 1; }
};

// Minimum weight of an undetectable Pauli: centralizer of the stabilizer
// minus the row space of the full group, scanned by increasing weight.
inline DistanceResult distance(const HybridCode& h, std::size_t w_max, unsigned threads = 1) {
    if (w_max > h.n) w_max = h.n;
    std::vector<PauliOperator> center = centralizer_basis(h.quantum);
    DistanceResult r;
    r.scanned_to = w_max;
    r.found = min_weight_outside(center, h.full, static_cast<int>(w_max), static_cast<int>(threads));
    return r;
}

// Same quantity, decided per candidate by the exact dense oracle.
inline DistanceResult union_distance_dense(const StabilizerUnionCode& u,
                                           std::size_t w_max = SIZE_MAX,
                                           std::size_t limit = kDenseDefaultLimit) {
    if (u.n > limit) throw DenseLimitExceeded(u.n, limit);
    if (w_max > u.n) w_max = u.n;
    std::vector<CodeBasis> bases;
    bases.reserve(u.M());
    for (const auto& s : u.inner) bases.push_back(code_basis(s, limit));

    DistanceResult r;
    r.scanned_to = w_max;
    for (std::size_t w = 1; w <= w_max && !r.found; ++w) {
        for_each_pauli(u.n, w, [&](const PauliOperator& e) {
            if (!kl_is_detectable(kl_check(bases, e))) {
                r.found = WeightHit{static_cast<int>(w), e};
                return false;
            }
            return true;
        });
    }
    return r;
}

struct DegeneracyResult {
    std::optional<PauliOperator> witness;

    bool degenerate() const { return witness.has_value(); }
};

// Looks for a full-group element of weight below d.
inline DegeneracyResult inner_degenerate(const HybridCode& h, std::size_t d) {
    DegeneracyResult r;
    for (std::size_t w = 1; w + 1 <= d && !r.witness; ++w) {
        for_each_pauli(h.n, w, [&](const PauliOperator& e) {
            if (in_rowspace(h.full, e)) {
                r.witness = e;
                return false;
            }
            return true;
        });
    }
    return r;
}

namespace detail {

inline PauliOperator xor_op(const PauliOperator& a, const PauliOperator& b) {
    return from_vec2n(a.n, to_vec2n(a) ^ to_vec2n(b));
}

}  // namespace detail

// Demotes m logical qubits of a stabilizer code to classical bits, using the
// lowest-index canonical symplectic pairing of the normalizer quotient.
inline HybridCode from_quantum(const StabilizerGroup& q, std::size_t m_demote) {
    std::size_t k0 = q.n - q.rank();
    if (m_demote > k0)
        throw std::invalid_argument("from_quantum: not enough logical qubits to demote");
    if (m_demote == 0) return make_hybrid(q.basis, {});

    std::vector<BitVec> rows;
    for (const auto& op : centralizer_basis(q)) {
        BitVec v = to_vec2n(op);
        for (const auto& g : q.basis) {
            BitVec gv = to_vec2n(g);
            std::size_t piv = detail::pivot_column(g);
            if (v.get(piv)) v ^= gv;
        }
        if (!v.zero()) rows.push_back(v);
    }
    gf2_rref(rows, 2 * q.n);
    std::vector<PauliOperator> pool;
    for (const auto& v : rows)
        if (!v.zero()) pool.push_back(from_vec2n(q.n, v));

    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        std::size_t bi = 0;
        for (std::size_t i = 1; i < pool.size(); ++i)
            if (!commutes(a, pool[i])) {
                bi = i;
                break;
            }
        if (bi == 0) throw std::logic_error("from_quantum: degenerate symplectic form");
        PauliOperator b = pool[bi];
        pool.erase(pool.begin() + bi);
        pool.erase(pool.begin());
        for (auto& u : pool) {
            bool hits_a = !commutes(u, a), hits_b = !commutes(u, b);
            if (hits_b) u = detail::xor_op(u, a);
            if (hits_a) u = detail::xor_op(u, b);
        }
        pairs.emplace_back(std::move(a), std::move(b));
    }
    if (pairs.size() != k0) throw std::logic_error("from_quantum: wrong pair count");

    std::vector<PauliOperator> classical;
    for (std::size_t i = 0; i < m_demote; ++i) classical.push_back(pairs[i].second);
    return make_hybrid(q.basis, classical);
}

namespace detail {

inline PauliOperator embed(const PauliOperator& p, std::size_t total, std::size_t offset) {
    PauliOperator out = pauli_identity(total);
    for (std::size_t i = 0; i < p.n; ++i) {
        if (p.x.get(i)) out.x.set(offset + i, true);
        if (p.z.get(i)) out.z.set(offset + i, true);
    }
    return sign_free(out);
}

inline PauliOperator z_row(std::size_t total, const BitVec& bits, std::size_t offset) {
    PauliOperator out = pauli_identity(total);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) out.z.set(offset + i, true);
    return out;
}

}  // namespace detail

// Appends a classical [n2, m2] code as Z-type rows: the dual code joins the
// stabilizer, a completion to full support joins the classical generators.
inline HybridCode tensor_classical(const HybridCode& h, const std::vector<BitVec>& gen,
                                   std::size_t n2) {
    std::size_t m2 = gen.size();
    if (m2 == 0) throw std::invalid_argument("tensor_classical: empty classical code");
    for (const auto& g : gen)
        if (g.size() != n2) throw std::invalid_argument("tensor_classical: length mismatch");
    std::vector<BitVec> check = gen;
    if (gf2_rref(check, n2).size() != m2)
        throw std::invalid_argument("tensor_classical: dependent classical generators");

    std::vector<BitVec> dual = gf2_nullspace(gen, n2);
    std::vector<BitVec> reduced = dual;
    std::vector<std::size_t> pivots = gf2_rref(reduced, n2);
    std::vector<BitVec> completion;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < n2; ++c) {
            if (pi < pivots.size() && pivots[pi] == c) {
                ++pi;
                continue;
            }
            BitVec e(n2);
            e.set(c, true);
            completion.push_back(e);
        }
    }

    std::size_t total = h.n + n2;
    std::vector<PauliOperator> qrows, crows;
    for (const auto& g : h.quantum.basis) qrows.push_back(detail::embed(g, total, 0));
    for (const auto& v : dual) qrows.push_back(detail::z_row(total, v, h.n));
    for (const auto& c : h.classical) crows.push_back(detail::embed(c, total, 0));
    for (const auto& v : completion) crows.push_back(detail::z_row(total, v, h.n));
    return make_hybrid(qrows, crows);
}

inline HybridCode tensor_classical(const StabilizerGroup& q, const std::vector<BitVec>& gen,
                                   std::size_t n2) {
    return tensor_classical(make_hybrid(q.basis, {}), gen, n2);
}

inline PairDistributions pair_distributions(const StabilizerUnionCode& u, std::size_t a,
                                            std::size_t b, std::uint64_t cap = kDefaultGroupCap) {
    return pair_distributions(u.inner.at(a), u.inner.at(b), cap);
}

inline WeightDistributionSet all_pair_distributions(const StabilizerUnionCode& u,
                                                    std::uint64_t cap = kDefaultGroupCap) {
    return all_pair_distributions(std::span<const StabilizerGroup>(u.inner), cap);
}

inline WeightDistributionSet weight_distributions_dense(const StabilizerUnionCode& u,
                                                        std::size_t limit = kDenseDefaultLimit) {
    std::vector<CodeBasis> bases;
    bases.reserve(u.M());
    for (const auto& s : u.inner) bases.push_back(code_basis(s, limit));
    return weight_distributions_dense(std::span<const CodeBasis>(bases));
}

}  // namespace hqc
