#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "hqc/errors.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

// (x|z) symplectic vector of a Pauli as one 2n-bit vector. Column i < n is
// x_i, column n+i is z_i, so the fixed pivot order "x bits then z bits" is the
// natural ascending bit order.
inline BitVec to_vec2n(const PauliOperator& p) {
    BitVec v(2 * p.n);
    for (std::size_t k = 0; k < p.x.words().size(); ++k) {
        const std::uint64_t w = p.x.words()[k];
        if (!w) continue;
        for (std::size_t b = 0; b < 64; ++b)
            if ((w >> b) & 1) v.set(k * 64 + b, true);
    }
    for (std::size_t k = 0; k < p.z.words().size(); ++k) {
        const std::uint64_t w = p.z.words()[k];
        if (!w) continue;
        for (std::size_t b = 0; b < 64; ++b)
            if ((w >> b) & 1) v.set(p.n + k * 64 + b, true);
    }
    return v;
}

inline PauliOperator from_vec2n(std::size_t n, const BitVec& v, bool make_sign_free = true) {
    PauliOperator p = pauli_identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v.get(i)) p.x.set(i, true);
        if (v.get(n + i)) p.z.set(i, true);
    }
    if (make_sign_free) p.phase = static_cast<std::uint8_t>(y_count(p) & 3);
    return p;
}

// In-place reduced row echelon form over GF(2); returns pivot columns in row order.
inline std::vector<std::size_t> gf2_rref(std::vector<BitVec>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Basis of {u : dot(r, u) = 0 for all rows r} under the standard dot product,
// deterministic (free columns in ascending order).
inline std::vector<BitVec> gf2_nullspace(std::vector<BitVec> rows, std::size_t width) {
    auto pivots = gf2_rref(rows, width);
    std::vector<bool> is_pivot(width, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(width);
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(f)) v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct StabilizerGroup {
    std::size_t n = 0;
    std::vector<PauliOperator> generators;  // as supplied
    std::vector<PauliOperator> basis;       // reduced rows; phases carry the sign data
    std::vector<std::size_t> pivots;        // pivot column of each basis row, in [0, 2n)

    std::size_t rank() const { return basis.size(); }
};

namespace detail {

inline std::size_t pivot_column(const PauliOperator& p) {
    std::size_t fx = p.x.first_set();
    if (fx != BitVec::npos) return fx;
    return p.n + p.z.first_set();
}

inline bool bit_at(const PauliOperator& p, std::size_t col) {
    return col < p.n ? p.x.get(col) : p.z.get(col - p.n);
}

// Reduce p against an RREF basis; the result has no basis pivot bits set.
inline PauliOperator reduce_by(const StabilizerGroup& s, PauliOperator p) {
    for (std::size_t r = 0; r < s.basis.size(); ++r)
        if (bit_at(p, s.pivots[r])) p = multiply(p, s.basis[r]);
    return p;
}

}  // namespace detail

// Builds the group from Hermitian, pairwise-commuting generators. Dependent
// rows whose subset product is +I are dropped (r = rank of the input);
// a subset product of -I is a sign conflict.
inline StabilizerGroup build_group(std::span<const PauliOperator> gens) {
    if (gens.empty()) throw std::invalid_argument("build_group: empty generator list");
    StabilizerGroup s;
    s.n = gens[0].n;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].n != s.n) throw std::invalid_argument("build_group: mixed qubit counts");
        if (!is_hermitian(gens[i]))
            throw std::invalid_argument("build_group: generator " + std::to_string(i + 1) + " is not Hermitian");
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!commutes(gens[i], gens[j])) throw AnticommutingPair(i + 1, j + 1);
    s.generators.assign(gens.begin(), gens.end());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        PauliOperator g = detail::reduce_by(s, gens[gi]);
        if (g.x.zero() && g.z.zero()) {
            if ((g.phase & 3) == 2) throw DependentGeneratorWithSignConflict(gi + 1);
            continue;  // dependent with sign +1
        }
        std::size_t piv = detail::pivot_column(g);
        std::size_t at = 0;
        while (at < s.pivots.size() && s.pivots[at] < piv) ++at;
        for (std::size_t r = 0; r < s.basis.size(); ++r)
            if (detail::bit_at(s.basis[r], piv)) s.basis[r] = multiply(s.basis[r], g);
        s.basis.insert(s.basis.begin() + at, std::move(g));
        s.pivots.insert(s.pivots.begin() + at, piv);
    }
    return s;
}

inline StabilizerGroup build_group(std::initializer_list<PauliOperator> gens) {
    return build_group(std::span<const PauliOperator>(gens.begin(), gens.size()));
}

// If P's (x|z) vector lies in the row space, returns delta with P = i^delta * g
// for a signed group member g; otherwise nullopt.
inline std::optional<std::uint8_t> contains(const StabilizerGroup& s, const PauliOperator& p) {
    if (p.n != s.n) throw std::invalid_argument("contains: length mismatch");
    PauliOperator acc = pauli_identity(s.n);
    for (std::size_t r = 0; r < s.basis.size(); ++r)
        if (detail::bit_at(p, s.pivots[r])) acc = multiply(acc, s.basis[r]);
    if (acc.x == p.x && acc.z == p.z) return static_cast<std::uint8_t>((p.phase - acc.phase) & 3);
    return std::nullopt;
}

inline bool in_rowspace(const StabilizerGroup& s, const PauliOperator& p) {
    return contains(s, p).has_value();
}

// Unsigned basis of the symplectic-orthogonal complement of the row space:
// 2n - r operators commuting with every generator.
inline std::vector<PauliOperator> centralizer_basis(const StabilizerGroup& s) {
    std::vector<BitVec> constraint;
    constraint.reserve(s.basis.size());
    for (const auto& row : s.basis) {
        // Swap halves so the standard dot realizes the symplectic form.
        BitVec v(2 * s.n);
        for (std::size_t i = 0; i < s.n; ++i) {
            if (row.z.get(i)) v.set(i, true);
            if (row.x.get(i)) v.set(s.n + i, true);
        }
        constraint.push_back(std::move(v));
    }
    auto null_basis = gf2_nullspace(std::move(constraint), 2 * s.n);
    std::vector<PauliOperator> out;
    out.reserve(null_basis.size());
    for (const auto& v : null_basis) out.push_back(from_vec2n(s.n, v));
    return out;
}

inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 26;

// Visits all 2^r signed elements once (Gray-code order), starting at identity.
template <class F>
void enumerate_group(const StabilizerGroup& s, F&& visit, std::uint64_t cap = kDefaultGroupCap) {
    std::size_t r = s.rank();
    if (r >= 63 || (std::uint64_t{1} << r) > cap)
        throw CapExceeded("enumerate_group: 2^" + std::to_string(r) + " elements");
    PauliOperator acc = pauli_identity(s.n);
    visit(static_cast<const PauliOperator&>(acc));
    std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t g = 1; g < total; ++g) {
        int flip = std::countr_zero(g);
        acc = multiply(acc, s.basis[flip]);
        visit(static_cast<const PauliOperator&>(acc));
    }
}

// Basis of the intersection of two row spaces with, per element, the Z_4 phase
// it carries as a signed member of each side.
struct IntersectionBasis {
    std::size_t n = 0;
    std::vector<PauliOperator> elements;  // sign-free representatives
    std::vector<std::uint8_t> phase_a;    // i^phase_a * element lies in Sa... phase offsets in {0,2}
    std::vector<std::uint8_t> phase_b;

    std::size_t rank() const { return elements.size(); }
};

inline IntersectionBasis intersect(const StabilizerGroup& sa, const StabilizerGroup& sb) {
    if (sa.n != sb.n) throw std::invalid_argument("intersect: length mismatch");
    const std::size_t n2 = 2 * sa.n;
    // Zassenhaus: rows (a|a) and (b|0); reduced rows with zero left half have
    // right halves spanning the intersection.
    std::vector<BitVec> rows;
    for (const auto& r : sa.basis) {
        BitVec v(2 * n2), half = to_vec2n(r);
        for (std::size_t i = 0; i < n2; ++i)
            if (half.get(i)) {
                v.set(i, true);
                v.set(n2 + i, true);
            }
        rows.push_back(std::move(v));
    }
    for (const auto& r : sb.basis) {
        BitVec v(2 * n2), half = to_vec2n(r);
        for (std::size_t i = 0; i < n2; ++i)
            if (half.get(i)) v.set(i, true);
        rows.push_back(std::move(v));
    }
    gf2_rref(rows, 2 * n2);
    IntersectionBasis ib;
    ib.n = sa.n;
    for (const auto& v : rows) {
        bool left_zero = true;
        for (std::size_t i = 0; i < n2 && left_zero; ++i) left_zero = !v.get(i);
        if (!left_zero) continue;
        BitVec right(n2);
        for (std::size_t i = 0; i < n2; ++i)
            if (v.get(n2 + i)) right.set(i, true);
        if (right.zero()) continue;
        PauliOperator el = from_vec2n(sa.n, right);
        auto da = contains(sa, el), db = contains(sb, el);
        ib.elements.push_back(std::move(el));
        ib.phase_a.push_back(*da);
        ib.phase_b.push_back(*db);
    }
    return ib;
}

// Visits every element w of the intersection group (2^rank of them, identity
// first) with sign = eps_a(w) * eps_b(w), the product of the signs the two
// sides assign to the unsigned element.
template <class F>
void for_each_intersection_element(const IntersectionBasis& ib, F&& visit,
                                   std::uint64_t cap = kDefaultGroupCap) {
    std::size_t r = ib.rank();
    if (r >= 63 || (std::uint64_t{1} << r) > cap)
        throw CapExceeded("intersection enumeration: 2^" + std::to_string(r) + " elements");
    PauliOperator acc = pauli_identity(ib.n);
    unsigned offset = 0;  // accumulated phase_a + phase_b, mod 4
    visit(static_cast<const PauliOperator&>(acc), +1);
    std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t g = 1; g < total; ++g) {
        int flip = std::countr_zero(g);
        acc = multiply(acc, ib.elements[flip]);
        offset = (offset + ib.phase_a[flip] + ib.phase_b[flip]) & 3;
        unsigned spin = (2u * acc.phase - 2u * (y_count(acc) & 3) + 16u - offset) & 3;
        visit(static_cast<const PauliOperator&>(acc), spin == 0 ? +1 : -1);
    }
}

// Per-position, per-letter parity masks against a fixed set of 2n-bit test
// vectors; evaluating a weight-w Pauli costs w mask XORs.
class PauliDotTable {
  public:
    PauliDotTable() = default;
    PauliDotTable(std::size_t n, const std::vector<BitVec>& tests) : n_(n), count_(tests.size()) {
        nw_ = (count_ + 63) / 64;
        masks_.assign(n * 3 * nw_, 0);
        for (std::size_t j = 0; j < tests.size(); ++j) {
            for (std::size_t p = 0; p < n; ++p) {
                bool bx = tests[j].get(p), bz = tests[j].get(n + p);
                if (bx) set_bit(p, 0, j);            // X hits the x column
                if (bx != bz) set_bit(p, 1, j);      // Y hits x xor z
                if (bz) set_bit(p, 2, j);            // Z hits the z column
            }
        }
    }

    std::size_t words() const { return nw_; }
    std::size_t test_count() const { return count_; }

    const std::uint64_t* mask(std::size_t pos, int digit) const {
        return masks_.data() + (pos * 3 + digit) * nw_;
    }

    void accumulate(std::size_t pos, int digit, std::uint64_t* acc) const {
        const std::uint64_t* m = mask(pos, digit);
        for (std::size_t k = 0; k < nw_; ++k) acc[k] ^= m[k];
    }

    static bool all_zero(const std::uint64_t* acc, std::size_t nw) {
        for (std::size_t k = 0; k < nw; ++k)
            if (acc[k]) return false;
        return true;
    }

  private:
    void set_bit(std::size_t pos, int digit, std::size_t j) {
        masks_[(pos * 3 + digit) * nw_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }

    std::size_t n_ = 0, count_ = 0, nw_ = 0;
    std::vector<std::uint64_t> masks_;
};

// Table whose accumulated parity vanishes exactly when the operator's (x|z)
// vector lies in the span of the given rows.
inline PauliDotTable make_rowspace_table(std::size_t n, std::span<const PauliOperator> rows) {
    std::vector<BitVec> vecs;
    vecs.reserve(rows.size());
    for (const auto& r : rows) vecs.push_back(to_vec2n(r));
    return PauliDotTable(n, gf2_nullspace(std::move(vecs), 2 * n));
}

struct WeightHit {
    int weight = 0;
    PauliOperator witness;
};

namespace detail {

struct ChunkHit {
    std::uint64_t index = 0;
    bool found = false;
};

// First index in [lo, hi) x letters whose masks satisfy: vanish-table zero and
// nonvanish-table nonzero. Deterministic (enumeration order).
inline ChunkHit scan_chunk(std::size_t n, int w, const PauliDotTable& vanish,
                           const PauliDotTable& nonvanish, std::uint64_t lo, std::uint64_t hi) {
    ChunkHit best;
    if (lo >= hi) return best;
    auto support = unrank_combination(n, w, lo);
    std::uint64_t p3 = pow3(w);
    std::vector<std::uint64_t> acc_v(vanish.words()), acc_n(nonvanish.words());
    for (std::uint64_t ci = lo; ci < hi; ++ci) {
        for (std::uint64_t letters = 0; letters < p3; ++letters) {
            std::fill(acc_v.begin(), acc_v.end(), 0);
            std::fill(acc_n.begin(), acc_n.end(), 0);
            std::uint64_t base = p3;
            for (int t = 0; t < w; ++t) {
                base /= 3;
                int digit = static_cast<int>((letters / base) % 3);
                vanish.accumulate(support[t], digit, acc_v.data());
                nonvanish.accumulate(support[t], digit, acc_n.data());
            }
            if (PauliDotTable::all_zero(acc_v.data(), vanish.words()) &&
                !PauliDotTable::all_zero(acc_n.data(), nonvanish.words())) {
                best.index = ci * p3 + letters;
                best.found = true;
                return best;
            }
        }
        if (!next_combination(support, n)) break;
    }
    return best;
}

inline std::optional<WeightHit> scan_weight_level(std::size_t n, int w, const PauliDotTable& vanish,
                                                  const PauliDotTable& nonvanish, int threads) {
    std::uint64_t combos = binomial(n, w);
    ChunkHit overall;
    if (threads <= 1 || combos < 4096) {
        overall = scan_chunk(n, w, vanish, nonvanish, 0, combos);
    } else {
        std::size_t t = static_cast<std::size_t>(threads);
        std::vector<ChunkHit> hits(t);
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < t; ++i) {
            std::uint64_t lo = combos * i / t, hi = combos * (i + 1) / t;
            pool.emplace_back([&, i, lo, hi] { hits[i] = scan_chunk(n, w, vanish, nonvanish, lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& h : hits)
            if (h.found && (!overall.found || h.index < overall.index)) overall = h;
    }
    if (!overall.found) return std::nullopt;
    return WeightHit{w, pauli_at(n, w, overall.index)};
}

}  // namespace detail

// Least-weight sign-free Pauli (weights 1..w_max, enumeration order) inside the
// span of center_basis but outside exclude's row space; nullopt = none up to w_max.
inline std::optional<WeightHit> min_weight_outside(std::span<const PauliOperator> center_basis,
                                                   const StabilizerGroup& exclude, int w_max,
                                                   int threads = 1) {
    if (center_basis.empty()) throw std::invalid_argument("min_weight_outside: empty center basis");
    std::size_t n = center_basis[0].n;
    PauliDotTable in_center = make_rowspace_table(n, center_basis);
    PauliDotTable in_exclude = make_rowspace_table(n, exclude.basis);
    for (int w = 1; w <= w_max && static_cast<std::size_t>(w) <= n; ++w) {
        auto hit = detail::scan_weight_level(n, w, in_center, in_exclude, threads);
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace hqc
