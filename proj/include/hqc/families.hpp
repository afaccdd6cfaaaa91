#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hqc/errors.hpp"
#include "hqc/hybrid.hpp"
#include "hqc/pauli.hpp"
#include "hqc/stabilizer.hpp"

namespace hqc {

// Genuine hybrid [[n, n-3 : 1, 2]] for odd n: all-X and all-Z-but-last
// stabilizers with a single trailing-X classical generator.
inline HybridCode dist2_family(std::size_t n) {
    if (n < 3) throw std::invalid_argument("dist2_family: n must be at least 3");
    if (n % 2 == 0) throw EvenLengthRejected(n);
    std::string allx(n, 'X');
    std::string zrow(n, 'Z');
    zrow[n - 1] = 'I';
    std::string crow(n, 'I');
    crow[n - 1] = 'X';
    return make_hybrid({allx, zrow}, {crow});
}

namespace detail {

// all-X, all-Z, then S_i = X^{h_i} Z^{h_{i-1} + h_1 + h_j}, where h_i reads
// one bit of the column index t under the chosen bit order.
inline std::vector<PauliOperator> gottesman_rows(unsigned j, bool msb) {
    std::size_t n = std::size_t{1} << j;
    std::vector<BitVec> h(j + 1, BitVec(n));
    for (unsigned i = 1; i <= j; ++i) {
        unsigned bitpos = msb ? j - i : i - 1;
        for (std::size_t t = 0; t < n; ++t)
            if ((t >> bitpos) & 1) h[i].set(t, true);
    }
    PauliOperator allx = pauli_identity(n), allz = pauli_identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        allx.x.set(t, true);
        allz.z.set(t, true);
    }
    std::vector<PauliOperator> rows{allx, allz};
    for (unsigned i = 1; i <= j; ++i) {
        PauliOperator s = pauli_identity(n);
        s.x = h[i];
        s.z = h[i - 1] ^ h[1] ^ h[j];
        rows.push_back(sign_free(s));
    }
    return rows;
}

}  // namespace detail

struct GottesmanCode {
    StabilizerGroup group;  // [[2^j, 2^j - j - 2]] with verified distance 3
    bool msb_convention = true;
};

inline GottesmanCode gottesman(unsigned j, int threads = 1) {
    if (j < 3) throw std::invalid_argument("gottesman: j must be at least 3");
    if (j > 14) throw CapExceeded("gottesman: block length over 2^14");
    for (bool msb : {true, false}) {
        StabilizerGroup g = build_group(detail::gottesman_rows(j, msb));
        if (g.rank() != j + 2) continue;
        if (!min_weight_outside(centralizer_basis(g), g, 2, threads)) return {std::move(g), msb};
    }
    throw DistanceVerificationFailed(
        "gottesman: weight-2 undetectable error under both bit-order conventions");
}

namespace detail {

struct SeedTable {
    std::size_t a;
    std::vector<std::string> quantum, classical;
};

inline const std::vector<SeedTable>& seed_tables() {
    static const std::vector<SeedTable> tables = {
        {7,
         {"XIIZYYZ", "ZXIXZIX", "ZIXXIZX", "ZIZZXII", "IZIZIXX"},
         {"ZIIIIIX"}},
        {9,
         {"XIIZYZXXY", "ZXIZYXYIZ", "IZXZZIXIX", "IZZIYXXYI", "ZZIXXIXZI"},
         {"ZIIIIXIII", "IZIIIIXII"}},
        {10,
         {"XXIZIZYZYZ", "XIYXIXZXXY", "XZXYZYYIIY", "IIZZXXYYII", "ZIIIZZXXIX"},
         {"ZIIIIIIIIX", "IIZZIIIIII"}},
        {11,
         {"IZXIXZIZXXX", "IZZXIIZXXYY", "ZIIZXXZXXXI", "XXIXYXIYYYX", "YYIXXYYZYIY"},
         {"ZIIIIIIIXII", "IZIIIIIIXII"}},
    };
    return tables;
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline constexpr std::uint64_t kSeedChecksum = 0xc74a63713f3c918fULL;

inline void verify_seed_tables() {
    static const bool ok = [] {
        std::string blob;
        for (const auto& t : seed_tables()) {
            blob += std::to_string(t.a) + ":";
            for (std::size_t i = 0; i < t.quantum.size(); ++i)
                blob += (i ? "|" : "") + t.quantum[i];
            blob += "/";
            for (std::size_t i = 0; i < t.classical.size(); ++i)
                blob += (i ? "|" : "") + t.classical[i];
            blob += ";";
        }
        return fnv1a64(blob) == kSeedChecksum;
    }();
    if (!ok) throw std::logic_error("seed_code: generator table checksum mismatch");
}

inline const SeedTable& seed_table(std::size_t a) {
    verify_seed_tables();
    for (const auto& t : seed_tables())
        if (t.a == a) return t;
    throw std::invalid_argument("seed_code: length must be one of 7, 9, 10, 11");
}

}  // namespace detail

// Hardcoded distance-3 hybrid codes [[7,1:1]], [[9,2:2]], [[10,3:2]], [[11,4:2]].
inline HybridCode seed_code(std::size_t a) {
    const auto& t = detail::seed_table(a);
    return make_hybrid(t.quantum, t.classical);
}

// Bottom-aligned staircase of Gottesman blocks U_m..U_1 followed by a seed
// code on the last a qubits.
struct PastingLayout {
    std::size_t m = 0, a = 0;
    std::size_t n = 0;
    std::size_t rows = 0;                    // quantum generator count, 2m+5
    std::vector<std::size_t> block_sizes;    // |U_m|..|U_1|, then a
    std::vector<std::size_t> block_offsets;  // leftmost qubit per block
    std::vector<std::size_t> block_rows;     // first occupied generator row, 1-based
};

inline PastingLayout pasting_layout(std::size_t m, std::size_t a) {
    detail::seed_table(a);
    if (m < 1) throw std::invalid_argument("pasting_layout: m must be at least 1");
    if (m > 5) throw CapExceeded("pasting_layout: block length over 2^14");
    PastingLayout L;
    L.m = m;
    L.a = a;
    L.rows = 2 * m + 5;
    std::size_t off = 0;
    for (std::size_t k = m; k >= 1; --k) {
        L.block_sizes.push_back(std::size_t{1} << (2 * k + 3));
        L.block_offsets.push_back(off);
        L.block_rows.push_back(2 * (m - k) + 1);
        off += L.block_sizes.back();
    }
    L.block_sizes.push_back(a);
    L.block_offsets.push_back(off);
    L.block_rows.push_back(2 * m + 1);
    L.n = off + a;
    if (L.n != ((std::size_t{1} << (2 * m + 5)) - 32) / 3 + a)
        throw std::logic_error("pasting_layout: closed form mismatch");
    return L;
}

inline HybridCode paste(std::size_t m, std::size_t a, int threads = 1) {
    PastingLayout L = pasting_layout(m, a);
    std::vector<BitVec> xs(L.rows, BitVec(L.n)), zs(L.rows, BitVec(L.n));
    auto overlay = [&](const PauliOperator& src, std::size_t row0, std::size_t off) {
        for (std::size_t i = 0; i < src.n; ++i) {
            if (src.x.get(i)) xs[row0].set(off + i, true);
            if (src.z.get(i)) zs[row0].set(off + i, true);
        }
    };

    for (std::size_t bi = 0; bi + 1 < L.block_sizes.size(); ++bi) {
        std::size_t k = m - bi;
        GottesmanCode block = gottesman(static_cast<unsigned>(2 * k + 3), threads);
        for (std::size_t t = 0; t < block.group.generators.size(); ++t)
            overlay(block.group.generators[t], L.block_rows[bi] - 1 + t, L.block_offsets[bi]);
    }
    const auto& seed = detail::seed_table(a);
    std::size_t soff = L.block_offsets.back();
    for (std::size_t t = 0; t < seed.quantum.size(); ++t)
        overlay(pauli_from_string(seed.quantum[t]), L.block_rows.back() - 1 + t, soff);

    std::vector<PauliOperator> qrows;
    for (std::size_t r = 0; r < L.rows; ++r)
        qrows.push_back(sign_free(PauliOperator{L.n, xs[r], zs[r], 0}));
    std::vector<PauliOperator> crows;
    for (const auto& c : seed.classical)
        crows.push_back(detail::embed(pauli_from_string(c), L.n, soff));
    return make_hybrid(qrows, crows);
}

// True iff no distance-3 stabilizer code with s generators can exist at
// length n: s falls below ceil(log2(3n+1)), raised by one at the special
// lengths (8/3)(4^k - 1) + b, b in {-1, 1, 2}.
inline bool yu_excludes_stabilizer(std::size_t n, std::size_t s) {
    if (n < 1) throw std::invalid_argument("yu_excludes_stabilizer: n must be positive");
    bool special = false;
    for (unsigned long long base = 8; base <= n + 1; base = 4 * base + 8)
        if (n + 1 == base || n == base + 1 || n == base + 2) special = true;
    std::size_t thr = std::bit_width(static_cast<unsigned long long>(3) * n);
    if (special) ++thr;
    return s < thr;
}

}  // namespace hqc
