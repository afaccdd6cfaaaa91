#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hqc/bitvec.hpp"
#include "hqc/errors.hpp"

namespace hqc {

// i^phase * X^x * Z^z with Y = i*XZ. Qubit 0 is the leftmost string character.
struct PauliOperator {
    std::size_t n = 0;
    BitVec x, z;
    std::uint8_t phase = 0;  // exponent of i, mod 4

    bool operator==(const PauliOperator&) const = default;
};

inline PauliOperator pauli_identity(std::size_t n) { return PauliOperator{n, BitVec(n), BitVec(n), 0}; }

// Letter codes: 'I', 'X', 'Y', 'Z'.
inline char letter_at(const PauliOperator& p, std::size_t i) {
    bool xb = p.x.get(i), zb = p.z.get(i);
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

inline int weight(const PauliOperator& p) { return or_popcount(p.x, p.z); }

// Number of Y letters, used to relate the phase exponent to the printed sign.
inline int y_count(const PauliOperator& p) { return and_popcount(p.x, p.z); }

inline bool is_hermitian(const PauliOperator& p) { return ((p.phase - y_count(p)) & 1) == 0; }

// Same unsigned operator with the phase that makes it the literal letter tensor.
inline PauliOperator sign_free(const PauliOperator& p) {
    PauliOperator r = p;
    r.phase = static_cast<std::uint8_t>(y_count(p) & 3);
    return r;
}

inline PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    PauliOperator r;
    r.n = p.n;
    r.x = p.x ^ q.x;
    r.z = p.z ^ q.z;
    // X^x Z^z * X^x' Z^z' picks up (-1)^(z.x') moving Z^z across X^x'.
    r.phase = static_cast<std::uint8_t>((p.phase + q.phase + 2 * (dot(p.z, q.x) ? 1 : 0)) & 3);
    return r;
}

inline PauliOperator adjoint(const PauliOperator& p) {
    PauliOperator r = p;
    // (i^d X^x Z^z)^dag = i^-d Z^z X^x = i^-d (-1)^(x.z) X^x Z^z
    r.phase = static_cast<std::uint8_t>((-p.phase + 2 * (dot(p.x, p.z) ? 1 : 0)) & 3);
    return r;
}

inline bool commutes(const PauliOperator& p, const PauliOperator& q) {
    return dot(p.x, q.z) == dot(p.z, q.x);
}

// Grammar: sign? body, sign in {"+","-","i","-i"}, body in {I,X,Y,Z}+.
inline PauliOperator pauli_from_string(std::string_view s) {
    std::size_t pos = 0;
    int sign = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        sign = (s[pos] == '-') ? 2 : 0;
        ++pos;
        if (pos < s.size() && s[pos] == 'i' && sign == 2) {
            sign = 3;
            ++pos;
        }
    } else if (pos < s.size() && s[pos] == 'i') {
        sign = 1;
        ++pos;
    }
    if (pos >= s.size()) throw PauliParseError("empty Pauli body", pos);
    PauliOperator p = pauli_identity(s.size() - pos);
    int ny = 0;
    for (std::size_t i = pos; i < s.size(); ++i) {
        std::size_t qb = i - pos;
        switch (s[i]) {
            case 'I': break;
            case 'X': p.x.set(qb, true); break;
            case 'Y':
                p.x.set(qb, true);
                p.z.set(qb, true);
                ++ny;
                break;
            case 'Z': p.z.set(qb, true); break;
            default:
                throw PauliParseError(std::string("invalid Pauli character '") + s[i] + "'", i);
        }
    }
    p.phase = static_cast<std::uint8_t>((sign + ny) & 3);
    return p;
}

inline std::string to_string(const PauliOperator& p) {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[(p.phase - y_count(p)) & 3];
    out.reserve(out.size() + p.n);
    for (std::size_t i = 0; i < p.n; ++i) out.push_back(letter_at(p, i));
    return out;
}

inline std::vector<PauliOperator> parse_pauli_rows(const std::vector<std::string>& rows) {
    std::vector<PauliOperator> out;
    out.reserve(rows.size());
    for (const auto& s : rows) out.push_back(pauli_from_string(s));
    return out;
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > ~std::uint64_t{0}) throw std::overflow_error("pauli_count overflow");
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i);
        t /= i;
        if (t > ~std::uint64_t{0}) throw std::overflow_error("binomial overflow");
        r = static_cast<std::uint64_t>(t);
    }
    return r;
}

inline std::uint64_t pow3(int w) {
    std::uint64_t r = 1;
    for (int i = 0; i < w; ++i) r *= 3;
    return r;
}

// Lexicographically next w-combination of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t w = c.size();
    if (w == 0) return false;
    std::size_t i = w;
    while (i-- > 0) {
        if (c[i] + 1 <= n - (w - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Lexicographic unranking of a w-combination of {0..n-1}.
inline std::vector<std::size_t> unrank_combination(std::size_t n, int w, std::uint64_t idx) {
    std::vector<std::size_t> c(w);
    std::size_t cand = 0;
    for (int slot = 0; slot < w; ++slot) {
        for (;; ++cand) {
            std::uint64_t cnt = binomial(n - 1 - cand, w - 1 - slot);
            if (idx < cnt) {
                c[slot] = cand++;
                break;
            }
            idx -= cnt;
        }
    }
    return c;
}

// Digit 0=X, 1=Y, 2=Z at one support position.
inline void apply_letter(PauliOperator& p, std::size_t pos, int digit) {
    p.x.set(pos, digit != 2);
    p.z.set(pos, digit != 0);
}

}  // namespace detail

inline std::uint64_t pauli_count(std::size_t n, int w) {
    if (w < 0 || static_cast<std::size_t>(w) > n) throw std::out_of_range("pauli weight out of range");
    return detail::checked_mul(detail::pow3(w), detail::binomial(n, w));
}

// Representative at a given enumeration index: supports in lexicographic order,
// letters in base 3 (X<Y<Z) with the leftmost support position most significant.
inline PauliOperator pauli_at(std::size_t n, int w, std::uint64_t idx) {
    std::uint64_t p3 = detail::pow3(w);
    auto support = detail::unrank_combination(n, w, idx / p3);
    std::uint64_t letters = idx % p3;
    PauliOperator p = pauli_identity(n);
    std::uint64_t base = p3;
    int ny = 0;
    for (int t = 0; t < w; ++t) {
        base /= 3;
        int digit = static_cast<int>((letters / base) % 3);
        detail::apply_letter(p, support[t], digit);
        if (digit == 1) ++ny;
    }
    p.phase = static_cast<std::uint8_t>(ny & 3);
    return p;
}

// Visits all 3^w * C(n,w) sign-free representatives of weight exactly w in
// enumeration order. The visitor returns false to stop early.
template <class F>
void for_each_pauli(std::size_t n, int w, F&& visit) {
    if (w < 0 || static_cast<std::size_t>(w) > n) throw std::out_of_range("pauli weight out of range");
    if (w == 0) {
        visit(pauli_identity(n));
        return;
    }
    std::vector<std::size_t> support(w);
    for (int i = 0; i < w; ++i) support[i] = i;
    std::uint64_t p3 = detail::pow3(w);
    do {
        for (std::uint64_t letters = 0; letters < p3; ++letters) {
            PauliOperator p = pauli_identity(n);
            std::uint64_t base = p3;
            int ny = 0;
            for (int t = 0; t < w; ++t) {
                base /= 3;
                int digit = static_cast<int>((letters / base) % 3);
                detail::apply_letter(p, support[t], digit);
                if (digit == 1) ++ny;
            }
            p.phase = static_cast<std::uint8_t>(ny & 3);
            if (!visit(static_cast<const PauliOperator&>(p))) return;
        }
    } while (detail::next_combination(support, n));
}

}  // namespace hqc
