#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hqc/errors.hpp"
#include "hqc/hybrid.hpp"
#include "hqc/pauli.hpp"

namespace hqc {

// [[n,k:m,d]] for coset codes, ((n,K:M,d)) for general unions; the classical
// part and the distance may be omitted.
struct DeclaredParams {
    std::size_t n = 0;
    bool stabilizer_form = true;
    std::size_t k = 0, m = 0;                // stabilizer form
    unsigned long long K = 1, M = 1;         // union form, always populated
    std::optional<std::size_t> d;
};

struct CodeFile {
    std::optional<std::size_t> n;
    std::optional<DeclaredParams> declared;
    std::vector<std::string> quantum, classical;
    std::vector<std::vector<std::string>> inner;  // union form generator blocks
    bool has_quantum_section = false;
    bool has_classical_section = false;

    bool union_form() const { return !inner.empty(); }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline unsigned long long parse_number(const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CodeFileParseError("expected a number, got '" + s + "'", line);
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw CodeFileParseError("number out of range: '" + s + "'", line);
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

inline DeclaredParams parse_declared(const std::string& text, std::size_t line = 0) {
    std::string s = detail::trim(text);
    DeclaredParams p;
    std::string inner;
    if (s.size() > 4 && s.substr(0, 2) == "[[" && s.substr(s.size() - 2) == "]]") {
        p.stabilizer_form = true;
        inner = s.substr(2, s.size() - 4);
    } else if (s.size() > 4 && s.substr(0, 2) == "((" && s.substr(s.size() - 2) == "))") {
        p.stabilizer_form = false;
        inner = s.substr(2, s.size() - 4);
    } else {
        throw CodeFileParseError("declared parameters must look like [[n,k:m,d]] or ((n,K:M,d))",
                                 line);
    }
    std::vector<std::string> parts = detail::split(inner, ',');
    if (parts.size() < 2 || parts.size() > 3)
        throw CodeFileParseError("declared parameters need 2 or 3 comma-separated fields", line);
    p.n = detail::parse_number(detail::trim(parts[0]), line);
    std::vector<std::string> km = detail::split(parts[1], ':');
    if (km.size() > 2) throw CodeFileParseError("too many ':' in declared parameters", line);
    unsigned long long first = detail::parse_number(detail::trim(km[0]), line);
    unsigned long long second = km.size() == 2 ? detail::parse_number(detail::trim(km[1]), line) : 0;
    if (p.stabilizer_form) {
        p.k = first;
        p.m = second;
        if (p.k >= 64 || p.m >= 64)
            throw CodeFileParseError("declared k or m too large", line);
        p.K = 1ULL << p.k;
        p.M = 1ULL << p.m;
    } else {
        p.K = first;
        p.M = km.size() == 2 ? second : 1;
        if (p.K == 0 || p.M == 0) throw CodeFileParseError("declared K and M must be positive", line);
    }
    if (parts.size() == 3) p.d = detail::parse_number(detail::trim(parts[2]), line);
    return p;
}

inline std::string format_declared(const DeclaredParams& p) {
    std::ostringstream os;
    if (p.stabilizer_form) {
        os << "[[" << p.n << "," << p.k;
        if (p.m > 0) os << ":" << p.m;
        if (p.d) os << "," << *p.d;
        os << "]]";
    } else {
        os << "((" << p.n << "," << p.K << ":" << p.M;
        if (p.d) os << "," << *p.d;
        os << "))";
    }
    return os.str();
}

inline CodeFile parse_code_file(std::istream& in) {
    CodeFile cf;
    enum class Section { None, Quantum, Classical, Inner } section = Section::None;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s == "quantum:") {
            if (cf.union_form())
                throw CodeFileParseError("quantum section cannot follow inner sections", line);
            if (cf.has_quantum_section) throw CodeFileParseError("duplicate quantum section", line);
            cf.has_quantum_section = true;
            section = Section::Quantum;
            continue;
        }
        if (s == "classical:") {
            if (cf.union_form())
                throw CodeFileParseError("classical section cannot follow inner sections", line);
            if (cf.has_classical_section)
                throw CodeFileParseError("duplicate classical section", line);
            cf.has_classical_section = true;
            section = Section::Classical;
            continue;
        }
        if (s == "inner:") {
            if (cf.has_quantum_section || cf.has_classical_section)
                throw CodeFileParseError("inner sections cannot mix with quantum/classical", line);
            cf.inner.emplace_back();
            section = Section::Inner;
            continue;
        }
        if (section == Section::None) {
            std::size_t colon = s.find(':');
            if (colon == std::string::npos)
                throw CodeFileParseError("expected 'key: value' before the first section", line);
            std::string key = detail::trim(s.substr(0, colon));
            std::string value = detail::trim(s.substr(colon + 1));
            if (key == "n") {
                cf.n = detail::parse_number(value, line);
            } else if (key == "declared") {
                cf.declared = parse_declared(value, line);
            } else {
                throw CodeFileParseError("unknown header key '" + key + "'", line);
            }
            continue;
        }
        PauliOperator op;
        try {
            op = pauli_from_string(s);
        } catch (const PauliParseError& e) {
            throw CodeFileParseError(std::string("bad generator row: ") + e.what(), line);
        }
        if (cf.n && op.n != *cf.n)
            throw CodeFileParseError("generator length disagrees with declared n", line);
        switch (section) {
            case Section::Quantum: cf.quantum.push_back(s); break;
            case Section::Classical: cf.classical.push_back(s); break;
            case Section::Inner: cf.inner.back().push_back(s); break;
            default: break;
        }
    }
    if (!cf.has_quantum_section && cf.inner.empty())
        throw CodeFileParseError("file contains no generator sections", line ? line : 1);
    if (cf.has_quantum_section && cf.quantum.empty())
        throw CodeFileParseError("quantum section is empty", line ? line : 1);
    for (const auto& block : cf.inner)
        if (block.empty()) throw CodeFileParseError("inner section is empty", line ? line : 1);
    return cf;
}

inline CodeFile parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeFileParseError("cannot open '" + path + "'", 0);
    return parse_code_file(in);
}

inline HybridCode to_hybrid(const CodeFile& cf) {
    if (cf.union_form())
        throw std::invalid_argument("to_hybrid: file declares a union, not a coset code");
    return make_hybrid(cf.quantum, cf.classical);
}

inline StabilizerUnionCode to_union(const CodeFile& cf) {
    if (!cf.union_form()) return as_union(to_hybrid(cf));
    std::vector<StabilizerGroup> groups;
    for (const auto& block : cf.inner) groups.push_back(build_group(parse_pauli_rows(block)));
    return make_union(std::move(groups));
}

inline DeclaredParams computed_params(const HybridCode& h, std::optional<std::size_t> d) {
    DeclaredParams p;
    p.stabilizer_form = true;
    p.n = h.n;
    p.k = h.k();
    p.m = h.m();
    p.K = p.k < 64 ? (1ULL << p.k) : 0;
    p.M = p.m < 64 ? (1ULL << p.m) : 0;
    p.d = d;
    return p;
}

inline std::string write_code_file(const HybridCode& h, std::optional<std::size_t> d = {}) {
    std::ostringstream os;
    os << "n: " << h.n << "\n";
    os << "declared: " << format_declared(computed_params(h, d)) << "\n";
    os << "quantum:\n";
    for (const auto& g : h.quantum.basis) os << to_string(g) << "\n";
    if (!h.classical.empty()) {
        os << "classical:\n";
        for (const auto& c : h.classical) os << to_string(c) << "\n";
    }
    return os.str();
}

inline std::string write_code_file(const StabilizerUnionCode& u,
                                   std::optional<std::size_t> d = {}) {
    std::ostringstream os;
    DeclaredParams p;
    p.stabilizer_form = false;
    p.n = u.n;
    std::size_t r = u.inner[0].rank();
    p.K = (u.n - r) < 64 ? (1ULL << (u.n - r)) : 0;
    p.M = u.M();
    p.d = d;
    os << "n: " << u.n << "\n";
    os << "declared: " << format_declared(p) << "\n";
    for (const auto& s : u.inner) {
        os << "inner:\n";
        for (const auto& g : s.basis) os << to_string(g) << "\n";
    }
    return os.str();
}

}  // namespace hqc
