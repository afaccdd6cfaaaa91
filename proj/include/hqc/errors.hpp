#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqc {

// Row indices carried by errors are 1-based, matching report output.
struct AnticommutingPair : std::runtime_error {
    AnticommutingPair(std::size_t i, std::size_t j)
        : std::runtime_error("AnticommutingPair(" + std::to_string(i) + "," + std::to_string(j) + ")"),
          first_row(i),
          second_row(j) {}
    std::size_t first_row;
    std::size_t second_row;
};

struct DependentGeneratorWithSignConflict : std::runtime_error {
    explicit DependentGeneratorWithSignConflict(std::size_t row)
        : std::runtime_error("DependentGeneratorWithSignConflict(row " + std::to_string(row) + ")"),
          row(row) {}
    std::size_t row;
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error("CapExceeded: " + what) {}
};

struct DenseLimitExceeded : std::runtime_error {
    explicit DenseLimitExceeded(std::size_t n, std::size_t limit)
        : std::runtime_error("DenseLimitExceeded: n=" + std::to_string(n) +
                             " exceeds dense limit " + std::to_string(limit)) {}
};

struct EvenLengthRejected : std::runtime_error {
    explicit EvenLengthRejected(std::size_t n)
        : std::runtime_error("EvenLengthRejected: the all-X and truncated all-Z rows anticommute for n=" +
                             std::to_string(n)) {}
};

struct DistanceVerificationFailed : std::runtime_error {
    explicit DistanceVerificationFailed(const std::string& what)
        : std::runtime_error("DistanceVerificationFailed: " + what) {}
};

struct ShadowUndefinedForQ : std::runtime_error {
    explicit ShadowUndefinedForQ(unsigned q)
        : std::runtime_error("ShadowUndefinedForQ: shadow inequalities are defined for q=2, got q=" +
                             std::to_string(q)),
          q(q) {}
    unsigned q;
};

struct PauliParseError : std::runtime_error {
    PauliParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

struct CodeFileParseError : std::runtime_error {
    CodeFileParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace hqc
