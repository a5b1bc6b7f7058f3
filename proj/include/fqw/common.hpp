#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqw {

enum class Err {
    NotPrime,
    Overflow,
    DivisionByZero,
    DimensionMismatch,
    ContextMismatch,
    NotNilpotent,
    NotRegularNilpotent,
    EigenvalueMismatch,
    NotFound,
    BudgetExceeded,
    PairNotFound,
    SpecialSolutionNotFound,
    CharTwo,
    PreconditionViolated,
    NotDecomposed,
    ParseError,
    TooLarge,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

// Deterministic splitmix64 step, used to derive per-call RNG seeds.
inline uint64_t seed_mix(uint64_t seed, uint64_t tag) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace fqw
