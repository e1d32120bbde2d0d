#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <random>

namespace hcolor {

// Error taxonomy shared by the whole library. The CLI maps kinds to exit
// codes: usage/parse -> 1, class_violation -> 2, cap_exceeded -> 3.
enum class ErrorKind {
    invalid_argument,   // bad parameters, malformed input, dimension mismatch
    class_violation,    // input outside the promised graph class / structure
    cap_exceeded,       // configured size, budget, or pattern cap exceeded
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
    throw Error(ErrorKind::invalid_argument, msg);
}
[[noreturn]] inline void fail_class(const std::string& msg) {
    throw Error(ErrorKind::class_violation, msg);
}
[[noreturn]] inline void fail_cap(const std::string& msg) {
    throw Error(ErrorKind::cap_exceeded, msg);
}

// Deterministic RNG wrapper. mt19937_64 is fully specified by the C++
// standard, and the bounded draws below avoid std::uniform_int_distribution,
// whose output is implementation-defined. Same seed => same corpus anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling, no bias.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) fail_invalid("Rng::next_below: bound must be positive");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    int next_int(int lo, int hi) {  // inclusive range
        if (lo > hi) fail_invalid("Rng::next_int: empty range");
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Bernoulli(p) using a 53-bit fraction.
    bool next_bool(double p) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hcolor
