#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "sakaguchi/errors.hpp"

namespace testutil {

// splitmix64; deterministic across platforms so property tests are replayable
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// runs fn, returns the library error code it threw, or nullopt if it returned
template <class Fn>
std::optional<sakaguchi::errc> code_of(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const sakaguchi::error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace testutil
