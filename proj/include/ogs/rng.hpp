#pragma once

#include <cstdint>
#include <random>

namespace ogs {

// Thin deterministic wrapper over mt19937_64. Distribution helpers are
// hand-rolled because std::uniform_int_distribution is not portable
// across standard library implementations.
class SeededRng {
  public:
    explicit SeededRng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n), n >= 1, by rejection
    uint64_t below(uint64_t n) {
        uint64_t lim = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t x;
        do { x = eng_(); } while (x >= lim);
        return x % n;
    }

    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1) != 0; }

  private:
    std::mt19937_64 eng_;
};

} // namespace ogs
