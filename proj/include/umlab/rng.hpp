#pragma once
#include <cstdint>

namespace umlab {

// splitmix64: tiny, seed-stable across platforms and compilers, which keeps
// generated artifacts byte-identical for a given seed everywhere.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n); n > 0 (modulo bias irrelevant for tiny n)
    uint64_t below(uint64_t n) { return next() % n; }
    long range(long lo, long hi) { return lo + (long)below((uint64_t)(hi - lo + 1)); }
};

} // namespace umlab
