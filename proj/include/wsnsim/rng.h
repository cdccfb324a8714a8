#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace wsnsim {

// Deterministic uniform stream shared by placement, class assignment, and all
// per-round election draws. The generator (mt19937_64) and both derivations
// below are pinned: changing either invalidates every golden fixture and any
// cross-language port, so treat them as part of the output format.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // uniform [0, 1), 53-bit mantissa
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform {0, ..., bound-1}; modulo bias is immaterial at the bounds used
    // here (node counts) and keeps the derivation trivial to re-pin
    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(engine_() % bound);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsnsim
