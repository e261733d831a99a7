#pragma once

#include <cstdint>
#include <random>

namespace uavsim {

// mt19937_64 with hand-rolled draw helpers. The engine's output sequence is
// fixed by the standard, so seeded streams do not depend on library
// internals the way std distributions do.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // [lo, hi)
    double uniform_double(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // [lo, hi], inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace uavsim
