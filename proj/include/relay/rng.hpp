#pragma once

#include <cstdint>
#include <cmath>
#include <string_view>

namespace relay {

// Deterministic, platform-independent random streams. The standard
// distributions are implementation-defined, so draws are done by hand here:
// identical seeds must give identical experiment files on any build.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Builds a child-stream key from a root seed plus a mixed-type path, e.g.
// rng_key(seed, "targets", participant). Order matters; collisions between
// distinct paths are not a concern at these sizes.
inline std::uint64_t rng_mix(std::uint64_t h, std::uint64_t v) {
    return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

inline std::uint64_t rng_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h);
}

inline std::uint64_t rng_key(std::uint64_t seed) { return splitmix64(seed); }

template <typename T, typename... Rest>
std::uint64_t rng_key(std::uint64_t seed, T part, Rest... rest) {
    std::uint64_t v;
    if constexpr (std::is_convertible_v<T, std::string_view>)
        v = rng_hash(std::string_view(part));
    else
        v = static_cast<std::uint64_t>(part);
    return rng_key(rng_mix(splitmix64(seed), v), rest...);
}

class RngStream {
  public:
    explicit RngStream(std::uint64_t key = 0) : state_(key) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi], inclusive. Rejection keeps it unbiased.
    int next_int(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    // Box-Muller, no cached spare so the draw count is predictable.
    double next_gaussian() {
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace relay
