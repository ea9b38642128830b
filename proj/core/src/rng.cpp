#include "kswitch/rng.hpp"

#include <limits>

namespace kswitch {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

Rng Rng::substream(std::string_view name) const {
    return Rng(mix64(seed_ ^ mix64(hash_name(name))));
}

Rng Rng::substream(std::uint64_t index) const {
    return Rng(mix64(seed_ + mix64(index + 0x51ed27ULL)));
}

std::uint64_t Rng::next_u64() { return engine_(); }

std::uint64_t Rng::uniform(std::uint64_t bound) {
    // Rejection sampling on the top of the range avoids modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) { return unit() < p; }

}  // namespace kswitch
