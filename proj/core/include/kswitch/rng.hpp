#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace kswitch {

/// Seeded 64-bit generator with named substreams.
///
/// Draws are computed from raw engine output (no std distributions), so a
/// given seed yields the same sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0);

    /// Independent stream derived from this seed and a name ("graph-gen", "chain", "scan").
    Rng substream(std::string_view name) const;
    Rng substream(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64();
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound);
    /// Uniform in [0, 1) with 53 random bits.
    double unit();
    bool bernoulli(double p);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_name(std::string_view name);

}  // namespace kswitch
