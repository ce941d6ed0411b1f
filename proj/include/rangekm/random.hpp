#ifndef RANGEKM_RANDOM_HPP
#define RANGEKM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rangekm {

using Engine = std::mt19937_64;

/// splitmix64 finaliser; derives independent child seeds from a parent seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Uniform integer in [0, bound) by rejection sampling.
 *
 * std::uniform_int_distribution is implementation-defined, so seeded
 * selections would differ between standard libraries.
 */
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = Engine::max() - (Engine::max() % bound + 1) % bound;
    std::uint64_t draw;
    do {
        draw = engine();
    } while (draw > limit);
    return draw % bound;
}

} // namespace rangekm

#endif
