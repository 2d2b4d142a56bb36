#ifndef ZETAREG_RANDOM_HPP_
#define ZETAREG_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace zetareg {

// Independent stream for task `index` of a run seeded with `seed`.
// Results never depend on the order in which tasks are evaluated.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x7a657461u};
  return std::mt19937_64(seq);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace zetareg

#endif  // ZETAREG_RANDOM_HPP_
