#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pdxfit {

// Derives an independent generator from a base seed and an index path, so
// parallel workers draw from streams fixed by their indices rather than by
// scheduling order.
inline std::mt19937_64 make_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) {
  std::seed_seq seq_init = [&] {
    std::vector<std::uint32_t> words;
    words.push_back(static_cast<std::uint32_t>(seed));
    words.push_back(static_cast<std::uint32_t>(seed >> 32));
    for (std::uint64_t p : path) {
      words.push_back(static_cast<std::uint32_t>(p));
      words.push_back(static_cast<std::uint32_t>(p >> 32));
    }
    return std::seed_seq(words.begin(), words.end());
  }();
  return std::mt19937_64(seq_init);
}

// Multiplicative log-normal noise factor with E[factor] = 1.
inline double lognormal_noise_factor(std::mt19937_64& rng, double sigma) {
  std::normal_distribution<double> normal(-0.5 * sigma * sigma, sigma);
  return std::exp(normal(rng));
}

}  // namespace pdxfit
