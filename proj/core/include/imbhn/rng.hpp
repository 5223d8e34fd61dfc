// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace imbhn {

// Every random decision in the library (fold shuffles, random relevance
// initialization, robustness draws) is keyed off one master seed through
// derive_seed(master, {stream, indices...}). Reruns with the same master
// seed reproduce every file byte for byte.

/// splitmix64 finalizer; full-period 64-bit mixing of a single word.
std::uint64_t mix64(std::uint64_t x);

/// Named sub-streams of the master seed.
enum class Stream : std::uint64_t {
  folds = 1,  // fold-plan shuffles
  init = 2,   // random relevance initialization, one per fold
  draw = 3,   // robustness subset draws, one per (rate, trial)
};

/// Derives an independent seed from a master seed and a path of stream
/// identifiers, e.g. derive_seed(master, {Stream::init, fold}).
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path);
std::uint64_t derive_seed(std::uint64_t master, Stream stream);
std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                          std::uint64_t a);
std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a,
                          std::uint64_t b);

/// Deterministic random source. Wraps mt19937_64 but generates bounded
/// integers, [0,1) doubles and shuffles itself, so sequences do not depend
/// on the standard library's unspecified distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Unbiased integer in [0, n) via rejection sampling. n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  /// 53-bit uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// In-place Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace imbhn
