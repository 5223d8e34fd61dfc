// Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "imbhn/rng.hpp"

namespace imbhn {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t v : path) {
    h = mix64(h ^ (v + kGolden));
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, Stream stream) {
  return derive_seed(master, {static_cast<std::uint64_t>(stream)});
}

std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                          std::uint64_t a) {
  return derive_seed(master, {static_cast<std::uint64_t>(stream), a});
}

std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a,
                          std::uint64_t b) {
  return derive_seed(master, {static_cast<std::uint64_t>(stream), a, b});
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  // Rejection sampling on the top range multiple of n.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

}  // namespace imbhn
