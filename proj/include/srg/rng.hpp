#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace srg {

/// xorshift64* generator (shifts 12/25/27, multiplier 2685821657736338717).
/// Seed 0 is remapped to 0x9E3779B97F4A7C15 since the all-zero state is a
/// fixed point. Chosen over std::mt19937 so permutation sweeps reproduce
/// bit-for-bit across implementations; constants are part of the file-format
/// contract (see README).
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ull;
  }

  /// Uniform-ish draw in [0, bound) by modulo reduction; the bias is
  /// irrelevant at permutation-sweep scale and keeps the contract trivial
  /// to restate in other languages.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates: for i = n-1 .. 1, swap(v[i], v[below(i+1)]).
template <typename T>
void shuffle(std::vector<T>& v, Xorshift64Star& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<std::size_t> random_permutation(std::size_t n, Xorshift64Star& rng);

}  // namespace srg
