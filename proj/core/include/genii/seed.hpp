#pragma once

#include <cstdint>
#include <string_view>

namespace genii {

// h(s) = sum s[i] * 31^(n-1-i) over the Unicode scalar values of s, with
// wrapping 32-bit arithmetic. Invalid UTF-8 bytes count as U+FFFD.
std::uint32_t hash_name(std::string_view utf8);

struct Seed {
  std::uint32_t value = 0;

  static Seed from_name(std::string_view name) { return Seed{hash_name(name)}; }
  bool operator==(const Seed&) const = default;
};

// xorshift64* stream. The 64-bit state is initialised from the seed with one
// splitmix64 step; a zero state is replaced by 0x9E3779B97F4A7C15 so seed 0
// still yields a live stream. Each draw:
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
class Rng {
 public:
  explicit Rng(Seed seed) noexcept;

  std::uint64_t next_u64() noexcept;
  std::uint32_t next_u32() noexcept { return static_cast<std::uint32_t>(next_u64() >> 32); }
  // Uniform in [0, 1), 53 bits.
  double next_double() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_double(); }

  // Satisfies UniformRandomBitGenerator so <random> distributions can be used.
  using result_type = std::uint64_t;
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next_u64(); }

 private:
  std::uint64_t state_;
};

inline Rng seeded_rng(Seed seed) noexcept { return Rng(seed); }

}  // namespace genii
