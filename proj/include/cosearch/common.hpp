// SPDX-License-Identifier: Apache-2.0
//
// Shared error types, stable hashing and portable seeded sampling.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cosearch {

class SpaceExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for inputs that carry no ranking information (constant vectors,
/// too few samples, mismatched lengths).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PartitionInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a. Stable across platforms and standard library versions,
/// unlike std::hash.
constexpr std::uint64_t stable_hash(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seeded generator whose output sequence does not depend on the standard
/// library implementation. std::uniform_*_distribution is implementation
/// defined, so bounded draws are done here with rejection sampling.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cosearch
