#include "infoq/rng.hpp"

#include <array>

#include "infoq/error.hpp"

namespace infoq {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
  const std::array<std::uint32_t, 6> words{
      static_cast<std::uint32_t>(seed),   static_cast<std::uint32_t>(seed >> 32U),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U),
      static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32U)};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
    : engine_(make_engine(seed, stream, substream)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw DomainError("Rng::below needs a positive bound");
  }
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) {
    x = next();
  }
  return x % bound;
}

}  // namespace infoq
