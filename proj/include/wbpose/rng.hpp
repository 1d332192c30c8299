#pragma once

#include <cstdint>
#include <string_view>

namespace wbpose {

/// Explicit-state SplitMix64 generator. Every draw takes a state value and
/// returns the advanced one, so streams are replayable and trivially portable.
struct RngState {
  std::uint64_t s = 0;

  friend bool operator==(const RngState&, const RngState&) = default;
};

inline constexpr std::string_view kRngAlgorithm = "splitmix64/u53";

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Returns the next 64-bit output and advances `state`.
constexpr std::uint64_t next_u64(RngState& state) noexcept {
  state.s += 0x9e3779b97f4a7c15ULL;
  return splitmix64_mix(state.s);
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double next_unit(RngState& state) noexcept {
  return static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
}

constexpr double next_uniform(RngState& state, double lo, double hi) noexcept {
  return lo + (hi - lo) * next_unit(state);
}

/// Independent child stream for (seed, index); used to make draws depend on
/// the pair alone rather than on how many draws came before.
constexpr RngState split(std::uint64_t seed, std::uint64_t index) noexcept {
  return RngState{splitmix64_mix(seed ^ splitmix64_mix(index + 0x632be59bd9b4e019ULL))};
}

}  // namespace wbpose
