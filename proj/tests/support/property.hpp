// Minimal seeded property runner: each case gets its own mt19937_64 seeded
// from (base seed, case index); failures report the case seed so a single
// case can be replayed.
#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

namespace prop {

inline constexpr int kDefaultCases = 1000;

inline std::uint64_t case_seed(std::uint64_t base, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// fn(std::mt19937_64&) -> ::testing::AssertionResult
template <class Fn>
::testing::AssertionResult for_all(Fn&& fn, int cases = kDefaultCases, std::uint64_t base = 0x5eed) {
  for (int i = 0; i < cases; ++i) {
    std::uint64_t s = case_seed(base, i);
    std::mt19937_64 rng(s);
    ::testing::AssertionResult r = fn(rng);
    if (!r) return ::testing::AssertionFailure() << "case " << i << " (seed " << s << "): " << r.message();
  }
  return ::testing::AssertionSuccess();
}

}  // namespace prop
