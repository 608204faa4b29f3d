#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fsdim/fst.hpp"

namespace fsdim {

struct PoolSpec {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t max_states = 4;
  unsigned base = 2;
  std::size_t max_burst = 2;
};

/// Uniform draw in [0, bound) from the raw 64-bit stream. mt19937_64 output
/// is fixed by the standard, so pools are identical across toolchains.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

/// Random complete transducers: state count uniform in [1, max_states],
/// start 0, each (q, a) with a uniform target and an output of uniform
/// length in [0, max_burst] with uniform digits. Pure function of the spec.
std::vector<Fst> gen_pool(const PoolSpec& spec);

/// `pool_<seed>_<i>.fst`.
std::string pool_file_name(std::uint64_t seed, std::size_t index);

/// Writes the pool into dir (created if needed); returns the paths written.
std::vector<std::filesystem::path> write_pool(const PoolSpec& spec,
                                              const std::filesystem::path& dir);

}  // namespace fsdim
