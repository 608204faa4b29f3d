#include "fsdim/pool.hpp"

#include "fsdim/error.hpp"

namespace fsdim {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Fst> gen_pool(const PoolSpec& spec) {
  check_base(spec.base);
  if (spec.count == 0) throw Error(ErrorCode::InvalidArgument, "pool count must be >= 1");
  if (spec.max_states == 0) throw Error(ErrorCode::InvalidArgument, "max states must be >= 1");
  std::mt19937_64 rng(spec.seed);
  std::vector<Fst> pool;
  pool.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::size_t states = 1 + draw(rng, spec.max_states);
    std::vector<Edge> edges;
    edges.reserve(states * spec.base);
    for (std::size_t e = 0; e < states * spec.base; ++e) {
      Edge edge;
      edge.next = static_cast<StateId>(draw(rng, states));
      std::size_t len = draw(rng, spec.max_burst + 1);
      for (std::size_t k = 0; k < len; ++k) edge.output.push_back(static_cast<Digit>(draw(rng, spec.base)));
      edges.push_back(std::move(edge));
    }
    pool.emplace_back(spec.base, states, 0, std::move(edges));
  }
  return pool;
}

std::string pool_file_name(std::uint64_t seed, std::size_t index) {
  return "pool_" + std::to_string(seed) + "_" + std::to_string(index) + ".fst";
}

std::vector<std::filesystem::path> write_pool(const PoolSpec& spec,
                                              const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory '" + dir.string() + "'");
  std::vector<std::filesystem::path> paths;
  auto pool = gen_pool(spec);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    paths.push_back(dir / pool_file_name(spec.seed, i));
    save_fst(pool[i], paths.back().string());
  }
  return paths;
}

}  // namespace fsdim
