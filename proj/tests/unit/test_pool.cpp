#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fsdim/pool.hpp"

using namespace fsdim;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Pool, Deterministic) {
  PoolSpec spec{7, 5, 4, 2, 2};
  auto a = gen_pool(spec);
  auto b = gen_pool(spec);
  ASSERT_EQ(a.size(), 5u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(format_fst(a[i]), format_fst(b[i]));
}

TEST(Pool, SeedsDiffer) {
  EXPECT_NE(format_fst(gen_pool({7, 1, 4, 2, 2})[0]), format_fst(gen_pool({8, 1, 4, 2, 2})[0]));
}

TEST(Pool, RespectsBounds) {
  for (const Fst& t : gen_pool({99, 200, 4, 3, 5})) {
    EXPECT_GE(t.state_count(), 1u);
    EXPECT_LE(t.state_count(), 4u);
    EXPECT_EQ(t.start(), 0u);
    EXPECT_EQ(t.base(), 3u);
    EXPECT_LE(t.max_burst(), 5u);
  }
}

TEST(Pool, FixedFirstMachine) {
  // Reproduced independently with a separate mt19937_64 implementation.
  EXPECT_EQ(format_fst(gen_pool({7, 1, 4, 2, 2})[0]),
            "fst 1\nbase 2\nstates 4\nstart 0\n"
            "t 0 0 2 -\nt 0 1 2 0\nt 1 0 1 1\nt 1 1 0 1\n"
            "t 2 0 3 -\nt 2 1 0 11\nt 3 0 3 10\nt 3 1 0 1\n");
  EXPECT_EQ(format_fst(gen_pool({7, 3, 4, 2, 2})[0]), format_fst(gen_pool({7, 1, 4, 2, 2})[0]));
}

TEST(Pool, WritesParseableFiles) {
  auto dir = std::filesystem::temp_directory_path() / "fsdim_pool_test";
  std::filesystem::remove_all(dir);
  auto paths = write_pool({7, 200, 4, 2, 2}, dir);
  ASSERT_EQ(paths.size(), 200u);
  EXPECT_EQ(paths[3].filename(), "pool_7_3.fst");
  auto pool = gen_pool({7, 200, 4, 2, 2});
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::string text = slurp(paths[i]);
    EXPECT_EQ(parse_fst(text), pool[i]);
    EXPECT_EQ(text, format_fst(pool[i]));
  }
  auto again = write_pool({7, 200, 4, 2, 2}, dir);
  EXPECT_EQ(slurp(again[0]), slurp(paths[0]));
  std::filesystem::remove_all(dir);
}
