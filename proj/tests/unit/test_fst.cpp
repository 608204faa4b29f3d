#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "fsdim/error.hpp"
#include "fsdim/fst.hpp"
#include "fsdim/pool.hpp"

using namespace fsdim;
using fsdim::testing::bits;
using fsdim::testing::doubling;

namespace {

ErrorCode parse_error(const std::string& text, std::string* message = nullptr) {
  try {
    parse_fst(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return ErrorCode::Io;
}

const char* kIdentityText = "fst 1\nbase 2\nstates 1\nstart 0\nt 0 0 0 0\nt 0 1 0 1\n";

}  // namespace

TEST(Run, Examples) {
  EXPECT_EQ(to_string(run(make_identity(2), bits("0110"))), "0110");
  EXPECT_EQ(to_string(run(doubling(), bits("01"))), "0011");
  EXPECT_TRUE(run(doubling(), {}).empty());
}

TEST(Run, RejectsForeignDigit) {
  Digits pi{2};
  EXPECT_THROW(run(make_identity(2), pi), Error);
}

TEST(Run, PrefixCompositional) {
  auto pool = gen_pool({5, 40, 4, 3, 3});
  std::mt19937_64 rng(5);
  for (const Fst& t : pool) {
    for (int trial = 0; trial < 20; ++trial) {
      Digits u(rng() % 7), v(rng() % 7);
      for (auto& d : u) d = static_cast<Digit>(rng() % 3);
      for (auto& d : v) d = static_cast<Digit>(rng() % 3);
      Digits uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      RunResult ru = run_from(t, t.start(), u);
      RunResult rv = run_from(t, ru.state, v);
      Digits joined = ru.output;
      joined.insert(joined.end(), rv.output.begin(), rv.output.end());
      EXPECT_EQ(run(t, uv), joined);
      EXPECT_LE(run(t, uv).size(), t.max_burst() * uv.size());
    }
  }
}

TEST(ComplementLift, Examples) {
  Fst lifted = complement_lift(make_identity(2));
  EXPECT_EQ(to_string(lifted.edge(0, 0).output), "1");
  EXPECT_EQ(to_string(lifted.edge(0, 1).output), "0");
  EXPECT_EQ(to_string(run(lifted, bits("01"))), "10");
  EXPECT_EQ(to_string(run(complement_lift(doubling()), bits("01"))), "1100");
  EXPECT_EQ(complement_lift(complement_lift(doubling())), doubling());
}

TEST(ComplementLift, PreservesStructureAndComplementsRuns) {
  for (const Fst& t : gen_pool({9, 30, 4, 4, 3})) {
    Fst c = complement_lift(t);
    EXPECT_EQ(c.state_count(), t.state_count());
    EXPECT_EQ(c.start(), t.start());
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
      EXPECT_EQ(c.edges()[i].next, t.edges()[i].next);
    }
    Digits pi = bits("0123012", 4);
    EXPECT_EQ(run(c, pi), comp(run(t, pi), 4));
  }
}

TEST(Format, ParseIdentity) {
  Fst t = parse_fst(kIdentityText);
  EXPECT_EQ(t, make_identity(2));
  EXPECT_EQ(format_fst(t), kIdentityText);
}

TEST(Format, CommentsBlankLinesAndLambda) {
  Fst t = parse_fst(
      "# header\nfst 1\n\nbase 3\nstates 2   # two\nstart 1\n"
      "t 1 2 0 -\nt 0 0 0 0\nt 0 1 1 12\nt 0 2 0 -\nt 1 0 1 2\nt 1 1 0 00\n");
  EXPECT_EQ(t.state_count(), 2u);
  EXPECT_EQ(t.start(), 1u);
  EXPECT_TRUE(t.edge(1, 2).output.empty());
  EXPECT_EQ(t.max_burst(), 2u);
  EXPECT_EQ(format_fst(t),
            "fst 1\nbase 3\nstates 2\nstart 1\n"
            "t 0 0 0 0\nt 0 1 1 12\nt 0 2 0 -\nt 1 0 1 2\nt 1 1 0 00\nt 1 2 0 -\n");
}

TEST(Format, RoundTripPool) {
  for (const Fst& t : gen_pool({3, 100, 4, 2, 2})) {
    std::string text = format_fst(t);
    Fst back = parse_fst(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(format_fst(back), text);
  }
}

TEST(Format, Errors) {
  std::string msg;
  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 0\nt 0 0 0 0\n", &msg),
            ErrorCode::MissingTransition);
  EXPECT_NE(msg.find("(0,1)"), std::string::npos);

  EXPECT_EQ(parse_error(std::string(kIdentityText) + "t 0 1 0 1\n", &msg),
            ErrorCode::DuplicateTransition);
  EXPECT_EQ(msg.substr(0, 4), "7:1:");

  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 0\nt 0 0 1 0\nt 0 1 0 1\n", &msg),
            ErrorCode::StateOutOfRange);
  EXPECT_EQ(msg.substr(0, 4), "5:7:");

  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 0\nt 0 0 0 2\nt 0 1 0 1\n", &msg),
            ErrorCode::InvalidDigit);
  EXPECT_EQ(msg.substr(0, 4), "5:9:");

  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 0\nt 0 2 0 0\n"), ErrorCode::InvalidDigit);
  EXPECT_EQ(parse_error("fst 1\nbase 11\nstates 1\nstart 0\n"), ErrorCode::InvalidBase);
  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 3\n"), ErrorCode::StateOutOfRange);
  EXPECT_EQ(parse_error("fst 2\nbase 2\nstates 1\nstart 0\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("base 2\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates 1\nstart 0\nt 0 0 0\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("fst 1\nbase 2\nstates x\n", &msg), ErrorCode::SyntaxError);
  EXPECT_EQ(msg.substr(0, 4), "3:8:");
  EXPECT_EQ(parse_error("fst 1\nbase 2\n"), ErrorCode::SyntaxError);
}

TEST(Format, LoadMissingFileNamesPath) {
  try {
    load_fst("/no/such/file.fst");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
    EXPECT_NE(std::string(e.what()).find("/no/such/file.fst"), std::string::npos);
  }
}

TEST(Format, SaveLoadRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "fsdim_fst_roundtrip.fst";
  save_fst(doubling(3), path.string());
  EXPECT_EQ(load_fst(path.string()), doubling(3));
  std::filesystem::remove(path);
}

TEST(Families, PeriodicDecoder) {
  Fst t = make_periodic_decoder(bits("01"), 3, 2);
  EXPECT_EQ(to_string(run(t, bits("0"))), "010101");
  EXPECT_EQ(to_string(run(t, bits("1"))), "010101");
  EXPECT_THROW(make_periodic_decoder({}, 1, 2), Error);
  try {
    make_periodic_decoder({}, 1, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyPattern);
  }
}

TEST(Families, IdentityRunsAnyWord) {
  std::mt19937_64 rng(3);
  for (unsigned b = 2; b <= 10; ++b) {
    Digits w(13);
    for (auto& d : w) d = static_cast<Digit>(rng() % b);
    EXPECT_EQ(run(make_identity(b), w), w);
  }
}

TEST(Huffman, SingleBlockGetsCodewordZero) {
  DigitStream train = DigitStream::open(PeriodicSpec{"01"}, 2);
  Fst t = make_block_huffman(train, 16, 2, 2);
  EXPECT_EQ(to_string(run(t, bits("00"))), "0101");
  HuffmanCode code = build_huffman_code(train, 16, 2, 2);
  ASSERT_EQ(code.blocks.size(), 1u);
  EXPECT_EQ(to_string(code.codewords[0]), "0");
  // Digit 1 leaves the code tree and self-loops silently.
  EXPECT_TRUE(run(t, bits("1")).empty());
}

TEST(Huffman, Errors) {
  DigitStream train = DigitStream::champernowne(2);
  try {
    make_block_huffman(train, 1, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  try {
    make_block_huffman(train, 0, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientTraining);
  }
}

TEST(Huffman, PrefixFreeAndDecodesTraining) {
  for (unsigned b : {2u, 3u, 5u, 10u}) {
    for (std::size_t k : {1u, 2u, 3u}) {
      DigitStream train = DigitStream::champernowne(b);
      std::size_t len = 300 / k * k;
      HuffmanCode code = build_huffman_code(train, len, k, b);
      for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        ASSERT_FALSE(code.codewords[i].empty());
        for (std::size_t j = 0; j < code.codewords.size(); ++j) {
          if (i == j) continue;
          const Digits& a = code.codewords[i];
          const Digits& c = code.codewords[j];
          bool prefix = a.size() <= c.size() && std::equal(a.begin(), a.end(), c.begin());
          EXPECT_FALSE(prefix) << "base " << b << " k " << k;
        }
      }
      // Encoding the training prefix and running the decoder gives it back.
      Fst t = make_block_huffman(train, len, k, b);
      Digits digits = train.prefix(len);
      Digits encoded;
      for (std::size_t i = 0; i < len; i += k) {
        Digits block(digits.begin() + static_cast<std::ptrdiff_t>(i),
                     digits.begin() + static_cast<std::ptrdiff_t>(i + k));
        auto it = std::find(code.blocks.begin(), code.blocks.end(), block);
        ASSERT_NE(it, code.blocks.end());
        const Digits& cw = code.codewords[static_cast<std::size_t>(it - code.blocks.begin())];
        encoded.insert(encoded.end(), cw.begin(), cw.end());
      }
      EXPECT_EQ(run(t, encoded), digits);
    }
  }
}

TEST(Huffman, FrequentBlocksGetShorterCodewords) {
  // blocks per period: 00 x4, 01 x1, 10 x1
  DigitStream train = DigitStream::open(PeriodicSpec{"000000000110"}, 2);
  HuffmanCode code = build_huffman_code(train, 120, 2, 2);
  ASSERT_EQ(code.blocks.size(), 3u);
  EXPECT_EQ(to_string(code.blocks[0]), "00");
  EXPECT_EQ(code.codewords[0].size(), 1u);
  EXPECT_EQ(code.codewords[1].size(), 2u);
  EXPECT_EQ(code.codewords[2].size(), 2u);
  Fst t = make_block_huffman(train, 120, 2, 2);
  EXPECT_EQ(t.state_count(), 2u);
}

TEST(Huffman, TernaryPadsWithDummies) {
  // blocks per period: 00 x2, 01, 02, 11; four leaves plus one dummy
  DigitStream train = DigitStream::open(PeriodicSpec{"0001021100"}, 3);
  HuffmanCode code = build_huffman_code(train, 100, 2, 3);
  ASSERT_EQ(code.blocks.size(), 4u);
  std::map<std::string, std::size_t> len;
  for (std::size_t i = 0; i < code.blocks.size(); ++i) {
    len[to_string(code.blocks[i])] = code.codewords[i].size();
  }
  EXPECT_EQ(len["00"], 1u);
  EXPECT_EQ(len["11"], 1u);
  EXPECT_EQ(len["01"], 2u);
  EXPECT_EQ(len["02"], 2u);
  Fst t = make_block_huffman(train, 100, 2, 3);
  EXPECT_EQ(t.state_count(), 2u);
}
