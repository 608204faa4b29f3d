#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fsdim/dimension.hpp"
#include "fsdim/error.hpp"
#include "fsdim/pool.hpp"

using namespace fsdim;
using fsdim::testing::bits;
using fsdim::testing::q;
using fsdim::testing::rat;

namespace {

EstimateOptions opts(std::size_t n_max) {
  EstimateOptions o;
  o.n_max = n_max;
  return o;
}

Family periodic(std::string_view pattern, std::size_t copies) {
  return {{std::string(pattern) + "x" + std::to_string(copies),
           make_periodic_decoder(bits(pattern), copies, 2)}};
}

DigitStream periodic_stream(const std::string& pattern) {
  return DigitStream::open(PeriodicSpec{pattern}, 2);
}

}  // namespace

TEST(Window, Bounds) {
  Window w = window_for(opts(40));
  EXPECT_EQ(w.lo, 20u);
  EXPECT_EQ(w.hi, 40u);
  EstimateOptions o = opts(7);
  w = window_for(o);
  EXPECT_EQ(w.lo, 4u);
  o.window_frac = 0;
  EXPECT_EQ(window_for(o).lo, 1u);
  EXPECT_THROW(window_for(opts(1)), Error);
}

TEST(PointEstimate, IdentityOneThird) {
  Family f{{"identity", make_identity(2)}};
  EstimateReport r = dim_point_estimate(f, rat(1, 3), opts(20));
  // cost n-1 on the window [10, 20]
  EXPECT_EQ(r.estimate, q(9, 10));
  EXPECT_EQ(r.window.lo, 10u);
  ASSERT_EQ(r.per_transducer.size(), 1u);
  EXPECT_EQ(r.per_transducer[0].rows.size(), 11u);
  EXPECT_EQ(dim_point_estimate(f, rat(1, 3), opts(40)).estimate, q(19, 20));
}

TEST(PointEstimate, ZeroIsFree) {
  Family f{{"identity", make_identity(2)}};
  EXPECT_EQ(dim_point_estimate(f, rat(0, 1), opts(20)).estimate, q(0, 1));
}

TEST(PointEstimate, PeriodicDecoders) {
  // cost ceil((n-1) / 2k); minimum of cost/n over [30, 60]
  EXPECT_EQ(dim_point_estimate(periodic("01", 1), rat(1, 3), opts(60)).estimate, q(15, 31));
  EXPECT_EQ(dim_point_estimate(periodic("01", 2), rat(1, 3), opts(60)).estimate, q(8, 33));
  EXPECT_EQ(dim_point_estimate(periodic("01", 4), rat(1, 3), opts(60)).estimate, q(4, 33));
  EXPECT_EQ(dim_point_estimate(periodic("01", 8), rat(1, 3), opts(60)).estimate, q(2, 33));
}

TEST(PointEstimate, FamilyMonotone) {
  auto pool = gen_pool({12, 8, 3, 2, 3});
  Family f{{"identity", make_identity(2)}};
  DigitStream x = rat(5, 13);
  Rational prev = dim_point_estimate(f, x, opts(16)).estimate;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    f.push_back({"pool" + std::to_string(i), pool[i]});
    Rational cur = dim_point_estimate(f, x, opts(16)).estimate;
    EXPECT_LE(cur, prev);
    prev = cur;
  }
}

TEST(PointEstimate, WiderWindowNeverIncreases) {
  Family f{{"identity", make_identity(2)}, {"p01x2", make_periodic_decoder(bits("01"), 2, 2)}};
  EstimateOptions narrow = opts(40);
  EstimateOptions wide = opts(40);
  wide.window_frac = q(1, 4);
  for (const DigitStream& x : {rat(1, 3), rat(2, 7), rat(5, 24)}) {
    EXPECT_LE(dim_point_estimate(f, x, wide).estimate, dim_point_estimate(f, x, narrow).estimate);
  }
}

TEST(PointEstimate, AllRowsFlagged) {
  Fst ones(2, 1, 0, {{0, {1}}, {0, {1}}});
  try {
    dim_point_estimate({{"ones", ones}}, rat(1, 3), opts(10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllRowsFlagged);
  }
}

TEST(SeqEstimate, IdentityIsOne) {
  Family f{{"identity", make_identity(2)}};
  EXPECT_EQ(dim_seq_estimate(f, DigitStream::champernowne(2), opts(50)).estimate, q(1, 1));
  EXPECT_EQ(dim_seq_estimate(f, rat(1, 3), opts(50)).estimate, q(1, 1));
}

TEST(SeqEstimate, PeriodicHalves) {
  EstimateReport r = dim_seq_estimate(periodic("01", 1), rat(1, 3), opts(40));
  EXPECT_EQ(r.estimate, q(1, 2));
  // odd prefixes are unreachable and flagged
  EXPECT_EQ(r.per_transducer[0].flagged_rows, 10u);
}

TEST(SeqEstimate, HuffmanOnAlternatingSequence) {
  DigitStream s = rat(1, 3);
  Family f{{"huffman_k2", make_block_huffman(s, 256, 2, 2)}};
  EXPECT_EQ(dim_seq_estimate(f, s, opts(40)).estimate, q(1, 2));
}

TEST(SeqEstimate, PointNeverAboveSequenceWithIdentity) {
  // K^T_{b^-n}(x) <= K^T(S up to n+1), so the point proxy is at most (n+1)/n
  // times the sequence one row by row.
  Family f{{"identity", make_identity(2)}};
  for (const DigitStream& x : {rat(1, 3), rat(5, 24), rat(3, 7)}) {
    EstimateReport p = dim_point_estimate(f, x, opts(30));
    EstimateReport s = dim_seq_estimate(f, x, opts(30));
    EXPECT_LE(p.estimate, s.estimate + q(1, 15));
  }
}

TEST(SetEstimate, Singletons) {
  Family f{{"identity", make_identity(2)}, {"p01x4", make_periodic_decoder(bits("01"), 4, 2)}};
  std::vector<DigitStream> one{rat(1, 3)};
  EXPECT_EQ(dim_set_estimate(f, one, opts(30)).estimate,
            dim_point_estimate(f, rat(1, 3), opts(30)).estimate);
  std::vector<DigitStream> zero{rat(0, 1)};
  EXPECT_EQ(dim_set_estimate({{"identity", make_identity(2)}}, zero, opts(20)).estimate, q(0, 1));
}

TEST(SetEstimate, SupPicksHardestPoint) {
  Family f{{"identity", make_identity(2)}};
  std::vector<DigitStream> xs{rat(0, 1), rat(1, 3)};
  EXPECT_EQ(dim_set_estimate(f, xs, opts(20)).estimate, q(9, 10));
}

TEST(SetEstimate, EachDecoderCompressesOnlyItsOwnPeriod) {
  Family f{{"p01x4", make_periodic_decoder(bits("01"), 4, 2)},
           {"p001x4", make_periodic_decoder(bits("001"), 4, 2)}};
  std::vector<DigitStream> xs{rat(1, 3), periodic_stream("001")};
  Rational p1 = dim_point_estimate(f, xs[0], opts(60)).estimate;
  Rational p2 = dim_point_estimate(f, xs[1], opts(60)).estimate;
  EXPECT_EQ(p1, q(4, 33));
  EXPECT_LE(p2, q(1, 12) + q(1, 20));
  try {
    dim_set_estimate(f, xs, opts(60));
    FAIL() << "no single decoder bounds both points";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllRowsFlagged);
  }
  f.push_back({"identity", make_identity(2)});
  EstimateReport r = dim_set_estimate(f, xs, opts(60));
  EXPECT_EQ(r.per_transducer[r.best].id, "identity");
  EXPECT_GE(r.estimate, std::max(p1, p2));
}

TEST(SetEstimate, InfSupDominatesSupInf) {
  auto pool = gen_pool({13, 6, 3, 2, 3});
  Family f{{"identity", make_identity(2)}};
  for (std::size_t i = 0; i < pool.size(); ++i) f.push_back({"p" + std::to_string(i), pool[i]});
  std::vector<DigitStream> xs{rat(1, 3), rat(2, 5), rat(1, 8), DigitStream::champernowne(2)};
  Rational sup_inf = 0;
  for (const auto& x : xs) sup_inf = std::max(sup_inf, dim_point_estimate(f, x, opts(14)).estimate);
  EXPECT_GE(dim_set_estimate(f, xs, opts(14)).estimate, sup_inf);
}

TEST(Normality, DetectPeriod) {
  EXPECT_EQ(to_string(*detect_period(rat(1, 3))), "01");
  EXPECT_EQ(to_string(*detect_period(periodic_stream("0010110"))), "0010110");
  EXPECT_FALSE(detect_period(DigitStream::champernowne(2)));
  EXPECT_FALSE(detect_period(rat(1, 12)));  // preperiodic
  EXPECT_EQ(to_string(*detect_period(rat(0, 1))), "0");
}

TEST(Normality, FamilyComposition) {
  NormalityOptions o;
  o.n_max = 60;
  Family f = normality_family(rat(1, 3), o);
  ASSERT_EQ(f.size(), 1u + 4u + 5u);
  EXPECT_EQ(f[0].id, "identity");
  EXPECT_EQ(f[1].id, "huffman_k1");
  EXPECT_EQ(f.back().id, "periodic_01_x16");
  EXPECT_EQ(normality_family(DigitStream::champernowne(2), o).size(), 5u);
}

TEST(Normality, OneThirdIsCompressible) {
  NormalityOptions o;
  o.n_max = 60;
  EstimateReport r = normality_report(rat(1, 3), o);
  EXPECT_EQ(r.verdict, kVerdictCompressible);
  EXPECT_EQ(r.estimate, q(1, 33));
}

TEST(Normality, DyadicIsCompressible) {
  NormalityOptions o;
  o.n_max = 60;
  EstimateReport r = normality_report(DigitStream::open(DyadicSpec{"101"}, 2), o);
  EXPECT_EQ(r.verdict, kVerdictCompressible);
  EXPECT_LE(r.estimate, q(1, 10));
}

TEST(Normality, ChampernowneSmallScale) {
  NormalityOptions o;
  o.n_max = 200;
  // Early numerals are skewed towards 1s, so a short prefix still compresses a little.
  EstimateReport r = normality_report(DigitStream::champernowne(2), o);
  EXPECT_EQ(r.estimate, q(59, 65));
  EXPECT_EQ(r.per_transducer[r.best].id, "huffman_k4");
}
