#include <gtest/gtest.h>

#include <random>

#include "linex/errors.hpp"
#include "linex/linear_code.hpp"
#include "linex/reed_muller.hpp"
#include "linex/weight_distribution.hpp"
#include "oracles/naive.hpp"

namespace linex {
namespace {

using testing::naive_weights;
using testing::random_full_rank;

std::vector<BigCount> as_big(const std::vector<std::uint64_t>& v) {
    return {v.begin(), v.end()};
}

WeightDistribution from_pairs(std::size_t n, std::size_t k, std::initializer_list<std::pair<std::size_t, int>> pairs) {
    std::vector<BigCount> c(n + 1, 0);
    for (const auto& [l, a] : pairs) c[l] = a;
    return WeightDistribution(n, k, c);
}

TEST(WeightDistribution, ValidatesInvariants) {
    EXPECT_NO_THROW(from_pairs(3, 1, {{0, 1}, {3, 1}}));
    EXPECT_THROW(from_pairs(3, 1, {{0, 2}}), ParameterError);            // A_0 != 1
    EXPECT_THROW(from_pairs(3, 1, {{0, 1}, {3, 2}}), ParameterError);    // sum != 2^k
    EXPECT_THROW(from_pairs(3, 1, {{0, 1}, {1, 2}, {2, -1}}), ParameterError);
    EXPECT_THROW(WeightDistribution(3, 1, std::vector<BigCount>(3, 0)), DimensionError);
}

TEST(WeightDistribution, MinDistance) {
    EXPECT_EQ(from_pairs(3, 1, {{0, 1}, {3, 1}}).min_distance(), 3U);
    EXPECT_THROW((void)from_pairs(3, 0, {{0, 1}}).min_distance(), ParameterError);
}

TEST(WeightDistribution, FileFormatRoundTrip) {
    const auto w = enumerate_weights(rm_generator(2, 4));
    const auto text = serialize_weights(w);
    EXPECT_EQ(text, "16 11\n0 1\n4 140\n6 448\n8 870\n10 448\n12 140\n16 1\n");
    EXPECT_EQ(parse_weights(text), w);
    EXPECT_EQ(parse_weights("# comment\n16 11\n\n0 1\n4 140\n6 448\n8 870\n10 448\n12 140\n16 1\n"), w);
}

TEST(WeightDistribution, ParsesCountsBeyond64Bits) {
    // [70, 70] full space: A_l = C(70, l), A_35 > 2^64
    std::string text = "70 70\n";
    BigCount c = 1;
    for (std::size_t l = 0; l <= 70; ++l) {
        text += std::to_string(l) + " " + c.str() + "\n";
        c = c * (70 - l) / (l + 1);
    }
    const auto w = parse_weights(text);
    EXPECT_GT(w[35], BigCount(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_EQ(serialize_weights(w), text);
}

TEST(WeightDistribution, ParseErrorsCarryLineNumbers) {
    try {
        (void)parse_weights("3 1\n0 1\n3 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
    }
    EXPECT_THROW((void)parse_weights(""), ParseError);
    EXPECT_THROW((void)parse_weights("3 1\n0 1\n5 1\n"), ParseError);
    EXPECT_THROW((void)parse_weights("3 1\n3 1\n0 1\n"), ParseError);
    EXPECT_THROW((void)parse_weights("3 1\n0 1\n3 2\n"), ParseError);
}

TEST(ReedMuller, Parameters) {
    const auto rm16 = rm_generator(2, 4);
    EXPECT_EQ(rm16.length(), 16U);
    EXPECT_EQ(rm16.dimension(), 11U);
    const auto rm256 = rm_generator(4, 8);
    EXPECT_EQ(rm256.length(), 256U);
    EXPECT_EQ(rm256.dimension(), 163U);
}

TEST(ReedMuller, OrderZeroIsRepetition) {
    const auto rep = rm_generator(0, 3);
    EXPECT_EQ(rep.generator(), BitMatrix::from_rows({"11111111"}));
}

TEST(ReedMuller, RowOrderingIsFixed) {
    // 1, x0, x1, x2 evaluated at points 0..7 (x_i = bit i of the point)
    const auto rm13 = rm_generator(1, 3);
    EXPECT_EQ(rm13.generator(), BitMatrix::from_rows({"11111111", "01010101", "00110011", "00001111"}));
    // degree-2 rows follow in lexicographic subset order: x0x1, x0x2, x1x2
    const auto rm23 = rm_generator(2, 3);
    EXPECT_EQ(rm23.generator().row_vector(4).to_string(), "00010001");
    EXPECT_EQ(rm23.generator().row_vector(5).to_string(), "00000101");
    EXPECT_EQ(rm23.generator().row_vector(6).to_string(), "00000011");
}

TEST(ReedMuller, RejectsBadParameters) {
    EXPECT_THROW((void)rm_generator(4, 3), ParameterError);
    EXPECT_THROW((void)rm_generator(0, 0), ParameterError);
    EXPECT_THROW((void)rm_generator(1, kMaxReedMullerLog + 1), ParameterError);
}

TEST(Enumerate, RepetitionCode) {
    const LinearCode rep(BitMatrix::from_rows({"111"}));
    EXPECT_EQ(enumerate_weights(rep), from_pairs(3, 1, {{0, 1}, {3, 1}}));
}

TEST(Enumerate, ReedMuller13) {
    // frozen from brute force over the 16 codewords
    EXPECT_EQ(enumerate_weights(rm_generator(1, 3)), from_pairs(8, 4, {{0, 1}, {4, 14}, {8, 1}}));
}

TEST(Enumerate, ReedMuller24) {
    // frozen from an independent brute force over 2^11 codewords
    const auto w = enumerate_weights(rm_generator(2, 4));
    EXPECT_EQ(w, from_pairs(16, 11, {{0, 1}, {4, 140}, {6, 448}, {8, 870}, {10, 448}, {12, 140}, {16, 1}}));
    EXPECT_EQ(w.min_distance(), 4U);
}

TEST(Enumerate, MinDistanceRM15) {
    EXPECT_EQ(enumerate_weights(rm_generator(1, 5)).min_distance(), 16U);
}

TEST(Enumerate, CapIsEnforced) {
    try {
        (void)enumerate_weights(rm_generator(2, 4), 10);
        FAIL();
    } catch (const InfeasibleError& e) {
        EXPECT_NE(std::string(e.what()).find("dimension too large"), std::string::npos);
    }
}

TEST(Enumerate, GrayCodeMatchesNaiveEnumeration) {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = 1 + rng() % 12;
        const auto n = k + rng() % 120;
        const LinearCode code(random_full_rank(rng, k, n));
        const auto w = enumerate_weights(code);
        EXPECT_EQ(w.counts(), as_big(naive_weights(code.generator()))) << "n=" << n << " k=" << k;
    }
}

TEST(Enumerate, ThreadedResultIsIdentical) {
    const auto code = rm_generator(2, 5);
    const auto serial = enumerate_weights(code, 28, 1);
    for (unsigned t : {2U, 3U, 7U}) EXPECT_EQ(enumerate_weights(code, 28, t), serial);
}

TEST(Dual, RepetitionTwoIsSelfDual) {
    const LinearCode c(BitMatrix::from_rows({"11"}));
    EXPECT_EQ(dual_generator(c).generator(), BitMatrix::from_rows({"11"}));
}

TEST(Dual, FullSpaceHasEmptyDual) {
    const LinearCode c(BitMatrix::identity(5));
    const auto d = dual_generator(c);
    EXPECT_EQ(d.dimension(), 0U);
    EXPECT_EQ(d.length(), 5U);
    EXPECT_EQ(enumerate_weights(d), from_pairs(5, 0, {{0, 1}}));
}

TEST(Dual, OrthogonalAndFullRank) {
    auto check = [](const LinearCode& c) {
        const auto h = dual_generator(c);
        ASSERT_EQ(h.dimension(), c.length() - c.dimension());
        for (std::size_t i = 0; i < c.dimension(); ++i) {
            for (std::size_t t = 0; t < h.dimension(); ++t) {
                int dot = 0;
                for (std::size_t j = 0; j < c.length(); ++j) dot ^= c.generator().get(i, j) & h.generator().get(t, j);
                ASSERT_EQ(dot, 0);
            }
        }
    };
    check(rm_generator(1, 3));
    EXPECT_EQ(dual_generator(rm_generator(1, 3)).dimension(), 4U);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = 2 + rng() % 40;
        const auto k = 1 + rng() % (n - 1);
        check(LinearCode(random_full_rank(rng, k, n)));
    }
}

TEST(MacWilliams, SelfDualTwo) {
    const auto w = from_pairs(2, 1, {{0, 1}, {2, 1}});
    EXPECT_EQ(macwilliams_transform(w), w);
}

TEST(MacWilliams, RecoversRM13FromDual) {
    const auto c = rm_generator(1, 3);
    EXPECT_EQ(macwilliams_transform(enumerate_weights(dual_generator(c))), enumerate_weights(c));
}

TEST(MacWilliams, IsAnInvolutionOnRandomCodes) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = 2 + rng() % 15;
        const auto k = 1 + rng() % std::min<std::size_t>(8, n - 1);
        const LinearCode c(random_full_rank(rng, k, n));
        const auto w = enumerate_weights(c);
        EXPECT_EQ(macwilliams_transform(macwilliams_transform(w)), w);
    }
}

TEST(MacWilliams, RejectsNonDualInput) {
    // three weight-1 words cannot form a 2-dimensional code (their sums have weight 2)
    EXPECT_THROW((void)macwilliams_transform(from_pairs(4, 2, {{0, 1}, {1, 3}})), ConsistencyError);
}

TEST(Resolve, PicksCheapestPath) {
    EXPECT_EQ(resolve_weights(rm_generator(2, 4)).source, WeightSource::enumerate);

    // RM(4,6) is [64, 57]; k above the cap, dual [64, 7] enumerable
    const auto big = rm_generator(4, 6);
    const auto via_dual = resolve_weights(big);
    EXPECT_EQ(via_dual.source, WeightSource::macwilliams);
    EXPECT_EQ(via_dual.weights.min_distance(), 4U);
    EXPECT_EQ(via_dual.weights.dimension(), 57U);

    EXPECT_THROW((void)resolve_weights(rm_generator(4, 8)), InfeasibleError);

    auto external = rm_generator(4, 8);
    std::vector<BigCount> fake(257, 0);
    fake[0] = 1;
    fake[16] = (BigCount{1} << 163) - 1;  // passes the count invariants; only used to test plumbing
    external.set_weights(WeightDistribution(256, 163, fake));
    EXPECT_EQ(resolve_weights(external).source, WeightSource::external);
}

TEST(LinearCode, RejectsRankDeficientGenerator) {
    EXPECT_THROW(LinearCode(BitMatrix::from_rows({"110", "110"})), RankError);
    auto c = rm_generator(1, 3);
    EXPECT_THROW(c.set_weights(from_pairs(3, 1, {{0, 1}, {3, 1}})), DimensionError);
}

}  // namespace
}  // namespace linex
