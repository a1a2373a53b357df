#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "linex/bitstream.hpp"
#include "linex/extractor.hpp"
#include "linex/matrix_io.hpp"
#include "linex/reed_muller.hpp"
#include "linex/source.hpp"
#include "linex/weight_distribution.hpp"

namespace linex {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "linex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("linex_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name, std::ios::binary) << text;
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, CodeInfoReedMuller) {
    const auto r = run_cli({"code-info", "--code", "rm:2,4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "code: RM(2,4)\n"
              "n=16 k=11 d=4\n"
              "weights: enumerate\n"
              "A_0 = 1\nA_4 = 140\nA_6 = 448\nA_8 = 870\nA_10 = 448\nA_12 = 140\nA_16 = 1\n");
}

TEST_F(CliTest, CodeInfoUsesMacWilliamsForHighRate) {
    const auto r = run_cli({"code-info", "--code", "rm:4,6", "--cap", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n=64 k=57 d=4"), std::string::npos);
    EXPECT_NE(r.out.find("weights: macwilliams"), std::string::npos);
}

TEST_F(CliTest, CodeInfoInfeasibleWithoutExternalWeights) {
    const auto r = run_cli({"code-info", "--code", "rm:4,8"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("n=256 k=163"), std::string::npos);
    EXPECT_NE(r.out.find("requires external distribution"), std::string::npos);
}

TEST_F(CliTest, CodeInfoExportsAndReloads) {
    ASSERT_EQ(run_cli({"code-info", "--code", "rm:1,3", "--export-matrix", path("g.txt"), "--export-weights",
                       path("w.txt")})
                  .code,
              0);
    EXPECT_EQ(read_matrix_file(path("g.txt")), rm_generator(1, 3).generator());
    EXPECT_EQ(read_weights_file(path("w.txt"))[4], 14);

    const auto from_matrix = run_cli({"code-info", "--matrix", path("g.txt")});
    ASSERT_EQ(from_matrix.code, 0);
    EXPECT_NE(from_matrix.out.find("n=8 k=4 d=4"), std::string::npos);

    const auto from_weights = run_cli({"code-info", "--weights", path("w.txt")});
    ASSERT_EQ(from_weights.code, 0);
    EXPECT_NE(from_weights.out.find("weights: external"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
    EXPECT_EQ(run_cli({"code-info"}).code, 2);
    EXPECT_EQ(run_cli({"code-info", "--code", "hamming:3"}).code, 2);
    EXPECT_EQ(run_cli({"code-info", "--code", "rm:5,4"}).code, 2);
    EXPECT_EQ(run_cli({"code-info", "--code", "rm:1,3", "--matrix", path("g.txt")}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--code", "rm:1,3", "--eps", "1.5"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--code", "rm:1,3", "--eps", "0.3", "0.2"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--code", "rm:1,3", "--h-variant", "other"}).code, 2);
    EXPECT_EQ(run_cli({"code-info", "--matrix", path("missing.txt")}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, MalformedMatrixReportsLine) {
    write("bad.txt", "2 3\n101\n11\n");
    const auto r = run_cli({"code-info", "--matrix", path("bad.txt")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    write("rank.txt", "2 3\n101\n101\n");
    EXPECT_EQ(run_cli({"code-info", "--matrix", path("rank.txt")}).code, 2);
}

TEST_F(CliTest, SweepCsvIsByteStable) {
    const auto a = run_cli({"sweep", "--code", "rm:2,4", "--steps", "5"});
    const auto b = run_cli({"sweep", "--code", "rm:2,4", "--steps", "5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::istringstream lines(a.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "eps,bias_bound,pointwise_bound,tvd_weight,tvd_worst,hmin_bound,entropy_weight_raw,entropy_weight,"
                    "entropy_worst_raw,entropy_worst,h_variant")
        << "header changed";
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    EXPECT_EQ(rows, 5);
}

TEST_F(CliTest, SweepExplicitEpsRow) {
    const auto r = run_cli({"sweep", "--code", "rm:2,4", "--eps", "0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n0.1,0.0001,0.00058828125,"), std::string::npos) << r.out;
}

TEST_F(CliTest, SweepBothVariantsAndFiles) {
    const auto r = run_cli({"sweep", "--code", "rm:2,4", "--steps", "4", "--h-variant", "both", "--out",
                            path("s.csv"), "--svg", path("s.svg")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "wrote 8 rows to " + path("s.csv") + "\n");
    const auto csv = slurp(path("s.csv"));
    EXPECT_NE(csv.find(",standard\n"), std::string::npos);
    EXPECT_NE(csv.find(",as-printed\n"), std::string::npos);
    const auto svg = slurp(path("s.svg"));
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("h standard"), std::string::npos);
}

TEST_F(CliTest, SweepExternalWeightsForLargeCode) {
    ASSERT_EQ(run_cli({"code-info", "--code", "rm:2,4", "--export-weights", path("w.txt")}).code, 0);
    const auto ext = run_cli({"sweep", "--weights", path("w.txt"), "--steps", "3"});
    const auto enumerated = run_cli({"sweep", "--code", "rm:2,4", "--steps", "3"});
    ASSERT_EQ(ext.code, 0) << ext.err;
    EXPECT_EQ(ext.out.rfind("# weights: ", 0), 0U);
    EXPECT_EQ(ext.out.substr(ext.out.find('\n') + 1), enumerated.out);
}

TEST_F(CliTest, GenerateExtractRoundTrip) {
    auto r = run_cli({"generate", "--eps", "0.2", "--seed", "7", "--bits", "16005", "--out", path("x.bin")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto input = read_bitstream(path("x.bin"));
    EXPECT_EQ(input, generate({Bias(0.2), 7}, 16005));

    r = run_cli({"extract", "--code", "rm:2,4", "--in", path("x.bin"), "--out", path("y.bin")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("blocks=1000 input_bits=16005 output_bits=11000 discarded_bits=5"), std::string::npos)
        << r.out;
    EXPECT_NE(r.err.find("throughput:"), std::string::npos);
    EXPECT_EQ(read_bitstream(path("y.bin")), linear_extract(rm_generator(2, 4).generator(), input));
}

TEST_F(CliTest, VonNeumannBaselineRate) {
    const std::size_t bits = 200'000;
    const double eps = 0.4;
    ASSERT_EQ(run_cli({"generate", "--eps", "0.4", "--bits", std::to_string(bits), "--out", path("x.bin")}).code, 0);
    const auto r = run_cli({"extract", "--baseline", "von-neumann", "--in", path("x.bin"), "--out", path("v.bin")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = read_bitstream(path("v.bin"));
    const double rate = static_cast<double>(out.size()) / bits;
    const double expected = (1 - eps * eps) / 4;
    const double sigma = std::sqrt(expected * (1 - 2 * expected) / (bits / 2.0)) * 2;  // per input bit
    EXPECT_NEAR(rate, expected, 5 * sigma);
    EXPECT_NEAR(static_cast<double>(out.count_ones()) / out.size(), 0.5, 5 * 0.5 / std::sqrt(out.size()));
}

TEST_F(CliTest, VerifySmallCodesPass) {
    const auto r = run_cli({"verify", "--code", "rm:1,3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    write("g.txt", "2 5\n11100\n00111\n");
    const auto m = run_cli({"verify", "--matrix", path("g.txt"), "--eps", "0.1", "0.3", "0.5", "0.9"});
    EXPECT_EQ(m.code, 0) << m.out;
}

TEST_F(CliTest, VerifyFailsOnWrongExternalWeights) {
    // Claims every nonzero codeword of RM(1,3) has weight 8; the real minimum distance is 4.
    write("fake.txt", "8 4\n0 1\n8 15\n");
    const auto r = run_cli({"verify", "--code", "rm:1,3", "--weights", path("fake.txt"), "--eps", "0.3"});
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyRefusesLargeN) {
    const auto r = run_cli({"verify", "--code", "rm:2,5"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("simulate"), std::string::npos);
}

TEST_F(CliTest, SimulatePasses) {
    const auto r = run_cli({"simulate", "--code", "rm:2,4", "--eps", "0.3", "--blocks", "200000", "--seed", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("|tvd - exact tvd|"), std::string::npos);
}

TEST_F(CliTest, SimulateWideOutputNeedsMarginal) {
    EXPECT_EQ(run_cli({"simulate", "--code", "rm:3,5", "--eps", "0.3", "--blocks", "1000"}).code, 3);
    const auto r = run_cli({"simulate", "--code", "rm:3,5", "--eps", "0.3", "--blocks", "20000", "--marginal"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("mode=marginal"), std::string::npos);
}

}  // namespace
}  // namespace linex
