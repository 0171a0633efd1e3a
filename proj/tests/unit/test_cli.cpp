#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = RESKP_CLI_PATH;
const std::string kData = RESKP_TEST_DATA_DIR;
const std::string kGolden = RESKP_GOLDEN_DIR;
const std::string kScratch = RESKP_SCRATCH_DIR;

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns exit code and stdout.
Result run(const std::string& args) {
  const std::string command = "'" + kCli + "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, Help) {
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, RunExample) {
  const Result r = run("run '" + kData + "/example.txt' --policy threshold-2a --alpha 1/2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ratio 13/10")) << r.out;
  EXPECT_TRUE(contains(r.out, "finalize {3/10, 7/20}")) << r.out;
}

TEST(Cli, DuelExamples) {
  const Result t = run("duel --policy threshold-2a --adversary nonrejecting --alpha 1/5");
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(contains(t.out, "ratio 11/5")) << t.out;

  const Result a = run("duel --policy alg1 --adversary nonrejecting --alpha 1/5");
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "ratio 6000011/4000000")) << a.out;
  EXPECT_TRUE(contains(a.out, "note:")) << a.out;

  const Result c =
      run("duel --policy take-first-fit --adversary chain --alpha 1/10 --delta 1/100");
  EXPECT_TRUE(contains(c.out, "ratio 100/51")) << c.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("duel --policy auto --alpha 1/2").code, 2);             // no adversary
  EXPECT_EQ(run("duel --adversary chain").code, 2);                     // no alpha
  EXPECT_EQ(run("duel --adversary chain --alpha 3/2").code, 2);         // alpha out of range
  EXPECT_EQ(run("duel --adversary chain --alpha one-half").code, 2);    // unparsable
  EXPECT_EQ(run("duel --adversary chain --alpha 1/10 --delta 1/2").code, 2);
  EXPECT_EQ(run("duel --adversary four-item --alpha 1/10").code, 2);    // below 9/40
  EXPECT_EQ(run("duel --policy alg1 --adversary chain --alpha 1/2").code, 2);
  EXPECT_EQ(run("duel --policy greedy --adversary chain --alpha 1/2").code, 2);
  EXPECT_EQ(run("run '" + kData + "/bad_size.txt' --alpha 1/2").code, 2);
  EXPECT_EQ(run("run '" + kData + "/bad_parse.txt' --alpha 1/2").code, 2);
  EXPECT_EQ(run("run '" + kData + "/missing.txt' --alpha 1/2").code, 2);
  EXPECT_EQ(run("sweep --from 0 --to 1/2").code, 2);
  EXPECT_EQ(run("sweep --threads 0").code, 2);
}

TEST(Cli, GenIsDeterministic) {
  const Result a = run("gen --n 7 --seed 9");
  const Result b = run("gen --n 7 --seed 9");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("gen --n 7 --seed 10").out);
  const std::string path = kScratch + "/cli_gen.txt";
  EXPECT_EQ(run("gen --n 7 --seed 9 --out '" + path + "'").code, 0);
  EXPECT_EQ(slurp(path), a.out);
  EXPECT_EQ(run("run '" + path + "' --alpha 1/3").code, 0);
}

TEST(Cli, SweepWritesCsvAndGnuplot) {
  const std::string csv = kScratch + "/cli_sweep.csv";
  const std::string plot = kScratch + "/cli_sweep.gp";
  const Result r = run("sweep --from 1/10 --to 9/10 --step 1/10 --policies auto "
                       "--adversaries four-item,nonrejecting --out '" + csv + "' --gnuplot '" +
                       plot + "'");
  EXPECT_EQ(r.code, 0);
  const std::string content = slurp(csv);
  std::size_t lines = 0;
  for (char ch : content) lines += ch == '\n';
  EXPECT_EQ(lines, 1u + 7u + 9u);
  EXPECT_TRUE(contains(slurp(plot), "'" + csv + "'"));
}

// The committed golden curve regenerates byte for byte.
TEST(Cli, GoldenCurve) {
  const Result r = run("sweep --policies auto --adversaries four-item --epsilon 1/1000000");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(kGolden + "/auto_four_item.csv"));
}

TEST(Cli, Verify) {
  const Result r = run("verify --from 1/10 --to 9/10 --step 1/10 --instances 5 "
                       "--prefix-instances 20");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "lemma-2:")) << r.out;
  EXPECT_TRUE(contains(r.out, "sorted-prefix: 20 checked, 0 failed")) << r.out;
}

}  // namespace
