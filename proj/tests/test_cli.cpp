// End-to-end checks that run the built binofib executable.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(BINOFIB_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (const char c : s) {
    n += c == '\n' ? 1 : 0;
  }
  return n;
}

}  // namespace

TEST(Cli, SequenceValues) {
  EXPECT_EQ(run("fib 10").out, "55\n");
  EXPECT_EQ(run("fib -8").out, "-21\n");
  EXPECT_EQ(run("lucas -3").out, "-4\n");
  EXPECT_EQ(run("fib 100").out, "354224848179261915075\n");
  const CliRun j = run("lucas 6 --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(j.out, "{\"seq\":\"L\",\"n\":6,\"value\":\"18\"}\n");
}

TEST(Cli, DirectSum) {
  EXPECT_EQ(run("sum --seq L --n 3").out, "18\n");
  EXPECT_EQ(run("sum --n 2 --s 1 --m 3").out, "11\n");
  EXPECT_EQ(run("sum --n 2 --z -1 --r 2 --m 2").out, "7\n");
  EXPECT_EQ(run("sum --n 2 --x 1/2 --z 1/3 --m 0").out, "25/36\n");
}

TEST(Cli, ClosedForm) {
  const CliRun r = run("closed --id C18 --n 2 --s 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "lhs=11 rhs=11 MATCH\n");
  EXPECT_EQ(run("closed --id C18 --n 2 --s 1 --format json").out,
            "{\"id\":\"C18\",\"params\":{\"n\":2,\"s\":1},\"lhs\":\"11\",\"rhs\":\"11\",\"match\":true}\n");
  const CliRun e9 = run("closed --id E9 --n 2 --p 2");
  EXPECT_EQ(e9.status, 0);
  EXPECT_NE(e9.out.find("lhs=-3 rhs=-3"), std::string::npos) << e9.out;
}

TEST(Cli, ClosedFormOutsideDomainIsUsageError) {
  const CliRun r = run("closed --id Q13 --p 0");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("p must be nonzero"), std::string::npos) << r.out;
}

TEST(Cli, Verify) {
  const CliRun text = run("verify --ids C18,C19 --n 0..4 --s -1..1");
  EXPECT_EQ(text.status, 0) << text.out;
  EXPECT_NE(text.out.find("PASS (30 checks)"), std::string::npos) << text.out;

  const CliRun json = run("verify --ids C18 --n 0..5 --s 1 --format json --jobs 2");
  EXPECT_EQ(json.status, 0);
  EXPECT_EQ(count_lines(json.out), 7U);
  EXPECT_NE(json.out.find("\"verdict\":\"PASS\""), std::string::npos);

  const CliRun skipped = run("verify --ids Q13 --n 0..2 --j 1 --r 1 --s 0 --p 0");
  EXPECT_EQ(skipped.status, 0);
  EXPECT_NE(skipped.out.find("skipped=3"), std::string::npos) << skipped.out;

  const CliRun ooc = run("verify --ids Q13 --n 0..2 --j 1 --r 1 --s 0 --p 0 --include-out-of-contract");
  EXPECT_EQ(ooc.status, 0);
  EXPECT_NE(ooc.out.find("out_of_contract=3"), std::string::npos) << ooc.out;

  const CliRun neg = run("verify --ids F1 --n 0..1 --j -4..-3 --r 1 --s 0 --x 1 --z 1");
  EXPECT_EQ(neg.status, 0) << neg.out;
  EXPECT_NE(neg.out.find("PASS (4 checks)"), std::string::npos) << neg.out;
}

TEST(Cli, VerifyJobsDoNotChangeOutput) {
  const std::string args = "verify --ids E5,Q14,EVEN_L --n 0..3 --j -2..2 --r -1..1 --s 0..1 --p -1..1 --format json";
  EXPECT_EQ(run(args + " --jobs 1").out, run(args + " --jobs 3").out);
}

TEST(Cli, Bench) {
  const CliRun r = run("bench --id C18 --n 40 --s 1 --reps 2");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("equality   verified"), std::string::npos) << r.out;
  const CliRun j = run("bench --id EVEN_F --n 20 --j 3 --r 3 --s 1 --m 2 --reps 1 --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_NE(j.out.find("\"equal\":true"), std::string::npos) << j.out;
  EXPECT_EQ(run("bench --id C18 --reps 0").status, 2);
}

TEST(Cli, List) {
  const CliRun text = run("list");
  EXPECT_EQ(text.status, 0);
  EXPECT_EQ(count_lines(text.out), 30U);
  EXPECT_EQ(text.out.rfind("F1 ", 0), 0U);
  const CliRun json = run("list --format json");
  EXPECT_EQ(count_lines(json.out), 30U);
  EXPECT_NE(json.out.find("{\"id\":\"ALT_ODD_L\""), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("fib abc").status, 2);
  EXPECT_EQ(run("sum --n -1").status, 2);
  EXPECT_EQ(run("sum --m -1").status, 2);
  EXPECT_EQ(run("sum --x 1/0").status, 2);
  EXPECT_EQ(run("verify --ids NOPE").status, 2);
  EXPECT_EQ(run("verify --n 3..1").status, 2);
  EXPECT_EQ(run("closed --id C18 --format xml").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}
