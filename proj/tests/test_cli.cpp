#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "freetwist/word.hpp"

using freetwist::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kWorked{"decide", "--rank-domain", "2", "--rank-codomain", "2",
                                       "--phi", "babaa,aaBabbb", "--psi", "BB,a",
                                       "-u", "bab", "-v", "b^4a^2"};

std::vector<std::string> with(std::vector<std::string> args, std::initializer_list<std::string> extra) {
  args.insert(args.end(), extra);
  return args;
}

}  // namespace

TEST(CliDecide, WorkedExampleText) {
  const auto r = invoke(kWorked);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: NotConjugate"), std::string::npos);
  EXPECT_NE(r.out.find("bound: 3"), std::string::npos);
  EXPECT_NE(r.out.find("candidates_checked: 53"), std::string::npos);
}

TEST(CliDecide, WorkedExampleJson) {
  const auto r = invoke(with(kWorked, {"--format", "json"}));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NotConjugate");
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["candidates_checked"], 53);
  EXPECT_EQ(j["min_gap"], 3);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["v"], "bbbbaa");
}

TEST(CliDecide, EqualWordsGiveIdentityWitness) {
  const auto r = invoke({"decide", "--phi", "babaa,aaBabbb", "--psi", "BB,a", "-u", "ab", "-v", "ab",
                         "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Conjugate");
  EXPECT_EQ(j["witness"], "1");
}

TEST(CliDecide, CertificateAndUndecided) {
  const auto cert = invoke({"decide", "--phi", "aab,abb", "--psi", "identity", "-u", "bba", "-v", "baa",
                            "--format", "json"});
  ASSERT_EQ(cert.code, 0);
  EXPECT_EQ(json::parse(cert.out)["verdict"], "Distinct");
  EXPECT_FALSE(json::parse(cert.out)["certificate"].is_null());

  const auto und = invoke({"decide", "--phi", "identity", "--psi", "identity", "--rank-domain", "2",
                           "--rank-codomain", "2", "-u", "a", "-v", "b", "--format", "json"});
  EXPECT_EQ(und.code, 2);
  EXPECT_EQ(json::parse(und.out)["reason"], "NoApplicableMethod");
}

TEST(CliDecide, ValidationErrorsNameTheFlag) {
  auto r = invoke({"decide", "--rank-domain", "2", "--rank-codomain", "2", "--phi", "babaa,aaBabbb", "--psi",
                   "BB,a", "-u", "bab", "-v", "c"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("-v"), std::string::npos);

  r = invoke({"decide", "--phi", "babaa", "--psi", "BB,a", "-u", "bab", "-v", "a"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--psi"), std::string::npos);

  r = invoke({"decide", "--phi", "ab^", "--psi", "BB,a", "-u", "bab", "-v", "a"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--phi"), std::string::npos);

  EXPECT_EQ(invoke({"decide", "--bogus"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
}

TEST(CliRemnant, WorkedExample) {
  const auto r = invoke({"remnant", "--rank", "2", "--phi", "babaa,aaBabbb", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["generators"][0]["remnant_length"], 5);
  EXPECT_EQ(j["generators"][1]["remnant_length"], 7);
  EXPECT_EQ(j["remnant_length"], 5);

  const auto text = invoke({"remnant", "--rank", "2", "--phi", "babaa,aaBabbb"});
  EXPECT_NE(text.out.find("remnant_length: 5"), std::string::npos);
}

TEST(CliMember, WorkedExample) {
  const auto yes = invoke({"member", "--phi", "babaa,aaBabbb", "-w", "babaa", "--format", "json"});
  ASSERT_EQ(yes.code, 0);
  EXPECT_EQ(json::parse(yes.out)["member"], true);
  EXPECT_EQ(json::parse(yes.out)["witness"], "a");

  const auto no = invoke({"member", "--rank", "2", "--phi", "babaa,aaBabbb", "-w", "bab", "--format", "json"});
  ASSERT_EQ(no.code, 0);
  EXPECT_EQ(json::parse(no.out)["member"], false);
  EXPECT_EQ(json::parse(no.out)["bound"], 0);

  EXPECT_EQ(invoke({"member", "--phi", "ab,b", "-w", "ab"}).code, 2);
}

TEST(CliOutput, PrintedWordsReparse) {
  const auto r = invoke({"decide", "--phi", "babaa,aaBabbb", "--psi", "BB,a", "-u", "babaabb", "-v", "1",
                         "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  const freetwist::Rank two(2);
  for (const char* key : {"u", "v", "witness"}) {
    const std::string text = j[key];
    EXPECT_EQ(freetwist::format_word(freetwist::parse_word(text, two)), text) << key;
  }
  EXPECT_EQ(j["witness"], "a");

  const json rem = json::parse(invoke({"remnant", "--phi", "aB^3,b^-2a", "--format", "json"}).out);
  for (const auto& g : rem["generators"]) {
    for (const char* key : {"image", "remnant"}) {
      const std::string text = g[key];
      EXPECT_EQ(freetwist::format_word(freetwist::parse_word(text, two)), text);
    }
  }
}

TEST(CliExperiment, ByteStableAcrossRunsAndThreads) {
  const std::vector<std::string> base{"experiment", "coprime", "--n", "3", "--p", "1000",
                                      "--samples", "20000", "--seed", "9", "--format", "json"};
  const auto a = invoke(base);
  const auto b = invoke(base);
  const auto c = invoke(with(base, {"--threads", "3"}));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_TRUE(json::parse(a.out)["elapsed_ms"].is_null());

  const auto timed = invoke(with(base, {"--timing"}));
  EXPECT_TRUE(json::parse(timed.out)["elapsed_ms"].is_number());
}

TEST(CliExperiment, AllKinds) {
  for (const std::string kind : {"coprime", "gcd-mean", "remnant-density", "rank1-expected"}) {
    const auto r = invoke({"experiment", kind, "--samples", "500", "--p", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0) << kind << r.err;
    EXPECT_EQ(json::parse(r.out)["experiment"], kind);
  }
  const auto img = invoke({"experiment", "image-density", "--phi", "babaa,aaBabbb", "--samples", "500",
                           "--format", "json"});
  ASSERT_EQ(img.code, 0) << img.err;
  EXPECT_DOUBLE_EQ(json::parse(img.out)["reference"].get<double>(), 32.0 / 27.0);

  EXPECT_EQ(invoke({"experiment", "remnant-density", "--m", "1"}).code, 1);
  EXPECT_EQ(invoke({"experiment", "image-density", "--phi", "ab,b"}).code, 1);
  EXPECT_EQ(invoke({"experiment", "nonsense"}).code, 1);
}

TEST(CliHelp, ExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("decide"), std::string::npos);
}
